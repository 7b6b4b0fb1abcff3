"""JSON instance and solution files.  Every number is an exact string
("3", "-1.25" or "7/3")."""
from __future__ import annotations

import json
from fractions import Fraction

from .core import (BarrierError, CycleInstance, LineInstance, Movement,
                   as_rational, format_rational)

__all__ = ["instance_from_dict", "instance_to_dict", "load_instance",
           "dump_instance", "solution_to_dict", "load_solution", "dump_solution"]


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise BarrierError(f"{where}: expected a number string, got {value!r}")
    return as_rational(str(value))


def instance_from_dict(data: dict):
    if not isinstance(data, dict):
        raise BarrierError("instance must be a JSON object")
    kind = data.get("kind", "line")
    if kind not in ("line", "cycle"):
        raise BarrierError(f"unknown kind {kind!r}")
    if "L" not in data or "sensors" not in data:
        raise BarrierError("instance needs 'L' and 'sensors'")
    L = _number(data["L"], "L")
    sensors = data["sensors"]
    if not isinstance(sensors, list):
        raise BarrierError("'sensors' must be a list")
    xs, rs = [], []
    for k, s in enumerate(sensors):
        if not isinstance(s, dict) or "x" not in s or "r" not in s:
            raise BarrierError(f"sensor {k}: needs 'x' and 'r'")
        xs.append(_number(s["x"], f"sensor {k} x"))
        rs.append(_number(s["r"], f"sensor {k} r"))
    if kind == "cycle":
        if len(set(rs)) > 1:
            raise BarrierError("cycle sensors must share one range")
        if not rs:
            raise BarrierError("at least one sensor is required")
        return CycleInstance(xs, rs[0], L)
    return LineInstance(xs, rs, L)


def instance_to_dict(instance) -> dict:
    if isinstance(instance, CycleInstance):
        r = format_rational(instance.sensor_range)
        return {"kind": "cycle", "L": format_rational(instance.length),
                "sensors": [{"x": format_rational(x), "r": r}
                            for x in instance.positions]}
    return {"kind": "line", "L": format_rational(instance.length),
            "sensors": [{"x": format_rational(x), "r": format_rational(r)}
                        for x, r in zip(instance.positions, instance.ranges)]}


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BarrierError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def load_instance(path):
    data = _read_json(path)
    try:
        return instance_from_dict(data)
    except BarrierError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def dump_instance(instance, path=None) -> str:
    text = json.dumps(instance_to_dict(instance), indent=1) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def solution_to_dict(lam, movement: Movement) -> dict:
    return {"lambda": format_rational(lam),
            "destinations": [format_rational(y) for y in movement.destinations]}


def load_solution(path):
    """Returns ``(lam, Movement)``."""
    data = _read_json(path)
    if not isinstance(data, dict) or "lambda" not in data or "destinations" not in data:
        raise BarrierError(f"{path}: solution needs 'lambda' and 'destinations'")
    lam = _number(data["lambda"], "lambda")
    ys = [_number(v, f"destination {k}") for k, v in enumerate(data["destinations"])]
    return lam, Movement(ys, lam)


def dump_solution(lam, movement: Movement, path=None) -> str:
    text = json.dumps(solution_to_dict(Fraction(lam), movement)) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
