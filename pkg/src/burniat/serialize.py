"""JSON encoding of exact rationals as ``{"n": "<int>", "d": "<int>"}``."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import InputError


def frac_to_json(x: Fraction | int) -> dict[str, str]:
    x = Fraction(x)
    return {"n": str(x.numerator), "d": str(x.denominator)}


def frac_from_json(obj: Any) -> Fraction:
    """Accepts the ``{"n", "d"}`` form, a ``[n, d]`` pair, an int or a ``"p/q"`` string."""
    try:
        if isinstance(obj, dict):
            return Fraction(int(obj["n"]), int(obj["d"]))
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return Fraction(int(obj[0]), int(obj[1]))
        if isinstance(obj, bool) or isinstance(obj, float):
            raise TypeError("floats and booleans are not exact rationals")
        return Fraction(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read rational from {obj!r}: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
