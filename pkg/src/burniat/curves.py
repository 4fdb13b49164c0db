"""(-1)- and (-2)-classes on blow-ups of the plane and line counts on weak Del Pezzo surfaces."""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import comb, isqrt
from typing import Literal

from .errors import InputError
from .lattice import MAX_POINTS, DivisorClass, SurfaceLattice, canonical_class

Kind = Literal["minus1", "minus2"]

# surfaces of Picard rank two or less that are not blow-ups of the plane in r >= 1 points
SPECIAL_SURFACE_LINES = {"P2": 0, "F0": 0, "F1": 1, "F2": 0}


@dataclass(frozen=True)
class CurveClassList:
    r: int
    classes: tuple[DivisorClass, ...]
    kind: Kind

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[DivisorClass]:
        return iter(self.classes)

    def __contains__(self, c: object) -> bool:
        return c in self.classes


def _check_r(r: int) -> None:
    if not isinstance(r, int) or not 0 <= r <= MAX_POINTS:
        raise InputError(f"r must be an integer in 0..{MAX_POINTS}, got {r!r}")


def _vectors(length: int, total: int, squares: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors with the given coordinate sum and sum of squares."""
    if length == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    # Cauchy-Schwarz and b^2 = b (mod 2)
    if total * total > length * squares or (total - squares) % 2:
        return
    bound = isqrt(squares)
    for head in range(-bound, bound + 1):
        for tail in _vectors(length - 1, total - head, squares - head * head):
            yield (head,) + tail


def _enumerate(r: int, self_int: int, k_degree: int) -> tuple[DivisorClass, ...]:
    # C^2 = a^2 - sum b^2 and C.K = -3a + sum b; 0 <= a <= 3 from L.C >= 0 and L.(-K - C) >= 0
    found = []
    for a in range(0, 4):
        for b in _vectors(r, k_degree + 3 * a, a * a - self_int):
            found.append(DivisorClass(a, b))
    return tuple(sorted(found))


def enumerate_minus1_classes(r: int) -> CurveClassList:
    """All classes with ``C^2 = C.K = -1`` and ``0 <= a <= 3``."""
    _check_r(r)
    return CurveClassList(r, _enumerate(r, -1, -1), "minus1")


def enumerate_minus2_classes(r: int) -> CurveClassList:
    """All classes with ``C^2 = -2``, ``C.K = 0`` and ``0 <= a <= 3``."""
    _check_r(r)
    return CurveClassList(r, _enumerate(r, -2, 0), "minus2")


def max_line_count(r: int) -> int:
    """A priori bound ``r + C(r,2) + C(r,5)``; exact for r <= 6."""
    _check_r(r)
    return r + comb(r, 2) + comb(r, 5)


def _validate_minus2(r: int, classes: Iterable[DivisorClass]) -> list[DivisorClass]:
    K = canonical_class(SurfaceLattice(r))
    out = []
    for d in classes:
        if not isinstance(d, DivisorClass) or d.r != r:
            raise InputError(f"{d!r} is not a class on the blow-up in {r} points")
        if d.self_intersection() != -2 or d.dot(K) != 0 or not 0 <= d.a <= 3:
            raise InputError(f"{d} is not a (-2)-class")
        out.append(d)
    uniq = sorted(set(out))
    for i, d in enumerate(uniq):
        for e in uniq[i + 1 :]:
            if d.dot(e) < -2:
                raise InputError(f"{d} and {e} cannot both be irreducible (-2)-curves")
    return uniq


def lines_on_weak_dp(r: int, effective_minus2: Iterable[DivisorClass] = ()) -> CurveClassList:
    """Lines of the anticanonical model once the given (-2)-curves are present.

    A (-1)-class is irreducible exactly when it meets every effective
    (-2)-curve nonnegatively; otherwise it contains that curve as a component.
    """
    _check_r(r)
    minus2 = _validate_minus2(r, effective_minus2)
    lines = tuple(c for c in enumerate_minus1_classes(r) if all(c.dot(d) >= 0 for d in minus2))
    return CurveClassList(r, lines, "minus1")


def lost_lines(r: int, effective_minus2: Iterable[DivisorClass]) -> tuple[DivisorClass, ...]:
    """(-1)-classes that stop being irreducible."""
    kept = set(lines_on_weak_dp(r, effective_minus2))
    return tuple(c for c in enumerate_minus1_classes(r) if c not in kept)


def predicted_loss_one_line_minus2(r: int) -> int:
    """Loss caused by a single ``L - E_i - E_j - E_k``: three lines plus ``C(r-3, 2)``."""
    _check_r(r)
    return 3 + (comb(r - 3, 2) if r >= 5 else 0)


def predicted_loss_infinitely_near(r: int, k: int) -> int:
    """Lower bound on lost lines for a string of ``k`` infinitely near points."""
    return (k - 1) * (r - (k - 1)) + (k + 1) * (k - 2) // 2


def special_surface_lines(name: str) -> int:
    try:
        return SPECIAL_SURFACE_LINES[name]
    except KeyError:
        raise InputError(f"unknown surface {name!r}; expected one of {sorted(SPECIAL_SURFACE_LINES)}") from None
