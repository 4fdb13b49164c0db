"""Picard lattice of the projective plane blown up in r points.

A class is stored as ``(a; b_1, ..., b_r)`` and stands for ``a L - sum b_j E_j``.
With this convention the canonical class is ``(-3; -1, ..., -1)``.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import DimensionMismatchError, InputError, InternalConsistencyError

MAX_POINTS = 8


@dataclass(frozen=True, order=True)
class DivisorClass:
    a: int
    b: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def r(self) -> int:
        return len(self.b)

    def _check(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.r != self.r:
            raise DimensionMismatchError(
                f"classes live on lattices of rank {self.r + 1} and {other.r + 1}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.a - other.a, tuple(x - y for x, y in zip(self.b, other.b)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.a, tuple(-x for x in self.b))

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.a, tuple(k * x for x in self.b))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        self._check(other)
        return self.a * other.a - sum(x * y for x, y in zip(self.b, other.b))

    def self_intersection(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.a == 0 and not any(self.b)

    def norm1(self) -> int:
        return abs(self.a) + sum(abs(x) for x in self.b)

    def __str__(self) -> str:
        terms: list[str] = []
        if self.a:
            terms.append("L" if self.a == 1 else "-L" if self.a == -1 else f"{self.a}L")
        for j, bj in enumerate(self.b, start=1):
            if not bj:
                continue
            coeff = -bj
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            sign = "-" if coeff < 0 else "+"
            if not terms and sign == "+":
                terms.append(f"{mag}E{j}")
            else:
                terms.append(f"{sign}{mag}E{j}")
        return "".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"a": self.a, "b": list(self.b), "str": str(self)}

    @classmethod
    def from_json(cls, obj: dict) -> DivisorClass:
        return cls(obj["a"], tuple(obj["b"]))


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    """Intersection number ``a a' - sum b_j b'_j``."""
    return c1.dot(c2)


@dataclass(frozen=True)
class SurfaceLattice:
    """Lattice ``Z L + Z E_1 + ... + Z E_r`` of the plane blown up in ``r`` points."""

    r: int

    def __post_init__(self) -> None:
        if not 0 <= self.r <= MAX_POINTS:
            raise InputError(f"number of blown-up points must lie in 0..{MAX_POINTS}, got {self.r}")

    @property
    def rank(self) -> int:
        return self.r + 1

    @property
    def zero(self) -> DivisorClass:
        return DivisorClass(0, (0,) * self.r)

    @property
    def L(self) -> DivisorClass:
        return DivisorClass(1, (0,) * self.r)

    def E(self, j: int) -> DivisorClass:
        """Exceptional class over the ``j``-th point, 1-indexed."""
        if not 1 <= j <= self.r:
            raise InputError(f"E_{j} does not exist for r={self.r}")
        b = [0] * self.r
        b[j - 1] = -1
        return DivisorClass(0, tuple(b))

    @property
    def exceptional(self) -> list[DivisorClass]:
        return [self.E(j) for j in range(1, self.r + 1)]

    @property
    def K(self) -> DivisorClass:
        return canonical_class(self)

    def cls(self, a: int, *b: int) -> DivisorClass:
        """Build ``a L - sum b_j E_j``, padding missing trailing ``b_j`` with zeros."""
        if len(b) > self.r:
            raise DimensionMismatchError(f"{len(b)} coefficients given for r={self.r}")
        return DivisorClass(a, tuple(b) + (0,) * (self.r - len(b)))

    def euler_number(self) -> int:
        return 3 + self.r

    def degree(self) -> int:
        return 9 - self.r


def canonical_class(lat: SurfaceLattice) -> DivisorClass:
    return DivisorClass(-3, (-1,) * lat.r)


def euler_characteristic(c: DivisorClass) -> int:
    """Riemann-Roch ``chi(O(c)) = 1 + c.(c - K)/2`` on a rational surface."""
    twice = c.dot(c - canonical_class(SurfaceLattice(c.r)))
    if twice % 2:
        raise InternalConsistencyError(f"c.(c-K) is odd for {c}")
    return 1 + twice // 2


class Effectivity(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class EffectivityResult:
    answer: Effectivity
    peeled: tuple[DivisorClass, ...]
    residual: DivisorClass
    reason: str = field(default="", compare=False)

    def decomposition(self) -> list[DivisorClass]:
        """Fixed components followed by the residual (omitted when zero)."""
        parts = list(self.peeled)
        if not self.residual.is_zero():
            parts.append(self.residual)
        return parts

    def __bool__(self) -> bool:
        raise TypeError("EffectivityResult is tri-state; compare .answer instead")


def is_effective(
    c: DivisorClass, irreducible_negatives: Iterable[DivisorClass]
) -> EffectivityResult:
    """Semi-decide whether ``c`` is linearly equivalent to an effective divisor.

    ``irreducible_negatives`` must hold irreducible curve classes of negative
    self-intersection on the surface, including every irreducible component of
    the exceptional locus (the ``E_j`` when the points are distinct).

    Whenever ``c.N < 0`` for such an ``N``, ``N`` is a fixed component of every
    member of ``|c|``, so ``c`` is replaced by ``c - N``; this preserves
    effectivity in both directions. The residual is then judged:

    * zero: effective;
    * ``a < 0``: not effective, since ``L`` is nef;
    * ``a = 0`` and nonzero: not effective; such a divisor would be supported
      on the exceptional locus, where the form is negative definite and the
      residual already meets every component nonnegatively;
    * ``a >= 0`` with ``chi >= 1``: effective, because ``h^2(c) = h^0(K - c) = 0``
      as ``L.(K - c) < 0``.

    Anything else, or exceeding ``|a| + sum |b_j|`` peeling steps, is undecided.
    """
    negatives = sorted(set(irreducible_negatives))
    for n in negatives:
        c._check(n)
        if n.self_intersection() >= 0:
            raise InputError(f"{n} has nonnegative self-intersection")

    budget = max(c.norm1(), 1)
    peeled: list[DivisorClass] = []
    current = c
    while True:
        if current.a < 0:
            return EffectivityResult(Effectivity.NO, tuple(peeled), current, "negative degree")
        blocker = next((n for n in negatives if current.dot(n) < 0), None)
        if blocker is None:
            break
        if len(peeled) >= budget:
            return EffectivityResult(Effectivity.UNDECIDED, tuple(peeled), current, "step bound")
        peeled.append(blocker)
        current = current - blocker

    if current.is_zero():
        return EffectivityResult(Effectivity.YES, tuple(peeled), current, "fixed part only")
    if current.a == 0:
        return EffectivityResult(Effectivity.NO, tuple(peeled), current, "exceptional residual")
    if euler_characteristic(current) >= 1:
        return EffectivityResult(Effectivity.YES, tuple(peeled), current, "chi >= 1")
    return EffectivityResult(Effectivity.UNDECIDED, tuple(peeled), current, "chi <= 0")


def class_sum(classes: Sequence[DivisorClass], r: int) -> DivisorClass:
    total = SurfaceLattice(r).zero
    for c in classes:
        total = total + c
    return total
