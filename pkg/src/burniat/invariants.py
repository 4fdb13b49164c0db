"""Group actions on pencil parameters and their invariant generators.

K^2 = 5
    Points ``(a1, a2, a3)`` are slopes of the lines ``x_{i+2} = a_i x_{i+1}``.
    The group of order 12 is generated by the cyclic shift, the transposition
    ``(a1, a2, a3) -> (1/a2, 1/a1, 1/a3)`` and the Cremona inversion.
K^2 = 6
    Points ``(a, b)`` carry two lines per pencil. The group is generated by
    simultaneous permutations, the flips ``a_i <-> b_i``, the torus
    ``(a_i, b_i) -> (lambda_i a_i, lambda_i b_i)`` with ``prod lambda_i = 1``
    and the Cremona inversion of all six slopes.

Identities are checked by exact evaluation at seeded random rational points.
"""
from __future__ import annotations

import random
from functools import lru_cache
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Union

from .errors import DegeneratePointError, InputError

DEFAULT_SEED = 0xB0121A7
COEFF_RANGE = 97
# total degree of the invariant identities after clearing denominators
DEGREE_BOUND = 12


def random_rational(rng: random.Random) -> Fraction:
    """Numerator and denominator drawn from ``[-97, 97] \\ {0}``."""
    def draw() -> int:
        k = rng.randint(1, COEFF_RANGE)
        return k if rng.random() < 0.5 else -k
    return Fraction(draw(), draw())


def _triple(values: Iterable) -> tuple[Fraction, Fraction, Fraction]:
    t = tuple(Fraction(x) for x in values)
    if len(t) != 3:
        raise InputError(f"expected three parameters, got {len(t)}")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class ParamPoint5:
    a: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _triple(self.a))
        if any(x == 0 for x in self.a):
            raise DegeneratePointError(f"parameters must be nonzero, got {self.a}")


@dataclass(frozen=True)
class ParamPoint6:
    a: tuple[Fraction, Fraction, Fraction]
    b: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _triple(self.a))
        object.__setattr__(self, "b", _triple(self.b))
        for i, (x, y) in enumerate(zip(self.a, self.b), start=1):
            if x == 0 or y == 0:
                raise DegeneratePointError(f"a_{i}, b_{i} must be nonzero")
            if x == y:
                raise DegeneratePointError(f"a_{i} = b_{i} repeats a line")
            if x + y == 0:
                raise DegeneratePointError(f"v_{i} = a_{i} + b_{i} vanishes")

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(x * y for x, y in zip(self.a, self.b))

    @property
    def v(self) -> tuple[Fraction, ...]:
        return tuple(x + y for x, y in zip(self.a, self.b))

    @property
    def w(self) -> tuple[Fraction, ...]:
        return tuple(u / (v * v) for u, v in zip(self.u, self.v))

    @property
    def v_total(self) -> Fraction:
        v1, v2, v3 = self.v
        return v1 * v2 * v3


# -- generators ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cyc:
    """``(a1, a2, a3) -> (a3, a1, a2)``."""


@dataclass(frozen=True)
class Trans:
    """``(a1, a2, a3) -> (1/a2, 1/a1, 1/a3)``."""


@dataclass(frozen=True)
class Cremona:
    """Invert every slope."""


@dataclass(frozen=True)
class Perm:
    """Move index ``k`` to position ``pi[k]`` in both ``a`` and ``b`` (0-based)."""

    pi: tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.pi) != [0, 1, 2]:
            raise InputError(f"{self.pi} is not a permutation of (0, 1, 2)")


@dataclass(frozen=True)
class Flip:
    i: int

    def __post_init__(self) -> None:
        if self.i not in (1, 2, 3):
            raise InputError(f"flip index must be 1, 2 or 3, got {self.i}")


@dataclass(frozen=True)
class Torus:
    """Scale ``(a_i, b_i)`` by ``lambda_i``; ``lambda_3`` defaults to ``1/(lambda_1 lambda_2)``."""

    l1: Fraction
    l2: Fraction
    l3: Fraction | None = None

    @property
    def lambdas(self) -> tuple[Fraction, Fraction, Fraction]:
        l1, l2 = Fraction(self.l1), Fraction(self.l2)
        if l1 == 0 or l2 == 0 or self.l3 == 0:
            raise InputError("torus parameters must be nonzero")
        l3 = 1 / (l1 * l2) if self.l3 is None else Fraction(self.l3)
        return l1, l2, l3


Generator = Union[Cyc, Trans, Cremona, Perm, Flip, Torus]
GroupElement = Union[Generator, Sequence[Generator]]

CYC, TRANS, CREMONA = Cyc(), Trans(), Cremona()
GENERATORS5: tuple[Generator, ...] = (CYC, TRANS, CREMONA)


def _word(g: GroupElement) -> tuple[Generator, ...]:
    return tuple(g) if isinstance(g, (list, tuple)) else (g,)


def act5(g: GroupElement, p: ParamPoint5) -> ParamPoint5:
    """Apply a generator or a word ``g1 o g2 o ...`` (rightmost acts first)."""
    a = p.a
    for gen in reversed(_word(g)):
        if isinstance(gen, Cyc):
            a = (a[2], a[0], a[1])
        elif isinstance(gen, Trans):
            a = (1 / a[1], 1 / a[0], 1 / a[2])
        elif isinstance(gen, Cremona):
            a = (1 / a[0], 1 / a[1], 1 / a[2])
        else:
            raise InputError(f"{gen!r} does not act on K^2 = 5 parameters")
    return ParamPoint5(a)


def _permute(t: Sequence[Fraction], pi: Sequence[int]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * 3
    for k, x in enumerate(t):
        out[pi[k]] = x
    return tuple(out)


def act6(g: GroupElement, p: ParamPoint6) -> ParamPoint6:
    """Apply a generator or word to a K^2 = 6 point; degenerate images raise."""
    a, b = list(p.a), list(p.b)
    for gen in reversed(_word(g)):
        if isinstance(gen, Perm):
            a, b = list(_permute(a, gen.pi)), list(_permute(b, gen.pi))
        elif isinstance(gen, Flip):
            k = gen.i - 1
            a[k], b[k] = b[k], a[k]
        elif isinstance(gen, Torus):
            lam = gen.lambdas
            a = [x * l for x, l in zip(a, lam)]
            b = [x * l for x, l in zip(b, lam)]
        elif isinstance(gen, Cremona):
            a, b = [1 / x for x in a], [1 / x for x in b]
        else:
            raise InputError(f"{gen!r} does not act on K^2 = 6 parameters")
    return ParamPoint6(tuple(a), tuple(b))


def elementary_symmetric(x: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    x1, x2, x3 = x
    return x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3


def invariants5(p: ParamPoint5) -> tuple[Fraction, Fraction, Fraction]:
    s1, s2, s3 = elementary_symmetric(p.a)
    return s1 + s2 / s3, s2 + s1 / s3, s3 + 1 / s3


def invariants6(p: ParamPoint6) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    w = p.w
    s1, s2, s3 = elementary_symmetric(w)
    v = p.v_total
    return s1, s2, s3, v + 1 / (v * s3)


# -- K^2 = 5 orbit structure ------------------------------------------------------------

_REFERENCE5 = ParamPoint5((2, 3, 5))


def group5_elements() -> list[tuple[Generator, ...]]:
    return list(_group5_words())


@lru_cache(maxsize=None)
def _group5_words() -> tuple[tuple[Generator, ...], ...]:
    """Shortest words for the twelve group elements, found on a point with trivial stabiliser."""
    words: dict[ParamPoint5, tuple[Generator, ...]] = {_REFERENCE5: ()}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for gen in GENERATORS5:
                word = (gen,) + w
                img = act5(word, _REFERENCE5)
                if img not in words:
                    words[img] = word
                    nxt.append(word)
        frontier = nxt
    return tuple(words.values())


def orbit5(p: ParamPoint5) -> list[ParamPoint5]:
    return [act5(w, p) for w in _group5_words()]


def sigma_classes5(p: ParamPoint5) -> dict[tuple[Fraction, ...], list[ParamPoint5]]:
    """Orbit points grouped by their elementary symmetric functions."""
    classes: dict[tuple[Fraction, ...], list[ParamPoint5]] = {}
    for q in orbit5(p):
        classes.setdefault(elementary_symmetric(q.a), []).append(q)
    return classes


def recover_sigma12(y1: Fraction, y2: Fraction, s3: Fraction) -> tuple[Fraction, Fraction]:
    """Solve ``s1 + s2/s3 = y1``, ``s2 + s1/s3 = y2`` for ``(s1, s2)``."""
    det = 1 - 1 / (s3 * s3)
    if det == 0:
        raise DegeneratePointError(f"sigma_3 = {s3} makes the linear system singular")
    s1 = (y1 - y2 / s3) / det
    s2 = (y2 - y1 / s3) / det
    return s1, s2


def quadratic_extension_check5(p: ParamPoint5) -> bool:
    """The orbit splits into two sigma-classes over one ``y``-value, each recoverable from ``(y, sigma_3)``.

    Raises ``DegeneratePointError`` when ``sigma_3 = +-1``.
    """
    s3 = elementary_symmetric(p.a)[2]
    if s3 * s3 == 1:
        raise DegeneratePointError(f"sigma_3 = {s3}")
    classes = sigma_classes5(p)
    ys = {invariants5(q) for q in orbit5(p)}
    if len(classes) != 2 or len(ys) != 1:
        return False
    y1, y2, y3 = ys.pop()
    for (s1, s2, t3), members in classes.items():
        if len(members) != 6:
            return False
        # sigma_3 is a root of T^2 - y3 T + 1 over the field of y's
        if t3 * t3 - y3 * t3 + 1 != 0:
            return False
        if recover_sigma12(y1, y2, t3) != (s1, s2):
            return False
    return True


# -- K^2 = 6 torus quotient ---------------------------------------------------------------


def torus_element_between(p: ParamPoint6, q: ParamPoint6) -> Torus | None:
    """A torus element of product 1 carrying ``p`` to ``q``, if ``(w, v)`` agree."""
    if p.w != q.w or p.v_total != q.v_total:
        return None
    lam = tuple(vq / vp for vp, vq in zip(p.v, q.v))
    if lam[0] * lam[1] * lam[2] != 1:
        return None
    t = Torus(lam[0], lam[1])
    return t if act6(t, p) == q else None


def torus_quotient_check6(p: ParamPoint6, rng: random.Random | None = None, samples: int = 4) -> bool:
    """Torus elements fix ``(w, v)``, and equal ``(w, v)`` along an orbit is resolved by solving for ``lambda``."""
    rng = rng or random.Random(DEFAULT_SEED)
    if torus_element_between(p, p) != Torus(Fraction(1), Fraction(1)):
        return False
    for _ in range(samples):
        t = Torus(random_rational(rng), random_rational(rng))
        q = act6(t, p)
        if q.w != p.w or q.v_total != p.v_total:
            return False
        found = torus_element_between(p, q)
        if found is None or act6(found, p) != q:
            return False
    return True


def random_point5(rng: random.Random) -> ParamPoint5:
    return ParamPoint5(tuple(random_rational(rng) for _ in range(3)))


def random_point6(rng: random.Random) -> ParamPoint6:
    while True:
        try:
            return ParamPoint6(tuple(random_rational(rng) for _ in range(3)),
                               tuple(random_rational(rng) for _ in range(3)))
        except DegeneratePointError:
            continue


def random_torus(rng: random.Random) -> Torus:
    return Torus(random_rational(rng), random_rational(rng))


ALL_PERMS = tuple(Perm(pi) for pi in permutations(range(3)))


# -- seeded verification suites -------------------------------------------------------------


@dataclass
class IdentityResult:
    identity: str
    trials: int = 0
    failures: int = 0
    redraws: int = 0

    def to_json(self) -> dict:
        return {"identity": self.identity, "trials": self.trials,
                "failures": self.failures, "redraws": self.redraws}


def _suite5(rng: random.Random) -> dict[str, bool]:
    p = random_point5(rng)
    y = invariants5(p)
    s1, s2, s3 = elementary_symmetric(p.a)
    a1, a2, a3 = p.a
    out = {
        "invariants5 o cyc = invariants5": invariants5(act5(CYC, p)) == y,
        "invariants5 o trans = invariants5": invariants5(act5(TRANS, p)) == y,
        "invariants5 o cremona = invariants5": invariants5(act5(CREMONA, p)) == y,
        "cremona o cremona = id": act5((CREMONA, CREMONA), p) == p,
        "cyc^3 = id": act5((CYC, CYC, CYC), p) == p,
        "trans^2 = id": act5((TRANS, TRANS), p) == p,
        "trans o cremona = (a2, a1, a3)": act5((TRANS, CREMONA), p).a == (a2, a1, a3),
        "cremona: (s1, s2, s3) -> (s2/s3, s1/s3, 1/s3)":
            elementary_symmetric(act5(CREMONA, p).a) == (s2 / s3, s1 / s3, 1 / s3),
        "y invariant on the 12-element orbit": all(invariants5(q) == y for q in orbit5(p)),
    }
    while s3 * s3 == 1:
        p = random_point5(rng)
        s3 = elementary_symmetric(p.a)[2]
    out["[K:F] = 2 via sigma_3 and the 2x2 system"] = quadratic_extension_check5(p)
    return out


def _suite6(rng: random.Random) -> dict[str, bool]:
    p = random_point6(rng)
    inv = invariants6(p)
    t, t2 = random_torus(rng), random_torus(rng)
    perm = ALL_PERMS[rng.randrange(len(ALL_PERMS))]
    i, j = rng.sample((1, 2, 3), 2)
    cp = act6(CREMONA, p)
    l1, l2, l3 = random_rational(rng), random_rational(rng), random_rational(rng)
    scaled = act6(Torus(l1, l2, l3), p)
    prod_w = p.w[0] * p.w[1] * p.w[2]
    return {
        "invariants6 o perm = invariants6": invariants6(act6(perm, p)) == inv,
        "invariants6 o flip = invariants6": all(invariants6(act6(Flip(k), p)) == inv for k in (1, 2, 3)),
        "invariants6 o torus = invariants6": invariants6(act6(t, p)) == inv,
        "invariants6 o cremona = invariants6": invariants6(cp) == inv,
        "torus fixes w": act6(t, p).w == p.w,
        "cremona: v_i -> v_i/u_i": cp.v == tuple(v / u for v, u in zip(p.v, p.u)),
        "cremona: v -> 1/(v prod w)": cp.v_total == 1 / (p.v_total * prod_w),
        "(C*)^3: v -> (prod lambda) v": scaled.v_total == l1 * l2 * l3 * p.v_total,
        "cremona o cremona = id": act6((CREMONA, CREMONA), p) == p,
        "flips commute": act6((Flip(i), Flip(j)), p) == act6((Flip(j), Flip(i)), p),
        "torus composes multiplicatively": act6((t, t2), p) == act6(
            Torus(t.lambdas[0] * t2.lambdas[0], t.lambdas[1] * t2.lambdas[1]), p),
        "torus orbit recovered from (w, v)": torus_quotient_check6(p, rng, samples=1),
    }


def verify_invariants(case: str, trials: int = 1000, seed: int = DEFAULT_SEED) -> list[IdentityResult]:
    """Evaluate every identity of the chosen case at ``trials`` seeded random points."""
    if case not in ("K5", "K6"):
        raise InputError(f"case must be K5 or K6, got {case!r}")
    if not isinstance(trials, int) or trials < 1:
        raise InputError(f"trials must be a positive integer, got {trials!r}")
    rng = random.Random(seed)
    suite = _suite5 if case == "K5" else _suite6
    results: dict[str, IdentityResult] = {}
    done = 0
    while done < trials:
        try:
            outcome = suite(rng)
        except DegeneratePointError:
            for r in results.values():
                r.redraws += 1
            continue
        for name, ok in outcome.items():
            r = results.setdefault(name, IdentityResult(name))
            r.trials += 1
            r.failures += not ok
        done += 1
    return list(results.values())
