"""Branch divisors of the Burniat bidouble covers and their class identities."""
from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .errors import DomainError, InconclusiveError, InputError
from .lattice import DivisorClass, Effectivity, SurfaceLattice, is_effective

Key = tuple[int, Union[int, str]]

R_OF_CASE = {"K6": 3, "K5": 4, "K4nn": 5, "K4n": 5}
LINE_COUNT = {"K6": 6, "K5": 9, "K4nn": 12, "K4n": 10}


def _m3(i: int) -> int:
    return (i - 1) % 3 + 1


def _table_row(case: str, lat: SurfaceLattice, i: int, j: int) -> DivisorClass:
    L, E = lat.L, lat.E
    if j == 1:
        return L - E(i) - E(_m3(i + 1))
    if case == "K6":
        return L - E(i)
    if case == "K5":
        return L - E(i) - E(4) if j == 2 else L - E(i)
    if case == "K4nn":
        return L - E(i) - E(4) if j == 2 else L - E(i) - E(5)
    if case == "K4n":
        if i == 1:
            return L - E(1) - E(4) - E(5) if j == 2 else L - E(1)
        return L - E(i) - E(4) if j == 2 else L - E(i) - E(5)
    raise InputError(f"unknown case {case!r}")


def _l_class(case: str, lat: SurfaceLattice, i: int) -> DivisorClass:
    L, E = lat.L, lat.E
    cls = 3 * L - 2 * E(_m3(i - 1)) - E(_m3(i + 1))
    for extra in range(4, lat.r + 1):
        cls = cls - E(extra)
    return cls


@dataclass(frozen=True)
class BranchData:
    case: str
    r: int
    components: dict[Key, DivisorClass]
    D: dict[int, DivisorClass]
    Lclasses: dict[int, DivisorClass]

    @property
    def lattice(self) -> SurfaceLattice:
        return SurfaceLattice(self.r)

    def components_of(self, i: int) -> list[DivisorClass]:
        return [self.components[(i, 1)], self.components[(i, 2)], self.components[(i, 3)],
                self.components[(i, "E")]]

    def with_component(self, key: Key, cls: DivisorClass) -> BranchData:
        """Copy with one component replaced and ``D_i`` recomputed from its parts."""
        comps = dict(self.components)
        comps[key] = cls
        i = key[0]
        total = self.lattice.zero
        for part in (comps[(i, 1)], comps[(i, 2)], comps[(i, 3)], comps[(i, "E")]):
            total = total + part
        return replace(self, components=comps, D={**self.D, i: total})

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "r": self.r,
            "components": [
                {"i": k[0], "j": k[1], "class": v.to_json()}
                for k, v in sorted(self.components.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))
            ],
            "D": {str(i): self.D[i].to_json() for i in (1, 2, 3)},
            "L": {str(i): self.Lclasses[i].to_json() for i in (1, 2, 3)},
        }


def branch_table(case: str) -> BranchData:
    """Classes of the branch components ``D_{i,j}``, ``E_{i+2}``, the sums ``D_i`` and ``L_i``."""
    if case not in R_OF_CASE:
        raise InputError(f"unknown case {case!r}; expected one of {tuple(R_OF_CASE)}")
    lat = SurfaceLattice(R_OF_CASE[case])
    comps: dict[Key, DivisorClass] = {}
    D: dict[int, DivisorClass] = {}
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            comps[(i, j)] = _table_row(case, lat, i, j)
        comps[(i, "E")] = lat.E(_m3(i + 2))
        total = lat.zero
        for k in (1, 2, 3, "E"):
            total = total + comps[(i, k)]
        D[i] = total
    Ls = {i: _l_class(case, lat, i) for i in (1, 2, 3)}
    return BranchData(case, lat.r, comps, D, Ls)


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    i: int
    lhs: DivisorClass
    rhs: DivisorClass

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"identity": self.identity, "i": self.i, "lhs": self.lhs.to_json(),
                "rhs": self.rhs.to_json(), "pass": self.passed}


def verify_branch_identities(bd: BranchData) -> list[IdentityCheck]:
    lat = bd.lattice
    K, L, E = lat.K, lat.L, lat.E
    checks = []
    for i in (1, 2, 3):
        prev, nxt = _m3(i - 1), _m3(i + 1)
        Di, Li = bd.D[i], bd.Lclasses[i]
        parts = lat.zero
        for c in bd.components_of(i):
            parts = parts + c
        checks += [
            IdentityCheck("D_i = D_i1 + D_i2 + D_i3 + E_{i+2}", i, Di, parts),
            IdentityCheck("D_i = -K - 2E_i + 2E_{i+2}", i, Di, -K - 2 * E(i) + 2 * E(_m3(i + 2))),
            IdentityCheck("L_i = -K + E_i - E_{i-1}", i, Li, -K + E(i) - E(prev)),
            IdentityCheck("D_i - L_i = -3E_i + 3E_{i-1}", i, Di - Li, -3 * E(i) + 3 * E(prev)),
            IdentityCheck("2L_i = D_{i-1} + D_{i+1}", i, 2 * Li, bd.D[prev] + bd.D[nxt]),
        ]
        if bd.case == "K6":
            checks.append(IdentityCheck("D_{i-1} + D_{i+1} = 6L - 4E_{i-1} - 2E_{i+1}", i,
                                        bd.D[prev] + bd.D[nxt], 6 * L - 4 * E(prev) - 2 * E(nxt)))
        extra_name = {"K6": "", "K5": " - E_4"}.get(bd.case, " - E_4 - E_5")
        explicit = 3 * L - E(nxt) - 2 * E(prev)
        for k in range(4, lat.r + 1):
            explicit = explicit - E(k)
        checks.append(IdentityCheck(f"L_i = 3L - E_{{i+1}} - 2E_{{i-1}}{extra_name}", i, Li, explicit))
    return checks


@dataclass(frozen=True)
class Census:
    lines: int
    conics: int
    contracted: int
    sum_D_squared: int
    sum_anticanonical_degree: int


def branch_census(bd: BranchData) -> Census:
    """Count the branch components by anticanonical degree (1 line, 2 conic, 0 contracted)."""
    lat = bd.lattice
    minus_k = -lat.K
    degrees = [minus_k.dot(c) for c in bd.components.values()]
    unexpected = sorted(set(degrees) - {0, 1, 2})
    if unexpected:
        raise InputError(f"branch component of anticanonical degree {unexpected}")
    return Census(
        lines=degrees.count(1),
        conics=degrees.count(2),
        contracted=degrees.count(0),
        sum_D_squared=sum(bd.D[i].self_intersection() for i in (1, 2, 3)),
        sum_anticanonical_degree=sum(minus_k.dot(bd.D[i]) for i in (1, 2, 3)),
    )


def case_negatives(bd: BranchData) -> list[DivisorClass]:
    """Exceptional curves plus the (-2)-curves among the branch components."""
    negs = set(bd.lattice.exceptional)
    negs.update(c for c in bd.components.values() if c.self_intersection() == -2)
    return sorted(negs)


def natural_deformations_galois(
    bd: BranchData, negatives: Iterable[DivisorClass] | None = None
) -> bool:
    """True iff every ``|D_i - L_i|`` is empty, i.e. all natural deformations stay Galois."""
    negs = list(case_negatives(bd) if negatives is None else negatives)
    galois = True
    for i in (1, 2, 3):
        res = is_effective(bd.D[i] - bd.Lclasses[i], negs)
        if res.answer is Effectivity.UNDECIDED:
            raise InconclusiveError(f"could not decide effectivity of D_{i} - L_{i} = {bd.D[i] - bd.Lclasses[i]}")
        if res.answer is Effectivity.YES:
            galois = False
    return galois


# -- fibres of the bidouble cover -----------------------------------------------------


@dataclass(frozen=True)
class _Surd:
    """``coeff * sqrt(radicand)`` with a positive rational radicand."""

    coeff: Fraction
    radicand: Fraction

    def __mul__(self, other: _Surd) -> _Surd:
        return _Surd(self.coeff * other.coeff, self.radicand * other.radicand)

    def scale(self, q: Fraction) -> _Surd:
        return _Surd(self.coeff * q, self.radicand)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Surd):
            return NotImplemented
        # real numbers agree iff same sign and same square
        sign = (self.coeff > 0) - (self.coeff < 0)
        other_sign = (other.coeff > 0) - (other.coeff < 0)
        return sign == other_sign and self.coeff ** 2 * self.radicand == other.coeff ** 2 * other.radicand

    def square(self) -> Fraction:
        return self.coeff ** 2 * self.radicand


def bidouble_fiber_check(delta: tuple[Fraction | int, Fraction | int, Fraction | int]) -> int:
    """Number of real points ``(u1, u2, u3)`` over a point with ``delta_i > 0``.

    ``u1 u2 = d1 u3``, ``u2 u3 = d2 u1``, ``u3 u1 = d3 u2`` together with
    ``u1^2 = d3 d1``, ``u2^2 = d1 d2``, ``u3^2 = d2 d3``.
    """
    if len(delta) != 3:
        raise InputError("delta must be a triple")
    d1, d2, d3 = (Fraction(x) for x in delta)
    if min(d1, d2, d3) <= 0:
        raise DomainError(f"delta must be positive off the branch locus, got {delta}")
    count = 0
    for s1, s2, s3 in itertools.product((1, -1), repeat=3):
        u1, u2, u3 = _Surd(Fraction(s1), d3 * d1), _Surd(Fraction(s2), d1 * d2), _Surd(Fraction(s3), d2 * d3)
        ok = (
            u1 * u2 == u3.scale(d1)
            and u2 * u3 == u1.scale(d2)
            and u3 * u1 == u2.scale(d3)
            and u1.square() == d3 * d1
            and u2.square() == d1 * d2
            and u3.square() == d2 * d3
        )
        count += ok
    return count


def k_squared(m: int) -> int:
    if not isinstance(m, int) or not 0 <= m <= 4:
        raise InputError(f"number of triple points must lie in 0..4, got {m!r}")
    return 6 - m
