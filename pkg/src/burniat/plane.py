"""Burniat line arrangements in the projective plane over exact rationals.

Coordinates are ``(x1 : x2 : x3)`` with reference points ``P1 = (1:0:0)``,
``P2 = (0:1:0)``, ``P3 = (0:0:1)``. Pencil ``i`` consists of the lines through
``P_i``; its non-side members are written ``x_{i+2} = c x_{i+1}`` (indices mod 3)
and ``D_{i,1}`` is the side ``x_{i+2} = 0`` joining ``P_i`` and ``P_{i+1}``.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateConfigError, InputError, InvalidBurniatError
from .serialize import frac_from_json, frac_to_json

Rational = Fraction | int
Label = tuple[int, int]

CASES = ("K6", "K5", "K4nn", "K4n")
LABELS: tuple[Label, ...] = tuple((i, j) for i in (1, 2, 3) for j in (1, 2, 3))
CASE_BY_M = {0: "K6", 1: "K5", 3: "K3", 4: "K2"}


def _idx(k: int) -> int:
    """0-based position of coordinate ``x_k`` for any integer ``k`` (mod 3)."""
    return (k - 1) % 3


def _normalize(coords: Iterable[Rational]) -> tuple[Fraction, Fraction, Fraction]:
    v = tuple(Fraction(x) for x in coords)
    if len(v) != 3:
        raise InputError(f"homogeneous triple expected, got {len(v)} entries")
    pivot = next((x for x in v if x != 0), None)
    if pivot is None:
        raise InputError("homogeneous coordinates may not all vanish")
    return tuple(x / pivot for x in v)  # type: ignore[return-value]


def cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Fraction:
    c = cross(v, w)
    return u[0] * c[0] + u[1] * c[1] + u[2] * c[2]


@dataclass(frozen=True)
class ProjPoint:
    """Point of the plane; stored with its first nonzero coordinate scaled to 1."""

    coords: tuple[Fraction, Fraction, Fraction]

    def __init__(self, *coords: Rational) -> None:
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _normalize(coords))

    def __repr__(self) -> str:
        return "(" + ":".join(str(x) for x in self.coords) + ")"

    def to_json(self) -> list:
        return [frac_to_json(x) for x in self.coords]


@dataclass(frozen=True)
class ProjLine:
    """Line ``c1 x1 + c2 x2 + c3 x3 = 0``; ``label`` is the Burniat tag ``(i, j)`` if any."""

    coeffs: tuple[Fraction, Fraction, Fraction]
    label: Label | None = field(default=None, compare=False)

    def __init__(self, coeffs: Iterable[Rational], label: Label | None = None) -> None:
        object.__setattr__(self, "coeffs", _normalize(coeffs))
        object.__setattr__(self, "label", None if label is None else (int(label[0]), int(label[1])))

    def __repr__(self) -> str:
        tag = f"D{self.label[0]}{self.label[1]}: " if self.label else ""
        return f"<{tag}" + " ".join(str(x) for x in self.coeffs) + ">"

    def to_json(self) -> dict:
        return {"label": list(self.label) if self.label else None,
                "coeffs": [frac_to_json(x) for x in self.coeffs]}


P1, P2, P3 = ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)
CORNERS = (P1, P2, P3)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return sum(x * c for x, c in zip(p.coords, l.coeffs)) == 0


def collinear(p: ProjPoint, q: ProjPoint, s: ProjPoint) -> bool:
    return det3(p.coords, q.coords, s.coords) == 0


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise InputError(f"cannot join {p} with itself")
    return ProjLine(cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    if l == m:
        raise InputError(f"{l} and {m} coincide")
    return ProjPoint(cross(l.coeffs, m.coeffs))


def side_line(i: int) -> ProjLine:
    """``D_{i,1}``: the side ``x_{i+2} = 0`` through ``P_i`` and ``P_{i+1}``."""
    c = [0, 0, 0]
    c[_idx(i + 2)] = 1
    return ProjLine(c, (i, 1))


def pencil_line(i: int, c: Rational, j: int) -> ProjLine:
    """The member ``x_{i+2} = c x_{i+1}`` of the pencil through ``P_i``."""
    c = Fraction(c)
    if c == 0:
        raise DegenerateConfigError(f"parameter 0 makes D_{i},{j} the side D_{i},1")
    coeffs = [Fraction(0)] * 3
    coeffs[_idx(i + 2)] = Fraction(1)
    coeffs[_idx(i + 1)] = -c
    return ProjLine(coeffs, (i, j))


def pencil_parameter_through(i: int, p: ProjPoint) -> Fraction:
    """Parameter ``c`` of the line of pencil ``i`` passing through ``p``."""
    den = p.coords[_idx(i + 1)]
    num = p.coords[_idx(i + 2)]
    if den == 0 or num == 0:
        raise DegenerateConfigError(f"{p} lies on a side of the coordinate triangle")
    return num / den


@dataclass
class BurniatConfig:
    lines: dict[Label, ProjLine]
    extra_points: tuple[ProjPoint, ...] = ()
    case: str | None = None
    params: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.extra_points = tuple(self.extra_points)
        self.validate()

    def validate(self) -> None:
        if set(self.lines) != set(LABELS):
            raise DegenerateConfigError(f"expected labels {list(LABELS)}, got {sorted(self.lines)}")
        if len(self.extra_points) > 2:
            raise InputError("at most two extra points P4, P5")
        if self.case is not None and self.case not in CASES:
            raise InputError(f"unknown case {self.case!r}")
        for (i, j), line in self.lines.items():
            if j == 1 and line != side_line(i):
                raise DegenerateConfigError(f"D_{i},1 must be the side x_{_idx(i + 2) + 1} = 0")
            if not incident(CORNERS[i - 1], line):
                raise DegenerateConfigError(f"D_{i},{j} does not pass through P_{i}")
        seen: dict[ProjLine, Label] = {}
        for label in LABELS:
            line = self.lines[label]
            if line in seen:
                raise DegenerateConfigError(f"D_{label[0]},{label[1]} repeats D_{seen[line][0]},{seen[line][1]}")
            seen[line] = label

    def line(self, i: int, j: int) -> ProjLine:
        return self.lines[(i, j)]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "params": {k: [frac_to_json(x) for x in v] for k, v in sorted(self.params.items())},
            "extra_points": [p.to_json() for p in self.extra_points],
            "lines": [self.lines[lab].to_json() for lab in LABELS],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> BurniatConfig:
        try:
            case = obj.get("case")
            params = {k: tuple(frac_from_json(x) for x in v) for k, v in (obj.get("params") or {}).items()}
            extra = tuple(ProjPoint(*(frac_from_json(x) for x in p)) for p in obj.get("extra_points") or ())
            raw_lines = obj.get("lines")
            if raw_lines:
                lines: dict[Label, ProjLine] = {}
                for entry in raw_lines:
                    label = (int(entry["label"][0]), int(entry["label"][1]))
                    if label in lines:
                        raise DegenerateConfigError(f"label {label} given twice")
                    lines[label] = ProjLine([frac_from_json(x) for x in entry["coeffs"]], label)
            else:
                lines = _lines_from_ab(params["a"], params["b"])
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed configuration: {exc}") from exc
        return cls(lines, extra, case, params)


def _lines_from_ab(a: Sequence[Rational], b: Sequence[Rational]) -> dict[Label, ProjLine]:
    if len(a) != 3 or len(b) != 3:
        raise InputError("need three a-parameters and three b-parameters")
    lines = {(i, 1): side_line(i) for i in (1, 2, 3)}
    for i in (1, 2, 3):
        lines[(i, 2)] = pencil_line(i, a[i - 1], 2)
        lines[(i, 3)] = pencil_line(i, b[i - 1], 3)
    return lines


def _point(p: ProjPoint | Sequence[Rational] | None, name: str) -> ProjPoint:
    if p is None:
        raise InputError(f"{name} is required for this case")
    return p if isinstance(p, ProjPoint) else ProjPoint(*p)


def build_burniat_lines(
    case: str,
    *,
    a: Sequence[Rational] | None = None,
    b: Sequence[Rational] | None = None,
    p4: ProjPoint | Sequence[Rational] | None = None,
    p5: ProjPoint | Sequence[Rational] | None = None,
) -> BurniatConfig:
    """Build the nine labelled lines for ``case``.

    K6
        ``a`` and ``b`` (three nonzero rationals each).
    K5
        ``p4`` (default ``(1:1:1)``) and ``b``; ``D_{i,2}`` passes through ``P4``.
    K4nn
        ``p4`` and ``p5``; ``D_{i,2}`` through ``P4`` and ``D_{i,3}`` through ``P5``.
    K4n
        ``p4``, ``p5`` collinear with ``P1`` and the free parameter ``b[0]`` of
        ``D_{1,3}``; ``D_{1,2}`` carries ``P1, P4, P5``.
    """
    if case == "K6":
        if a is None or b is None:
            raise InputError("K6 needs a and b")
        av, bv = [Fraction(x) for x in a], [Fraction(x) for x in b]
        extra: tuple[ProjPoint, ...] = ()
    elif case == "K5":
        q4 = _point(p4 if p4 is not None else (1, 1, 1), "p4")
        if b is None:
            raise InputError("K5 needs b")
        av = [pencil_parameter_through(i, q4) for i in (1, 2, 3)]
        bv = [Fraction(x) for x in b]
        extra = (q4,)
    elif case == "K4nn":
        q4, q5 = _point(p4, "p4"), _point(p5, "p5")
        av = [pencil_parameter_through(i, q4) for i in (1, 2, 3)]
        bv = [pencil_parameter_through(i, q5) for i in (1, 2, 3)]
        extra = (q4, q5)
    elif case == "K4n":
        q4, q5 = _point(p4, "p4"), _point(p5, "p5")
        if not collinear(P1, q4, q5) or q4 == q5:
            raise DegenerateConfigError("nodal case needs P1, P4, P5 distinct and collinear")
        if b is None or len(b) < 1:
            raise InputError("K4n needs the parameter b[0] of D_1,3")
        av = [pencil_parameter_through(i, q4) for i in (1, 2, 3)]
        bv = [Fraction(b[0])] + [pencil_parameter_through(i, q5) for i in (2, 3)]
        extra = (q4, q5)
    else:
        raise InputError(f"unknown case {case!r}; expected one of {CASES}")
    if len(av) != 3 or len(bv) != 3:
        raise InputError("need three a-parameters and three b-parameters")
    lines = _lines_from_ab(av, bv)
    return BurniatConfig(lines, extra, case, {"a": tuple(av), "b": tuple(bv)})


SAMPLE_PARAMS: dict[str, dict] = {
    "K6": {"a": (2, 3, 5), "b": (7, 11, 13)},
    "K5": {"p4": (1, 1, 1), "b": (2, 3, 5)},
    "K4nn": {"p4": (1, 1, 1), "p5": (1, 2, 3)},
    "K4n": {"p4": (1, 1, 1), "p5": (2, 1, 1), "b": (3,)},
}


def sample_config(case: str) -> BurniatConfig:
    """A fixed representative configuration of each case."""
    if case not in SAMPLE_PARAMS:
        raise InputError(f"no sample configuration for {case!r}")
    return build_burniat_lines(case, **SAMPLE_PARAMS[case])


@dataclass(frozen=True)
class MultiplePoint:
    point: ProjPoint
    multiplicity: int
    labels: tuple[Label, ...]
    is_corner: bool

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "multiplicity": self.multiplicity,
            "labels": [list(l) for l in self.labels],
            "corner": self.is_corner,
        }


def find_triple_points(cfg: BurniatConfig) -> list[MultiplePoint]:
    """Every point lying on three or more of the nine lines, corners first."""
    labelled = [(lab, cfg.lines[lab]) for lab in LABELS]
    candidates = {meet(l, m) for (_, l), (_, m) in itertools.combinations(labelled, 2)}
    found = []
    for p in candidates:
        through = tuple(lab for lab, l in labelled if incident(p, l))
        if len(through) >= 3:
            found.append(MultiplePoint(p, len(through), through, p in CORNERS))
    found.sort(key=lambda mp: (not mp.is_corner, mp.labels))
    return found


@dataclass(frozen=True)
class Classification:
    case: str
    m: int
    k2: int
    nodal: bool
    triple_points: tuple[MultiplePoint, ...]
    corners: tuple[MultiplePoint, ...]

    @property
    def kind(self) -> str:
        return {0: "primary", 1: "secondary", 2: "secondary", 3: "tertiary", 4: "quaternary"}[self.m]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "kind": self.kind,
            "m": self.m,
            "K2": self.k2,
            "nodal": self.nodal,
            "triple_points": [t.to_json() for t in self.triple_points],
            "corners": [c.to_json() for c in self.corners],
        }


def classify(cfg: BurniatConfig) -> Classification:
    points = find_triple_points(cfg)
    off = [mp for mp in points if not mp.is_corner]
    for mp in off:
        if mp.multiplicity >= 4:
            raise InvalidBurniatError(f"{mp.point} has multiplicity {mp.multiplicity}")
        pencils = [lab[0] for lab in mp.labels]
        if len(set(pencils)) != len(pencils):
            raise InvalidBurniatError(f"two lines of one pencil meet at {mp.point}")
    m = len(off)
    if m > 4:
        raise InvalidBurniatError(f"{m} triple points; at most 4 are possible")
    nodal = any(
        sum(1 for mp in points if lab in mp.labels) >= 3 for lab in LABELS
    )
    if m == 2:
        case = "K4n" if nodal else "K4nn"
    else:
        case = CASE_BY_M[m]
    return Classification(case, m, 6 - m, nodal, tuple(off), tuple(mp for mp in points if mp.is_corner))


def closed_form_triple_count(a: Sequence[Rational], b: Sequence[Rational]) -> int:
    """Off-corner triple points from the pencil parameters alone.

    Lines ``x3 = c1 x2``, ``x1 = c2 x3``, ``x2 = c3 x1`` are concurrent iff
    ``c1 c2 c3 = 1``, and no other off-corner point meets three lines.
    """
    return sum(
        1 for c in itertools.product(*zip(a, b)) if Fraction(c[0]) * c[1] * c[2] == 1
    )


# -- weak Del Pezzo point conditions ----------------------------------------------


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(m)) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for k in range(rank + 1, len(m)):
            if m[k][col]:
                f = m[k][col] / m[rank][col]
                m[k] = [x - f * y for x, y in zip(m[k], m[rank])]
        rank += 1
    return rank


def veronese(p: ProjPoint) -> list[Fraction]:
    x, y, z = p.coords
    return [x * x, y * y, z * z, x * y, x * z, y * z]


def on_common_conic(points: Sequence[ProjPoint]) -> bool:
    """True iff some (possibly reducible) conic passes through all points."""
    if len(points) < 5:
        return True
    return _rank([veronese(p) for p in points]) < 6


def is_weak_del_pezzo_pointset(points: Sequence[ProjPoint]) -> bool:
    """Distinct points whose blow-up is a weak Del Pezzo surface.

    Checks that no four points are collinear and no seven lie on a conic.
    """
    pts = list(points)
    if len(pts) > 8:
        raise InputError(f"at most 8 points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise InputError("points must be pairwise distinct")
    for p, q in itertools.combinations(pts, 2):
        line = join(p, q)
        if sum(1 for s in pts if incident(s, line)) >= 4:
            return False
    return not any(on_common_conic(sub) for sub in itertools.combinations(pts, 7))
