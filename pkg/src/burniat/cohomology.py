"""Euler characteristics and the eigenspace dimensions of the tangent sheaf."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .branch import BranchData, branch_table
from .errors import InputError, InternalConsistencyError, UnsupportedCaseError
from .lattice import DivisorClass, SurfaceLattice, euler_characteristic
from .plane import BurniatConfig, classify, incident

CHARACTERS = ("inv", "1", "2", "3")

MODULI_DIM = {"K6": 4, "K5": 3, "K4nn": 2, "K4n": 2, "K3": 1}
K2_OF_CASE = {"K6": 6, "K5": 5, "K4nn": 4, "K4n": 4, "K3": 3, "K2": 2}


def rr_chi(c: DivisorClass, lat: SurfaceLattice | None = None) -> int:
    if lat is not None and lat.r != c.r:
        raise InputError(f"class on r={c.r} used with lattice r={lat.r}")
    return euler_characteristic(c)


def chi_on_branch(components: Iterable[DivisorClass], m: DivisorClass) -> int:
    """``chi(O_D(m))`` for ``D`` a disjoint union of smooth rational curves."""
    return sum(1 + m.dot(c) for c in components)


def chi_omega1_twist(m: DivisorClass, lat: SurfaceLattice) -> int:
    """``chi(Omega^1(m)) = 2 + m^2 - e`` on the blow-up of the plane in ``lat.r`` points."""
    return 2 + m.dot(m) - lat.euler_number()


def _twist(lat: SurfaceLattice, i: int) -> DivisorClass:
    return lat.E(i) - lat.E((i + 1) % 3 + 1)


def chi_log(bd: BranchData, i: int) -> int:
    """``chi(Omega^1(log D_i)(E_i - E_{i+2}))``, which equals ``K^2 - 4``."""
    lat = bd.lattice
    m = _twist(lat, i)
    value = chi_omega1_twist(m, lat) + chi_on_branch(bd.components_of(i), m)
    if value != lat.degree() - 4:
        raise InternalConsistencyError(f"chi_log = {value} but K^2 - 4 = {lat.degree() - 4}")
    return value


def h0_log_eigensheaf(cfg: BurniatConfig, i: int) -> int:
    """Dimension of ``H^0(Omega^1(log D_i)(E_i - E_{i+2}))``.

    Residues ``c_j`` along the three lines through ``P_i`` sum to zero, and
    ``c_j`` is forced to vanish when the line passes through a triple point.
    """
    if i not in (1, 2, 3):
        raise InputError(f"character index must be 1, 2 or 3, got {i}")
    triple = [mp.point for mp in classify(cfg).triple_points]
    free = sum(1 for j in (1, 2, 3) if not any(incident(p, cfg.line(i, j)) for p in triple))
    return max(free - 1, 0)


def chi_theta(k2: int) -> int:
    """Enriques-Kuranishi with ``chi(O_S) = 1``."""
    return -10 + 2 * k2


@dataclass(frozen=True)
class Kuranishi:
    smooth: bool
    canonical_model_order: str | None = None
    minimal_model_order: str | None = None
    order_lower_bound: int | None = None

    def to_json(self) -> dict:
        if self.smooth:
            return {"kind": "smooth"}
        return {
            "kind": "nonreduced",
            "canonical_model": f"C^2 x Spec C[t]/(t^{self.canonical_model_order})",
            "minimal_model": f"C^2 x Spec C[t]/(t^{self.minimal_model_order})",
            "order": self.canonical_model_order,
            "order_lower_bound": self.order_lower_bound,
            "order_known": False,
        }


@dataclass(frozen=True)
class EigenspaceTable:
    case: str
    h1: dict[str, int]
    h2: dict[str, int]
    chi_theta: int
    moduli_dim: int
    kuranishi: Kuranishi
    notes: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "h1": {c: self.h1[c] for c in CHARACTERS},
            "h2": {c: self.h2[c] for c in CHARACTERS},
            "chi_theta": self.chi_theta,
            "moduli_dim": self.moduli_dim,
            "kuranishi": self.kuranishi.to_json(),
            "theorem": theorem_metadata(self.case),
        }

    def to_text(self) -> str:
        rows = [f"{'':>4} " + " ".join(f"{c:>4}" for c in CHARACTERS)]
        for name, h in (("h1", self.h1), ("h2", self.h2)):
            rows.append(f"{name:>4} " + " ".join(f"{h[c]:>4}" for c in CHARACTERS))
        rows.append(f"chi(Theta) = {self.chi_theta}, moduli dimension = {self.moduli_dim}")
        return f"{self.case}\n" + "\n".join(rows) + "\n"

    def to_csv(self) -> str:
        lines = ["group,inv,1,2,3"]
        for name, h in (("h1", self.h1), ("h2", self.h2)):
            lines.append(name + "," + ",".join(str(h[c]) for c in CHARACTERS))
        return "\n".join(lines) + "\n"


def kuranishi_base(case: str) -> Kuranishi:
    if case == "K4n":
        return Kuranishi(False, "m", "2m", 2)
    return Kuranishi(True)


def theorem_metadata(case: str) -> dict:
    dim = MODULI_DIM[case]
    meta = {"irreducible_open": True, "dimension": dim, "unirational": True,
            "rational": True, "moduli_space": "minimal"}
    if case == "K4n":
        meta.update(moduli_space="canonical (Gieseker)", everywhere_nonreduced=True)
    else:
        meta.update(everywhere_nonreduced=False, normal=True)
    return meta


def moduli_dim(case: str) -> int:
    try:
        return MODULI_DIM[case]
    except KeyError:
        raise InputError(f"unknown case {case!r}; expected one of {tuple(MODULI_DIM)}") from None


def eigenspace_table(cfg: BurniatConfig) -> EigenspaceTable:
    """``h^1`` and ``h^2`` of the tangent sheaf per character of ``(Z/2)^2``.

    For a nontrivial character ``h^2 = h^0`` of the log eigensheaf and
    ``h^1 = h^2 - chi_log`` since ``h^0(Theta_S) = 0``; the invariant ``h^2``
    vanishes and the invariant ``h^1`` follows from ``chi(Theta_S)``.
    """
    cls = classify(cfg)
    if cls.k2 not in (4, 5, 6):
        raise UnsupportedCaseError(f"K^2 = {cls.k2} ({cls.case}) is out of scope")
    bd = branch_table(cls.case)
    h1: dict[str, int] = {}
    h2: dict[str, int] = {"inv": 0}
    for i in (1, 2, 3):
        h2[str(i)] = h0_log_eigensheaf(cfg, i)
        h1[str(i)] = h2[str(i)] - chi_log(bd, i)
    chi = chi_theta(cls.k2)
    h1["inv"] = sum(h2[str(i)] - h1[str(i)] for i in (1, 2, 3)) - chi
    for c in CHARACTERS:
        if h1[c] < 0 or h2[c] < 0:
            raise InternalConsistencyError(f"negative dimension for character {c}: h1={h1[c]}, h2={h2[c]}")
    if sum(h2[c] - h1[c] for c in CHARACTERS) != chi:
        raise InternalConsistencyError("eigenspace dimensions do not add up to chi(Theta)")
    if h1["inv"] != MODULI_DIM[cls.case]:
        raise InternalConsistencyError(f"h1 invariant {h1['inv']} differs from family dimension")
    return EigenspaceTable(cls.case, h1, h2, chi, h1["inv"], kuranishi_base(cls.case))
