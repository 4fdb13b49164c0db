import pytest
import sympy

from burniat.branch import branch_table
from burniat.cohomology import (
    MODULI_DIM,
    chi_log,
    chi_omega1_twist,
    chi_on_branch,
    chi_theta,
    eigenspace_table,
    h0_log_eigensheaf,
    kuranishi_base,
    moduli_dim,
    rr_chi,
)
from burniat.errors import InputError, UnsupportedCaseError
from burniat.lattice import Effectivity, SurfaceLattice, is_effective
from burniat.plane import build_burniat_lines, sample_config

CASES = ["K6", "K5", "K4nn", "K4n"]
K2 = {"K6": 6, "K5": 5, "K4nn": 4, "K4n": 4}


def _twist(lat, i):
    return lat.E(i) - lat.E((i + 1) % 3 + 1)


def test_rr_examples():
    lat = SurfaceLattice(5)
    assert rr_chi(lat.zero) == 1
    assert rr_chi(lat.K) == 1
    with pytest.raises(InputError):
        rr_chi(lat.L, SurfaceLattice(4))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_rr_minus_l_i(i):
    # h^0(-L_i) = h^1(-L_i) = 0, and h^2(-L_i) = h^0(K + L_i) = h^0(E_i - E_{i-1}) = 0
    bd = branch_table("K5")
    lat = bd.lattice
    assert is_effective(lat.K + bd.Lclasses[i], lat.exceptional).answer is Effectivity.NO
    assert rr_chi(-bd.Lclasses[i]) == 0


def test_chi_on_branch_examples():
    bd = branch_table("K5")
    lat = bd.lattice
    for i in (1, 2, 3):
        assert chi_on_branch(bd.components_of(i), _twist(lat, i)) == 8
        assert chi_on_branch(bd.components_of(i), lat.zero) == 4
    assert chi_on_branch([lat.L - lat.E(1)], lat.E(1)) == 2


def test_chi_omega1_examples():
    lat5 = SurfaceLattice(4)
    assert chi_omega1_twist(_twist(lat5, 1), lat5) == -7 == lat5.degree() - 12
    # Hodge numbers of the plane: chi(Omega^1) = -h^{1,1} = -1
    assert chi_omega1_twist(SurfaceLattice(0).zero, SurfaceLattice(0)) == -1
    assert chi_omega1_twist(SurfaceLattice(5).zero, SurfaceLattice(5)) == -6


def _pair(u, v, gram, basis):
    return sum(u[a] * v[b] * gram[(a, b)] for a in basis for b in basis)


def test_chi_omega1_splitting_principle():
    """Expand chi(O(A1+m)) + chi(O(A2+m)) with A1 + A2 = K and A1.A2 = e symbolically."""
    a11, a22, e, x, y, mm = sympy.symbols("a11 a22 e x y mm")
    basis = ("A1", "A2", "m")
    gram = {("A1", "A1"): a11, ("A2", "A2"): a22, ("A1", "A2"): e, ("A2", "A1"): e,
            ("A1", "m"): x, ("m", "A1"): x, ("A2", "m"): y, ("m", "A2"): y, ("m", "m"): mm}

    def vec(**kw):
        return {b: kw.get(b, 0) for b in basis}

    K = vec(A1=1, A2=1)

    def chi(c):
        minus_k = {b: c[b] - K[b] for b in basis}
        return 1 + sympy.Rational(1, 2) * _pair(c, minus_k, gram, basis)

    total = sympy.expand(chi(vec(A1=1, m=1)) + chi(vec(A2=1, m=1)))
    assert sympy.simplify(total - (2 + mm - e)) == 0
    # the twist E_i - E_{i+2}: m^2 = -2, K.m = x + y = 0
    assert sympy.simplify(total.subs({mm: -2, y: -x}) - (-e)) == 0
    for r in range(3, 6):
        lat = SurfaceLattice(r)
        m = _twist(lat, 1)
        assert chi_omega1_twist(m, lat) == total.subs({mm: m.self_intersection(), e: lat.euler_number()})


@pytest.mark.parametrize("case", CASES)
def test_chi_log(case):
    bd = branch_table(case)
    lat = bd.lattice
    for i in (1, 2, 3):
        m = _twist(lat, i)
        value = chi_log(bd, i)
        assert value == K2[case] - 4
        assert value == chi_omega1_twist(m, lat) + chi_on_branch(bd.components_of(i), m)


@pytest.mark.parametrize("case,expected", [
    ("K6", (2, 2, 2)), ("K5", (1, 1, 1)), ("K4nn", (0, 0, 0)), ("K4n", (1, 0, 0)),
])
def test_h0_log(case, expected):
    cfg = sample_config(case)
    assert tuple(h0_log_eigensheaf(cfg, i) for i in (1, 2, 3)) == expected


def test_h0_log_bad_index():
    with pytest.raises(InputError):
        h0_log_eigensheaf(sample_config("K6"), 4)


def test_chi_theta():
    assert [chi_theta(k) for k in (6, 5, 4)] == [2, 0, -2]


TABLES = {
    "K6": ({"inv": 4, "1": 0, "2": 0, "3": 0}, {"inv": 0, "1": 2, "2": 2, "3": 2}),
    "K5": ({"inv": 3, "1": 0, "2": 0, "3": 0}, {"inv": 0, "1": 1, "2": 1, "3": 1}),
    "K4nn": ({"inv": 2, "1": 0, "2": 0, "3": 0}, {"inv": 0, "1": 0, "2": 0, "3": 0}),
    "K4n": ({"inv": 2, "1": 1, "2": 0, "3": 0}, {"inv": 0, "1": 1, "2": 0, "3": 0}),
}


@pytest.mark.parametrize("case", CASES)
def test_eigenspace_tables(case):
    t = eigenspace_table(sample_config(case))
    assert (t.h1, t.h2) == TABLES[case]
    assert sum(t.h2[c] - t.h1[c] for c in t.h1) == t.chi_theta == -10 + 2 * K2[case]
    assert t.moduli_dim == t.h1["inv"] == MODULI_DIM[case]


def test_unsupported_case():
    # four triple points, K^2 = 2
    cfg = build_burniat_lines("K6", a=(1, 1, 1), b=(-1, -1, -1))
    with pytest.raises(UnsupportedCaseError):
        eigenspace_table(cfg)


def test_moduli_dim():
    assert [moduli_dim(c) for c in ("K6", "K5", "K4nn", "K4n", "K3")] == [4, 3, 2, 2, 1]
    with pytest.raises(InputError):
        moduli_dim("K2")


def test_kuranishi_symbolic():
    k = kuranishi_base("K4n").to_json()
    assert k["order"] == "m" and k["order_known"] is False and k["order_lower_bound"] == 2
    assert k["canonical_model"].endswith("(t^m)") and k["minimal_model"].endswith("(t^2m)")
    assert kuranishi_base("K6").to_json() == {"kind": "smooth"}


def test_text_and_csv():
    t = eigenspace_table(sample_config("K4n"))
    assert "h1    2    1    0    0" in t.to_text()
    assert t.to_csv().splitlines() == ["group,inv,1,2,3", "h1,2,1,0,0", "h2,0,1,0,0"]
