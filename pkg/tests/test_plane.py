import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat.errors import DegenerateConfigError, InputError, InvalidBurniatError
from burniat.lattice import SurfaceLattice
from burniat.plane import (
    CORNERS,
    LABELS,
    BurniatConfig,
    ProjLine,
    ProjPoint,
    build_burniat_lines,
    classify,
    closed_form_triple_count,
    collinear,
    find_triple_points,
    incident,
    is_weak_del_pezzo_pointset,
    join,
    on_common_conic,
    pencil_line,
    sample_config,
    side_line,
)

F = Fraction


def test_incidence_examples():
    assert incident(ProjPoint(1, 0, 0), ProjLine((0, 1, 0)))
    assert incident(ProjPoint(1, 0, 0), ProjLine((0, 0, 1)))
    # the dot product with x1 = 0 is 1
    assert not incident(ProjPoint(1, 0, 0), ProjLine((1, 0, 0)))
    assert incident(ProjPoint(1, 1, 1), ProjLine((0, 1, -1)))
    # x3 = 2 x2 at (0:1:0): 0 - 2 != 0
    assert not incident(ProjPoint(0, 1, 0), ProjLine((0, -2, 1)))


def test_collinearity_examples():
    assert collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0))
    assert not collinear(*CORNERS)
    assert not collinear(ProjPoint(5, 0, 0), ProjPoint(0, F(-1, 3), 0), ProjPoint(0, 0, 7))


def test_point_normalisation():
    assert ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3) == ProjPoint(F(-1, 2), -1, F(-3, 2))
    with pytest.raises(InputError):
        ProjPoint(0, 0, 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3).filter(any),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3).filter(any),
       st.fractions().filter(lambda x: x != 0), st.fractions().filter(lambda x: x != 0))
def test_predicates_scale_invariant(p, l, s, t):
    pt, ln = ProjPoint(*p), ProjLine(l)
    assert incident(pt, ln) == incident(ProjPoint(*(s * x for x in p)), ProjLine([t * x for x in l]))


def test_sides_and_pencils():
    # D_{1,1} is x3 = 0 through P1, P2
    assert side_line(1) == ProjLine((0, 0, 1))
    for i in (1, 2, 3):
        assert incident(CORNERS[i - 1], side_line(i))
        assert incident(CORNERS[i % 3], side_line(i))
        assert incident(CORNERS[i - 1], pencil_line(i, 7, 2))
    with pytest.raises(DegenerateConfigError):
        pencil_line(1, 0, 2)


def test_three_concurrent_lines():
    lines = [ProjLine((0, 1, -1)), ProjLine((-1, 0, 1)), ProjLine((1, -1, 0))]
    p = ProjPoint(1, 1, 1)
    assert all(incident(p, l) for l in lines)


# -- classification of the sample configurations ------------------------------------


def test_k6_sample():
    c = classify(build_burniat_lines("K6", a=(2, 3, 5), b=(7, 11, 13)))
    assert (c.case, c.m, c.k2, c.nodal, c.kind) == ("K6", 0, 6, False, "primary")
    assert len(c.corners) == 3 and all(mp.multiplicity == 4 for mp in c.corners)


def test_k5_sample():
    cfg = sample_config("K5")
    c = classify(cfg)
    assert (c.case, c.m, c.k2) == ("K5", 1, 5)
    assert [mp.point for mp in c.triple_points] == [ProjPoint(1, 1, 1)]


def test_k4nn_sample():
    c = classify(sample_config("K4nn"))
    assert (c.case, c.m, c.k2, c.nodal) == ("K4nn", 2, 4, False)
    assert {mp.point for mp in c.triple_points} == {ProjPoint(1, 1, 1), ProjPoint(1, 2, 3)}
    for mp in c.triple_points:
        assert mp.multiplicity == 3
        assert sorted(lab[0] for lab in mp.labels) == [1, 2, 3]


def _blown_up(cfg):
    return list(CORNERS) + list(cfg.extra_points)


def test_k4n_sample_and_nodal_line_class():
    cfg = sample_config("K4n")
    c = classify(cfg)
    assert (c.case, c.m, c.k2, c.nodal) == ("K4n", 2, 4, True)
    mult3 = [mp.point for mp in find_triple_points(cfg)]
    carriers = [lab for lab in LABELS if sum(incident(p, cfg.lines[lab]) for p in mult3) >= 3]
    assert carriers == [(1, 2)]
    lat = SurfaceLattice(5)
    cls = lat.L
    for k, p in enumerate(_blown_up(cfg), start=1):
        if incident(p, cfg.lines[(1, 2)]):
            cls = cls - lat.E(k)
    assert cls == lat.L - lat.E(1) - lat.E(4) - lat.E(5)
    assert cls.self_intersection() == -2


def test_k4n_requires_collinearity():
    with pytest.raises(DegenerateConfigError):
        build_burniat_lines("K4n", p4=(1, 1, 1), p5=(1, 2, 3), b=(3,))


@pytest.mark.parametrize("b, m, case, kind", [
    ((2, 3, F(1, 6)), 2, "K4nn", "secondary"),
    ((2, F(1, 2), F(1, 2)), 3, "K3", "tertiary"),
    ((-1, -1, -1), 4, "K2", "quaternary"),
])
def test_more_triple_points(b, m, case, kind):
    c = classify(build_burniat_lines("K6", a=(1, 1, 1), b=b))
    assert closed_form_triple_count((1, 1, 1), b) == m
    assert (c.m, c.k2, c.case, c.kind) == (m, 6 - m, case, kind)


# -- seeded random draws -----------------------------------------------------------------


def _q(rng):
    return F(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 30))


def _off_triangle(rng):
    return ProjPoint(1, _q(rng), _q(rng))


def _draw(case, rng):
    """Random valid parameters for ``case``; draws with accidental extra concurrences are rejected."""
    want = {"K6": 0, "K5": 1, "K4nn": 2, "K4n": 2}[case]
    while True:
        try:
            if case == "K6":
                cfg = build_burniat_lines(case, a=[_q(rng) for _ in range(3)], b=[_q(rng) for _ in range(3)])
            elif case == "K5":
                cfg = build_burniat_lines(case, p4=_off_triangle(rng), b=[_q(rng) for _ in range(3)])
            elif case == "K4nn":
                cfg = build_burniat_lines(case, p4=_off_triangle(rng), p5=_off_triangle(rng))
            else:
                p4 = _off_triangle(rng)
                # points of the line P1 P4 are (s : y4 : z4)
                p5 = ProjPoint(_q(rng), p4.coords[1], p4.coords[2])
                cfg = build_burniat_lines(case, p4=p4, p5=p5, b=[_q(rng)])
        except DegenerateConfigError:
            continue
        if closed_form_triple_count(cfg.params["a"], cfg.params["b"]) == want:
            return cfg


@pytest.mark.parametrize("case", ["K6", "K5", "K4nn", "K4n"])
def test_random_draws_classify(case):
    rng = random.Random(0xB0121A7)
    for _ in range(200):
        assert classify(_draw(case, rng)).case == case


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["K6", "K5", "K4nn", "K4n"]),
       st.lists(st.fractions().filter(lambda x: x != 0), min_size=9, max_size=9))
def test_triple_points_scale_invariant(case, scales):
    cfg = sample_config(case)
    rescaled = {lab: ProjLine([s * x for x in cfg.lines[lab].coeffs], lab)
                for lab, s in zip(LABELS, scales)}
    other = BurniatConfig(rescaled, cfg.extra_points, cfg.case, cfg.params)
    assert find_triple_points(other) == find_triple_points(cfg)


# -- degeneracies ---------------------------------------------------------------------------


def test_repeated_line_rejected():
    with pytest.raises(DegenerateConfigError):
        build_burniat_lines("K6", a=(2, 3, 5), b=(2, 11, 13))


def test_line_missing_its_corner_rejected():
    cfg = sample_config("K6")
    lines = dict(cfg.lines)
    lines[(1, 3)] = ProjLine((1, 1, 1), (1, 3))
    with pytest.raises(DegenerateConfigError):
        BurniatConfig(lines)


def _unchecked(lines):
    cfg = object.__new__(BurniatConfig)
    cfg.lines, cfg.extra_points, cfg.case, cfg.params = lines, (), None, {}
    return cfg


def test_four_concurrent_lines_rejected():
    cfg = sample_config("K4nn")
    p4 = ProjPoint(1, 1, 1)
    lines = dict(cfg.lines)
    # a fourth line through P4, not through P1
    lines[(1, 3)] = join(p4, ProjPoint(1, 2, 5))
    with pytest.raises(InvalidBurniatError):
        classify(_unchecked(lines))


def test_same_pencil_triple_point_rejected():
    cfg = sample_config("K6")
    p = ProjPoint(1, 1, 2)
    lines = dict(cfg.lines)
    lines[(1, 2)] = join(p, CORNERS[0])
    lines[(1, 3)] = join(p, ProjPoint(1, 2, 0))
    lines[(2, 2)] = join(p, CORNERS[1])
    (mp,) = [m for m in find_triple_points(_unchecked(lines)) if m.point == p]
    assert [lab[0] for lab in mp.labels] == [1, 1, 2]
    with pytest.raises(InvalidBurniatError):
        classify(_unchecked(lines))


# -- weak Del Pezzo point sets ------------------------------------------------------------


def test_weak_del_pezzo_examples():
    five = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1), ProjPoint(1, 2, 3)]
    assert is_weak_del_pezzo_pointset(five)
    four_collinear = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0), ProjPoint(1, 2, 0)]
    assert not is_weak_del_pezzo_pointset(four_collinear)
    three_collinear = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 2, 3)]
    assert is_weak_del_pezzo_pointset(three_collinear)
    with pytest.raises(InputError):
        is_weak_del_pezzo_pointset(five + [ProjPoint(2, 4, 6)])


def test_seven_on_conic_rejected():
    # x y = z^2 through (t^2 : 1 : t)
    pts = [ProjPoint(t * t, 1, t) for t in range(1, 8)]
    assert on_common_conic(pts)
    assert not is_weak_del_pezzo_pointset(pts)


def _sympy_conic_oracle(points):
    rows = [[x * x, y * y, z * z, x * y, x * z, y * z] for x, y, z in
            ([sympy.Rational(c.numerator, c.denominator) for c in p.coords] for p in points)]
    m = sympy.Matrix(rows)
    if len(points) == 6:
        return m.det() == 0
    return all(m.extract(list(rows6), list(range(6))).det() == 0
               for rows6 in itertools.combinations(range(len(points)), 6))


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 7), st.lists(st.tuples(*[st.integers(-4, 4)] * 3).filter(any), min_size=7, max_size=7),
       st.booleans())
def test_conic_test_matches_determinant(n, raw, force_conic):
    if force_conic:
        pts = [ProjPoint(t * t, 1, t) for t in range(n - 1)] + [ProjPoint(1, 0, 0)]
        pts = pts[:n]
    else:
        pts = [ProjPoint(*p) for p in raw[:n]]
    assert on_common_conic(pts) == _sympy_conic_oracle(pts)


def test_json_round_trip():
    for case in ("K6", "K5", "K4nn", "K4n"):
        cfg = sample_config(case)
        again = BurniatConfig.from_json(cfg.to_json())
        assert again.lines == cfg.lines and again.extra_points == cfg.extra_points
        assert again.params == cfg.params and again.case == case


def test_from_json_params_only():
    obj = {"case": "K6", "params": {"a": ["2", "3", "5"], "b": [[7, 1], {"n": "11", "d": "1"}, 13]}}
    assert BurniatConfig.from_json(obj).lines == sample_config("K6").lines


def test_from_json_rejects_floats():
    with pytest.raises(InputError):
        BurniatConfig.from_json({"params": {"a": [2.0, 3, 5], "b": [7, 11, 13]}})
