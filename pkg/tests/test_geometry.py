import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from dircrit import errors
from dircrit.constructor import dc_closed_form
from dircrit.core import (
    CentralSignature,
    central_signature,
    equivalent,
    is_centrally_symmetric,
    is_even_near_critical,
    is_noncentral_general_position,
)
from dircrit.formats import FIXTURES
from dircrit.geometry import (
    GOLDEN,
    Bipencil,
    Configuration,
    ExpCross,
    FieldScalar,
    Polygon,
    RegularPolygon,
    Tricolumnar,
    Z5_12,
    Z5_13,
    circular_sequence,
    direction,
    direction_count,
    directions,
    gen_family,
    polygon_sequence,
    sweep,
)

SQUARE = Configuration(1, ((1, 0), (-1, 0), (0, 1), (0, -1)))

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def scalars(D):
    return st.builds(lambda a, b: FieldScalar(a, b, D), rationals, rationals)


# -- FieldScalar ----------------------------------------------------------------

def test_golden_ratio_identity():
    assert GOLDEN * GOLDEN == GOLDEN + 1
    assert 1 < GOLDEN < 2


def test_sqrt2_squared():
    r2 = FieldScalar(0, 1, 2)
    assert r2 * r2 == 2
    assert (r2 * r2).D == 1


def test_rational_normalizes_field():
    x = FieldScalar(3, 0, 5)
    assert x.D == 1 and x == 3 and hash(x) == hash(3)


def test_mixed_discriminants():
    with pytest.raises(errors.MixedDiscriminants):
        FieldScalar(0, 1, 2) + FieldScalar(0, 1, 5)


def test_division_by_zero():
    with pytest.raises(errors.DivisionByZero):
        GOLDEN / FieldScalar(0)
    with pytest.raises(ZeroDivisionError):
        GOLDEN / 0


def test_unsupported_field():
    with pytest.raises(errors.InvalidParams):
        FieldScalar(1, 1, 3)


def test_sign_near_cancellation():
    # 1393/985 is a convergent of sqrt 2, just below it (difference ~3.6e-7)
    x = FieldScalar(Fraction(-1393, 985), 1, 2)
    assert x.sign() == 1
    assert (-x).sign() == -1
    assert FieldScalar(Fraction(1393, 985)) < FieldScalar(0, 1, 2)


@settings(max_examples=200)
@given(st.sampled_from([1, 2, 5]).flatmap(lambda D: st.tuples(scalars(D), scalars(D), scalars(D))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x - x == 0
    if y.sign() != 0:
        assert (x / y) * y == x
    # exact sign agrees with the float value when it is not too close to 0
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


@settings(max_examples=200)
@given(st.sampled_from([2, 5]).flatmap(lambda D: st.tuples(scalars(D), scalars(D))))
def test_total_order(xy):
    x, y = xy
    assert (x < y) + (x == y) + (x > y) == 1
    assert (x < y) == ((y - x).sign() > 0)


# -- directions -----------------------------------------------------------------------

def test_square_direction_count():
    assert direction_count(SQUARE) == 4


def test_small_cross_direction_count():
    cfg = Configuration(1, ((1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1), (0, 2), (0, -2)))
    assert direction_count(cfg) == 8


def test_all_collinear_rejected():
    cfg = Configuration(1, ((0, 0), (1, 1), (2, 2)))
    with pytest.raises(errors.AllCollinear):
        direction_count(cfg)
    with pytest.raises(errors.AllCollinear):
        circular_sequence(cfg)


def test_duplicate_points_rejected():
    with pytest.raises(errors.InvalidParams):
        Configuration(1, ((0, 0), (0, 0)))


def test_directions_sorted_by_angle():
    dirs = directions(SQUARE)
    # horizontal, then 45 degrees, vertical, 135 degrees
    assert [(float(u[0]), float(u[1])) for u in dirs] == [(1, 0), (1, 1), (0, 1), (-1, 1)]


@settings(max_examples=100)
@given(st.lists(st.tuples(rationals, rationals), min_size=4, max_size=4, unique=True))
def test_direction_equality_is_parallelism(pts):
    p, q, r, s = [(FieldScalar(x), FieldScalar(y)) for x, y in pts]
    cross = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    assert (direction(p, q) == direction(r, s)) == (cross.sign() == 0)


# -- circular sequences ----------------------------------------------------------------

def test_square_sequence():
    seq = circular_sequence(SQUARE)
    assert seq.h == 4
    assert equivalent(seq, dc_closed_form((1, 1))) is not None


def test_z5_12():
    cfg = gen_family(Z5_12())
    assert len(cfg) == 12 and cfg.D == 5
    assert direction_count(cfg) == 12
    seq = circular_sequence(cfg)
    assert seq.h == 12
    assert central_signature(seq).cyclic_class() == (2, 2, 2)
    assert equivalent(seq, dc_closed_form((2, 2, 2))) is not None


def test_z5_13_is_odd_critical():
    cfg = gen_family(Z5_13())
    assert len(cfg) == 13
    assert direction_count(cfg) == 12


def test_exp_cross_matches_realized_fixture():
    seq = sweep(ExpCross(2, 3, 3))
    assert seq.n_points == 16
    assert equivalent(seq, FIXTURES["realized_44"].load()) is not None


@pytest.mark.parametrize("lam", [2, 3, Fraction(5, 2)])
def test_exp_cross_independent_of_lambda(lam):
    seq = sweep(ExpCross(lam, 4, 2))
    assert equivalent(seq, dc_closed_form((5, 3))) is not None


def test_tricolumnar_matches_realized_fixture():
    cfg = gen_family(Tricolumnar(6))
    assert len(cfg) == 16
    assert equivalent(circular_sequence(cfg), FIXTURES["realized_611"].load()) is not None


def test_bipencil_matches_realized_fixture():
    assert equivalent(sweep(Bipencil(7)), FIXTURES["realized_71"].load()) is not None


@pytest.mark.parametrize("spec,sig", [
    (ExpCross(2, 1, 1), (2, 2)),
    (ExpCross(2, 2, 3), (3, 4)),
    (Bipencil(3), (3, 1)),
    (Tricolumnar(2), (2, 1, 1)),
    (Tricolumnar(5), (5, 1, 1)),
    (Z5_12(), (2, 2, 2)),
])
def test_family_criticality(spec, sig):
    cfg = gen_family(spec)
    assert cfg.is_centrally_symmetric()
    seq = circular_sequence(cfg)
    assert is_even_near_critical(seq)
    assert is_noncentral_general_position(seq)
    assert is_centrally_symmetric(seq) is not None
    assert central_signature(seq).cyclic_class() == CentralSignature(sig).cyclic_class()


@pytest.mark.parametrize("spec", [ExpCross(1, 2, 2), ExpCross(2, 0, 1), Bipencil(1),
                                  Tricolumnar(1), Polygon(7), Polygon(2), "nonsense"])
def test_invalid_family_params(spec):
    with pytest.raises(errors.InvalidParams):
        gen_family(spec)


# -- regular polygons ------------------------------------------------------------------

def test_polygon_square():
    seq = polygon_sequence(2)
    assert seq.h == 4
    assert equivalent(seq, circular_sequence(SQUARE)) is not None


def test_polygon_octagon_is_near_critical():
    seq = polygon_sequence(4)
    assert seq.h == 8 and is_even_near_critical(seq)


def test_polygon_16_matches_realized_fixture():
    assert equivalent(polygon_sequence(8), FIXTURES["realized_11111111"].load()) is not None


def test_polygon_family_dispatch():
    assert isinstance(gen_family(Polygon(10)), RegularPolygon)
    assert sweep(Polygon(10)).h == 10


def test_polygon_octagon_coordinates_agree():
    # the regular octagon lives in Q(sqrt 2): compare the coordinate sweep
    h = FieldScalar(0, Fraction(1, 2), 2)
    pts = [(1, 0), (h, h), (0, 1), (-h, h), (-1, 0), (-h, -h), (0, -1), (h, -h)]
    seq = circular_sequence(Configuration(2, tuple(pts)))
    assert equivalent(seq, polygon_sequence(4)) is not None


@pytest.mark.parametrize("m", [1, 0, "3"])
def test_polygon_invalid(m):
    with pytest.raises(errors.InvalidParams):
        polygon_sequence(m)


# -- invariance properties -----------------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=7, unique=True),
       st.tuples(*[st.integers(-3, 3)] * 4), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_affine_invariance(pts, mat, offset):
    a, b, c, d = mat
    assume(a * d - b * c > 0)
    cfg = Configuration(1, tuple(pts))
    assume(len(directions(cfg)) > 1)
    image = cfg.transformed(((a, b), (c, d)), offset)
    assert direction_count(image) == direction_count(cfg)
    assert equivalent(circular_sequence(image), circular_sequence(cfg)) is not None


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=2, max_size=5, unique=True))
def test_symmetric_configuration_gives_symmetric_sequence(half):
    pts = set()
    for x, y in half:
        if (x, y) != (0, 0):
            pts.update({(x, y), (-x, -y)})
    cfg = Configuration(1, tuple(sorted(pts)))
    assume(len(cfg) >= 4 and len(directions(cfg)) > 1)
    seq = circular_sequence(cfg)
    assert seq.h == direction_count(cfg)
    assert is_centrally_symmetric(seq) is not None


def test_ungar_bound_on_random_configurations():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 10)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-6, 6), rng.randint(-6, 6)))
        cfg = Configuration(1, tuple(pts))
        if len(directions(cfg)) < 2:
            continue
        seq = circular_sequence(cfg)
        assert seq.h == direction_count(cfg) >= 2 * (n // 2)
