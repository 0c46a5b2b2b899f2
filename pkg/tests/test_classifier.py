import pytest
from hypothesis import given, settings, strategies as st

from dircrit import errors
from dircrit.classifier import (
    BIG_AND_MEDIUM,
    BIG_THEN_TWO_ONES,
    RUN_OF_TWOS,
    TWO_ONE_TWO,
    classify,
    has_pattern,
    verify_witness,
    witness_sequence,
)
from dircrit.geometry import Bipencil, ExpCross, Polygon, Tricolumnar, Z5_12

from helpers import signatures_up_to


@pytest.mark.parametrize("d,witness", [
    ((1, 1), Polygon(4)),
    ((1, 1, 1, 1, 1, 1, 1, 1), Polygon(16)),
    ((2, 2), ExpCross(2, 1, 1)),
    ((5, 3), ExpCross(2, 4, 2)),
    ((7, 1), Bipencil(7)),
    ((1, 4), Bipencil(4)),
    ((6, 1, 1), Tricolumnar(6)),
    ((1, 3, 1), Tricolumnar(3)),
    ((2, 2, 2), Z5_12()),
])
def test_positive_verdicts(d, witness):
    v = classify(d)
    assert v.realizable and v.witness == witness


@pytest.mark.parametrize("d,tag", [
    ((2, 1, 2), TWO_ONE_TWO),
    ((1, 2, 2), TWO_ONE_TWO),
    ((3, 2, 1), BIG_AND_MEDIUM),
    ((2, 2, 2, 2), RUN_OF_TWOS),
    ((2, 1, 1, 1), BIG_THEN_TWO_ONES),
    ((1, 1, 3, 1), BIG_THEN_TWO_ONES),
])
def test_negative_verdicts(d, tag):
    v = classify(d)
    assert not v.realizable and v.witness is None and v.tag == tag


def test_verdict_text():
    assert str(classify((2, 1, 2))) == "not realizable (Theorem: (2,1,2) pattern)"


def test_invalid_signature():
    with pytest.raises(errors.InvalidSignature):
        classify((3,))


def test_witness_for_unrealizable():
    with pytest.raises(errors.NotRealizable):
        witness_sequence((2, 1, 2))


def test_cyclic_patterns():
    assert has_pattern((2, 2, 1), [lambda x: x == 2, lambda x: x == 1, lambda x: x == 2])
    assert not has_pattern((2, 1, 1, 2, 1, 1), [lambda x: x == 2, lambda x: x == 1, lambda x: x == 2])


@pytest.mark.parametrize("d", [(5, 3), (7, 1), (1,) * 8, (2, 2, 2), (6, 1, 1), (1, 1)])
def test_verify_witness(d):
    assert verify_witness(d)


@pytest.mark.parametrize("d", signatures_up_to(7))
def test_verdict_consistent(d):
    v = classify(d)
    assert v.realizable == (v.witness is not None)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=6), st.integers(0, 10), st.booleans())
def test_rotation_and_reflection_invariance(d, shift, flip):
    j = shift % len(d)
    e = d[j:] + d[:j]
    if flip:
        e = e[::-1]
    a, b = classify(d), classify(e)
    assert a.realizable == b.realizable
    assert a.tag == b.tag
