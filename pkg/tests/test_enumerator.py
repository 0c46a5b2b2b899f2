import pytest

from dircrit import errors
from dircrit.constructor import dc_closed_form
from dircrit.core import equivalent
from dircrit.enumerator import enumerate_dc

from helpers import signatures_up_to


@pytest.mark.parametrize("d", [(1, 1), (2, 1), (3, 2)])
def test_single_class(d):
    res = enumerate_dc(d)
    assert len(res.classes) == 1
    assert len(res.shift_classes) == 1
    assert equivalent(res.classes[0], dc_closed_form(d)) is not None


@pytest.mark.parametrize("d", signatures_up_to(4))
def test_found_sequence_is_the_construction(d):
    res = enumerate_dc(d)
    assert [s.perms for s in res.sequences] == [dc_closed_form(d).perms]


def test_budget():
    with pytest.raises(errors.BudgetExceeded):
        enumerate_dc((2, 2, 1), node_limit=10)


def test_summary_line():
    res = enumerate_dc((2, 1))
    assert "1 classes (full group)" in res.summary()
