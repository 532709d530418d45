# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.errors import EmptySampleError, InvalidPmfError
from cmi_resampling.model import CellCounts, Dataset, LabelSpace, count, \
    empirical_pmf
import numpy as np
import pytest


def test_count():
    """
    Test if count() tallies the observations per flat cell.
    """
    space = LabelSpace(2, 2, 1)
    data = Dataset.from_rows(space, [(0, 0, 0), (1, 1, 0), (1, 1, 0)])
    counts = count(data)
    assert list(counts.counts) == [1, 0, 0, 2]
    assert counts.n == 3


def test_margins():
    space = LabelSpace(2, 3, 2)
    data = Dataset.from_rows(space, [(0, 0, 0), (1, 2, 0), (1, 1, 1),
                                     (0, 1, 1), (1, 1, 1)])
    counts = count(data)
    assert counts.table.sum() == 5
    assert np.array_equal(counts.n_z(), [2, 3])
    assert np.array_equal(counts.n_xz(), [[1, 1], [1, 2]])
    assert np.array_equal(counts.n_yz(), [[1, 0], [0, 3], [1, 0]])


def test_empirical_pmf():
    space = LabelSpace(2, 2, 1)
    data = Dataset.from_rows(space, [(0, 0, 0), (1, 1, 0), (1, 1, 0),
                                     (0, 1, 0)])
    p = empirical_pmf(count(data))
    assert np.allclose(p.probs, [0.25, 0., 0.25, 0.5])


def test_empirical_pmf_of_no_counts():
    with pytest.raises(EmptySampleError):
        empirical_pmf(CellCounts(LabelSpace(2, 2, 1), [0, 0, 0, 0]))


@pytest.mark.parametrize("counts", [[1, -1, 0, 0], [0.5, 0, 0, 0]])
def test_invalid_counts(counts):
    with pytest.raises(InvalidPmfError):
        CellCounts(LabelSpace(2, 2, 1), counts)
