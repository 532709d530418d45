# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.errors import InvalidParameterError
from cmi_resampling.information import cmi_hat, pearson_chi2, \
    statistic_of_counts
from cmi_resampling.model import CellCounts, LabelSpace
import math
import numpy as np
import pytest


def test_two_n_cmi():
    """
    Test if the 'cmi' statistic is 2n times the plug-in CMI.
    """
    space = LabelSpace(2, 2, 1)
    value = statistic_of_counts(np.array([[1, 0, 0, 1]]), space, 'cmi')
    assert value.shape == (1,)
    assert value[0] == pytest.approx(4. * math.log(2.), abs=1e-14)


def test_batch():
    """
    Test if several count arrays are evaluated at once.
    """
    space = LabelSpace(2, 2, 2)
    batch = np.array([[3, 0, 0, 3, 1, 1, 1, 1],
                      [2, 1, 1, 2, 0, 2, 2, 0],
                      [0, 0, 0, 0, 4, 0, 0, 4]])
    values = statistic_of_counts(batch, space)
    for row, value in zip(batch, values):
        counts = CellCounts(space, row)
        assert value == pytest.approx(2. * counts.n * cmi_hat(counts).raw,
                                      abs=1e-12)


def test_pearson():
    """
    Test the stratified Pearson statistic on a perfectly dependent table.
    """
    counts = CellCounts(LabelSpace(2, 2, 1), [1, 0, 0, 1])
    assert pearson_chi2(counts) == pytest.approx(2.)
    value = statistic_of_counts(counts.counts, counts.space, 'pearson')
    assert float(value) == pytest.approx(2.)


def test_pearson_skips_empty_strata():
    counts = CellCounts(LabelSpace(2, 2, 2), [5, 0, 0, 5, 0, 0, 0, 0])
    assert pearson_chi2(counts) == pytest.approx(10.)


def test_pearson_independent():
    counts = CellCounts(LabelSpace(2, 2, 1), [2, 2, 2, 2])
    assert pearson_chi2(counts) == 0.


def test_unknown_statistic():
    with pytest.raises(InvalidParameterError):
        statistic_of_counts(np.zeros(4), LabelSpace(2, 2, 1), 'g-test')
