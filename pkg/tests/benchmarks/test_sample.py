# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.benchmarks import ModelSpec, build_pmf, sample, \
    true_conditional
from cmi_resampling.errors import InvalidParameterError, InvalidPmfError
from cmi_resampling.model import JointPmf, LabelSpace, count
import numpy as np
import pytest


def test_sample(rng):
    p = build_pmf(ModelSpec('XOR', s=3))
    data = sample(p, 320, rng)
    assert data.n == 320
    assert data.space == p.space


def test_reproducible():
    p = build_pmf(ModelSpec('YtoXZ', s=2))
    a = sample(p, 100, np.random.default_rng(5))
    b = sample(p, 100, np.random.default_rng(5))
    assert a.rows == b.rows


def test_frequencies(rng):
    """
    Test if cell frequencies of a large sample approach p.
    """
    p = build_pmf(ModelSpec('XOR', s=2))
    data = sample(p, 100000, rng)
    frequencies = count(data).counts / 100000.
    assert np.max(np.abs(frequencies - p.probs)) < 0.005


def test_zero_cells_are_never_drawn(rng):
    p = JointPmf(LabelSpace(2, 2, 1), [0.5, 0., 0., 0.5])
    counts = count(sample(p, 1000, rng)).counts
    assert counts[1] == counts[2] == 0


@pytest.mark.parametrize("n", [0, -1, 2.5])
def test_invalid_size(rng, n):
    with pytest.raises(InvalidParameterError):
        sample(JointPmf.uniform(LabelSpace(2, 2, 1)), n, rng)


def test_true_conditional():
    p = build_pmf(ModelSpec('YtoXZ', s=2))
    conditional = true_conditional(p)
    assert conditional.strata == [0, 1, 2, 3]
    assert np.allclose(conditional.as_array(4), p.p_x_given_z())


def test_true_conditional_of_empty_stratum():
    p = JointPmf(LabelSpace(2, 2, 2), [0.25] * 4 + [0.] * 4)
    with pytest.raises(InvalidPmfError):
        true_conditional(p)
