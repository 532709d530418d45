# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.errors import DimensionMismatchError, InvalidPmfError, \
    UnknownStratumError
from cmi_resampling.model import CellCounts, Dataset, LabelSpace, count
from cmi_resampling.resampling import ConditionalTable, cr_resample, \
    cr_resample_tables, tci_center
import numpy as np
import pytest


def test_degenerate_conditional(rng):
    """
    Test if one-point conditionals determine the resampled x-values.
    """
    space = LabelSpace(2, 2, 2)
    data = Dataset.from_rows(space, [(0, 0, 0), (0, 1, 0), (1, 1, 1),
                                     (1, 0, 1)])
    conditional = ConditionalTable([[0., 1.], [1., 0.]])
    resample = cr_resample(data, conditional, rng)
    assert list(resample.x) == [1, 1, 0, 0]
    assert np.array_equal(resample.y, data.y)
    assert np.array_equal(resample.z, data.z)


def test_frequencies(rng):
    """
    Test if resampled x-values follow q(x|z).
    """
    space = LabelSpace(3, 2, 2)
    data = Dataset(space, np.zeros(2000, dtype=int),
                   rng.integers(0, 2, 2000), np.repeat([0, 1], 1000))
    q = np.array([[0.2, 0.5], [0.3, 0.5], [0.5, 0.]])
    tables = cr_resample_tables(data, ConditionalTable(q), 20, rng)
    n_xz = tables.reshape(20, 2, 2, 3).sum(axis=(0, 2)).T / 20000.
    assert np.allclose(n_xz, q, atol=0.02)
    assert np.all(tables.reshape(20, 2, 2, 3)[:, 1, :, 2] == 0)


def test_y_z_margins_are_preserved(rng):
    space = LabelSpace(2, 3, 2)
    data = Dataset(space, rng.integers(0, 2, 50), rng.integers(0, 3, 50),
                   rng.integers(0, 2, 50))
    conditional = ConditionalTable([[0.3, 0.6], [0.7, 0.4]])
    for row in cr_resample_tables(data, conditional, 10, rng):
        k = CellCounts(space, row)
        assert np.array_equal(k.n_yz(), count(data).n_yz())


def test_unknown_stratum(rng):
    """
    Test if a stratum without conditional column raises UnknownStratumError.
    """
    space = LabelSpace(2, 2, 2)
    data = Dataset.from_rows(space, [(0, 0, 0), (1, 1, 1)])
    conditional = ConditionalTable([[0.5], [0.5]], strata=[0])
    with pytest.raises(UnknownStratumError) as e:
        cr_resample(data, conditional, rng)
    assert e.value.error_message == "unknown stratum in conditional"


def test_unobserved_stratum_may_be_missing(rng):
    space = LabelSpace(2, 2, 3)
    data = Dataset.from_rows(space, [(0, 0, 0), (1, 1, 2)])
    conditional = ConditionalTable([[0.5, 0.1], [0.5, 0.9]], strata=[0, 2])
    assert cr_resample_tables(data, conditional, 5, rng).shape == (5, 12)


def test_wrong_number_of_values(rng):
    data = Dataset.from_rows(LabelSpace(3, 2, 1), [(2, 0, 0)])
    with pytest.raises(DimensionMismatchError):
        cr_resample(data, ConditionalTable([[0.5], [0.5]]), rng)


def test_invalid_conditional():
    with pytest.raises(InvalidPmfError):
        ConditionalTable([[0.5, 0.5], [0.4, 0.5]])
    with pytest.raises(InvalidPmfError):
        ConditionalTable([[1.5], [-0.5]])


def test_conditional_table():
    conditional = ConditionalTable([[0.2, 0.9], [0.8, 0.1]], strata=[3, 1])
    assert conditional.strata == [1, 3]
    assert 3 in conditional and 0 not in conditional
    assert np.allclose(conditional.column(1), [0.9, 0.1])
    dense = conditional.as_array(4)
    assert np.allclose(dense[:, 3], [0.2, 0.8])
    assert np.all(np.isnan(dense[:, 0]))
    with pytest.raises(UnknownStratumError):
        conditional.column(2)


def test_conditional_csv(tmpdir):
    """
    Test if a conditional written with to_csv() is read back unchanged.
    """
    path = str(tmpdir.join('q.csv'))
    conditional = ConditionalTable([[0.1, 1. / 3], [0.9, 2. / 3]],
                                   strata=[0, 5])
    conditional.to_csv(path)
    with open(path) as f:
        assert f.readline().strip() == 'z,q0,q1'
    loaded = ConditionalTable.read_csv(path)
    assert loaded.strata == [0, 5]
    assert np.array_equal(loaded.column(5), conditional.column(5))


def test_tci_center():
    """
    Test if the CR centre is q(x|z) n(y,z)/n.
    """
    space = LabelSpace(2, 2, 1)
    data = Dataset.from_rows(space, [(0, 0, 0), (0, 1, 0), (1, 1, 0),
                                     (1, 1, 0)])
    center = tci_center(ConditionalTable([[0.3], [0.7]]), count(data))
    assert np.allclose(center.probs, [0.075, 0.175, 0.225, 0.525])


def test_x_z_margin_variance(rng):
    """
    Test if n*(x,z) varies across CR resamples with binomial variance
    n(z) q(1-q).
    """
    space = LabelSpace(2, 2, 2)
    data = Dataset(space, np.zeros(600, dtype=int), rng.integers(0, 2, 600),
                   np.repeat([0, 1], [400, 200]))
    q = np.array([[0.7, 0.4], [0.3, 0.6]])
    tables = cr_resample_tables(data, ConditionalTable(q), 20000, rng)
    n_1z = tables.reshape(20000, 2, 2, 2).sum(axis=2)[:, :, 1]
    expected = np.array([400 * 0.3 * 0.7, 200 * 0.6 * 0.4])
    assert np.allclose(n_1z.var(axis=0), expected, rtol=0.05)
    assert np.allclose(n_1z.mean(axis=0), [120., 120.], rtol=0.01)
