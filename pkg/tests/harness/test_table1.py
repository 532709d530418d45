# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.config import ExperimentConfig
from cmi_resampling.runner import ExperimentRunner
import pytest


def test_rows():
    """
    Test if the table lists every default model at the five sample sizes.
    """
    rows = ExperimentRunner(ExperimentConfig()).run_table1()
    assert len(rows) == 4 * 5
    assert [row.model for row in rows[::5]] == \
        ['YtoXZ', 'XZtoY', 'XYtoZ', 'XOR']
    xor = rows[15:]
    assert [row.n for row in xor] == [32, 64, 192, 320, 1280]
    assert [row.frac for row in xor] == [0.5, 1., 3., 5., 20.]
    assert [row.n_min_p_ci for row in xor] == \
        pytest.approx([0.5, 1., 3., 5., 20.])
    assert [row.n_min_p for row in xor] == \
        pytest.approx([0.2, 0.4, 1.2, 2., 8.])
