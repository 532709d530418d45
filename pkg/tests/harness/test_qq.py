# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.asymptotics import chisq_quantile
from cmi_resampling.experiments.qq import capped_level
from cmi_resampling.runner import ExperimentRunner
import math
import pytest


def test_capped_level():
    assert capped_level(0.5, 500) == 0.5
    assert capped_level(1., 500) == 0.999
    assert capped_level(0.9995, 500) == 0.999


def test_rows(small_config):
    """
    Test if all quantiles are finite and ordered by level.
    """
    rows = ExperimentRunner(small_config).run_qq()
    assert len(rows) == 2 * 2
    assert [row.quantile_level for row in rows] == [0.5, 1., 0.5, 1.]
    for row in rows:
        for value in (row.q_empirical, row.q_resampled_median,
                      row.q_chisq_estdf_median, row.q_chisq_asymptotic):
            assert math.isfinite(value)
            assert value >= 0.
    for low, high in (rows[0:2], rows[2:4]):
        assert low.q_empirical <= high.q_empirical
        assert low.q_resampled_median <= high.q_resampled_median
        assert low.q_chisq_estdf_median <= high.q_chisq_estdf_median
    assert rows[0].q_chisq_asymptotic == pytest.approx(
        chisq_quantile(0.5, 4))
    assert rows[1].q_chisq_asymptotic == pytest.approx(
        chisq_quantile(1. - 0.5 / 6, 4))
