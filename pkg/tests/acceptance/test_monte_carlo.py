# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.config import DEFAULT_FRACS, ExperimentConfig
from cmi_resampling.experiments import level_bound
from cmi_resampling.experiments.level_power import LEVEL_CONTROL_FRACS
from cmi_resampling.resampling import Scheme
from cmi_resampling.runner import ExperimentRunner
import math
import pytest

pytestmark = pytest.mark.monte_carlo

EXACT_AND_DF = ['exact', 'df_estimation']


def _runner(master_seed, **settings):
    settings.setdefault('B', 50)
    return ExperimentRunner(ExperimentConfig(
        master_seed=master_seed, n_jobs=-1, tests=EXACT_AND_DF, **settings))


def test_level_control(master_seed):
    """
    Test the attained level over the default frac sweep under each model's
    projection.

    The exact tests must hold the level from frac 1.5 on for CP and from
    frac 0.75 on for CR, which is the region checked by check_level().
    Below those fracs the resampling p-value is still valid, so empty cells
    can only make the exact tests conservative. The df-estimation test
    holds the level from frac 1.5 on.
    """
    runner = _runner(master_seed, lambdas=[1.], repetitions=2000)
    rows = runner.run_level_power()
    assert sorted({row.frac for row in rows}) == list(DEFAULT_FRACS)
    assert len(rows) == 4 * len(DEFAULT_FRACS) * 2 * 2
    bound = level_bound(0.05, 2000)
    assert bound == pytest.approx(0.0646, abs=1e-4)
    checked = [row for row in rows if row.test == 'exact' and
               row.frac >= LEVEL_CONTROL_FRACS[Scheme(row.scheme)]]
    assert len(checked) == 4 * (4 + 6)
    runner.check_level(rows)
    for row in rows:
        if row.test == 'exact' or row.frac >= 1.5:
            assert row.rejection_rate <= bound, row


def test_power_ordering(master_seed):
    """
    Test if the df-estimation test is at least as powerful as the exact
    test, up to Monte Carlo error.
    """
    rows = _runner(master_seed, lambdas=[0.5], fracs=[3.],
                   repetitions=1000).run_level_power()
    by_key = {(r.model, r.scheme, r.test): r for r in rows}
    for (model, scheme, test), exact in by_key.items():
        if test != 'exact':
            continue
        df = by_key[(model, scheme, 'df_estimation')]
        assert df.rejection_rate >= \
            exact.rejection_rate - 2. * exact.standard_error, (exact, df)


def test_scheme_equivalence(master_seed):
    """
    Test if CP and CR have similar power from frac 2 on.
    """
    rows = _runner(master_seed, lambdas=[0.5], fracs=[2., 5.],
                   repetitions=1000).run_scheme_ratio()
    assert len(rows) == 4 * 2 * 2
    for row in rows:
        if min(row.power_cp, row.power_cr) == 0.:
            assert max(row.power_cp, row.power_cr) <= 0.01, row
            continue
        se = row.power_cp_over_cr * math.sqrt(
            (1. - row.power_cp) / (1000 * row.power_cp) +
            (1. - row.power_cr) / (1000 * row.power_cr))
        assert 0.9 - 2. * se <= row.power_cp_over_cr <= 1.1 + 2. * se, row


def test_df_mean_direction(master_seed):
    """
    Test the sign of the finite-sample bias of 2n CMI at frac 1 and that the
    CP estimate is closer to the true mean than the asymptotic df.
    """
    rows = _runner(master_seed, lambdas=[1.], fracs=[1.], repetitions=500,
                   null_samples=10000).run_df_mean()
    by_model = {row.model: row for row in rows}
    for name in ('YtoXZ', 'XYtoZ', 'XOR'):
        assert by_model[name].mean_2nCMI > 16., by_model[name]
    assert by_model['XZtoY'].mean_2nCMI < 16., by_model['XZtoY']
    for row in rows:
        assert row.df_asymptotic == 16
        assert abs(row.mean_2nCMI_star - row.mean_2nCMI) < \
            abs(row.df_asymptotic - row.mean_2nCMI), row
