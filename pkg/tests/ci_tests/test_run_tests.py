# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.ci_tests import TEST_NAMES, run_tests
from cmi_resampling.errors import InvalidParameterError
from cmi_resampling.model import Dataset, LabelSpace
from cmi_resampling.resampling import ResamplePlan
import numpy as np
import pytest


@pytest.fixture
def data(rng):
    return Dataset(LabelSpace(2, 3, 3), rng.integers(0, 2, 90),
                   rng.integers(0, 3, 90), rng.integers(0, 3, 90))


def test_all_tests(data):
    """
    Test if the exact and df-estimation tests share one set of resampled
    statistics.
    """
    outcomes = run_tests(data, ResamplePlan('CP', 25), 0.05,
                         np.random.default_rng(1))
    assert list(outcomes) == list(TEST_NAMES)
    exact, df_est, asym = (outcomes[name] for name in TEST_NAMES)
    assert exact.resampled_stats == df_est.resampled_stats
    assert df_est.df == pytest.approx(np.mean(exact.resampled_stats))
    assert asym.df == 6.
    assert exact.statistic == df_est.statistic == asym.statistic


def test_order_and_subset(data):
    outcomes = run_tests(data, ResamplePlan('CP', 5), 0.05,
                         np.random.default_rng(1),
                         tests=['asymptotic', 'exact'])
    assert list(outcomes) == ['asymptotic', 'exact']


def test_asymptotic_without_plan(data):
    outcomes = run_tests(data, None, 0.05, None, tests=['asymptotic'])
    assert list(outcomes) == ['asymptotic']


def test_resampling_without_plan(data):
    with pytest.raises(InvalidParameterError):
        run_tests(data, None, 0.05, None)


def test_unknown_test(data):
    with pytest.raises(InvalidParameterError):
        run_tests(data, ResamplePlan('CP', 5), 0.05, None,
                  tests=['exact', 'bootstrap'])


def test_same_stream_as_single_tests(data):
    """
    Test if run_tests() gives the same p-values as the exact test alone.
    """
    from cmi_resampling.ci_tests import exact_test
    plan = ResamplePlan('CP', 15)
    shared = run_tests(data, plan, 0.05, np.random.default_rng(9))
    alone = exact_test(data, plan, 0.05, np.random.default_rng(9))
    assert shared['exact'].p_value == alone.p_value
