# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Conditional independence tests based on 2n times the plug-in CMI:

- ``exact``: resampling p-value (1 + #{b: T <= T*_b}) / (1 + B),
- ``df_estimation``: chi-square with df estimated as the mean of T*_b,
- ``asymptotic``: chi-square with (I-1)(J-1)K degrees of freedom.
"""

from __future__ import absolute_import, division, print_function
from .asymptotics import chisq_sf
from .errors import InvalidParameterError
from .information import statistic_of_counts
from .model import count
from .result_types import Reference, TestOutcome
from collections import OrderedDict
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Lower bound on the estimated degrees of freedom.
DF_FLOOR = 1e-6

EXACT = 'exact'
DF_ESTIMATION = 'df_estimation'
ASYMPTOTIC = 'asymptotic'

#: Names of all tests, in output order.
TEST_NAMES = (EXACT, DF_ESTIMATION, ASYMPTOTIC)


def _check_alpha(alpha):
    if not 0. < alpha < 1.:
        raise InvalidParameterError("alpha={!r} not in (0, 1)".format(alpha))


def observed_statistic(data, statistic='cmi'):
    """
    Statistic of a sample (by default 2n times its plug-in CMI).

    :param Dataset data: The sample.
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :rtype: float
    """
    counts = count(data).counts
    return float(statistic_of_counts(counts[None, :], data.space,
                                     statistic)[0])


def resampled_statistics(data, plan, rng, statistic='cmi'):
    """
    Statistics T*_1 .. T*_B of the resampled samples of a plan.

    :param Dataset data: The sample.
    :param ~cmi_resampling.resampling.ResamplePlan plan: The plan.
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :rtype: numpy.ndarray
    """
    tables = plan.draw_tables(data, np.random.default_rng(rng))
    return statistic_of_counts(tables, data.space, statistic)


def exact_p_value(statistic, resampled):
    """
    Resampling p-value; ties count towards the numerator.

    :param float statistic: T of the original sample.
    :param resampled: The B resampled statistics.
    :rtype: float
    """
    resampled = np.asarray(resampled, dtype=float)
    exceed = int(np.count_nonzero(statistic <= resampled))
    return (1. + exceed) / (1. + len(resampled))


def exact_outcome(statistic, resampled, alpha):
    """
    Outcome of the exact test from precomputed statistics.

    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    _check_alpha(alpha)
    return TestOutcome(EXACT, statistic,
                       exact_p_value(statistic, resampled),
                       Reference.resampled(len(resampled)), alpha,
                       resampled_stats=resampled)


def df_estimation_outcome(statistic, resampled, alpha):
    """
    Outcome of the df-estimation test from precomputed statistics.

    The df is the mean of the resampled statistics; a mean at or below
    :data:`DF_FLOOR` is replaced by the floor and flagged as degenerate.

    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    _check_alpha(alpha)
    df = float(np.mean(resampled))
    degenerate = not df > DF_FLOOR
    if degenerate:
        log.debug("Estimated df %r below floor, using %r", df, DF_FLOOR)
        df = DF_FLOOR
    p_value = chisq_sf(max(statistic, 0.), df)
    return TestOutcome(DF_ESTIMATION, statistic, p_value,
                       Reference.chisq(df), alpha,
                       resampled_stats=resampled, df=df,
                       degenerate=degenerate)


def asymptotic_outcome(statistic, space, alpha):
    """
    Outcome of the asymptotic test from a precomputed statistic.

    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    _check_alpha(alpha)
    df = space.asymptotic_df
    return TestOutcome(ASYMPTOTIC, statistic,
                       chisq_sf(max(statistic, 0.), df),
                       Reference.chisq(df), alpha, df=df)


def exact_test(data, plan, alpha, rng, statistic='cmi'):
    """
    Exact resampling test of X independent of Y given Z.

    :param Dataset data: The sample.
    :param ~cmi_resampling.resampling.ResamplePlan plan: The resampling plan.
    :param float alpha: Significance level in (0, 1).
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    _check_alpha(alpha)
    return exact_outcome(observed_statistic(data, statistic),
                         resampled_statistics(data, plan, rng, statistic),
                         alpha)


def df_estimation_test(data, plan, alpha, rng, statistic='cmi'):
    """
    Chi-square test whose df is the mean of the resampled statistics.

    :param Dataset data: The sample.
    :param ~cmi_resampling.resampling.ResamplePlan plan: The resampling plan.
    :param float alpha: Significance level in (0, 1).
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    _check_alpha(alpha)
    return df_estimation_outcome(
        observed_statistic(data, statistic),
        resampled_statistics(data, plan, rng, statistic), alpha)


def asymptotic_test(data, alpha, statistic='cmi'):
    """
    Chi-square test with (I-1)(J-1)K degrees of freedom of the declared
    label space.

    :param Dataset data: The sample.
    :param float alpha: Significance level in (0, 1).
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :rtype: ~cmi_resampling.result_types.TestOutcome
    """
    return asymptotic_outcome(observed_statistic(data, statistic),
                              data.space, alpha)


def run_tests(data, plan, alpha, rng, tests=TEST_NAMES, statistic='cmi'):
    """
    Run several tests on one sample, sharing one set of resampled statistics.

    :param Dataset data: The sample.
    :param ~cmi_resampling.resampling.ResamplePlan plan:
        The resampling plan (may be None if only the asymptotic test runs).
    :param float alpha: Significance level in (0, 1).
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :param tests: Names of the tests to run.
    :param str statistic: ``'cmi'`` or ``'pearson'``.
    :return: Outcomes keyed by test name, in the order of ``tests``.
    :rtype: OrderedDict
    """
    _check_alpha(alpha)
    unknown = set(tests) - set(TEST_NAMES)
    if unknown:
        raise InvalidParameterError("unknown tests {}".format(sorted(unknown)))
    statistic_value = observed_statistic(data, statistic)
    resampled = None
    if set(tests) & {EXACT, DF_ESTIMATION}:
        if plan is None:
            raise InvalidParameterError("resampling tests need a plan")
        resampled = resampled_statistics(data, plan, rng, statistic)
    outcomes = OrderedDict()
    for name in tests:
        if name == EXACT:
            outcomes[name] = exact_outcome(statistic_value, resampled, alpha)
        elif name == DF_ESTIMATION:
            outcomes[name] = df_estimation_outcome(statistic_value,
                                                   resampled, alpha)
        else:
            outcomes[name] = asymptotic_outcome(statistic_value, data.space,
                                                alpha)
    return outcomes
