# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .base import Experiment, WorkUnit, child_stream, DATA_STREAM, \
    RESAMPLE_STREAM
from ..benchmarks import mixture_pmf, sample, true_conditional
from ..ci_tests import EXACT, run_tests
from ..resampling import ResamplePlan, Scheme
from ..result_types import ExperimentRow
import math
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Smallest frac at which the exact test is expected to hold its level,
#: per scheme.
LEVEL_CONTROL_FRACS = {Scheme.CP: 1.5, Scheme.CR: 0.75}


def level_power_repetition(seed_sequence, pmf, n, plans, tests, alpha,
                           statistic):
    """
    One repetition: draw a sample and run every test under every plan.

    All plans use the same resampling stream.

    :return: Rejections with shape ``(len(plans), len(tests))``.
    :rtype: numpy.ndarray
    """
    data = sample(pmf, n, child_stream(seed_sequence, DATA_STREAM))
    resample_stream = child_stream(seed_sequence, RESAMPLE_STREAM)
    rejections = np.zeros((len(plans), len(tests)), dtype=bool)
    for i, plan in enumerate(plans):
        outcomes = run_tests(data, plan, alpha,
                             np.random.default_rng(resample_stream),
                             tests=tests, statistic=statistic)
        for j, test in enumerate(tests):
            rejections[i, j] = outcomes[test].reject
            log.debug("%s", outcomes[test])
    return rejections


class LevelPowerExperiment(Experiment):
    """
    Rejection rates over the grid models x lambdas x fracs x schemes x tests.

    Rows with lambda = 1 are attained significance levels, the others
    are powers.
    """

    NAME = 'level-power'
    ROW_TYPE = ExperimentRow

    def _schemes(self):
        return list(self.config.schemes)

    def _plans(self, pmf, schemes):
        plans = []
        for scheme in schemes:
            conditional = true_conditional(pmf) \
                if scheme is Scheme.CR else None
            plans.append(ResamplePlan(scheme, self.config.B, conditional))
        return plans

    def work_units(self):
        config = self.config
        schemes = self._schemes()
        units = []
        for m, spec in enumerate(config.models):
            for li, lam in enumerate(config.lambdas):
                pmf = mixture_pmf(spec, lam)
                plans = self._plans(pmf, schemes)
                for f, frac in enumerate(config.fracs):
                    n = config.sample_size(spec, frac)
                    args = (pmf, n, plans, list(config.tests), config.alpha,
                            config.statistic)
                    units.append(WorkUnit(
                        (m, li, f), config.repetitions,
                        level_power_repetition, args,
                        meta={'model': spec.name, 'lambda': lam, 'frac': frac,
                              'n': n, 'schemes': schemes}))
        return units

    def _rejection_counts(self, results):
        return np.sum(np.asarray(results, dtype=int), axis=0)

    def interpret_results(self, units, results):
        rows = []
        for unit, result in zip(units, results):
            counts = self._rejection_counts(result)
            for i, scheme in enumerate(unit.meta['schemes']):
                for j, test in enumerate(self.config.tests):
                    row = ExperimentRow.from_rejections(
                        int(counts[i, j]), unit.repetitions,
                        model=unit.meta['model'], scheme=scheme.value,
                        test=test, frac=unit.meta['frac'], n=unit.meta['n'],
                        seed=self.config.master_seed,
                        **{'lambda': unit.meta['lambda']})
                    log.info("%s", row)
                    rows.append(row)
        return rows


def level_bound(alpha, repetitions):
    """
    Largest acceptable attained level: alpha + 3 sqrt(alpha (1 - alpha) / r).
    """
    return alpha + 3. * math.sqrt(alpha * (1. - alpha) / repetitions)


def level_violations(rows, alpha):
    """
    Exact-test rows under the null, in the region where the exact test
    controls its level, whose rejection rate exceeds :func:`level_bound`.

    :param list rows: :class:`~cmi_resampling.result_types.ExperimentRow`
                      objects.
    :param float alpha: The significance level.
    :rtype: list
    """
    violations = []
    for row in rows:
        if row.test != EXACT or getattr(row, 'lambda') != 1.:
            continue
        if row.frac < LEVEL_CONTROL_FRACS[Scheme(row.scheme)]:
            continue
        if row.rejection_rate > level_bound(alpha, row.repetitions):
            violations.append(row)
    return violations
