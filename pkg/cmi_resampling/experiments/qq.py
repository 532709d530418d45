# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .base import Experiment, WorkUnit, child_stream, DATA_STREAM, \
    RESAMPLE_STREAM
from .df_mean import NULL_LAMBDA_INDEX
from ..asymptotics import chisq_quantile
from ..benchmarks import mixture_pmf, sample
from ..ci_tests import DF_FLOOR, observed_statistic, resampled_statistics
from ..resampling import ResamplePlan, Scheme
from ..result_types import QqRow
import numpy as np

import logging
log = logging.getLogger(__name__)


def capped_level(level, count):
    """
    Chi-square quantiles are infinite at level 1; levels are capped at the
    plotting position 1 - 0.5 / count of the largest of ``count`` values.
    """
    return min(level, 1. - 0.5 / count)


def qq_repetition(seed_sequence, pmf, n, plan, levels, count):
    """
    One null sample: its statistic, the quantiles of its resampled
    statistics and the chi-square quantiles with the estimated df.

    :return: ``(T, resampled quantiles, estimated-df quantiles)``
    """
    data = sample(pmf, n, child_stream(seed_sequence, DATA_STREAM))
    resampled = resampled_statistics(
        data, plan, child_stream(seed_sequence, RESAMPLE_STREAM))
    df = max(float(np.mean(resampled)), DF_FLOOR)
    estdf = np.array([chisq_quantile(capped_level(q, count), df)
                      for q in levels])
    return observed_statistic(data), np.quantile(resampled, levels), estdf


class QqExperiment(Experiment):
    """
    Quantiles of the null distribution of 2n CMI (over ``repetitions``
    samples) against the medians of the per-sample CP resampling quantiles,
    the medians of the estimated-df chi-square quantiles and the asymptotic
    chi-square quantiles.
    """

    NAME = 'qq'
    ROW_TYPE = QqRow

    def work_units(self):
        config = self.config
        plan = ResamplePlan(Scheme.CP, config.B)
        levels = list(config.quantile_levels)
        units = []
        for m, spec in enumerate(config.models):
            pmf = mixture_pmf(spec, 1.)
            for f, frac in enumerate(config.fracs):
                n = config.sample_size(spec, frac)
                units.append(WorkUnit(
                    (m, NULL_LAMBDA_INDEX, f), config.repetitions,
                    qq_repetition,
                    (pmf, n, plan, levels, config.repetitions),
                    meta={'model': spec.name, 'frac': frac, 'n': n,
                          'df': spec.space.asymptotic_df}))
        return units

    def interpret_results(self, units, results):
        rows = []
        levels = self.config.quantile_levels
        for unit, result in zip(units, results):
            statistics = np.array([r[0] for r in result])
            resampled = np.median(np.array([r[1] for r in result]), axis=0)
            estdf = np.median(np.array([r[2] for r in result]), axis=0)
            empirical = np.quantile(statistics, levels)
            for k, level in enumerate(levels):
                row = QqRow(
                    model=unit.meta['model'], frac=unit.meta['frac'],
                    n=unit.meta['n'], quantile_level=level,
                    q_empirical=float(empirical[k]),
                    q_resampled_median=float(resampled[k]),
                    q_chisq_estdf_median=float(estdf[k]),
                    q_chisq_asymptotic=chisq_quantile(
                        capped_level(level, unit.repetitions),
                        unit.meta['df']))
                log.debug("%s", row)
                rows.append(row)
            log.info("QQ %s frac=%s done", unit.meta['model'],
                     unit.meta['frac'])
        return rows

    def header_notes(self):
        return super(QqExperiment, self).header_notes() + [
            "chi-square levels capped at 1 - 0.5/repetitions"]
