# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .base import Experiment, WorkUnit, child_stream, AUX_STREAM, \
    DATA_STREAM, RESAMPLE_STREAM
from ..benchmarks import mixture_pmf, sample
from ..ci_tests import observed_statistic, resampled_statistics
from ..resampling import ResamplePlan, Scheme
from ..result_types import DfMeanRow
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Grid index used for the null distribution (lambda = 1).
NULL_LAMBDA_INDEX = 0


def null_statistic(seed_sequence, pmf, n):
    """
    2n CMI of one sample drawn from the auxiliary stream.
    """
    data = sample(pmf, n, child_stream(seed_sequence, AUX_STREAM))
    return observed_statistic(data)


def mean_resampled_statistic(seed_sequence, pmf, n, plan):
    """
    Mean of 2n CMI* over the resampled samples of one sample.
    """
    data = sample(pmf, n, child_stream(seed_sequence, DATA_STREAM))
    return float(np.mean(resampled_statistics(
        data, plan, child_stream(seed_sequence, RESAMPLE_STREAM))))


class DfMeanExperiment(Experiment):
    """
    Under the null p_ci of every model: the mean of 2n CMI over
    ``null_samples`` samples against its CP estimate (mean of 2n CMI* over B
    resamples, averaged over ``repetitions`` samples) and the asymptotic df.
    """

    NAME = 'df-mean'
    ROW_TYPE = DfMeanRow

    def work_units(self):
        config = self.config
        plan = ResamplePlan(Scheme.CP, config.B)
        units = []
        for m, spec in enumerate(config.models):
            pmf = mixture_pmf(spec, 1.)
            for f, frac in enumerate(config.fracs):
                n = config.sample_size(spec, frac)
                key = (m, NULL_LAMBDA_INDEX, f)
                meta = {'model': spec.name, 'frac': frac, 'n': n,
                        'df': spec.space.asymptotic_df}
                units.append(WorkUnit(key, config.null_samples,
                                      null_statistic, (pmf, n), meta))
                units.append(WorkUnit(key, config.repetitions,
                                      mean_resampled_statistic,
                                      (pmf, n, plan), meta))
        return units

    def interpret_results(self, units, results):
        rows = []
        for i in range(0, len(units), 2):
            meta = units[i].meta
            null_values = np.asarray(results[i], dtype=float)
            estimates = np.asarray(results[i + 1], dtype=float)
            se = float(np.std(estimates, ddof=1) / np.sqrt(len(estimates))) \
                if len(estimates) > 1 else float('nan')
            row = DfMeanRow(model=meta['model'], frac=meta['frac'],
                            n=meta['n'],
                            mean_2nCMI=float(np.mean(null_values)),
                            mean_2nCMI_star=float(np.mean(estimates)),
                            se=se, df_asymptotic=meta['df'])
            log.info("%s", row)
            rows.append(row)
        return rows

    def header_notes(self):
        return super(DfMeanExperiment, self).header_notes() + [
            "null_samples={} scheme=CP".format(self.config.null_samples)]
