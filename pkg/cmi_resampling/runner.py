# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .errors import AcceptanceViolationError
from .experiments import DfMeanExperiment, LevelPowerExperiment, \
    QqExperiment, SchemeRatioExperiment, Table1Experiment, level_violations
from .version import version
from itertools import chain
from joblib import Parallel, delayed
import numpy as np
import pandas as pd

import logging
log = logging.getLogger(__name__)

#: Repetitions per joblib task.
BATCH_SIZE = 20

#: Layout of the per-repetition seeds, written to CSV headers.
SEED_LAYOUT = "SeedSequence([master_seed, model, lambda, frac, repetition])" \
    " -> children (sample, resample, null sample)"


def _run_batch(function, args, seeds):
    return [function(seed, *args) for seed in seeds]


class ExperimentRunner(object):
    """
    Executes experiments with reproducible seeding and optional parallelism.

    Each repetition of a grid cell gets its own
    :class:`numpy.random.SeedSequence` keyed by the master seed, the grid
    indices and the repetition index, so results depend neither on the
    number of workers nor on the order of execution.

    This is the main entry point for running experiments from Python:

    .. code-block:: python

        from cmi_resampling import ExperimentConfig, ExperimentRunner

        runner = ExperimentRunner(ExperimentConfig(fracs=[5.],
                                                   repetitions=100))
        for row in runner.run_level_power():
            print(row)
    """

    def __init__(self, config):
        """
        :param ~cmi_resampling.config.ExperimentConfig config:
            The experiment settings.
        """
        super(ExperimentRunner, self).__init__()
        self.config = config

    def seeds(self, key, repetitions):
        """
        Seed sequences of the repetitions of one grid cell.

        :param tuple key: Grid indices ``(model, lambda, frac)``.
        :param int repetitions: Number of repetitions.
        :rtype: list(numpy.random.SeedSequence)
        """
        root = [self.config.master_seed] + list(key)
        return [np.random.SeedSequence(root + [rep])
                for rep in range(repetitions)]

    def execute(self, experiment):
        """
        Execute an experiment.

        :param ~cmi_resampling.experiments.Experiment experiment:
            The experiment to run.
        :return: The rows, in grid order.
        :rtype: list
        """
        units = experiment.work_units()
        log.info("Running %s: %d work units, n_jobs=%d", experiment.NAME,
                 len(units), self.config.n_jobs)
        results = []
        if units:
            with Parallel(n_jobs=self.config.n_jobs) as parallel:
                for unit in units:
                    seeds = self.seeds(unit.key, unit.repetitions)
                    batches = [seeds[i:i + BATCH_SIZE]
                               for i in range(0, len(seeds), BATCH_SIZE)]
                    log.debug("%r: %d batches", unit, len(batches))
                    out = parallel(delayed(_run_batch)(unit.function,
                                                       unit.args, batch)
                                   for batch in batches)
                    results.append(list(chain.from_iterable(out)))
        return experiment.interpret_results(units, results)

    def run_level_power(self):
        """
        Attained level (lambda = 1) and power (lambda < 1) of every test.

        :rtype: list(~cmi_resampling.result_types.ExperimentRow)
        """
        return self.execute(LevelPowerExperiment(self.config))

    def run_df_mean(self):
        """
        Mean of 2n CMI under the null against its CP estimate.

        :rtype: list(~cmi_resampling.result_types.DfMeanRow)
        """
        return self.execute(DfMeanExperiment(self.config))

    def run_qq(self):
        """
        Quantiles of 2n CMI under the null against its approximations.

        :rtype: list(~cmi_resampling.result_types.QqRow)
        """
        return self.execute(QqExperiment(self.config))

    def run_scheme_ratio(self):
        """
        CP over CR rejection rates.

        :rtype: list(~cmi_resampling.result_types.SchemeRatioRow)
        """
        return self.execute(SchemeRatioExperiment(self.config))

    def run_table1(self):
        """
        n times the smallest cell probabilities of the benchmark models.

        :rtype: list(~cmi_resampling.result_types.Table1Row)
        """
        return self.execute(Table1Experiment(self.config))

    def check_level(self, rows):
        """
        Raise if an exact-test row violates the level bound.

        :param list rows: Rows of :meth:`run_level_power`.
        :raise ~cmi_resampling.errors.AcceptanceViolationError:
            On the first violation.
        """
        violations = level_violations(rows, self.config.alpha)
        for row in violations:
            log.error("Level violated: %s", row)
        if violations:
            raise AcceptanceViolationError(
                "{} exact-test row(s) above the level bound, first: {}"
                .format(len(violations), violations[0]))

    def header_lines(self, experiment):
        """
        Comment lines heading the CSV output of an experiment.

        :rtype: list(str)
        """
        lines = [
            "cmi-resampling {} {}".format(version, experiment.NAME),
            "master_seed={}".format(self.config.master_seed),
        ]
        if experiment.RANDOM:
            lines.append("seeds: " + SEED_LAYOUT)
        lines.extend(experiment.header_notes())
        return lines

    def write_csv(self, experiment, rows, path_or_buf):
        """
        Write rows as CSV: ``#`` header lines followed by a table with the
        experiment's fixed column order; floats have 6 significant digits.

        :param ~cmi_resampling.experiments.Experiment experiment:
            The experiment that produced the rows.
        :param list rows: The rows.
        :param path_or_buf: File path or text buffer.
        """
        if not hasattr(path_or_buf, 'write'):
            with open(path_or_buf, 'w') as f:
                return self.write_csv(experiment, rows, f)
        frame = pd.DataFrame([row.as_dict() for row in rows],
                             columns=list(experiment.ROW_TYPE.COLUMNS))
        for line in self.header_lines(experiment):
            path_or_buf.write('# {}\n'.format(line))
        frame.to_csv(path_or_buf, index=False, float_format='%.6g',
                     na_rep='NA', lineterminator='\n')
