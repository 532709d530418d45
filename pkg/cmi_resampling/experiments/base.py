# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Child stream drawing the original sample of a repetition.
DATA_STREAM = 0

#: Child stream driving the resampler of a repetition.
RESAMPLE_STREAM = 1

#: Child stream for auxiliary null samples (df-mean experiment).
AUX_STREAM = 2


def child_stream(seed_sequence, index):
    """
    The ``index``-th child of a seed sequence.

    Unlike :meth:`numpy.random.SeedSequence.spawn` this does not depend on
    how many children were spawned before.

    :rtype: numpy.random.SeedSequence
    """
    return np.random.SeedSequence(seed_sequence.entropy,
                                  spawn_key=seed_sequence.spawn_key + (index,))


class WorkUnit(object):
    """
    The Monte Carlo repetitions of one grid cell of an experiment.

    The runner calls ``function(seed_sequence, *args)`` once per repetition,
    where the seed sequence is derived from the master seed, :py:attr:`key`
    and the repetition index.
    """

    def __init__(self, key, repetitions, function, args=(), meta=None):
        """
        :param tuple key: Non-negative integer grid indices
                          ``(model, lambda, frac)``.
        :param int repetitions: Number of repetitions.
        :param callable function: Module level (picklable) function.
        :param tuple args: Further arguments of the function.
        :param dict meta: Values describing the cell, used to build rows.
        """
        super(WorkUnit, self).__init__()
        self.key = tuple(int(k) for k in key)
        self.repetitions = int(repetitions)
        self.function = function
        self.args = tuple(args)
        self.meta = dict(meta or {})

    def __repr__(self):
        return 'WorkUnit(key={}, repetitions={}, function={})'.format(
            self.key, self.repetitions, self.function.__name__)


class Experiment(object):
    """
    Base class for all experiments.

    An experiment describes its work as :class:`WorkUnit` objects and turns
    the per-repetition results into rows; the
    :class:`~cmi_resampling.runner.ExperimentRunner` executes it.
    """

    #: Name of the experiment (used in CSV headers and on the command line).
    NAME = None

    #: :class:`~cmi_resampling.result_types._Row` subclass of the output.
    ROW_TYPE = None

    #: Whether the experiment draws random samples.
    RANDOM = True

    def __init__(self, config):
        """
        :param ~cmi_resampling.config.ExperimentConfig config:
            The experiment settings.
        """
        super(Experiment, self).__init__()
        self.config = config

    def work_units(self):
        """
        :return: The work units, in output order.
        :rtype: list(WorkUnit)
        """
        return []

    def interpret_results(self, units, results):
        """
        Build the output rows.

        :param list units: The units returned by :meth:`work_units`.
        :param list results: Per unit, the list of repetition results in
                             repetition order.
        :rtype: list
        """
        raise NotImplementedError()

    def header_notes(self):
        """
        :return: Lines describing the run, written to the CSV header.
        :rtype: list(str)
        """
        config = self.config
        return [
            "repetitions={} B={} alpha={} statistic={}".format(
                config.repetitions, config.B, config.alpha, config.statistic),
            "fracs={}".format(' '.join('{:g}'.format(f)
                                       for f in config.fracs)),
        ]
