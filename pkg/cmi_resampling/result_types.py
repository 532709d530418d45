# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from collections import OrderedDict
import math

import logging
log = logging.getLogger(__name__)


class Reference(object):
    """
    Describes the reference distribution a p-value was computed from:
    either ``resampled`` with B resampled statistics, or ``chisq`` with df
    degrees of freedom.
    """

    RESAMPLED = 'resampled'
    CHISQ = 'chisq'

    def __init__(self, kind, value):
        super(Reference, self).__init__()

        #: ``'resampled'`` or ``'chisq'``.
        self.kind = kind

        #: B (int) for resampled references, df (float) for chi-square.
        self.value = value

    @classmethod
    def resampled(cls, B):
        return cls(cls.RESAMPLED, int(B))

    @classmethod
    def chisq(cls, df):
        return cls(cls.CHISQ, float(df))

    def __eq__(self, other):
        return isinstance(other, Reference) and \
            (self.kind, self.value) == (other.kind, other.value)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.value))

    def __str__(self):
        if self.kind == self.RESAMPLED:
            return 'resampled(B={})'.format(self.value)
        return 'chisq(df={:.6g})'.format(self.value)

    __repr__ = __str__


class TestOutcome(object):
    """
    Result of one conditional independence test on one sample.

    The :py:attr:`statistic` is the value for the original sample (2n times
    the plug-in CMI unless another statistic was requested), the
    :py:attr:`p_value` is derived from the :py:attr:`reference`.
    """

    __test__ = False  # not a pytest test class

    def __init__(self, test, statistic, p_value, reference, alpha,
                 resampled_stats=None, df=None, degenerate=False):
        """
        :param str test: ``'exact'``, ``'df_estimation'`` or
                         ``'asymptotic'``.
        :param float statistic: Statistic of the original sample.
        :param float p_value: The p-value, in (0, 1].
        :param Reference reference: The reference distribution.
        :param float alpha: The significance level.
        :param resampled_stats: The resampled statistics, if any.
        :param float df: Degrees of freedom used by chi-square references.
        :param bool degenerate: Whether the df fell back to its floor.
        """
        super(TestOutcome, self).__init__()

        #: Name of the test.
        self.test = test

        #: The statistic of the original sample (float).
        self.statistic = float(statistic)

        #: The p-value (float).
        self.p_value = float(p_value)

        #: The reference distribution (:class:`Reference`).
        self.reference = reference

        #: The significance level (float).
        self.alpha = float(alpha)

        #: Whether the null hypothesis is rejected, i.e. p-value <= alpha.
        self.reject = self.p_value <= self.alpha

        #: The resampled statistics T*_1 .. T*_B (list of float) or None.
        self.resampled_stats = None if resampled_stats is None \
            else [float(t) for t in resampled_stats]

        #: Degrees of freedom of a chi-square reference, otherwise None.
        self.df = None if df is None else float(df)

        #: True if the estimated df was replaced by its floor.
        self.degenerate = bool(degenerate)

    def as_dict(self):
        return OrderedDict([
            ('test', self.test),
            ('statistic', self.statistic),
            ('p_value', self.p_value),
            ('reference', str(self.reference)),
            ('alpha', self.alpha),
            ('reject', self.reject),
            ('degenerate', self.degenerate),
        ])

    def __str__(self):
        return '{}: T = {:.6g}, p = {:.6g} ({}) -> {}'.format(
            self.test, self.statistic, self.p_value, self.reference,
            'reject' if self.reject else 'accept')


class _Row(object):
    """
    Base of all experiment result rows; subclasses list their
    :py:attr:`COLUMNS` in output order.
    """

    COLUMNS = ()

    def __init__(self, **values):
        super(_Row, self).__init__()
        missing = set(self.COLUMNS) - set(values)
        if missing:
            raise TypeError("missing columns: {}".format(sorted(missing)))
        for column in self.COLUMNS:
            setattr(self, column, values[column])

    def as_dict(self):
        return OrderedDict((c, getattr(self, c)) for c in self.COLUMNS)

    def __eq__(self, other):
        return type(self) is type(other) and self.as_dict() == other.as_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, ', '.join(
            '{}={!r}'.format(k, v) for k, v in self.as_dict().items()))


class ExperimentRow(_Row):
    """
    Rejection rate of one test for one (model, scheme, frac, lambda) cell of
    a level/power experiment.
    """

    COLUMNS = ('model', 'scheme', 'test', 'frac', 'n', 'lambda',
               'rejection_rate', 'standard_error', 'repetitions', 'seed')

    @classmethod
    def from_rejections(cls, rejections, repetitions, **values):
        """
        Create a row from the number of rejections.

        :param int rejections: Number of rejecting repetitions.
        :param int repetitions: Number of repetitions.
        """
        rate = rejections / float(repetitions)
        values.update(rejection_rate=rate, repetitions=repetitions,
                      standard_error=math.sqrt(rate * (1. - rate) /
                                               repetitions))
        return cls(**values)

    def __str__(self):
        return '{} {} {} frac={} lambda={}: {:.4f} +- {:.4f}'.format(
            self.model, self.scheme, self.test, self.frac,
            getattr(self, 'lambda'), self.rejection_rate,
            self.standard_error)


class DfMeanRow(_Row):
    """
    Mean of 2n CMI under the null compared with its CP-resampled estimate
    and the asymptotic degrees of freedom.
    """

    COLUMNS = ('model', 'frac', 'n', 'mean_2nCMI', 'mean_2nCMI_star', 'se',
               'df_asymptotic')

    def __str__(self):
        return '{} frac={}: mean {:.4f}, resampled {:.4f} +- {:.4f}, ' \
            'df {}'.format(self.model, self.frac, self.mean_2nCMI,
                           self.mean_2nCMI_star, self.se, self.df_asymptotic)


class QqRow(_Row):
    """
    One quantile level of the QQ comparison of the null distribution of
    2n CMI with its approximations.
    """

    COLUMNS = ('model', 'frac', 'n', 'quantile_level', 'q_empirical',
               'q_resampled_median', 'q_chisq_estdf_median',
               'q_chisq_asymptotic')

    def __str__(self):
        return '{} level={}: {:.4f} / {:.4f} / {:.4f} / {:.4f}'.format(
            self.model, self.quantile_level, self.q_empirical,
            self.q_resampled_median, self.q_chisq_estdf_median,
            self.q_chisq_asymptotic)


class SchemeRatioRow(_Row):
    """
    Ratio of the CP to the CR rejection rate of one test.
    """

    COLUMNS = ('model', 'test', 'frac', 'n', 'lambda', 'power_cp',
               'power_cr', 'power_cp_over_cr')

    def __str__(self):
        return '{} {} frac={}: CP/CR = {}'.format(
            self.model, self.test, self.frac, self.power_cp_over_cr)


class Table1Row(_Row):
    """
    n times the smallest cell probability of p_ci and p for one model.
    """

    COLUMNS = ('model', 'frac', 'n', 'n_min_p_ci', 'n_min_p')

    def __str__(self):
        return '{} n={}: {:.3g} / {:.3g}'.format(
            self.model, self.n, self.n_min_p_ci, self.n_min_p)
