# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Information measures for discrete (X, Y, Z).

All logarithms are natural, so values are in nats. Summands of cells with
zero mass are omitted, which is the usual ``0 log 0 = 0`` convention and
also the convention for empty cells of a sample.
"""

from __future__ import absolute_import, division, print_function
from .errors import AbsoluteContinuityError, InvalidParameterError
from .model import JointPmf, as_table, check_same_space
import numpy as np

import logging
log = logging.getLogger(__name__)


class CmiValue(float):
    """
    A conditional mutual information in nats.

    The value is clamped at zero. The unclamped value is kept in
    :py:attr:`raw` for diagnostics.
    """

    def __new__(cls, raw):
        instance = super(CmiValue, cls).__new__(cls, max(float(raw), 0.))
        instance.raw = float(raw)
        return instance

    @property
    def value(self):
        return float(self)

    def __repr__(self):
        return 'CmiValue({!r})'.format(float(self))


class MixtureParam(object):
    """
    Shrinkage weight lambda of the mixture towards the CI projection.
    """

    def __init__(self, value):
        """
        :param float value: The weight, in [0, 1].
        :raise ~cmi_resampling.errors.InvalidParameterError:
            If the weight lies outside [0, 1].
        """
        super(MixtureParam, self).__init__()
        value = float(value)
        if not 0. <= value <= 1.:
            raise InvalidParameterError("lambda={!r} not in [0, 1]"
                                        .format(value))
        self.value = value

    def __float__(self):
        return self.value

    def __repr__(self):
        return 'MixtureParam({!r})'.format(self.value)


def _margins(tables):
    t_xz = tables.sum(axis=-2, keepdims=True)
    t_yz = tables.sum(axis=-3, keepdims=True)
    t_z = tables.sum(axis=(-3, -2), keepdims=True)
    return t_xz, t_yz, t_z


def cmi_of_tables(tables):
    """
    Unclamped CMI of one or more non-negative tables.

    The tables need not be normalised; the sum of the summands is divided by
    the total mass of each table, so raw counts yield the plug-in estimate
    directly without forming intermediate ratios of zeros.

    :param numpy.ndarray tables: Array of shape ``(..., I, J, K)``.
    :return: Array of shape ``tables.shape[:-3]``.
    :rtype: numpy.ndarray
    """
    tables = np.asarray(tables, dtype=float)
    t_xz, t_yz, t_z = _margins(tables)
    positive = tables > 0.
    # one ratio of products: exactly 1 on cells of integer CI tables
    numerator = np.where(positive, tables * t_z, 1.)
    denominator = np.where(positive, t_xz * t_yz, 1.)
    log_ratio = np.log(numerator / denominator)
    total = tables.sum(axis=(-3, -2, -1))
    return np.where(positive, tables * log_ratio, 0.).sum(axis=(-3, -2, -1)) \
        / total


def cmi(p):
    """
    Conditional mutual information I(X; Y | Z) of a distribution.

    :param JointPmf p: The distribution.
    :rtype: CmiValue
    """
    return CmiValue(cmi_of_tables(p.table))


def cmi_hat(counts):
    """
    Plug-in estimate of I(X; Y | Z) from cell counts.

    Summands of empty cells are omitted.

    :param CellCounts counts: The counts, with n >= 1.
    :rtype: CmiValue
    """
    return CmiValue(cmi_of_tables(counts.table))


def pearson_of_tables(tables):
    """
    Stratified Pearson statistic of one or more count tables.

    Cells whose expected count n(x,z)n(y,z)/n(z) is zero are skipped.

    :param numpy.ndarray tables: Array of shape ``(..., I, J, K)``.
    :rtype: numpy.ndarray
    """
    tables = np.asarray(tables, dtype=float)
    t_xz, t_yz, t_z = _margins(tables)
    with np.errstate(divide='ignore', invalid='ignore'):
        expected = np.where(t_z > 0., t_xz * t_yz / t_z, 0.)
        terms = np.where(expected > 0.,
                         (tables - expected) ** 2 / expected, 0.)
    return terms.sum(axis=(-3, -2, -1))


def pearson_chi2(counts):
    """
    Stratified Pearson chi-square statistic of cell counts.

    :param CellCounts counts: The counts.
    :rtype: float
    """
    return float(pearson_of_tables(counts.table))


def _two_n_cmi(flat_counts, space):
    tables = as_table(flat_counts, space)
    n = tables.sum(axis=(-3, -2, -1))
    return 2. * n * cmi_of_tables(tables)


def _pearson(flat_counts, space):
    return pearson_of_tables(as_table(flat_counts, space))


#: Test statistics computed from flat count arrays of shape (..., I*J*K).
STATISTICS = {
    'cmi': _two_n_cmi,
    'pearson': _pearson,
}


def statistic_of_counts(flat_counts, space, statistic='cmi'):
    """
    Evaluate a test statistic on one or more flat count arrays.

    ``'cmi'`` is 2n times the plug-in CMI, ``'pearson'`` the stratified
    Pearson statistic. Both evaluate identical tables to identical values,
    which keeps ties between original and resampled statistics exact.

    :param numpy.ndarray flat_counts: Array of shape ``(..., I*J*K)``.
    :param LabelSpace space: The label space.
    :param str statistic: Name of the statistic.
    :rtype: numpy.ndarray
    """
    try:
        function = STATISTICS[statistic]
    except KeyError:
        raise InvalidParameterError("unknown statistic {!r}"
                                    .format(statistic))
    return function(np.asarray(flat_counts), space)


def kl_divergence(p, q):
    """
    Kullback-Leibler divergence D(p || q) in nats.

    :param JointPmf p: First distribution.
    :param JointPmf q: Second distribution, on the same label space.
    :rtype: float
    :raise ~cmi_resampling.errors.AbsoluteContinuityError:
        If q vanishes on a cell where p is positive.
    """
    check_same_space(p, q)
    support = p.probs > 0.
    if np.any(q.probs[support] <= 0.):
        raise AbsoluteContinuityError()
    ps, qs = p.probs[support], q.probs[support]
    return float(np.sum(ps * (np.log(ps) - np.log(qs))))


def ci_projection(p):
    """
    Kullback-Leibler projection of p onto conditionally independent laws.

    Returns p(x|z) p(y|z) p(z). Strata with p(z) = 0 receive zero mass.

    :param JointPmf p: The distribution.
    :rtype: JointPmf
    """
    p_z = p.p_z()
    with np.errstate(divide='ignore', invalid='ignore'):
        table = np.where(p_z > 0.,
                         p.p_xz()[:, None, :] * p.p_yz()[None, :, :] / p_z,
                         0.)
    return JointPmf(p.space, table.reshape(-1, order='F'))


def mix(p, lam):
    """
    Mixture lambda * p_ci + (1 - lambda) * p of p with its CI projection.

    :param JointPmf p: The distribution.
    :param lam: The weight, a float or :class:`MixtureParam`.
    :rtype: JointPmf
    """
    if not isinstance(lam, MixtureParam):
        lam = MixtureParam(lam)
    if lam.value == 0.:
        return p
    projection = ci_projection(p)
    if lam.value == 1.:
        return projection
    return JointPmf(p.space,
                    lam.value * projection.probs + (1. - lam.value) * p.probs)


def min_cell_prob(p):
    """
    Smallest cell probability of p.

    :param JointPmf p: The distribution.
    :rtype: float
    """
    return float(p.probs.min())
