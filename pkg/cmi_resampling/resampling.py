# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Conditional Permutation (CP) and Conditional Randomisation (CR) resampling,
and the exact law of the CP-resampled contingency table.
"""

from __future__ import absolute_import, division, print_function
from .errors import InvalidParameterError, InvalidPmfError, \
    UnknownStratumError, EnumerationTooLargeError, DimensionMismatchError
from .model import CellCounts, JointPmf, LabelSpace
from enum import Enum
from scipy.special import gammaln
import itertools
import numpy as np
import pandas as pd

import logging
log = logging.getLogger(__name__)

#: Log-probability returned for tables violating the margin constraints.
LOG_ZERO = float('-inf')

#: Default cap on the number of enumerated tables.
ENUMERATION_CAP = 10 ** 6

# Upper bound on the number of (resample, observation) pairs drawn at once.
_CHUNK_ELEMENTS = 1 << 21


class Scheme(Enum):
    """
    Resampling scheme.
    """
    CP = 'CP'  #: Conditional Permutation.
    CR = 'CR'  #: Conditional Randomisation.


class ConditionalTable(object):
    """
    Known conditional distribution q(x|z) of X given Z, used by CR.

    Columns are indexed by stratum. Strata without a column are unknown.
    """

    def __init__(self, probs, strata=None, tolerance=1e-12):
        """
        :param probs: Array of shape ``(I, m)``, one column per stratum.
        :param strata:
            Stratum label of every column. Defaults to ``0 .. m-1``.
        :param float tolerance: Allowed deviation of column sums from 1.
        :raise ~cmi_resampling.errors.InvalidPmfError:
            If a column is negative or does not sum to one.
        """
        super(ConditionalTable, self).__init__()
        probs = np.atleast_2d(np.asarray(probs, dtype=float))
        strata = list(range(probs.shape[1])) if strata is None \
            else [int(z) for z in strata]
        if len(strata) != probs.shape[1] or len(set(strata)) != len(strata):
            raise DimensionMismatchError("one distinct stratum per column")
        if probs.shape[0] < 2:
            raise DimensionMismatchError("need at least 2 values of X")
        if np.any(probs < 0.) or not np.all(np.isfinite(probs)):
            raise InvalidPmfError("conditional probabilities must be "
                                  "finite and non-negative")
        sums = probs.sum(axis=0)
        bad = np.flatnonzero(np.abs(sums - 1.) > tolerance)
        if len(bad):
            raise InvalidPmfError("column of stratum {} sums to {!r}"
                                  .format(strata[bad[0]], sums[bad[0]]))
        self._columns = {z: probs[:, i].copy() for i, z in enumerate(strata)}

        #: Number of values of X.
        self.size_x = probs.shape[0]

    @property
    def strata(self):
        return sorted(self._columns)

    def __contains__(self, z):
        return int(z) in self._columns

    def column(self, z):
        """
        The distribution q(.|z).

        :raise ~cmi_resampling.errors.UnknownStratumError:
            If the table has no column for ``z``.
        """
        try:
            return self._columns[int(z)]
        except KeyError:
            raise UnknownStratumError("z={}".format(z))

    def as_array(self, size_z):
        """
        Dense ``(I, size_z)`` array; unknown strata are filled with NaN.
        """
        array = np.full((self.size_x, size_z), np.nan)
        for z, column in self._columns.items():
            if z < size_z:
                array[:, z] = column
        return array

    def to_frame(self):
        """
        One row per stratum with the columns ``z, q0, .., q{I-1}``.
        """
        strata = self.strata
        frame = pd.DataFrame({'z': strata})
        for x in range(self.size_x):
            frame['q{}'.format(x)] = [self._columns[z][x] for z in strata]
        return frame

    def to_csv(self, path_or_buf):
        self.to_frame().to_csv(path_or_buf, index=False, float_format='%.17g')

    @classmethod
    def read_csv(cls, path_or_buf):
        """
        Read a table written by :meth:`to_csv`.

        :param path_or_buf: File name or readable file-like object.
        :rtype: ConditionalTable
        """
        frame = pd.read_csv(path_or_buf, comment='#')
        if 'z' not in frame.columns:
            raise DimensionMismatchError("missing column z")
        size_x = 0
        while 'q{}'.format(size_x) in frame.columns:
            size_x += 1
        columns = ['q{}'.format(x) for x in range(size_x)]
        return cls(frame[columns].values.T, strata=frame['z'].values)

    def __repr__(self):
        return 'ConditionalTable(I={}, strata={})'.format(self.size_x,
                                                          self.strata)


class ResamplePlan(object):
    """
    How resampled samples are generated: scheme, count B and (for CR) the
    known conditional distribution of X given Z.
    """

    def __init__(self, scheme, B, conditional=None):
        """
        :param scheme: :class:`Scheme` member or its name (``'CP'``/``'CR'``).
        :param int B: Number of resampled samples (at least 1).
        :param ConditionalTable conditional: Required for CR.
        """
        super(ResamplePlan, self).__init__()
        try:
            scheme = Scheme(scheme)
        except ValueError:
            raise InvalidParameterError("unknown scheme {!r}".format(scheme))
        if int(B) != B or B < 1:
            raise InvalidParameterError("B={!r} must be a positive integer"
                                        .format(B))
        if scheme is Scheme.CR:
            if conditional is None:
                raise InvalidParameterError("CR requires a conditional")
            if not isinstance(conditional, ConditionalTable):
                conditional = ConditionalTable(conditional)

        #: The resampling scheme.
        self.scheme = scheme

        #: Number of resampled samples.
        self.B = int(B)

        #: Known q(x|z) (CR only).
        self.conditional = conditional

    def draw_tables(self, data, rng, size=None):
        """
        Flat cell counts of ``size`` (default B) resampled samples.

        :rtype: numpy.ndarray of shape ``(size, I*J*K)``
        """
        size = self.B if size is None else size
        if self.scheme is Scheme.CP:
            return cp_resample_tables(data, size, rng)
        return cr_resample_tables(data, self.conditional, size, rng)

    def __repr__(self):
        return 'ResamplePlan({}, B={})'.format(self.scheme.value, self.B)


def _chunks(total, n):
    step = max(1, _CHUNK_ELEMENTS // max(n, 1))
    for start in range(0, total, step):
        yield min(step, total - start)


def _tables_from_x(data, x_batch):
    space = data.space
    cells = space.total_cells
    base = space.size_x * data.y + space.size_x * space.size_y * data.z
    offsets = cells * np.arange(x_batch.shape[0])[:, None]
    flat = (x_batch + base[None, :] + offsets).ravel()
    return np.bincount(flat, minlength=cells * x_batch.shape[0]) \
        .reshape(x_batch.shape[0], cells)


class _PermutationLayout(object):
    """
    Per-stratum layout of a sample used to draw CP resamples.

    Within each stratum the positions are ordered by y and the x-values are
    sorted, so a draw depends on the stratum margins and the random stream
    only.
    """

    def __init__(self, data):
        self.positions = np.lexsort((data.y, data.z))
        self.x_pool = data.x[np.lexsort((data.x, data.z))]
        sizes = np.bincount(data.z, minlength=data.space.size_z)
        ends = np.cumsum(sizes)
        self.blocks = [(e - s, e) for s, e in zip(sizes, ends) if s > 0]

    def draw(self, n, size, rng):
        x_batch = np.empty((size, n), dtype=np.int64)
        for start, end in self.blocks:
            pos = self.positions[start:end]
            pool = self.x_pool[start:end]
            if end - start == 1:
                x_batch[:, pos] = pool
                continue
            perms = np.argsort(rng.random((size, end - start)), axis=1)
            x_batch[:, pos] = pool[perms]
        return x_batch


def cp_resample(data, rng):
    """
    Conditional Permutation resample of a sample.

    Within every stratum of Z the x-values are permuted uniformly at random;
    y and z stay in place. Strata of size one are unchanged.

    :param Dataset data: The sample.
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :rtype: Dataset
    """
    rng = np.random.default_rng(rng)
    x_new = _PermutationLayout(data).draw(data.n, 1, rng)[0]
    return data.with_x(x_new)


def cp_resample_tables(data, B, rng):
    """
    Flat cell counts of B Conditional Permutation resamples.

    :rtype: numpy.ndarray of shape ``(B, I*J*K)``
    """
    rng = np.random.default_rng(rng)
    layout = _PermutationLayout(data)
    parts = [_tables_from_x(data, layout.draw(data.n, size, rng))
             for size in _chunks(B, data.n)]
    return np.concatenate(parts, axis=0)


def _cumulative_rows(data, conditional):
    if conditional.size_x != data.space.size_x:
        raise DimensionMismatchError(
            "conditional has {} values of X, sample has {}"
            .format(conditional.size_x, data.space.size_x))
    observed = np.unique(data.z)
    missing = [int(z) for z in observed if z not in conditional]
    if missing:
        raise UnknownStratumError("z={}".format(missing[0]))
    dense = np.zeros((conditional.size_x, data.space.size_z))
    for z in observed:
        dense[:, z] = conditional.column(z)
    cdf = np.cumsum(dense, axis=0)
    cdf[-1, :] = 1.
    return cdf[:, data.z].T


def _cr_draw(cdf_rows, size, rng):
    u = rng.random((size, cdf_rows.shape[0]))
    return (u[:, :, None] >= cdf_rows[None, :, :-1]).sum(axis=2)


def cr_resample(data, conditional, rng):
    """
    Conditional Randomisation resample of a sample.

    Each x-value is redrawn independently from q(.|z) of its stratum; y and z
    stay in place.

    :param Dataset data: The sample.
    :param ConditionalTable conditional: The known q(x|z).
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :rtype: Dataset
    :raise ~cmi_resampling.errors.UnknownStratumError:
        If a stratum present in the sample has no conditional column.
    """
    rng = np.random.default_rng(rng)
    if not isinstance(conditional, ConditionalTable):
        conditional = ConditionalTable(conditional)
    cdf_rows = _cumulative_rows(data, conditional)
    return data.with_x(_cr_draw(cdf_rows, 1, rng)[0])


def cr_resample_tables(data, conditional, B, rng):
    """
    Flat cell counts of B Conditional Randomisation resamples.

    :rtype: numpy.ndarray of shape ``(B, I*J*K)``
    """
    rng = np.random.default_rng(rng)
    if not isinstance(conditional, ConditionalTable):
        conditional = ConditionalTable(conditional)
    cdf_rows = _cumulative_rows(data, conditional)
    elements = data.n * data.space.size_x
    parts = [_tables_from_x(data, _cr_draw(cdf_rows, size, rng))
             for size in _chunks(B, elements)]
    return np.concatenate(parts, axis=0)


def tci_center(conditional, counts):
    """
    Centre q(x|z) n(y,z)/n of the CR-resampled relative frequencies.

    :param ConditionalTable conditional: The known q(x|z).
    :param CellCounts counts: Counts of the original sample.
    :rtype: JointPmf
    """
    q = conditional.as_array(counts.space.size_z)
    observed = counts.n_z() > 0
    if np.any(np.isnan(q[:, observed])):
        raise UnknownStratumError()
    q = np.where(np.isnan(q), 0., q)
    table = q[:, None, :] * counts.n_yz()[None, :, :] / float(counts.n)
    return JointPmf(counts.space, table.reshape(-1, order='F'))


class TableLaw(object):
    """
    Law of the CP-resampled table given the per-stratum margins.

    Within stratum z the table follows the generalised hypergeometric law
    with row margins n(x,z) and column margins n(y,z); strata are
    independent.
    """

    def __init__(self, n_xz, n_yz):
        """
        :param n_xz: Integer array of shape ``(I, K)`` with n(x, z).
        :param n_yz: Integer array of shape ``(J, K)`` with n(y, z).
        """
        super(TableLaw, self).__init__()
        n_xz = np.asarray(n_xz, dtype=np.int64)
        n_yz = np.asarray(n_yz, dtype=np.int64)
        if n_xz.ndim != 2 or n_yz.ndim != 2 or \
                n_xz.shape[1] != n_yz.shape[1]:
            raise DimensionMismatchError("margins need shapes (I, K), (J, K)")
        if np.any(n_xz < 0) or np.any(n_yz < 0):
            raise InvalidParameterError("margins must be non-negative")
        if not np.array_equal(n_xz.sum(axis=0), n_yz.sum(axis=0)):
            raise InvalidParameterError("margins disagree on n(z)")

        #: The label space implied by the margins.
        self.space = LabelSpace(n_xz.shape[0], n_yz.shape[0], n_xz.shape[1])

        #: Row margins n(x, z).
        self.n_xz = n_xz

        #: Column margins n(y, z).
        self.n_yz = n_yz

        #: Stratum sizes n(z).
        self.n_z = n_xz.sum(axis=0)

    @classmethod
    def from_counts(cls, counts):
        """
        Table law of the CP resamples of an observed table.
        """
        return cls(counts.n_xz(), counts.n_yz())

    def log_prob(self, k):
        return table_log_prob(self, k)

    def probabilities(self, tables):
        """
        Probabilities of several tables.

        :param list tables: :class:`~cmi_resampling.model.CellCounts` objects.
        :rtype: numpy.ndarray
        """
        return np.exp([table_log_prob(self, k) for k in tables])


def table_log_prob(law, k):
    """
    Log-probability that a CP resample has the cell counts ``k``.

    :param TableLaw law: The margins.
    :param CellCounts k: The table.
    :return: The log-probability, or :data:`LOG_ZERO` if ``k`` violates the
             margins.
    :rtype: float
    """
    if k.space != law.space:
        raise DimensionMismatchError("{!r} vs {!r}".format(k.space,
                                                           law.space))
    if not (np.array_equal(k.n_xz(), law.n_xz) and
            np.array_equal(k.n_yz(), law.n_yz)):
        return LOG_ZERO
    return float(_log_factorial(law.n_xz).sum() +
                 _log_factorial(law.n_yz).sum() -
                 _log_factorial(law.n_z).sum() -
                 _log_factorial(k.counts).sum())


def _log_factorial(values):
    return gammaln(np.asarray(values, dtype=float) + 1.)


def _bounded_compositions(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    rest = int(sum(caps[1:]))
    for first in range(max(0, total - rest), min(total, caps[0]) + 1):
        for tail in _bounded_compositions(total - first, caps[1:]):
            yield (first,) + tail


def _stratum_tables(row_sums, col_sums, cap):
    tables = []

    def fill(x, remaining, rows):
        if x == len(row_sums) - 1:
            tables.append(np.array(rows + [remaining], dtype=np.int64))
            if len(tables) > cap:
                raise EnumerationTooLargeError(
                    "more than {} tables in one stratum".format(cap))
            return
        for row in _bounded_compositions(int(row_sums[x]), remaining):
            fill(x + 1, [r - c for r, c in zip(remaining, row)],
                 rows + [list(row)])

    fill(0, [int(c) for c in col_sums], [])
    return tables


def enumerate_tables(law, cap=ENUMERATION_CAP):
    """
    All cell counts compatible with the margins of a table law.

    :param TableLaw law: The margins.
    :param int cap: Maximum number of tables.
    :rtype: list(CellCounts)
    :raise ~cmi_resampling.errors.EnumerationTooLargeError:
        If there are more than ``cap`` tables.
    """
    per_stratum = []
    total = 1
    for z in range(law.space.size_z):
        tables = _stratum_tables(law.n_xz[:, z], law.n_yz[:, z], cap)
        per_stratum.append(tables)
        total *= len(tables)
        if total > cap:
            raise EnumerationTooLargeError(
                "{} tables exceed the cap of {}".format(total, cap))
    log.debug("Enumerating %d tables for %r", total, law.space)
    result = []
    for combination in itertools.product(*per_stratum):
        # stratum tables are indexed [x, y]; stack to [x, y, z]
        table = np.stack(combination, axis=-1)
        result.append(CellCounts(law.space, table.reshape(-1, order='F')))
    return result
