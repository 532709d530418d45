# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .errors import LabelSpaceError, EmptySampleError, OutOfRangeError, \
    InvalidPmfError, InvalidDataError, DimensionMismatchError
import numpy as np
import pandas as pd

import logging
log = logging.getLogger(__name__)

#: Tolerance for the total mass of a probability mass function.
PMF_SUM_TOLERANCE = 1e-12


def as_table(flat, space):
    """
    View flat cell arrays as tables indexed ``[..., x, y, z]``.

    The flat index is ``x + I*y + I*J*z``, so a trailing axis of length
    ``I*J*K`` is reshaped into ``(K, J, I)`` and the three axes are reversed.

    :param numpy.ndarray flat: Array whose last axis runs over the cells.
    :param LabelSpace space: The label space of the cells.
    :return: Array of shape ``flat.shape[:-1] + (I, J, K)``.
    :rtype: numpy.ndarray
    """
    flat = np.asarray(flat)
    if flat.shape[-1] != space.total_cells:
        raise DimensionMismatchError(
            "expected {} cells, got {}".format(space.total_cells,
                                               flat.shape[-1]))
    shape = flat.shape[:-1] + (space.size_z, space.size_y, space.size_x)
    return np.swapaxes(flat.reshape(shape), -1, -3)


def _frozen(array):
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


class LabelSpace(object):
    """
    Sizes of the supports of X, Y and Z.

    Z is a single categorical variable here. A vector of conditioning
    variables is flattened to one index before it enters the data model.
    """

    def __init__(self, size_x, size_y, size_z):
        """
        :param int size_x: Number of values of X (at least 2).
        :param int size_y: Number of values of Y (at least 2).
        :param int size_z: Number of strata of Z (at least 1).
        :raise ~cmi_resampling.errors.LabelSpaceError:
            If a size is not an integer or below its minimum.
        """
        super(LabelSpace, self).__init__()
        sizes = (size_x, size_y, size_z)
        if any(int(s) != s for s in sizes):
            raise LabelSpaceError("sizes must be integers, got {}"
                                  .format(sizes))
        if size_x < 2 or size_y < 2 or size_z < 1:
            raise LabelSpaceError("need I >= 2, J >= 2, K >= 1, got {}"
                                  .format(sizes))

        #: Number of values of X (I).
        self.size_x = int(size_x)

        #: Number of values of Y (J).
        self.size_y = int(size_y)

        #: Number of strata of Z (K).
        self.size_z = int(size_z)

    @property
    def shape(self):
        return self.size_x, self.size_y, self.size_z

    @property
    def total_cells(self):
        return self.size_x * self.size_y * self.size_z

    @property
    def asymptotic_df(self):
        """
        Degrees of freedom (I-1)(J-1)K of the limiting chi-square law.
        """
        return (self.size_x - 1) * (self.size_y - 1) * self.size_z

    def flat_index(self, x, y, z):
        """
        Flat index ``x + I*y + I*J*z`` of a cell.

        :raise ~cmi_resampling.errors.OutOfRangeError:
            If a coordinate lies outside the label space.
        """
        for name, value, size in (('x', x, self.size_x),
                                  ('y', y, self.size_y),
                                  ('z', z, self.size_z)):
            if not 0 <= value < size:
                raise OutOfRangeError("{}={} not in [0, {})"
                                      .format(name, value, size))
        return int(x + self.size_x * y + self.size_x * self.size_y * z)

    def unflat(self, index):
        """
        Cell coordinates ``(x, y, z)`` of a flat index.

        :raise ~cmi_resampling.errors.OutOfRangeError:
            If the index lies outside ``[0, I*J*K)``.
        """
        if not 0 <= index < self.total_cells:
            raise OutOfRangeError("index {} not in [0, {})"
                                  .format(index, self.total_cells))
        index = int(index)
        x = index % self.size_x
        y = (index // self.size_x) % self.size_y
        z = index // (self.size_x * self.size_y)
        return x, y, z

    def cell_coordinates(self):
        """
        Coordinates of all cells in flat order.

        :return: Three integer arrays ``(xs, ys, zs)`` of length ``I*J*K``.
        :rtype: tuple
        """
        index = np.arange(self.total_cells)
        xs = index % self.size_x
        ys = (index // self.size_x) % self.size_y
        zs = index // (self.size_x * self.size_y)
        return xs, ys, zs

    def __eq__(self, other):
        return isinstance(other, LabelSpace) and self.shape == other.shape

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.shape)

    def __repr__(self):
        return 'LabelSpace(I={}, J={}, K={})'.format(*self.shape)


def flat_index(x, y, z, space):
    """
    Flat index of the cell ``(x, y, z)`` in ``space``.

    :param int x: Value of X.
    :param int y: Value of Y.
    :param int z: Stratum of Z.
    :param LabelSpace space: The label space.
    :return: The flat index ``x + I*y + I*J*z``.
    :rtype: int
    """
    return space.flat_index(x, y, z)


def unflat(index, space):
    """
    Inverse of :func:`flat_index`.

    :return: The coordinates ``(x, y, z)``.
    :rtype: tuple
    """
    return space.unflat(index)


def check_same_space(a, b):
    if a.space != b.space:
        raise DimensionMismatchError("{!r} vs {!r}".format(a.space, b.space))


class JointPmf(object):
    """
    Dense probability mass function of (X, Y, Z).

    The probabilities are stored as a read-only flat array in cell order.
    Marginal and conditional tables are returned as arrays indexed by the
    variables in the order of their names, e.g. :meth:`p_xz` is indexed
    ``[x, z]``.
    """

    def __init__(self, space, probs, tolerance=PMF_SUM_TOLERANCE):
        """
        :param LabelSpace space: The label space.
        :param probs: Flat probabilities of length ``I*J*K``.
        :param float tolerance: Allowed deviation of the total mass from 1.
        :raise ~cmi_resampling.errors.InvalidPmfError:
            If an entry is negative or not finite, or the entries do not sum
            to one.
        """
        super(JointPmf, self).__init__()
        probs = np.asarray(probs, dtype=float)
        if probs.shape != (space.total_cells,):
            raise DimensionMismatchError(
                "expected {} probabilities, got shape {}"
                .format(space.total_cells, probs.shape))
        if not np.all(np.isfinite(probs)) or np.any(probs < 0.):
            raise InvalidPmfError("entries must be finite and non-negative")
        total = probs.sum()
        if abs(total - 1.) > tolerance:
            raise InvalidPmfError("entries sum to {!r}".format(total))

        #: The label space.
        self.space = space

        #: Read-only flat probabilities.
        self.probs = _frozen(probs)

    @classmethod
    def from_table(cls, table, **kwargs):
        """
        Create an instance from a table indexed ``[x, y, z]``.
        """
        table = np.asarray(table, dtype=float)
        space = LabelSpace(*table.shape)
        return cls(space, table.reshape(-1, order='F'), **kwargs)

    @classmethod
    def uniform(cls, space):
        return cls(space, np.full(space.total_cells, 1. / space.total_cells))

    @property
    def table(self):
        """
        Read-only view of the probabilities indexed ``[x, y, z]``.
        """
        return as_table(self.probs, self.space)

    def prob(self, x, y, z):
        return float(self.probs[self.space.flat_index(x, y, z)])

    def p_z(self):
        return self.table.sum(axis=(0, 1))

    def p_xz(self):
        return self.table.sum(axis=1)

    def p_yz(self):
        return self.table.sum(axis=0)

    def p_x_given_z(self):
        """
        Conditional table p(x|z) indexed ``[x, z]``.

        Columns of strata with p(z) = 0 are zero.
        """
        return _conditional(self.p_xz(), self.p_z())

    def p_y_given_z(self):
        """
        Conditional table p(y|z) indexed ``[y, z]``.

        Columns of strata with p(z) = 0 are zero.
        """
        return _conditional(self.p_yz(), self.p_z())

    def is_strictly_positive(self):
        return bool(np.all(self.probs > 0.))

    def __eq__(self, other):
        return isinstance(other, JointPmf) and self.space == other.space \
            and np.array_equal(self.probs, other.probs)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'JointPmf({!r})'.format(self.space)


def _conditional(joint, marginal):
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(marginal > 0., joint / marginal, 0.)


def _as_labels(name, values):
    """
    Convert one data column to int64 labels.

    :raise ~cmi_resampling.errors.InvalidDataError:
        If a value is missing or not numeric.
    :raise ~cmi_resampling.errors.OutOfRangeError:
        If a value is not an integer.
    """
    values = np.asarray(values).reshape(-1)
    try:
        numeric = values.astype(np.float64)
    except (TypeError, ValueError):
        raise InvalidDataError("{} values must be numeric".format(name))
    if not np.all(np.isfinite(numeric)):
        raise InvalidDataError("{} has missing values".format(name))
    labels = numeric.astype(np.int64)
    if not np.array_equal(labels, numeric):
        raise OutOfRangeError("{} values must be integers".format(name))
    return labels


class Dataset(object):
    """
    An ordered sample of n triples (x, y, z) with a declared label space.

    The coordinates are held in three read-only integer arrays.
    """

    def __init__(self, space, x, y, z):
        """
        :param LabelSpace space: The label space.
        :param x: Values of X, one per observation.
        :param y: Values of Y, one per observation.
        :param z: Strata of Z, one per observation.
        :raise ~cmi_resampling.errors.EmptySampleError:
            If there are no observations.
        :raise ~cmi_resampling.errors.OutOfRangeError:
            If a coordinate is not an integer or lies outside the label
            space.
        :raise ~cmi_resampling.errors.InvalidDataError:
            If a coordinate is missing or not numeric.
        """
        super(Dataset, self).__init__()
        x, y, z = (_as_labels(name, c)
                   for name, c in (('x', x), ('y', y), ('z', z)))
        if not len(x) == len(y) == len(z):
            raise DimensionMismatchError(
                "columns have lengths {}, {}, {}"
                .format(len(x), len(y), len(z)))
        if len(x) == 0:
            raise EmptySampleError()
        for name, values, size in (('x', x, space.size_x),
                                   ('y', y, space.size_y),
                                   ('z', z, space.size_z)):
            if values.min() < 0 or values.max() >= size:
                raise OutOfRangeError("{} values must lie in [0, {})"
                                      .format(name, size))

        #: The label space.
        self.space = space

        #: Values of X (read-only int64 array).
        self.x = _frozen(x)

        #: Values of Y (read-only int64 array).
        self.y = _frozen(y)

        #: Strata of Z (read-only int64 array).
        self.z = _frozen(z)

    @classmethod
    def from_rows(cls, space, rows):
        """
        Create an instance from a sequence of ``(x, y, z)`` triples.
        """
        rows = np.asarray(list(rows)).reshape(-1, 3)
        return cls(space, rows[:, 0], rows[:, 1], rows[:, 2])

    @property
    def n(self):
        return len(self.x)

    def __len__(self):
        return self.n

    @property
    def rows(self):
        """
        The observations as a list of ``(x, y, z)`` tuples.
        """
        return [(int(a), int(b), int(c))
                for a, b, c in zip(self.x, self.y, self.z)]

    def cells(self):
        """
        Flat cell index of every observation.
        """
        return self.x + self.space.size_x * self.y + \
            self.space.size_x * self.space.size_y * self.z

    def with_x(self, x):
        """
        Copy of the sample with the values of X replaced.
        """
        return Dataset(self.space, x, self.y, self.z)

    def to_frame(self):
        return pd.DataFrame({'x': self.x, 'y': self.y, 'z': self.z},
                            columns=['x', 'y', 'z'])

    def to_csv(self, path_or_buf):
        """
        Write the sample as CSV with the header ``x,y,z``.

        :param path_or_buf: File name or writable file-like object.
        """
        self.to_frame().to_csv(path_or_buf, index=False)

    @classmethod
    def read_csv(cls, path_or_buf, space=None):
        """
        Read a sample from CSV with the columns ``x``, ``y`` and ``z``.

        :param path_or_buf: File name or readable file-like object.
        :param LabelSpace space:
            The declared label space. If omitted, the sizes are inferred as
            one more than the largest value found in each column.
        :rtype: Dataset
        """
        try:
            frame = pd.read_csv(path_or_buf, comment='#')
        except pd.errors.EmptyDataError:
            raise EmptySampleError()
        except pd.errors.ParserError as e:
            raise InvalidDataError(str(e))
        missing = {'x', 'y', 'z'} - set(frame.columns)
        if missing:
            raise DimensionMismatchError(
                "missing columns: {}".format(', '.join(sorted(missing))))
        if len(frame) == 0:
            raise EmptySampleError()
        x, y, z = (_as_labels(name, frame[name].values)
                   for name in ('x', 'y', 'z'))
        if space is None:
            space = LabelSpace(max(int(x.max()) + 1, 2),
                               max(int(y.max()) + 1, 2),
                               int(z.max()) + 1)
        return cls(space, x, y, z)

    def __repr__(self):
        return 'Dataset({!r}, n={})'.format(self.space, self.n)


class CellCounts(object):
    """
    Contingency counts n(x, y, z) with their margins.
    """

    def __init__(self, space, counts):
        """
        :param LabelSpace space: The label space.
        :param counts: Flat non-negative integer counts of length ``I*J*K``.
        """
        super(CellCounts, self).__init__()
        raw = np.asarray(counts)
        counts = raw.astype(np.int64)
        if counts.shape != (space.total_cells,):
            raise DimensionMismatchError(
                "expected {} counts, got shape {}"
                .format(space.total_cells, counts.shape))
        if np.any(counts < 0) or not np.array_equal(counts, raw):
            raise InvalidPmfError("counts must be non-negative integers")

        #: The label space.
        self.space = space

        #: Read-only flat counts.
        self.counts = _frozen(counts)

        #: Total number of observations.
        self.n = int(counts.sum())

    @property
    def table(self):
        """
        Read-only view of the counts indexed ``[x, y, z]``.
        """
        return as_table(self.counts, self.space)

    def n_xz(self):
        return self.table.sum(axis=1)

    def n_yz(self):
        return self.table.sum(axis=0)

    def n_z(self):
        return self.table.sum(axis=(0, 1))

    def __eq__(self, other):
        return isinstance(other, CellCounts) and self.space == other.space \
            and np.array_equal(self.counts, other.counts)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'CellCounts({!r}, n={})'.format(self.space, self.n)


def count(data):
    """
    Tally the observations of a sample per cell.

    :param Dataset data: The sample.
    :rtype: CellCounts
    """
    counts = np.bincount(data.cells(), minlength=data.space.total_cells)
    return CellCounts(data.space, counts)


def empirical_pmf(counts):
    """
    Relative frequencies n(x, y, z)/n.

    :param CellCounts counts: The cell counts.
    :rtype: JointPmf
    :raise ~cmi_resampling.errors.EmptySampleError: If n = 0.
    """
    if counts.n == 0:
        raise EmptySampleError()
    return JointPmf(counts.space, counts.counts / float(counts.n))
