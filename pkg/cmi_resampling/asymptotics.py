# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Asymptotic machinery of the resampled CMI statistic.

Matrices are dense, indexed by flat cells in both dimensions (row cell
``(x, y, z)``, column cell ``(x', y', z')``).
"""

from __future__ import absolute_import, division, print_function
from .errors import NonPositivePmfError, NotConditionallyIndependentError, \
    DimensionMismatchError, InvalidParameterError
from .information import cmi
from .resampling import Scheme
from collections import namedtuple
from scipy.linalg import block_diag
from scipy.special import chdtri, gammaincc, ndtr
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Tolerance for symmetry of matrices.
SYMMETRY_TOLERANCE = 1e-12

#: Smallest eigenvalue still accepted as positive semi-definite.
PSD_TOLERANCE = -1e-10

#: Largest CMI accepted as conditional independence by :func:`m_matrix`.
CI_TOLERANCE = 1e-10


#: Result of :func:`psd_order_check`.
PsdOrder = namedtuple('PsdOrder', ['ordered', 'min_eigenvalue'])


def min_eigenvalue(matrix):
    """
    Smallest eigenvalue of a symmetric matrix.

    :param numpy.ndarray matrix: Square symmetric matrix.
    :rtype: float
    """
    matrix = np.asarray(matrix, dtype=float)
    return float(np.linalg.eigvalsh(0.5 * (matrix + matrix.T))[0])


class _CellMatrix(object):

    def __init__(self, space, entries):
        super(_CellMatrix, self).__init__()
        entries = np.asarray(entries, dtype=float)
        size = space.total_cells
        if entries.shape != (size, size):
            raise DimensionMismatchError(
                "expected ({0}, {0}), got {1}".format(size, entries.shape))
        asymmetry = np.max(np.abs(entries - entries.T)) if size else 0.
        if asymmetry > SYMMETRY_TOLERANCE * max(1., np.max(np.abs(entries))):
            raise InvalidParameterError("matrix is not symmetric ({:g})"
                                        .format(asymmetry))
        entries.setflags(write=False)

        #: The label space indexing rows and columns.
        self.space = space

        #: Read-only dense entries.
        self.entries = entries

    def __array__(self, dtype=None):
        return np.asarray(self.entries, dtype=dtype)


class CovMatrix(_CellMatrix):
    """
    Symmetric positive semi-definite covariance matrix over the cells.
    """

    def __init__(self, space, entries, check_psd=True):
        """
        :param LabelSpace space: The label space.
        :param entries: Array of shape ``(I*J*K, I*J*K)``.
        :param bool check_psd: Verify positive semi-definiteness.
        """
        super(CovMatrix, self).__init__(space, entries)
        if check_psd:
            smallest = min_eigenvalue(self.entries)
            if smallest < PSD_TOLERANCE:
                raise InvalidParameterError(
                    "matrix is not PSD (min eigenvalue {:g})"
                    .format(smallest))


class HessMatrix(_CellMatrix):
    """
    Symmetric Hessian of the CMI functional over the cells.
    """


class ChiSquareRef(object):
    """
    Chi-square reference distribution with possibly non-integer df.
    """

    def __init__(self, df):
        """
        :param float df: Degrees of freedom, strictly positive.
        :raise ~cmi_resampling.errors.InvalidParameterError: If df <= 0.
        """
        super(ChiSquareRef, self).__init__()
        df = float(df)
        if not df > 0. or not np.isfinite(df):
            raise InvalidParameterError("df={!r} must be positive"
                                        .format(df))
        self.df = df

    def sf(self, x):
        return chisq_sf(x, self)

    def quantile(self, level):
        return chisq_quantile(level, self)

    def __repr__(self):
        return 'ChiSquareRef(df={!r})'.format(self.df)


def _as_ref(ref):
    return ref if isinstance(ref, ChiSquareRef) else ChiSquareRef(ref)


def chisq_sf(x, ref):
    """
    Survival function P(chi2_df > x).

    Evaluated as the regularised upper incomplete gamma function
    Q(df/2, x/2).

    :param float x: Non-negative argument (scalar or array).
    :param ref: :class:`ChiSquareRef` or the degrees of freedom.
    :rtype: float
    """
    ref = _as_ref(ref)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.) or np.any(np.isnan(x)):
        raise InvalidParameterError("x must be non-negative")
    result = gammaincc(0.5 * ref.df, 0.5 * x)
    return float(result) if result.ndim == 0 else result


def chisq_quantile(level, ref):
    """
    Lower-tail quantile of chi2_df, the inverse of :func:`chisq_sf`.

    :param float level: Probability in [0, 1]; level 1 gives infinity.
    :param ref: :class:`ChiSquareRef` or the degrees of freedom.
    :rtype: float
    """
    ref = _as_ref(ref)
    level = np.asarray(level, dtype=float)
    if np.any(level < 0.) or np.any(level > 1.):
        raise InvalidParameterError("level must lie in [0, 1]")
    result = chdtri(ref.df, 1. - level)
    return float(result) if result.ndim == 0 else result


def std_normal_cdf(t):
    """
    Standard normal distribution function Phi.

    :param t: Scalar or array.
    """
    result = ndtr(np.asarray(t, dtype=float))
    return float(result) if result.ndim == 0 else result


class _CellTerms(object):
    """
    Marginals and conditionals of a pmf broadcast to every cell.
    """

    def __init__(self, p):
        if not p.is_strictly_positive():
            raise NonPositivePmfError()
        xs, ys, zs = p.space.cell_coordinates()
        p_xz, p_yz, p_z = p.p_xz(), p.p_yz(), p.p_z()
        self.p = p.probs
        self.p_xz = p_xz[xs, zs]
        self.p_yz = p_yz[ys, zs]
        self.p_z = p_z[zs]
        self.px_z = self.p_xz / self.p_z
        self.py_z = self.p_yz / self.p_z
        same_x = xs[:, None] == xs[None, :]
        same_y = ys[:, None] == ys[None, :]
        self.same_z = (zs[:, None] == zs[None, :]).astype(float)
        self.same_x = same_x.astype(float)
        self.same_y = same_y.astype(float)


def cmi_gradient(p):
    """
    Gradient of CMI with respect to the cell probabilities.

    :param JointPmf p: Strictly positive distribution.
    :return: Vector ``log(p(x,y,z) p(z) / (p(x,z) p(y,z)))`` over the cells.
    :rtype: numpy.ndarray
    :raise ~cmi_resampling.errors.NonPositivePmfError:
        If a cell has zero probability.
    """
    t = _CellTerms(p)
    return np.log(t.p) + np.log(t.p_z) - np.log(t.p_xz) - np.log(t.p_yz)


def cmi_hessian(p):
    """
    Hessian of CMI with respect to the cell probabilities.

    :param JointPmf p: Strictly positive distribution.
    :rtype: HessMatrix
    """
    t = _CellTerms(p)
    same_xz = t.same_x * t.same_z
    same_yz = t.same_y * t.same_z
    entries = np.diag(1. / t.p) - same_xz / t.p_xz[:, None] \
        - same_yz / t.p_yz[:, None] + t.same_z / t.p_z[:, None]
    return HessMatrix(p.space, entries)


def sigma_cp(p):
    """
    Asymptotic covariance of the CP-resampled relative frequencies.

    Block diagonal in z.

    :param JointPmf p: Strictly positive distribution.
    :rtype: CovMatrix
    """
    t = _CellTerms(p)
    row_x, row_y = t.px_z[:, None], t.py_z[:, None]
    col_x, col_y = t.px_z[None, :], t.py_z[None, :]
    bracket = row_x * row_y * col_x * col_y \
        - t.same_x * row_x * row_y * col_y \
        - t.same_y * row_x * col_x * row_y \
        + t.same_x * t.same_y * row_x * row_y
    entries = t.same_z * t.p_z[:, None] * bracket
    return CovMatrix(p.space, 0.5 * (entries + entries.T))


def sigma_cp_kron(p):
    """
    :func:`sigma_cp` built as a block diagonal of Kronecker products.

    Block z is p(z) (diag(b) - b b') (x) (diag(a) - a a') with a = p(.|z)
    of X and b = p(.|z) of Y, which matches the flat order x + I*y.

    :param JointPmf p: Strictly positive distribution.
    :rtype: CovMatrix
    """
    if not p.is_strictly_positive():
        raise NonPositivePmfError()
    px_z, py_z, p_z = p.p_x_given_z(), p.p_y_given_z(), p.p_z()
    blocks = []
    for z in range(p.space.size_z):
        a, b = px_z[:, z], py_z[:, z]
        blocks.append(p_z[z] * np.kron(np.diag(b) - np.outer(b, b),
                                       np.diag(a) - np.outer(a, a)))
    return CovMatrix(p.space, block_diag(*blocks))


def sigma_cr(p):
    """
    Asymptotic covariance of the CR-resampled relative frequencies.

    Zero unless y = y' and z = z'.

    :param JointPmf p: Strictly positive distribution.
    :rtype: CovMatrix
    """
    t = _CellTerms(p)
    scale = (t.px_z * t.py_z * t.p_z)[:, None]
    entries = t.same_y * t.same_z * scale * (t.same_x - t.px_z[None, :])
    return CovMatrix(p.space, 0.5 * (entries + entries.T))


def _check_ci(p):
    value = cmi(p).raw
    if abs(value) >= CI_TOLERANCE:
        raise NotConditionallyIndependentError("CMI = {:g}".format(value))


def m_matrix(p, which=Scheme.CP):
    """
    Product M = H Sigma of the CMI Hessian and a resampling covariance.

    At conditionally independent distributions M is idempotent with trace
    (I-1)(J-1)K and does not depend on the scheme.

    :param JointPmf p: Strictly positive CI distribution.
    :param which: :class:`~cmi_resampling.resampling.Scheme` of the
                  covariance (CP uses :func:`sigma_cp`, CR
                  :func:`sigma_cr`).
    :rtype: numpy.ndarray
    :raise ~cmi_resampling.errors.NotConditionallyIndependentError:
        If p is not conditionally independent.
    """
    _check_ci(p)
    sigma = sigma_cp(p) if Scheme(which) is Scheme.CP else sigma_cr(p)
    return cmi_hessian(p).entries.dot(sigma.entries)


def m_matrix_closed_form(p):
    """
    Closed form of :func:`m_matrix` at a CI distribution.

    Entry (r, c) equals
    I(x=x'',y=y'',z=z'') - I(x=x'',z=z'') p(y''|z'')
    - I(y=y'',z=z'') p(x''|z'') + I(z=z'') p(x''|z'') p(y''|z'').

    :param JointPmf p: Strictly positive CI distribution.
    :rtype: numpy.ndarray
    """
    _check_ci(p)
    t = _CellTerms(p)
    col_x, col_y = t.px_z[None, :], t.py_z[None, :]
    return t.same_z * (t.same_x * t.same_y - t.same_x * col_y
                       - t.same_y * col_x + col_x * col_y)


def psd_order_check(a, b):
    """
    Check the ordering a <= b, i.e. b - a positive semi-definite.

    :param a: :class:`CovMatrix` or square array.
    :param b: :class:`CovMatrix` or square array of the same size.
    :return: Whether the ordering holds and the smallest eigenvalue of
             ``b - a``.
    :rtype: PsdOrder
    :raise ~cmi_resampling.errors.DimensionMismatchError:
        If the shapes differ.
    """
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError("{} vs {}".format(a.shape, b.shape))
    smallest = min_eigenvalue(b - a)
    return PsdOrder(ordered=smallest >= PSD_TOLERANCE,
                    min_eigenvalue=smallest)
