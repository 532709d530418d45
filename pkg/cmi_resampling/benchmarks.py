# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Benchmark joint distributions of (X, Y, Z_1, ..., Z_s) with binary
variables, built by exact enumeration.

The conditioning vector is flattened little-endian:
``z = z_1 + 2 z_2 + ... + 2^(s-1) z_s``.
"""

from __future__ import absolute_import, division, print_function
from .errors import InvalidParameterError, InvalidPmfError
from .information import ci_projection, min_cell_prob, mix
from .model import Dataset, JointPmf, LabelSpace
from .resampling import ConditionalTable
from collections import namedtuple
from enum import Enum
from scipy.special import ndtr
import numpy as np

import logging
log = logging.getLogger(__name__)

#: Largest supported number of conditioning variables.
MAX_CONDITIONING = 20

#: Number of conditioning variables of the default benchmark models.
DEFAULT_S = 4

#: Sample sizes of the minimal-probability table.
TABLE1_SIZES = (32, 64, 192, 320, 1280)


class ModelKind(Enum):
    """
    The four benchmark models.
    """
    Y_TO_XZ = 'YtoXZ'
    XZ_TO_Y = 'XZtoY'
    XY_TO_Z = 'XYtoZ'
    XOR = 'XOR'

    @classmethod
    def parse(cls, name):
        """
        Parse a model name, ignoring case, blanks and quotes
        (``"Y to XZ"``, ``"ytoxz"`` and ``"YtoXZ"`` are equivalent).
        """
        if isinstance(name, cls):
            return name
        key = str(name).replace(' ', '').replace("'", '').replace('_', '') \
            .lower()
        for kind in cls:
            if kind.value.lower() == key:
                return kind
        raise InvalidParameterError("unknown model {!r}".format(name))


#: Default parameters of the benchmark models (s = 4 for every model).
DEFAULT_PARAMS = {
    ModelKind.Y_TO_XZ: {'gamma': 0.5, 'sigma': 0.5},
    ModelKind.XZ_TO_Y: {'sigma': 0.07},
    ModelKind.XY_TO_Z: {'alpha': 3.0},
    ModelKind.XOR: {'beta': 0.8},
}


class ModelSpec(object):
    """
    A benchmark model: its kind, number s of conditioning variables and
    parameters.
    """

    def __init__(self, kind, s=DEFAULT_S, **params):
        """
        :param kind: :class:`ModelKind` or a name accepted by
                     :meth:`ModelKind.parse`.
        :param int s: Number of conditioning variables.
        :param params:
            Model parameters (``gamma``, ``sigma``, ``alpha`` or ``beta``);
            missing ones take the defaults.
        :raise ~cmi_resampling.errors.InvalidParameterError:
            If a parameter is unknown or out of range.
        """
        super(ModelSpec, self).__init__()
        kind = ModelKind.parse(kind)
        merged = dict(DEFAULT_PARAMS[kind])
        unknown = set(params) - set(merged)
        if unknown:
            raise InvalidParameterError(
                "{} takes no parameter {}".format(kind.value,
                                                  ', '.join(sorted(unknown))))
        merged.update((key, float(value)) for key, value in params.items())
        if int(s) != s or not 1 <= s <= MAX_CONDITIONING:
            raise InvalidParameterError("s={!r} not in [1, {}]"
                                        .format(s, MAX_CONDITIONING))
        _validate(kind, int(s), merged)

        #: The model kind.
        self.kind = kind

        #: Number of conditioning variables.
        self.s = int(s)

        #: Model parameters.
        self.params = merged

    @property
    def name(self):
        return self.kind.value

    @property
    def space(self):
        return LabelSpace(2, 2, 2 ** self.s)

    @property
    def cells(self):
        return 2 ** (self.s + 2)

    def to_dict(self):
        result = {'kind': self.kind.value, 's': self.s}
        result.update(self.params)
        return result

    @classmethod
    def from_dict(cls, mapping):
        mapping = dict(mapping)
        kind = mapping.pop('kind')
        s = mapping.pop('s', DEFAULT_S)
        return cls(kind, s, **mapping)

    def __eq__(self, other):
        return isinstance(other, ModelSpec) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        params = ', '.join('{}={!r}'.format(k, v)
                           for k, v in sorted(self.params.items()))
        return 'ModelSpec({}, s={}, {})'.format(self.kind.value, self.s,
                                                params)


def _validate(kind, s, params):
    if kind is ModelKind.Y_TO_XZ:
        if not 0. <= params['gamma'] <= 1.:
            raise InvalidParameterError("gamma must lie in [0, 1]")
        if not params['sigma'] > 0.:
            raise InvalidParameterError("sigma must be positive")
    elif kind is ModelKind.XZ_TO_Y:
        if not params['sigma'] > 0.:
            raise InvalidParameterError("sigma must be positive")
    elif kind is ModelKind.XY_TO_Z:
        if not params['alpha'] >= 0.:
            raise InvalidParameterError("alpha must be non-negative")
    elif kind is ModelKind.XOR:
        if not 0.5 < params['beta'] < 1.:
            raise InvalidParameterError("beta must lie in (0.5, 1)")
        if s < 2:
            raise InvalidParameterError("XOR needs s >= 2")


def default_specs(s=DEFAULT_S):
    """
    The four benchmark models at their default parameters.

    :rtype: list(ModelSpec)
    """
    return [ModelSpec(kind, s) for kind in ModelKind]


def _bernoulli(value, argument):
    # P(V = value) for V ~ Bern(Phi(argument)), using Phi(-a) = 1 - Phi(a)
    return ndtr(np.where(value == 1, argument, -argument))


def build_pmf(spec):
    """
    Exact joint distribution of a benchmark model.

    :param ModelSpec spec: The model.
    :rtype: JointPmf
    """
    space = spec.space
    x, y, z = space.cell_coordinates()
    bits = [(z >> i) & 1 for i in range(spec.s)]
    params = spec.params
    if spec.kind is ModelKind.Y_TO_XZ:
        sign = 2. * y - 1.
        probs = 0.5 * _bernoulli(x, sign / (2. * params['sigma']))
        for i, bit in enumerate(bits, start=1):
            probs = probs * _bernoulli(
                bit, sign * params['gamma'] ** i / (2. * params['sigma']))
    elif spec.kind is ModelKind.XZ_TO_Y:
        mean = (x + sum(bits)) / (spec.s + 1.)
        probs = 0.5 ** (spec.s + 1) * \
            _bernoulli(y, -(mean - 0.5) / params['sigma'])
    elif spec.kind is ModelKind.XY_TO_Z:
        w = (x + y) / 2.
        probs = np.full(space.total_cells, 0.25)
        for bit in bits:
            probs = probs * _bernoulli(bit, params['alpha'] * (w - 0.5))
    else:
        parity = (x + bits[0] + bits[1]) % 2
        probs = 0.5 ** (spec.s + 1) * \
            np.where(y == parity, params['beta'], 1. - params['beta'])
    return JointPmf(space, probs)


def mixture_pmf(spec, lam):
    """
    The benchmark distribution shrunk towards its CI projection by lambda.

    :rtype: JointPmf
    """
    return mix(build_pmf(spec), lam)


def sample(p, n, rng):
    """
    Draw an iid sample from a distribution by inverse CDF.

    :param JointPmf p: The distribution.
    :param int n: Sample size, at least 1.
    :param rng: A :class:`numpy.random.Generator`, seed or SeedSequence.
    :rtype: Dataset
    """
    if int(n) != n or n < 1:
        raise InvalidParameterError("n={!r} must be a positive integer"
                                    .format(n))
    rng = np.random.default_rng(rng)
    cdf = np.cumsum(p.probs)
    cdf[-1] = 1.
    cells = np.searchsorted(cdf, rng.random(int(n)), side='right')
    cells = np.minimum(cells, p.space.total_cells - 1)
    xs, ys, zs = p.space.cell_coordinates()
    return Dataset(p.space, xs[cells], ys[cells], zs[cells])


def true_conditional(p):
    """
    The conditional distribution q(x|z) of X given Z under p.

    :param JointPmf p: Distribution with p(z) > 0 for every stratum.
    :rtype: ~cmi_resampling.resampling.ConditionalTable
    :raise ~cmi_resampling.errors.InvalidPmfError:
        If a stratum has zero probability.
    """
    p_z = p.p_z()
    empty = np.flatnonzero(p_z <= 0.)
    if len(empty):
        raise InvalidPmfError("stratum z={} has zero probability"
                              .format(empty[0]))
    return ConditionalTable(p.p_x_given_z())


#: Row of the minimal-probability table.
MinCellProbs = namedtuple('MinCellProbs', ['n', 'n_min_p_ci', 'n_min_p'])


def table1_row(spec, n):
    """
    n times the smallest cell probability of p_ci and of p.

    :param ModelSpec spec: The model.
    :param int n: The sample size.
    :rtype: MinCellProbs
    """
    p = build_pmf(spec)
    return MinCellProbs(n=n, n_min_p_ci=n * min_cell_prob(ci_projection(p)),
                     n_min_p=n * min_cell_prob(p))
