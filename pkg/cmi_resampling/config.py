# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .benchmarks import ModelSpec, default_specs
from .ci_tests import TEST_NAMES
from .errors import CmiError, ConfigError
from .information import STATISTICS
from .resampling import Scheme
import copy
import numpy as np
import yaml

import logging
log = logging.getLogger(__name__)

#: Default grid of observations per cell.
DEFAULT_FRACS = (0.5, 0.75, 1., 1.5, 2., 3., 5.)

#: Default QQ grid: 0.05, 0.10, ..., 1.0.
DEFAULT_QUANTILE_LEVELS = tuple(round(0.05 * i, 2) for i in range(1, 21))


class ExperimentConfig(object):
    """
    Settings of a Monte Carlo experiment.

    All values are validated on construction; invalid values raise
    :class:`~cmi_resampling.errors.ConfigError`. Use :meth:`replace` to
    derive a modified configuration, e.g. to apply command line flags on top
    of a YAML file.
    """

    #: Field names, in the order of :meth:`to_dict`.
    FIELDS = ('models', 'lambdas', 'fracs', 'B', 'alpha', 'repetitions',
              'schemes', 'scheme_pair', 'tests', 'master_seed', 'n_jobs',
              'null_samples', 'quantile_levels', 'strict', 'statistic')

    def __init__(self, models=None, lambdas=(1.,), fracs=DEFAULT_FRACS, B=50,
                 alpha=0.05, repetitions=500, schemes=(Scheme.CP, Scheme.CR),
                 scheme_pair=(Scheme.CP, Scheme.CR), tests=TEST_NAMES,
                 master_seed=0, n_jobs=1, null_samples=10000,
                 quantile_levels=DEFAULT_QUANTILE_LEVELS, strict=False,
                 statistic='cmi'):
        """
        :param list models: :class:`~cmi_resampling.benchmarks.ModelSpec`
            objects or mappings like ``{'kind': 'XOR', 's': 4}``; defaults
            to the four benchmark models.
        :param list lambdas: Mixture weights in [0, 1] (1 is the null).
        :param list fracs: Positive numbers of observations per cell.
        :param int B: Resampled samples per test.
        :param float alpha: Significance level in (0, 1).
        :param int repetitions: Monte Carlo repetitions per row.
        :param list schemes: Resampling schemes (``'CP'``, ``'CR'``).
        :param list scheme_pair: Numerator and denominator schemes of the
            scheme-ratio experiment.
        :param list tests: Subset of ``exact``, ``df_estimation``,
            ``asymptotic``.
        :param int master_seed: Root of all random streams.
        :param int n_jobs: joblib worker count.
        :param int null_samples: Null samples for the df-mean experiment.
        :param list quantile_levels: Levels in (0, 1] of the QQ experiment.
        :param bool strict: Fail on level violations of the exact test.
        :param str statistic: ``'cmi'`` or ``'pearson'``.
        """
        super(ExperimentConfig, self).__init__()
        try:
            self.models = [_as_spec(m) for m in
                           (default_specs() if models is None else models)]
            self.lambdas = [float(v) for v in lambdas]
            self.fracs = [float(v) for v in fracs]
            self.B = _as_int(B, 'B')
            self.alpha = float(alpha)
            self.repetitions = _as_int(repetitions, 'repetitions')
            self.schemes = [_as_scheme(s) for s in schemes]
            self.scheme_pair = [_as_scheme(s) for s in scheme_pair]
            self.tests = [str(t) for t in tests]
            self.master_seed = _as_int(master_seed, 'master_seed')
            self.n_jobs = _as_int(n_jobs, 'n_jobs')
            self.null_samples = _as_int(null_samples, 'null_samples')
            self.quantile_levels = [float(v) for v in quantile_levels]
            self.strict = bool(strict)
            self.statistic = str(statistic)
        except ConfigError:
            raise
        except CmiError as e:
            raise ConfigError(e.detail or e.error_message)
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(str(e))
        self._validate()

    def _validate(self):
        if not self.models:
            raise ConfigError("no models")
        for name in ('lambdas', 'fracs', 'schemes', 'tests'):
            if not getattr(self, name):
                raise ConfigError("{} must not be empty".format(name))
        if len(self.scheme_pair) != 2:
            raise ConfigError("scheme_pair must name exactly two schemes")
        if any(not 0. <= v <= 1. for v in self.lambdas):
            raise ConfigError("lambdas must lie in [0, 1]")
        if any(not v > 0. for v in self.fracs):
            raise ConfigError("fracs must be positive")
        if self.B < 1:
            raise ConfigError("B must be at least 1")
        if not 0. < self.alpha < 1.:
            raise ConfigError("alpha must lie in (0, 1)")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be at least 1")
        unknown = set(self.tests) - set(TEST_NAMES)
        if unknown:
            raise ConfigError("unknown tests: {}".format(
                ', '.join(sorted(unknown))))
        if self.master_seed < 0:
            raise ConfigError("master_seed must be non-negative")
        if self.n_jobs == 0:
            raise ConfigError("n_jobs must not be 0")
        if self.null_samples < 1:
            raise ConfigError("null_samples must be at least 1")
        if not self.quantile_levels or \
                any(not 0. < q <= 1. for q in self.quantile_levels):
            raise ConfigError("quantile_levels must lie in (0, 1]")
        if self.statistic not in STATISTICS:
            raise ConfigError("unknown statistic {!r}".format(self.statistic))
        for spec in self.models:
            for frac in self.fracs:
                self.sample_size(spec, frac)

    def sample_size(self, spec, frac):
        """
        Sample size n = round(frac * 2^(s+2)) of a model.

        :raise ~cmi_resampling.errors.ConfigError: If n would be 0.
        """
        n = int(np.floor(frac * spec.cells + 0.5))
        if n < 1:
            raise ConfigError("frac={} gives an empty sample for {}"
                              .format(frac, spec.name))
        return n

    def to_dict(self):
        result = {name: copy.copy(getattr(self, name))
                  for name in self.FIELDS}
        result['models'] = [spec.to_dict() for spec in self.models]
        result['schemes'] = [scheme.value for scheme in self.schemes]
        result['scheme_pair'] = [scheme.value for scheme in self.scheme_pair]
        return result

    def replace(self, **overrides):
        """
        Copy of this configuration with some fields replaced; ``None``
        values are ignored.

        :rtype: ExperimentConfig
        """
        unknown = set(overrides) - set(self.FIELDS)
        if unknown:
            raise ConfigError("unknown settings: {}".format(
                ', '.join(sorted(unknown))))
        values = self.to_dict()
        values.update((k, v) for k, v in overrides.items() if v is not None)
        return ExperimentConfig(**values)

    @classmethod
    def from_dict(cls, mapping):
        """
        Create a configuration from a mapping of field names.

        :raise ~cmi_resampling.errors.ConfigError: On unknown keys.
        """
        if mapping is None:
            mapping = {}
        if not isinstance(mapping, dict):
            raise ConfigError("configuration must be a mapping")
        unknown = set(mapping) - set(cls.FIELDS)
        if unknown:
            raise ConfigError("unknown settings: {}".format(
                ', '.join(sorted(str(k) for k in unknown))))
        return cls(**mapping)

    @classmethod
    def from_yaml(cls, path):
        """
        Load a configuration from a YAML file.

        :param str path: Path of the file.
        :rtype: ExperimentConfig
        """
        return cls.from_dict(read_yaml(path))

    def __eq__(self, other):
        return isinstance(other, ExperimentConfig) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'ExperimentConfig({})'.format(', '.join(
            '{}={!r}'.format(k, v) for k, v in sorted(self.to_dict().items())))


def _as_spec(model):
    if isinstance(model, ModelSpec):
        return model
    if isinstance(model, dict):
        return ModelSpec.from_dict(model)
    return ModelSpec(model)


def _as_scheme(scheme):
    try:
        return Scheme(scheme.upper() if isinstance(scheme, str) else scheme)
    except ValueError:
        raise ConfigError("unknown scheme {!r}".format(scheme))


def _as_int(value, name):
    if isinstance(value, bool) or int(value) != value:
        raise ConfigError("{} must be an integer".format(name))
    return int(value)


def read_yaml(path):
    """
    Read the mapping of settings stored in a YAML file.

    :param str path: Path of the file.
    :rtype: dict
    :raise ~cmi_resampling.errors.ConfigError:
        If the file cannot be read or is not a mapping.
    """
    try:
        with open(path, 'r') as f:
            mapping = yaml.safe_load(f)
    except (IOError, OSError) as e:
        raise ConfigError("cannot read {}: {}".format(path, e))
    except yaml.YAMLError as e:
        raise ConfigError("cannot parse {}: {}".format(path, e))
    if mapping is None:
        mapping = {}
    if not isinstance(mapping, dict):
        raise ConfigError("{} does not contain a mapping".format(path))
    log.debug("Loaded settings %s from %s", list(mapping), path)
    return mapping
