# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .version import version as __version__  # noqa: F401
from .model import LabelSpace, JointPmf, Dataset, CellCounts  # noqa: F401
from .model import count, empirical_pmf  # noqa: F401
from .information import cmi, cmi_hat, ci_projection, mix  # noqa: F401
from .resampling import Scheme, ResamplePlan, ConditionalTable  # noqa: F401
from .ci_tests import exact_test, df_estimation_test  # noqa: F401
from .ci_tests import asymptotic_test  # noqa: F401
from .benchmarks import ModelKind, ModelSpec, build_pmf  # noqa: F401
from .config import ExperimentConfig  # noqa: F401
from .runner import ExperimentRunner  # noqa: F401

__copyright__ = '(c) Copyright 2026 cmi-resampling developers'
