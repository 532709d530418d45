# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

# flake8: noqa

from __future__ import absolute_import, division, print_function
from .base import \
    Experiment, \
    WorkUnit, \
    child_stream
from .level_power import \
    LevelPowerExperiment, \
    level_bound, \
    level_violations
from .df_mean import \
    DfMeanExperiment
from .qq import \
    QqExperiment
from .scheme_ratio import \
    SchemeRatioExperiment
from .table1 import \
    Table1Experiment

#: Experiments by command line name.
EXPERIMENTS = {cls.NAME: cls for cls in (
    LevelPowerExperiment, DfMeanExperiment, QqExperiment,
    SchemeRatioExperiment, Table1Experiment)}
