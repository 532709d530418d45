# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling.config import ExperimentConfig
import numpy as np
import pytest

DEFAULT_MASTER_SEED = 20240601


def pytest_addoption(parser):
    """
    Register command line options
    """
    parser.addoption("--master-seed", action="store", type=int,
                     default=DEFAULT_MASTER_SEED,
                     help="seed of the random streams used by the tests")


def _get_master_seed(config):
    """
    Get the master seed to be used for the tests.
    """
    seed = config.getoption("--master-seed")
    if seed < 0:
        raise ValueError("The '--master-seed' must be non-negative.")
    return seed


def pytest_report_header(config):
    """
    Add extra information to test report header
    """
    lines = []
    lines.append("master seed: " + str(_get_master_seed(config)))
    lines.append("numpy: " + np.__version__)
    return '\n'.join(lines)


@pytest.fixture(scope="session")
def master_seed(request):
    """
    Fixture to get the master seed to be used for the tests.
    """
    return _get_master_seed(request.config)


@pytest.fixture
def rng(master_seed):
    return np.random.default_rng(master_seed)


@pytest.fixture
def small_config(master_seed):
    """
    Fixture with a fast experiment configuration: XOR with s = 2 (16 cells),
    two fracs, two lambdas and a few repetitions.
    """
    return ExperimentConfig(models=[{'kind': 'XOR', 's': 2}],
                            lambdas=[1., 0.5], fracs=[1., 2.], B=9,
                            repetitions=6, master_seed=master_seed,
                            null_samples=20, quantile_levels=[0.5, 1.])
