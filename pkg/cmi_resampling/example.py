# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from cmi_resampling import ModelSpec, ResamplePlan, Scheme, build_pmf, \
    ci_projection, cmi, exact_test, df_estimation_test, asymptotic_test
from cmi_resampling.benchmarks import sample, true_conditional
import numpy as np

import logging
log = logging.getLogger(__name__)


def main():
    # XOR model with s = 4 conditioning variables: 64 cells
    spec = ModelSpec('XOR', s=4)
    p = build_pmf(spec)
    print("CMI of {}: {:.4f} nats".format(spec.name, cmi(p)))

    # Draw n = 320 observations (frac = 5) from the null p_ci
    rng = np.random.default_rng(2024)
    p_ci = ci_projection(p)
    data = sample(p_ci, 320, rng)

    # Test X independent of Y given Z with 50 CP resamples
    plan = ResamplePlan(Scheme.CP, B=50)
    print(exact_test(data, plan, alpha=0.05, rng=rng))
    print(df_estimation_test(data, plan, alpha=0.05, rng=rng))
    print(asymptotic_test(data, alpha=0.05))

    # CR needs the true conditional distribution of X given Z
    plan = ResamplePlan(Scheme.CR, B=50, conditional=true_conditional(p_ci))
    print(exact_test(data, plan, alpha=0.05, rng=rng))

    # Under the alternative the tests should reject
    data = sample(p, 320, rng)
    print(df_estimation_test(data, plan, alpha=0.05, rng=rng))


if __name__ == "__main__":
    main()
