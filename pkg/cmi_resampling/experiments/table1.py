# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .base import Experiment
from ..benchmarks import TABLE1_SIZES, table1_row
from ..result_types import Table1Row

import logging
log = logging.getLogger(__name__)


class Table1Experiment(Experiment):
    """
    n times the smallest cell probability of p_ci and p, for every model and
    n in 32, 64, 192, 320, 1280. Exact, no sampling.
    """

    NAME = 'table1'
    ROW_TYPE = Table1Row
    RANDOM = False

    def interpret_results(self, units, results):
        rows = []
        for spec in self.config.models:
            for n in TABLE1_SIZES:
                values = table1_row(spec, n)
                rows.append(Table1Row(model=spec.name,
                                      frac=n / float(spec.cells), n=n,
                                      n_min_p_ci=values.n_min_p_ci,
                                      n_min_p=values.n_min_p))
        return rows

    def header_notes(self):
        return ["exact enumeration",
                "sizes={}".format(' '.join(str(n) for n in TABLE1_SIZES))]
