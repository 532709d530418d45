# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

from __future__ import absolute_import, division, print_function
from .level_power import LevelPowerExperiment
from ..result_types import SchemeRatioRow

import logging
log = logging.getLogger(__name__)


class SchemeRatioExperiment(LevelPowerExperiment):
    """
    Rejection rate under one scheme divided by the rejection rate under
    another, CP over CR by default.

    The two schemes of ``config.scheme_pair`` always run, on the same samples
    and resampling streams, whatever ``config.schemes`` lists. The columns
    ``power_cp`` and ``power_cr`` hold the numerator and the denominator.
    A zero denominator gives the ratio ``nan`` (written as ``NA``).
    """

    NAME = 'scheme-ratio'
    ROW_TYPE = SchemeRatioRow

    def _schemes(self):
        return list(self.config.scheme_pair)

    def header_notes(self):
        return super(SchemeRatioExperiment, self).header_notes() + [
            "scheme_pair={}".format('/'.join(
                scheme.value for scheme in self.config.scheme_pair))]

    def interpret_results(self, units, results):
        denominator = self.config.scheme_pair[1].value
        rows = []
        for unit, result in zip(units, results):
            counts = self._rejection_counts(result)
            for j, test in enumerate(self.config.tests):
                power_cp = counts[0, j] / float(unit.repetitions)
                power_cr = counts[1, j] / float(unit.repetitions)
                if power_cr > 0.:
                    ratio = power_cp / power_cr
                else:
                    log.warning("%s %s frac=%s: no %s rejections, ratio "
                                "undefined", unit.meta['model'], test,
                                unit.meta['frac'], denominator)
                    ratio = float('nan')
                row = SchemeRatioRow(
                    model=unit.meta['model'], test=test,
                    frac=unit.meta['frac'], n=unit.meta['n'],
                    power_cp=power_cp, power_cr=power_cr,
                    power_cp_over_cr=ratio,
                    **{'lambda': unit.meta['lambda']})
                log.info("%s", row)
                rows.append(row)
        return rows
