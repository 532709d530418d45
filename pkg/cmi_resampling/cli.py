# -*- coding: utf-8 -*-
# (c) Copyright 2026 cmi-resampling developers

"""
Command line interface ``cmi-resampling``.

Experiment subcommands write CSV to stdout (or ``--output``); logging goes
to stderr.
"""

from __future__ import absolute_import, division, print_function
from .benchmarks import DEFAULT_S, ModelKind, ModelSpec, mixture_pmf, \
    sample, true_conditional
from .ci_tests import TEST_NAMES, run_tests
from .config import ExperimentConfig, read_yaml
from .errors import CMI_ERROR_LIST, CmiError, ConfigError
from .experiments import EXPERIMENTS
from .information import STATISTICS
from .model import Dataset, LabelSpace
from .resampling import ConditionalTable, ResamplePlan, Scheme
from .runner import ExperimentRunner
from .version import version
from collections import OrderedDict
import argparse
import numpy as np
import pandas as pd
import sys

import logging
log = logging.getLogger(__name__)

#: Settings that differ from the configuration defaults, per subcommand.
SUBCOMMAND_DEFAULTS = {
    'scheme-ratio': {'lambdas': [0.5]},
}


def _exit_code_epilog():
    lines = ["exit codes:", "  0  success"]
    messages = OrderedDict()
    for error in CMI_ERROR_LIST:
        if error.exit_code != 1:
            messages.setdefault(error.exit_code, []).append(
                error.error_message)
    for code, names in messages.items():
        lines.append("  {}  {}".format(code, ', '.join(names)))
    lines.append("  1  any other error")
    return '\n'.join(lines)


def _add_common_arguments(parser):
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log INFO (-v) or DEBUG (-vv) to stderr")
    parser.add_argument('-o', '--output', default=None,
                        help="output CSV file (default: stdout)")


def _add_experiment_arguments(parser):
    parser.add_argument('--config', default=None,
                        help="YAML file with experiment settings")
    parser.add_argument('--models', nargs='+', default=None,
                        choices=[kind.value for kind in ModelKind],
                        help="benchmark models at their default parameters")
    parser.add_argument('--s', type=int, default=None,
                        help="number of conditioning variables")
    parser.add_argument('--lambdas', nargs='+', type=float, default=None)
    parser.add_argument('--fracs', nargs='+', type=float, default=None)
    parser.add_argument('-B', type=int, default=None, dest='B',
                        help="resampled samples per test")
    parser.add_argument('--alpha', type=float, default=None)
    parser.add_argument('--repetitions', type=int, default=None)
    parser.add_argument('--schemes', nargs='+', default=None,
                        choices=[scheme.value for scheme in Scheme])
    parser.add_argument('--scheme-pair', nargs=2, default=None,
                        choices=[scheme.value for scheme in Scheme],
                        metavar=('NUMERATOR', 'DENOMINATOR'),
                        help="schemes compared by scheme-ratio")
    parser.add_argument('--tests', nargs='+', default=None,
                        choices=TEST_NAMES)
    parser.add_argument('--master-seed', type=int, default=None)
    parser.add_argument('--n-jobs', type=int, default=None)
    parser.add_argument('--null-samples', type=int, default=None)
    parser.add_argument('--quantile-levels', nargs='+', type=float,
                        default=None)
    parser.add_argument('--strict', action='store_true', default=None,
                        help="fail with exit code 3 if the exact test "
                             "exceeds its level bound")
    parser.add_argument('--statistic', choices=sorted(STATISTICS),
                        default=None)


def build_parser():
    """
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='cmi-resampling',
        description="Resampling-based conditional independence tests for "
                    "discrete data and their Monte Carlo study.",
        epilog=_exit_code_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + version)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    for name, cls in sorted(EXPERIMENTS.items()):
        sub = subparsers.add_parser(
            name, help=cls.__doc__.strip().splitlines()[0],
            epilog=_exit_code_epilog(),
            formatter_class=argparse.RawDescriptionHelpFormatter)
        _add_common_arguments(sub)
        _add_experiment_arguments(sub)

    sub = subparsers.add_parser(
        'test', help="test X independent of Y given Z on a CSV sample")
    _add_common_arguments(sub)
    sub.add_argument('data', help="CSV file with columns x, y, z")
    sub.add_argument('--sizes', nargs=3, type=int, default=None,
                     metavar=('I', 'J', 'K'),
                     help="label space (default: inferred from the data)")
    sub.add_argument('--scheme', choices=[s.value for s in Scheme],
                     default=Scheme.CP.value)
    sub.add_argument('--conditional', default=None,
                     help="CSV with columns z, q0, .., q{I-1} (CR only)")
    sub.add_argument('-B', type=int, default=50, dest='B')
    sub.add_argument('--alpha', type=float, default=0.05)
    sub.add_argument('--tests', nargs='+', default=list(TEST_NAMES),
                     choices=TEST_NAMES)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--statistic', choices=sorted(STATISTICS),
                     default='cmi')

    sub = subparsers.add_parser(
        'sample', help="draw a sample from a benchmark model")
    _add_common_arguments(sub)
    sub.add_argument('model', choices=[kind.value for kind in ModelKind])
    sub.add_argument('-n', type=int, required=True, help="sample size")
    sub.add_argument('--s', type=int, default=DEFAULT_S)
    sub.add_argument('--lambda', type=float, default=0., dest='lam',
                     help="mixture weight of the CI projection")
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--conditional-output', default=None,
                     help="also write the true q(x|z) to this CSV file")
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: '
                               '%(message)s')


def build_config(args):
    """
    Experiment configuration from subcommand defaults, the ``--config`` file
    and command line flags, later sources taking precedence.

    :rtype: ExperimentConfig
    """
    mapping = dict(SUBCOMMAND_DEFAULTS.get(args.command, {}))
    if args.config is not None:
        mapping.update(read_yaml(args.config))
    config = ExperimentConfig.from_dict(mapping)
    overrides = {name: getattr(args, name) for name in (
        'lambdas', 'fracs', 'B', 'alpha', 'repetitions', 'schemes',
        'scheme_pair', 'tests', 'master_seed', 'n_jobs', 'null_samples',
        'quantile_levels', 'strict', 'statistic')}
    if args.models is not None:
        s = DEFAULT_S if args.s is None else args.s
        overrides['models'] = [{'kind': name, 's': s} for name in args.models]
    elif args.s is not None:
        overrides['models'] = [dict(spec.to_dict(), s=args.s)
                               for spec in config.models]
    return config.replace(**overrides)


def run_experiment(args):
    config = build_config(args)
    runner = ExperimentRunner(config)
    experiment = EXPERIMENTS[args.command](config)
    rows = runner.execute(experiment)
    runner.write_csv(experiment, rows, args.output or sys.stdout)
    if args.command == 'level-power' and config.strict:
        runner.check_level(rows)


def run_test(args):
    space = None if args.sizes is None else LabelSpace(*args.sizes)
    data = Dataset.read_csv(args.data, space)
    conditional = None
    if args.conditional is not None:
        conditional = ConditionalTable.read_csv(args.conditional)
    elif args.scheme == Scheme.CR.value:
        raise ConfigError("scheme CR needs --conditional")
    plan = ResamplePlan(args.scheme, args.B, conditional)
    outcomes = run_tests(data, plan, args.alpha,
                         np.random.default_rng(args.seed), tests=args.tests,
                         statistic=args.statistic)
    records = []
    for outcome in outcomes.values():
        log.info("%s", outcome)
        record = outcome.as_dict()
        record.update(scheme=plan.scheme.value, n=data.n)
        records.append(record)
    frame = pd.DataFrame(records, columns=[
        'test', 'scheme', 'n', 'statistic', 'p_value', 'reference', 'alpha',
        'reject', 'degenerate'])
    frame.to_csv(args.output or sys.stdout, index=False, float_format='%.6g',
                 lineterminator='\n')


def run_sample(args):
    spec = ModelSpec(args.model, args.s)
    pmf = mixture_pmf(spec, args.lam)
    data = sample(pmf, args.n, np.random.default_rng(args.seed))
    data.to_csv(args.output if args.output else sys.stdout)
    if args.conditional_output is not None:
        true_conditional(pmf).to_csv(args.conditional_output)


def main(argv=None):
    """
    Entry point of the ``cmi-resampling`` command.

    :param list argv: Arguments (default: ``sys.argv[1:]``).
    :return: The exit code.
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        if args.command in EXPERIMENTS:
            run_experiment(args)
        elif args.command == 'test':
            run_test(args)
        else:
            run_sample(args)
    except CmiError as e:
        log.error("%s", e)
        return e.exit_code
    except (IOError, OSError) as e:
        log.error("%s", e)
        return ConfigError.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
