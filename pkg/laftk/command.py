#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Code used in the ``laf`` command-line application.

Every subcommand returns an exit status: 0 when what was asked for holds
(the judgment is accepted, the machine halts, a proof is found, no
counterexample turns up), 1 when it does not, and 2 on malformed input
or usage errors.
"""

from __future__ import print_function

import argparse
import logging
import signal
import sys

import laftk
from laftk import kernel, machine, realisability, search
from laftk.data import parse_molecules, read_judgment, read_universe
from laftk.errors import CycleFound, LafError, UniverseNotClosed
from laftk.instances import LOGICS, signature
from laftk.syntax import SourceJudgment, parse_formula, print_judgment
from laftk.translate import translate
from laftk.util import exit_forcefully


DEFAULT_FUEL = 10000
DEFAULT_DEPTH = 4
DEFAULT_SAMPLES = 10000
DEFAULT_SEED = 0


def version(program_name=''):
    return program_name + ' ' + laftk.__version__


def positive_int(value):
    """
    Parse a positive integer option value.

    Raises
    ------
    argparse.ArgumentTypeError
        If `value` is not a positive integer.
    """
    try:
        number = int(value)
        if number < 1:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError("{} is not a positive integer.".format(value))
    return number


def non_negative_int(value):
    try:
        number = int(value)
        if number < 0:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError("{} is not a non-negative integer.".format(value))
    return number


def logic_name(value):
    """
    Check the name of a logic, suggesting the closest one when it is misspelt.
    """
    try:
        signature(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    return value


def universe_formulae(args):
    """
    The formulae given by ``--universe`` or ``--molecules``, or the logic's default universe.
    """
    if args.universe:
        return read_universe(args.universe, args.logic)
    if args.molecules:
        return parse_molecules(args.molecules, args.logic)
    return None


def semantic_model(sig):
    """The boolean model used to decide semantic provability in `sig`."""
    return realisability.models_for(sig)[0]


#
# subcommands
#

def check_command(args):
    source = read_judgment(args.file)
    result = kernel.check(signature(source.logic), source.judgment)
    print(result)
    return 0 if result.accepted else 1


def decomps_command(args):
    sig = signature(args.logic)
    molecule = parse_formula(args.formula, args.logic)
    for pattern, delta in sig.decompositions(molecule):
        print('{}\t{}'.format(pattern, delta))
    return 0


def semprove_command(args):
    sig = signature(args.logic)
    molecule = parse_formula(args.formula, args.logic)
    sig.validate_molecule(molecule)
    print('true' if realisability.sem_provable(semantic_model(sig), sig, molecule) else 'false')
    return 0


def eval_command(args):
    logger = logging.getLogger("{}.{}".format(__name__, eval_command.__name__))

    source = read_judgment(args.file)
    if not isinstance(source.judgment, kernel.CmdSeq):
        raise ValueError('eval needs a command judgment; {} does not hold one.'.format(args.file))
    sig = signature(source.logic)
    result = kernel.check(sig, source.judgment)
    if not result.accepted:
        logger.warning('Running a command the kernel rejects: {}'.format(result))

    env = machine.initial_env(sig, source.context)
    outcome = machine.run(sig, machine.Config(env, source.judgment.term), fuel=args.fuel)
    if args.trace:
        for line in outcome.trace:
            print(line)
    print(outcome)
    return 0 if isinstance(outcome, machine.Halted) else 1


def prove_command(args):
    source = read_judgment(args.file)
    sig = signature(source.logic)
    judgment = source.judgment
    budget = search.SearchBudget(args.depth, args.branch_cap)

    if isinstance(judgment, kernel.PosSeq):
        term = search.search_pos(sig, judgment.context, judgment.molecule, budget)
        found = lambda t: kernel.PosSeq(judgment.context, t, judgment.molecule)
    elif isinstance(judgment, kernel.DecSeq):
        term = search.search_dec(sig, judgment.context, judgment.decomposition, budget)
        found = lambda t: kernel.DecSeq(judgment.context, t, judgment.decomposition)
    else:
        term = search.search_cmd(sig, judgment.context, budget)
        found = lambda t: kernel.CmdSeq(judgment.context, t)

    if term is None:
        print('not found')
        return 1
    print(print_judgment(SourceJudgment(source.logic, found(term))))
    return 0


def translate_command(args):
    source = read_judgment(args.file)
    print(translate(source.logic, source.judgment))
    return 0


def sweep_command(args):
    sig = signature(args.logic)
    formulae = universe_formulae(args)
    universe = sig.closure(formulae) if formulae is not None else sig.default_universe
    if args.parallel > 1:
        signal.signal(signal.SIGINT, exit_forcefully)
    report = search.consistency_sweep(sig, universe, args.depth, parallel=args.parallel, branch_cap=args.branch_cap)
    print(report)
    return 1 if report.found else 0


def adequacy_command(args):
    source = read_judgment(args.file)
    sig = signature(source.logic)
    failed = False
    for alg in realisability.models_for(sig):
        verdicts = realisability.adequacy_verdicts(alg, sig, source.judgment)
        failures = [rho for rho, verdict in verdicts if not verdict]
        failed = failed or bool(failures)
        print('{}: {} semantic contexts, {} failures'.format(alg.name, len(verdicts), len(failures)))
        for rho in failures:
            print('  fails in {}'.format(rho))
    return 1 if failed else 0


def wellfounded_command(args):
    sig = signature(args.logic)
    formulae = universe_formulae(args)
    universe = sig.closure(formulae) if formulae is not None else sig.default_universe
    try:
        edges = kernel.check_well_founded(sig, universe)
    except (CycleFound, UniverseNotClosed) as e:
        print(e)
        return 1
    for lower, upper in edges:
        print('{} < {}'.format(lower, upper))
    return 0


def hypotheses_command(args):
    sig = signature(args.logic)
    failed = False
    for alg in realisability.models_for(sig):
        report = realisability.check_hypotheses_sampled(alg, sig, count=args.samples, seed=args.seed)
        print(report)
        failed = failed or not report.ok
    return 1 if failed else 0


#
# argument parsing
#

def add_universe_arguments(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--universe', metavar='FILE', help="""A file holding an S-expression list of formulae, e.g. ("a |+ ~a" false+). The universe is their closure.""")
    group.add_argument('--molecules', metavar='SEXP', help="""The formulae of the universe as an S-expression list, in place of --universe.""")


def parse_arguments(argv=None):
    parser = argparse.ArgumentParser(
        prog='laf',
        description='Check, run, search and interpret proof-terms of focussed sequent calculi.',
    )
    parser.add_argument('--version', action='version', version=version('laf'))
    parser.add_argument('-v', '--verbose', action='store_true', help="""Requests more detailed output.""")

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    check = subparsers.add_parser('check', help='Type-check the judgment in a file.')
    check.add_argument('file', help="""The judgment file. Use '-' to read from standard input.""")
    check.set_defaults(func=check_command)

    decomps = subparsers.add_parser('decomps', help='List the decompositions of a molecule.')
    decomps.add_argument('--logic', required=True, type=logic_name, help="""One of {}.""".format(', '.join(LOGICS)))
    decomps.add_argument('formula')
    decomps.set_defaults(func=decomps_command)

    semprove = subparsers.add_parser('semprove', help='Decide whether a molecule is provable in the boolean model of its logic.')
    semprove.add_argument('--logic', required=True, type=logic_name)
    semprove.add_argument('formula')
    semprove.set_defaults(func=semprove_command)

    evaluate = subparsers.add_parser('eval', help='Run the command of a judgment file on the abstract machine.')
    evaluate.add_argument('file')
    evaluate.add_argument('--fuel', type=positive_int, default=DEFAULT_FUEL, help="""The maximum number of steps. Default: %(default)s.""")
    evaluate.add_argument('--trace', action='store_true', help="""Print a line for every step.""")
    evaluate.set_defaults(func=eval_command)

    prove = subparsers.add_parser('prove', help='Search for a term for the goal of a judgment file; the term written in the file is ignored.')
    prove.add_argument('file')
    prove.add_argument('--depth', type=non_negative_int, default=DEFAULT_DEPTH, help="""The search depth. Default: %(default)s.""")
    prove.add_argument('--branch-cap', type=non_negative_int, default=None, help="""The most branches a branch map may have.""")
    prove.set_defaults(func=prove_command)

    translate_parser = subparsers.add_parser('translate', help='Render a judgment as the focused sequent it encodes.')
    translate_parser.add_argument('file')
    translate_parser.set_defaults(func=translate_command)

    sweep = subparsers.add_parser('sweep', help='Look for a command in the empty context.')
    sweep.add_argument('--logic', required=True, type=logic_name)
    sweep.add_argument('--depth', type=non_negative_int, default=DEFAULT_DEPTH, help="""The search depth. Default: %(default)s.""")
    sweep.add_argument('--branch-cap', type=non_negative_int, default=None)
    sweep.add_argument('--parallel', type=positive_int, default=1, help="""The number of worker processes. Default: %(default)s.""")
    add_universe_arguments(sweep)
    sweep.set_defaults(func=sweep_command)

    adequacy = subparsers.add_parser('adequacy', help='Check the adequacy lemma on a judgment in every shipped model.')
    adequacy.add_argument('file')
    adequacy.set_defaults(func=adequacy_command)

    wellfounded = subparsers.add_parser('wellfounded', help='Check that decomposition is well-founded on a universe.')
    wellfounded.add_argument('--logic', required=True, type=logic_name)
    add_universe_arguments(wellfounded)
    wellfounded.set_defaults(func=wellfounded_command)

    hypotheses = subparsers.add_parser('hypotheses', help='Test the hypotheses of the adequacy lemma on random samples.')
    hypotheses.add_argument('--logic', required=True, type=logic_name)
    hypotheses.add_argument('--samples', type=positive_int, default=DEFAULT_SAMPLES, help="""Default: %(default)s.""")
    hypotheses.add_argument('--seed', type=int, default=DEFAULT_SEED, help="""Default: %(default)s.""")
    hypotheses.set_defaults(func=hypotheses_command)

    return parser.parse_args(argv)


def main(argv=None):
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(
        level=args.verbose and logging.DEBUG or logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s %(message)s',
    )

    try:
        return args.func(args)
    except (LafError, ValueError) as e:
        print('laf: error: {}'.format(e), file=sys.stderr)
        return 2
    except IOError as e:
        print('laf: error: {}'.format(e), file=sys.stderr)
        return 2
