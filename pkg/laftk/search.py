#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Bounded exhaustive proof search, for any instance.

Search inverts the typing rules. Depth bounds the number of alternations
between synchronous and asynchronous phases along any branch of a
derivation:

* proving a molecule at depth `k` (the sync rule) needs ``k >= 1`` and
  inhabits the chosen decomposition at depth ``k - 1``;
* refuting a molecule at depth `k` (the async rule) needs ``k >= 1`` and
  looks for every branch's command at depth ``k - 1``;
* a command at depth `k` either selects a negative label and proves its
  molecule at depth `k`, or cuts a candidate molecule, refuting and
  proving it at depth `k`;
* init, unit and pair are free.

Alternatives are tried in a fixed order: decompositions in the order the
instance lists them, labels in ascending order, then cut candidates in
the order given. The subgoals of a pair or of a branch map share no
choices, so taking the first solution of each one loses nothing.

The molecule of a cut is drawn from a finite set of candidates. By
default it is the closure of the molecules of the goal and of the
context.
"""

import dataclasses
import functools
import logging
import multiprocessing
import signal
import time
import typing

from laftk import kernel
from laftk.contexts import NEG, NegLeaf, Pair, PosLeaf, Unit, leaves
from laftk.instances import signature
from laftk.syntax import format_command
from laftk.util import humanize_time


@dataclasses.dataclass(frozen=True)
class SearchBudget(object):
    depth: int
    branch_cap: typing.Optional[int] = None

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError('The search depth must not be negative, not {}.'.format(self.depth))
        if self.branch_cap is not None and self.branch_cap < 0:
            raise ValueError('The branch cap must not be negative, not {}.'.format(self.branch_cap))


def _remembered(method):
    @functools.wraps(method)
    def wrapper(self, context, goal, k):
        key = (method.__name__, context, goal, k)
        if key not in self.memo:
            self.memo[key] = method(self, context, goal, k)
        return self.memo[key]
    return wrapper


class _Searcher(object):

    def __init__(self, sig, candidates, branch_cap=None):
        self.sig = sig
        self.candidates = list(candidates)
        self.branch_cap = branch_cap
        self.memo = {}

    @_remembered
    def pos(self, context, molecule, k):
        if k < 1:
            return None
        for pattern, delta in self.sig.decompositions(molecule):
            dec = self.dec(context, delta, k - 1)
            if dec is not None:
                return kernel.PosTerm(pattern, dec)
        return None

    @_remembered
    def dec(self, context, delta, k):
        if isinstance(delta, Unit):
            return kernel.UNIT_TERM
        if isinstance(delta, Pair):
            left = self.dec(context, delta.left, k)
            if left is None:
                return None
            right = self.dec(context, delta.right, k)
            if right is None:
                return None
            return kernel.PairTerm(left, right)
        if isinstance(delta, PosLeaf):
            for label, atom in context.pos_items():
                if atom == delta.payload:
                    return kernel.LabelP(label)
            return None
        if isinstance(delta, NegLeaf):
            return self.refute(context, delta.payload, k)
        raise TypeError('Not a decomposition: {!r}'.format(delta))

    @_remembered
    def refute(self, context, molecule, k):
        if k < 1:
            return None
        decompositions = self.sig.decompositions(molecule)
        if self.branch_cap is not None and len(decompositions) > self.branch_cap:
            return None
        branches = []
        for pattern, delta in decompositions:
            command = self.cmd(context.extend(delta), None, k - 1)
            if command is None:
                return None
            branches.append((pattern, command))
        return kernel.Branches(tuple(branches))

    @_remembered
    def cmd(self, context, _, k):
        for alternative in command_alternatives(context, self.candidates):
            command = self.alternative(context, alternative, k)
            if command is not None:
                return command
        return None

    def alternative(self, context, alternative, k):
        kind, value = alternative
        if kind == 'select':
            positive = self.pos(context, context.lookup_neg(value), k)
            return None if positive is None else kernel.Select(value, positive)
        branches = self.refute(context, value, k)
        if branches is None:
            return None
        positive = self.pos(context, value, k)
        return None if positive is None else kernel.Cut(branches, value, positive)


def command_alternatives(context, candidates):
    """
    List the ways a command can start: ``('select', label)`` for each negative label, then ``('cut', molecule)``.
    """
    return [('select', label) for label, _ in context.neg_items()] + [('cut', m) for m in candidates]


def default_candidates(sig, context, molecules=()):
    """
    The closure of the molecules of the context and of the goal, in store order.
    """
    return sig.closure([m for _, m in context.neg_items()] + list(molecules))


def _goal_molecules(delta):
    return [payload for kind, payload in leaves(delta) if kind == NEG]


def _deepen(sig, budget, attempt, judgment_of):
    logger = logging.getLogger("{}.{}".format(__name__, _deepen.__name__))

    for k in range(budget.depth + 1):
        term = attempt(k)
        logger.debug('Depth {}: {}.'.format(k, 'found {}'.format(term) if term is not None else 'nothing'))
        if term is not None:
            result = kernel.check(sig, judgment_of(term))
            if not result.accepted:
                raise RuntimeError('Search found a term the kernel rejects: {}'.format(result))
            return term
    return None


def search_pos(sig, context, molecule, budget, candidates=None):
    """
    Look for a positive term proving `molecule` in `context`.

    Parameters
    ----------
    sig: InstanceSignature
    context: context
    molecule: molecule
    budget: SearchBudget
    candidates: list, optional
        Cut molecules; by default the closure of `molecule` and the
        molecules of `context`.

    Returns
    -------
    PosTerm or None
        The first term found, trying depths from 0 up to the budget.
    """
    if candidates is None:
        candidates = default_candidates(sig, context, [molecule])
    searcher = _Searcher(sig, candidates, budget.branch_cap)
    return _deepen(
        sig, budget,
        lambda k: searcher.pos(context, molecule, k),
        lambda term: kernel.PosSeq(context, term, molecule),
    )


def search_dec(sig, context, delta, budget, candidates=None):
    """
    Look for a decomposition term inhabiting `delta` in `context`.
    """
    if candidates is None:
        candidates = default_candidates(sig, context, _goal_molecules(delta))
    searcher = _Searcher(sig, candidates, budget.branch_cap)
    return _deepen(
        sig, budget,
        lambda k: searcher.dec(context, delta, k),
        lambda term: kernel.DecSeq(context, term, delta),
    )


def search_cmd(sig, context, budget, candidates=None):
    """
    Look for a command well typed in `context`.

    Returns
    -------
    Select, Cut or None
    """
    if candidates is None:
        candidates = default_candidates(sig, context)
    searcher = _Searcher(sig, candidates, budget.branch_cap)
    return _deepen(
        sig, budget,
        lambda k: searcher.cmd(context, None, k),
        lambda term: kernel.CmdSeq(context, term),
    )


#
# consistency sweeps
#

@dataclasses.dataclass
class SweepReport(object):
    logic: str
    depth: int
    candidates: int
    alternatives: int
    elapsed: float
    counterexample: typing.Any = None

    @property
    def found(self):
        return self.counterexample is not None

    def __str__(self):
        outcome = 'found {}'.format(format_command(self.counterexample)) if self.found else 'no command found'
        return '{}: depth {}, {} cut candidates, {} alternatives, {}: {}'.format(
            self.logic, self.depth, self.candidates, self.alternatives, humanize_time(self.elapsed), outcome
        )


def search_alternative(sig, context, alternative, candidates, budget):
    """
    Look for a command starting with `alternative`, trying depths from 0 up to the budget.
    """
    searcher = _Searcher(sig, candidates, budget.branch_cap)
    return _deepen(
        sig, budget,
        lambda k: searcher.alternative(context, alternative, k),
        lambda term: kernel.CmdSeq(context, term),
    )


worker_signature = None


def sweep_process_init(logic):
    signal.signal(signal.SIGINT, signal.SIG_IGN)

    global worker_signature
    worker_signature = signature(logic)


def sweep_alternative(context, candidates, budget, alternative):
    """
    Search one alternative of a sweep.

    Intended to be run only within a `multiprocessing.Pool`, in which
    each worker looks up its own copy of the instance signature, stored
    in the global `laftk.search.worker_signature`.
    """
    return search_alternative(worker_signature, context, alternative, candidates, budget)


def consistency_sweep(sig, universe, depth, context=None, parallel=1, branch_cap=None):
    """
    Look for a command in the empty context, cutting only on molecules of `universe`.

    Each alternative a command can start with is searched in turn; the
    first one that yields a command is the counterexample. A consistent
    instance has none.

    Parameters
    ----------
    sig: InstanceSignature
    universe: iterable
        The cut candidates.
    depth: int
        The search depth.
    context: context, optional
        Sweep from this context instead of the empty one.
    parallel: int
        The number of worker processes to search alternatives in.

    Returns
    -------
    SweepReport
    """
    logger = logging.getLogger("{}.{}".format(__name__, consistency_sweep.__name__))

    start = time.time()
    candidates = list(universe)
    budget = SearchBudget(depth, branch_cap)
    if context is None:
        context = sig.empty_context()
    elif not context.is_empty:
        logger.warning('Sweeping from the context {}, which is not empty.'.format(context))

    missing = [m for m in sig.closure(candidates) if m not in set(candidates)]
    if missing:
        logger.warning('The cut candidates are not closed; {} is missing, among others.'.format(missing[0]))

    alternatives = command_alternatives(context, candidates)
    if parallel > 1:
        pool = multiprocessing.Pool(processes=parallel, initializer=sweep_process_init, initargs=[sig.name])
        try:
            results = pool.imap(functools.partial(sweep_alternative, context, candidates, budget), alternatives)
            counterexample = next((command for command in results if command is not None), None)
        finally:
            pool.terminate()
            pool.join()
    else:
        counterexample = None
        for alternative in alternatives:
            counterexample = search_alternative(sig, context, alternative, candidates, budget)
            if counterexample is not None:
                break

    report = SweepReport(sig.name, depth, len(candidates), len(alternatives), time.time() - start, counterexample)
    logger.info('Sweep finished in {}.'.format(humanize_time(report.elapsed)))
    return report
