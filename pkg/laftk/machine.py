#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
An environment machine reducing commands by head reduction.

A configuration is an environment and a command. The one reduction rule
is the cut rule

    env, < f : M | p . d >   steps to   env extended by v, f(p)

where `v` is the value of `d` in `env`: labels are looked up and branch
maps become closures capturing `env`. Selecting a negative label bound to a
closure reduces the same way, in the closure's environment; selecting
one bound to an opaque value halts, the answer having been delivered to
the outside.

Environments are contexts of the instance, storing values; they are
extended following the pattern's slots, so that J environments route
values to the right-hand slot exactly when the typing context would.
"""

import dataclasses
import enum
import logging
import typing

from laftk import kernel
from laftk.contexts import NegLeaf, Pair, PosLeaf, UNIT, slotted_leaves
from laftk.errors import UnboundLabel
from laftk.instances.j import JLabel


@dataclasses.dataclass(frozen=True)
class PosVal(object):
    token: str

    def __str__(self):
        return self.token


@dataclasses.dataclass(frozen=True)
class Closure(object):
    branches: kernel.Branches
    env: typing.Any

    def __str__(self):
        return 'closure({})'.format(', '.join(str(p) for p in self.branches.patterns()))


@dataclasses.dataclass(frozen=True)
class Opaque(object):
    name: str

    def __str__(self):
        return self.name


@dataclasses.dataclass(frozen=True)
class Config(object):
    env: typing.Any
    command: typing.Any


class MachineError(enum.Enum):
    MISSING_BRANCH = 'MissingBranch'
    UNBOUND_LABEL = 'UnboundLabel'
    SHAPE_MISMATCH = 'ShapeMismatch'

    def __str__(self):
        return self.value


@dataclasses.dataclass(frozen=True)
class ReachedOpaque(object):
    name: str
    pattern: typing.Any

    def __str__(self):
        return 'reached {} with {}'.format(self.name, self.pattern)


@dataclasses.dataclass(frozen=True)
class Next(object):
    config: Config


@dataclasses.dataclass(frozen=True)
class Halt(object):
    reason: ReachedOpaque


@dataclasses.dataclass(frozen=True)
class Stuck(object):
    error: MachineError
    message: str = ''


@dataclasses.dataclass(frozen=True)
class Halted(object):
    trace: tuple
    reason: ReachedOpaque

    def __str__(self):
        return 'halted after {} steps: {}'.format(len(self.trace), self.reason)


@dataclasses.dataclass(frozen=True)
class StuckAt(object):
    trace: tuple
    error: MachineError
    message: str = ''

    def __str__(self):
        return 'stuck after {} steps: {}: {}'.format(len(self.trace), self.error, self.message)


@dataclasses.dataclass(frozen=True)
class OutOfFuel(object):
    trace: tuple

    def __str__(self):
        return 'out of fuel after {} steps'.format(len(self.trace))


def eval_dec(env, term):
    """
    Evaluate a decomposition term to a decomposition value.

    Labels are looked up in `env` and branch maps become closures over
    `env`.

    Raises
    ------
    UnboundLabel
        If `term` uses a label `env` does not bind.
    """
    if isinstance(term, kernel.UnitTerm):
        return UNIT
    if isinstance(term, kernel.PairTerm):
        return Pair(eval_dec(env, term.left), eval_dec(env, term.right))
    if isinstance(term, kernel.LabelP):
        return PosLeaf(env.lookup_pos(term.label))
    if isinstance(term, kernel.Branches):
        return NegLeaf(Closure(term, env))
    raise TypeError('Not a decomposition term: {!r}'.format(term))


def _reduce(sig, env, term, branches, base):
    """Reduce the cut of `branches` against `term`, with `term` evaluated in `env` and `branches` closed over `base`."""
    if not isinstance(term, kernel.PosTerm):
        return Stuck(MachineError.SHAPE_MISMATCH, '{} is not a positive term'.format(type(term).__name__))
    try:
        value = eval_dec(env, term.dec)
    except UnboundLabel as e:
        return Stuck(MachineError.UNBOUND_LABEL, str(e))
    command = branches.get(term.pattern)
    if command is None:
        return Stuck(MachineError.MISSING_BRANCH, 'no branch for {}'.format(term.pattern))
    try:
        items = slotted_leaves(sig.pattern_slots(term.pattern), value)
    except (ValueError, TypeError) as e:
        return Stuck(MachineError.SHAPE_MISMATCH, str(e))
    return Next(Config(base.extend_leaves(items), command))


def step(sig, config):
    """
    Perform one reduction step.

    Returns
    -------
    Next, Halt or Stuck
        Never raises on ill-formed configurations; they get stuck.
    """
    command = config.command
    if isinstance(command, kernel.Cut):
        return _reduce(sig, config.env, command.positive, command.branches, config.env)
    if isinstance(command, kernel.Select):
        try:
            negative = config.env.lookup_neg(command.label)
        except UnboundLabel as e:
            return Stuck(MachineError.UNBOUND_LABEL, str(e))
        if isinstance(negative, Opaque):
            pattern = getattr(command.positive, 'pattern', None)
            return Halt(ReachedOpaque(negative.name, pattern))
        return _reduce(sig, config.env, command.positive, negative.branches, negative.env)
    return Stuck(MachineError.SHAPE_MISMATCH, '{} is not a command'.format(type(command).__name__))


def format_label(label):
    return label.value if isinstance(label, JLabel) else str(label)


def describe(config):
    """
    Summarise a configuration as its command head and environment sizes.
    """
    command = config.command
    if isinstance(command, kernel.Select):
        head = 'select ${} {}'.format(format_label(command.label), getattr(command.positive, 'pattern', '?'))
    elif isinstance(command, kernel.Cut):
        head = 'cut {}'.format(getattr(command.positive, 'pattern', '?'))
    else:
        head = '?'
    return '{} | env sizes ({},{},{})'.format(head, *config.env.sizes())


def run(sig, config, fuel=10000):
    """
    Run the machine from `config` for at most `fuel` steps.

    Each step adds ``step N: <summary>`` to the trace, describing the
    configuration reduced at that step; the configuration on which the
    machine halts or gets stuck is the last one described.

    Returns
    -------
    Halted, StuckAt or OutOfFuel

    Raises
    ------
    ValueError
        If `fuel` is less than 1.
    """
    logger = logging.getLogger("{}.{}".format(__name__, run.__name__))

    if fuel < 1:
        raise ValueError('The fuel must be at least 1, not {}.'.format(fuel))

    trace = []
    for n in range(1, fuel + 1):
        line = 'step {}: {}'.format(n, describe(config))
        logger.debug(line)
        trace.append(line)
        outcome = step(sig, config)
        if isinstance(outcome, Halt):
            return Halted(tuple(trace), outcome.reason)
        if isinstance(outcome, Stuck):
            return StuckAt(tuple(trace), outcome.error, outcome.message)
        config = outcome.config
    return OutOfFuel(tuple(trace))


def initial_env(sig, context):
    """
    Build an environment with the labels of the typing context `context`.

    Positive labels get fresh tokens ``x0``, ``x1``... in label order and
    negative labels opaque values ``n0``, ``n1``...; the J absurdity
    label gets the token ``absurd``.
    """
    pos_values = {}
    fresh = 0
    for label, _ in context.pos_items():
        if label is JLabel.ABSURD:
            pos_values[label] = PosVal('absurd')
        else:
            pos_values[label] = PosVal('x{}'.format(fresh))
            fresh += 1
    neg_values = {label: Opaque('n{}'.format(i)) for i, (label, _) in enumerate(context.neg_items())}
    return context.with_values(pos_values, neg_values)
