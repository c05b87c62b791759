#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Formulae and patterns shared by the classical and intuitionistic instances.

Both instances use the same connective classes where they coincide: a
positive literal is an :class:`Atom`, a negative literal a
:class:`NegAtom` (written ``~a``), and the intuitionistic disjunction is
:class:`OrP`. Each instance validates that a formula only uses its own
connectives.
"""

import collections
import dataclasses

from laftk.contexts import NEG
from laftk.util import ordered_unique


class Formula(object):
    """Base of the formula classes; provides printing in the surface syntax."""

    positive = True

    def __str__(self):
        return format_formula(self)


@dataclasses.dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclasses.dataclass(frozen=True)
class NegAtom(Formula):
    name: str

    positive = False


@dataclasses.dataclass(frozen=True)
class TrueP(Formula):
    pass


@dataclasses.dataclass(frozen=True)
class FalseP(Formula):
    pass


@dataclasses.dataclass(frozen=True)
class TrueN(Formula):
    positive = False


@dataclasses.dataclass(frozen=True)
class FalseN(Formula):
    positive = False


@dataclasses.dataclass(frozen=True)
class AndP(Formula):
    left: Formula
    right: Formula


@dataclasses.dataclass(frozen=True)
class OrP(Formula):
    left: Formula
    right: Formula


@dataclasses.dataclass(frozen=True)
class AndN(Formula):
    left: Formula
    right: Formula

    positive = False


@dataclasses.dataclass(frozen=True)
class OrN(Formula):
    left: Formula
    right: Formula

    positive = False


@dataclasses.dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula

    positive = False


@dataclasses.dataclass(frozen=True)
class Not(Formula):
    body: Formula

    positive = False


CONSTANTS = collections.OrderedDict([
    (TrueP, 'true+'),
    (FalseP, 'false+'),
    (TrueN, 'true-'),
    (FalseN, 'false-'),
])

# (operator, precedence); binary operators bind tighter as precedence grows
OPERATORS = {
    Imp: ('=>', 1),
    OrP: ('|+', 2),
    OrN: ('|-', 2),
    AndP: ('&+', 3),
    AndN: ('&-', 3),
}

NOT_PRECEDENCE = 4


def _format(formula, needed):
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, NegAtom):
        return '~' + formula.name
    if type(formula) in CONSTANTS:
        return CONSTANTS[type(formula)]
    if isinstance(formula, Not):
        text, precedence = 'not ' + _format(formula.body, NOT_PRECEDENCE), NOT_PRECEDENCE
    elif type(formula) in OPERATORS:
        operator, precedence = OPERATORS[type(formula)]
        if isinstance(formula, Imp):
            # right associative
            left, right = _format(formula.left, precedence + 1), _format(formula.right, precedence)
        else:
            left, right = _format(formula.left, precedence), _format(formula.right, precedence + 1)
        text = '{} {} {}'.format(left, operator, right)
    else:
        raise TypeError('Not a formula: {!r}'.format(formula))
    if precedence < needed:
        text = '(' + text + ')'
    return text


def format_formula(formula):
    """
    Render a formula in the surface syntax, with as few parentheses as the grammar allows.
    """
    return _format(formula, 0)


def subformulae(formula):
    """
    Generate `formula` and all its subformulae, outermost first.
    """
    yield formula
    for field in dataclasses.fields(formula):
        value = getattr(formula, field.name)
        if isinstance(value, Formula):
            for sub in subformulae(value):
                yield sub


def size(formula):
    """
    Count the connectives, literals and constants of a formula.

    Negation of a whole formula by De Morgan duality preserves it.
    """
    return sum(1 for _ in subformulae(formula))


def check_connectives(formula, allowed, logic):
    for sub in subformulae(formula):
        if type(sub) not in allowed:
            raise ValueError('{} is not a formula of {}: {} is not allowed.'.format(formula, logic, type(sub).__name__))


#
# patterns
#

class Pattern(object):
    """Base of the pattern classes; provides printing in the surface syntax."""

    #: the surface keyword of a nullary pattern
    keyword = None
    #: whether the pattern is written with an infix operator
    infix = False

    def __str__(self):
        return format_pattern(self)


@dataclasses.dataclass(frozen=True)
class PairPat(Pattern):
    left: Pattern
    right: Pattern


@dataclasses.dataclass(frozen=True)
class Inj(Pattern):
    index: int
    pattern: Pattern


def _operand(pattern):
    text = format_pattern(pattern)
    return '(' + text + ')' if pattern.infix else text


def format_pattern(pattern):
    if pattern.keyword is not None:
        return pattern.keyword
    if isinstance(pattern, PairPat):
        return '({}, {})'.format(format_pattern(pattern.left), format_pattern(pattern.right))
    if isinstance(pattern, Inj):
        return '{} {}'.format('inl' if pattern.index == 1 else 'inr', _operand(pattern.pattern))
    return pattern.format_compound(_operand)


def pattern_key(pattern, kinds):
    """
    A sort key ordering patterns by kind (in the order of `kinds`), then by their fields.
    """
    fields = []
    for field in dataclasses.fields(pattern):
        value = getattr(pattern, field.name)
        fields.append(value if isinstance(value, int) else pattern_key(value, kinds))
    return kinds.index(type(pattern)), tuple(fields)


def close_under_leaves(decompositions, leaves_of, molecules):
    """
    Close a list of molecules under the refuted leaves of their decompositions.

    Parameters
    ----------
    decompositions: callable
        The instance's decomposition function.
    leaves_of: callable
        Maps a decomposition to its ``(kind, payload)`` leaves.
    molecules: iterable
        The starting molecules.

    Returns
    -------
    list
        The closure, starting molecules first, then in discovery order.
    """
    closure = ordered_unique(molecules)
    seen = set(closure)
    i = 0
    while i < len(closure):
        for _, delta in decompositions(closure[i]):
            for kind, payload in leaves_of(delta):
                if kind == NEG and payload not in seen:
                    seen.add(payload)
                    closure.append(payload)
        i += 1
    return closure

