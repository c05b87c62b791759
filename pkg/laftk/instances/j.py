#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
The intuitionistic two-sided instance, J.

Formulae are positioned on the left or the right of a sequent. The
molecules are positive formulae on the right and negative formulae on
the left; the atoms are positive literals on the right, negative
literals on the left, and ``false-`` on the left. Negative literals and
``false-`` on the left are atoms and molecules at once; which one a
leaf holds is said by the leaf, not by the formula.

Typing contexts keep two stable stores, which only grow, and a single
right-hand slot, which every right-hand atom or molecule overwrites.
That slot holds the unique formula on the right of the sequent the
context stands for. ``false-`` on the left is always available, under
the reserved label ``#absurd``.
"""

import dataclasses
import enum
import functools
import typing

from laftk.contexts import NEG, POS, NegLeaf, Pair, PosLeaf, UNIT, leaves
from laftk.errors import UnboundLabel
from laftk.instances.common import (
    AndN, AndP, Atom, FalseN, FalseP, Imp, Inj, NegAtom, Not, OrP, PairPat, Pattern, TrueN, TrueP,
    check_connectives, close_under_leaves, pattern_key as _pattern_key, size as formula_size, subformulae,
)
from laftk.kernel import InstanceSignature


NAME = 'j'

FORMULA_CLASSES = (Atom, NegAtom, TrueP, FalseP, TrueN, FalseN, AndP, OrP, AndN, Imp, Not)


class Side(enum.Enum):
    LEFT = 'L'
    RIGHT = 'R'


class JLabel(enum.Enum):
    """The reserved labels: the right-hand slot and the absurdity atom."""

    RS = 'rs'
    ABSURD = 'absurd'


@dataclasses.dataclass(frozen=True)
class Positioned(object):
    formula: typing.Any
    side: Side

    def __str__(self):
        return '{} @{}'.format(self.formula, self.side.value)


def left(formula):
    return Positioned(formula, Side.LEFT)


def right(formula):
    return Positioned(formula, Side.RIGHT)


ABSURD_ATOM = left(FalseN())


#
# patterns
#

@dataclasses.dataclass(frozen=True)
class PposR(Pattern):
    keyword = 'pos'


@dataclasses.dataclass(frozen=True)
class PnegR(Pattern):
    keyword = 'neg'


@dataclasses.dataclass(frozen=True)
class PtrueR(Pattern):
    keyword = 'unit'


@dataclasses.dataclass(frozen=True)
class PposL(Pattern):
    keyword = 'pos_l'


@dataclasses.dataclass(frozen=True)
class PnegL(Pattern):
    keyword = 'neg_l'


@dataclasses.dataclass(frozen=True)
class PtrueL(Pattern):
    keyword = 'unit_l'


@dataclasses.dataclass(frozen=True)
class Cons(Pattern):
    left: Pattern
    right: Pattern

    infix = True

    def format_compound(self, operand):
        return '{} :: {}'.format(operand(self.left), operand(self.right))


@dataclasses.dataclass(frozen=True)
class Proj(Pattern):
    index: int
    pattern: Pattern

    def format_compound(self, operand):
        return '{} {}'.format('fst' if self.index == 1 else 'snd', operand(self.pattern))


@dataclasses.dataclass(frozen=True)
class Switch(Pattern):
    pattern: Pattern

    def format_compound(self, operand):
        return 'switch {}'.format(operand(self.pattern))


PATTERN_CLASSES = (PposR, PnegR, PtrueR, PairPat, Inj, PposL, PnegL, PtrueL, Cons, Proj, Switch)


def validate_formula(formula):
    check_connectives(formula, FORMULA_CLASSES, NAME)


def is_molecule(value):
    return isinstance(value, Positioned) and value.formula.positive == (value.side is Side.RIGHT)


def is_atom(value):
    if not isinstance(value, Positioned):
        return False
    if value.side is Side.RIGHT:
        return isinstance(value.formula, Atom)
    return isinstance(value.formula, (NegAtom, FalseN))


def validate_molecule(molecule):
    if not isinstance(molecule, Positioned):
        raise ValueError('{} has no side, so it is not a molecule of {}.'.format(molecule, NAME))
    validate_formula(molecule.formula)
    if not is_molecule(molecule):
        raise ValueError('{} is not a molecule of {}: molecules are positive on the right or negative on the left.'.format(molecule, NAME))


def validate_atom(atom):
    if not is_atom(atom):
        raise ValueError('{} is not an atom of {}.'.format(atom, NAME))


def _decompose(formula, side):
    if side is Side.RIGHT:
        if not formula.positive:
            return [(PnegR(), NegLeaf(left(formula)))]
        if isinstance(formula, Atom):
            return [(PposR(), PosLeaf(right(formula)))]
        if isinstance(formula, TrueP):
            return [(PtrueR(), UNIT)]
        if isinstance(formula, FalseP):
            return []
        if isinstance(formula, AndP):
            return [
                (PairPat(p, q), Pair(d, e))
                for p, d in _decompose(formula.left, side)
                for q, e in _decompose(formula.right, side)
            ]
        if isinstance(formula, OrP):
            return (
                [(Inj(1, p), d) for p, d in _decompose(formula.left, side)] +
                [(Inj(2, p), d) for p, d in _decompose(formula.right, side)]
            )
    else:
        if formula.positive:
            return [(PnegL(), NegLeaf(right(formula)))]
        if isinstance(formula, NegAtom):
            return [(PposL(), PosLeaf(left(formula)))]
        if isinstance(formula, FalseN):
            return [(PtrueL(), PosLeaf(ABSURD_ATOM))]
        if isinstance(formula, TrueN):
            return []
        if isinstance(formula, Not):
            return [(Switch(p), Pair(d, PosLeaf(ABSURD_ATOM))) for p, d in _decompose(formula.body, Side.RIGHT)]
        if isinstance(formula, Imp):
            return [
                (Cons(p, q), Pair(d, e))
                for p, d in _decompose(formula.left, Side.RIGHT)
                for q, e in _decompose(formula.right, Side.LEFT)
            ]
        if isinstance(formula, AndN):
            return (
                [(Proj(1, p), d) for p, d in _decompose(formula.left, side)] +
                [(Proj(2, p), d) for p, d in _decompose(formula.right, side)]
            )
    raise TypeError('Not a formula of {}: {!r}'.format(NAME, formula))


@functools.lru_cache(maxsize=None)
def _cached_decompositions(molecule):
    validate_molecule(molecule)
    return tuple(_decompose(molecule.formula, molecule.side))


def decompositions_j(molecule):
    """
    List the ``(pattern, decomposition)`` pairs of a positioned molecule.

    On the right, positive connectives are decomposed and a negative
    formula becomes the refuted leaf ``∙(N @L)``. On the left, negative
    connectives are decomposed and a positive formula becomes the
    refuted leaf ``∙(P @R)``. ``not A`` on the left decomposes ``A`` on
    the right next to an absurdity leaf; ``A => B`` on the left
    decomposes ``A`` on the right and ``B`` on the left.

    Raises
    ------
    ValueError
        If `molecule` is not a molecule of J.
    """
    return list(_cached_decompositions(molecule))


def pattern_slots(pattern):
    if isinstance(pattern, (PposR, PnegR)):
        return PosLeaf(False) if isinstance(pattern, PposR) else NegLeaf(False)
    if isinstance(pattern, (PposL, PtrueL)):
        return PosLeaf(True)
    if isinstance(pattern, PnegL):
        return NegLeaf(True)
    if isinstance(pattern, PtrueR):
        return UNIT
    if isinstance(pattern, (PairPat, Cons)):
        return Pair(pattern_slots(pattern.left), pattern_slots(pattern.right))
    if isinstance(pattern, (Inj, Proj)):
        return pattern_slots(pattern.pattern)
    if isinstance(pattern, Switch):
        return Pair(pattern_slots(pattern.pattern), PosLeaf(True))
    raise TypeError('Not a pattern of {}: {!r}'.format(NAME, pattern))


def pattern_key(pattern):
    return _pattern_key(pattern, PATTERN_CLASSES)


#
# typing contexts
#

@dataclasses.dataclass(frozen=True)
class RAtom(object):
    payload: typing.Any


@dataclasses.dataclass(frozen=True)
class RMol(object):
    payload: typing.Any


def on_right_by_side(kind, payload):
    """Typing contexts route atoms on the left and molecules on the right to the right-hand slot."""
    return payload.side is (Side.LEFT if kind == POS else Side.RIGHT)


@dataclasses.dataclass(frozen=True)
class JContext(object):
    """
    A context with stable stores and one overwritable right-hand slot.

    Attributes
    ----------
    pos_stable: tuple
        Positive entries that stay, under labels ``#0``, ``#1``...
    neg_stable: tuple
        Negative entries that stay, under labels ``$0``, ``$1``...
    right_slot: RAtom, RMol or None
        The right-hand entry, under ``#rs`` (an atom) or ``$rs`` (a molecule).
    absurd: object
        The payload of ``#absurd``.
    classify: callable
        Decides from ``(kind, payload)`` whether a leaf goes to the
        right-hand slot when extending with a decomposition.
    """

    pos_stable: tuple = ()
    neg_stable: tuple = ()
    right_slot: typing.Any = None
    absurd: typing.Any = ABSURD_ATOM
    classify: typing.Callable = dataclasses.field(default=on_right_by_side, compare=False, repr=False)

    def lookup_pos(self, label):
        if label is JLabel.ABSURD:
            return self.absurd
        if label is JLabel.RS:
            if isinstance(self.right_slot, RAtom):
                return self.right_slot.payload
        elif isinstance(label, int) and not isinstance(label, bool) and 0 <= label < len(self.pos_stable):
            return self.pos_stable[label]
        raise UnboundLabel(label, POS)

    def lookup_neg(self, label):
        if label is JLabel.RS:
            if isinstance(self.right_slot, RMol):
                return self.right_slot.payload
        elif isinstance(label, int) and not isinstance(label, bool) and 0 <= label < len(self.neg_stable):
            return self.neg_stable[label]
        raise UnboundLabel(label, NEG)

    def extend(self, delta):
        return self.extend_leaves((kind, payload, self.classify(kind, payload)) for kind, payload in leaves(delta))

    def extend_leaves(self, items):
        pos, neg, slot = list(self.pos_stable), list(self.neg_stable), self.right_slot
        for kind, payload, on_right in items:
            if on_right:
                # either kind of right-hand entry replaces both kinds
                slot = RAtom(payload) if kind == POS else RMol(payload)
            elif kind == POS:
                pos.append(payload)
            else:
                neg.append(payload)
        return dataclasses.replace(self, pos_stable=tuple(pos), neg_stable=tuple(neg), right_slot=slot)

    def pos_items(self):
        items = list(enumerate(self.pos_stable))
        if isinstance(self.right_slot, RAtom):
            items.append((JLabel.RS, self.right_slot.payload))
        items.append((JLabel.ABSURD, self.absurd))
        return items

    def neg_items(self):
        items = list(enumerate(self.neg_stable))
        if isinstance(self.right_slot, RMol):
            items.append((JLabel.RS, self.right_slot.payload))
        return items

    def acc_pos(self):
        return frozenset(payload for _, payload in self.pos_items())

    def acc_neg(self):
        return frozenset(payload for _, payload in self.neg_items())

    def sizes(self):
        return len(self.pos_stable), len(self.neg_stable), 0 if self.right_slot is None else 1

    def with_values(self, pos_values, neg_values, classify=None):
        if isinstance(self.right_slot, RAtom):
            slot = RAtom(pos_values[JLabel.RS])
        elif isinstance(self.right_slot, RMol):
            slot = RMol(neg_values[JLabel.RS])
        else:
            slot = None
        return JContext(
            pos_stable=tuple(pos_values[label] for label in range(len(self.pos_stable))),
            neg_stable=tuple(neg_values[label] for label in range(len(self.neg_stable))),
            right_slot=slot,
            absurd=pos_values[JLabel.ABSURD],
            classify=classify or self.classify,
        )

    @property
    def is_empty(self):
        """True when only the absurdity atom is available."""
        return not self.pos_stable and not self.neg_stable and self.right_slot is None

    def __str__(self):
        slot = '' if self.right_slot is None else ', rs={}'.format(self.right_slot.payload)
        return '(pos=[{}], neg=[{}]{})'.format(
            ', '.join(str(a) for a in self.pos_stable), ', '.join(str(m) for m in self.neg_stable), slot
        )


def extend_j(context, delta):
    return context.extend(delta)


def empty_context():
    return JContext()


def size(molecule):
    return formula_size(molecule.formula)


def closure(molecules):
    """
    The molecules that the given positioned formulae can give rise to.

    Every subformula is placed where it would be a molecule (positive on
    the right, negative on the left); the result is then closed under
    the refuted leaves of decompositions.
    """
    placed = []
    for molecule in molecules:
        if not isinstance(molecule, Positioned):
            raise ValueError('{} has no side.'.format(molecule))
        validate_formula(molecule.formula)
        if is_molecule(molecule):
            placed.append(molecule)
        for sub in subformulae(molecule.formula):
            placed.append(right(sub) if sub.positive else left(sub))
    return close_under_leaves(decompositions_j, leaves, placed)


DEFAULT_MOLECULES = [
    left(Imp(Atom('a'), Atom('a'))),
    left(FalseN()),
    right(FalseP()),
]


@functools.lru_cache(maxsize=None)
def j_signature():
    return InstanceSignature(
        name=NAME,
        decompositions=decompositions_j,
        pattern_slots=pattern_slots,
        pattern_key=pattern_key,
        empty_context=empty_context,
        closure=closure,
        size=size,
        validate_molecule=validate_molecule,
        validate_atom=validate_atom,
        default_universe=closure(DEFAULT_MOLECULES),
        parametric=False,
    )
