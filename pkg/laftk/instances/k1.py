#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
The classical one-sided instance, K1.

Formulae are polarised classical formulae over atoms ``a`` and their
negations ``~a``. The molecules are the positive formulae; the atoms of
the instance are the positive atoms. Negation is De Morgan duality,
which swaps the polarity of every connective.

Decomposing a molecule follows its positive connectives down to the
first negative subformulae, each of which becomes a refuted leaf holding
its negation:

======================  ==============================================
Formula                 Decompositions
======================  ==============================================
``a``                   ``pos`` into the atom leaf ``a``
``true+``               ``unit`` into ``●``
``false+``              none
``A &+ B``              ``(p, q)`` for every ``p`` of A and ``q`` of B
``A |+ B``              ``inl p`` for every ``p`` of A, then ``inr q``
negative ``N``          ``neg`` into the refuted leaf ``∙(negation of N)``
======================  ==============================================

Typing contexts are :class:`~laftk.contexts.ParametricContext` instances.
"""

import dataclasses
import functools

from laftk.contexts import NegLeaf, Pair, ParametricContext, PosLeaf, UNIT, leaves
from laftk.instances.common import (
    AndN, AndP, Atom, FalseN, FalseP, Inj, NegAtom, OrN, OrP, PairPat, Pattern, TrueN, TrueP,
    check_connectives, close_under_leaves, pattern_key as _pattern_key, size, subformulae,
)
from laftk.kernel import InstanceSignature


NAME = 'k1'

FORMULA_CLASSES = (Atom, NegAtom, TrueP, FalseP, TrueN, FalseN, AndP, OrP, AndN, OrN)


@dataclasses.dataclass(frozen=True)
class Ppos(Pattern):
    keyword = 'pos'


@dataclasses.dataclass(frozen=True)
class Pneg(Pattern):
    keyword = 'neg'


@dataclasses.dataclass(frozen=True)
class Ptrue(Pattern):
    keyword = 'unit'


PATTERN_CLASSES = (Ppos, Pneg, Ptrue, PairPat, Inj)

DUALS = {
    TrueP: FalseN,
    FalseN: TrueP,
    FalseP: TrueN,
    TrueN: FalseP,
    AndP: OrN,
    OrN: AndP,
    OrP: AndN,
    AndN: OrP,
}


def validate_formula(formula):
    check_connectives(formula, FORMULA_CLASSES, NAME)


def validate_molecule(molecule):
    validate_formula(molecule)
    if not molecule.positive:
        raise ValueError('{} is negative, so it is not a molecule of {}.'.format(molecule, NAME))


def validate_atom(atom):
    if not isinstance(atom, Atom):
        raise ValueError('{} is not an atom of {}.'.format(atom, NAME))


def polarity(formula):
    return '+' if formula.positive else '-'


def negate(formula):
    """
    Negate a formula by De Morgan duality.

    >>> print(negate(OrP(Atom('a'), TrueN())))
    ~a &- false+
    """
    if isinstance(formula, Atom):
        return NegAtom(formula.name)
    if isinstance(formula, NegAtom):
        return Atom(formula.name)
    dual = DUALS[type(formula)]
    if dataclasses.fields(formula):
        return dual(negate(formula.left), negate(formula.right))
    return dual()


def _decompose(formula):
    if not formula.positive:
        return [(Pneg(), NegLeaf(negate(formula)))]
    if isinstance(formula, Atom):
        return [(Ppos(), PosLeaf(formula))]
    if isinstance(formula, TrueP):
        return [(Ptrue(), UNIT)]
    if isinstance(formula, FalseP):
        return []
    if isinstance(formula, AndP):
        return [
            (PairPat(p, q), Pair(left, right))
            for p, left in _decompose(formula.left)
            for q, right in _decompose(formula.right)
        ]
    if isinstance(formula, OrP):
        return (
            [(Inj(1, p), delta) for p, delta in _decompose(formula.left)] +
            [(Inj(2, p), delta) for p, delta in _decompose(formula.right)]
        )
    raise TypeError('Not a formula of {}: {!r}'.format(NAME, formula))


@functools.lru_cache(maxsize=None)
def _cached_decompositions(molecule):
    validate_molecule(molecule)
    return tuple(_decompose(molecule))


def decompositions_k1(molecule):
    """
    List the ``(pattern, decomposition)`` pairs of a positive formula.

    Parameters
    ----------
    molecule: Formula
        A positive formula.

    Returns
    -------
    list
        The pairs, left operand before right and ``inl`` before ``inr``.

    Raises
    ------
    ValueError
        If `molecule` is negative or uses connectives foreign to K1.
    """
    return list(_cached_decompositions(molecule))


def pattern_slots(pattern):
    if isinstance(pattern, Ppos):
        return PosLeaf(False)
    if isinstance(pattern, Pneg):
        return NegLeaf(False)
    if isinstance(pattern, Ptrue):
        return UNIT
    if isinstance(pattern, PairPat):
        return Pair(pattern_slots(pattern.left), pattern_slots(pattern.right))
    if isinstance(pattern, Inj):
        return pattern_slots(pattern.pattern)
    raise TypeError('Not a pattern of {}: {!r}'.format(NAME, pattern))


def pattern_key(pattern):
    return _pattern_key(pattern, PATTERN_CLASSES)


def closure(formulae):
    """
    The molecules that the given formulae can give rise to.

    Every subformula contributes itself if it is positive and its
    negation otherwise; the result is then closed under the refuted
    leaves of decompositions.
    """
    molecules = []
    for formula in formulae:
        validate_formula(formula)
        for sub in subformulae(formula):
            molecules.append(sub if sub.positive else negate(sub))
    return close_under_leaves(decompositions_k1, leaves, molecules)


def empty_context():
    return ParametricContext()


DEFAULT_FORMULAE = [
    Atom('a'),
    NegAtom('a'),
    TrueP(),
    FalseP(),
    AndP(Atom('a'), NegAtom('a')),
    OrP(Atom('a'), NegAtom('a')),
]


@functools.lru_cache(maxsize=None)
def k1_signature():
    return InstanceSignature(
        name=NAME,
        decompositions=decompositions_k1,
        pattern_slots=pattern_slots,
        pattern_key=pattern_key,
        empty_context=empty_context,
        closure=closure,
        size=size,
        validate_molecule=validate_molecule,
        validate_atom=validate_atom,
        default_universe=closure(DEFAULT_FORMULAE),
        parametric=True,
    )
