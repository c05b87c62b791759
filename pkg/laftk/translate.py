#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Render typing judgments as the focused sequents they encode.

K1 judgments become one-sided classical sequents ``|- Θ`` and J
judgments two-sided intuitionistic sequents ``Γ |- Δ``. The formula in
focus, if any, is written in brackets. Formulae are listed once each, in
the order they first occur in the context's stores.
"""

import logging

from laftk import kernel
from laftk.contexts import NegLeaf, PosLeaf
from laftk.errors import SingletonViolation
from laftk.instances import j, k1
from laftk.util import ordered_unique


def _payloads(items):
    return ordered_unique(payload for _, payload in items)


def _focus(judgment):
    """Return ``(kind, formula)``: kind is 'command', 'init', 'refute' or 'positive'."""
    if isinstance(judgment, kernel.CmdSeq):
        return 'command', None
    if isinstance(judgment, kernel.PosSeq):
        return 'positive', judgment.molecule
    if isinstance(judgment, kernel.DecSeq):
        delta = judgment.decomposition
        if isinstance(delta, PosLeaf):
            return 'init', delta.payload
        if isinstance(delta, NegLeaf):
            return 'refute', delta.payload
        raise ValueError('Only decompositions that are a single leaf have a sequent rendering, not {}.'.format(delta))
    raise TypeError('Not a judgment: {!r}'.format(judgment))


def translate_k1(judgment):
    """
    Render a K1 judgment as a one-sided sequent.

    The context contributes the negation of each of its atoms, then each
    of its molecules. The focus is the atom of an init judgment, the
    negation of a refuted molecule, or the molecule of a positive
    judgment.
    """
    context = judgment.context
    items = ['~{}'.format(atom.name) for atom in _payloads(context.pos_items())]
    items.extend(str(molecule) for molecule in _payloads(context.neg_items()))

    kind, formula = _focus(judgment)
    text = '|- ' + ', '.join(items) if items else '|-'
    if kind == 'command':
        return text
    if kind == 'refute':
        formula = k1.negate(formula)
    return '{} [{}]'.format(text, formula)


def _j_sides(context):
    left, right = [], []
    for label, atom in context.pos_items():
        if label is j.JLabel.ABSURD:
            continue
        (left if atom.side is j.Side.RIGHT else right).append(atom.formula)
    for _, molecule in context.neg_items():
        (left if molecule.side is j.Side.LEFT else right).append(molecule.formula)
    return ordered_unique(left), ordered_unique(right)


def _check_singleton(context, right):
    logger = logging.getLogger("{}.{}".format(__name__, _check_singleton.__name__))

    if len(right) > 1:
        logger.warning('The context {} has {} formulae on the right.'.format(context, len(right)))
        raise SingletonViolation('A J sequent has at most one formula on the right, not {}.'.format(
            ', '.join(str(f) for f in right)
        ))


def _two_sided(left, right, left_focus=None, right_focus=None):
    text_left = ', '.join(str(f) for f in left)
    if left_focus is not None:
        text_left = '{} [{}]'.format(text_left, left_focus).strip()
    text_right = ', '.join(str(f) for f in right)
    if right_focus is not None:
        text_right = '[{}]'.format(right_focus)
    return ' '.join(part for part in (text_left, '|-', text_right) if part)


def _left_focused(kind, positioned):
    # a refuted molecule is focused on the side opposite to its own
    if kind == 'refute':
        return positioned.side is j.Side.RIGHT
    return positioned.side is j.Side.LEFT


def translate_j(judgment):
    """
    Render a J judgment as a two-sided sequent.

    Atoms on the right and molecules on the left of the context are
    hypotheses, written on the left; the right-hand slot is the
    conclusion. A command is rendered unfocused. Init on a negative
    literal, a positive judgment on a left molecule and the refutation of
    a right molecule are focused on the left, keeping the conclusion.
    The other judgments are focused on the right, where the focus takes
    the place of the conclusion. The absurdity atom, which every J
    context has, is not written.

    Raises
    ------
    SingletonViolation
        If a rendering that keeps the conclusion finds more than one
        formula on the right.
    """
    left, right = _j_sides(judgment.context)
    kind, positioned = _focus(judgment)
    if kind == 'command':
        _check_singleton(judgment.context, right)
        return _two_sided(left, right)
    if _left_focused(kind, positioned):
        _check_singleton(judgment.context, right)
        return _two_sided(left, right, left_focus=positioned.formula)
    return _two_sided(left, [], right_focus=positioned.formula)


def translate(logic, judgment):
    if logic == j.NAME:
        return translate_j(judgment)
    return translate_k1(judgment)
