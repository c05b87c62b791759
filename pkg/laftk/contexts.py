#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Decompositions and contexts.

A decomposition is a finite tree whose leaves are either positive
(an atom, or the value standing for one) or negative (a refuted
molecule, or the value standing for its refutation). The same trees
serve as typing decompositions, semantic decompositions and machine
values; only the payloads differ.

Contexts store the leaves of the decompositions they have been extended
with. Every context class in laftk offers the same methods:

``lookup_pos(label)``, ``lookup_neg(label)``
    The payload stored under a label, or :class:`~laftk.errors.UnboundLabel`.
``extend(delta)``
    A new context, extended with the leaves of `delta`.
``extend_leaves(leaves)``
    The same, from ``(kind, payload, on_right)`` triples; `on_right`
    says whether the leaf belongs to the right-hand side of a sequent,
    which only matters for the intuitionistic context.
``pos_items()``, ``neg_items()``
    ``(label, payload)`` pairs in store order.
``acc_pos()``, ``acc_neg()``
    The payloads that can be referred to, as frozensets.
``sizes()``
    The ``(p, n, rs)`` triple of store sizes.
``with_values(pos_values, neg_values, classify=None)``
    A context with the same labels and new payloads.

Labels of stable entries are De Bruijn levels: positions counted from
the bottom of the store. Extension only appends, so a label keeps
designating the same entry forever.
"""

import dataclasses
import typing

from laftk.errors import UnboundLabel


POS = '+'
NEG = '-'

#: The payload of the leaves of a decomposition structure.
POINT = ()


@dataclasses.dataclass(frozen=True)
class PosLeaf(object):
    payload: typing.Any = POINT

    def __str__(self):
        return '•' if self.payload == POINT else str(self.payload)


@dataclasses.dataclass(frozen=True)
class NegLeaf(object):
    payload: typing.Any = POINT

    def __str__(self):
        return '∙' + ('•' if self.payload == POINT else str(self.payload))


@dataclasses.dataclass(frozen=True)
class Unit(object):
    def __str__(self):
        return '●'


@dataclasses.dataclass(frozen=True)
class Pair(object):
    left: typing.Any
    right: typing.Any

    def __str__(self):
        return '({}, {})'.format(self.left, self.right)


UNIT = Unit()


def structure(delta):
    """
    Erase the payloads of a decomposition, keeping its shape.

    Parameters
    ----------
    delta: PosLeaf, NegLeaf, Unit or Pair
        Any decomposition.

    Returns
    -------
    PosLeaf, NegLeaf, Unit or Pair
        The decomposition structure of `delta`: every leaf payload is :data:`POINT`.
    """
    if isinstance(delta, PosLeaf):
        return PosLeaf(POINT)
    if isinstance(delta, NegLeaf):
        return NegLeaf(POINT)
    if isinstance(delta, Unit):
        return UNIT
    if isinstance(delta, Pair):
        return Pair(structure(delta.left), structure(delta.right))
    raise TypeError('Not a decomposition: {!r}'.format(delta))


def leaves(delta):
    """
    Generate the ``(kind, payload)`` pairs of the leaves of `delta`, left to right.
    """
    if isinstance(delta, PosLeaf):
        yield POS, delta.payload
    elif isinstance(delta, NegLeaf):
        yield NEG, delta.payload
    elif isinstance(delta, Pair):
        for leaf in leaves(delta.left):
            yield leaf
        for leaf in leaves(delta.right):
            yield leaf
    elif not isinstance(delta, Unit):
        raise TypeError('Not a decomposition: {!r}'.format(delta))


def slotted_leaves(slots, delta):
    """
    Pair the leaves of `delta` with the right-hand flags of a slot tree.

    Parameters
    ----------
    slots: decomposition
        A decomposition whose leaf payloads are booleans, as returned by
        an instance's ``pattern_slots``.
    delta: decomposition
        A decomposition with the same structure.

    Returns
    -------
    list
        ``(kind, payload, on_right)`` triples, ready for ``extend_leaves``.

    Raises
    ------
    ValueError
        If the two trees do not have the same structure.
    """
    if structure(slots) != structure(delta):
        raise ValueError('Decomposition {} does not have the structure {}.'.format(delta, structure(slots)))
    return [
        (kind, payload, on_right)
        for (kind, payload), (_, on_right) in zip(leaves(delta), leaves(slots))
    ]


def from_leaves(items):
    """
    Build a decomposition from ``(kind, payload)`` pairs, nesting pairs to the right.

    An empty list gives the unit decomposition.
    """
    items = list(items)
    if not items:
        return UNIT
    nodes = [PosLeaf(payload) if kind == POS else NegLeaf(payload) for kind, payload in items]
    delta = nodes.pop()
    while nodes:
        delta = Pair(nodes.pop(), delta)
    return delta


def _check_level(label, store, polarity):
    if isinstance(label, bool) or not isinstance(label, int) or not 0 <= label < len(store):
        raise UnboundLabel(label, polarity)
    return store[label]


@dataclasses.dataclass(frozen=True)
class ParametricContext(object):
    """
    A context whose extension does not look at what it stores.

    Positive leaves are appended to `pos`, negative leaves to `neg`.
    Used for the typing contexts of the classical instance, the semantic
    contexts of the trivial models, and the classical machine's
    environments.
    """

    pos: tuple = ()
    neg: tuple = ()

    def lookup_pos(self, label):
        return _check_level(label, self.pos, POS)

    def lookup_neg(self, label):
        return _check_level(label, self.neg, NEG)

    def extend(self, delta):
        return self.extend_leaves((kind, payload, False) for kind, payload in leaves(delta))

    def extend_leaves(self, items):
        pos, neg = list(self.pos), list(self.neg)
        for kind, payload, _ in items:
            if kind == POS:
                pos.append(payload)
            else:
                neg.append(payload)
        return ParametricContext(tuple(pos), tuple(neg))

    def pos_items(self):
        return list(enumerate(self.pos))

    def neg_items(self):
        return list(enumerate(self.neg))

    def acc_pos(self):
        return frozenset(self.pos)

    def acc_neg(self):
        return frozenset(self.neg)

    def sizes(self):
        return len(self.pos), len(self.neg), 0

    def with_values(self, pos_values, neg_values, classify=None):
        return ParametricContext(
            tuple(pos_values[label] for label in range(len(self.pos))),
            tuple(neg_values[label] for label in range(len(self.neg))),
        )

    @property
    def is_empty(self):
        return not self.pos and not self.neg

    def __str__(self):
        return '(pos=[{}], neg=[{}])'.format(', '.join(str(a) for a in self.pos), ', '.join(str(m) for m in self.neg))


def extend_parametric(context, delta):
    return context.extend(delta)


def lookup_pos(context, label):
    return context.lookup_pos(label)


def lookup_neg(context, label):
    return context.lookup_neg(label)


def acc_pos(context):
    return context.acc_pos()


def acc_neg(context):
    return context.acc_neg()
