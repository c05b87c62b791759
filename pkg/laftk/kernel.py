#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
The generic typing system for proof-terms, parameterised by an instance.

There are three kinds of sequents: a positive term proves a molecule, a
decomposition term inhabits a decomposition, and a command is well
typed in a context. The seven rules are

``sync``
    ``p . d`` proves `M` if `p` decomposes `M` into `delta` and `d` inhabits `delta`.
``init``
    a positive label inhabits an atom leaf holding the atom it is bound to.
``unit``, ``pair``
    structural.
``async``
    a branch map inhabits a refuted molecule ``* M`` if its patterns are
    exactly the patterns decomposing `M`, and each branch is a command
    well typed in the context extended with the corresponding decomposition.
``select``
    ``< $x | t >`` is well typed if `t` proves the molecule bound to ``$x``.
``cut``
    ``< f : M | t >`` is well typed if `f` refutes `M` and `t` proves it. The
    cut molecule is written on the term; it is never inferred.

Checking is syntax directed. The ``check_*`` functions never raise on
ill-typed input; they return :class:`Accepted` or :class:`Rejected`.
"""

import contextlib
import dataclasses
import enum
import logging
import typing

from laftk.contexts import NEG, NegLeaf, Pair, PosLeaf, Unit, leaves, structure
from laftk.errors import CycleFound, UnboundLabel, UniverseNotClosed
from laftk.util import ordered_unique


class ErrorKind(enum.Enum):
    UNBOUND_LABEL = 'UnboundLabel'
    NO_SUCH_DECOMPOSITION = 'NoSuchDecomposition'
    SHAPE_MISMATCH = 'ShapeMismatch'
    INIT_MISMATCH = 'InitMismatch'
    ASYNC_DOMAIN_MISMATCH = 'AsyncDomainMismatch'

    def __str__(self):
        return self.value


#
# proof-terms
#

@dataclasses.dataclass(frozen=True)
class PosTerm(object):
    pattern: typing.Any
    dec: typing.Any


@dataclasses.dataclass(frozen=True)
class LabelP(object):
    label: typing.Any


@dataclasses.dataclass(frozen=True)
class Branches(object):
    """
    A finite map from patterns to commands.

    The branches are kept in the order they were given; pattern keys
    must be distinct.
    """

    branches: tuple = ()

    def __post_init__(self):
        branches = tuple((pattern, command) for pattern, command in self.branches)
        object.__setattr__(self, 'branches', branches)
        patterns = [pattern for pattern, _ in branches]
        if len(set(patterns)) != len(patterns):
            raise ValueError('Duplicate patterns in branch map: {}'.format(
                ', '.join(str(p) for p in patterns if patterns.count(p) > 1)
            ))

    def patterns(self):
        return [pattern for pattern, _ in self.branches]

    def get(self, pattern):
        for p, command in self.branches:
            if p == pattern:
                return command
        return None

    def index(self, pattern):
        return self.patterns().index(pattern)

    def __len__(self):
        return len(self.branches)


@dataclasses.dataclass(frozen=True)
class UnitTerm(object):
    pass


@dataclasses.dataclass(frozen=True)
class PairTerm(object):
    left: typing.Any
    right: typing.Any


@dataclasses.dataclass(frozen=True)
class Select(object):
    label: typing.Any
    positive: PosTerm


@dataclasses.dataclass(frozen=True)
class Cut(object):
    branches: Branches
    molecule: typing.Any
    positive: PosTerm


UNIT_TERM = UnitTerm()


#
# judgments and results
#

@dataclasses.dataclass(frozen=True)
class PosSeq(object):
    context: typing.Any
    term: PosTerm
    molecule: typing.Any


@dataclasses.dataclass(frozen=True)
class DecSeq(object):
    context: typing.Any
    term: typing.Any
    decomposition: typing.Any


@dataclasses.dataclass(frozen=True)
class CmdSeq(object):
    context: typing.Any
    term: typing.Any


@dataclasses.dataclass(frozen=True)
class Accepted(object):
    trace: tuple

    accepted = True

    def __str__(self):
        return 'accepted: {}'.format(' '.join(self.trace))


@dataclasses.dataclass(frozen=True)
class Rejected(object):
    kind: ErrorKind
    message: str
    path: tuple = ()

    accepted = False

    @property
    def path_string(self):
        return '/' + '/'.join(str(i) for i in self.path)

    def __str__(self):
        return 'rejected: {} at {}: {}'.format(self.kind, self.path_string, self.message)


class TypingError(Exception):
    def __init__(self, kind, message, path):
        self.kind = kind
        self.message = message
        self.path = tuple(path)
        super(TypingError, self).__init__('{}: {}'.format(kind, message))


class InstanceSignature(object):
    """
    The parameters of the typing system.

    Attributes
    ----------
    name: str
        The logic's name, as written in judgment headers.
    decompositions: callable
        Maps a molecule to the list of its ``(pattern, decomposition)``
        pairs, always in the same order.
    pattern_slots: callable
        Maps a pattern to a decomposition structure whose leaf payloads
        are booleans: True when the leaf goes to the right-hand side of
        a sequent.
    pattern_key: callable
        Sort key giving patterns a canonical total order.
    empty_context: callable
        Returns the empty typing context.
    closure: callable
        Maps a list of formulae to the molecules they can give rise to,
        closed under decomposition.
    size: callable
        A measure on molecules that every refuted leaf strictly decreases.
    validate_molecule, validate_atom: callable
        Raise ValueError on values that are not molecules (resp. atoms).
    default_universe: list
        Molecules used for sweeps and sampling when no universe is given.
    parametric: bool
        Whether context extension ignores what is being stored.
    """

    def __init__(self, name, decompositions, pattern_slots, pattern_key, empty_context, closure, size,
                 validate_molecule, validate_atom, default_universe=(), parametric=True):
        self.name = name
        self.decompositions = decompositions
        self.pattern_slots = pattern_slots
        self.pattern_key = pattern_key
        self.empty_context = empty_context
        self.closure = closure
        self.size = size
        self.validate_molecule = validate_molecule
        self.validate_atom = validate_atom
        self.default_universe = list(default_universe)
        self.parametric = parametric

    def pattern_structure(self, pattern):
        return structure(self.pattern_slots(pattern))

    def __repr__(self):
        return 'InstanceSignature({!r})'.format(self.name)


class _Checker(object):

    def __init__(self, sig):
        self.sig = sig
        self.trace = []
        self.path = []

    @contextlib.contextmanager
    def child(self, index):
        self.path.append(index)
        try:
            yield
        finally:
            self.path.pop()

    def fail(self, kind, message, *args):
        raise TypingError(kind, message.format(*args), self.path)

    def decompositions(self, molecule):
        try:
            self.sig.validate_molecule(molecule)
        except ValueError as e:
            self.fail(ErrorKind.SHAPE_MISMATCH, '{}', e)
        return self.sig.decompositions(molecule)

    def pos(self, context, term, molecule):
        if not isinstance(term, PosTerm):
            self.fail(ErrorKind.SHAPE_MISMATCH, '{} is not a positive term', term)
        candidates = [delta for pattern, delta in self.decompositions(molecule) if pattern == term.pattern]
        if not candidates:
            self.fail(ErrorKind.NO_SUCH_DECOMPOSITION, 'pattern {} does not decompose {}', term.pattern, molecule)

        self.trace.append('sync')
        mark = len(self.trace)
        failure = None
        for delta in candidates:
            try:
                with self.child(0):
                    self.dec(context, term.dec, delta)
                return
            except TypingError as e:
                failure = e
                del self.trace[mark:]
        raise failure

    def dec(self, context, term, delta):
        if isinstance(term, UnitTerm) and isinstance(delta, Unit):
            self.trace.append('unit')
        elif isinstance(term, PairTerm) and isinstance(delta, Pair):
            self.trace.append('pair')
            with self.child(0):
                self.dec(context, term.left, delta.left)
            with self.child(1):
                self.dec(context, term.right, delta.right)
        elif isinstance(term, LabelP) and isinstance(delta, PosLeaf):
            self.trace.append('init')
            try:
                atom = context.lookup_pos(term.label)
            except UnboundLabel as e:
                self.fail(ErrorKind.UNBOUND_LABEL, '{}', e)
            if atom != delta.payload:
                self.fail(ErrorKind.INIT_MISMATCH, 'label is bound to {}, not {}', atom, delta.payload)
        elif isinstance(term, Branches) and isinstance(delta, NegLeaf):
            self.refute(context, term, delta.payload)
        else:
            self.fail(ErrorKind.SHAPE_MISMATCH, 'cannot inhabit {} with {}', delta, type(term).__name__)

    def refute(self, context, branches, molecule):
        decompositions = self.decompositions(molecule)
        self.trace.append('async')
        key = self.sig.pattern_key
        expected = sorted(set(pattern for pattern, _ in decompositions), key=key)
        given = sorted(branches.patterns(), key=key)
        if expected != given:
            missing = [str(p) for p in expected if p not in given]
            extra = [str(p) for p in given if p not in expected]
            details = []
            if missing:
                details.append('missing branches for {}'.format(', '.join(missing)))
            if extra:
                details.append('extra branches for {}'.format(', '.join(extra)))
            self.fail(ErrorKind.ASYNC_DOMAIN_MISMATCH, 'refuting {}: {}', molecule, '; '.join(details))

        for pattern, delta in decompositions:
            with self.child(branches.index(pattern)):
                self.cmd(context.extend(delta), branches.get(pattern))

    def cmd(self, context, term):
        if isinstance(term, Select):
            self.trace.append('select')
            try:
                molecule = context.lookup_neg(term.label)
            except UnboundLabel as e:
                self.fail(ErrorKind.UNBOUND_LABEL, '{}', e)
            with self.child(0):
                self.pos(context, term.positive, molecule)
        elif isinstance(term, Cut):
            try:
                self.sig.validate_molecule(term.molecule)
            except ValueError as e:
                self.fail(ErrorKind.SHAPE_MISMATCH, '{}', e)
            self.trace.append('cut')
            with self.child(0):
                self.refute(context, term.branches, term.molecule)
            with self.child(1):
                self.pos(context, term.positive, term.molecule)
        else:
            self.fail(ErrorKind.SHAPE_MISMATCH, '{} is not a command', type(term).__name__)


def _run(sig, method, *args):
    checker = _Checker(sig)
    try:
        getattr(checker, method)(*args)
    except TypingError as e:
        return Rejected(e.kind, e.message, e.path)
    return Accepted(tuple(checker.trace))


def check_pos(sig, context, term, molecule):
    """
    Check that the positive term `term` proves `molecule` in `context`.

    When several decompositions of `molecule` share the pattern of
    `term`, each is tried in turn and the first that works is kept.

    Returns
    -------
    Accepted or Rejected
    """
    return _run(sig, 'pos', context, term, molecule)


def check_dec(sig, context, term, delta):
    """
    Check that the decomposition term `term` inhabits `delta` in `context`.
    """
    return _run(sig, 'dec', context, term, delta)


def check_cmd(sig, context, term):
    return _run(sig, 'cmd', context, term)


def check(sig, judgment):
    """
    Check any of the three kinds of judgment.
    """
    if isinstance(judgment, PosSeq):
        return check_pos(sig, judgment.context, judgment.term, judgment.molecule)
    if isinstance(judgment, DecSeq):
        return check_dec(sig, judgment.context, judgment.term, judgment.decomposition)
    if isinstance(judgment, CmdSeq):
        return check_cmd(sig, judgment.context, judgment.term)
    raise TypeError('Not a judgment: {!r}'.format(judgment))


def decomposition_edges(sig, molecule):
    """
    List the molecules appearing as refuted leaves in the decompositions of `molecule`.
    """
    return ordered_unique(
        payload
        for _, delta in sig.decompositions(molecule)
        for kind, payload in leaves(delta)
        if kind == NEG
    )


def check_well_founded(sig, universe):
    """
    Check that the decomposition order is well-founded on a finite universe.

    A molecule `M'` is below `M` when ``* M'`` is a leaf of some
    decomposition of `M`. The universe must be closed under this order.

    Parameters
    ----------
    sig: InstanceSignature
    universe: iterable
        The molecules to consider.

    Returns
    -------
    list
        The ``(lower, upper)`` edges of the order, sorted by their printed forms.

    Raises
    ------
    UniverseNotClosed
        If a molecule below a member of the universe is missing from it.
    CycleFound
        If the order has a cycle on the universe.
    """
    logger = logging.getLogger("{}.{}".format(__name__, check_well_founded.__name__))

    universe = ordered_unique(universe)
    members = set(universe)
    below = {}
    edges = []
    for molecule in universe:
        below[molecule] = decomposition_edges(sig, molecule)
        for lower in below[molecule]:
            if lower not in members:
                raise UniverseNotClosed(lower, molecule)
            edges.append((lower, molecule))

    finished = set()
    for root in universe:
        if root in finished:
            continue
        # iterative depth-first search keeping the current path
        path = [root]
        on_path = {root}
        pending = [iter(below[root])]
        while pending:
            try:
                lower = next(pending[-1])
            except StopIteration:
                pending.pop()
                done = path.pop()
                on_path.discard(done)
                finished.add(done)
                continue
            if lower in on_path:
                raise CycleFound(path[path.index(lower):])
            if lower not in finished:
                path.append(lower)
                on_path.add(lower)
                pending.append(iter(below[lower]))

    logger.debug('Universe of {} molecules is well-founded, with {} edges.'.format(len(universe), len(edges)))
    return sorted(edges, key=lambda edge: (str(edge[0]), str(edge[1])))
