#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Finite realisability algebras, and what they say about proof-terms and types.

An algebra gives finite sets of denotations for labels (``sprim``),
positive terms (``spos``) and negative terms (``sneg``), an
orthogonality relation between negative and positive denotations, and
interpretations of patterns, branch maps and atoms. From those, every
proof-term gets a denotation in a semantic context, and every molecule
gets a positive and a negative interpretation:

* the positive interpretation of `M` collects the interpretation of `p`
  applied to `D` for every decomposition ``(p, delta)`` of `M` and every
  semantic decomposition `D` of `delta`;
* the negative interpretation of `M` collects the negative denotations
  orthogonal to every member of the positive interpretation.

The adequacy harness checks, on accepted judgments, that the denotation
of a term lies in the interpretation of its type. The models shipped
here are

:func:`trivial_model`
    one point everywhere, nothing orthogonal. Provability in it is a
    boolean computation, see :func:`sem_provable`.
:func:`full_orth_model`
    the same with everything orthogonal, so that the command clause of
    the adequacy harness has something to check.
:func:`j_positional_model`
    a boolean model for J whose label and negative denotations remember
    which side of the sequent they stand for.
"""

import dataclasses
import enum
import itertools
import logging
import random
import typing

from laftk import kernel, search
from laftk.contexts import NEG, POS, NegLeaf, Pair, PosLeaf, Unit, UNIT
from laftk.errors import DomainMismatch, NonTerminating, UncheckedJudgment, UninterpretableFunction
from laftk.instances import j
from laftk.util import partition


class Token(enum.Enum):
    POINT = '•'
    RIGHT = 'R'
    LEFT = 'L'

    def __str__(self):
        return self.value


class RealisabilityAlgebra(object):
    """
    A finite realisability algebra for an instance.

    Attributes
    ----------
    name: str
    signature: InstanceSignature
        The instance the algebra interprets.
    sprim, spos, sneg: frozenset
        The carriers.
    orth: frozenset
        The orthogonality relation, as ``(negative, positive)`` pairs.
    empty_context: callable
        Returns the empty semantic context.
    classify: callable or None
        Decides from ``(kind, value)`` whether a semantic leaf goes to the
        right-hand slot, for instances whose contexts have one.
    """

    def __init__(self, name, signature, sprim, spos, sneg, orth, empty_context, pat_interp, fun_interp,
                 atom_interp, neg_carrier=None, classify=None):
        self.name = name
        self.signature = signature
        self.sprim = frozenset(sprim)
        self.spos = frozenset(spos)
        self.sneg = frozenset(sneg)
        self.orth = frozenset(orth)
        self.empty_context = empty_context
        self._pat_interp = pat_interp
        self._fun_interp = fun_interp
        self._atom_interp = atom_interp
        self._neg_carrier = neg_carrier
        self.classify = classify

    @property
    def boolean(self):
        """An algebra is boolean when nothing is orthogonal to anything."""
        return not self.orth

    def orthogonal(self, negative, positive):
        return (negative, positive) in self.orth

    def pat_interp(self, pattern, semdec):
        return self._pat_interp(pattern, semdec)

    def fun_interp(self, branches, rho, molecule=None):
        return self._fun_interp(branches, rho, molecule)

    def atom_interp(self, atom):
        return frozenset(self._atom_interp(atom))

    def neg_carrier(self, molecule):
        """The negative denotations the negative interpretation of `molecule` ranges over."""
        if self._neg_carrier is None:
            return self.sneg
        return frozenset(self._neg_carrier(molecule))

    def __repr__(self):
        return 'RealisabilityAlgebra({!r}, {!r})'.format(self.name, self.signature.name)


#
# the shipped models
#

def _point_atoms(sig):
    def atom_interp(atom):
        sig.validate_atom(atom)
        return {Token.POINT}
    return atom_interp


def _trivial_algebra(name, sig, orth):
    if not sig.parametric:
        raise ValueError('The {} model needs an instance with parametric contexts, and {} is not one.'.format(name, sig.name))
    return RealisabilityAlgebra(
        name=name,
        signature=sig,
        sprim={Token.POINT},
        spos={Token.POINT},
        sneg={Token.POINT},
        orth=orth,
        empty_context=sig.empty_context,
        pat_interp=lambda pattern, semdec: Token.POINT,
        fun_interp=lambda branches, rho, molecule: Token.POINT,
        atom_interp=_point_atoms(sig),
    )


def trivial_model(sig):
    """
    The trivial boolean model: every carrier is one point and nothing is orthogonal.

    Raises
    ------
    ValueError
        If the contexts of `sig` are not parametric.
    """
    return _trivial_algebra('trivial', sig, orth=())


def full_orth_model(sig):
    """
    The trivial model with its one negative point orthogonal to its one positive point.
    """
    return _trivial_algebra('full-orth', sig, orth={(Token.POINT, Token.POINT)})


def _side_token(side):
    return Token.RIGHT if side is j.Side.RIGHT else Token.LEFT


_RIGHT_PATTERNS = (j.PposR, j.PnegR, j.PtrueR, j.PairPat, j.Inj)


def _positional_fun_interp(branches, rho, molecule):
    if molecule is not None:
        return _side_token(molecule.side)
    patterns = branches.patterns()
    if not patterns:
        raise UninterpretableFunction(
            'The empty branch map refutes molecules on both sides; its side must be given by its type.'
        )
    return Token.RIGHT if isinstance(patterns[0], _RIGHT_PATTERNS) else Token.LEFT


def _positional_atom_interp(atom):
    j.validate_atom(atom)
    return {_side_token(atom.side)}


def _positional_neg_carrier(molecule):
    j.validate_molecule(molecule)
    return {_side_token(molecule.side)}


def on_right_by_token(kind, value):
    """Semantic leaves go to the right-hand slot exactly when their typing counterparts do."""
    return value is (Token.LEFT if kind == POS else Token.RIGHT)


def j_positional_model():
    """
    A boolean model for J that keeps track of sides.

    A label denotes :attr:`Token.RIGHT` when it stands for an atom on the
    right (a positive literal) and :attr:`Token.LEFT` for an atom on the
    left. A negative denotation is the side of the molecule it refutes:
    molecules on the left (negative formulae) are refuted by
    :attr:`Token.LEFT` and molecules on the right by :attr:`Token.RIGHT`.
    Semantic contexts are :class:`~laftk.instances.j.JContext` instances
    over tokens, so that extending one overwrites the right-hand slot
    whenever extending the typing context does.
    """
    sig = j.j_signature()
    return RealisabilityAlgebra(
        name='positional',
        signature=sig,
        sprim={Token.RIGHT, Token.LEFT},
        spos={Token.POINT},
        sneg={Token.RIGHT, Token.LEFT},
        orth=(),
        empty_context=lambda: j.JContext(absurd=Token.LEFT, classify=on_right_by_token),
        pat_interp=lambda pattern, semdec: Token.POINT,
        fun_interp=_positional_fun_interp,
        atom_interp=_positional_atom_interp,
        neg_carrier=_positional_neg_carrier,
        classify=on_right_by_token,
    )


def models_for(sig):
    """
    List the shipped models that apply to the instance `sig`.
    """
    if sig.parametric:
        return [trivial_model(sig), full_orth_model(sig)]
    if sig.name == j.NAME:
        return [j_positional_model()]
    return []


#
# interpretation of proof-terms
#

@dataclasses.dataclass(frozen=True)
class PosDen(object):
    value: typing.Any


@dataclasses.dataclass(frozen=True)
class DecDen(object):
    value: typing.Any


@dataclasses.dataclass(frozen=True)
class CmdDen(object):
    negative: typing.Any
    positive: typing.Any


def _decomposition_for(sig, molecule, pattern):
    for p, delta in sig.decompositions(molecule):
        if p == pattern:
            return delta
    return None


def _interp_dec(alg, rho, term, expected):
    if isinstance(term, kernel.UnitTerm):
        return UNIT
    if isinstance(term, kernel.PairTerm):
        left = right = None
        if isinstance(expected, Pair):
            left, right = expected.left, expected.right
        return Pair(_interp_dec(alg, rho, term.left, left), _interp_dec(alg, rho, term.right, right))
    if isinstance(term, kernel.LabelP):
        return PosLeaf(rho.lookup_pos(term.label))
    if isinstance(term, kernel.Branches):
        molecule = expected.payload if isinstance(expected, NegLeaf) else None
        return NegLeaf(alg.fun_interp(term, rho, molecule))
    raise TypeError('Not a decomposition term: {!r}'.format(term))


def _interp_pos(alg, rho, term, molecule):
    delta = None
    if molecule is not None:
        delta = _decomposition_for(alg.signature, molecule, term.pattern)
    return alg.pat_interp(term.pattern, _interp_dec(alg, rho, term.dec, delta))


def interp_term(alg, rho, term, expected=None, context=None):
    """
    Interpret a proof-term in the semantic context `rho`.

    Parameters
    ----------
    alg: RealisabilityAlgebra
    rho: context
        A semantic context binding every label of `term`.
    term: proof-term
        A positive term, a decomposition term or a command.
    expected: molecule or decomposition, optional
        The type of `term`, when known. It is used to tell the algebra
        which molecule each branch map refutes.
    context: context, optional
        The typing context of `term`, used to find the molecule of a
        selected label.

    Returns
    -------
    PosDen, DecDen or CmdDen

    Raises
    ------
    UnboundLabel
        If `term` uses a label `rho` does not bind.
    UninterpretableFunction
        If the algebra cannot interpret one of the branch maps.
    """
    if isinstance(term, kernel.PosTerm):
        return PosDen(_interp_pos(alg, rho, term, expected))
    if isinstance(term, kernel.Select):
        molecule = context.lookup_neg(term.label) if context is not None else None
        return CmdDen(rho.lookup_neg(term.label), _interp_pos(alg, rho, term.positive, molecule))
    if isinstance(term, kernel.Cut):
        negative = alg.fun_interp(term.branches, rho, term.molecule)
        return CmdDen(negative, _interp_pos(alg, rho, term.positive, term.molecule))
    return DecDen(_interp_dec(alg, rho, term, expected))


#
# interpretation of types
#

class TypeInterpretation(object):
    """
    One interpretation session: the types of an instance in an algebra.

    The interpretations of molecules are computed by recursion on the
    decomposition order and remembered, so a session does every molecule
    once. Re-entering a molecule whose interpretation is being computed
    means the order has a cycle there.
    """

    def __init__(self, alg, sig):
        self.alg = alg
        self.sig = sig
        self._pos = {}
        self._neg = {}
        self._in_progress = set()

    def pos(self, molecule):
        if molecule in self._pos:
            return self._pos[molecule]
        if molecule in self._in_progress:
            raise NonTerminating(molecule)
        self._in_progress.add(molecule)
        try:
            values = set()
            for pattern, delta in self.sig.decompositions(molecule):
                for semdec in self.decomp(delta):
                    values.add(self.alg.pat_interp(pattern, semdec))
        finally:
            self._in_progress.discard(molecule)
        self._pos[molecule] = frozenset(values)
        return self._pos[molecule]

    def neg(self, molecule):
        if molecule not in self._neg:
            positives = self.pos(molecule)
            self._neg[molecule] = frozenset(
                n for n in self.alg.neg_carrier(molecule)
                if all(self.alg.orthogonal(n, p) for p in positives)
            )
        return self._neg[molecule]

    def leaf_values(self, kind, payload):
        if kind == POS:
            return sorted(self.alg.atom_interp(payload), key=str)
        return sorted(self.neg(payload), key=str)

    def decomp(self, delta):
        if isinstance(delta, Unit):
            return [UNIT]
        if isinstance(delta, PosLeaf):
            return [PosLeaf(value) for value in self.leaf_values(POS, delta.payload)]
        if isinstance(delta, NegLeaf):
            return [NegLeaf(value) for value in self.leaf_values(NEG, delta.payload)]
        if isinstance(delta, Pair):
            return [Pair(left, right) for left in self.decomp(delta.left) for right in self.decomp(delta.right)]
        raise TypeError('Not a decomposition: {!r}'.format(delta))

    def context_member(self, context, rho):
        context_pos, rho_pos = dict(context.pos_items()), dict(rho.pos_items())
        context_neg, rho_neg = dict(context.neg_items()), dict(rho.neg_items())
        if set(context_pos) != set(rho_pos) or set(context_neg) != set(rho_neg):
            raise DomainMismatch('The semantic context {} does not have the labels of the typing context {}.'.format(rho, context))
        return (
            all(rho_pos[label] in self.alg.atom_interp(atom) for label, atom in context_pos.items()) and
            all(rho_neg[label] in self.neg(molecule) for label, molecule in context_neg.items())
        )


def interp_pos_mol(alg, sig, molecule):
    """
    The positive interpretation of `molecule`, a subset of ``alg.spos``.

    Raises
    ------
    NonTerminating
        If the decomposition order has a cycle below `molecule`.
    """
    return TypeInterpretation(alg, sig).pos(molecule)


def interp_neg_mol(alg, sig, molecule):
    """
    The negative interpretation of `molecule`, a subset of ``alg.neg_carrier(molecule)``.
    """
    return TypeInterpretation(alg, sig).neg(molecule)


def interp_decomp(alg, sig, delta):
    """
    The semantic decompositions of the typing decomposition `delta`, as a frozenset.
    """
    return frozenset(TypeInterpretation(alg, sig).decomp(delta))


def interp_context_membership(alg, sig, context, rho):
    """
    Decide whether the semantic context `rho` belongs to the interpretation of `context`.

    Raises
    ------
    DomainMismatch
        If `rho` and `context` do not bind the same labels.
    """
    return TypeInterpretation(alg, sig).context_member(context, rho)


def enumerate_semantic_contexts(alg, sig, context, session=None):
    """
    Generate every semantic context in the interpretation of `context`.

    The semantic contexts have the labels of `context`; each label ranges
    over the interpretation of what it is bound to.
    """
    session = session or TypeInterpretation(alg, sig)
    pos_labels, pos_choices = [], []
    for label, atom in context.pos_items():
        pos_labels.append(label)
        pos_choices.append(session.leaf_values(POS, atom))
    neg_labels, neg_choices = [], []
    for label, molecule in context.neg_items():
        neg_labels.append(label)
        neg_choices.append(session.leaf_values(NEG, molecule))

    for values in itertools.product(*(pos_choices + neg_choices)):
        yield context.with_values(
            dict(zip(pos_labels, values[:len(pos_labels)])),
            dict(zip(neg_labels, values[len(pos_labels):])),
            classify=alg.classify,
        )


def sem_provable(alg, sig, molecule):
    """
    Decide whether `molecule` is semantically provable in the boolean algebra `alg`.

    In a boolean algebra the negative interpretation of a molecule is
    either empty or the whole carrier, so provability reduces to the
    positive interpretation being non-empty.

    Raises
    ------
    ValueError
        If `alg` is not boolean.
    NonTerminating
        If the decomposition order has a cycle below `molecule`.
    """
    if not alg.boolean:
        raise ValueError('Semantic provability is only decided in boolean algebras, and {} is not one.'.format(alg.name))
    return bool(interp_pos_mol(alg, sig, molecule))


#
# adequacy
#

class Verdict(enum.Enum):
    HOLDS = 'holds'
    VACUOUS = 'vacuously true'
    FAILS = 'fails'

    def __bool__(self):
        return self is not Verdict.FAILS

    def __str__(self):
        return self.value


def check_adequacy(alg, sig, judgment, rho, session=None):
    """
    Check the conclusion of the adequacy lemma on one accepted judgment.

    Parameters
    ----------
    alg: RealisabilityAlgebra
    sig: InstanceSignature
    judgment: PosSeq, DecSeq or CmdSeq
        A judgment the kernel accepts.
    rho: context
        A semantic context with the labels of the judgment's context.

    Returns
    -------
    Verdict
        :attr:`Verdict.VACUOUS` when `rho` is not in the interpretation of
        the context; otherwise :attr:`Verdict.HOLDS` when the denotation
        of the term is in the interpretation of its type (for commands:
        when its two halves are orthogonal), :attr:`Verdict.FAILS` if not.

    Raises
    ------
    UncheckedJudgment
        If the kernel rejects `judgment`.
    """
    result = kernel.check(sig, judgment)
    if not result.accepted:
        raise UncheckedJudgment('The adequacy harness only takes accepted judgments; this one is {}'.format(result))

    session = session or TypeInterpretation(alg, sig)
    context = judgment.context
    if not session.context_member(context, rho):
        return Verdict.VACUOUS

    if isinstance(judgment, kernel.PosSeq):
        denotation = interp_term(alg, rho, judgment.term, expected=judgment.molecule, context=context)
        holds = denotation.value in session.pos(judgment.molecule)
    elif isinstance(judgment, kernel.DecSeq):
        denotation = interp_term(alg, rho, judgment.term, expected=judgment.decomposition, context=context)
        holds = denotation.value in session.decomp(judgment.decomposition)
    else:
        denotation = interp_term(alg, rho, judgment.term, context=context)
        holds = alg.orthogonal(denotation.negative, denotation.positive)
    return Verdict.HOLDS if holds else Verdict.FAILS


def adequacy_verdicts(alg, sig, judgment):
    """
    Run the adequacy harness on every semantic context in the interpretation of the judgment's context.

    Returns
    -------
    list
        ``(rho, verdict)`` pairs. An empty list means the interpretation of
        the context is empty.
    """
    session = TypeInterpretation(alg, sig)
    return [
        (rho, check_adequacy(alg, sig, judgment, rho, session=session))
        for rho in enumerate_semantic_contexts(alg, sig, judgment.context, session=session)
    ]


#
# sampled hypotheses
#

@dataclasses.dataclass
class HypothesisReport(object):
    model: str
    samples: int = 0
    correlation_checked: int = 0
    stability_checked: int = 0
    skipped: int = 0
    correlation_failures: list = dataclasses.field(default_factory=list)
    stability_failures: list = dataclasses.field(default_factory=list)

    @property
    def ok(self):
        return not self.correlation_failures and not self.stability_failures

    def __str__(self):
        return '{}: {} samples, {} typing correlation checks, {} stability checks, {} skipped; {}'.format(
            self.model, self.samples, self.correlation_checked, self.stability_checked, self.skipped,
            'no counterexamples' if self.ok else '{} typing correlation and {} stability counterexamples'.format(
                len(self.correlation_failures), len(self.stability_failures)
            ),
        )


def _random_context(rng, sig, molecules, extensions):
    context = sig.empty_context()
    for _ in range(rng.randint(0, extensions)):
        decompositions = sig.decompositions(rng.choice(molecules))
        if decompositions:
            context = context.extend(rng.choice(decompositions)[1])
    return context


# depth of the search for the commands the stability check closes branches with
STABILITY_DEPTH = 2


def _closing_command(sig, context, cache):
    """
    A command well typed in `context` that only selects, or None.

    Found by bounded search without cuts; results are kept in `cache`,
    keyed by context.
    """
    if context not in cache:
        budget = search.SearchBudget(STABILITY_DEPTH)
        cache[context] = search.search_cmd(sig, context, budget, candidates=[])
    return cache[context]


def check_hypotheses_sampled(alg, sig=None, count=10000, seed=0, report_batch=1000, max_failures=5):
    """
    Test the two hypotheses of the adequacy lemma on random samples.

    Each sample draws a typing context by extending the empty one with
    random decompositions of molecules of the instance's default
    universe, a semantic context in its interpretation, and a random
    decomposition ``(p, delta)`` with a semantic decomposition `D` of `delta`.

    Typing correlation
        extending the semantic context with `D` must give a member of
        the interpretation of the typing context extended with `delta`.
    Stability
        when the branch of some branch map for `p`, interpreted in the
        extended semantic context, is orthogonal, the branch map must be
        orthogonal to the interpretation of `p` applied to `D`. The branch
        for `p` is a command found by bounded search in the typing context
        extended with `delta`; samples where there is none are not
        counted as stability checks.

    Parameters
    ----------
    alg: RealisabilityAlgebra
    sig: InstanceSignature, optional
        Defaults to the algebra's instance.
    count: int
        The number of samples.
    seed: int
        The seed of the random generator.

    Returns
    -------
    HypothesisReport
    """
    logger = logging.getLogger("{}.{}".format(__name__, check_hypotheses_sampled.__name__))

    sig = sig or alg.signature
    rng = random.Random(seed)
    molecules = list(sig.default_universe)
    session = TypeInterpretation(alg, sig)
    report = HypothesisReport(alg.name)
    closing = {}

    for batch in partition(report_batch, range(count)):
        for _ in batch:
            report.samples += 1
            context = _random_context(rng, sig, molecules, extensions=3)
            rhos = list(enumerate_semantic_contexts(alg, sig, context, session=session))
            molecule = rng.choice(molecules)
            decompositions = sig.decompositions(molecule)
            if not rhos or not decompositions:
                report.skipped += 1
                continue
            rho = rng.choice(rhos)
            pattern, delta = rng.choice(decompositions)
            semdecs = session.decomp(delta)
            if not semdecs:
                report.skipped += 1
                continue
            semdec = rng.choice(semdecs)

            extended = context.extend(delta)
            extended_rho = rho.extend(semdec)
            report.correlation_checked += 1
            try:
                member = session.context_member(extended, extended_rho)
            except DomainMismatch:
                member = False
            if not member and len(report.correlation_failures) < max_failures:
                report.correlation_failures.append((context, rho, delta, semdec))

            if not member:
                continue
            branch = _closing_command(sig, extended, closing)
            if branch is None:
                continue
            report.stability_checked += 1
            inner = interp_term(alg, extended_rho, branch, context=extended)
            if alg.orthogonal(inner.negative, inner.positive):
                branches = kernel.Branches(((pattern, branch),))
                outer_negative = alg.fun_interp(branches, rho, molecule)
                if not alg.orthogonal(outer_negative, alg.pat_interp(pattern, semdec)):
                    if len(report.stability_failures) < max_failures:
                        report.stability_failures.append((molecule, pattern, semdec, rho))
        logger.debug('{} samples done for the {} model.'.format(report.samples, alg.name))

    return report
