#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_kernel
----------------------------------

Tests for `laftk.kernel` module.
"""

import glob
import os
import unittest

from laftk import kernel
from laftk.contexts import NegLeaf, Pair, ParametricContext, PosLeaf, UNIT
from laftk.errors import CycleFound, UniverseNotClosed
from laftk.instances import signature
from laftk.instances.common import AndP, Atom, FalseP, Inj, NegAtom, OrP, TrueN, TrueP
from laftk.instances.k1 import Pneg, Ppos, Ptrue, k1_signature
from laftk.kernel import ErrorKind
from laftk.syntax import parse_judgment


DATA = os.path.join(os.path.dirname(__file__), 'data')

A = Atom('a')
EM = OrP(A, NegAtom('a'))


def read(name):
    with open(os.path.join(DATA, name)) as source:
        return parse_judgment(source.read())


def checked(name):
    source = read(name)
    return kernel.check(signature(source.logic), source.judgment)


class TestCorpus(unittest.TestCase):

    def test_accepted(self):
        names = [os.path.basename(f) for f in glob.glob(os.path.join(DATA, '*.laf'))]
        accepted = [name for name in names if not name.startswith('bad')]
        self.assertGreaterEqual(len([n for n in accepted if n.startswith('j_')]), 6)
        self.assertGreaterEqual(len([n for n in accepted if not n.startswith('j_')]), 12)
        for name in accepted:
            result = checked(name)
            self.assertTrue(result.accepted, '{}: {}'.format(name, result))

    def test_rejected(self):
        expectations = {
            'bad.laf': (ErrorKind.ASYNC_DOMAIN_MISMATCH, (0, 0)),
            'bad_unbound.laf': (ErrorKind.UNBOUND_LABEL, ()),
            'bad_no_decomposition.laf': (ErrorKind.NO_SUCH_DECOMPOSITION, ()),
            'bad_init.laf': (ErrorKind.INIT_MISMATCH, (0,)),
            'bad_shape.laf': (ErrorKind.SHAPE_MISMATCH, (0,)),
            'bad_extra_branch.laf': (ErrorKind.ASYNC_DOMAIN_MISMATCH, ()),
            'bad_cut_negative.laf': (ErrorKind.SHAPE_MISMATCH, ()),
            'bad_label.laf': (ErrorKind.UNBOUND_LABEL, (0,)),
            'bad_consistency.laf': (ErrorKind.NO_SUCH_DECOMPOSITION, (0,)),
            'bad_cut.laf': (ErrorKind.ASYNC_DOMAIN_MISMATCH, (0,)),
            'bad_j_false.laf': (ErrorKind.NO_SUCH_DECOMPOSITION, ()),
            'bad_j_rs.laf': (ErrorKind.UNBOUND_LABEL, ()),
        }
        for name, (kind, path) in expectations.items():
            result = checked(name)
            self.assertFalse(result.accepted, name)
            self.assertEqual((result.kind, result.path), (kind, path), name)

    def test_trace_of_excluded_middle(self):
        result = checked('em.laf')
        self.assertEqual(result.trace, ('select', 'sync', 'async', 'select', 'sync', 'init'))
        self.assertEqual(str(result), 'accepted: select sync async select sync init')

    def test_trace_of_refuted_contradiction(self):
        result = checked('k1_refute_contradiction.laf')
        self.assertEqual(result.trace, ('async', 'select', 'sync', 'init'))

    def test_missing_branch_is_reported(self):
        result = checked('bad.laf')
        self.assertIn('missing branches for pos', result.message)
        self.assertEqual(str(result).split(':')[0], 'rejected')
        self.assertIn('AsyncDomainMismatch at /0/0', str(result))


class TestAsyncDomain(unittest.TestCase):
    """
    A refutation must give a branch for exactly the patterns decomposing its molecule.
    """

    def branch_maps(self, logic):
        sig = signature(logic)
        pool = set()
        for molecule in sig.default_universe:
            pool.update(pattern for pattern, _ in sig.decompositions(molecule))
        for molecule in sig.default_universe:
            patterns = sorted(set(p for p, _ in sig.decompositions(molecule)), key=sig.pattern_key)
            yield sig, molecule, patterns, sorted(pool - set(patterns), key=sig.pattern_key)

    def refute(self, sig, molecule, patterns):
        branches = kernel.Branches([(pattern, kernel.UNIT_TERM) for pattern in patterns])
        return kernel.check_dec(sig, sig.empty_context(), branches, NegLeaf(molecule))

    def test_exact_domain_passes_the_async_step(self):
        for logic in ('k1', 'j'):
            for sig, molecule, patterns, _ in self.branch_maps(logic):
                result = self.refute(sig, molecule, patterns)
                if patterns:
                    # the placeholder commands fail inside the first branch
                    self.assertEqual((result.kind, len(result.path)), (ErrorKind.SHAPE_MISMATCH, 1), str(molecule))
                else:
                    self.assertTrue(result.accepted, str(molecule))

    def test_missing_branch(self):
        for logic in ('k1', 'j'):
            for sig, molecule, patterns, _ in self.branch_maps(logic):
                for dropped in patterns:
                    kept = [p for p in patterns if p != dropped]
                    result = self.refute(sig, molecule, kept)
                    self.assertEqual((result.kind, result.path), (ErrorKind.ASYNC_DOMAIN_MISMATCH, ()), str(molecule))
                    self.assertIn('missing branches for {}'.format(dropped), result.message)

    def test_extra_branch(self):
        for logic in ('k1', 'j'):
            for sig, molecule, patterns, others in self.branch_maps(logic):
                for extra in others[:3]:
                    result = self.refute(sig, molecule, patterns + [extra])
                    self.assertEqual((result.kind, result.path), (ErrorKind.ASYNC_DOMAIN_MISMATCH, ()), str(molecule))
                    self.assertIn('extra branches for {}'.format(extra), result.message)


class TestRules(unittest.TestCase):

    def setUp(self):
        self.sig = k1_signature()
        self.empty = ParametricContext()

    def test_sync_unit(self):
        result = kernel.check_pos(self.sig, self.empty, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM), TrueP())
        self.assertEqual(result.trace, ('sync', 'unit'))

    def test_sync_on_negative_molecule_is_rejected(self):
        result = kernel.check_pos(self.sig, self.empty, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM), TrueN())
        self.assertEqual((result.kind, result.path), (ErrorKind.SHAPE_MISMATCH, ()))

    def test_refute_on_negative_molecule_is_rejected(self):
        result = kernel.check_dec(self.sig, self.empty, kernel.Branches(), NegLeaf(TrueN()))
        self.assertEqual((result.kind, result.path), (ErrorKind.SHAPE_MISMATCH, ()))

    def test_refuting_false_needs_no_branch(self):
        result = kernel.check_dec(self.sig, self.empty, kernel.Branches(), NegLeaf(FalseP()))
        self.assertEqual(result.trace, ('async',))

    def test_pair(self):
        context = ParametricContext((A,))
        term = kernel.PairTerm(kernel.LabelP(0), kernel.UNIT_TERM)
        result = kernel.check_dec(self.sig, context, term, Pair(PosLeaf(A), UNIT))
        self.assertEqual(result.trace, ('pair', 'init', 'unit'))

    def test_shape_mismatch(self):
        result = kernel.check_dec(self.sig, self.empty, kernel.UNIT_TERM, PosLeaf(A))
        self.assertEqual(result.kind, ErrorKind.SHAPE_MISMATCH)
        result = kernel.check_cmd(self.sig, self.empty, kernel.UNIT_TERM)
        self.assertEqual(result.kind, ErrorKind.SHAPE_MISMATCH)

    def test_branch_order_does_not_matter(self):
        refute = kernel.Branches((
            (Inj(2, Pneg()), kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))),
            (Inj(1, Ppos()), kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))),
        ))
        context = ParametricContext((), (TrueP(),))
        result = kernel.check_dec(self.sig, context, refute, NegLeaf(EM))
        self.assertTrue(result.accepted, str(result))

    def test_cut(self):
        context = ParametricContext((), (TrueP(),))
        close = kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))
        term = kernel.Cut(kernel.Branches(((Ptrue(), close),)), TrueP(), kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))
        result = kernel.check_cmd(self.sig, context, term)
        self.assertEqual(result.trace, ('cut', 'async', 'select', 'sync', 'unit', 'sync', 'unit'))

    def test_duplicate_patterns(self):
        close = kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))
        with self.assertRaises(ValueError):
            kernel.Branches(((Ptrue(), close), (Ptrue(), close)))

    def test_branches(self):
        close = kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM))
        branches = kernel.Branches(((Ppos(), close), (Pneg(), close)))
        self.assertEqual(branches.patterns(), [Ppos(), Pneg()])
        self.assertEqual(branches.index(Pneg()), 1)
        self.assertIsNone(branches.get(Ptrue()))
        self.assertEqual(len(branches), 2)
        self.assertEqual(len(kernel.Branches()), 0)

    def test_check_dispatches_on_judgments(self):
        judgment = kernel.PosSeq(self.empty, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM), TrueP())
        self.assertTrue(kernel.check(self.sig, judgment).accepted)
        with self.assertRaises(TypeError):
            kernel.check(self.sig, 'cmd')


def _toy_signature(edges):
    def decompositions(molecule):
        return [('p{}'.format(i), NegLeaf(lower)) for i, lower in enumerate(edges.get(molecule, []))]

    return kernel.InstanceSignature(
        name='toy',
        decompositions=decompositions,
        pattern_slots=lambda pattern: NegLeaf(False),
        pattern_key=str,
        empty_context=ParametricContext,
        closure=list,
        size=len,
        validate_molecule=lambda molecule: None,
        validate_atom=lambda atom: None,
    )


class TestWellFounded(unittest.TestCase):

    def test_k1_default_universe(self):
        sig = k1_signature()
        edges = kernel.check_well_founded(sig, sig.default_universe)
        self.assertIn((A, EM), edges)
        self.assertEqual(edges, sorted(edges, key=lambda edge: (str(edge[0]), str(edge[1]))))
        for lower, upper in edges:
            self.assertLess(sig.size(lower), sig.size(upper))

    def test_j_default_universe(self):
        sig = signature('j')
        edges = kernel.check_well_founded(sig, sig.default_universe)
        self.assertTrue(edges)
        for lower, upper in edges:
            self.assertLess(sig.size(lower), sig.size(upper))

    def test_edges(self):
        sig = k1_signature()
        self.assertEqual(kernel.decomposition_edges(sig, EM), [A])
        self.assertEqual(kernel.decomposition_edges(sig, AndP(TrueP(), TrueP())), [])

    def test_not_closed(self):
        with self.assertRaises(UniverseNotClosed) as raised:
            kernel.check_well_founded(k1_signature(), [EM])
        self.assertEqual(raised.exception.missing, A)
        self.assertEqual(raised.exception.parent, EM)

    def test_cycle(self):
        sig = _toy_signature({'A': ['B'], 'B': ['C'], 'C': ['A']})
        with self.assertRaises(CycleFound) as raised:
            kernel.check_well_founded(sig, ['A', 'B', 'C'])
        self.assertEqual(sorted(raised.exception.cycle), ['A', 'B', 'C'])

    def test_diamond_is_not_a_cycle(self):
        sig = _toy_signature({'A': ['B', 'C'], 'B': ['D'], 'C': ['D']})
        edges = kernel.check_well_founded(sig, ['A', 'B', 'C', 'D'])
        self.assertEqual(edges, [('B', 'A'), ('C', 'A'), ('D', 'B'), ('D', 'C')])


if __name__ == '__main__':
    unittest.main()
