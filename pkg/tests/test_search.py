#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_search
----------------------------------

Tests for `laftk.search` module.
"""

import glob
import os
import unittest

from laftk import kernel, search
from laftk.contexts import NegLeaf, ParametricContext
from laftk.instances import j, signature
from laftk.instances.common import Atom, FalseP, Imp, NegAtom, OrP, TrueP
from laftk.search import SearchBudget
from laftk.syntax import format_command, format_dec_term, format_pos_term, parse_judgment


DATA = os.path.join(os.path.dirname(__file__), 'data')

a = Atom('a')
EM = OrP(a, NegAtom('a'))


def read(name):
    with open(os.path.join(DATA, name)) as source:
        return parse_judgment(source.read())


class TestSearch(unittest.TestCase):

    def setUp(self):
        self.sig = signature('k1')
        self.empty = ParametricContext()

    def test_true(self):
        term = search.search_pos(self.sig, self.empty, TrueP(), SearchBudget(1))
        self.assertEqual(format_pos_term(term), 'unit . ()')

    def test_depth_zero_finds_nothing(self):
        self.assertIsNone(search.search_pos(self.sig, self.empty, TrueP(), SearchBudget(0)))

    def test_false_has_no_proof(self):
        self.assertIsNone(search.search_pos(self.sig, self.empty, FalseP(), SearchBudget(4)))

    def test_excluded_middle(self):
        context = ParametricContext((), (EM,))
        self.assertIsNone(search.search_cmd(self.sig, context, SearchBudget(2)))
        expected = read('em.laf').judgment.term
        self.assertEqual(search.search_cmd(self.sig, context, SearchBudget(3)), expected)
        self.assertEqual(search.search_cmd(self.sig, context, SearchBudget(4)), expected)

    def test_refutation(self):
        context = ParametricContext((), (a,))
        self.assertIsNone(search.search_dec(self.sig, context, NegLeaf(a), SearchBudget(1)))
        term = search.search_dec(self.sig, context, NegLeaf(a), SearchBudget(2))
        self.assertEqual(format_dec_term(term), '{ pos => < $0 | pos . #0 > }')

    def test_branch_cap(self):
        context = ParametricContext((), (a,))
        self.assertIsNone(search.search_dec(self.sig, context, NegLeaf(a), SearchBudget(2, branch_cap=0)))
        self.assertIsNotNone(search.search_dec(self.sig, context, NegLeaf(a), SearchBudget(2, branch_cap=1)))

    def test_found_terms_are_accepted(self):
        names = sorted(os.path.basename(f) for f in glob.glob(os.path.join(DATA, '*.laf')))
        accepted = [name for name in names if not name.startswith('bad')]
        self.assertTrue(any(name.startswith('j_') for name in accepted))
        for name in accepted:
            source = read(name)
            sig, judgment = signature(source.logic), source.judgment
            self.assertTrue(kernel.check(sig, judgment).accepted, name)
            budget = SearchBudget(4)
            if isinstance(judgment, kernel.PosSeq):
                term = search.search_pos(sig, judgment.context, judgment.molecule, budget)
                found = kernel.PosSeq(judgment.context, term, judgment.molecule)
            elif isinstance(judgment, kernel.DecSeq):
                term = search.search_dec(sig, judgment.context, judgment.decomposition, budget)
                found = kernel.DecSeq(judgment.context, term, judgment.decomposition)
            else:
                term = search.search_cmd(sig, judgment.context, budget)
                found = kernel.CmdSeq(judgment.context, term)
            self.assertIsNotNone(term, name)
            self.assertTrue(kernel.check(sig, found).accepted, name)

    def test_j_identity(self):
        sig = signature('j')
        term = search.search_dec(sig, sig.empty_context(), NegLeaf(j.left(Imp(a, a))), SearchBudget(2))
        self.assertEqual(format_dec_term(term), '{ pos :: neg_l => < $rs | pos . #0 > }')

    def test_budget_validation(self):
        with self.assertRaises(ValueError):
            SearchBudget(-1)
        with self.assertRaises(ValueError):
            SearchBudget(2, branch_cap=-1)

    def test_alternatives(self):
        context = ParametricContext((), (EM, TrueP()))
        self.assertEqual(
            search.command_alternatives(context, [a]),
            [('select', 0), ('select', 1), ('cut', a)],
        )

    def test_default_candidates(self):
        context = ParametricContext((), (EM,))
        self.assertEqual(search.default_candidates(self.sig, context, [TrueP()]), [EM, a, TrueP()])


class TestSweep(unittest.TestCase):

    def test_k1_is_consistent(self):
        sig = signature('k1')
        report = search.consistency_sweep(sig, sig.default_universe, 4)
        self.assertFalse(report.found)
        self.assertEqual(report.candidates, len(sig.default_universe))
        self.assertTrue(str(report).endswith('no command found'))

    def test_j_is_consistent(self):
        sig = signature('j')
        self.assertFalse(search.consistency_sweep(sig, sig.default_universe, 4).found)

    def test_depth_zero(self):
        sig = signature('k1')
        self.assertFalse(search.consistency_sweep(sig, sig.default_universe, 0).found)

    def test_inconsistent_context(self):
        sig = signature('k1')
        with self.assertLogs('laftk.search', level='WARNING'):
            report = search.consistency_sweep(sig, sig.default_universe, 2, context=ParametricContext((), (TrueP(),)))
        self.assertTrue(report.found)
        self.assertEqual(format_command(report.counterexample), '< $0 | unit . () >')
        self.assertIn('found < $0 | unit . () >', str(report))

    def test_unclosed_candidates_are_reported(self):
        sig = signature('k1')
        with self.assertLogs('laftk.search', level='WARNING'):
            search.consistency_sweep(sig, [EM], 1)

    def test_parallel(self):
        sig = signature('k1')
        context = ParametricContext((), (TrueP(),))
        serial = search.consistency_sweep(sig, sig.default_universe, 2, context=context)
        parallel = search.consistency_sweep(sig, sig.default_universe, 2, context=context, parallel=2)
        self.assertEqual(parallel.counterexample, serial.counterexample)
        self.assertFalse(search.consistency_sweep(sig, sig.default_universe, 2, parallel=2).found)


if __name__ == '__main__':
    unittest.main()
