#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_translate
----------------------------------

Tests for `laftk.translate` module.
"""

import glob
import os
import unittest

from laftk import kernel
from laftk.contexts import NegLeaf, ParametricContext, PosLeaf
from laftk.errors import SingletonViolation
from laftk.instances import j
from laftk.instances.common import Atom, NegAtom, OrP, TrueP
from laftk.instances.k1 import Ptrue
from laftk.syntax import parse_judgment
from laftk.translate import translate, translate_j, translate_k1


DATA = os.path.join(os.path.dirname(__file__), 'data')


def read(name):
    with open(os.path.join(DATA, name)) as source:
        return source.read()


class TestGoldenSequents(unittest.TestCase):

    def test_sequents(self):
        golden = sorted(glob.glob(os.path.join(DATA, '*.seq')))
        self.assertTrue(golden)
        for path in golden:
            name = os.path.splitext(os.path.basename(path))[0]
            source = parse_judgment(read(name + '.laf'))
            self.assertEqual(translate(source.logic, source.judgment), read(name + '.seq').strip(), name)


class TestK1(unittest.TestCase):

    def test_empty_command(self):
        judgment = kernel.CmdSeq(ParametricContext(), kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM)))
        self.assertEqual(translate_k1(judgment), '|-')

    def test_refutation_is_negated(self):
        context = ParametricContext((Atom('b'),), ())
        judgment = kernel.DecSeq(context, kernel.Branches(), NegLeaf(OrP(Atom('a'), NegAtom('a'))))
        self.assertEqual(translate_k1(judgment), '|- ~b [~a &- a]')

    def test_atoms_are_listed_once(self):
        context = ParametricContext((Atom('a'), Atom('a')), ())
        judgment = kernel.DecSeq(context, kernel.LabelP(0), PosLeaf(Atom('a')))
        self.assertEqual(translate_k1(judgment), '|- ~a [a]')

    def test_pairs_have_no_rendering(self):
        source = parse_judgment(read('k1_dec_pair.laf'))
        with self.assertRaises(ValueError):
            translate(source.logic, source.judgment)


class TestJ(unittest.TestCase):

    def test_right_focus_drops_the_conclusion(self):
        context = j.JContext((j.right(Atom('a')),), (), j.RMol(j.right(Atom('b'))))
        judgment = kernel.DecSeq(context, kernel.LabelP(0), PosLeaf(j.right(Atom('a'))))
        self.assertEqual(translate_j(judgment), 'a |- [a]')

    def test_left_focus_keeps_the_conclusion(self):
        context = j.JContext((), (), j.RMol(j.right(Atom('b'))))
        judgment = kernel.DecSeq(context, kernel.Branches(), NegLeaf(j.right(OrP(Atom('a'), Atom('b')))))
        self.assertEqual(translate_j(judgment), '[a |+ b] |- b')

    def test_two_conclusions(self):
        context = j.JContext((j.left(NegAtom('a')),), (), j.RMol(j.right(Atom('b'))))
        judgment = kernel.CmdSeq(context, kernel.Select(j.JLabel.RS, kernel.PosTerm(j.PtrueR(), kernel.UNIT_TERM)))
        with self.assertLogs('laftk.translate', level='WARNING'):
            with self.assertRaises(SingletonViolation):
                translate_j(judgment)

    def test_two_conclusions_under_right_focus(self):
        context = j.JContext((j.left(NegAtom('a')),), (), j.RMol(j.right(Atom('b'))))
        judgment = kernel.PosSeq(context, kernel.PosTerm(j.PtrueR(), kernel.UNIT_TERM), j.right(TrueP()))
        self.assertEqual(translate_j(judgment), '|- [true+]')


if __name__ == '__main__':
    unittest.main()
