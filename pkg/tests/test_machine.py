#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_machine
----------------------------------

Tests for `laftk.machine` module.
"""

import os
import unittest

from laftk import kernel, machine
from laftk.contexts import NegLeaf, Pair, ParametricContext, PosLeaf, UNIT
from laftk.errors import UnboundLabel
from laftk.instances import j, signature
from laftk.instances.common import Inj, NegAtom
from laftk.instances.k1 import Ppos, Ptrue
from laftk.machine import Closure, Config, MachineError, Opaque, PosVal
from laftk.syntax import parse_judgment


DATA = os.path.join(os.path.dirname(__file__), 'data')


def read(name):
    with open(os.path.join(DATA, name)) as source:
        return parse_judgment(source.read())


def golden(name):
    with open(os.path.join(DATA, name)) as source:
        return source.read().splitlines()


def run_file(name, fuel=100):
    source = read(name)
    sig = signature(source.logic)
    env = machine.initial_env(sig, source.context)
    return machine.run(sig, Config(env, source.judgment.term), fuel=fuel)


class TestRun(unittest.TestCase):

    def test_golden_traces(self):
        for name in ('em', 'k1_cut', 'k1_closure', 'j_cut'):
            outcome = run_file(name + '.laf')
            self.assertIsInstance(outcome, machine.Halted, name)
            self.assertEqual(list(outcome.trace) + [str(outcome)], golden(name + '.trace'), name)

    def test_excluded_middle_halts_at_once(self):
        outcome = run_file('em.laf')
        self.assertEqual(len(outcome.trace), 1)
        self.assertEqual(outcome.reason.name, 'n0')
        self.assertEqual(str(outcome.reason.pattern), 'inr neg')

    def test_out_of_fuel(self):
        outcome = run_file('k1_cut.laf', fuel=1)
        self.assertIsInstance(outcome, machine.OutOfFuel)
        self.assertEqual(outcome.trace, ('step 1: cut unit | env sizes (0,1,0)',))
        self.assertEqual(str(outcome), 'out of fuel after 1 steps')

    def test_fuel_must_be_positive(self):
        source = read('em.laf')
        sig = signature(source.logic)
        with self.assertRaises(ValueError):
            machine.run(sig, Config(machine.initial_env(sig, source.context), source.judgment.term), fuel=0)

    def test_missing_branch(self):
        outcome = run_file('bad_cut.laf')
        self.assertIsInstance(outcome, machine.StuckAt)
        self.assertEqual(outcome.error, MachineError.MISSING_BRANCH)
        self.assertEqual(len(outcome.trace), 1)

    def test_unbound_label(self):
        outcome = run_file('bad_unbound.laf')
        self.assertIsInstance(outcome, machine.StuckAt)
        self.assertEqual(outcome.error, MachineError.UNBOUND_LABEL)

    def test_every_accepted_command_halts(self):
        for name in ('em', 'k1_select_true', 'k1_cut', 'k1_comment', 'k1_closure', 'j_absurd', 'j_axiom', 'j_cut', 'j_proj'):
            self.assertIsInstance(run_file(name + '.laf'), machine.Halted, name)


class TestStep(unittest.TestCase):

    def setUp(self):
        self.sig = signature('k1')
        self.env = ParametricContext((PosVal('x0'),), (Opaque('n0'),))

    def test_cut_reduces(self):
        source = read('k1_cut.laf')
        outcome = machine.step(self.sig, Config(ParametricContext((), (Opaque('n0'),)), source.judgment.term))
        self.assertIsInstance(outcome, machine.Next)
        self.assertIsInstance(outcome.config.command, kernel.Select)

    def test_selecting_an_opaque_value_halts(self):
        command = kernel.Select(0, kernel.PosTerm(Ppos(), kernel.LabelP(0)))
        outcome = machine.step(self.sig, Config(self.env, command))
        self.assertEqual(outcome, machine.Halt(machine.ReachedOpaque('n0', Ppos())))

    def test_not_a_command(self):
        outcome = machine.step(self.sig, Config(self.env, kernel.UNIT_TERM))
        self.assertEqual(outcome.error, MachineError.SHAPE_MISMATCH)

    def test_value_of_the_wrong_shape(self):
        source = read('k1_cut.laf')
        cut = source.judgment.term
        wrong = kernel.Cut(cut.branches, cut.molecule, kernel.PosTerm(cut.positive.pattern, kernel.LabelP(0)))
        outcome = machine.step(self.sig, Config(self.env, wrong))
        self.assertEqual(outcome.error, MachineError.SHAPE_MISMATCH)


class TestTracedSteps(unittest.TestCase):
    """
    Single steps worked out by hand, checking the whole next configuration.
    """

    def setUp(self):
        self.sig = signature('k1')

    def assertSteps(self, sig, config, env, command):
        self.assertEqual(machine.step(sig, config), machine.Next(Config(env, command)))

    def test_unit_cut_leaves_the_environment(self):
        env = ParametricContext((), (Opaque('n0'),))
        cut = read('k1_cut.laf').judgment.term
        self.assertSteps(self.sig, Config(env, cut), env, kernel.Select(0, kernel.PosTerm(Ptrue(), kernel.UNIT_TERM)))

    def test_cut_binds_a_closure(self):
        env = ParametricContext((PosVal('x0'),), (Opaque('n0'),))
        cut = read('k1_closure.laf').judgment.term
        inner = cut.positive.dec
        self.assertEqual(inner.patterns(), [Ppos()])
        self.assertSteps(
            self.sig, Config(env, cut),
            ParametricContext((PosVal('x0'),), (Opaque('n0'), Closure(inner, env))),
            kernel.Select(1, kernel.PosTerm(Ppos(), kernel.LabelP(0))),
        )

    def test_select_enters_the_closure_environment(self):
        base = ParametricContext((PosVal('x0'),), (Opaque('n0'),))
        inner = read('k1_closure.laf').judgment.term.positive.dec
        env = ParametricContext((PosVal('x1'),), (Opaque('n0'), Closure(inner, base)))
        command = kernel.Select(1, kernel.PosTerm(Ppos(), kernel.LabelP(0)))
        self.assertSteps(
            self.sig, Config(env, command),
            ParametricContext((PosVal('x0'), PosVal('x1')), (Opaque('n0'),)),
            kernel.Select(0, kernel.PosTerm(Inj(1, Ppos()), kernel.LabelP(0))),
        )

    def test_pair_pattern_binds_both_leaves(self):
        source = parse_judgment(
            'logic k1; ctx { pos: a; neg: a }; '
            'cmd < { (pos, neg) => < $1 | pos . #1 > } : a &+ ~a | (pos, neg) . (#0, { pos => < $0 | pos . #0 > }) >'
        )
        cut = source.judgment.term
        refutation = cut.positive.dec.right
        env = ParametricContext((PosVal('x0'),), (Opaque('n0'),))
        self.assertSteps(
            self.sig, Config(env, cut),
            ParametricContext((PosVal('x0'), PosVal('x0')), (Opaque('n0'), Closure(refutation, env))),
            kernel.Select(1, kernel.PosTerm(Ppos(), kernel.LabelP(1))),
        )

    def test_j_left_atom_goes_to_the_right_slot(self):
        sig = signature('j')
        env = j.JContext((PosVal('x0'),), (Opaque('n0'),), j.RMol(Opaque('n1')), absurd=PosVal('absurd'))
        then = kernel.Select(0, kernel.PosTerm(j.PposL(), kernel.LabelP(j.JLabel.RS)))
        cut = kernel.Cut(
            kernel.Branches(((j.PposL(), then),)),
            j.left(NegAtom('a')),
            kernel.PosTerm(j.PposL(), kernel.LabelP(0)),
        )
        self.assertSteps(
            sig, Config(env, cut),
            j.JContext((PosVal('x0'),), (Opaque('n0'),), j.RAtom(PosVal('x0')), absurd=PosVal('absurd')),
            then,
        )


class TestValues(unittest.TestCase):

    def test_eval_dec(self):
        env = ParametricContext((PosVal('x0'),), ())
        branches = kernel.Branches()
        value = machine.eval_dec(env, kernel.PairTerm(kernel.LabelP(0), kernel.PairTerm(kernel.UNIT_TERM, branches)))
        self.assertEqual(value, Pair(PosLeaf(PosVal('x0')), Pair(UNIT, NegLeaf(Closure(branches, env)))))
        with self.assertRaises(UnboundLabel):
            machine.eval_dec(env, kernel.LabelP(1))

    def test_initial_env_k1(self):
        context = read('k1_closure.laf').context
        env = machine.initial_env(signature('k1'), context)
        self.assertEqual(env, ParametricContext((PosVal('x0'),), (Opaque('n0'),)))

    def test_initial_env_j(self):
        context = read('j_cut.laf').context
        env = machine.initial_env(signature('j'), context)
        self.assertEqual(env.pos_stable, (PosVal('x0'),))
        self.assertEqual(env.right_slot, j.RMol(Opaque('n0')))
        self.assertEqual(env.lookup_pos(j.JLabel.ABSURD), PosVal('absurd'))

    def test_describe(self):
        config = Config(ParametricContext((), (Opaque('n0'),)), read('em.laf').judgment.term)
        self.assertEqual(machine.describe(config), 'select $0 inr neg | env sizes (0,1,0)')


if __name__ == '__main__':
    unittest.main()
