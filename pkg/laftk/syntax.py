#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
The surface syntax of judgments: parsing and printing.

A judgment file holds one judgment::

    # excluded middle
    logic k1;
    ctx { neg: a |+ ~a };
    cmd < $0 | inr neg . { pos => < $0 | inl pos . #0 > } >

The header names the logic, then come the typing context and the goal,
which is one of

``pos ( t ) : M``
    the positive term `t` proves the molecule `M`;
``dec ( d ) : Δ``
    the decomposition term `d` inhabits Δ, written ``+ a`` for an atom
    leaf, ``* M`` for a refuted molecule, ``[]`` and ``[Δ, Δ]``;
``cmd c``
    the command `c` is well typed.

Formulae and patterns are written as :mod:`laftk.instances.common`
prints them. In J every formula of a judgment carries its side, as in
``a => a @L``, and the reserved labels are ``#rs``, ``$rs`` and
``#absurd``. Comments run from ``#`` to the end of the line; the ``#``
must be followed by a space or end the line, so ``#1 note`` is the
label ``#1`` followed by the word ``note``.

Printing gives the normal form of the text, on one line; parsing it
back gives the same judgment.
"""

import dataclasses
import re
import typing

import lark

from laftk.contexts import NegLeaf, Pair, ParametricContext, PosLeaf, Unit, UNIT
from laftk.errors import ParseError
from laftk.instances import LOGICS, j, k1
from laftk.instances.common import (
    AndN, AndP, Atom, FalseN, FalseP, Imp, Inj, NegAtom, Not, OrN, OrP, PairPat, TrueN, TrueP,
)
from laftk import kernel
from laftk.util import closest_word


GRAMMAR = r'''
judgment: "logic" NAME ";" context ";" goal ";"?

context: "ctx" "{" (entry (";" entry)* ";"?)? "}"
entry: "pos" ":" placed_list? -> pos_entry
     | "neg" ":" placed_list? -> neg_entry
     | "rs" ":" placed -> rs_entry
placed_list: placed ("," placed)*

?goal: "pos" "(" pos_term ")" ":" placed -> pos_goal
     | "dec" "(" dec_term ")" ":" dectype -> dec_goal
     | "cmd" command -> cmd_goal

?dectype: "+" placed -> atom_type
        | "*" placed -> molecule_type
        | "[" "]" -> unit_type
        | "[" dectype "," dectype "]" -> pair_type

placed: formula SIDE?

?formula: disjunction
        | disjunction "=>" formula -> imp
?disjunction: conjunction
            | disjunction "|+" conjunction -> or_p
            | disjunction "|-" conjunction -> or_n
?conjunction: unary
            | conjunction "&+" unary -> and_p
            | conjunction "&-" unary -> and_n
?unary: atomic
      | "not" unary -> not_
?atomic: NAME -> atom
       | "~" NAME -> neg_atom
       | "true+" -> true_p
       | "false+" -> false_p
       | "true-" -> true_n
       | "false-" -> false_n
       | "(" formula ")"

?pattern: pattern_app
        | pattern_app "::" pattern_app -> cons
?pattern_app: pattern_atom
            | "inl" pattern_app -> inl
            | "inr" pattern_app -> inr
            | "fst" pattern_app -> fst
            | "snd" pattern_app -> snd
            | "switch" pattern_app -> switch
?pattern_atom: "pos" -> p_pos
             | "neg" -> p_neg
             | "unit" -> p_unit
             | "pos_l" -> p_pos_l
             | "neg_l" -> p_neg_l
             | "unit_l" -> p_unit_l
             | "(" pattern "," pattern ")" -> pair_pattern
             | "(" pattern ")"

pos_term: pattern "." dec_term

?dec_term: POS_LABEL -> label
         | "(" ")" -> unit_term
         | "(" dec_term "," dec_term ")" -> pair_term
         | branches

branches: "{" (branch (";" branch)* ";"?)? "}"
branch: pattern "=>" command

?command: "<" NEG_LABEL "|" pos_term ">" -> select
        | "<" branches ":" placed "|" pos_term ">" -> cut

SIDE: /@[LR]\b/
POS_LABEL: /#(\d+|rs|absurd)\b/
NEG_LABEL: /\$(\d+|rs)\b/
NAME: /(?!(?:true|false|not)\b)[A-Za-z_][A-Za-z0-9_']*/
COMMENT: /#(?=[ \t\r\n]|$)[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
'''

KEYWORDS = [
    'logic', 'ctx', 'pos', 'neg', 'rs', 'dec', 'cmd', 'unit', 'inl', 'inr', 'fst', 'snd', 'switch',
    'pos_l', 'neg_l', 'unit_l', 'not', 'true', 'false',
] + LOGICS

_parser = None


def parser():
    global _parser
    if _parser is None:
        _parser = lark.Lark(GRAMMAR, start=['judgment', 'placed'], parser='earley', lexer='dynamic', propagate_positions=True)
    return _parser


@dataclasses.dataclass(frozen=True)
class SourceJudgment(object):
    """A judgment together with the logic it is stated in."""

    logic: str
    judgment: typing.Any

    @property
    def context(self):
        return self.judgment.context

    def __str__(self):
        return print_judgment(self)


def _error(message, token=None, suggestion=None):
    line = getattr(token, 'line', None)
    column = getattr(token, 'column', None)
    return ParseError(message, line, column, suggestion=suggestion)


class _Builder(lark.Transformer):
    """Build the AST of a judgment in one logic."""

    def __init__(self, logic):
        super(_Builder, self).__init__()
        self.logic = logic
        self.instance = j if logic == j.NAME else k1

    @property
    def is_j(self):
        return self.instance is j

    # formulae

    def atom(self, children):
        return Atom(str(children[0]))

    def neg_atom(self, children):
        return NegAtom(str(children[0]))

    def true_p(self, _):
        return TrueP()

    def false_p(self, _):
        return FalseP()

    def true_n(self, _):
        return TrueN()

    def false_n(self, _):
        return FalseN()

    def imp(self, children):
        return Imp(*children)

    def or_p(self, children):
        return OrP(*children)

    def or_n(self, children):
        return OrN(*children)

    def and_p(self, children):
        return AndP(*children)

    def and_n(self, children):
        return AndN(*children)

    def not_(self, children):
        return Not(children[0])

    def placed(self, children):
        formula = children[0]
        side = children[1] if len(children) > 1 else None
        try:
            self.instance.validate_formula(formula)
        except ValueError as e:
            raise _error(str(e), side)
        if not self.is_j:
            if side is not None:
                raise _error('formulae of {} have no side, but {} is given {}'.format(self.logic, formula, side), side)
            return formula
        if side is None:
            raise _error('formulae of {} need a side: write {} @L or {} @R'.format(self.logic, formula, formula))
        return j.Positioned(formula, j.Side(str(side)[1]))

    def placed_list(self, children):
        return list(children)

    # contexts

    def pos_entry(self, children):
        return 'pos', children[0] if children else []

    def neg_entry(self, children):
        return 'neg', children[0] if children else []

    def rs_entry(self, children):
        return 'rs', children[0]

    def context(self, children):
        entries = {}
        for name, value in children:
            if name in entries:
                raise _error('the context has two "{}" entries'.format(name))
            entries[name] = value
        pos, neg = entries.get('pos', []), entries.get('neg', [])
        try:
            for atom in pos:
                self.instance.validate_atom(atom)
            for molecule in neg:
                self.instance.validate_molecule(molecule)
        except ValueError as e:
            raise _error(str(e))
        if not self.is_j:
            if 'rs' in entries:
                raise _error('contexts of {} have no right-hand slot'.format(self.logic))
            return ParametricContext(tuple(pos), tuple(neg))

        slot = None
        if 'rs' in entries:
            value = entries['rs']
            try:
                if value.side is j.Side.LEFT:
                    j.validate_atom(value)
                    slot = j.RAtom(value)
                else:
                    j.validate_molecule(value)
                    slot = j.RMol(value)
            except ValueError as e:
                raise _error(str(e))
        return j.JContext(tuple(pos), tuple(neg), slot)

    # patterns

    def _pattern(self, k1_class, j_class, name):
        if self.is_j:
            return j_class()
        if k1_class is None:
            raise _error('{} is not a pattern of {}'.format(name, self.logic))
        return k1_class()

    def p_pos(self, _):
        return self._pattern(k1.Ppos, j.PposR, 'pos')

    def p_neg(self, _):
        return self._pattern(k1.Pneg, j.PnegR, 'neg')

    def p_unit(self, _):
        return self._pattern(k1.Ptrue, j.PtrueR, 'unit')

    def p_pos_l(self, _):
        return self._pattern(None, j.PposL, 'pos_l')

    def p_neg_l(self, _):
        return self._pattern(None, j.PnegL, 'neg_l')

    def p_unit_l(self, _):
        return self._pattern(None, j.PtrueL, 'unit_l')

    def pair_pattern(self, children):
        return PairPat(*children)

    def inl(self, children):
        return Inj(1, children[0])

    def inr(self, children):
        return Inj(2, children[0])

    def _j_only(self, name):
        if not self.is_j:
            raise _error('{} is not a pattern of {}'.format(name, self.logic))

    def cons(self, children):
        self._j_only('::')
        return j.Cons(*children)

    def fst(self, children):
        self._j_only('fst')
        return j.Proj(1, children[0])

    def snd(self, children):
        self._j_only('snd')
        return j.Proj(2, children[0])

    def switch(self, children):
        self._j_only('switch')
        return j.Switch(children[0])

    # terms

    def _label(self, token):
        name = str(token)[1:]
        if name.isdigit():
            return int(name)
        if not self.is_j:
            raise _error('{} is a reserved label of {}, not of {}'.format(token, j.NAME, self.logic), token)
        return j.JLabel(name)

    def label(self, children):
        return kernel.LabelP(self._label(children[0]))

    def unit_term(self, _):
        return kernel.UNIT_TERM

    def pair_term(self, children):
        return kernel.PairTerm(*children)

    def branch(self, children):
        return tuple(children)

    def branches(self, children):
        try:
            return kernel.Branches(tuple(children))
        except ValueError as e:
            raise _error(str(e))

    def pos_term(self, children):
        return kernel.PosTerm(*children)

    def select(self, children):
        return kernel.Select(self._label(children[0]), children[1])

    def cut(self, children):
        branches, molecule, positive = children
        return kernel.Cut(branches, molecule, positive)

    # goals

    def atom_type(self, children):
        return PosLeaf(children[0])

    def molecule_type(self, children):
        return NegLeaf(children[0])

    def unit_type(self, _):
        return UNIT

    def pair_type(self, children):
        return Pair(*children)

    def pos_goal(self, children):
        return lambda context: kernel.PosSeq(context, children[0], children[1])

    def dec_goal(self, children):
        return lambda context: kernel.DecSeq(context, children[0], children[1])

    def cmd_goal(self, children):
        return lambda context: kernel.CmdSeq(context, children[0])

    def judgment(self, children):
        _, context, goal = children
        return SourceJudgment(self.logic, goal(context))


def _logic_of(tree):
    token = tree.children[0]
    name = str(token)
    if name not in LOGICS:
        raise ParseError(
            'unknown logic "{}"; the logics are {}'.format(name, ', '.join(LOGICS)),
            token.line, token.column, suggestion=closest_word(name, LOGICS),
        )
    return name


def _position(text, offset):
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def _syntax_error(text, e):
    end = len(text.rstrip())
    offset = getattr(e, 'pos_in_stream', None)
    if offset is None or offset < 0 or offset > end:
        offset = end
    line, column = _position(text, offset)
    expected = getattr(e, 'expected', None) or getattr(e, 'allowed', None) or ()
    suggestion = None
    word = re.match(r"[A-Za-z_][A-Za-z0-9_']*", text[offset:])
    if word and word.group() not in KEYWORDS:
        suggestion = closest_word(word.group(), KEYWORDS)
    if offset >= end:
        message = 'unexpected end of input'
    else:
        message = 'unexpected {!r}'.format(text[offset:offset + 10].split('\n')[0])
    return ParseError(message, line, column, expected=expected, suggestion=suggestion)


def _parse(text, start):
    try:
        return parser().parse(text, start=start)
    except lark.exceptions.UnexpectedInput as e:
        raise _syntax_error(text, e)


def _transform(builder, tree):
    try:
        return builder.transform(tree)
    except lark.exceptions.VisitError as e:
        if isinstance(e.orig_exc, ParseError):
            raise e.orig_exc
        raise ParseError(str(e.orig_exc))


def parse_judgment(text):
    """
    Parse the text of a judgment.

    Returns
    -------
    SourceJudgment

    Raises
    ------
    ParseError
        If `text` is not a judgment of a known logic, with the line and
        column of the problem.
    """
    tree = _parse(text, 'judgment')
    return _transform(_Builder(_logic_of(tree)), tree)


def parse_formula(text, logic):
    """
    Parse a formula of `logic`.

    J formulae may omit their side; they are then placed where they are
    molecules, positive ones on the right and negative ones on the left.
    """
    if logic not in LOGICS:
        raise ParseError('unknown logic "{}"'.format(logic), suggestion=closest_word(logic, LOGICS))
    if logic == j.NAME and not re.search(r'@[LR]\s*$', text):
        tree = _parse(text, 'placed')
        formula = _transform(_Builder(logic), tree.children[0])
        j.validate_formula(formula)
        return j.right(formula) if formula.positive else j.left(formula)
    return _transform(_Builder(logic), _parse(text, 'placed'))


#
# printing
#

def format_label(label, sigil):
    return sigil + (label.value if isinstance(label, j.JLabel) else str(label))


def format_dec_term(term):
    if isinstance(term, kernel.LabelP):
        return format_label(term.label, '#')
    if isinstance(term, kernel.UnitTerm):
        return '()'
    if isinstance(term, kernel.PairTerm):
        return '({}, {})'.format(format_dec_term(term.left), format_dec_term(term.right))
    if isinstance(term, kernel.Branches):
        if not len(term):
            return '{}'
        return '{{ {} }}'.format('; '.join(
            '{} => {}'.format(pattern, format_command(command)) for pattern, command in term.branches
        ))
    raise TypeError('Not a decomposition term: {!r}'.format(term))


def format_pos_term(term):
    return '{} . {}'.format(term.pattern, format_dec_term(term.dec))


def format_command(command):
    if isinstance(command, kernel.Select):
        return '< {} | {} >'.format(format_label(command.label, '$'), format_pos_term(command.positive))
    if isinstance(command, kernel.Cut):
        return '< {} : {} | {} >'.format(
            format_dec_term(command.branches), command.molecule, format_pos_term(command.positive)
        )
    raise TypeError('Not a command: {!r}'.format(command))


def format_term(term):
    if isinstance(term, kernel.PosTerm):
        return format_pos_term(term)
    if isinstance(term, (kernel.Select, kernel.Cut)):
        return format_command(term)
    return format_dec_term(term)


def format_dectype(delta):
    if isinstance(delta, PosLeaf):
        return '+ {}'.format(delta.payload)
    if isinstance(delta, NegLeaf):
        return '* {}'.format(delta.payload)
    if isinstance(delta, Unit):
        return '[]'
    if isinstance(delta, Pair):
        return '[{}, {}]'.format(format_dectype(delta.left), format_dectype(delta.right))
    raise TypeError('Not a decomposition: {!r}'.format(delta))


def format_context(context):
    if isinstance(context, j.JContext):
        pos, neg = context.pos_stable, context.neg_stable
        slot = context.right_slot.payload if context.right_slot is not None else None
    else:
        pos, neg, slot = context.pos, context.neg, None
    entries = []
    if pos:
        entries.append('pos: ' + ', '.join(str(a) for a in pos))
    if neg:
        entries.append('neg: ' + ', '.join(str(m) for m in neg))
    if slot is not None:
        entries.append('rs: {}'.format(slot))
    if not entries:
        return 'ctx {}'
    return 'ctx {{ {} }}'.format('; '.join(entries))


def format_goal(judgment):
    if isinstance(judgment, kernel.PosSeq):
        return 'pos ( {} ) : {}'.format(format_pos_term(judgment.term), judgment.molecule)
    if isinstance(judgment, kernel.DecSeq):
        return 'dec ( {} ) : {}'.format(format_dec_term(judgment.term), format_dectype(judgment.decomposition))
    if isinstance(judgment, kernel.CmdSeq):
        return 'cmd {}'.format(format_command(judgment.term))
    raise TypeError('Not a judgment: {!r}'.format(judgment))


def print_judgment(source):
    """
    Print a judgment in the normal form of the surface syntax, on one line.
    """
    return 'logic {}; {}; {}'.format(source.logic, format_context(source.judgment.context), format_goal(source.judgment))
