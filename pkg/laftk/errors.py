#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Exceptions raised by laftk.

Typing failures found by the kernel are not exceptions to callers: the
``check_*`` functions return :class:`~laftk.kernel.Rejected` results.
Everything here signals misuse of the library, ill-scoped input, or a
property of an instance or model that makes a computation impossible.
"""


class LafError(Exception):
    """Base class of every laftk error."""


class UnboundLabel(LafError):
    """
    A label was looked up in a context that does not define it.

    Attributes
    ----------
    label: int or JLabel
        The label that failed to resolve.
    polarity: str
        Either ``'+'`` for positive labels or ``'-'`` for negative ones.
    """

    def __init__(self, label, polarity):
        self.label = label
        self.polarity = polarity
        sigil = '#' if polarity == '+' else '$'
        name = getattr(label, 'value', label)
        super(UnboundLabel, self).__init__('Label {}{} is not bound.'.format(sigil, name))


class UniverseNotClosed(LafError):
    def __init__(self, missing, parent):
        self.missing = missing
        self.parent = parent
        super(UniverseNotClosed, self).__init__(
            'The universe is not closed: {} is a refuted leaf of {} but is not in the universe.'.format(missing, parent)
        )


class CycleFound(LafError):
    """
    The decomposition order of an instance has a cycle.

    Attributes
    ----------
    cycle: list
        The molecules of the cycle. Each one has the next as a refuted
        leaf of one of its decompositions, and the last has the first.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super(CycleFound, self).__init__('The decomposition order has a cycle through {}.'.format(
            ', '.join(str(m) for m in self.cycle)
        ))


class NonTerminating(LafError):
    def __init__(self, molecule):
        self.molecule = molecule
        super(NonTerminating, self).__init__(
            'Interpreting {} requires interpreting it again: the instance is not well-founded here.'.format(molecule)
        )


class UninterpretableFunction(LafError):
    pass


class DomainMismatch(LafError):
    pass


class UncheckedJudgment(LafError):
    pass


class SingletonViolation(LafError):
    pass


class ParseError(LafError):
    """
    The text is not in the surface grammar.

    Attributes
    ----------
    line: int
    column: int
    expected: frozenset
        Names of the tokens that would have been acceptable.
    suggestion: str or None
        A close keyword, when the offending word looks like a misspelling.
    """

    def __init__(self, message, line=None, column=None, expected=(), suggestion=None):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        self.suggestion = suggestion
        if line is not None:
            message = 'line {}, column {}: {}'.format(line, column, message)
        if suggestion:
            message = '{} (did you mean "{}"?)'.format(message, suggestion)
        super(ParseError, self).__init__(message)
