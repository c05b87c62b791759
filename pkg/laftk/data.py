#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
Code for reading judgment files and molecule universes.
"""

import gzip
import sys

import sexpdata

from laftk.syntax import parse_formula, parse_judgment


def open_maybe_gzipped(filename):
    """
    Open a possibly gzipped text file.

    Parameters
    ----------
    filename: str
        The name of the file to open.

    Returns
    -------
    file
        An open file object.
    """
    with open(filename, 'rb') as test_read:
        magic = test_read.read(2)
    if magic == b'\x1f\x8b':
        return gzip.open(filename, mode='rt', encoding='utf-8')
    return open(filename, 'rt', encoding='utf-8')


def read_text(filename):
    """
    Read the whole of a (possibly gzipped) file. Use '-' to read from standard input.
    """
    if filename == '-':
        return sys.stdin.read()
    with open_maybe_gzipped(filename) as source:
        return source.read()


def read_judgment(filename):
    """
    Read the judgment in the named file.

    Returns
    -------
    SourceJudgment

    Raises
    ------
    ParseError
        If the file does not hold exactly one judgment.
    """
    return parse_judgment(read_text(filename))


def parse_molecules(text, logic):
    """
    Parse an S-expression list of formulae of `logic`.

    Formulae are written as strings, e.g. ``("a |+ ~a" "false+")``;
    formulae that are a single word may be written bare, e.g. ``(a true+)``.
    The outer parentheses may be omitted. J formulae without a side are
    placed where they are molecules.

    Returns
    -------
    list
        The formulae, in order.

    Raises
    ------
    ValueError
        If an item is neither a string nor a word.
    ParseError
        If a formula does not parse.
    """
    items = sexpdata.loads('(' + text + ')')
    if len(items) == 1 and isinstance(items[0], list):
        items = items[0]

    formulae = []
    for i, item in enumerate(items):
        # newer sexpdata symbols are already strings
        if isinstance(item, sexpdata.Symbol) and not isinstance(item, str):
            item = item.value()
        if not isinstance(item, str):
            raise ValueError('Item {} of the molecule list is not a formula: {!r}'.format(i, item))
        formulae.append(parse_formula(item, logic))
    return formulae


def read_universe(filename, logic):
    """
    Read the formulae listed in the named file, an S-expression list as for :func:`parse_molecules`.
    """
    return parse_molecules(read_text(filename), logic)
