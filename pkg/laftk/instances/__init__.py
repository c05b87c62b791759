#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


"""
The instances of the typing system shipped with laftk, by name.
"""

from laftk.instances.j import j_signature
from laftk.instances.k1 import k1_signature
from laftk.util import closest_word


_SIGNATURES = {
    'k1': k1_signature,
    'j': j_signature,
}

LOGICS = sorted(_SIGNATURES)


def signature(name):
    """
    Return the :class:`~laftk.kernel.InstanceSignature` of the logic called `name`.

    Raises
    ------
    ValueError
        If there is no such logic.
    """
    try:
        return _SIGNATURES[name]()
    except KeyError:
        message = 'Unknown logic "{}"; the logics are {}.'.format(name, ', '.join(LOGICS))
        suggestion = closest_word(str(name), LOGICS)
        if suggestion:
            message += ' Did you mean "{}"?'.format(suggestion)
        raise ValueError(message)
