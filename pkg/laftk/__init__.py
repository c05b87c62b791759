#
# laftk: LAF toolkit
#
# Copyright 2026 The laftk developers
#
# Licensed under Version 3 of the GPL or any later version
#


__author__ = 'The laftk developers'
__email__ = 'laftk-developers@users.noreply.github.com'
__version__ = '0.2.0'
