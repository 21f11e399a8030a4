# =========================================================================== #
#                                   LATTICE                                   #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \__init__.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Friday July 24th 2026, 6:45:45 pm                              #
# Last Modified: Monday August 10th 2026, 2:50:17 pm                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Lattice geometry, fields, difference quotients, paths and cut-offs."""
from lattice_studio.lattice.domain import DirectionOffset, ExtensionPolicy, LatticeDomain
from lattice_studio.lattice.field import LatticeField, difference_quotient
from lattice_studio.lattice.stencil import Stencil
from lattice_studio.lattice.paths import (LatticePath, build_path, path_constant,
                                          path_power_inequality_gap)
from lattice_studio.lattice.cutoff import CutoffFunction, blend, blend_expansion
from lattice_studio.lattice.embedding import (PiecewiseConstantEmbedding,
                                              piecewise_constant_embedding)
