# =========================================================================== #
#                            PERIODIC COMPOSITION                             #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \periodic.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Sunday August 9th 2026, 7:10:51 am                             #
# Last Modified: Thursday September 3rd 2026, 5:49:21 pm                      #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Periodic potentials built from a truncation family.

Site i of a field on a region is evaluated with the member of truncation
level floor(d_i / eps) of the base family, d_i being the sup-distance from
i to the complement of the region, so no term of the composite reaches
outside the region. Difference quotients at spacing eps of the window are
the unit-spacing quotients of the rescaled window z(eps j) / eps.
"""
import logging

import numpy as np

from lattice_studio.potentials.base import MultibodyPotential

logger = logging.getLogger(__name__)

class PeriodicComposite(MultibodyPotential):
    """Truncation-by-depth composite of a periodic base family.

    Parameters
    ----------
    base : MultibodyPotential
        Base family with a declared period.
    """

    def __init__(self, base, name=None):
        if not isinstance(base, MultibodyPotential):
            raise TypeError("base must be a MultibodyPotential.")
        if base.period is None:
            raise ValueError("a periodic composite needs a base with a declared period.")
        self.base = base
        super(PeriodicComposite, self).__init__(
            base.N, base.n, base.p, base.period, base.coercivity_constant(),
            name or "periodic(%s)" % base.name)

    def _build_terms(self):
        return self.base.terms

    @property
    def k_max(self):
        return self.base.k_max

    def bulk(self):
        return self.base

    def _levels(self, stencil, level):
        if level is not None:
            return level
        if stencil.depth is None:
            return None
        return np.minimum(np.asarray(stencil.depth), self.k_max)

    def density(self, stencil, level=None):
        return super(PeriodicComposite, self).density(stencil, self._levels(stencil, level))

    def density_and_partials(self, stencil, level=None):
        return super(PeriodicComposite, self).density_and_partials(
            stencil, self._levels(stencil, level))

    def majorant(self, predicate=None, variant='plain', **kwargs):
        return self.base.majorant(predicate, variant, **kwargs)

    def nonconvexity_profile(self):
        return self.base.nonconvexity_profile()

    def closeness_profile(self, level):
        return self.base.closeness_profile(level)

def make_periodic(base, name=None):
    """Wraps a periodic truncation family into its depth-truncated composite."""
    return PeriodicComposite(base, name)
