# =========================================================================== #
#                                 POTENTIALS                                  #
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
# Create Date: Saturday August 1st 2026, 8:48:39 am                           #
# Last Modified: Saturday August 22nd 2026, 12:10:10 pm                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Multibody site densities, their constants and the concrete families."""
from lattice_studio.potentials.base import (InteractionTerm, MultibodyPotential,
                                            TruncatedPotential)
from lattice_studio.potentials.determinant import (DeterminantPotential, DeterminantTerm,
                                                   determinant_density)
from lattice_studio.potentials.energy import (cauchy_born, energy, evaluate, gradient,
                                              site_densities)
from lattice_studio.potentials.factory import PotentialFactory, build_potential
from lattice_studio.potentials.lennard_jones import (LJLinearizedPotential, LJLinearizedSpec,
                                                     LJRawPotential, lj_coercivity_margin,
                                                     lj_decay_coefficients, lj_margin_table,
                                                     lj_regroup, lj_truncation_coefficients,
                                                     lj_vpp)
from lattice_studio.potentials.pair import PairPotential, PowerPairTerm
from lattice_studio.potentials.periodic import PeriodicComposite, make_periodic
from lattice_studio.potentials.profiles import DecayProfile
