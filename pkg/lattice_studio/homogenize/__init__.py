# =========================================================================== #
#                               HOMOGENIZATION                                #
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
# Create Date: Tuesday July 14th 2026, 10:23:51 am                            #
# Last Modified: Saturday July 25th 2026, 5:40:50 pm                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Homogenized densities from cell problems, tilings and convexity probes."""
from lattice_studio.homogenize.estimate import (HomogenizationEstimate, default_schedule,
                                                estimate_fhom, growth_sandwich)
from lattice_studio.homogenize.probe import (ConvexityProbeResult, ProbeSegment,
                                             rank_one_probe)
from lattice_studio.homogenize.sweep import default_grid, sweep
from lattice_studio.homogenize.tiling import (SubadditivityResult, subadditivity_check,
                                              tile_field, tile_layout)
