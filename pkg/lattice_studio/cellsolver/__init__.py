# =========================================================================== #
#                                 CELL SOLVER                                 #
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
# Create Date: Monday July 6th 2026, 9:12:41 am                               #
# Last Modified: Monday July 13th 2026, 9:12:41 am                            #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

from lattice_studio.cellsolver.problem import (CellProblem, CellObjective, CellSolution,
                                               assemble, boundary_width)
from lattice_studio.cellsolver.solvers import (CellMinimizer, ConjugateGradientSolver,
                                               LBFGSSolver, BruteOracle, MinimizerFactory,
                                               solve, brute_oracle)
from lattice_studio.cellsolver.curve import InfimumCurve, dirichlet_infimum_curve
