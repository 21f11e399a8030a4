# =========================================================================== #
#                               INFIMUM CURVES                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \curve.py                                                             #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday July 8th 2026, 7:11:11 pm                            #
# Last Modified: Friday July 17th 2026, 12:41:45 am                           #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Cell minima along an increasing schedule of cube sides."""
from dataclasses import dataclass, field
import logging

import numpy as np
import pandas as pd

from lattice_studio.cellsolver.problem import CellProblem
from lattice_studio.cellsolver.solvers import solve
from lattice_studio.utils.misc import parse_matrix

logger = logging.getLogger(__name__)

@dataclass
class InfimumCurve:
    """F_L(M) for every L of a schedule with convergence diagnostics."""
    M: np.ndarray
    m: object
    solutions: list = field(default_factory=list)

    @property
    def points(self):
        return [(s.L, s.per_volume_energy) for s in self.solutions]

    @property
    def sides(self):
        return np.array([s.L for s in self.solutions], dtype=float)

    @property
    def values(self):
        return np.array([s.per_volume_energy for s in self.solutions], dtype=float)

    def differences(self):
        """Successive differences F_{L_{k+1}} - F_{L_k}."""
        return np.diff(self.values)

    def richardson(self):
        """Limit of F_L = f + a / L through the last two points, None with fewer."""
        if len(self.solutions) < 2:
            return None
        (L1, F1), (L2, F2) = self.points[-2:]
        return (L2 * F2 - L1 * F1) / (L2 - L1)

    def growth_bound(self, potential):
        """C (|M|^p + 1) with C the Cauchy-Born constant of the potential."""
        C = potential.cauchy_born_constant()
        return C * (np.linalg.norm(self.M) ** potential.p + 1.0)

    def within_bound(self, potential):
        bound = self.growth_bound(potential)
        return bool(np.all(self.values <= bound + 1e-10 * max(1.0, bound)))

    def to_frame(self):
        return pd.DataFrame({'L': [s.L for s in self.solutions],
                             'm': [s.problem.m for s in self.solutions],
                             'F_L': self.values,
                             'gradnorm': [s.gradnorm for s in self.solutions],
                             'iterations': [s.iterations for s in self.solutions],
                             'converged': [s.converged for s in self.solutions]})

    def to_dict(self):
        return {'M': self.M.tolist(), 'm': str(self.m),
                'points': [[int(L), float(F)] for L, F in self.points],
                'differences': self.differences().tolist(),
                'richardson': self.richardson()}

def dirichlet_infimum_curve(potential, M, m='sqrt', schedule=(8, 16, 32), method='auto',
                            gtol=None, max_iter=None):
    """Solves the cell problem for every L of an increasing schedule.

    Returns
    -------
    InfimumCurve
    """
    schedule = [int(L) for L in schedule]
    if not schedule:
        raise ValueError("schedule must not be empty.")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing, got %s." % schedule)
    M = parse_matrix(M, potential.n, potential.N)
    curve = InfimumCurve(M, m)
    for L in schedule:
        problem = CellProblem(potential, M, L, m)
        curve.solutions.append(solve(problem, method=method, gtol=gtol, max_iter=max_iter))
    logger.info("infimum curve of %s at M=%s: %s", potential.name, M.tolist(),
                ", ".join("L=%d F=%.10g" % p for p in curve.points))
    return curve
