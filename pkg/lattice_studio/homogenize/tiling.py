# =========================================================================== #
#                          TILING AND SUBADDITIVITY                           #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \tiling.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Sunday July 19th 2026, 3:09:55 am                              #
# Last Modified: Saturday August 1st 2026, 9:28:02 pm                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Replication of a cell minimizer across a larger cube.

Q_S holds K tiles per axis with K = floor((S - sqrt(S)) / L). Tile k
carries v_S(i) = u_L(i - o - L k) + M (o + L k) and v_S(i) = M i away from
the tiles, so the pieces glue along the frozen layers of the cells.
"""
from dataclasses import dataclass
import itertools
import logging
import math

import numpy as np

from lattice_studio.cellsolver.problem import CellProblem, CellSolution, boundary_width
from lattice_studio.cellsolver.solvers import solve
from lattice_studio.lattice.domain import LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.misc import parse_matrix

logger = logging.getLogger(__name__)

def tile_layout(L, S, m='sqrt', period=1):
    """Tiles per axis K and the offset of the first tile in Q_S.

    K starts at floor((S - sqrt(S)) / L) and shrinks until the free sites of
    every tile stay off the frozen layer of Q_S. The offset is centred and
    rounded down to a multiple of the period.
    """
    L, S, period = int(L), int(S), int(period or 1)
    if S <= L:
        raise ValueError("S must exceed L, got L=%d and S=%d." % (L, S))
    m_L, m_S = boundary_width(L, m), boundary_width(S, m)
    K = max(int(math.floor((S - math.sqrt(S)) / L)), 0)
    while K > 0:
        offset = ((S - K * L) // 2 // period) * period
        if offset + m_L >= m_S and offset + K * L - m_L <= S - m_S:
            return K, offset
        K -= 1
    return 0, 0

def tile_field(u_L, L, S, M, m='sqrt', period=1):
    """The tiled competitor v_S on Q_S built from a minimizer on Q_L.

    Parameters
    ----------
    u_L : LatticeField or CellSolution
        Admissible field on the cell Q_L.

    L, S : int
        Cube sides, S > L.

    M : array-like
        Affine slope shared by both cells.

    m : int or 'sqrt'
        Boundary mode of both cells.

    period : int, optional (default=1)
        Period of the potential; tile offsets are multiples of it.

    Returns
    -------
    LatticeField
    """
    if isinstance(u_L, CellSolution):
        u_L = u_L.field
    N, n = u_L.N, u_L.n
    M = parse_matrix(M, n, N)
    if M.shape != (n, N):
        raise ConfigurationError("M has shape %s but the field needs (%d, %d)"
                                 % (M.shape, n, N))
    if u_L.domain.shape != (int(L),) * N:
        raise ConfigurationError("field lives on %s, not on the cell of side %d"
                                 % (u_L.domain.shape, L))
    K, offset = tile_layout(L, S, m, period)
    domain = LatticeDomain.cell(int(S), N, n)
    values = np.array(LatticeField.affine(domain, M).values)
    for k in itertools.product(range(K), repeat=N):
        corner = offset + int(L) * np.array(k)
        block = tuple(slice(c, c + int(L)) for c in corner)
        values[block] = u_L.values + M @ corner.astype(float)
    logger.debug("tiled Q_%d into Q_%d with %d tiles per axis at offset %d",
                 L, S, K, offset)
    return LatticeField(domain, values)

@dataclass
class SubadditivityResult:
    """Energies of the tiling comparison between Q_L and Q_S."""
    L: int
    S: int
    tiles: int
    F_L: float
    F_S: float
    tiled: float
    scaled: float
    correction: float
    residual: float
    upper_bound: bool

    def passed(self, tol=0.0):
        return self.residual <= tol

    def to_dict(self):
        return dict(self.__dict__)

def subadditivity_check(potential, M, L, S, m='sqrt', method='auto', gtol=None,
                        solution_L=None):
    """Compares F_S with the energy of the tiled Q_L minimizer.

    ``tiled`` is E(v_S) / S^N, ``scaled`` is (K L / S)^N F_L and
    ``correction`` their difference; ``residual`` is F_S - tiled and is
    nonpositive up to solver tolerance because v_S is admissible on Q_S.
    """
    T = potential.period or 1
    if L % T or S % T:
        raise ConfigurationError("L=%d and S=%d must be multiples of the period %d"
                                 % (L, S, T))
    M = parse_matrix(M, potential.n, potential.N)
    if solution_L is None:
        solution_L = solve(CellProblem(potential, M, L, m), method=method, gtol=gtol)
    problem_S = CellProblem(potential, M, S, m)
    v_S = tile_field(solution_L, L, S, M, m, T)
    if not problem_S.is_admissible(v_S, atol=1e-12 * max(1.0, S * np.abs(M).max())):
        raise ConfigurationError("tiled field is not admissible on Q_%d" % S)
    solution_S = solve(problem_S, method=method, gtol=gtol, initial=v_S)
    K, _ = tile_layout(L, S, m, T)
    tiled = problem_S.energy(v_S) / problem_S.volume
    scaled = (K * L / S) ** potential.N * solution_L.per_volume_energy
    result = SubadditivityResult(int(L), int(S), K ** potential.N,
                                 solution_L.per_volume_energy,
                                 solution_S.per_volume_energy, tiled, scaled,
                                 tiled - scaled, solution_S.per_volume_energy - tiled,
                                 not potential.is_quadratic)
    logger.info("subadditivity %s L=%d S=%d: F_L=%.10g F_S=%.10g tiled=%.10g residual=%.3e",
                potential.name, L, S, result.F_L, result.F_S, tiled, result.residual)
    return result
