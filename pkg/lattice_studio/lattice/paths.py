# =========================================================================== #
#                                LATTICE PATHS                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \paths.py                                                             #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Thursday July 30th 2026, 4:24:05 am                            #
# Last Modified: Wednesday August 19th 2026, 2:15:02 am                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Nearest-neighbour lattice paths and the path p-power inequality.

The path from j to j + xi moves first along axis 1, then axis 2, and so
on, each step being sign(xi_k) e_k. Summing the steps telescopes to xi,
and the discrete Jensen bound

    |D^xi u(j)|^p <= (m^p / |xi|^p) (1/m) sum_h |D^{s_h} u(j_h)|^p,

with m = ||xi||_1 <= sqrt(N) |xi|, gives the constant N^(p/2).
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from lattice_studio.lattice.domain import as_offset
from lattice_studio.lattice.field import difference_quotient

@dataclass(frozen=True)
class LatticePath:
    """Steps and visited sites of the path from ``origin`` to origin + xi."""
    origin: tuple
    offset: object
    steps: tuple
    visited: tuple

    def __len__(self):
        return len(self.steps)

    def step_origins(self):
        """Start of every step relative to the origin."""
        o = np.array(self.origin)
        return tuple(tuple(int(v) for v in np.array(j) - o) for j in self.visited[:-1])

@lru_cache(maxsize=None)
def _steps(xi):
    N = len(xi)
    steps = []
    for k, v in enumerate(xi):
        e = [0] * N
        e[k] = 1 if v > 0 else -1
        steps.extend([tuple(e)] * abs(v))
    return tuple(steps)

def build_path(j, xi):
    """Builds the coordinate-grouped path from j to j + xi.

    Parameters
    ----------
    j : sequence of int
        Start of the path.

    xi : DirectionOffset or sequence of int
        Nonzero offset.

    Returns
    -------
    LatticePath
    """
    xi = as_offset(xi)
    j = tuple(int(v) for v in np.atleast_1d(j))
    if len(j) != xi.dim:
        raise ValueError("j and xi must have the same dimension.")
    steps = _steps(xi.xi)
    visited = [j]
    for s in steps:
        visited.append(tuple(a + b for a, b in zip(visited[-1], s)))
    return LatticePath(origin=j, offset=xi, steps=steps, visited=tuple(visited))

def path_constant(p, N):
    """C(p, N) = N^(p/2), the constant of the path p-power inequality."""
    if p < 1:
        raise ValueError("p must be at least 1.")
    return float(N) ** (p / 2.0)

def path_power_inequality_gap(u, j, xi, p, Cfactor=None, policy=None):
    """RHS - LHS of |D^xi u(j)|^p <= Cfactor / ||xi||_1 sum_h |D^{s_h} u(j_h)|^p.

    Parameters
    ----------
    u : LatticeField
    j : sequence of int
    xi : DirectionOffset or sequence of int
    p : float
        Exponent, at least 1.
    Cfactor : float, optional
        Candidate constant; defaults to ``path_constant(p, N)``.
    policy : ExtensionPolicy, optional
    """
    xi = as_offset(xi)
    if p < 1:
        raise ValueError("p must be at least 1.")
    Cfactor = path_constant(p, xi.dim) if Cfactor is None else float(Cfactor)
    path = build_path(j, xi)
    lhs = np.linalg.norm(difference_quotient(u, path.origin, xi, policy)) ** p
    terms = [np.linalg.norm(difference_quotient(u, site, step, policy)) ** p
             for site, step in zip(path.visited[:-1], path.steps)]
    rhs = Cfactor / xi.l1 * float(np.sum(terms))
    return rhs - lhs
