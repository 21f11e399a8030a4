# =========================================================================== #
#                                CELL PROBLEMS                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \problem.py                                                           #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Saturday July 11th 2026, 1:59:09 am                            #
# Last Modified: Monday July 20th 2026, 1:00:17 pm                            #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Affine-boundary cell problems and their objective over the free sites.

The cell is Q_L = [0, L)^N at spacing 1 with sites 0, ..., L-1 per axis.
A site i is frozen to M i when i + [-m, m)^N leaves Q_L, so the free sites
are those with m <= i_k <= L - m on every axis. Outside Q_L the field is
extended by M i.
"""
from dataclasses import dataclass, field
import logging
import math

import numpy as np

from lattice_studio.lattice.domain import ExtensionPolicy, LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.potentials.base import MultibodyPotential
from lattice_studio.potentials.energy import cauchy_born, energy, gradient
from lattice_studio.utils.misc import parse_matrix

logger = logging.getLogger(__name__)

def boundary_width(L, m='sqrt'):
    """Resolves the layer width: an integer m >= 1 or floor(sqrt(L)) for 'sqrt'."""
    if m == 'sqrt':
        return max(1, math.isqrt(int(L)))
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError("m must be a positive integer or 'sqrt'.")
    return int(m)

# --------------------------------------------------------------------------- #
#                              CELL PROBLEM                                   #
# --------------------------------------------------------------------------- #
class CellProblem:
    """Minimize the energy on Q_L among fields equal to M i on the frozen layer.

    Parameters
    ----------
    potential : MultibodyPotential

    M : array-like, shape (n, N)
        Affine slope; flat lists are read row-major.

    L : int
        Cube side in lattice units.

    m : int or 'sqrt', optional (default='sqrt')
        Width of the frozen layer.
    """

    def __init__(self, potential, M, L, m='sqrt'):
        if not isinstance(potential, MultibodyPotential):
            raise TypeError("potential must be a MultibodyPotential.")
        if isinstance(L, bool) or not isinstance(L, (int, np.integer)) or L < 1:
            raise ValueError("L must be a positive integer.")
        self.potential = potential
        self.M = parse_matrix(M, potential.n, potential.N)
        if self.M.shape != (potential.n, potential.N):
            raise ValueError("M has shape %s, expected (%d, %d)."
                             % (self.M.shape, potential.n, potential.N))
        self.L = int(L)
        self.m_spec = m
        self.m = boundary_width(self.L, m)
        self.domain = LatticeDomain.cell(self.L, potential.N, potential.n)
        self.policy = ExtensionPolicy.affine(self.M)

    @property
    def N(self):
        return self.potential.N

    @property
    def n(self):
        return self.potential.n

    @property
    def volume(self):
        return float(self.L) ** self.N

    def free_mask(self):
        """Boolean array of the free sites, shape domain.shape."""
        coords = self.domain.coords()
        return np.all((coords >= self.m) & (coords <= self.L - self.m), axis=-1)

    @property
    def n_free_sites(self):
        return int(self.free_mask().sum())

    def affine_field(self):
        return LatticeField.affine(self.domain, self.M)

    def is_admissible(self, u, atol=0.0):
        """True when u equals M i on every frozen site."""
        frozen = ~self.free_mask()
        gap = np.abs(u.values[frozen] - self.affine_field().values[frozen])
        return bool(gap.size == 0 or gap.max() <= atol)

    def energy(self, u):
        return energy(self.potential, u, policy=self.policy)

    def cauchy_born(self):
        return cauchy_born(self.potential, self.M)

    def to_dict(self):
        return {'potential': self.potential.describe(), 'M': self.M.tolist(),
                'L': self.L, 'm': self.m, 'm_mode': str(self.m_spec),
                'free_sites': self.n_free_sites}

    def __repr__(self):
        return "CellProblem(%s, M=%s, L=%d, m=%d)" % (self.potential.name, self.M.tolist(),
                                                      self.L, self.m)

# --------------------------------------------------------------------------- #
#                                OBJECTIVE                                    #
# --------------------------------------------------------------------------- #
class CellObjective:
    """Energy of a cell problem as a function of the free coordinates.

    The vector x lists the values of the free sites in enumeration order,
    n components per site.
    """

    def __init__(self, problem):
        self.problem = problem
        self.mask = problem.free_mask()
        self._affine = problem.affine_field().values
        self._zero = ExtensionPolicy.zero()
        self.evaluations = 0

    @property
    def size(self):
        return int(self.mask.sum()) * self.problem.n

    @property
    def is_quadratic(self):
        return self.problem.potential.is_quadratic

    def start(self):
        """Free coordinates of the affine field."""
        return self._affine[self.mask].ravel().copy()

    def coordinates(self, u):
        """Free coordinates of an admissible field."""
        return np.asarray(u.values)[self.mask].ravel().copy()

    def field(self, x):
        values = np.array(self._affine)
        values[self.mask] = np.asarray(x, dtype=float).reshape(-1, self.problem.n)
        return LatticeField(self.problem.domain, values)

    def value(self, x):
        self.evaluations += 1
        return self.problem.energy(self.field(x))

    def gradient(self, x):
        g = gradient(self.problem.potential, self.field(x), policy=self.problem.policy)
        return np.asarray(g.values)[self.mask].ravel()

    def value_and_gradient(self, x):
        return self.value(x), self.gradient(x)

    def hessp(self, v):
        """Hessian-vector product of a quadratic energy.

        The gradient of a homogeneous quadratic form at the field with free
        values v, frozen values 0 and zero exterior.
        """
        values = np.zeros(self._affine.shape)
        values[self.mask] = np.asarray(v, dtype=float).reshape(-1, self.problem.n)
        u = LatticeField(self.problem.domain, values)
        g = gradient(self.problem.potential, u, policy=self._zero)
        return np.asarray(g.values)[self.mask].ravel()

def assemble(problem):
    """The objective of a cell problem with its free/frozen partition."""
    objective = CellObjective(problem)
    logger.debug("assembled %r with %d free coordinates", problem, objective.size)
    return objective

# --------------------------------------------------------------------------- #
#                               SOLUTION                                      #
# --------------------------------------------------------------------------- #
@dataclass
class CellSolution:
    """Result of a cell solve.

    ``per_volume_energy`` is F_L(M) = energy / L^N. ``upper_bound`` marks
    values of non-quadratic energies, which are only known to bound the
    infimum from above.
    """
    problem: CellProblem
    field: LatticeField
    energy: float
    per_volume_energy: float
    iterations: int
    gradnorm: float
    wall_time: float
    converged: bool
    method: str
    upper_bound: bool = False
    notes: list = field(default_factory=list)
    history: dict = field(default_factory=dict)

    @property
    def L(self):
        return self.problem.L

    def to_dict(self):
        return {'inputs': self.problem.to_dict(), 'F_L': self.per_volume_energy,
                'energy': self.energy, 'iterations': int(self.iterations),
                'gradnorm': float(self.gradnorm), 'wall_time': float(self.wall_time),
                'converged': bool(self.converged), 'method': self.method,
                'upper_bound': bool(self.upper_bound), 'notes': list(self.notes)}
