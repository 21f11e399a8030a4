# =========================================================================== #
#                       DISCRETE DETERMINANT POTENTIALS                       #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \determinant.py                                                       #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday August 3rd 2026, 9:09:21 pm                             #
# Last Modified: Wednesday August 26th 2026, 6:01:26 am                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Densities built from determinants of difference quotient tuples.

    phi_i(z) = sum_t C_t g(det(D^{xi_1} z(i), ..., D^{xi_n} z(i)))
               + sum_n |D^{e_n} z(i)|^p

g(z) = (z^2 + eta^2)^(q/2) - eta^q smooths |z|^q at 0, so g <= |z|^q and
g(det) <= C_t (|det|^(p/n) + 1) whenever q <= p/n.
"""
import itertools

import numpy as np

from lattice_studio.lattice.domain import as_offset
from lattice_studio.lattice.stencil import Stencil
from lattice_studio.potentials.base import InteractionTerm, MultibodyPotential
from lattice_studio.potentials.pair import PowerPairTerm
from lattice_studio.utils.exceptions import ConfigurationError

DEFAULT_ETA = 1e-8

def cofactor(A):
    """Cofactor matrices of a stack of square matrices, d det / d A."""
    n = A.shape[-1]
    if n == 1:
        return np.ones_like(A)
    C = np.empty_like(A)
    for r in range(n):
        for c in range(n):
            minor = np.delete(np.delete(A, r, axis=-2), c, axis=-1)
            C[..., r, c] = (-1) ** (r + c) * np.linalg.det(minor)
    return C

def column_matrix(stencil, xis):
    """Matrices whose columns are D^{xi_j} z(i), shape density_shape + (n, n)."""
    return np.stack([stencil.difference(xi.xi) for xi in xis], axis=-1)

class DeterminantTerm(InteractionTerm):
    """C_t g(det(D^{xi_1} z, ..., D^{xi_n} z))."""

    def __init__(self, xis, weight, q=1.0, eta=DEFAULT_ETA):
        self.xis = tuple(as_offset(xi) for xi in xis)
        self.weight = float(weight)
        if not self.weight >= 0:
            raise ConfigurationError("tuple weights must be nonnegative")
        self.q = float(q)
        self.eta = float(eta)
        self.radius = max(xi.linf for xi in self.xis)

    def _g(self, z):
        return (z * z + self.eta ** 2) ** (self.q / 2) - self.eta ** self.q

    def _dg(self, z):
        base = z * z + self.eta ** 2
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(base > 0, self.q * z * base ** (self.q / 2 - 1), 0.0)

    def density(self, stencil):
        det = np.linalg.det(column_matrix(stencil, self.xis))
        return self.weight * self._g(det)

    def partials(self, stencil):
        A = column_matrix(stencil, self.xis)
        det = np.linalg.det(A)
        scale = self.weight * self._dg(det)
        cof = cofactor(A)
        parts = []
        for j, xi in enumerate(self.xis):
            g = scale[..., np.newaxis] * cof[..., :, j] / (stencil.epsilon * xi.euclidean)
            parts.append((xi.xi, g))
            parts.append(((0,) * xi.dim, -g))
        return self.weight * self._g(det), parts

    def singular(self, stencil):
        if self.eta > 0 or self.q > 1:
            return super(DeterminantTerm, self).singular(stencil)
        return np.linalg.det(column_matrix(stencil, self.xis)) == 0

    def majorant(self):
        # AM-GM on Hadamard: |det|^(p/n) <= (1/n) sum_j |D^{xi_j} z|^p.
        table = {}
        share = self.weight / len(self.xis)
        for xi in self.xis:
            key = ((0,) * xi.dim, xi.xi)
            table[key] = table.get(key, 0.0) + share
        return table

# --------------------------------------------------------------------------- #
#                         DETERMINANT POTENTIAL                               #
# --------------------------------------------------------------------------- #
class DeterminantPotential(MultibodyPotential):
    """Determinant tuples plus nearest-neighbour p-power terms.

    Parameters
    ----------
    tuples : list of (sequence of xi, weight)
        Each tuple has n directions.
    N, n : int
    p : float, optional (default=2.0)
    q : float, optional (default=1.0)
        Exponent of g; must satisfy 0 < q <= min(2, p/n).
    eta : float, optional (default=1e-8)
        Smoothing of g at 0.
    nn_stiffness : float, optional (default=1.0)
    """

    def __init__(self, tuples, N, n, p=2.0, q=1.0, eta=DEFAULT_ETA,
                 nn_stiffness=1.0, name=None):
        self.tuples = [(tuple(as_offset(xi) for xi in xis), float(w)) for xis, w in tuples]
        for xis, _ in self.tuples:
            if len(xis) != n:
                raise ConfigurationError("determinant tuple has %d directions, expected n=%d"
                                         % (len(xis), n))
            if any(xi.dim != N for xi in xis):
                raise ConfigurationError("tuple directions must have dimension %d" % N)
        if not 0 < q <= min(2.0, p / n):
            raise ValueError("q must satisfy 0 < q <= min(2, p/n).")
        if eta < 0:
            raise ValueError("eta must be nonnegative.")
        if not nn_stiffness > 0:
            raise ValueError("nn_stiffness must be positive.")
        self.q = float(q)
        self.eta = float(eta)
        self.nn_stiffness = float(nn_stiffness)
        super(DeterminantPotential, self).__init__(N, n, p, 1, nn_stiffness,
                                                   name or 'determinant')

    def _build_terms(self):
        terms = [DeterminantTerm(xis, w, self.q, self.eta) for xis, w in self.tuples]
        terms += [PowerPairTerm(tuple(1 if d == k else 0 for d in range(self.N)),
                                stiffness=self.nn_stiffness, p=self.p)
                  for k in range(self.N)]
        return terms

    @staticmethod
    def enumerate_tuples(N, n, r_max, decay=None, scale=1.0):
        """Tuples of distinct directions with |xi|_inf <= r_max.

        Weights scale * prod_j |xi_j|_inf^(-decay) stay summable as r_max
        grows when decay > N; the default is N + 1.
        """
        if r_max < 1:
            raise ValueError("r_max must be at least 1.")
        decay = N + 1.0 if decay is None else float(decay)
        offsets = [xi for xi in itertools.product(range(-r_max, r_max + 1), repeat=N)
                   if any(xi)]
        tuples = []
        for combo in itertools.combinations(offsets, n):
            weight = scale
            for xi in combo:
                weight *= max(abs(v) for v in xi) ** (-decay)
            tuples.append((combo, weight))
        return tuples

    def hadamard_gaps(self, stencil):
        """(1/n) sum_j |D^{xi_j} z|^p - |det|^(p/n) for every tuple, stacked first."""
        gaps = []
        for xis, _ in self.tuples:
            A = column_matrix(stencil, xis)
            norms = np.linalg.norm(A, axis=-2) ** self.p
            gaps.append(norms.mean(axis=-1) - np.abs(np.linalg.det(A)) ** (self.p / self.n))
        return np.stack(gaps)

def determinant_density(potential, i, u, policy=None):
    """The determinant density at site i (integer coordinates)."""
    if not isinstance(potential, DeterminantPotential):
        raise TypeError("potential must be a DeterminantPotential.")
    if u.n != potential.n or u.N != potential.N:
        raise ConfigurationError("field dimensions (N=%d, n=%d) do not match the potential "
                                 "(N=%d, n=%d)" % (u.N, u.n, potential.N, potential.n))
    sites = u.domain.subdomain(np.asarray(i, dtype=int), (1,) * u.N)
    stencil = Stencil.from_field(u, potential.reach, policy, sites)
    return float(potential.density(stencil).ravel()[0])
