# =========================================================================== #
#                        PIECEWISE CONSTANT EMBEDDING                         #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \embedding.py                                                         #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday July 27th 2026, 8:48:59 pm                              #
# Last Modified: Saturday August 15th 2026, 1:09:22 pm                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Piecewise constant functions attached to lattice fields."""
import numpy as np

from lattice_studio.lattice.domain import ExtensionPolicy

class PiecewiseConstantEmbedding:
    """x -> u(nearest lattice point to x).

    Ties go to the lower integer coordinate in every axis, which is the
    lexicographically smallest tied point. Nearest points outside the domain
    are resolved by the extension policy (zero by default).
    """

    def __init__(self, field, policy=None):
        self.field = field
        self.policy = policy or ExtensionPolicy.zero()

    def nearest(self, x):
        """Integer coordinates of the nearest lattice points, shape x.shape."""
        t = np.asarray(x, dtype=float) / self.field.epsilon
        return np.ceil(t - 0.5).astype(int)

    def __call__(self, x):
        """Evaluates at points x of shape (..., N); returns shape (..., n)."""
        x = np.asarray(x, dtype=float)
        domain = self.field.domain
        if x.shape[-1] != domain.N:
            raise ValueError("points must have trailing dimension %d." % domain.N)
        out = self.site_values(self.nearest(x).reshape(-1, domain.N))
        return out.reshape(x.shape[:-1] + (domain.n,))

    def site_values(self, sites):
        """Field values at integer sites, extended by the policy outside the domain."""
        domain = self.field.domain
        out = self.policy.values_at(sites, domain.epsilon, domain.n)
        inside = np.all((sites >= domain.lower) & (sites <= domain.upper), axis=1)
        if inside.any():
            pos = tuple((sites[inside] - domain.lower).T)
            out[inside] = self.field.values[pos]
        return out

    def cell_weights(self):
        """Sites whose cells meet the region, with the measure of cell and region.

        The cell of site i is the set of points whose nearest lattice point
        is i, so the weights sum to the volume of the region.
        """
        eps = self.field.epsilon
        sites, weights = [], []
        for a, b in zip(*self.field.domain.region):
            first, last = self.nearest([a, b])
            i = np.arange(first, last + 1)
            w = np.minimum(b, eps * (i + 0.5)) - np.maximum(a, eps * (i - 0.5))
            sites.append(i)
            weights.append(np.clip(w, 0.0, None))
        sites = np.stack(np.meshgrid(*sites, indexing='ij'), axis=-1).reshape(-1, len(sites))
        weights = np.prod(np.stack(np.meshgrid(*weights, indexing='ij'), axis=-1),
                          axis=-1).ravel()
        keep = weights > 0
        return sites[keep], weights[keep]

    def norm(self, p=2):
        """L^p norm over the region of the domain."""
        if p < 1:
            raise ValueError("p must be at least 1.")
        sites, weights = self.cell_weights()
        magnitudes = np.linalg.norm(self.site_values(sites), axis=1)
        if np.isinf(p):
            return float(magnitudes.max(initial=0.0))
        return float(np.sum(weights * magnitudes ** p) ** (1.0 / p))

def piecewise_constant_embedding(u, policy=None):
    """Returns the evaluator of the piecewise constant function of u."""
    return PiecewiseConstantEmbedding(u, policy)
