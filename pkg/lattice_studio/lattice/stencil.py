# =========================================================================== #
#                                  STENCILS                                   #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \stencil.py                                                           #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Friday July 31st 2026, 5:36:51 am                              #
# Last Modified: Thursday August 20th 2026, 6:13:05 pm                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Padded views used to evaluate site densities for every site at once.

A Stencil holds an array of shape ``batch + padded + (n,)`` where the
padded box extends the evaluated sites by ``reach`` on every side. Fields
give an empty batch; sampled windows give a batch of independent windows
evaluated at a single site.
"""
import numpy as np

from lattice_studio.lattice.domain import ExtensionPolicy
from lattice_studio.utils.exceptions import WindowError

class Stencil:
    """Padded array with shifted views.

    Parameters
    ----------
    array : ndarray
        Values of shape batch + padded + (n,).

    reach : int
        Padding on every side of the evaluated sites.

    sites_shape : tuple of int
        Shape of the evaluated site box.

    epsilon : float
        Lattice spacing.

    coords : ndarray
        Integer coordinates of the evaluated sites, shape sites_shape + (N,).

    depth : ndarray, optional
        Truncation depth floor(d_i / eps) per site, shape sites_shape.
    """

    def __init__(self, array, reach, sites_shape, epsilon, coords, depth=None):
        self.array = array
        self.reach = int(reach)
        self.sites_shape = tuple(sites_shape)
        self.epsilon = float(epsilon)
        self.coords = coords
        self.depth = depth
        self._guarded = bool(np.isnan(array).any())

    # ---------------------------------------------------------------------- #
    @classmethod
    def from_field(cls, field, reach, policy=None, sites=None):
        """Builds the stencil of a LatticeField over ``sites``.

        Exterior values come from ``policy``; the default is the error
        policy, so touching the exterior raises a WindowError.
        """
        domain = field.domain
        policy = policy or ExtensionPolicy.error()
        sites = domain if sites is None else sites
        if sites.size and not (domain.contains(sites.lower) and domain.contains(sites.upper)):
            raise ValueError("the evaluated sites must lie inside the field's domain.")
        reach = int(reach)
        lower = sites.lower - reach
        shape = tuple(s + 2 * reach for s in sites.shape)
        coords = np.moveaxis(np.indices(shape), 0, -1) + lower
        array = np.array(policy.values_at(coords, domain.epsilon, domain.n), dtype=float)
        # Copy the field into the part of the padded box inside the domain.
        lo = np.maximum(lower, domain.lower)
        hi = np.minimum(lower + np.array(shape) - 1, domain.upper)
        if np.all(hi >= lo):
            dst = tuple(slice(a - l, b - l + 1) for a, b, l in zip(lo, hi, lower))
            src = tuple(slice(a - l, b - l + 1) for a, b, l in zip(lo, hi, domain.lower))
            array[dst] = field.values[src]
        site_coords = coords[tuple(slice(reach, reach + s) for s in sites.shape)]
        depth = domain.depth()[tuple(slice(a - l, a - l + s) for a, l, s
                                     in zip(sites.lower, domain.lower, sites.shape))]
        return cls(array, reach, sites.shape, domain.epsilon, site_coords, depth)

    @classmethod
    def from_windows(cls, windows, epsilon, site=None, depth=None):
        """Builds a stencil from a batch of windows centred on one site.

        Parameters
        ----------
        windows : ndarray, shape (B,) + (2r+1,)*N + (n,)
            Window values; the evaluated site is the centre.

        epsilon : float
            Lattice spacing.

        site : sequence of int, optional
            Integer coordinates of the evaluated site (default the origin).
        """
        windows = np.asarray(windows, dtype=float)
        N = windows.ndim - 2
        side = windows.shape[1]
        if N < 1 or side % 2 != 1 or any(s != side for s in windows.shape[1:-1]):
            raise ValueError("windows must have shape (B,) + (2r+1,)*N + (n,).")
        reach = side // 2
        site = np.zeros(N, dtype=int) if site is None else np.asarray(site, dtype=int)
        # Slices keep the site axes so densities come out as (B, 1, ..., 1).
        array = windows
        coords = site.reshape((1,) * N + (N,))
        if depth is not None:
            depth = np.full((1,) * N, int(depth))
        return cls(array, reach, (1,) * N, epsilon, coords, depth)

    # ---------------------------------------------------------------------- #
    @property
    def N(self):
        return len(self.sites_shape)

    @property
    def n(self):
        return self.array.shape[-1]

    @property
    def batch_shape(self):
        return self.array.shape[:self.array.ndim - self.N - 1]

    @property
    def density_shape(self):
        return self.batch_shape + self.sites_shape

    def _slices(self, offset):
        return tuple(slice(self.reach + o, self.reach + o + s)
                     for o, s in zip(offset, self.sites_shape))

    def _escape(self, offset, block):
        bad = np.argwhere(np.isnan(block).any(axis=-1))[0]
        site = self.coords[tuple(bad[len(self.batch_shape):])]
        raise WindowError(site, offset)

    def shifted(self, offset):
        """Values at site + offset for every evaluated site."""
        offset = tuple(int(o) for o in offset)
        if len(offset) != self.N:
            raise ValueError("offset %s does not have dimension %d." % (offset, self.N))
        if any(abs(o) > self.reach for o in offset):
            site = self.coords.reshape(-1, self.N)[0]
            raise WindowError(site, offset)
        block = self.array[(Ellipsis,) + self._slices(offset) + (slice(None),)]
        if self._guarded and np.isnan(block).any():
            self._escape(offset, block)
        return block

    def difference(self, xi, anchor=None):
        """D^xi_eps z(i + anchor) for every evaluated site."""
        xi = np.asarray(xi, dtype=int)
        anchor = np.zeros_like(xi) if anchor is None else np.asarray(anchor, dtype=int)
        scale = self.epsilon * np.sqrt(float(xi @ xi))
        return (self.shifted(anchor + xi) - self.shifted(anchor)) / scale

    def accumulate(self, partials):
        """Scatter-adds partial derivatives into a padded gradient array.

        Parameters
        ----------
        partials : list of (offset, ndarray)
            Derivative of the site densities with respect to the value at
            site + offset. Contributions are added in list order.
        """
        grad = np.zeros(self.array.shape)
        for offset, value in partials:
            index = (Ellipsis,) + self._slices(tuple(int(o) for o in offset)) + (slice(None),)
            grad[index] += value
        return grad
