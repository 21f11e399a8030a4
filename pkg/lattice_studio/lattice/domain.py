# =========================================================================== #
#                               LATTICE DOMAINS                               #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \domain.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday July 27th 2026, 1:33:19 am                              #
# Last Modified: Friday August 14th 2026, 3:08:25 am                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Lattice index sets, extension policies and direction offsets.

A LatticeDomain is the set of points of eps * Z^N inside an axis-aligned
box. It is stored by the integer coordinates of its first site and its
shape, so sites enumerate lexicographically by integer coordinates.
"""
from dataclasses import dataclass
import math

import numpy as np

from lattice_studio.utils.exceptions import ConfigurationError

_SNAP = 1e-9

def _ceil(x):
    r = round(x)
    return int(r) if abs(x - r) < _SNAP else int(math.ceil(x))

def _floor(x):
    r = round(x)
    return int(r) if abs(x - r) < _SNAP else int(math.floor(x))

# --------------------------------------------------------------------------- #
#                            DIRECTION OFFSET                                 #
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class DirectionOffset:
    """A nonzero integer direction xi."""
    xi: tuple

    def __post_init__(self):
        xi = tuple(int(v) for v in np.atleast_1d(self.xi))
        if not any(xi):
            raise ValueError("xi must be a nonzero integer vector.")
        object.__setattr__(self, 'xi', xi)

    @property
    def dim(self):
        return len(self.xi)

    @property
    def euclidean(self):
        return math.sqrt(sum(v * v for v in self.xi))

    @property
    def l1(self):
        return sum(abs(v) for v in self.xi)

    @property
    def linf(self):
        return max(abs(v) for v in self.xi)

    @property
    def is_unit(self):
        return self.l1 == 1

    def as_array(self):
        return np.array(self.xi, dtype=int)

    def __neg__(self):
        return DirectionOffset(tuple(-v for v in self.xi))

    @classmethod
    def unit(cls, k, N, sign=1):
        xi = [0] * N
        xi[k] = sign
        return cls(tuple(xi))

def as_offset(xi):
    return xi if isinstance(xi, DirectionOffset) else DirectionOffset(xi)

# --------------------------------------------------------------------------- #
#                            EXTENSION POLICY                                 #
# --------------------------------------------------------------------------- #
class ExtensionPolicy:
    """How field values are resolved outside a domain.

    Use the factories ``affine``, ``zero`` and ``error``.
    """
    KINDS = ('affine', 'zero', 'error')

    def __init__(self, kind, M=None, b=None):
        if kind not in self.KINDS:
            raise ValueError("kind must be one of %s." % str(self.KINDS))
        self.kind = kind
        self.M = None if M is None else np.array(M, dtype=float, ndmin=2)
        self.b = None if b is None else np.asarray(b, dtype=float).ravel()
        if kind == 'affine' and self.M is None:
            raise ValueError("an affine extension requires a slope matrix M.")

    @classmethod
    def affine(cls, M, b=None):
        return cls('affine', M=M, b=b)

    @classmethod
    def zero(cls):
        return cls('zero')

    @classmethod
    def error(cls):
        return cls('error')

    def values_at(self, coords, epsilon, n):
        """Exterior values at integer coordinates, shape coords.shape[:-1] + (n,).

        The error policy returns NaN markers; readers raise WindowError when
        they touch one.
        """
        shape = coords.shape[:-1] + (n,)
        if self.kind == 'zero':
            return np.zeros(shape)
        if self.kind == 'error':
            return np.full(shape, np.nan)
        if self.M.shape[0] != n or self.M.shape[1] != coords.shape[-1]:
            raise ConfigurationError("extension slope has shape %s, expected (%d, %d)"
                                     % (self.M.shape, n, coords.shape[-1]))
        values = (epsilon * coords) @ self.M.T
        if self.b is not None:
            values = values + self.b
        return values

    def __repr__(self):
        if self.kind == 'affine':
            return "ExtensionPolicy.affine(M=%s)" % self.M.tolist()
        return "ExtensionPolicy.%s()" % self.kind

# --------------------------------------------------------------------------- #
#                             LATTICE DOMAIN                                  #
# --------------------------------------------------------------------------- #
class LatticeDomain:
    """The index set Z_eps(A) = eps Z^N intersected with a box A.

    Parameters
    ----------
    lower : sequence of int
        Integer coordinates of the first site.

    shape : sequence of int
        Number of sites per axis.

    epsilon : float, optional (default=1.0)
        Lattice spacing.

    n : int, optional (default=1)
        Codomain dimension of fields on this domain.

    region : tuple of arrays, optional
        Real lower and upper bounds of the box A. Defaults to the union of
        the lattice cells of the sites.

    closure : str, optional (default='half-open')
        'half-open' for [a, b) boxes, 'open' for (a, b) boxes.
    """

    def __init__(self, lower, shape, epsilon=1.0, n=1, region=None,
                 closure='half-open'):
        self.lower = np.array(lower, dtype=int).ravel()
        self.shape = tuple(int(s) for s in np.atleast_1d(shape))
        self.epsilon = float(epsilon)
        self.n = int(n)
        self.closure = closure
        self._validate()
        if region is None:
            lo = self.epsilon * (self.lower - 0.5)
            hi = self.epsilon * (self.lower + np.array(self.shape) - 0.5)
            region = (lo, hi)
        self.region = (np.asarray(region[0], dtype=float).ravel(),
                       np.asarray(region[1], dtype=float).ravel())

    def _validate(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive.")
        if self.n < 1:
            raise ValueError("n must be a positive integer.")
        if len(self.shape) != self.lower.shape[0] or len(self.shape) == 0:
            raise ValueError("lower and shape must have the same positive length.")
        if any(s < 0 for s in self.shape):
            raise ValueError("shape entries must be nonnegative.")
        if self.closure not in ('half-open', 'open'):
            raise ValueError("closure must be 'half-open' or 'open'.")

    # ---------------------------------------------------------------------- #
    @classmethod
    def box(cls, lower, upper, epsilon=1.0, n=1, closure='half-open'):
        """Lattice points of eps Z^N inside the real box [lower, upper)."""
        lower = np.asarray(lower, dtype=float).ravel()
        upper = np.asarray(upper, dtype=float).ravel()
        if lower.shape != upper.shape:
            raise ValueError("lower and upper must have the same length.")
        if np.any(upper <= lower):
            raise ValueError("the box must have positive side lengths.")
        lo, hi = [], []
        for a, b in zip(lower / epsilon, upper / epsilon):
            first = _ceil(a)
            last = _ceil(b) - 1
            if closure == 'open':
                if abs(a - round(a)) < _SNAP:
                    first += 1
            lo.append(first)
            hi.append(max(last, first - 1))
        shape = [h - l + 1 for l, h in zip(lo, hi)]
        return cls(lo, shape, epsilon=epsilon, n=n, region=(lower, upper),
                   closure=closure)

    @classmethod
    def cube(cls, L, center=0.0, epsilon=1.0, N=1, n=1, closure='half-open'):
        """Lattice points inside the cube Q_L(center) of side L."""
        if not L > 0:
            raise ValueError("L must be positive.")
        center = np.broadcast_to(np.asarray(center, dtype=float), (N,))
        return cls.box(center - L / 2, center + L / 2, epsilon=epsilon, n=n,
                       closure=closure)

    @classmethod
    def cell(cls, L, N=1, n=1):
        """The cell [0, L)^N at spacing 1, sites 0..L-1 on every axis."""
        if not isinstance(L, (int, np.integer)) or L < 1:
            raise ValueError("L must be a positive integer.")
        return cls([0] * N, [int(L)] * N, epsilon=1.0, n=n,
                   region=(np.zeros(N), np.full(N, float(L))))

    # ---------------------------------------------------------------------- #
    @property
    def N(self):
        return self.lower.shape[0]

    @property
    def upper(self):
        """Integer coordinates of the last site."""
        return self.lower + np.array(self.shape) - 1

    @property
    def size(self):
        return int(np.prod(self.shape))

    def __len__(self):
        return self.size

    def indices(self):
        """Integer coordinates of all sites, lexicographic, shape (size, N)."""
        grids = np.indices(self.shape).reshape(self.N, -1).T
        return grids + self.lower

    def coords(self):
        """Integer coordinates laid out on the grid, shape shape + (N,)."""
        return np.moveaxis(np.indices(self.shape), 0, -1) + self.lower

    def points(self):
        return self.epsilon * self.indices()

    def contains(self, site):
        site = np.asarray(site, dtype=int)
        return bool(np.all(site >= self.lower) and np.all(site <= self.upper))

    def position(self, site):
        """Array index of a site given by its integer coordinates."""
        site = np.asarray(site, dtype=int)
        if not self.contains(site):
            raise KeyError("site %s is not in the domain." % (tuple(site),))
        return tuple(site - self.lower)

    def depth(self):
        """floor(dist_inf(i, A^c) / eps) for every site, shape ``shape``."""
        x = self.epsilon * self.coords()
        lo, hi = self.region
        dist = np.minimum(x - lo, hi - x).min(axis=-1)
        dist = np.maximum(dist, 0.0)
        return np.floor(dist / self.epsilon + _SNAP).astype(int)

    def subdomain(self, lower, shape):
        """Sub-box of sites sharing eps and n."""
        sub = LatticeDomain(lower, shape, epsilon=self.epsilon, n=self.n,
                            region=self.region, closure=self.closure)
        if sub.size and not (self.contains(sub.lower) and self.contains(sub.upper)):
            raise ValueError("the subdomain must lie inside the domain.")
        return sub

    def with_codomain(self, n):
        return LatticeDomain(self.lower, self.shape, self.epsilon, n,
                             region=self.region, closure=self.closure)

    def same_sites(self, other):
        return (np.array_equal(self.lower, other.lower)
                and self.shape == other.shape
                and self.epsilon == other.epsilon)

    def __eq__(self, other):
        if not isinstance(other, LatticeDomain):
            return NotImplemented
        return self.same_sites(other) and self.n == other.n

    def __hash__(self):
        return hash((tuple(self.lower), self.shape, self.epsilon, self.n))

    def __repr__(self):
        return ("LatticeDomain(lower=%s, shape=%s, epsilon=%g, n=%d)"
                % (self.lower.tolist(), list(self.shape), self.epsilon, self.n))
