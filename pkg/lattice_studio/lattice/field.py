# =========================================================================== #
#                               LATTICE FIELDS                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \field.py                                                             #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday July 29th 2026, 5:10:21 am                           #
# Last Modified: Monday August 17th 2026, 12:16:01 pm                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Discrete deformations u : Z_eps(A) -> R^n and difference quotients."""
import numpy as np

from lattice_studio.lattice.domain import ExtensionPolicy, as_offset
from lattice_studio.lattice.stencil import Stencil
from lattice_studio.utils.exceptions import ConfigurationError, WindowError

# --------------------------------------------------------------------------- #
#                              LATTICE FIELD                                  #
# --------------------------------------------------------------------------- #
class LatticeField:
    """Immutable map from the sites of a domain to vectors in R^n.

    Parameters
    ----------
    domain : LatticeDomain
        The sites of the field.

    values : array-like
        Values of shape domain.shape + (n,); for n = 1 the trailing axis
        may be omitted.
    """

    def __init__(self, domain, values):
        self.domain = domain
        values = np.array(values, dtype=float)
        target = domain.shape + (domain.n,)
        if values.shape == domain.shape and domain.n == 1:
            values = values[..., np.newaxis]
        elif values.shape != target:
            if values.size != int(np.prod(target)):
                raise ConfigurationError("field values have shape %s, expected %s"
                                         % (values.shape, target))
            values = values.reshape(target)
        values.setflags(write=False)
        self.values = values

    # ---------------------------------------------------------------------- #
    @classmethod
    def affine(cls, domain, M, b=None):
        """The field u(i) = M i (+ b) at the points i of the domain."""
        M = np.array(M, dtype=float, ndmin=2)
        if M.shape != (domain.n, domain.N):
            raise ConfigurationError("M has shape %s, expected (%d, %d)"
                                     % (M.shape, domain.n, domain.N))
        values = (domain.epsilon * domain.coords()) @ M.T
        if b is not None:
            values = values + np.asarray(b, dtype=float).ravel()
        return cls(domain, values)

    @classmethod
    def constant(cls, domain, c):
        c = np.broadcast_to(np.asarray(c, dtype=float).ravel(), (domain.n,))
        return cls(domain, np.broadcast_to(c, domain.shape + (domain.n,)))

    @classmethod
    def zeros(cls, domain):
        return cls(domain, np.zeros(domain.shape + (domain.n,)))

    @classmethod
    def from_function(cls, domain, func):
        """Field from a function mapping points (size, N) to values (size, n)."""
        values = np.asarray(func(domain.points()), dtype=float)
        return cls(domain, values.reshape(domain.shape + (domain.n,)))

    # ---------------------------------------------------------------------- #
    @property
    def n(self):
        return self.domain.n

    @property
    def N(self):
        return self.domain.N

    @property
    def epsilon(self):
        return self.domain.epsilon

    def flat(self):
        """Values in enumeration order, shape (size, n)."""
        return self.values.reshape(-1, self.n)

    def with_values(self, values):
        return LatticeField(self.domain, values)

    def value(self, site, policy=None):
        """u at integer coordinates ``site``, resolved by ``policy`` outside."""
        site = np.asarray(site, dtype=int)
        if self.domain.contains(site):
            return self.values[self.domain.position(site)].copy()
        policy = policy or ExtensionPolicy.error()
        value = policy.values_at(site.reshape(1, -1), self.epsilon, self.n)[0]
        if np.isnan(value).any():
            raise WindowError(site, np.zeros_like(site))
        return value

    def stencil(self, reach, policy=None, sites=None):
        return Stencil.from_field(self, reach, policy=policy, sites=sites)

    def _check(self, other):
        if not isinstance(other, LatticeField) or other.domain != self.domain:
            raise ConfigurationError("fields must share a domain.")

    def __add__(self, other):
        self._check(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, a):
        return self.with_values(float(a) * self.values)

    __rmul__ = __mul__

    def __repr__(self):
        return "LatticeField(%r)" % self.domain

# --------------------------------------------------------------------------- #
#                          DIFFERENCE QUOTIENT                                #
# --------------------------------------------------------------------------- #
def difference_quotient(u, x, xi, policy=None):
    """D^xi_eps u(x) = (u(x + eps xi) - u(x)) / (eps |xi|).

    Parameters
    ----------
    u : LatticeField
        The field.

    x : sequence of int
        Integer coordinates of the site (the point is eps * x).

    xi : DirectionOffset or sequence of int
        The direction.

    policy : ExtensionPolicy, optional
        Resolves endpoints outside the domain; default raises WindowError.
    """
    xi = as_offset(xi)
    x = np.asarray(x, dtype=int)
    if x.shape != (u.N,) or xi.dim != u.N:
        raise ValueError("x and xi must have dimension %d." % u.N)
    try:
        a = u.value(x, policy)
        b = u.value(x + xi.as_array(), policy)
    except WindowError:
        raise WindowError(x, xi.xi)
    return (b - a) / (u.epsilon * xi.euclidean)
