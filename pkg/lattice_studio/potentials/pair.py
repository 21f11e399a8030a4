# =========================================================================== #
#                               PAIR POTENTIALS                               #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \pair.py                                                              #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Saturday August 8th 2026, 1:12:29 am                           #
# Last Modified: Tuesday September 1st 2026, 9:05:42 pm                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Pair potentials sum_xi f^xi(i, D^xi z(i + a)) with power-law f^xi."""
import math

import numpy as np

from lattice_studio.lattice.domain import as_offset
from lattice_studio.potentials.base import InteractionTerm, MultibodyPotential
from lattice_studio.potentials.profiles import DecayProfile
from lattice_studio.utils.exceptions import ConfigurationError

# --------------------------------------------------------------------------- #
#                            POWER PAIR TERM                                  #
# --------------------------------------------------------------------------- #
class PowerPairTerm(InteractionTerm):
    """k(i) |D^xi z(i + anchor)|^p.

    Parameters
    ----------
    xi : DirectionOffset or sequence of int
    anchor : sequence of int, optional
        Offset of the bond start relative to the site.
    stiffness : float or ndarray
        A number, or a table of shape (T,)*N indexed by i mod T.
    p : float, optional (default=2.0)
    signed : bool, optional (default=False)
        Allows negative stiffness.
    """

    def __init__(self, xi, anchor=None, stiffness=1.0, p=2.0, signed=False):
        self.xi = as_offset(xi)
        N = self.xi.dim
        self.anchor = (0,) * N if anchor is None else tuple(int(a) for a in anchor)
        if len(self.anchor) != N:
            raise ConfigurationError("anchor %s and xi %s have different dimensions"
                                     % (self.anchor, self.xi.xi))
        self.stiffness = np.asarray(stiffness, dtype=float)
        if self.stiffness.ndim not in (0, N):
            raise ConfigurationError("a stiffness table must have %d axes" % N)
        if self.stiffness.ndim == N and len(set(self.stiffness.shape)) != 1:
            raise ConfigurationError("a stiffness table must have the same period on every axis")
        if not signed and np.any(self.stiffness < 0):
            raise ConfigurationError("pair stiffness must be nonnegative")
        if not np.all(np.isfinite(self.stiffness)):
            raise ConfigurationError("pair stiffness must be finite")
        self.p = float(p)
        end = [a + x for a, x in zip(self.anchor, self.xi.xi)]
        self.radius = max(max(abs(a) for a in self.anchor), max(abs(a) for a in end))
        self.nearest = self.xi.is_unit and not any(self.anchor)
        self.quadratic = self.p == 2.0

    @property
    def period(self):
        return 1 if self.stiffness.ndim == 0 else self.stiffness.shape[0]

    def _k(self, stencil):
        if self.stiffness.ndim == 0:
            return float(self.stiffness)
        T = self.period
        index = tuple(np.mod(stencil.coords[..., d], T) for d in range(stencil.N))
        return self.stiffness[index]

    def _difference(self, stencil):
        return stencil.difference(self.xi.xi, self.anchor)

    def density(self, stencil):
        d = np.linalg.norm(self._difference(stencil), axis=-1)
        return self._k(stencil) * d ** self.p

    def partials(self, stencil):
        D = self._difference(stencil)
        d = np.linalg.norm(D, axis=-1)
        k = self._k(stencil)
        value = k * d ** self.p
        if self.p == 2.0:
            g = 2.0 * np.asarray(k)[..., np.newaxis] * D
        else:
            with np.errstate(divide='ignore', invalid='ignore'):
                scale = np.where(d > 0, self.p * d ** (self.p - 2), 0.0)
            g = (np.asarray(k) * scale)[..., np.newaxis] * D
        g = g / (stencil.epsilon * self.xi.euclidean)
        end = tuple(a + x for a, x in zip(self.anchor, self.xi.xi))
        return value, [(end, g), (self.anchor, -g)]

    def majorant(self):
        return {(self.anchor, self.xi.xi): float(np.abs(self.stiffness).max())}

# --------------------------------------------------------------------------- #
#                             PAIR POTENTIAL                                  #
# --------------------------------------------------------------------------- #
class PairPotential(MultibodyPotential):
    """Sum of power pair terms.

    Parameters
    ----------
    terms : list of PowerPairTerm
    N, n : int
    p : float, optional (default=2.0)
    coercivity : float, optional
        Declared H3 constant. When omitted and every coordinate direction
        e_n has an anchored nearest-neighbour term, the smallest of their
        stiffnesses is used.
    """

    def __init__(self, terms, N, n=1, p=2.0, coercivity=None, name=None):
        self._pair_terms = list(terms)
        if not self._pair_terms:
            raise ConfigurationError("a pair potential needs at least one term")
        for t in self._pair_terms:
            if t.xi.dim != N:
                raise ConfigurationError("term direction %s does not have dimension %d"
                                         % (t.xi.xi, N))
            if t.p != float(p):
                raise ConfigurationError("term exponent %g differs from p=%g" % (t.p, p))
        period = 1
        for t in self._pair_terms:
            period = period * t.period // math.gcd(period, t.period)
        if coercivity is None:
            coercivity = self._nearest_coercivity(N)
        super(PairPotential, self).__init__(N, n, p, period, coercivity, name)

    def _nearest_coercivity(self, N):
        bounds = []
        for k in range(N):
            e = tuple(1 if d == k else 0 for d in range(N))
            ks = [float(t.stiffness.min()) for t in self._pair_terms
                  if t.nearest and t.xi.xi == e]
            if not ks or max(ks) <= 0:
                return None
            bounds.append(sum(ks))
        return min(bounds)

    def _build_terms(self):
        return self._pair_terms

    # ---------------------------------------------------------------------- #
    @classmethod
    def nearest_neighbour(cls, N=1, n=1, p=2.0, stiffness=1.0):
        """sum_n k |D^{e_n} z(i)|^p."""
        terms = [PowerPairTerm(tuple(1 if d == k else 0 for d in range(N)),
                               stiffness=stiffness, p=p) for k in range(N)]
        return cls(terms, N, n, p, name='nearest-neighbour')

    @classmethod
    def two_spring_chain(cls, a=1.0, b=3.0, n=1):
        """1D chain whose bonds alternate between stiffness a and b (T = 2)."""
        return cls([PowerPairTerm((1,), stiffness=[a, b], p=2.0)], 1, n, 2.0,
                   name='two-spring-chain')

    @classmethod
    def next_nearest_window(cls, c2=1.0, c3=1.0, n=1):
        """c2 |D^2 z(i + 1)|^2 + c3 |D^3 z(i)|^2, without a direct bond term."""
        terms = [PowerPairTerm((2,), anchor=(1,), stiffness=c2, p=2.0),
                 PowerPairTerm((3,), stiffness=c3, p=2.0)]
        return cls(terms, 1, n, 2.0, name='next-nearest-window')

    @classmethod
    def from_profile(cls, profile, N, n=1, p=2.0, coercivity=None, name=None):
        """Pair potential with one term per (anchor j, xi, stiffness) table row."""
        terms = [PowerPairTerm(xi, anchor=j, stiffness=value, p=p)
                 for (j, xi), value in profile.items()]
        return cls(terms, N, n, p, coercivity, name)

    def coefficient_table(self):
        """The c^xi table as a DecayProfile keyed by (anchor, xi)."""
        return self.majorant()
