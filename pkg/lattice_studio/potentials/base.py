# =========================================================================== #
#                            MULTIBODY POTENTIALS                             #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \base.py                                                              #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Sunday August 2nd 2026, 1:59:29 pm                             #
# Last Modified: Monday August 24th 2026, 8:06:17 am                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Base classes for multibody site energy densities.

A potential is an ordered list of interaction terms. Every term evaluates
its density for all sites of a Stencil at once, optionally its partial
derivatives with respect to the window values, and declares a majorant

    term_i(z) <= sum_{(j, xi)} a_{j,xi} (|D^xi z(i + j)|^p + 1)

from which the constants and decay profiles of the potential follow.
"""
from abc import ABC, abstractmethod
import logging
import math

import numpy as np

from lattice_studio.potentials.profiles import DecayProfile

logger = logging.getLogger(__name__)

# --------------------------------------------------------------------------- #
#                           INTERACTION TERMS                                 #
# --------------------------------------------------------------------------- #
class InteractionTerm(ABC):
    """One summand of a site density."""

    radius = 1
    nearest = False
    quadratic = False
    differentiable = True

    @abstractmethod
    def density(self, stencil):
        """Term value for every site, shape stencil.density_shape."""
        raise NotImplementedError("This method is not implemented for "
                                  "this Abstract Base Class.")

    def partials(self, stencil):
        """Density and a list of (offset, d density / d z(i + offset))."""
        raise NotImplementedError("This method is not implemented for "
                                  "this Abstract Base Class.")

    @abstractmethod
    def majorant(self):
        """Dict (j, xi) -> a with term <= sum a (|D^xi z(i+j)|^p + 1)."""
        raise NotImplementedError("This method is not implemented for "
                                  "this Abstract Base Class.")

    def singular(self, stencil):
        """Mask of sites where the term is not differentiable."""
        return np.zeros(stencil.density_shape, dtype=bool)

    def active(self, level):
        """Mask (or bool) telling whether the term belongs to truncation ``level``."""
        if level is None or self.nearest:
            return True
        return self.radius <= level

# --------------------------------------------------------------------------- #
#                          MULTIBODY POTENTIAL                                #
# --------------------------------------------------------------------------- #
class MultibodyPotential(ABC):
    """Per-site energy density phi_i acting on a window of field values.

    Parameters
    ----------
    N : int
        Spatial dimension.

    n : int
        Codomain dimension.

    p : float, optional (default=2.0)
        Growth exponent, p > 1.

    period : int or None, optional (default=1)
        Period T of the site dependence; None marks a non-periodic potential.

    coercivity : float, optional
        Declared constant c of phi >= c (sum_n |D^{e_n} z|^p - 1).

    name : str, optional
    """

    def __init__(self, N, n, p=2.0, period=1, coercivity=None, name=None):
        self.N = int(N)
        self.n = int(n)
        self.p = float(p)
        self.period = None if period is None else int(period)
        self.coercivity = coercivity
        self.name = name or self.__class__.__name__
        self._validate()
        self._terms = None

    def _validate(self):
        if self.N < 1:
            raise ValueError("N must be a positive integer.")
        if self.n < 1:
            raise ValueError("n must be a positive integer.")
        if not self.p > 1:
            raise ValueError("p must be greater than 1.")
        if self.period is not None and self.period < 1:
            raise ValueError("period must be a positive integer or None.")
        if self.coercivity is not None and not self.coercivity > 0:
            raise ValueError("a declared coercivity constant must be positive.")

    @abstractmethod
    def _build_terms(self):
        raise NotImplementedError("This method is not implemented for "
                                  "this Abstract Base Class.")

    # ---------------------------------------------------------------------- #
    @property
    def terms(self):
        if self._terms is None:
            self._terms = list(self._build_terms())
            logger.debug("%s built %d interaction terms", self.name, len(self._terms))
        return self._terms

    @property
    def reach(self):
        return max((t.radius for t in self.terms), default=1)

    @property
    def k_max(self):
        return self.reach

    @property
    def is_quadratic(self):
        return all(t.quadratic for t in self.terms)

    @property
    def has_gradient(self):
        return all(t.differentiable for t in self.terms)

    def bulk(self):
        """The potential evaluated away from any boundary."""
        return self

    # ---------------------------------------------------------------------- #
    def _mask(self, term, level, stencil):
        active = term.active(level)
        if isinstance(active, np.ndarray):
            return active.astype(float)
        return None if active else False

    def density(self, stencil, level=None):
        """Site densities for every site of the stencil.

        Parameters
        ----------
        stencil : Stencil
        level : int or ndarray, optional
            Truncation level, per site when an array; None is full range.
        """
        if level is not None and not isinstance(level, np.ndarray):
            level = int(level)
        out = np.zeros(stencil.density_shape)
        for term in self.terms:
            mask = self._mask(term, level, stencil)
            if mask is False:
                continue
            value = term.density(stencil)
            out += value if mask is None else mask * value
        return out

    def density_and_partials(self, stencil, level=None):
        out = np.zeros(stencil.density_shape)
        partials = []
        for term in self.terms:
            mask = self._mask(term, level, stencil)
            if mask is False:
                continue
            value, parts = term.partials(stencil)
            if mask is None:
                out += value
                partials.extend(parts)
            else:
                out += mask * value
                partials.extend((o, mask[..., np.newaxis] * g) for o, g in parts)
        return out, partials

    def singular(self, stencil):
        mask = np.zeros(stencil.density_shape, dtype=bool)
        for term in self.terms:
            mask |= term.singular(stencil)
        return mask

    # ---------------------------------------------------------------------- #
    def truncate(self, level):
        """The member phi^level of the truncation family."""
        if not isinstance(level, (int, np.integer)) or level < 0:
            raise ValueError("level must be a nonnegative integer.")
        return TruncatedPotential(self, int(level))

    def majorant(self, predicate=None, variant='plain', **kwargs):
        table = {}
        for term in self.terms:
            if predicate is not None and not predicate(term):
                continue
            for key, value in term.majorant().items():
                table[key] = table.get(key, 0.0) + abs(value)
        return DecayProfile(table, variant=variant, **kwargs)

    def cauchy_born_constant(self):
        """C with phi(affine M) <= C (|M|^p + 1), the majorant total."""
        return self.majorant().total_sum()

    def coercivity_constant(self):
        return self.coercivity

    def locality_profile(self, epsilon, delta):
        """Profile of the terms whose window reaches sup-distance delta."""
        return self.majorant(lambda t: epsilon * t.radius >= delta,
                             variant='locality', epsilon=epsilon, delta=delta)

    def nonconvexity_profile(self):
        """Constant C and profile C^{j,xi} of the controlled non-convexity bound.

        Every term is bounded by its majorant; the blend identity and
        |a + b|^p <= 2^(p-1)(|a|^p + |b|^p) move everything into the
        remainder with C^{j,xi} = 2^(p-1) kappa_xi a_{j,xi}, where
        kappa_xi = (||xi||_1 / |xi|)^p bounds |D^xi psi|^p / sup |D^{e_n} psi|^p.
        """
        p = self.p

        def factor(j, xi):
            l1 = sum(abs(v) for v in xi)
            l2 = math.sqrt(sum(v * v for v in xi))
            return 2.0 ** (p - 1) * (l1 / l2) ** p

        return 1.0, self.majorant().scaled(factor)

    def closeness_profile(self, level):
        """Profile bounding |phi^level - phi^k| for every k > level."""
        return self.majorant(lambda t: not t.nearest and t.radius > level,
                             variant='truncation', level=level)

    def describe(self):
        return {'name': self.name, 'family': self.__class__.__name__,
                'N': self.N, 'n': self.n, 'p': self.p, 'period': self.period,
                'reach': self.reach, 'terms': len(self.terms),
                'quadratic': self.is_quadratic}

    def __repr__(self):
        return "%s(N=%d, n=%d, p=%g)" % (self.__class__.__name__, self.N, self.n, self.p)

# --------------------------------------------------------------------------- #
#                         TRUNCATED POTENTIAL                                 #
# --------------------------------------------------------------------------- #
class TruncatedPotential(MultibodyPotential):
    """phi^level: nearest-neighbour terms plus terms of radius <= level."""

    def __init__(self, base, level):
        super(TruncatedPotential, self).__init__(
            base.N, base.n, base.p, base.period, base.coercivity_constant(),
            name="%s[k=%d]" % (base.name, level))
        self.base = base
        self.level = level

    def _build_terms(self):
        return [t for t in self.base.terms if t.active(self.level)]

    @property
    def k_max(self):
        return self.level

    def closeness_profile(self, level):
        return self.base.closeness_profile(level)
