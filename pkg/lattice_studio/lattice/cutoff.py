# =========================================================================== #
#                              CUT-OFF FUNCTIONS                              #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \cutoff.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Saturday July 25th 2026, 9:10:01 pm                            #
# Last Modified: Wednesday August 12th 2026, 7:59:50 am                       #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Cut-off functions and the blend of two fields."""
import numpy as np

from lattice_studio.lattice.domain import as_offset
from lattice_studio.lattice.field import LatticeField, difference_quotient
from lattice_studio.utils.exceptions import ConfigurationError, WindowError

_TOL = 1e-12

def gradient_sup(values, epsilon):
    """max over sites and axes of |D^{e_n}_eps psi| using in-domain neighbours."""
    values = np.asarray(values, dtype=float)
    best = 0.0
    for k in range(values.ndim):
        if values.shape[k] > 1:
            best = max(best, float(np.abs(np.diff(values, axis=k)).max()) / epsilon)
    return best

class CutoffFunction:
    """A lattice function with values in [0, 1] and a declared gradient bound.

    Parameters
    ----------
    domain : LatticeDomain
        Sites of the cut-off.

    values : array-like, shape domain.shape
        Values in [0, 1].

    gradient_bound : float, optional
        Declared bound on |D^{e_n}_eps psi|. Verified against the measured
        maximum; None uses the measured maximum.
    """

    def __init__(self, domain, values, gradient_bound=None):
        self.domain = domain
        values = np.array(values, dtype=float).reshape(domain.shape)
        if values.size and (values.min() < -_TOL or values.max() > 1 + _TOL):
            raise ValueError("cut-off values must lie in [0, 1].")
        values = np.clip(values, 0.0, 1.0)
        values.setflags(write=False)
        self.values = values
        self.measured_bound = gradient_sup(values, domain.epsilon)
        if gradient_bound is None:
            gradient_bound = self.measured_bound
        elif gradient_bound < self.measured_bound * (1 - _TOL) - _TOL:
            raise ValueError("declared gradient bound %g is below the measured "
                             "maximum %g." % (gradient_bound, self.measured_bound))
        self.gradient_bound = float(gradient_bound)

    @classmethod
    def constant(cls, domain, c):
        return cls(domain, np.full(domain.shape, float(c)), gradient_bound=0.0)

    @classmethod
    def plateau(cls, domain, center, inner, outer):
        """1 within sup-distance ``inner`` of ``center``, 0 beyond ``outer``."""
        if not outer > inner >= 0:
            raise ValueError("plateau radii must satisfy outer > inner >= 0.")
        center = np.asarray(center, dtype=int)
        r = domain.epsilon * np.abs(domain.coords() - center).max(axis=-1)
        values = np.clip((outer - r) / (outer - inner), 0.0, 1.0)
        return cls(domain, values, gradient_bound=1.0 / (outer - inner))

    @classmethod
    def spike(cls, domain, site):
        values = np.zeros(domain.shape)
        values[domain.position(site)] = 1.0
        return cls(domain, values, gradient_bound=1.0 / domain.epsilon)

    def as_field(self):
        return LatticeField(self.domain.with_codomain(1), self.values)

def _share_domain(z, w, psi):
    if z.domain != w.domain or not z.domain.same_sites(psi.domain):
        raise ConfigurationError("z, w and psi must share a domain.")

def blend(z, w, psi):
    """v = psi z + (1 - psi) w."""
    _share_domain(z, w, psi)
    weight = psi.values[..., np.newaxis]
    return z.with_values(weight * z.values + (1.0 - weight) * w.values)

def blend_expansion(z, w, psi, x, xi):
    """Right-hand side of the blend identity for D^xi v(x).

    psi(x) D z(x) + (1 - psi(x)) D w(x) + D psi(x) (z(x + eps xi) - w(x + eps xi)).
    Both x and x + eps xi must be sites of the domain.
    """
    _share_domain(z, w, psi)
    xi = as_offset(xi)
    x = np.asarray(x, dtype=int)
    end = x + xi.as_array()
    if not (z.domain.contains(x) and z.domain.contains(end)):
        raise WindowError(x, xi.xi)
    p = psi.as_field()
    weight = float(p.value(x)[0])
    dpsi = float(difference_quotient(p, x, xi)[0])
    return (weight * difference_quotient(z, x, xi)
            + (1.0 - weight) * difference_quotient(w, x, xi)
            + dpsi * (z.value(end) - w.value(end)))
