# =========================================================================== #
#                          LINEARIZED LENNARD-JONES                           #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \lennard_jones.py                                                     #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Friday August 7th 2026, 8:19:49 am                             #
# Last Modified: Monday August 31st 2026, 1:27:45 pm                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Quadratic linearization of the Lennard-Jones pair energy on Z^N.

The raw linearized energy sum_xi V''(|xi|) |D^xi u(i)|^2 is indefinite
because V'' < 0 beyond the first shell. Each long-range bond is rewritten
along its nearest-neighbour path:

    f^xi_i = |V''(|xi|)| ((N/m) sum_h |D^{s_h} u(i + p_h)|^2 - |D^xi u(i)|^2)

with m = ||xi||_1, which is nonnegative for every field, and the
nearest-neighbour coefficients absorb the added path terms:

    c_v = V''(1) - sum_xi (N/m) |V''(|xi|)| #{h : s_h = v}.

Summed over the whole lattice the regrouped and the raw energies agree.
"""
from dataclasses import dataclass, field
import itertools
import logging
import math

import numpy as np
import pandas as pd

from lattice_studio.lattice.paths import build_path
from lattice_studio.potentials.base import InteractionTerm, MultibodyPotential
from lattice_studio.potentials.pair import PowerPairTerm
from lattice_studio.potentials.profiles import DecayProfile

logger = logging.getLogger(__name__)

SIGN_CHANGE = (13.0 / 7.0) ** (1.0 / 6.0)

def lj_vpp(r):
    """Second derivative of V(r) = r^-12 - 2 r^-6, i.e. 156 r^-14 - 84 r^-8."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive.")
    value = 156.0 * r ** -14 - 84.0 * r ** -8
    return float(value) if value.ndim == 0 else value

def long_range_offsets(N, k):
    """Nonzero xi with |xi|_inf <= k that are not unit vectors, lexicographic."""
    return [xi for xi in itertools.product(range(-k, k + 1), repeat=N)
            if any(xi) and sum(abs(v) for v in xi) > 1]

def unit_directions(N):
    """+e_1, -e_1, +e_2, -e_2, ..."""
    out = []
    for k in range(N):
        for sign in (1, -1):
            out.append(tuple(sign if d == k else 0 for d in range(N)))
    return out

def _fold(j, s):
    """A step -e_n at j is the step +e_n at j - e_n."""
    if sum(s) > 0:
        return tuple(j), tuple(s)
    return tuple(a + b for a, b in zip(j, s)), tuple(-v for v in s)

# --------------------------------------------------------------------------- #
#                              REGROUPED SPEC                                 #
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class ShellTerm:
    """One long-range bond routed along its path."""
    xi: tuple
    vpp: float
    steps: tuple
    origins: tuple

    @property
    def l1(self):
        return len(self.steps)

    @property
    def weight(self):
        """N |V''| / m carried by every step of the path."""
        return len(self.xi) * abs(self.vpp) / self.l1

@dataclass(frozen=True)
class LJLinearizedSpec:
    N: int
    k: int
    shells: tuple
    nn_coefficients: dict = field(default_factory=dict)

    @property
    def margin(self):
        """Smallest nearest-neighbour coefficient."""
        return min(self.nn_coefficients.values())

def lj_regroup(k, N=3):
    """Builds the regrouped linearized Lennard-Jones spec of radius k.

    Parameters
    ----------
    k : int
        Truncation radius in the sup-norm, k >= 1.

    N : int, optional (default=3)
        Dimension.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError("k must be a positive integer.")
    shells = []
    deficit = {v: [] for v in unit_directions(N)}
    for xi in long_range_offsets(N, int(k)):
        vpp = lj_vpp(math.sqrt(sum(v * v for v in xi)))
        path = build_path((0,) * N, xi)
        shell = ShellTerm(xi, vpp, path.steps, path.step_origins())
        shells.append(shell)
        for s in shell.steps:
            deficit[s].append(shell.weight)
    v1 = lj_vpp(1.0)
    coefficients = {v: v1 - math.fsum(d) for v, d in deficit.items()}
    spec = LJLinearizedSpec(N, int(k), tuple(shells), coefficients)
    logger.debug("regrouped %d shells for k=%d, N=%d, smallest coefficient %g",
                 len(shells), k, N, spec.margin)
    return spec

# --------------------------------------------------------------------------- #
#                              PATH SURROGATE                                 #
# --------------------------------------------------------------------------- #
class PathSurrogateTerm(InteractionTerm):
    """|V''| ((N/m) sum_h |D^{s_h} z(i + p_h)|^2 - |D^xi z(i)|^2) >= 0."""

    quadratic = True

    def __init__(self, shell):
        self.shell = shell
        self.radius = max(abs(v) for v in shell.xi)
        self._scale = abs(shell.vpp)
        self._norm = math.sqrt(sum(v * v for v in shell.xi))

    def density(self, stencil):
        total = 0.0
        for p, s in zip(self.shell.origins, self.shell.steps):
            total = total + np.sum(stencil.difference(s, p) ** 2, axis=-1)
        direct = np.sum(stencil.difference(self.shell.xi) ** 2, axis=-1)
        return self._scale * (len(self.shell.xi) / self.shell.l1 * total - direct)

    def partials(self, stencil):
        N = len(self.shell.xi)
        eps = stencil.epsilon
        parts = []
        total = 0.0
        for p, s in zip(self.shell.origins, self.shell.steps):
            d = stencil.difference(s, p)
            total = total + np.sum(d ** 2, axis=-1)
            g = 2.0 * self._scale * N / self.shell.l1 * d / eps
            parts.append((tuple(a + b for a, b in zip(p, s)), g))
            parts.append((p, -g))
        D = stencil.difference(self.shell.xi)
        g = -2.0 * self._scale * D / (eps * self._norm)
        parts.append((self.shell.xi, g))
        parts.append(((0,) * N, -g))
        value = self._scale * (N / self.shell.l1 * total - np.sum(D ** 2, axis=-1))
        return value, parts

    def majorant(self):
        table = {}
        for p, s in zip(self.shell.origins, self.shell.steps):
            table[(p, s)] = table.get((p, s), 0.0) + self.shell.weight
        return table

# --------------------------------------------------------------------------- #
#                               POTENTIALS                                    #
# --------------------------------------------------------------------------- #
class LJLinearizedPotential(MultibodyPotential):
    """Regrouped, nonnegative linearized Lennard-Jones density.

    The truncation family keeps the nearest-neighbour coefficients of the
    full radius and adds the shells of radius <= level, so it is monotone.
    """

    def __init__(self, spec=None, k=2, N=3, n=1, name=None):
        self.spec = spec or lj_regroup(k, N)
        if self.spec.margin <= 0:
            raise ValueError("regrouped nearest-neighbour coefficients must be positive.")
        super(LJLinearizedPotential, self).__init__(self.spec.N, n, 2.0, 1, self.spec.margin,
                                                    name or 'lj-linearized')

    def _build_terms(self):
        terms = [PowerPairTerm(v, stiffness=self.spec.nn_coefficients[v], p=2.0)
                 for v in unit_directions(self.spec.N)]
        terms += [PathSurrogateTerm(shell) for shell in self.spec.shells]
        return terms

    @property
    def k_max(self):
        return self.spec.k

    def closeness_profile(self, level):
        return lj_truncation_coefficients(level, self.spec)

class LJRawPotential(MultibodyPotential):
    """Unregrouped sum_{0 < |xi|_inf <= k} V''(|xi|) |D^xi u(i)|^2 (indefinite)."""

    def __init__(self, k=2, N=3, n=1, name=None):
        if k < 1:
            raise ValueError("k must be a positive integer.")
        self.k = int(k)
        super(LJRawPotential, self).__init__(N, n, 2.0, 1, None, name or 'lj-raw')

    def _build_terms(self):
        offsets = [xi for xi in itertools.product(range(-self.k, self.k + 1), repeat=self.N)
                   if any(xi)]
        return [PowerPairTerm(xi, stiffness=lj_vpp(math.sqrt(sum(v * v for v in xi))),
                              p=2.0, signed=True) for xi in offsets]

# --------------------------------------------------------------------------- #
#                        COERCIVITY AND DECAY TABLES                          #
# --------------------------------------------------------------------------- #
def _margin_terms(K):
    k = np.arange(2, K + 1, dtype=float)
    return 3.0 * lj_vpp(k) * (3 * k ** 2 - 3 * k + 1) if K >= 2 else np.array([])

def lj_coercivity_margin(K):
    """V''(1) + 12 V''(sqrt 2) + 3 sum_{k=2}^K V''(k)(3k^2 - 3k + 1).

    Returns
    -------
    margin : float
    tail_bound : float
        756 / (5 K^5), a bound on the magnitude of the omitted terms k > K.
    """
    if not isinstance(K, (int, np.integer)) or K < 2:
        raise ValueError("K must be an integer >= 2.")
    head = [lj_vpp(1.0), 12.0 * lj_vpp(math.sqrt(2.0))]
    margin = math.fsum(head + list(np.atleast_1d(_margin_terms(int(K)))))
    return margin, 756.0 / (5.0 * K ** 5)

def lj_margin_table(K_max):
    """DataFrame of K, margin and tail bound for K = 2..K_max."""
    if K_max < 2:
        raise ValueError("K_max must be at least 2.")
    terms = list(_margin_terms(int(K_max)))
    head = [lj_vpp(1.0), 12.0 * lj_vpp(math.sqrt(2.0))]
    rows = []
    for K in range(2, int(K_max) + 1):
        rows.append((K, math.fsum(head + terms[:K - 1]), 756.0 / (5.0 * K ** 5)))
    return pd.DataFrame(rows, columns=['K', 'margin', 'tail_bound'])

def lj_decay_coefficients(k, N=3, spec=None):
    """Decay table C^{j,e_n}: V''(1) at j = 0, path weights elsewhere.

    For j != 0 the entry sums N |V''(|xi|)| / ||xi||_1 over the path steps
    of all shells located at j, with steps -e_n stored as +e_n one site back.
    """
    spec = spec or lj_regroup(k, N)
    v1 = lj_vpp(1.0)
    zero = (0,) * spec.N
    table = {(zero, v): v1 for v in unit_directions(spec.N) if sum(v) > 0}
    for shell in spec.shells:
        for p, s in zip(shell.origins, shell.steps):
            if not any(p):
                continue
            key = _fold(p, s)
            if not any(key[0]):
                continue
            table[key] = table.get(key, 0.0) + shell.weight
    return DecayProfile(table, variant='plain')

def lj_truncation_coefficients(level, spec):
    """C_level^{j,e_n} = 2 sum over shells with |xi|_inf > level of the path weights."""
    table = {}
    for shell in spec.shells:
        if max(abs(v) for v in shell.xi) <= level:
            continue
        for p, s in zip(shell.origins, shell.steps):
            key = _fold(p, s)
            table[key] = table.get(key, 0.0) + 2.0 * shell.weight
    return DecayProfile(table, variant='truncation', level=level)
