# =========================================================================== #
#                        HOMOGENIZED DENSITY ESTIMATES                        #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \estimate.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Wednesday July 15th 2026, 5:10:09 pm                           #
# Last Modified: Monday July 27th 2026, 3:12:25 pm                            #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Estimates of the homogenized density from cell minima over a schedule.

Both fits F_L = f + a / L and F_L = f + a / sqrt(L) are made on the last
three points. The fit matching the boundary mode is primary: 1/L for a
fixed layer, 1/sqrt(L) for the floor(sqrt(L)) layer.
"""
from dataclasses import dataclass, field
import logging

import numpy as np

from lattice_studio.cellsolver.problem import CellProblem
from lattice_studio.cellsolver.solvers import solve
from lattice_studio.homogenize.tiling import tile_field
from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.misc import parse_matrix

logger = logging.getLogger(__name__)

DEFAULT_SCHEDULES = {1: (8, 16, 32, 64, 128),
                     2: (8, 16, 32, 64),
                     3: (4, 8, 16)}

FIT_POINTS = 3

def default_schedule(N, period=1):
    """Default cube sides for dimension N, kept to multiples of the period."""
    schedule = DEFAULT_SCHEDULES.get(N, DEFAULT_SCHEDULES[3])
    return tuple(L for L in schedule if L % (period or 1) == 0)

def fit_limit(sides, values, rate):
    """Least-squares f + a x with x = L^-rate; returns (f, a, max residual)."""
    x = np.asarray(sides, dtype=float) ** -rate
    y = np.asarray(values, dtype=float)
    if y.size == 1:
        return float(y[0]), 0.0, 0.0
    a, f = np.polyfit(x, y, 1)
    residual = float(np.abs(y - (f + a * x)).max())
    return float(f), float(a), residual

# --------------------------------------------------------------------------- #
#                        HOMOGENIZATION ESTIMATE                              #
# --------------------------------------------------------------------------- #
@dataclass
class HomogenizationEstimate:
    """Schedule of cell minima and the extrapolated homogenized density.

    ``points`` holds one dict per L with keys L, m, F_L, gradnorm,
    iterations and converged. ``tiling_residuals`` are F_S minus the energy
    per volume of the tiled previous minimizer; positive values beyond the
    solver tolerance are listed in ``subadditivity_violations``.
    """
    M: np.ndarray
    boundary: object
    points: list
    f_hom: float
    error_bar: float
    fits: dict
    differences: list
    shrinking: bool
    growth: dict
    tiling_residuals: list = field(default_factory=list)
    subadditivity_violations: list = field(default_factory=list)
    upper_bound: bool = False
    notes: list = field(default_factory=list)

    @property
    def converged(self):
        return all(p['converged'] for p in self.points)

    @property
    def values(self):
        return np.array([p['F_L'] for p in self.points])

    def within_growth_bounds(self):
        return self.growth.get('satisfied', True)

    def to_dict(self):
        return {'M': self.M.tolist(), 'boundary': str(self.boundary),
                'points': list(self.points), 'f_hom': self.f_hom,
                'error_bar': self.error_bar, 'fits': self.fits,
                'differences': list(self.differences), 'shrinking': self.shrinking,
                'growth': self.growth, 'tiling_residuals': list(self.tiling_residuals),
                'subadditivity_violations': list(self.subadditivity_violations),
                'upper_bound': self.upper_bound, 'converged': self.converged,
                'notes': list(self.notes)}

def growth_sandwich(potential, M, f_hom, error_bar, constants=None):
    """Lower and upper growth bounds at M and whether f_hom lies between them.

    The lower bound is c (sum_n |M e_n|^p - 1), which is c (|M|^2 - 1) for
    p = 2; the upper bound is C (|M|^p + 1).
    """
    c, C = constants if constants is not None else (potential.coercivity_constant(),
                                                    potential.cauchy_born_constant())
    p = potential.p
    columns = float(np.sum(np.linalg.norm(M, axis=0) ** p))
    upper = None if C is None else C * (np.linalg.norm(M) ** p + 1.0)
    lower = None if c is None else c * (columns - 1.0)
    slack = error_bar + 1e-10 * max(1.0, abs(f_hom))
    satisfied = ((lower is None or lower <= f_hom + slack)
                 and (upper is None or f_hom <= upper + slack))
    return {'c': c, 'C': C, 'lower': lower, 'upper': upper, 'satisfied': bool(satisfied)}

def estimate_fhom(potential, M, schedule=None, m='sqrt', method='auto', gtol=None,
                  max_iter=None, warm_start=True, constants=None):
    """Estimates f_hom(M) from the cell minima along ``schedule``.

    Parameters
    ----------
    potential : MultibodyPotential
        A periodic potential.

    M : array-like
        Affine slope.

    schedule : sequence of int, optional
        Increasing cube sides, all multiples of the period. Defaults by
        dimension.

    m : int or 'sqrt', optional (default='sqrt')
        Boundary mode.

    warm_start : bool, optional (default=True)
        Start every solve from the tiled minimizer of the previous side.

    constants : tuple (c, C), optional
        Growth constants of the sandwich; default to the declared
        coercivity and the Cauchy-Born constant of the potential.

    Returns
    -------
    HomogenizationEstimate
    """
    T = potential.period
    if T is None:
        raise ConfigurationError("the homogenized density needs a periodic potential")
    M = parse_matrix(M, potential.n, potential.N)
    schedule = tuple(int(L) for L in (schedule or default_schedule(potential.N, T)))
    if not schedule:
        raise ConfigurationError("empty schedule for period %d" % T)
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ConfigurationError("schedule must be strictly increasing, got %s"
                                 % list(schedule))
    bad = [L for L in schedule if L % T]
    if bad:
        raise ConfigurationError("schedule entries %s are not multiples of the period %d"
                                 % (bad, T))
    tolerance = gtol or 1e-6
    points, residuals, violations = [], [], []
    previous = None
    for L in schedule:
        problem = CellProblem(potential, M, L, m)
        initial = None
        if warm_start and previous is not None:
            initial = tile_field(previous, previous.L, L, M, m, T)
        solution = solve(problem, method=method, gtol=gtol, max_iter=max_iter,
                         initial=initial)
        if initial is not None:
            tiled = problem.energy(initial) / problem.volume
            residual = solution.per_volume_energy - tiled
            residuals.append({'L': previous.L, 'S': L, 'residual': residual})
            if residual > 10 * tolerance * max(1.0, abs(tiled)):
                violations.append({'L': previous.L, 'S': L, 'residual': residual})
        points.append({'L': L, 'm': problem.m, 'F_L': solution.per_volume_energy,
                       'gradnorm': solution.gradnorm, 'iterations': solution.iterations,
                       'converged': solution.converged})
        previous = solution
    sides = [p['L'] for p in points][-FIT_POINTS:]
    values = [p['F_L'] for p in points][-FIT_POINTS:]
    fits = {}
    for name, rate in (('inverse_L', 1.0), ('inverse_sqrt_L', 0.5)):
        f, a, res = fit_limit(sides, values, rate)
        fits[name] = {'f_hom': f, 'slope': a, 'residual': res}
    primary, secondary = (('inverse_sqrt_L', 'inverse_L') if m == 'sqrt'
                          else ('inverse_L', 'inverse_sqrt_L'))
    F = np.array([p['F_L'] for p in points])
    differences = np.diff(F).tolist()
    f_hom = float(np.clip(fits[primary]['f_hom'], min(0.0, F.min()), F.min()))
    error_bar = (abs(differences[-1]) if differences else 0.0) \
        + fits[primary]['residual'] \
        + abs(fits[primary]['f_hom'] - fits[secondary]['f_hom'])
    magnitudes = np.abs(differences)
    shrinking = bool(np.all(magnitudes[1:] <= magnitudes[:-1] + 1e-12))
    growth = growth_sandwich(potential, M, f_hom, error_bar, constants)
    notes = []
    if not growth['satisfied']:
        notes.append("estimate outside the growth bounds")
    if not all(p['converged'] for p in points):
        notes.append("some cell solves did not converge")
    estimate = HomogenizationEstimate(M, m, points, f_hom, float(error_bar), fits,
                                      differences, shrinking, growth, residuals, violations,
                                      upper_bound=not potential.is_quadratic, notes=notes)
    logger.info("f_hom(%s) of %s = %.10g +/- %.3e", M.tolist(), potential.name, f_hom,
                error_bar)
    return estimate
