# =========================================================================== #
#                              HYPOTHESIS CHECKS                              #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \checks.py                                                            #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Tuesday July 21st 2026, 1:13:49 am                             #
# Last Modified: Wednesday August 5th 2026, 1:02:30 am                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Falsifiers and constant fitters for the structural hypotheses.

Every check draws batches of windows, evaluates the site density of the
potential on all of them at once and either fits a constant or searches
for a violated inequality. Universally quantified statements cannot be
proved by sampling: a pass means that no sample violated the statement.

Hypotheses
----------
H1  translation invariance in the codomain
H2  Cauchy-Born upper bound phi(M x) <= C (|M|^p + 1)
H3  equi-coercivity phi >= c (sum_n |D^{e_n} z|^p - 1)
H4  decaying non-locality against the locality profile
H5  controlled non-convexity of blends against the non-convexity profile
Hp4-Hp7  locality, non-convexity, closeness and monotonicity of the
    truncation family of a periodic potential
"""
import logging

import numpy as np

from lattice_studio.hypotheses.report import (FAIL, NOT_APPLICABLE, PASS, HypothesisEntry,
                                              HypothesisReport, Violation)
from lattice_studio.hypotheses.schedule import (affine_from_matrices, cutoff_windows,
                                                mixed_windows, sample_matrices,
                                                window_offsets)
from lattice_studio.lattice.stencil import Stencil
from lattice_studio.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-12
INEQUALITY_TOLERANCE = 1e-10
SPREAD_TOLERANCE = 1e-8

_TAGS = {'H1': 1, 'H2': 2, 'H3': 3, 'H4': 4, 'H5': 5,
         'Hp4': 6, 'Hp5': 7, 'Hp6': 8, 'Hp7': 9}

# --------------------------------------------------------------------------- #
#                                 HELPERS                                     #
# --------------------------------------------------------------------------- #
def cell_id(hypothesis, *indices):
    """Deterministic RNG cell of a (hypothesis, eps, delta or level, site) cell."""
    cell = _TAGS[hypothesis]
    for i in indices:
        cell = cell * 1000 + int(i)
    return cell

def site_classes(potential):
    """Representatives of the sites modulo the period."""
    T = potential.period or 1
    return [tuple(s) for s in np.ndindex(*((T,) * potential.N))]

def densities(potential, windows, epsilon, site, level=None):
    stencil = Stencil.from_windows(windows, epsilon, site)
    return potential.density(stencil, level).reshape(len(windows))

def forgiveness(rhs):
    """Absolute rounding allowance of an inequality, relative for large sides."""
    return INEQUALITY_TOLERANCE * np.maximum(1.0, np.abs(rhs))

class WorstCase:
    """Keeps the largest value seen and where it came from."""

    def __init__(self, seed):
        self.seed = seed
        self.violation = None

    def update(self, values, cell, site, windows, **where):
        values = np.asarray(values, dtype=float)
        if not values.size:
            return
        k = int(np.argmax(values))
        if self.violation is None or values[k] > self.violation.value:
            self.violation = Violation(float(values[k]), site, self.seed, cell, k,
                                       window=np.asarray(windows[k]).tolist(), **where)

    @property
    def value(self):
        return -np.inf if self.violation is None else self.violation.value

# --------------------------------------------------------------------------- #
#                              H1 TO H5                                       #
# --------------------------------------------------------------------------- #
def check_H1(potential, schedule):
    """Largest relative change of phi under z -> z + w over the samples."""
    B, R, N, n = schedule.samples, potential.reach, potential.N, potential.n
    worst = WorstCase(schedule.seed)
    used = 0
    for ie, eps in enumerate(schedule.epsilons):
        for isite, site in enumerate(site_classes(potential)):
            cell = cell_id('H1', ie, isite)
            rng = schedule.rng(cell)
            z = mixed_windows(schedule, rng, B, R, N, n, eps)
            w = rng.uniform(-1.0, 1.0, size=(B,) + (1,) * N + (n,))
            a = densities(potential, z, eps, site)
            b = densities(potential, z + w, eps, site)
            scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
            worst.update(np.abs(b - a) / scale, cell, site, z, epsilon=eps)
            used += B
    value = max(worst.value, 0.0)
    status = PASS if value <= IDENTITY_TOLERANCE else FAIL
    return HypothesisEntry('H1', status, {'max_relative_change': value}, [],
                           worst.violation if status == FAIL else None, used,
                           "max relative change %.3e" % value)

def check_H2(potential, schedule):
    """Fits C = max phi(M x) / (|M|^p + 1) and compares it with the analytic bound."""
    B, R, N, n, p = schedule.samples, potential.reach, potential.N, potential.n, potential.p
    bound = potential.cauchy_born_constant()
    worst = WorstCase(schedule.seed)
    fitted = []
    used = 0
    for eps in schedule.epsilons:
        best = 0.0
        for isite, site in enumerate(site_classes(potential)):
            # same slopes at every eps: the spread only measures eps dependence
            cell = cell_id('H2', 0, isite)
            M = sample_matrices(schedule, schedule.rng(cell), B, n, N)
            z = affine_from_matrices(M, R, eps)
            norms = np.linalg.norm(M.reshape(B, -1), axis=-1)
            ratio = densities(potential, z, eps, site) / (norms ** p + 1.0)
            best = max(best, float(ratio.max()))
            worst.update(ratio - bound - forgiveness(bound), cell, site, M, epsilon=eps)
            used += B
        fitted.append(best)
    C = max(fitted)
    spread = (C - min(fitted)) / C if C > 0 else 0.0
    problems = []
    if not np.isfinite(C):
        problems.append("fitted constant is not finite")
    if spread > SPREAD_TOLERANCE:
        problems.append("fitted constant varies with eps (spread %.3e)" % spread)
    if worst.value > 0:
        problems.append("fitted constant %.6g exceeds the analytic bound %.6g" % (C, bound))
    status = FAIL if problems else PASS
    message = "; ".join(problems) or "C fitted %.6g <= bound %.6g" % (C, bound)
    return HypothesisEntry('H2', status, {'C_fitted': C, 'C_bound': bound, 'spread': spread},
                           [{'epsilon': e, 'C_fitted': c} for e, c in
                            zip(schedule.epsilons, fitted)],
                           worst.violation if worst.value > 0 else None, used, message)

def coercive_part(stencil, p):
    """sum_n |D^{e_n} z(i)|^p for every window."""
    N = stencil.N
    total = 0.0
    for k in range(N):
        e = tuple(1 if d == k else 0 for d in range(N))
        total = total + np.linalg.norm(stencil.difference(e), axis=-1) ** p
    return total

def check_H3(potential, schedule):
    """Fits c = min phi / (sum_n |D^{e_n} z|^p - 1) over samples with a positive denominator."""
    B, R, N, n, p = schedule.samples, potential.reach, potential.N, potential.n, potential.p
    declared = potential.coercivity_constant()
    target = 0.0 if declared is None else declared
    worst = WorstCase(schedule.seed)
    fitted = []
    used = 0
    for ie, eps in enumerate(schedule.epsilons):
        best = np.inf
        for isite, site in enumerate(site_classes(potential)):
            cell = cell_id('H3', ie, isite)
            z = mixed_windows(schedule, schedule.rng(cell), B, R, N, n, eps)
            stencil = Stencil.from_windows(z, eps, site)
            phi = potential.density(stencil).reshape(B)
            denominator = coercive_part(stencil, p).reshape(B) - 1.0
            ratio = np.where(denominator > 0, phi / np.where(denominator > 0, denominator, 1.0),
                             np.inf)
            best = min(best, float(ratio.min()))
            shortfall = np.where(np.isfinite(ratio), target - ratio, -np.inf)
            worst.update(shortfall - forgiveness(target), cell, site, z, epsilon=eps)
            used += B
        fitted.append(best)
    c = min(fitted)
    problems = []
    if not np.isfinite(c):
        problems.append("no sample had a positive denominator")
    elif not c > 0:
        problems.append("fitted constant %.6g is not positive" % c)
    elif declared is not None and worst.value > 0:
        problems.append("fitted constant %.6g is below the declared %.6g" % (c, declared))
    status = FAIL if problems else PASS
    message = "; ".join(problems) or "c fitted %.6g" % c
    constants = {'c_fitted': c if np.isfinite(c) else None, 'c_declared': declared}
    return HypothesisEntry('H3', status, constants,
                           [{'epsilon': e, 'c_fitted': v} for e, v in
                            zip(schedule.epsilons, fitted)],
                           worst.violation if worst.value > 0 else None, used, message)

def _profile(method, *args):
    try:
        return method(*args)
    except NotImplementedError:
        return None

def check_H4(potential, schedule):
    """phi(z) <= phi(w) + sum C_{eps,delta} (|D^xi z|^p + 1) when z = w near the site."""
    B, R, N, n, p = schedule.samples, potential.reach, potential.N, potential.n, potential.p
    worst = WorstCase(schedule.seed)
    offsets = np.abs(window_offsets(R, N)).max(axis=-1)
    sums = []
    used = 0
    for ie, eps in enumerate(schedule.epsilons):
        for idel, delta in enumerate(schedule.deltas):
            profile = _profile(potential.locality_profile, eps, delta)
            if profile is None:
                return HypothesisEntry('H4', NOT_APPLICABLE,
                                       message="potential declares no locality profile")
            sums.append({'epsilon': eps, 'delta': delta, 'total_sum': profile.total_sum()})
            agree = (eps * offsets < delta)[..., np.newaxis]
            for isite, site in enumerate(site_classes(potential)):
                cell = cell_id('H4', ie, idel, isite)
                rng = schedule.rng(cell)
                z = mixed_windows(schedule, rng, B, R, N, n, eps)
                w = np.where(agree, z, mixed_windows(schedule, rng, B, R, N, n, eps))
                zs = Stencil.from_windows(z, eps, site)
                lhs = potential.density(zs).reshape(B)
                rhs = densities(potential, w, eps, site) + profile.remainder(zs, p).reshape(B)
                worst.update(lhs - rhs - forgiveness(rhs), cell, site, z,
                             epsilon=eps, delta=delta)
                used += B
    problems = []
    if worst.value > 0:
        problems.append("locality inequality violated by %.3e" % worst.value)
    for delta in schedule.deltas:
        column = sorted(((s['epsilon'], s['total_sum']) for s in sums if s['delta'] == delta),
                        reverse=True)
        totals = [t for _, t in column]
        if any(b > a * (1 + IDENTITY_TOLERANCE) for a, b in zip(totals, totals[1:])):
            problems.append("locality sums increase as eps decreases at delta=%g" % delta)
    status = FAIL if problems else PASS
    return HypothesisEntry('H4', status, {}, sums,
                           worst.violation if worst.value > 0 else None, used,
                           "; ".join(problems) or "no violation")

def _nonconvexity(potential, schedule, hypothesis, epsilons, level=None):
    B, R, N, n, p = schedule.samples, potential.reach, potential.N, potential.n, potential.p
    constants = _profile(potential.nonconvexity_profile)
    if constants is None:
        return HypothesisEntry(hypothesis, NOT_APPLICABLE,
                               message="potential declares no non-convexity profile")
    C, profile = constants
    worst = WorstCase(schedule.seed)
    used = 0
    for ie, eps in enumerate(epsilons):
        for isite, site in enumerate(site_classes(potential)):
            cell = cell_id(hypothesis, ie, level or 0, isite)
            rng = schedule.rng(cell)
            z = mixed_windows(schedule, rng, B, R, N, n, eps)
            w = mixed_windows(schedule, rng, B, R, N, n, eps)
            psi, bound = cutoff_windows(rng, B, R, N, eps, schedule.deltas)
            psi = psi[..., np.newaxis]
            v = psi * z + (1.0 - psi) * w
            zs = Stencil.from_windows(z, eps, site)
            ws = Stencil.from_windows(w, eps, site)
            lhs = densities(potential, v, eps, site)
            rhs = (C * (potential.density(zs).reshape(B) + potential.density(ws).reshape(B))
                   + profile.nonconvexity_remainder(zs, ws, bound, p).reshape(B))
            worst.update(lhs - rhs - forgiveness(rhs), cell, site, z,
                         epsilon=eps, level=level)
            used += B
    status = FAIL if worst.value > 0 else PASS
    message = ("blend inequality violated by %.3e" % worst.value if status == FAIL
               else "no violation")
    entry = HypothesisEntry(hypothesis, status, {'C': C}, [{'level': level,
                                                            'total_sum': profile.total_sum()}],
                            worst.violation if status == FAIL else None, used, message)
    return entry

def check_H5(potential, schedule):
    """phi(psi z + (1 - psi) w) <= C (phi(z) + phi(w)) + R(z, w, psi)."""
    return _nonconvexity(potential, schedule, 'H5', schedule.epsilons)

# --------------------------------------------------------------------------- #
#                          TRUNCATION FAMILY                                  #
# --------------------------------------------------------------------------- #
def _check_Hp4(potential, schedule, levels):
    B, N, n = schedule.samples, potential.N, potential.n
    R = potential.k_max + 1
    offsets = np.abs(window_offsets(R, N)).max(axis=-1)
    worst = WorstCase(schedule.seed)
    used = 0
    for k in levels:
        member = potential.truncate(k)
        agree = (offsets <= k)[..., np.newaxis]
        for isite, site in enumerate(site_classes(potential)):
            cell = cell_id('Hp4', k, isite)
            rng = schedule.rng(cell)
            z = mixed_windows(schedule, rng, B, R, N, n, 1.0)
            w = np.where(agree, z, mixed_windows(schedule, rng, B, R, N, n, 1.0))
            gap = np.abs(densities(member, z, 1.0, site) - densities(member, w, 1.0, site))
            worst.update(gap, cell, site, z, level=k)
            used += B
    status = PASS if worst.value <= 0 else FAIL
    return HypothesisEntry('Hp4', status, {}, [],
                           worst.violation if status == FAIL else None, used,
                           "truncations are window-local" if status == PASS
                           else "value changed by %.3e outside the window" % worst.value)

def _check_Hp5(potential, schedule, levels):
    entries = [_nonconvexity(potential.truncate(k), schedule, 'Hp5', (1.0,), k) for k in levels]
    failed = [e for e in entries if e.status == FAIL]
    worst = max(failed, key=lambda e: e.worst.value).worst if failed else None
    return HypothesisEntry('Hp5', FAIL if failed else PASS,
                           {'C': max(e.constants.get('C', 1.0) for e in entries)},
                           [s for e in entries for s in e.decay_sums], worst,
                           sum(e.samples for e in entries),
                           "; ".join("level %s: %s" % (e.worst.level, e.message) for e in failed)
                           or "no violation")

def _check_Hp6(potential, schedule, levels):
    if len(levels) < 2:
        return HypothesisEntry('Hp6', NOT_APPLICABLE,
                               message="a single truncation level has nothing to be close to")
    B, N, n, p = schedule.samples, potential.N, potential.n, potential.p
    R = potential.k_max
    worst = WorstCase(schedule.seed)
    sums = []
    used = 0
    profiles = {k: potential.closeness_profile(k) for k in levels}
    for k1 in levels[:-1]:
        sums.append({'level': k1, 'total_sum': profiles[k1].total_sum()})
        for isite, site in enumerate(site_classes(potential)):
            cell = cell_id('Hp6', k1, isite)
            z = mixed_windows(schedule, schedule.rng(cell), B, R, N, n, 1.0)
            zs = Stencil.from_windows(z, 1.0, site)
            rhs = profiles[k1].remainder(zs, p).reshape(B)
            base = potential.density(zs, k1).reshape(B)
            for k2 in levels:
                if k2 <= k1:
                    continue
                gap = np.abs(potential.density(zs, k2).reshape(B) - base)
                worst.update(gap - rhs - forgiveness(rhs), cell, site, z, level=k1)
            used += B
    problems = []
    if worst.value > 0:
        problems.append("closeness bound violated by %.3e" % worst.value)
    for a, b in zip(levels, levels[1:]):
        if not profiles[a].dominates(profiles[b], tol=INEQUALITY_TOLERANCE):
            problems.append("truncation coefficients increase from level %d to %d" % (a, b))
    status = FAIL if problems else PASS
    return HypothesisEntry('Hp6', status, {}, sums,
                           worst.violation if worst.value > 0 else None, used,
                           "; ".join(problems) or "no violation")

def _check_Hp7(potential, schedule, levels):
    B, N, n = schedule.samples, potential.N, potential.n
    R = potential.k_max
    worst = WorstCase(schedule.seed)
    mismatch = 0.0
    used = 0
    for isite, site in enumerate(site_classes(potential)):
        cell = cell_id('Hp7', 0, isite)
        z = mixed_windows(schedule, schedule.rng(cell), B, R, N, n, 1.0)
        zs = Stencil.from_windows(z, 1.0, site)
        values = [potential.truncate(k).density(zs).reshape(B) for k in levels]
        for k, (a, b) in zip(levels, zip(values, values[1:])):
            worst.update(a - b - forgiveness(b), cell, site, z, level=k)
        full = potential.density(zs).reshape(B)
        mismatch = max(mismatch, float(np.abs(values[-1] - full).max()))
        used += B
    problems = []
    if worst.value > 0:
        problems.append("truncations decrease by %.3e" % worst.value)
    if mismatch > 0:
        problems.append("the last truncation differs from the potential by %.3e" % mismatch)
    status = FAIL if problems else PASS
    return HypothesisEntry('Hp7', status, {}, [],
                           worst.violation if worst.value > 0 else None, used,
                           "; ".join(problems) or "monotone, last level is the potential")

def check_Hp(potential, schedule):
    """Entries Hp4 to Hp7 of the truncation family k = 1, ..., k_max."""
    names = ('Hp4', 'Hp5', 'Hp6', 'Hp7')
    if potential.period is None:
        return [HypothesisEntry(h, NOT_APPLICABLE, message="potential is not periodic")
                for h in names]
    levels = list(range(1, potential.k_max + 1))
    return [_check_Hp4(potential, schedule, levels),
            _check_Hp5(potential, schedule, levels),
            _check_Hp6(potential, schedule, levels),
            _check_Hp7(potential, schedule, levels)]

# --------------------------------------------------------------------------- #
#                                CHECK ALL                                    #
# --------------------------------------------------------------------------- #
CHECKS = (check_H1, check_H2, check_H3, check_H4, check_H5, check_Hp)

def check_all(potential, schedule, threads=1):
    """Runs every check and assembles the report in a fixed order."""
    logger.info("checking %s on %d eps values, %d deltas, %d samples per cell",
                potential.name, len(schedule.epsilons), len(schedule.deltas), schedule.samples)
    results = ordered_map(lambda check: check(potential, schedule), CHECKS, threads)
    report = HypothesisReport(potential, schedule)
    for result in results:
        for entry in (result if isinstance(result, list) else [result]):
            report.add(entry)
    return report
