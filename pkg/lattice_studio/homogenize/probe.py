# =========================================================================== #
#                          RANK-ONE CONVEXITY PROBES                          #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \probe.py                                                             #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Thursday July 16th 2026, 2:48:49 pm                            #
# Last Modified: Wednesday July 29th 2026, 3:36:22 am                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Convexity of the estimated density along rank-one segments.

Rank-one convexity is necessary for quasiconvexity; a probe without
violations certifies nothing beyond the sampled segments.
"""
from dataclasses import dataclass, field
import logging

import numpy as np
import pandas as pd

from lattice_studio.homogenize.estimate import estimate_fhom
from lattice_studio.utils.exceptions import ConfigurationError
from lattice_studio.utils.misc import matrix_key, matrix_label, parse_matrix
from lattice_studio.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

DEFAULT_LAMBDAS = (0.25, 0.5, 0.75)

@dataclass
class ProbeSegment:
    """Gaps f(l M1 + (1 - l) M2) - [l f(M1) + (1 - l) f(M2)] along one segment."""
    M1: np.ndarray
    M2: np.ndarray
    lambdas: tuple
    gaps: list
    error_bars: list

    @property
    def max_gap(self):
        return max(self.gaps) if self.gaps else 0.0

    @property
    def midpoint_gap(self):
        if 0.5 in self.lambdas:
            return self.gaps[self.lambdas.index(0.5)]
        return None

    @property
    def violated(self):
        return any(g > e for g, e in zip(self.gaps, self.error_bars))

    def to_dict(self):
        return {'M1': self.M1.tolist(), 'M2': self.M2.tolist(),
                'lambdas': list(self.lambdas), 'gaps': list(self.gaps),
                'error_bars': list(self.error_bars), 'max_gap': self.max_gap,
                'violated': self.violated}

@dataclass
class ConvexityProbeResult:
    """Rank-one convexity gaps of the estimated density over a set of segments."""
    segments: list
    estimates: dict = field(default_factory=dict)

    @property
    def violations(self):
        return [s for s in self.segments if s.violated]

    @property
    def max_violation(self):
        return max((s.max_gap for s in self.segments), default=0.0)

    def to_frame(self):
        rows = []
        for s in self.segments:
            for lam, gap, bar in zip(s.lambdas, s.gaps, s.error_bars):
                rows.append({'M1': matrix_label(s.M1), 'M2': matrix_label(s.M2),
                             'lambda': lam, 'gap': gap, 'error_bar': bar,
                             'violation': gap > bar})
        return pd.DataFrame(rows, columns=['M1', 'M2', 'lambda', 'gap', 'error_bar',
                                           'violation'])

    def to_dict(self):
        return {'segments': [s.to_dict() for s in self.segments],
                'violations': len(self.violations), 'max_gap': self.max_violation}

def is_rank_one(A, tol=1e-12):
    s = np.linalg.svd(np.asarray(A, dtype=float), compute_uv=False)
    return bool(s[0] > tol and np.all(s[1:] <= tol * max(1.0, s[0])))

def rank_one_probe(potential, pairs, lambdas=DEFAULT_LAMBDAS, schedule=None, m='sqrt',
                   method='auto', gtol=None, threads=1):
    """Measures convexity gaps of the estimated density along rank-one segments.

    Parameters
    ----------
    pairs : list of (M1, M2)
        Endpoints; M1 - M2 must have rank one.

    lambdas : sequence of float
        Interior points of every segment, each in (0, 1).

    Returns
    -------
    ConvexityProbeResult
    """
    lambdas = tuple(float(l) for l in lambdas)
    if not lambdas or any(not 0 < l < 1 for l in lambdas):
        raise ConfigurationError("lambdas must lie in (0, 1), got %s" % list(lambdas))
    segments = []
    for M1, M2 in pairs:
        M1 = parse_matrix(M1, potential.n, potential.N)
        M2 = parse_matrix(M2, potential.n, potential.N)
        if not is_rank_one(M1 - M2):
            raise ConfigurationError("%s and %s are not rank-one connected"
                                     % (matrix_label(M1), matrix_label(M2)))
        segments.append((M1, M2))
    matrices = {}
    for M1, M2 in segments:
        for M in [M1, M2] + [l * M1 + (1 - l) * M2 for l in lambdas]:
            matrices.setdefault(matrix_key(M), M)
    keys = list(matrices)

    def estimate(key):
        return estimate_fhom(potential, matrices[key], schedule, m, method, gtol)

    estimates = dict(zip(keys, ordered_map(estimate, keys, threads)))
    result = []
    for M1, M2 in segments:
        e1, e2 = estimates[matrix_key(M1)], estimates[matrix_key(M2)]
        gaps, bars = [], []
        for l in lambdas:
            e = estimates[matrix_key(l * M1 + (1 - l) * M2)]
            gaps.append(e.f_hom - (l * e1.f_hom + (1 - l) * e2.f_hom))
            bars.append(e.error_bar + l * e1.error_bar + (1 - l) * e2.error_bar
                        + 1e-10 * max(1.0, abs(e.f_hom)))
        segment = ProbeSegment(M1, M2, lambdas, gaps, bars)
        logger.info("rank-one segment %s -> %s: max gap %.3e%s", matrix_label(M1),
                    matrix_label(M2), segment.max_gap,
                    " (violation)" if segment.violated else "")
        result.append(segment)
    return ConvexityProbeResult(result, {matrix_label(matrices[k]): v.to_dict()
                                         for k, v in estimates.items()})
