# =========================================================================== #
#                              SAMPLE SCHEDULES                               #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \schedule.py                                                          #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Thursday July 23rd 2026, 7:13:51 am                            #
# Last Modified: Saturday August 8th 2026, 12:33:06 pm                        #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Sample schedules and the window and cut-off samplers of the checks.

A window is the array of field values on the sites i + o, |o|_inf <= r,
around the evaluated site. Samplers scale every field by eps so that the
difference quotients of a window are O(1) whatever eps is.
"""
from dataclasses import dataclass, asdict
import logging

import numpy as np

logger = logging.getLogger(__name__)

# --------------------------------------------------------------------------- #
#                                SCHEDULE                                     #
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class SampleSchedule:
    """Where and how densely the hypotheses are sampled.

    Parameters
    ----------
    epsilons : tuple of float
        Lattice spacings, checked in the given order.

    deltas : tuple of float
        Locality scales for the decaying non-locality and cut-off checks.

    samples : int
        Windows per (hypothesis, eps, delta, site class) cell.

    seed : int
        Root seed; cell c draws from default_rng([seed, c]).

    amplitude : float
        Gradient scale of the bounded random samplers.

    large_amplitude : float
        Gradient scale of the large-gradient samplers.

    matrix_radius : float
        Largest Frobenius norm of the sampled slopes.
    """
    epsilons: tuple = (0.25, 0.125, 0.0625, 0.03125, 0.015625)
    deltas: tuple = (0.5, 0.25, 0.125)
    samples: int = 1000
    seed: int = 0
    amplitude: float = 1.0
    large_amplitude: float = 10.0
    matrix_radius: float = 10.0

    def __post_init__(self):
        if not self.epsilons or any(not e > 0 for e in self.epsilons):
            raise ValueError("epsilons must be a nonempty list of positive numbers.")
        if not self.deltas or any(not d > 0 for d in self.deltas):
            raise ValueError("deltas must be a nonempty list of positive numbers.")
        if not isinstance(self.samples, (int, np.integer)) or self.samples < 4:
            raise TypeError("samples must be an integer of at least 4.")
        if not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise TypeError("seed must be a nonnegative integer.")
        if not self.amplitude > 0 or not self.large_amplitude > 0:
            raise ValueError("sampler amplitudes must be positive.")
        if not self.matrix_radius > 0:
            raise ValueError("matrix_radius must be positive.")
        object.__setattr__(self, 'epsilons', tuple(float(e) for e in self.epsilons))
        object.__setattr__(self, 'deltas', tuple(float(d) for d in self.deltas))

    def rng(self, cell):
        return np.random.default_rng([int(self.seed), int(cell)])

    def to_dict(self):
        return asdict(self)

# --------------------------------------------------------------------------- #
#                             FIELD SAMPLERS                                  #
# --------------------------------------------------------------------------- #
def window_offsets(radius, N):
    """Integer offsets of a window, shape (2r+1,)*N + (N,)."""
    side = 2 * int(radius) + 1
    return np.moveaxis(np.indices((side,) * N), 0, -1) - int(radius)

def affine_windows(rng, size, radius, N, n, epsilon, scale=1.0):
    """eps M o + b with Gaussian slopes M of Frobenius scale ``scale``."""
    M = rng.normal(size=(size, n, N)) * scale / np.sqrt(n * N)
    b = rng.uniform(-1.0, 1.0, size=(size, n))
    return affine_from_matrices(M, radius, epsilon, b)

def affine_from_matrices(M, radius, epsilon, b=None):
    M = np.asarray(M, dtype=float)
    N = M.shape[-1]
    offsets = window_offsets(radius, N).astype(float)
    z = epsilon * np.einsum('...d,bkd->b...k', offsets, M)
    if b is not None:
        z = z + b.reshape((b.shape[0],) + (1,) * N + (b.shape[1],))
    return z

def bump_windows(rng, size, radius, N, n, epsilon, scale=1.0):
    """Affine windows plus a random bump supported in the inner half."""
    z = affine_windows(rng, size, radius, N, n, epsilon, scale)
    offsets = window_offsets(radius, N)
    support = np.abs(offsets).max(axis=-1) <= max(radius // 2, 1)
    noise = rng.uniform(-scale, scale, size=z.shape)
    return z + epsilon * noise * support[..., np.newaxis]

def random_windows(rng, size, radius, N, n, epsilon, scale=1.0):
    """Independent values; every difference quotient is at most 2 scale."""
    side = 2 * int(radius) + 1
    return epsilon * rng.uniform(-scale, scale, size=(size,) + (side,) * N + (n,))

def quiet_windows(rng, size, radius, N, n, epsilon, scale=10.0):
    """Large random values except at the nearest neighbours of the centre.

    The 2N nearest neighbours get z(0) +- eps v_n with |v_n| in [0.6, 1.2],
    so the coercive quotients at the centre stay moderate while long-range
    quotients are of order ``scale``.
    """
    z = random_windows(rng, size, radius, N, n, epsilon, scale)
    centre = (slice(None),) + (int(radius),) * N
    for k in range(N):
        v = rng.normal(size=(size, n))
        v *= (rng.uniform(0.6, 1.2, size=(size, 1))
              / np.maximum(np.linalg.norm(v, axis=-1, keepdims=True), 1e-300))
        for sign in (1, -1):
            site = list(centre)
            site[1 + k] = int(radius) + sign
            z[tuple(site)] = z[centre] + sign * epsilon * v
    return z

SAMPLERS = {'affine': affine_windows, 'bump': bump_windows,
            'random': random_windows, 'quiet': quiet_windows}

def mixed_windows(schedule, rng, size, radius, N, n, epsilon):
    """Windows from every sampler in a fixed order: affine, bump, random, quiet.

    The bounded samplers use ``schedule.amplitude``; the quiet sampler and
    a second random block use ``schedule.large_amplitude``.
    """
    plan = [('affine', schedule.amplitude), ('bump', schedule.amplitude),
            ('random', schedule.amplitude), ('random', schedule.large_amplitude),
            ('quiet', schedule.large_amplitude)]
    counts = np.full(len(plan), size // len(plan))
    counts[:size % len(plan)] += 1
    blocks = [SAMPLERS[name](rng, int(c), radius, N, n, epsilon, scale)
              for (name, scale), c in zip(plan, counts) if c]
    return np.concatenate(blocks, axis=0)

def sample_matrices(schedule, rng, size, n, N):
    """Slopes t U with t on [0, matrix_radius] and |U| = 1.

    Half of the directions are Gaussian, half are single-entry stretches.
    The first slope is 0.
    """
    t = np.linspace(0.0, schedule.matrix_radius, size)
    U = rng.normal(size=(size, n, N))
    stretch = np.arange(size) % 2 == 1
    U[stretch] = 0.0
    rows = rng.integers(0, n, size=size)
    cols = rng.integers(0, N, size=size)
    U[stretch, rows[stretch], cols[stretch]] = 1.0
    U /= np.linalg.norm(U.reshape(size, -1), axis=-1).reshape(size, 1, 1)
    return t.reshape(size, 1, 1) * U

# --------------------------------------------------------------------------- #
#                            CUT-OFF SAMPLERS                                 #
# --------------------------------------------------------------------------- #
def sup_gradient(psi, epsilon):
    """Per-window max of |D^{e_n}_eps psi|, psi of shape (B,) + (2r+1,)*N."""
    B = psi.shape[0]
    best = np.zeros(B)
    for axis in range(1, psi.ndim):
        d = np.abs(np.diff(psi, axis=axis)).reshape(B, -1).max(axis=1) / epsilon
        best = np.maximum(best, d)
    return best

def cutoff_windows(rng, size, radius, N, epsilon, deltas):
    """Cut-offs in the order plateau, spike, constant 0, constant 1.

    Plateaus are 1 within a random sup-distance of a random centre and drop
    linearly to 0 over a width drawn from ``deltas``, so their gradient is
    at most 1 / delta.

    Returns
    -------
    psi : ndarray, shape (size,) + (2r+1,)*N
    bound : ndarray, shape (size,)
        Measured sup of |D^{e_n}_eps psi| of each window.
    """
    side = 2 * int(radius) + 1
    offsets = window_offsets(radius, N)
    counts = [size // 2, size // 4, size // 8, size - size // 2 - size // 4 - size // 8]
    blocks = []
    centres = rng.integers(-radius, radius + 1, size=(counts[0], N))
    inner = rng.uniform(0.0, radius * epsilon, size=counts[0])
    width = rng.choice(np.asarray(deltas, dtype=float), size=counts[0])
    r = epsilon * np.abs(offsets[np.newaxis] - centres.reshape((-1,) + (1,) * N + (N,))).max(-1)
    shape = (-1,) + (1,) * N
    blocks.append(np.clip((inner.reshape(shape) + width.reshape(shape) - r)
                          / width.reshape(shape), 0.0, 1.0))
    spikes = np.zeros((counts[1],) + (side,) * N)
    sites = rng.integers(0, side, size=(counts[1], N))
    spikes[(np.arange(counts[1]),) + tuple(sites.T)] = 1.0
    blocks.append(spikes)
    blocks.append(np.zeros((counts[2],) + (side,) * N))
    blocks.append(np.ones((counts[3],) + (side,) * N))
    psi = np.concatenate(blocks, axis=0)
    return psi, sup_gradient(psi, epsilon)
