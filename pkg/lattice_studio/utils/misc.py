# =========================================================================== #
#                                MISCELLANEOUS                                #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \misc.py                                                              #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Monday August 17th 2026, 2:45:41 am                            #
# Last Modified: Monday August 24th 2026, 8:54:30 pm                          #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

import re

import numpy as np

def snake(s):
    """Converts a label to snake case, e.g. 'Two Spring Chain' -> 'two_spring_chain'."""
    s = re.sub(r'[^0-9a-zA-Z]+', ' ', str(s))
    s = re.sub(r'\s+', ' ', s).strip().lower()
    return s.replace(" ", "_")

def fmt(x):
    """Formats a float with 17 significant digits."""
    return "%.17g" % float(x)

def parse_matrix(values, n=None, N=None):
    """Parses a row-major list (or nested list) into an n x N float matrix.

    A flat list of length n*N requires ``n`` or ``N``; when both are
    missing a flat list of square length is reshaped to a square matrix.
    """
    M = np.asarray(values, dtype=float)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    elif M.ndim == 1:
        size = M.shape[0]
        if n is None and N is None:
            side = int(round(np.sqrt(size)))
            if side * side != size:
                raise ValueError("a flat matrix of length %d must be square "
                                 "unless its shape is given." % size)
            n = N = side
        elif n is None:
            n = size // N
        elif N is None:
            N = size // n
        if n * N != size:
            raise ValueError("cannot reshape %d entries into a %d x %d matrix."
                             % (size, n, N))
        M = M.reshape(n, N)
    elif M.ndim != 2:
        raise ValueError("M must be a matrix, got an array with %d dimensions."
                         % M.ndim)
    if not np.all(np.isfinite(M)):
        raise ValueError("M must have finite entries.")
    return M

def matrix_key(M):
    """Hashable key for a matrix, used by caches and resumable records."""
    M = np.asarray(M, dtype=float)
    return (M.shape, tuple(float(v) for v in M.ravel()))

def matrix_label(M):
    return "[" + ", ".join(fmt(v) for v in np.asarray(M, dtype=float).ravel()) + "]"
