# =========================================================================== #
#                                   SWEEPS                                    #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \sweep.py                                                             #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Saturday July 18th 2026, 1:33:11 am                            #
# Last Modified: Friday July 31st 2026, 5:06:01 am                            #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Homogenized density estimates over a grid of slopes with a resumable record."""
import itertools
import logging
import os

import numpy as np
import pandas as pd

from lattice_studio.homogenize.estimate import estimate_fhom
from lattice_studio.utils.exceptions import LatticeStudioError
from lattice_studio.utils.file_manager import save_csv
from lattice_studio.utils.misc import matrix_key, parse_matrix
from lattice_studio.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

OK = 'ok'
NOT_CONVERGED = 'not-converged'
ERROR = 'error'

VALUE_COLUMNS = ['L', 'F_L', 'gradnorm', 'iterations', 'f_hom_extrapolated', 'error_bar',
                 'status']

DEFAULT_GRID_SCALES = (-2.0, -1.0, 1.0, 2.0)

def matrix_columns(n, N):
    return ['M_%d%d' % (a + 1, b + 1) for a in range(n) for b in range(N)]

def default_grid(n, N):
    """Zero, scaled unit slopes E_ab and, when n N > 1, the all-ones slope times +-1."""
    grid = [np.zeros((n, N))]
    for a, b in itertools.product(range(n), range(N)):
        for t in DEFAULT_GRID_SCALES:
            M = np.zeros((n, N))
            M[a, b] = t
            grid.append(M)
    if n * N > 1:
        grid.extend(t * np.ones((n, N)) for t in (-1.0, 1.0))
    return grid

def estimate_rows(M, estimate):
    """One row per schedule point of an estimate."""
    status = OK if estimate.converged else NOT_CONVERGED
    entries = list(M.ravel())
    return [entries + [p['L'], p['F_L'], p['gradnorm'], p['iterations'], estimate.f_hom,
                       estimate.error_bar, status] for p in estimate.points]

def error_rows(M):
    return [list(M.ravel()) + [np.nan] * 6 + [ERROR]]

def load_record(path, columns):
    """Previously completed rows of a sweep record, empty when absent."""
    if path is None or not os.path.exists(path):
        return pd.DataFrame(columns=columns)
    record = pd.read_csv(path)
    missing = set(columns) - set(record.columns)
    if missing:
        raise LatticeStudioError("sweep record %s lacks columns %s" % (path, sorted(missing)))
    return record[columns]

def sweep(potential, grid=None, schedule=None, m='sqrt', method='auto', gtol=None,
          record=None, threads=1):
    """Estimates f_hom for every slope of ``grid``.

    Parameters
    ----------
    grid : list of array-like, optional
        Slopes M; defaults to default_grid(n, N).

    record : str, optional
        CSV path. Slopes already recorded with a status other than 'error'
        are not recomputed; the record is rewritten after every batch of
        ``threads`` estimates.

    Returns
    -------
    DataFrame
        Columns M_ij, L, F_L, gradnorm, iterations, f_hom_extrapolated,
        error_bar and status, in grid order.
    """
    n, N = potential.n, potential.N
    columns = matrix_columns(n, N) + VALUE_COLUMNS
    if grid is None:
        grid = default_grid(n, N)
    matrices = [parse_matrix(M, n, N) for M in grid]
    previous = load_record(record, columns)
    done = {}
    for key, rows in previous.groupby(matrix_columns(n, N), sort=False):
        key = np.atleast_1d(np.asarray(key, dtype=float))
        if (rows['status'] != ERROR).all():
            done[matrix_key(key.reshape(n, N))] = rows.values.tolist()
    pending = [M for M in matrices if matrix_key(M) not in done]
    if done:
        logger.info("sweep resumes with %d of %d slopes recorded",
                    len(matrices) - len(pending), len(matrices))

    def run(M):
        try:
            return estimate_rows(M, estimate_fhom(potential, M, schedule, m, method, gtol))
        except (LatticeStudioError, ValueError, ArithmeticError, np.linalg.LinAlgError) as e:
            logger.error("sweep entry %s failed: %s", M.tolist(), e)
            return error_rows(M)

    batch = max(int(threads or 1), 1)
    for start in range(0, len(pending), batch):
        chunk = pending[start:start + batch]
        for M, rows in zip(chunk, ordered_map(run, chunk, threads)):
            done[matrix_key(M)] = rows
        if record is not None:
            save_csv(_table(matrices, done, columns), os.path.dirname(os.path.abspath(record)),
                     os.path.basename(record))
    return _table(matrices, done, columns)

def _table(matrices, done, columns):
    rows = []
    for M in matrices:
        rows.extend(done.get(matrix_key(M), []))
    df = pd.DataFrame(rows, columns=columns)
    return df.astype({'status': str})
