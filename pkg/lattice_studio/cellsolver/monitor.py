# =========================================================================== #
#                               SOLVER MONITORS                               #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \monitor.py                                                           #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Friday July 10th 2026, 3:08:59 am                              #
# Last Modified: Saturday July 18th 2026, 11:24:50 pm                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Callbacks that record, report and watch the progress of a solve."""
import datetime
import logging

import numpy as np

from lattice_studio.cellsolver.callbacks import Callback

logger = logging.getLogger(__name__)

# --------------------------------------------------------------------------- #
#                             HISTORY CLASS                                   #
# --------------------------------------------------------------------------- #
class History(Callback):
    """Records the iterates of a solve."""

    def on_solve_begin(self, logs=None):
        self.total_iterations = 0
        self.starts = 0
        self.start = datetime.datetime.now()
        self.end = None
        self.duration = 0.0
        self.iteration_log = {}

    def on_solve_end(self, logs=None):
        self.end = datetime.datetime.now()
        self.duration = (self.end - self.start).total_seconds()

    def on_start_begin(self, start, logs=None):
        self.starts = start + 1

    def on_iteration_end(self, iteration, logs=None):
        logs = logs or {}
        self.total_iterations += 1
        for k, v in logs.items():
            self.iteration_log.setdefault(k, []).append(v)

    def to_dict(self):
        return {'iterations': self.total_iterations, 'starts': self.starts,
                'duration': self.duration,
                'energy': [float(v) for v in self.iteration_log.get('energy', [])],
                'gradnorm': [float(v) for v in self.iteration_log.get('gradnorm', [])]}

# --------------------------------------------------------------------------- #
#                            PROGRESS CLASS                                   #
# --------------------------------------------------------------------------- #
class Progress(Callback):
    """Logs the iterate every ``checkpoint`` iterations when the solver is verbose."""

    def on_iteration_end(self, iteration, logs=None):
        if self.model.verbose and (iteration % self.model.checkpoint == 0):
            logs = logs or {}
            progress = " ".join("%s: %.6g" % (k, v) for k, v in logs.items()
                                if isinstance(v, (int, float, np.floating)))
            logger.info("%s %s", self.model.name or self.model.__class__.__name__, progress)

# --------------------------------------------------------------------------- #
#                              STALL MONITOR                                  #
# --------------------------------------------------------------------------- #
class StallMonitor(Callback):
    """Stops a solve whose energy has stopped decreasing.

    The energy must drop by more than ``precision`` times its magnitude to
    count as an improvement; after ``patience`` iterations without one the
    solver's ``stalled`` flag is set. A stalled solve is not converged.

    Parameters
    ----------
    precision : float, optional (default=1e-15)
        Relative improvement required.

    patience : int, optional (default=50)
        Iterations without improvement before stopping.
    """

    def __init__(self, precision=1e-15, patience=50):
        super(StallMonitor, self).__init__()
        self.precision = precision
        self.patience = patience
        self._iter_no_improvement = 0
        self.best_energy_ = None

    def _validate(self):
        if not isinstance(self.precision, float):
            raise TypeError("precision must be a float.")
        elif self.precision < 0 or self.precision >= 1:
            raise ValueError("precision must be in [0, 1).")
        elif not isinstance(self.patience, int) or self.patience < 1:
            raise TypeError("patience must be a positive integer.")

    def on_solve_begin(self, logs=None):
        self._validate()

    def on_start_begin(self, start, logs=None):
        self._iter_no_improvement = 0
        self.best_energy_ = np.inf
        self.model.stalled = False

    def on_iteration_end(self, iteration, logs=None):
        current = (logs or {}).get('energy')
        if current is None:
            return
        if current < self.best_energy_ - self.precision * abs(self.best_energy_) \
                or not np.isfinite(self.best_energy_):
            self.best_energy_ = current
            self._iter_no_improvement = 0
        else:
            self._iter_no_improvement += 1
            if self._iter_no_improvement >= self.patience:
                self.model.stalled = True

# --------------------------------------------------------------------------- #
#                                SUMMARY                                      #
# --------------------------------------------------------------------------- #
center = 25

def summary(history, solution=None):
    """Text summary of a solve, one label per line."""
    def line(label, value):
        return " " * (center - len(label)) + label + ": " + str(value)

    lines = ["Solve Summary",
             line("Solver", history.params.get('name') or history.model.__class__.__name__),
             line("Start", history.start), line("End", history.end),
             line("Duration", "%s seconds." % history.duration),
             line("Starts", history.starts), line("Iterations", history.total_iterations)]
    energies = history.iteration_log.get('energy')
    if energies:
        lines.append(line("Final Energy", "%.10g" % energies[-1]))
    if solution is not None:
        lines += [line("F_L", "%.10g" % solution.per_volume_energy),
                  line("Gradient Norm", "%.3e" % solution.gradnorm),
                  line("Converged", solution.converged)]
    lines.append("")
    lines.append("Solver Parameters")
    for p, v in history.params.items():
        lines.append(line(p, v))
    return "\n".join(lines)
