# =========================================================================== #
#                              SOLVER CALLBACKS                               #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \callbacks.py                                                         #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Tuesday July 7th 2026, 1:12:25 pm                              #
# Last Modified: Wednesday July 15th 2026, 3:57:42 am                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Callbacks invoked while a cell problem is minimized."""

# --------------------------------------------------------------------------- #
#                             CALLBACK LIST                                   #
# --------------------------------------------------------------------------- #
class CallbackList(object):
    """Container of callbacks."""

    def __init__(self, callbacks=None):
        """CallbackList constructor

        Parameters
        ----------
        callbacks : list
            List of 'Callback' instances.
        """
        callbacks = callbacks or []
        self.callbacks = [c for c in callbacks]
        self.params = {}
        self.model = None

    def append(self, callback):
        self.callbacks.append(callback)

    def set_params(self, params):
        """Passes the solver parameters to every callback."""
        self.params = params
        for callback in self.callbacks:
            callback.set_params(params)

    def set_model(self, model):
        """Passes the solver to every callback."""
        self.model = model
        for callback in self.callbacks:
            callback.set_model(model)

    def on_solve_begin(self, logs=None):
        logs = logs or {}
        for callback in self.callbacks:
            callback.on_solve_begin(logs)

    def on_solve_end(self, logs=None):
        logs = logs or {}
        for callback in self.callbacks:
            callback.on_solve_end(logs)

    def on_start_begin(self, start, logs=None):
        """Calls ``on_start_begin`` at the beginning of each multi-start run.

        Parameters
        ----------
        start : int
            Index of the starting point, 0 for the affine field.
        """
        logs = logs or {}
        for callback in self.callbacks:
            callback.on_start_begin(start, logs)

    def on_iteration_end(self, iteration, logs=None):
        """Calls ``on_iteration_end`` after every accepted iterate.

        Parameters
        ----------
        iteration : int
            Iteration count within the current start.

        logs : dict
            Energy, gradient sup-norm and step length of the iterate.
        """
        logs = logs or {}
        for callback in self.callbacks:
            callback.on_iteration_end(iteration, logs)

    def __iter__(self):
        return iter(self.callbacks)

# --------------------------------------------------------------------------- #
#                             CALLBACK CLASS                                  #
# --------------------------------------------------------------------------- #
class Callback(object):
    """Base class of solver callbacks; every hook does nothing by default."""

    def __init__(self):
        self.params = None
        self.model = None

    def set_params(self, params):
        self.params = params

    def set_model(self, model):
        self.model = model

    def on_solve_begin(self, logs=None):
        pass

    def on_solve_end(self, logs=None):
        pass

    def on_start_begin(self, start, logs=None):
        pass

    def on_iteration_end(self, iteration, logs=None):
        pass
