# =========================================================================== #
#                                CELL SOLVERS                                 #
# =========================================================================== #
# =========================================================================== #
# Project: Lattice Studio                                                     #
# Version: 0.1.0                                                              #
# File: \solvers.py                                                           #
# Python Version: 3.10.12                                                     #
# ---------------                                                             #
# Author: John James                                                          #
# Company: Decision Scients                                                   #
# Email: jjames@decisionscients.com                                           #
# ---------------                                                             #
# Create Date: Sunday July 12th 2026, 2:48:21 am                              #
# Last Modified: Wednesday July 22nd 2026, 4:34:46 am                         #
# Modified By: John James (jjames@decisionscients.com)                        #
# ---------------                                                             #
# License: Modified BSD                                                       #
# Copyright (c) 2026 Decision Scients                                         #
# =========================================================================== #

"""Minimizers of cell problems.

ConjugateGradientSolver
    Exact minimizer of quadratic energies: the stationarity system over
    the free coordinates is solved by matrix-free conjugate gradients.
LBFGSSolver
    Limited-memory quasi-Newton descent with Armijo backtracking for every
    family with a gradient.
BruteOracle
    Independent certification on desk-scale instances: dense Hessian solve
    for quadratic energies, grid search plus BFGS polish otherwise.
"""
from abc import ABC, abstractmethod, ABCMeta
from collections import deque
import logging

import numpy as np
from scipy.optimize import brute, minimize
from scipy.sparse.linalg import LinearOperator, cg
from sklearn.base import BaseEstimator

from lattice_studio.cellsolver.callbacks import CallbackList
from lattice_studio.cellsolver.monitor import History, Progress, StallMonitor, summary
from lattice_studio.cellsolver.problem import CellProblem, CellSolution, assemble
from lattice_studio.lattice.field import LatticeField
from lattice_studio.utils.exceptions import InstanceTooLargeError

logger = logging.getLogger(__name__)

# --------------------------------------------------------------------------- #
#                             CELL MINIMIZER                                  #
# --------------------------------------------------------------------------- #
class CellMinimizer(ABC, BaseEstimator, metaclass=ABCMeta):
    """Base class of the cell problem minimizers.

    Parameters
    ----------
    gtol : float, optional
        Stopping tolerance on the sup-norm of the free gradient.

    max_iter : int, optional
        Iteration cap per start; defaults to 10 times the number of free
        coordinates.

    starts : int, optional (default=1)
        Number of starting points: the affine field, then seeded
        perturbations of it.

    seed : int, optional (default=0)
        Seed of the perturbations.

    perturbation : float, optional (default=0.1)
        Size of the perturbations relative to max(1, |M|).

    verbose : bool, optional (default=False)

    checkpoint : int, optional (default=100)
        Iterations between progress reports.

    name : str, optional
    """

    DEFAULT_GTOL = 1e-6
    METHOD = None

    def __init__(self, gtol=None, max_iter=None, starts=1, seed=0, perturbation=0.1,
                 verbose=False, checkpoint=100, name=None):
        self.gtol = gtol
        self.max_iter = max_iter
        self.starts = starts
        self.seed = seed
        self.perturbation = perturbation
        self.verbose = verbose
        self.checkpoint = checkpoint
        self.name = name
        # Instance variables
        self.objective = None
        self.cbks = None
        self.stalled = False
        # Attributes
        self.solution_ = None
        self.iterations_ = 0
        self.converged_ = False

    def set_params(self, **kwargs):
        """Sets parameters to **kwargs and validates."""
        super().set_params(**kwargs)
        self._validate_params()
        return self

    def _validate_params(self):
        if self.gtol is not None:
            if not isinstance(self.gtol, (int, float)) or isinstance(self.gtol, bool):
                raise TypeError("gtol must be a positive number or None.")
            if not self.gtol > 0:
                raise ValueError("gtol must be a positive number or None.")
        if self.max_iter is not None:
            if not isinstance(self.max_iter, int) or isinstance(self.max_iter, bool):
                raise TypeError("max_iter must be a positive integer or None.")
            if self.max_iter < 1:
                raise ValueError("max_iter must be a positive integer or None.")
        if not isinstance(self.starts, int) or isinstance(self.starts, bool):
            raise TypeError("starts must be a positive integer.")
        if self.starts < 1:
            raise ValueError("starts must be a positive integer.")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise TypeError("seed must be a nonnegative integer.")
        if not isinstance(self.perturbation, (int, float)) or self.perturbation < 0:
            raise ValueError("perturbation must be a nonnegative number.")
        if not isinstance(self.verbose, bool):
            raise TypeError("verbose must be either True or False")
        if not isinstance(self.checkpoint, int) or self.checkpoint < 1:
            raise ValueError("checkpoint must be a positive integer.")

    @property
    def tolerance(self):
        return self.DEFAULT_GTOL if self.gtol is None else float(self.gtol)

    def iteration_cap(self, objective):
        return self.max_iter or max(10 * objective.size, 10)

    # ---------------------------------------------------------------------- #
    def _init_callbacks(self):
        self.cbks = CallbackList()
        self.history = History()
        self.cbks.append(self.history)
        self.progress = Progress()
        self.cbks.append(self.progress)
        self.stall_monitor = StallMonitor()
        self.cbks.append(self.stall_monitor)
        self.cbks.set_params(self.get_params())
        self.cbks.set_model(self)

    def _begin_solve(self, problem):
        self._validate_params()
        if not isinstance(problem, CellProblem):
            raise TypeError("problem must be a CellProblem.")
        self.stalled = False
        self.objective = assemble(problem)
        self._init_callbacks()
        self.cbks.on_solve_begin({'problem': problem})

    def _starting_points(self, problem, initial):
        if initial is not None:
            if not isinstance(initial, LatticeField):
                raise TypeError("initial must be a LatticeField.")
            if initial.domain != problem.domain:
                raise ValueError("initial field does not live on the cell of the problem.")
            first = self.objective.coordinates(initial)
        else:
            first = self.objective.start()
        points = [first]
        rng = np.random.default_rng(self.seed)
        scale = self.perturbation * max(1.0, float(np.linalg.norm(problem.M)))
        for _ in range(1, self.starts):
            points.append(first + scale * rng.standard_normal(first.shape))
        return points

    def _report(self, iteration, x, energy, g, step):
        self.cbks.on_iteration_end(iteration, {'iteration': iteration, 'energy': energy,
                                               'gradnorm': _supnorm(g), 'step': step})

    @abstractmethod
    def _minimize(self, objective, x0):
        """Returns (x, iterations, converged) for one starting point."""
        raise NotImplementedError("This method is not implemented for "
                                  "this Abstract Base Class.")

    def _end_solve(self, problem, x, iterations, converged, notes):
        objective = self.objective
        u = objective.field(x)
        E = problem.energy(u)
        affine = problem.affine_field()
        E_affine = problem.energy(affine)
        if E > E_affine:
            notes.append("minimizer did not improve on the affine field")
            u, E = affine, E_affine
            x = objective.start()
        gradnorm = _supnorm(objective.gradient(x)) if objective.size else 0.0
        converged = converged and gradnorm <= self.tolerance
        self.cbks.on_solve_end()
        solution = CellSolution(problem, u, E, E / problem.volume, iterations, gradnorm,
                                self.history.duration, bool(converged), self.METHOD,
                                upper_bound=not problem.potential.is_quadratic, notes=notes,
                                history=self.history.to_dict())
        self.solution_ = solution
        self.iterations_ = iterations
        self.converged_ = solution.converged
        logger.info("%r: F_L=%.12g iterations=%d gradnorm=%.3e converged=%s",
                    problem, solution.per_volume_energy, iterations, gradnorm,
                    solution.converged)
        return solution

    def solve(self, problem, initial=None):
        """Minimizes the energy of ``problem``.

        Parameters
        ----------
        problem : CellProblem

        initial : LatticeField, optional
            Warm start; its frozen values are replaced by M i.

        Returns
        -------
        CellSolution
        """
        self._begin_solve(problem)
        notes = []
        if self.objective.size == 0:
            notes.append("no free sites")
            return self._end_solve(problem, self.objective.start(), 0, True, notes)
        best = None
        total = 0
        for start, x0 in enumerate(self._starting_points(problem, initial)):
            self.cbks.on_start_begin(start)
            self.stalled = False
            x, iterations, converged = self._minimize(self.objective, x0)
            total += iterations
            E = self.objective.value(x)
            if best is None or E < best[0]:
                best = (E, x, converged)
        if self.stalled and not best[2]:
            notes.append("energy stalled before the gradient tolerance was reached")
        if not best[2]:
            notes.append("not converged within %d iterations" % self.iteration_cap(self.objective))
        return self._end_solve(problem, best[1], total, best[2], notes)

    def summary(self):
        return summary(self.history, self.solution_)

def _supnorm(g):
    g = np.asarray(g)
    return float(np.abs(g).max()) if g.size else 0.0

# --------------------------------------------------------------------------- #
#                        CONJUGATE GRADIENT SOLVER                            #
# --------------------------------------------------------------------------- #
class ConjugateGradientSolver(CellMinimizer):
    """Exact minimizer of quadratic energies by matrix-free conjugate gradients."""

    DEFAULT_GTOL = 1e-8
    METHOD = 'exact-quadratic'

    def _minimize(self, objective, x0):
        if not objective.is_quadratic:
            raise ValueError("exact-quadratic requires a quadratic potential.")
        n = objective.size
        g0 = objective.gradient(x0)
        A = LinearOperator((n, n), matvec=objective.hessp, dtype=float)
        count = [0]

        def callback(d):
            count[0] += 1
            self.cbks.on_iteration_end(count[0], {'iteration': count[0],
                                                  'step': float(np.linalg.norm(d))})

        # residual target below gtol; the flag is judged on the recomputed gradient
        d, info = cg(A, -g0, x0=np.zeros(n), rtol=0.0, atol=0.1 * self.tolerance,
                     maxiter=self.iteration_cap(objective), callback=callback)
        if info < 0:
            raise ValueError("conjugate gradients broke down (info=%d)." % info)
        x = x0 + d
        gradnorm = _supnorm(objective.gradient(x))
        self._report(count[0], x, objective.value(x), objective.gradient(x), 0.0)
        converged = info == 0 and gradnorm <= self.tolerance
        return x, count[0], converged

# --------------------------------------------------------------------------- #
#                              L-BFGS SOLVER                                  #
# --------------------------------------------------------------------------- #
class LBFGSSolver(CellMinimizer):
    """Limited-memory BFGS with Armijo backtracking.

    Parameters
    ----------
    memory : int, optional (default=10)
        Number of stored curvature pairs.

    c1 : float, optional (default=1e-4)
        Sufficient decrease constant of the line search.

    shrink : float, optional (default=0.5)
        Step reduction factor of the line search.

    Other parameters are those of CellMinimizer.
    """

    DEFAULT_GTOL = 1e-6
    METHOD = 'iterative-first-order'

    def __init__(self, gtol=None, max_iter=None, starts=1, seed=0, perturbation=0.1,
                 verbose=False, checkpoint=100, name=None, memory=10, c1=1e-4, shrink=0.5):
        super(LBFGSSolver, self).__init__(gtol, max_iter, starts, seed, perturbation,
                                          verbose, checkpoint, name)
        self.memory = memory
        self.c1 = c1
        self.shrink = shrink

    def _validate_params(self):
        super(LBFGSSolver, self)._validate_params()
        if not isinstance(self.memory, int) or self.memory < 1:
            raise ValueError("memory must be a positive integer.")
        if not 0 < self.c1 < 1:
            raise ValueError("c1 must lie in (0, 1).")
        if not 0 < self.shrink < 1:
            raise ValueError("shrink must lie in (0, 1).")

    @staticmethod
    def _direction(g, pairs):
        """Two-loop recursion for -H g."""
        q = g.copy()
        alphas = []
        for s, y, rho in reversed(pairs):
            a = rho * (s @ q)
            alphas.append(a)
            q -= a * y
        if pairs:
            s, y, _ = pairs[-1]
            q *= (s @ y) / (y @ y)
        for (s, y, rho), a in zip(pairs, reversed(alphas)):
            b = rho * (y @ q)
            q += (a - b) * s
        return -q

    def _minimize(self, objective, x0):
        x = np.array(x0, dtype=float)
        E, g = objective.value_and_gradient(x)
        pairs = deque(maxlen=self.memory)
        cap = self.iteration_cap(objective)
        iteration = 0
        while _supnorm(g) > self.tolerance and iteration < cap and not self.stalled:
            d = self._direction(g, pairs)
            slope = g @ d
            if slope >= 0:
                pairs.clear()
                d = -g
                slope = g @ d
            t = 1.0 if pairs else min(1.0, 1.0 / max(_supnorm(g), 1e-300))
            while True:
                x_new = x + t * d
                E_new = objective.value(x_new)
                if E_new <= E + self.c1 * t * slope:
                    break
                t *= self.shrink
                if t * _supnorm(d) < 1e-16 * max(1.0, _supnorm(x)):
                    logger.debug("line search failed at iteration %d", iteration)
                    return x, iteration, False
            g_new = objective.gradient(x_new)
            s, y = x_new - x, g_new - g
            if s @ y > 1e-12 * np.linalg.norm(s) * np.linalg.norm(y):
                pairs.append((s, y, 1.0 / (s @ y)))
            x, E, g = x_new, E_new, g_new
            iteration += 1
            self._report(iteration, x, E, g, t)
        return x, iteration, _supnorm(g) <= self.tolerance

# --------------------------------------------------------------------------- #
#                              BRUTE ORACLE                                   #
# --------------------------------------------------------------------------- #
class BruteOracle(CellMinimizer):
    """Exhaustive minimizer of desk-scale instances.

    Parameters
    ----------
    grid : int, optional (default=11)
        Grid points per coordinate of the enumeration.

    span : float, optional
        Half-width of the enumeration box around the start; defaults to
        max(1, 2 max |x0|).

    max_dense : int, optional (default=2000)
        Largest number of free coordinates of the dense quadratic solve.

    max_grid : int, optional (default=6)
        Largest number of free coordinates of the enumeration.
    """

    DEFAULT_GTOL = 1e-8
    METHOD = 'brute-oracle'

    def __init__(self, gtol=None, max_iter=None, starts=1, seed=0, perturbation=0.1,
                 verbose=False, checkpoint=100, name=None, grid=11, span=None,
                 max_dense=2000, max_grid=6):
        super(BruteOracle, self).__init__(gtol, max_iter, starts, seed, perturbation,
                                          verbose, checkpoint, name)
        self.grid = grid
        self.span = span
        self.max_dense = max_dense
        self.max_grid = max_grid

    def _begin_solve(self, problem):
        super(BruteOracle, self)._begin_solve(problem)
        size = self.objective.size
        quadratic = self.objective.is_quadratic
        if (quadratic and size > self.max_dense) or (not quadratic and size > self.max_grid):
            raise InstanceTooLargeError("brute oracle limited to %d coordinates "
                                        "(%s energy), got %d"
                                        % (self.max_dense if quadratic else self.max_grid,
                                           'quadratic' if quadratic else 'non-quadratic',
                                           size))

    def dense_hessian(self, objective):
        n = objective.size
        H = np.empty((n, n))
        for k in range(n):
            e = np.zeros(n)
            e[k] = 1.0
            H[:, k] = objective.hessp(e)
        return 0.5 * (H + H.T)

    def _minimize(self, objective, x0):
        if objective.is_quadratic:
            H = self.dense_hessian(objective)
            g0 = objective.gradient(x0)
            d = np.linalg.lstsq(H, -g0, rcond=None)[0]
            x = x0 + d
            self._report(1, x, objective.value(x), objective.gradient(x), 1.0)
            return x, 1, _supnorm(objective.gradient(x)) <= self.tolerance
        span = self.span or max(1.0, 2.0 * _supnorm(x0))
        ranges = [(a - span, a + span) for a in x0]
        coarse = brute(objective.value, ranges, Ns=self.grid, finish=None)
        coarse = np.atleast_1d(coarse)
        best = x0 if objective.value(x0) <= objective.value(coarse) else coarse
        polished = minimize(objective.value, best, jac=objective.gradient, method='BFGS',
                            options={'gtol': 0.1 * self.tolerance,
                                     'maxiter': self.iteration_cap(objective)})
        x = polished.x if polished.fun <= objective.value(best) else best
        self._report(int(polished.nit), x, objective.value(x), objective.gradient(x), 1.0)
        return x, int(polished.nit), _supnorm(objective.gradient(x)) <= self.tolerance

# --------------------------------------------------------------------------- #
#                           MINIMIZER FACTORY                                 #
# --------------------------------------------------------------------------- #
class MinimizerFactory():
    """Returns the minimizer for a method name."""

    def __call__(self, method='auto', potential=None, **params):
        dispatcher = {'exact-quadratic': ConjugateGradientSolver,
                      'iterative-first-order': LBFGSSolver,
                      'brute-oracle': BruteOracle}
        if method == 'auto':
            if potential is None:
                raise ValueError("method 'auto' needs the potential.")
            method = 'exact-quadratic' if potential.is_quadratic else 'iterative-first-order'
        if method not in dispatcher:
            raise ValueError("method must be one of 'auto', %s." % ", ".join(
                "'%s'" % k for k in dispatcher))
        return dispatcher[method](**params)

def solve(problem, method='auto', gtol=None, max_iter=None, starts=1, seed=0,
          initial=None, verbose=False):
    """Minimizes a cell problem with the requested method."""
    minimizer = MinimizerFactory()(method, problem.potential, gtol=gtol, max_iter=max_iter,
                                   starts=starts, seed=seed, verbose=verbose)
    return minimizer.solve(problem, initial=initial)

def brute_oracle(problem, grid=11, span=None):
    """Certifying minimum of a desk-scale instance."""
    return BruteOracle(grid=grid, span=span).solve(problem)
