# =========================================================================== #
#                            TEST CELL SOLVERS                                #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.cellsolver.monitor import StallMonitor
from lattice_studio.cellsolver.problem import CellProblem
from lattice_studio.cellsolver.solvers import (BruteOracle, ConjugateGradientSolver,
                                               LBFGSSolver, MinimizerFactory, brute_oracle,
                                               solve)
from lattice_studio.lattice.field import LatticeField
from lattice_studio.potentials.determinant import DeterminantPotential
from lattice_studio.potentials.pair import PairPotential
from lattice_studio.potentials.periodic import make_periodic
from lattice_studio.utils.exceptions import InstanceTooLargeError

@pytest.fixture(scope='module')
def quartic():
    return PairPotential.nearest_neighbour(N=1, p=4.0)

def perturbed(problem, rng, scale=0.3):
    affine = problem.affine_field()
    noise = scale * rng.normal(size=affine.values.shape) * problem.free_mask()[..., np.newaxis]
    return LatticeField(problem.domain, affine.values + noise)

class ConjugateGradientTests:

    @mark.cellsolver
    def test_nearest_neighbour_1d_is_affine(self, nn_1d):
        solution = solve(CellProblem(nn_1d, [[1.7]], 16, m=2))
        assert solution.method == 'exact-quadratic'
        assert solution.per_volume_energy == pytest.approx(1.7 ** 2, rel=1e-12)
        assert solution.converged
        assert not solution.upper_bound

    @mark.cellsolver
    def test_nearest_neighbour_2d(self, nn_2d):
        M = np.array([[1.0, -0.5], [0.25, 2.0]])
        solution = solve(CellProblem(nn_2d, M, 8))
        assert solution.per_volume_energy == pytest.approx(np.sum(M ** 2), rel=1e-10)
        zero = solve(CellProblem(nn_2d, np.zeros((2, 2)), 8))
        assert zero.per_volume_energy == pytest.approx(0.0, abs=1e-14)

    @mark.cellsolver
    def test_two_spring_chain(self, chain, rng):
        problem = CellProblem(chain, [[1.0]], 32, m=1)
        solution = solve(problem, initial=perturbed(problem, rng))
        assert solution.per_volume_energy == pytest.approx(1.5, rel=1e-10)
        assert solution.per_volume_energy < problem.cauchy_born()
        assert problem.is_admissible(solution.field)
        assert solution.gradnorm <= 1e-7

    @mark.cellsolver
    def test_rejects_non_quadratic(self, quartic):
        with pytest.raises(ValueError):
            solve(CellProblem(quartic, [[1.0]], 8), method='exact-quadratic')

    @mark.cellsolver
    def test_no_free_sites(self, nn_1d):
        solution = solve(CellProblem(nn_1d, [[2.0]], 3, m=2))
        assert solution.notes == ["no free sites"]
        assert solution.converged
        assert solution.iterations == 0
        assert solution.per_volume_energy == pytest.approx(4.0)

class LBFGSTests:

    @mark.cellsolver
    def test_lbfgs_history_is_monotone(self, determinant_2d, rng):
        problem = CellProblem(determinant_2d, [[1.0, 0.2], [0.0, 1.0]], 6, m=1)
        solver = LBFGSSolver()
        solution = solver.solve(problem, initial=perturbed(problem, rng, 0.2))
        energies = solution.history['energy']
        assert len(energies) == solution.iterations > 0
        assert all(b <= a for a, b in zip(energies, energies[1:]))
        assert solution.upper_bound
        assert solver.converged_ == solution.converged
        assert "Solve Summary" in solver.summary()

    @mark.cellsolver
    def test_lbfgs_matches_exact_solve(self, chain, rng):
        problem = CellProblem(chain, [[1.0]], 16, m=1)
        exact = solve(problem)
        iterative = solve(problem, method='iterative-first-order',
                          initial=perturbed(problem, rng))
        assert iterative.converged
        assert iterative.per_volume_energy == pytest.approx(exact.per_volume_energy, abs=1e-8)

    @mark.cellsolver
    def test_multistart_is_reproducible(self, quartic):
        problem = CellProblem(quartic, [[1.0]], 8, m=1)
        first = solve(problem, method='iterative-first-order', starts=3, seed=11)
        second = solve(problem, method='iterative-first-order', starts=3, seed=11)
        assert first.per_volume_energy == second.per_volume_energy
        assert first.upper_bound

    @mark.cellsolver
    def test_lbfgs_validation(self, chain):
        problem = CellProblem(chain, [[1.0]], 8, m=1)
        with pytest.raises(ValueError):
            LBFGSSolver(gtol=-1.0).solve(problem)
        with pytest.raises(TypeError):
            LBFGSSolver(max_iter=2.5).solve(problem)
        with pytest.raises(ValueError):
            LBFGSSolver(memory=0).solve(problem)
        with pytest.raises(ValueError):
            LBFGSSolver(c1=1.5).solve(problem)
        with pytest.raises(ValueError):
            LBFGSSolver().set_params(starts=0)
        with pytest.raises(ValueError):
            LBFGSSolver().solve(problem, initial=LatticeField.zeros(
                CellProblem(chain, [[1.0]], 6).domain))

    @mark.cellsolver
    def test_iteration_cap(self, quartic, rng):
        problem = CellProblem(quartic, [[1.0]], 16, m=1)
        solution = solve(problem, method='iterative-first-order', max_iter=1,
                         initial=perturbed(problem, rng, 1.0))
        assert not solution.converged
        assert any(note.startswith("not converged") for note in solution.notes)

class BruteOracleTests:

    @mark.cellsolver
    @mark.oracle
    def test_oracle_agrees_with_conjugate_gradients(self, nn_1d):
        problem = CellProblem(nn_1d, [[0.8]], 4, m=1)
        oracle = brute_oracle(problem)
        exact = solve(problem)
        assert oracle.method == 'brute-oracle'
        assert oracle.per_volume_energy == pytest.approx(exact.per_volume_energy, abs=1e-10)

    @mark.cellsolver
    @mark.oracle
    def test_oracle_bounds_iterative_on_window(self, window_potential, rng):
        problem = CellProblem(window_potential, [[1.0]], 6, m=1)
        oracle = brute_oracle(problem)
        iterative = solve(problem, method='iterative-first-order',
                          initial=perturbed(problem, rng))
        assert oracle.per_volume_energy <= iterative.per_volume_energy + 1e-6

    @mark.cellsolver
    @mark.oracle
    def test_oracle_on_non_quadratic(self, quartic, rng):
        problem = CellProblem(quartic, [[1.0]], 6)
        assert problem.n_free_sites == 3
        oracle = brute_oracle(problem)
        iterative = solve(problem, method='iterative-first-order',
                          initial=perturbed(problem, rng))
        assert oracle.per_volume_energy == pytest.approx(iterative.per_volume_energy, abs=1e-6)
        assert oracle.per_volume_energy == pytest.approx(1.0, abs=1e-6)

    @mark.cellsolver
    @mark.oracle
    def test_oracle_refuses_large_instances(self, nn_1d, quartic):
        with pytest.raises(InstanceTooLargeError):
            BruteOracle(max_dense=3).solve(CellProblem(nn_1d, [[1.0]], 8, m=1))
        with pytest.raises(InstanceTooLargeError):
            brute_oracle(CellProblem(quartic, [[1.0]], 16, m=1))

# --------------------------------------------------------------------------- #
#                             ORACLE CORPUS                                   #
# --------------------------------------------------------------------------- #
def smooth_determinant():
    """Determinant family with g(det) = det^2 and quartic bonds."""
    tuples = [(((1, 0), (0, 1)), 1.0), (((1, 1), (-1, 1)), 0.25)]
    return DeterminantPotential(tuples, N=2, n=2, p=4.0, q=2.0)

ORACLE_CORPUS = [
    ('nn_1d', [[0.8]], 4, 1),
    ('nn_1d', [[-1.3]], 9, 'sqrt'),
    ('nn_2d', [[1.0, -0.5], [0.25, 2.0]], 6, 1),
    ('chain', [[1.0]], 8, 1),
    ('window_potential', [[0.7]], 8, 2),
    ('lj', [[0.5, -0.25, 1.0]], 4, 1),
    ('periodic_chain', [[1.2]], 8, 1),
    ('periodic_nn_2d', [[0.3, 1.1], [-0.6, 0.4]], 4, 1),
    ('quartic', [[1.0]], 6, 'sqrt'),
    ('quartic', [[-0.7]], 5, 1),
    ('quartic_2d', [[0.9, -0.4]], 3, 1),
    ('smooth_determinant', [[1.0, 0.3], [-0.2, 0.8]], 2, 1),
]

@pytest.fixture(scope='module')
def corpus_potentials(nn_1d, nn_2d, chain, window_potential, lj, quartic):
    return {'nn_1d': nn_1d, 'nn_2d': nn_2d, 'chain': chain,
            'window_potential': window_potential, 'lj': lj,
            'periodic_chain': make_periodic(chain),
            'periodic_nn_2d': make_periodic(nn_2d),
            'quartic': quartic,
            'quartic_2d': PairPotential.nearest_neighbour(N=2, p=4.0),
            'smooth_determinant': smooth_determinant()}

class OracleCorpusTests:

    @mark.cellsolver
    @mark.oracle
    @pytest.mark.parametrize("name,M,L,m", ORACLE_CORPUS)
    def test_solver_matches_oracle(self, corpus_potentials, name, M, L, m):
        potential = corpus_potentials[name]
        problem = CellProblem(potential, M, L, m=m)
        assert problem.n_free_sites > 0
        tolerance = MinimizerFactory()('auto', potential).tolerance
        solution = solve(problem)
        oracle = brute_oracle(problem)
        assert solution.converged, solution.notes
        assert abs(solution.per_volume_energy - oracle.per_volume_energy) <= 10 * tolerance

    @mark.cellsolver
    @mark.oracle
    def test_corpus_covers_every_family(self, corpus_potentials):
        kinds = {type(p).__name__ for p in corpus_potentials.values()}
        assert {'PairPotential', 'LJLinearizedPotential', 'PeriodicComposite',
                'DeterminantPotential'} <= kinds
        assert len(ORACLE_CORPUS) >= 10
        quadratic = {name for name, *_ in ORACLE_CORPUS if corpus_potentials[name].is_quadratic}
        assert quadratic and quadratic != {name for name, *_ in ORACLE_CORPUS}

    @mark.cellsolver
    @pytest.mark.parametrize("method", ['exact-quadratic', 'iterative-first-order'])
    def test_converged_flag_means_gradient_within_gtol(self, chain, rng, method):
        problem = CellProblem(chain, [[1.0]], 16, m=1)
        solution = solve(problem, method=method, initial=perturbed(problem, rng))
        tolerance = MinimizerFactory()(method, chain).tolerance
        assert solution.converged
        assert solution.gradnorm <= tolerance

    @mark.cellsolver
    def test_iteration_cap_leaves_flag_down(self, chain, rng):
        problem = CellProblem(chain, [[1.0]], 16, m=1)
        solution = solve(problem, method='iterative-first-order', max_iter=2,
                         initial=perturbed(problem, rng, 1.0))
        assert solution.gradnorm > LBFGSSolver.DEFAULT_GTOL
        assert not solution.converged

class MinimizerFactoryTests:

    @mark.cellsolver
    def test_factory_dispatch(self, nn_1d, quartic):
        factory = MinimizerFactory()
        assert isinstance(factory('auto', nn_1d), ConjugateGradientSolver)
        assert isinstance(factory('auto', quartic), LBFGSSolver)
        assert isinstance(factory('brute-oracle'), BruteOracle)
        assert factory('iterative-first-order', gtol=1e-4).tolerance == 1e-4
        with pytest.raises(ValueError):
            factory('newton', nn_1d)
        with pytest.raises(ValueError):
            factory('auto')

class StallMonitorTests:

    @mark.cellsolver
    def test_stall_monitor_sets_flag(self):
        solver = LBFGSSolver()
        monitor = StallMonitor(patience=2)
        monitor.set_model(solver)
        monitor.on_solve_begin()
        monitor.on_start_begin(0)
        for energy in (1.0, 1.0, 1.0):
            monitor.on_iteration_end(0, {'energy': energy})
        assert solver.stalled
        monitor.on_start_begin(1)
        assert not solver.stalled

    @mark.cellsolver
    def test_stall_monitor_validation(self):
        monitor = StallMonitor(precision=1)
        with pytest.raises(TypeError):
            monitor.on_solve_begin()
        with pytest.raises(TypeError):
            StallMonitor(patience=0).on_solve_begin()
