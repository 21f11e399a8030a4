# =========================================================================== #
#                          TEST CELL PROBLEMS                                 #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.cellsolver.problem import CellProblem, assemble, boundary_width
from lattice_studio.lattice.field import LatticeField

class BoundaryWidthTests:

    @mark.cellsolver
    def test_boundary_width(self):
        assert boundary_width(16) == 4
        assert boundary_width(15) == 3
        assert boundary_width(2) == 1
        assert boundary_width(8, 2) == 2
        for bad in (0, -1, True, 1.5, 'half'):
            with pytest.raises(ValueError):
                boundary_width(8, bad)

class CellProblemTests:

    @mark.cellsolver
    def test_free_sites(self, nn_1d, nn_2d):
        problem = CellProblem(nn_1d, [[1.0]], 8, m=2)
        assert problem.free_mask().tolist() == [False, False, True, True, True,
                                                True, True, False]
        assert problem.n_free_sites == 5
        square = CellProblem(nn_2d, np.eye(2), 8, m=2)
        assert square.n_free_sites == 25
        assert square.volume == 64.0

    @mark.cellsolver
    def test_no_free_sites(self, nn_1d):
        problem = CellProblem(nn_1d, [[1.0]], 3, m=2)
        assert problem.n_free_sites == 0
        assert assemble(problem).size == 0

    @mark.cellsolver
    def test_problem_validation(self, nn_1d, nn_2d):
        with pytest.raises(TypeError):
            CellProblem('nearest-neighbour', [[1.0]], 8)
        with pytest.raises(ValueError):
            CellProblem(nn_1d, [[1.0]], 0)
        with pytest.raises(ValueError):
            CellProblem(nn_1d, [[1.0]], True)
        with pytest.raises(ValueError):
            CellProblem(nn_2d, [1.0, 2.0, 3.0], 8)
        with pytest.raises(ValueError):
            CellProblem(nn_1d, [[1.0]], 8, m=0)

    @mark.cellsolver
    def test_flat_slopes_are_row_major(self, nn_2d):
        problem = CellProblem(nn_2d, [1.0, 2.0, 3.0, 4.0], 4, m=1)
        assert problem.M.tolist() == [[1.0, 2.0], [3.0, 4.0]]

    @mark.cellsolver
    def test_admissibility(self, nn_2d, rng):
        problem = CellProblem(nn_2d, [[1.0, 0.5], [0.0, 2.0]], 6, m=1)
        affine = problem.affine_field()
        assert problem.is_admissible(affine)
        noisy = LatticeField(problem.domain, affine.values + rng.normal(size=affine.values.shape))
        assert not problem.is_admissible(noisy)

    @mark.cellsolver
    def test_affine_energy_matches_cauchy_born(self, chain):
        problem = CellProblem(chain, [[2.0]], 8, m=1)
        assert problem.energy(problem.affine_field()) / problem.volume == pytest.approx(
            problem.cauchy_born())
        record = problem.to_dict()
        assert record['L'] == 8 and record['m'] == 1 and record['free_sites'] == 7

class CellObjectiveTests:

    @mark.cellsolver
    def test_objective_round_trip(self, nn_2d):
        problem = CellProblem(nn_2d, [[1.0, 0.0], [0.5, 1.0]], 6, m=2)
        objective = assemble(problem)
        assert objective.size == 9 * 2
        x = objective.start()
        assert np.array_equal(objective.field(x).values, problem.affine_field().values)
        assert np.array_equal(objective.coordinates(objective.field(x)), x)
        assert objective.value(x) == pytest.approx(problem.energy(problem.affine_field()))

    @mark.cellsolver
    def test_objective_gradient(self, determinant_2d, rng):
        problem = CellProblem(determinant_2d, np.eye(2), 4, m=1)
        objective = assemble(problem)
        x = objective.start() + 0.1 * rng.normal(size=objective.size)
        numeric = np.zeros(objective.size)
        h = 1e-6
        for k in range(objective.size):
            e = np.zeros(objective.size)
            e[k] = h
            numeric[k] = (objective.value(x + e) - objective.value(x - e)) / (2 * h)
        assert np.allclose(objective.gradient(x), numeric, rtol=1e-5, atol=1e-6)

    @mark.cellsolver
    def test_hessian_vector_product(self, window_potential, rng):
        problem = CellProblem(window_potential, [[1.0]], 8, m=1)
        objective = assemble(problem)
        x = objective.start()
        v = rng.normal(size=objective.size)
        expected = objective.gradient(x + v) - objective.gradient(x)
        assert np.allclose(objective.hessp(v), expected, atol=1e-10)
