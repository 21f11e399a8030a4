# =========================================================================== #
#                     TEST TILING AND SUBADDITIVITY                           #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.cellsolver.problem import CellProblem
from lattice_studio.cellsolver.solvers import solve
from lattice_studio.homogenize.tiling import subadditivity_check, tile_field, tile_layout
from lattice_studio.lattice.domain import LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.utils.exceptions import ConfigurationError

class TileLayoutTests:

    @mark.homogenize
    @mark.tiling
    def test_layout(self):
        assert tile_layout(8, 32) == (3, 4)
        assert tile_layout(8, 16, m=1) == (1, 4)
        assert tile_layout(8, 16, m=1, period=3) == (1, 3)
        with pytest.raises(ValueError):
            tile_layout(8, 8)

    @mark.homogenize
    @mark.tiling
    def test_layout_keeps_tiles_off_the_frozen_layer(self):
        for L, S in [(4, 8), (8, 16), (16, 32), (8, 64)]:
            K, offset = tile_layout(L, S)
            m_L, m_S = int(np.sqrt(L)), int(np.sqrt(S))
            if K:
                assert offset + m_L >= m_S
                assert offset + K * L - m_L <= S - m_S

class TileFieldTests:

    @mark.homogenize
    @mark.tiling
    @pytest.mark.parametrize("N", [1, 2])
    def test_tile_field(self, N, rng):
        M = np.eye(N)[:1]
        domain = LatticeDomain.cell(8, N=N)
        u = LatticeField(domain, LatticeField.affine(domain, M).values
                         + rng.normal(size=domain.shape + (1,)))
        v = tile_field(u, 8, 32, M)
        assert v.domain.shape == (32,) * N
        corner = np.array([4 + 8] * N)
        block = tuple(slice(c, c + 8) for c in corner)
        assert np.allclose(v.values[block], u.values + M @ corner)
        assert np.allclose(v.values[(0,) * N], 0.0)
        assert np.allclose(v.values[(31,) * N], M @ np.full(N, 31.0))

    @mark.homogenize
    @mark.tiling
    def test_tile_field_validation(self, nn_1d):
        u = LatticeField.zeros(LatticeDomain.cell(6))
        with pytest.raises(ConfigurationError):
            tile_field(u, 8, 32, [[1.0]])
        with pytest.raises(ConfigurationError):
            tile_field(u, 6, 32, [[1.0, 2.0]])

    @mark.homogenize
    @mark.tiling
    def test_tiled_minimizer_is_admissible(self, chain):
        solution = solve(CellProblem(chain, [[1.0]], 8, m=1))
        v = tile_field(solution, 8, 32, [[1.0]], m=1, period=2)
        assert CellProblem(chain, [[1.0]], 32, m=1).is_admissible(v, atol=1e-12)

class SubadditivityTests:

    @mark.homogenize
    @mark.tiling
    def test_two_spring_chain(self, chain):
        result = subadditivity_check(chain, [[1.0]], 8, 32, m=1)
        assert result.tiles == 3
        assert result.F_L == pytest.approx(1.5)
        assert result.F_S == pytest.approx(1.5)
        assert result.tiled == pytest.approx(52.0 / 32.0)
        assert result.scaled == pytest.approx(0.75 * 1.5)
        assert result.passed(1e-8)
        assert not result.upper_bound
        assert set(result.to_dict()) >= {'L', 'S', 'residual', 'correction'}

    @mark.homogenize
    @mark.tiling
    def test_nearest_neighbour_2d(self, nn_2d):
        M = [[1.0, 0.5], [0.0, 1.0]]
        result = subadditivity_check(nn_2d, M, 4, 16)
        assert result.residual <= 1e-8
        assert result.F_S == pytest.approx(2.25, rel=1e-8)

    @mark.homogenize
    @mark.tiling
    def test_sides_must_respect_the_period(self, chain):
        with pytest.raises(ConfigurationError):
            subadditivity_check(chain, [[1.0]], 7, 32)
