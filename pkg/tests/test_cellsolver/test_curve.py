# =========================================================================== #
#                          TEST INFIMUM CURVES                                #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.cellsolver.curve import dirichlet_infimum_curve

class InfimumCurveTests:

    @mark.cellsolver
    def test_two_spring_chain_curve(self, chain):
        curve = dirichlet_infimum_curve(chain, [[1.0]], m=1, schedule=(8, 16, 32))
        assert [L for L, _ in curve.points] == [8, 16, 32]
        assert np.allclose(curve.values, 1.5, atol=1e-10)
        assert np.allclose(curve.differences(), 0.0, atol=1e-10)
        assert curve.richardson() == pytest.approx(1.5, abs=1e-9)
        assert curve.within_bound(chain)
        assert curve.growth_bound(chain) == pytest.approx(6.0)

    @mark.cellsolver
    def test_curve_records(self, nn_2d):
        M = [[1.0, 0.0], [0.0, 1.0]]
        curve = dirichlet_infimum_curve(nn_2d, M, schedule=(4, 8))
        frame = curve.to_frame()
        assert list(frame.columns) == ['L', 'm', 'F_L', 'gradnorm', 'iterations', 'converged']
        assert frame['m'].tolist() == [2, 2]
        record = curve.to_dict()
        assert record['M'] == M
        assert len(record['differences']) == 1
        single = dirichlet_infimum_curve(nn_2d, M, schedule=(4,))
        assert single.richardson() is None

    @mark.cellsolver
    def test_curve_validation(self, nn_1d):
        with pytest.raises(ValueError):
            dirichlet_infimum_curve(nn_1d, [[1.0]], schedule=())
        with pytest.raises(ValueError):
            dirichlet_infimum_curve(nn_1d, [[1.0]], schedule=(16, 8))
        with pytest.raises(ValueError):
            dirichlet_infimum_curve(nn_1d, [[1.0]], schedule=(8, 8))
