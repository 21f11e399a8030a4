# =========================================================================== #
#                      TEST CUT-OFFS AND EMBEDDINGS                           #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.lattice.cutoff import CutoffFunction, blend, blend_expansion
from lattice_studio.lattice.domain import ExtensionPolicy, LatticeDomain
from lattice_studio.lattice.embedding import piecewise_constant_embedding
from lattice_studio.lattice.field import LatticeField, difference_quotient
from lattice_studio.utils.exceptions import ConfigurationError, WindowError

class CutoffFunctionTests:

    @mark.lattice
    def test_cutoff_plateau(self, square):
        psi = CutoffFunction.plateau(square, (2, 2), 1.0, 3.0)
        assert psi.values[2, 2] == 1.0
        assert psi.values[3, 3] == 1.0
        assert psi.values[5, 5] == 0.0
        assert psi.measured_bound <= psi.gradient_bound + 1e-12
        assert psi.gradient_bound == pytest.approx(0.5)

    @mark.lattice
    def test_cutoff_validation(self, square):
        with pytest.raises(ValueError):
            CutoffFunction(square, np.full(square.shape, 1.5))
        with pytest.raises(ValueError):
            CutoffFunction.plateau(square, (0, 0), 2.0, 1.0)
        with pytest.raises(ValueError):
            CutoffFunction(square, CutoffFunction.spike(square, (2, 2)).values,
                           gradient_bound=0.5)

    @mark.lattice
    def test_cutoff_constant(self, square):
        psi = CutoffFunction.constant(square, 0.3)
        assert psi.gradient_bound == 0.0
        assert np.allclose(psi.as_field().values, 0.3)

class BlendTests:

    @mark.lattice
    def test_blend_identity(self, square, random_field, rng):
        w = LatticeField(square, rng.normal(size=square.shape + (2,)))
        psi = CutoffFunction(square, rng.uniform(size=square.shape))
        v = blend(random_field, w, psi)
        for x, xi in [((0, 0), (1, 0)), ((1, 2), (2, 3)), ((4, 4), (-3, 1))]:
            lhs = difference_quotient(v, x, xi)
            rhs = blend_expansion(random_field, w, psi, x, xi)
            assert np.allclose(lhs, rhs, atol=1e-12)

    @mark.lattice
    def test_blend_endpoints(self, square, random_field):
        w = LatticeField.zeros(square)
        assert np.allclose(blend(random_field, w, CutoffFunction.constant(square, 1.0)).values,
                           random_field.values)
        assert np.allclose(blend(random_field, w, CutoffFunction.constant(square, 0.0)).values, 0.0)

    @mark.lattice
    def test_blend_errors(self, square, random_field):
        psi = CutoffFunction.constant(square, 0.5)
        with pytest.raises(ConfigurationError):
            blend(random_field, LatticeField.zeros(LatticeDomain.cell(5, N=2, n=2)), psi)
        with pytest.raises(WindowError):
            blend_expansion(random_field, random_field, psi, (5, 5), (1, 0))

class EmbeddingTests:

    @mark.lattice
    def test_embedding_nearest_point(self):
        u = LatticeField(LatticeDomain.cell(4), [0.0, 1.0, 2.0, 3.0])
        f = piecewise_constant_embedding(u)
        x = np.array([[1.5], [1.6], [0.2], [10.0]])
        assert f(x).ravel().tolist() == [1.0, 2.0, 0.0, 0.0]

    @mark.lattice
    def test_embedding_norms(self):
        u = LatticeField(LatticeDomain.cell(4), [0.0, 1.0, 2.0, 3.0])
        f = piecewise_constant_embedding(u)
        assert f.norm(2) == pytest.approx(np.sqrt(14.0))
        assert f.norm(np.inf) == 3.0
        with pytest.raises(ValueError):
            f.norm(0.5)
        with pytest.raises(ValueError):
            f(np.zeros((2, 2)))

    @mark.lattice
    def test_embedding_norm_integrates_over_the_region(self):
        u = LatticeField.constant(LatticeDomain.box([0.0], [2.5]), 2.0)
        f = piecewise_constant_embedding(u)
        assert f.norm(2) == pytest.approx(2.0 * np.sqrt(2.5))
        assert f.norm(1) == pytest.approx(5.0)
        sites, weights = f.cell_weights()
        assert sites.ravel().tolist() == [0, 1, 2]
        assert weights.tolist() == pytest.approx([0.5, 1.0, 1.0])

    @mark.lattice
    def test_embedding_norm_on_a_fine_planar_box(self):
        domain = LatticeDomain.box([0.0, 0.0], [1.25, 0.75], epsilon=0.5, n=2)
        f = piecewise_constant_embedding(LatticeField.constant(domain, [3.0, 4.0]))
        assert f.cell_weights()[1].sum() == pytest.approx(1.25 * 0.75)
        assert f.norm(2) == pytest.approx(5.0 * np.sqrt(1.25 * 0.75))
        assert f.norm(np.inf) == pytest.approx(5.0)

    @mark.lattice
    def test_embedding_norm_uses_the_extension_past_the_last_cell(self):
        u = LatticeField.zeros(LatticeDomain.box([0.0], [2.7]))
        assert piecewise_constant_embedding(u).norm(1) == 0.0
        f = piecewise_constant_embedding(u, ExtensionPolicy.affine([[1.0]]))
        assert f.norm(1) == pytest.approx(0.2 * 3.0)
