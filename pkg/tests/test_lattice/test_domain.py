# =========================================================================== #
#                             TEST DOMAINS                                    #
# =========================================================================== #
#%%
import numpy as np
import pytest
from pytest import mark

from lattice_studio.lattice.domain import DirectionOffset, ExtensionPolicy, LatticeDomain
from lattice_studio.utils.exceptions import ConfigurationError

class LatticeDomainTests:

    @mark.lattice
    def test_domain_cube_counts(self):
        domain = LatticeDomain.cube(1.0, epsilon=0.25, N=2)
        assert domain.shape == (4, 4), "half-open unit cube has 4 points per axis"
        assert domain.size == 16, "size is the product of the shape"
        assert np.allclose(domain.points()[0], [-0.5, -0.5]), "first point is the lower corner"

    @mark.lattice
    def test_domain_open_closure_drops_lower_face(self):
        closed = LatticeDomain.box([0.0], [1.0], epsilon=0.25)
        opened = LatticeDomain.box([0.0], [1.0], epsilon=0.25, closure='open')
        assert closed.shape == (4,), "half-open box keeps the lower face"
        assert opened.shape == (3,), "open box drops the lower face"

    @mark.lattice
    def test_domain_cell_and_depth(self):
        domain = LatticeDomain.cell(6, N=1)
        assert domain.indices().ravel().tolist() == [0, 1, 2, 3, 4, 5]
        assert domain.depth().tolist() == [0, 1, 2, 3, 2, 1], "depth counts sites to the boundary"

    @mark.lattice
    def test_domain_position_and_contains(self, square):
        assert square.contains((5, 0))
        assert not square.contains((6, 0))
        assert square.position((2, 3)) == (2, 3)
        with pytest.raises(KeyError):
            square.position((-1, 0))

    @mark.lattice
    def test_domain_validation(self):
        with pytest.raises(ValueError):
            LatticeDomain([0], [3], epsilon=0.0)
        with pytest.raises(ValueError):
            LatticeDomain.box([0.0], [0.0])
        with pytest.raises(ValueError):
            LatticeDomain.cell(0)
        with pytest.raises(ValueError):
            LatticeDomain.cell(4).subdomain([2], [5])

    @mark.lattice
    def test_domain_equality(self):
        assert LatticeDomain.cell(4, N=2) == LatticeDomain.cell(4, N=2)
        assert LatticeDomain.cell(4, N=2) != LatticeDomain.cell(4, N=2, n=2)
        assert LatticeDomain.cell(4, N=2).same_sites(LatticeDomain.cell(4, N=2, n=2))

class DirectionOffsetTests:

    @mark.lattice
    def test_offset_norms(self):
        xi = DirectionOffset((3, -4))
        assert xi.euclidean == 5.0
        assert xi.l1 == 7
        assert xi.linf == 4
        assert not xi.is_unit
        assert (-xi).xi == (-3, 4)
        assert DirectionOffset.unit(1, 3, sign=-1).xi == (0, -1, 0)

    @mark.lattice
    def test_offset_zero_rejected(self):
        with pytest.raises(ValueError):
            DirectionOffset((0, 0))

class ExtensionPolicyTests:

    @mark.lattice
    def test_policy_values(self):
        coords = np.array([[2, 1]])
        affine = ExtensionPolicy.affine([[1.0, 2.0]], b=[0.5])
        assert np.allclose(affine.values_at(coords, 0.5, 1), [[2.5]])
        assert np.all(ExtensionPolicy.zero().values_at(coords, 1.0, 2) == 0.0)
        assert np.isnan(ExtensionPolicy.error().values_at(coords, 1.0, 1)).all()

    @mark.lattice
    def test_policy_validation(self):
        with pytest.raises(ValueError):
            ExtensionPolicy('mirror')
        with pytest.raises(ValueError):
            ExtensionPolicy('affine')
        with pytest.raises(ConfigurationError):
            ExtensionPolicy.affine([[1.0]]).values_at(np.zeros((1, 2), dtype=int), 1.0, 1)
