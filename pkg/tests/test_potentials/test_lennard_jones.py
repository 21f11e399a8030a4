# =========================================================================== #
#                    TEST LINEARIZED LENNARD-JONES                            #
# =========================================================================== #
#%%
import math

import numpy as np
import pytest
from pytest import mark

from lattice_studio.lattice.domain import ExtensionPolicy, LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.potentials.energy import energy
from lattice_studio.potentials.lennard_jones import (LJLinearizedPotential, LJRawPotential,
                                                     SIGN_CHANGE, lj_coercivity_margin,
                                                     lj_decay_coefficients, lj_margin_table,
                                                     lj_regroup, lj_truncation_coefficients,
                                                     lj_vpp)

class LJSecondDerivativeTests:

    @mark.lennard_jones
    def test_vpp_values(self):
        assert lj_vpp(1.0) == 72.0
        assert lj_vpp(math.sqrt(2.0)) == pytest.approx(-4.03125)
        assert lj_vpp(SIGN_CHANGE) == pytest.approx(0.0, abs=1e-12)
        assert np.all(lj_vpp(np.array([2.0, 3.0])) < 0)
        with pytest.raises(ValueError):
            lj_vpp(0.0)

class LJMarginTests:

    @mark.lennard_jones
    def test_margin_at_two(self):
        exact = 72.0 - 12 * 4.03125 - 21 * abs(156.0 / 2 ** 14 - 84.0 / 2 ** 8)
        margin, tail = lj_coercivity_margin(2)
        assert margin == pytest.approx(exact, abs=1e-12)
        assert tail == pytest.approx(756.0 / 160.0)

    @mark.lennard_jones
    def test_margins_are_positive_and_decreasing(self):
        table = lj_margin_table(1000)
        assert table['K'].tolist()[:3] == [2, 3, 4]
        assert np.all(table['margin'] > 0)
        assert np.all(np.diff(table['margin']) < 0)
        assert np.all(np.diff(table['tail_bound']) < 0)

    @mark.lennard_jones
    def test_margins_converge(self):
        table = lj_margin_table(1000).set_index('K')
        assert abs(table.loc[1000, 'margin'] - table.loc[50, 'margin']) < 1e-6
        assert table.loc[20, 'margin'] == pytest.approx(lj_coercivity_margin(20)[0], abs=1e-12)

    @mark.lennard_jones
    def test_margin_validation(self):
        with pytest.raises(ValueError):
            lj_coercivity_margin(1)
        with pytest.raises(ValueError):
            lj_margin_table(1)

class LJRegroupTests:

    @mark.lennard_jones
    def test_regrouped_structure(self, lj):
        spec = lj_regroup(2, N=3)
        assert len(spec.shells) == 118
        assert len(lj.terms) == 124
        assert lj.is_quadratic
        assert lj.coercivity_constant() == pytest.approx(spec.margin)
        assert spec.margin > 0
        assert len(set(spec.nn_coefficients.values())) == 1

    @mark.lennard_jones
    def test_path_surrogates_are_nonnegative(self, lj, rng):
        domain = LatticeDomain.cell(6, N=3)
        u = LatticeField(domain, rng.normal(size=domain.shape + (1,)))
        stencil = u.stencil(lj.reach, ExtensionPolicy.zero())
        for term in lj.terms[6:]:
            assert term.density(stencil).min() >= -1e-10

    @mark.lennard_jones
    @pytest.mark.parametrize("k", [2, 3])
    def test_regrouping_preserves_total_energy(self, k, rng):
        domain = LatticeDomain.cell(12, N=3)
        values = np.zeros(domain.shape)
        inner = tuple(slice(k, 12 - k) for _ in range(3))
        values[inner] = rng.normal(size=values[inner].shape)
        u = LatticeField(domain, values)
        policy = ExtensionPolicy.zero()
        regrouped = energy(LJLinearizedPotential(k=k, N=3), u, policy=policy)
        raw = energy(LJRawPotential(k=k, N=3), u, policy=policy)
        assert regrouped == pytest.approx(raw, rel=1e-10)

    @mark.lennard_jones
    def test_truncation_family_is_monotone(self, lj):
        assert len(lj.truncate(1).terms) == 6 + 20
        assert lj.truncate(1).coercivity_constant() == lj.coercivity_constant()
        closeness = lj.closeness_profile(1)
        assert closeness.variant == 'truncation'
        assert closeness.total_sum() > 0
        assert lj.closeness_profile(2).total_sum() == 0.0

    @mark.lennard_jones
    def test_decay_coefficients(self):
        spec = lj_regroup(2, N=3)
        table = lj_decay_coefficients(2, spec=spec)
        assert table[((0, 0, 0), (1, 0, 0))] == 72.0
        assert all(sum(xi) == 1 for _, xi in table.keys())
        truncation = lj_truncation_coefficients(1, spec)
        assert truncation.level == 1
        assert truncation.total_sum() == pytest.approx(
            2 * sum(shell.weight * shell.l1 for shell in spec.shells
                    if max(abs(v) for v in shell.xi) > 1))

    @mark.lennard_jones
    def test_regroup_validation(self):
        with pytest.raises(ValueError):
            lj_regroup(0)
        with pytest.raises(ValueError):
            LJRawPotential(k=0)
