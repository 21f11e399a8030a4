# =========================================================================== #
#                         TEST POTENTIAL FACTORY                              #
# =========================================================================== #
#%%
import pytest
from pytest import mark

from lattice_studio.potentials.determinant import DeterminantPotential
from lattice_studio.potentials.factory import build_potential
from lattice_studio.potentials.lennard_jones import LJLinearizedPotential, LJRawPotential
from lattice_studio.potentials.pair import PairPotential
from lattice_studio.potentials.periodic import PeriodicComposite
from lattice_studio.utils.exceptions import ConfigurationError

class PotentialFactoryTests:

    @mark.potentials
    def test_factory_pair_presets(self):
        chain = build_potential({'family': 'pair', 'preset': 'two-spring-chain',
                                 'springs': [2.0, 5.0]})
        assert isinstance(chain, PairPotential)
        assert chain.period == 2
        assert chain.cauchy_born_constant() == pytest.approx(5.0)
        nn = build_potential({'family': 'pair', 'preset': 'nearest-neighbour',
                              'dimension': 2, 'codomain': 2})
        assert (nn.N, nn.n) == (2, 2)

    @mark.potentials
    def test_factory_pair_terms_and_tables(self, tmp_path):
        terms = build_potential({'family': 'pair', 'terms': [
            {'xi': [1], 'stiffness': 2.0}, {'xi': [2], 'anchor': [-1], 'stiffness': 0.5}]})
        assert terms.reach == 1
        table = build_potential({'family': 'pair', 'table': [
            ['(0)', '(1)', 1.0], ['(0)', '(2)', 0.25]]})
        assert table.reach == 2
        path = tmp_path / "pairs.csv"
        path.write_text('j,xi,value\n"(0)","(1)",1.0\n')
        assert build_potential({'family': 'pair', 'table_path': str(path)}).reach == 1

    @mark.potentials
    def test_factory_other_families(self):
        det = build_potential({'family': 'determinant', 'dimension': 2, 'r_max': 1})
        assert isinstance(det, DeterminantPotential)
        assert len(det.tuples) == 28
        lj = build_potential({'family': 'lj', 'k': 2})
        assert isinstance(lj, LJLinearizedPotential)
        raw = build_potential({'family': 'lj', 'k': 2, 'variant': 'raw'})
        assert isinstance(raw, LJRawPotential)
        composite = build_potential({'family': 'periodic-composite',
                                     'base': {'family': 'pair', 'preset': 'two-spring-chain'}})
        assert isinstance(composite, PeriodicComposite)
        assert composite.period == 2

    @mark.potentials
    @pytest.mark.parametrize("section", [
        {'family': 'spline'},
        {'family': 'pair'},
        {'family': 'pair', 'preset': 'nearest-neighbour', 'terms': []},
        {'family': 'pair', 'preset': 'two-spring-chain', 'dimension': 2},
        {'family': 'pair', 'preset': 'honeycomb'},
        {'family': 'pair', 'preset': 'nearest-neighbour', 'p': 0.5},
        {'family': 'pair', 'table': []},
        {'family': 'lj', 'variant': 'smoothed'},
        {'family': 'periodic-composite'},
    ])
    def test_factory_rejects(self, section):
        with pytest.raises(ConfigurationError):
            build_potential(section)
