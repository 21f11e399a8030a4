# =========================================================================== #
#                          TEST RUN CONFIGURATION                             #
# =========================================================================== #
#%%
import pytest
from pytest import mark

from lattice_studio.services.config import DEFAULTS, RunConfig, validate
from lattice_studio.utils.exceptions import ConfigurationError

NN = {'family': 'pair', 'preset': 'nearest-neighbour', 'dimension': 1}

class RunConfigTests:

    @mark.services
    def test_defaults_are_resolved(self):
        config = RunConfig.from_dict({'command': 'check', 'potential': NN})
        assert config.seed == 0
        assert config.threads >= 1
        assert config.section('check')['samples'] == 1000
        assert config.section('lj-margin')['K_max'] == 1000
        assert config.section('output') == DEFAULTS['output']

    @mark.services
    def test_yaml_round_trip(self):
        text = ("command: fhom\n"
                "seed: 3\n"
                "threads: 2\n"
                "potential:\n"
                "  family: pair\n"
                "  preset: two-spring-chain\n"
                "  springs: [1.0, 3.0]\n"
                "fhom:\n"
                "  M: [[1.0]]\n"
                "  schedule: [8, 16]\n"
                "  boundary: 1\n")
        config = RunConfig.from_yaml(text)
        assert config.section('fhom')['boundary'] == 1
        assert config.section('fhom')['method'] == 'auto'
        assert RunConfig.from_yaml(config.to_yaml()) == config
        assert RunConfig.from_dict(config.to_dict()) == config

    @mark.services
    def test_sweep_grid_is_optional(self):
        config = RunConfig.from_dict({'command': 'sweep', 'potential': NN,
                                      'sweep': {'schedule': [8]}})
        assert config.section('sweep')['grid'] is None
        with pytest.raises(ConfigurationError):
            RunConfig.from_dict({'command': 'fhom', 'potential': NN, 'fhom': {}})

    @mark.services
    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv('LATTICE_STUDIO_THREADS', '3')
        assert RunConfig.from_dict({'command': 'lj-margin'}).threads == 3
        assert RunConfig.from_dict({'command': 'lj-margin', 'threads': 2}).threads == 2

    @mark.services
    @pytest.mark.parametrize("document", [
        {'command': 'check', 'potential': NN, 'bogus': 1},
        {'command': 'check', 'potential': dict(NN, spring=2.0)},
        {'command': 'cell', 'potential': NN, 'cell': {'M': 1.0, 'Lx': 4}},
        {'command': 'cell', 'potential': NN, 'cell': {'M': 1.0, 'm': 'half'}},
        {'command': 'fhom', 'potential': NN, 'fhom': {'M': 1.0, 'schedule': [8, 0]}},
        {'command': 'check', 'potential': NN, 'check': {'samples': 3}},
        {'command': 'simulate'},
        {'command': 'check'},
        {'command': 'cell', 'potential': NN},
        {'command': 'cell', 'potential': NN, 'cell': {'L': 8}},
        {'command': 'check', 'potential': {'family': 'periodic-composite'}},
        {'command': 'check', 'potential': {'family': 'periodic-composite',
                                           'base': {'family': 'pair', 'extra': 1}}},
    ])
    def test_invalid_documents(self, document):
        with pytest.raises(ConfigurationError):
            RunConfig.from_dict(document)

    @mark.services
    def test_error_location(self):
        with pytest.raises(ConfigurationError) as e:
            validate({'command': 'cell', 'cell': {'L': 0}})
        assert e.value.column == 'cell/L'
        with pytest.raises(ConfigurationError):
            validate(['command', 'check'])

    @mark.services
    def test_invalid_yaml_reports_line(self):
        with pytest.raises(ConfigurationError) as e:
            RunConfig.from_yaml("command: check\npotential: [family\n")
        assert e.value.line is not None

    @mark.services
    def test_from_file(self, tmp_path):
        path = tmp_path / 'run.yaml'
        path.write_text("command: lj-margin\nlj_margin:\n  K_max: 20\n")
        assert RunConfig.from_file(str(path)).section('lj_margin')['K_max'] == 20
        with pytest.raises(ConfigurationError) as e:
            RunConfig.from_file(str(tmp_path / 'absent.yaml'))
        assert e.value.path.endswith('absent.yaml')
