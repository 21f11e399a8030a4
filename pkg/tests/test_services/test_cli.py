# =========================================================================== #
#                        TEST COMMAND LINE INTERFACE                          #
# =========================================================================== #
#%%
import json

from click.testing import CliRunner
from pytest import mark

from lattice_studio import cli

CONFIG = ("potential:\n"
          "  family: pair\n"
          "  preset: nearest-neighbour\n"
          "  dimension: 1\n")

class CommandLineTests:

    @mark.cli
    def test_help(self):
        result = CliRunner().invoke(cli.main, ['--help'])
        assert result.exit_code == 0
        for command in ('check', 'cell', 'fhom', 'sweep', 'probe', 'lj-margin'):
            assert command in result.output

    @mark.cli
    def test_lj_margin(self, tmp_path):
        result = CliRunner().invoke(cli.main, ['--output', str(tmp_path), 'lj-margin',
                                               '--K-max', '6'])
        assert result.exit_code == 0
        assert '"positive": true' in result.output
        assert (tmp_path / 'run_lj_margin.csv').exists()

    @mark.cli
    def test_overrides_reach_the_run(self, tmp_path):
        config = tmp_path / 'run.yaml'
        config.write_text(CONFIG + "fhom:\n  M: 1.0\n  schedule: [8, 16, 32]\n")
        result = CliRunner().invoke(cli.main, ['--config', str(config), '--output',
                                               str(tmp_path), 'fhom', '--M', '2',
                                               '--schedule', '8,16'])
        assert result.exit_code == 0
        record = json.loads((tmp_path / 'run_fhom.json').read_text())
        assert record['M'] == [[2.0]]
        assert [p['L'] for p in record['points']] == [8, 16]
        assert record['config']['fhom']['schedule'] == [8, 16]

    @mark.cli
    def test_cell_without_free_sites(self, tmp_path):
        config = tmp_path / 'run.yaml'
        config.write_text(CONFIG)
        result = CliRunner().invoke(cli.main, ['--config', str(config), '--output',
                                               str(tmp_path), 'cell', '--M', '1',
                                               '--L', '1'])
        assert result.exit_code == 0
        assert (tmp_path / 'run_cell.json').exists()

    @mark.cli
    def test_missing_potential_exits_with_configuration_error(self, tmp_path):
        result = CliRunner().invoke(cli.main, ['--output', str(tmp_path), 'check'])
        assert result.exit_code == 3
        error = json.loads((tmp_path / 'error.json').read_text())
        assert error['error'] == 'configuration'

    @mark.cli
    def test_bad_option_values(self, tmp_path):
        runner = CliRunner()
        assert runner.invoke(cli.main, ['--threads', '0', 'lj-margin']).exit_code == 2
        assert runner.invoke(cli.main, ['--output', str(tmp_path), 'fhom',
                                        '--schedule', '8,x']).exit_code == 2
