# =========================================================================== #
#                              TEST UTILITIES                                 #
# =========================================================================== #
#%%
import json
import os
import time

import numpy as np
import pandas as pd
import pytest
from pytest import mark

from lattice_studio.lattice.domain import LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.utils.file_manager import (format_plot_data, save_csv, save_field_csv,
                                               save_json)
from lattice_studio.utils.misc import fmt, matrix_key, matrix_label, parse_matrix, snake
from lattice_studio.utils.parallel import default_threads, ordered_map

class MiscTests:

    @mark.utils
    def test_snake(self):
        assert snake('Two Spring Chain') == 'two_spring_chain'
        assert snake('  nearest-neighbour (N=2) ') == 'nearest_neighbour_n_2'

    @mark.utils
    def test_parse_matrix(self):
        assert parse_matrix(2.0).shape == (1, 1)
        assert np.array_equal(parse_matrix([1, 2, 3, 4]), [[1, 2], [3, 4]])
        assert parse_matrix([1, 2, 3, 4, 5, 6], n=2).shape == (2, 3)
        assert parse_matrix([1, 2, 3, 4, 5, 6], N=2).shape == (3, 2)
        with pytest.raises(ValueError):
            parse_matrix([1, 2, 3])
        with pytest.raises(ValueError):
            parse_matrix([[1.0, np.inf]])
        with pytest.raises(ValueError):
            parse_matrix(np.zeros((2, 2, 2)))

    @mark.utils
    def test_matrix_keys_and_labels(self):
        assert matrix_key([[1, 0], [0, 1]]) == matrix_key(np.eye(2))
        assert matrix_key([[1.0, 0.0]]) != matrix_key([[1.0], [0.0]])
        assert matrix_label([[0.5, -1.0]]) == "[0.5, -1]"
        assert float(fmt(0.1)) == 0.1

class ParallelTests:

    @mark.utils
    def test_order_is_kept(self):
        def slow_square(x):
            time.sleep(0.001 * (5 - x))
            return x * x

        assert ordered_map(slow_square, range(5), threads=4) == [0, 1, 4, 9, 16]
        assert ordered_map(slow_square, range(5), threads=1) == [0, 1, 4, 9, 16]
        assert ordered_map(slow_square, [], threads=3) == []

    @mark.utils
    def test_threads_validation(self):
        with pytest.raises(ValueError):
            ordered_map(abs, [1], threads=0)
        with pytest.raises(ValueError):
            ordered_map(abs, [1], threads=2.5)

    @mark.utils
    @pytest.mark.parametrize("value,expected", [(None, 1), ('4', 4), ('0', 1), ('many', 1)])
    def test_default_threads(self, monkeypatch, value, expected):
        if value is None:
            monkeypatch.delenv('LATTICE_STUDIO_THREADS', raising=False)
        else:
            monkeypatch.setenv('LATTICE_STUDIO_THREADS', value)
        assert default_threads() == expected

class FileManagerTests:

    @mark.utils
    def test_save_json_converts_numpy(self, tmp_path):
        payload = {'values': np.arange(3), 'total': np.float64(1.5), 'count': np.int64(2),
                   'flag': np.bool_(True), 'pair': (1, 2)}
        path = save_json(payload, str(tmp_path / 'nested'), 'payload.json')
        assert json.loads(open(path).read()) == {'values': [0, 1, 2], 'total': 1.5,
                                                 'count': 2, 'flag': True, 'pair': [1, 2]}
        with pytest.raises(TypeError):
            save_json({'bad': object()}, str(tmp_path), 'bad.json')
        assert not os.path.exists(tmp_path / 'bad.json')
        assert [f for f in os.listdir(tmp_path) if f.endswith('.tmp')] == []

    @mark.utils
    def test_save_csv_keeps_full_precision(self, tmp_path):
        df = pd.DataFrame({'x': [0.1, 1.0 / 3.0, np.pi]})
        path = save_csv(df, str(tmp_path), 'values.csv')
        assert pd.read_csv(path)['x'].tolist() == df['x'].tolist()

    @mark.utils
    def test_save_field_csv(self, tmp_path):
        domain = LatticeDomain.cell(3, N=2, n=2)
        field = LatticeField.affine(domain, np.eye(2))
        df = pd.read_csv(save_field_csv(field, str(tmp_path), 'field.csv'))
        assert list(df.columns) == ['i1', 'i2', 'u1', 'u2']
        assert len(df) == 9
        assert np.allclose(df[['u1', 'u2']].values, df[['i1', 'i2']].values)

    @mark.utils
    def test_format_plot_data(self):
        text = format_plot_data([('a', [(1, 2.5)]), ('b', [(2, 3.0)])], ['x', 'y'], 'curves')
        assert text == ("# curves\n# columns: x y\n# a\n1 2.5\n\n\n# b\n2 3\n")
        assert format_plot_data([], ['x']) == "# columns: x\n"
