# =========================================================================== #
#                          TEST DECAY PROFILES                                #
# =========================================================================== #
#%%
import pandas as pd
import pytest
from pytest import mark

from lattice_studio.potentials.profiles import DecayProfile, format_vector, parse_vector
from lattice_studio.utils.exceptions import ConfigurationError

class ParseVectorTests:

    @mark.potentials
    def test_parse_vector_formats(self):
        assert parse_vector('(1, -2)') == (1, -2)
        assert parse_vector('1 -2') == (1, -2)
        assert parse_vector('1;-2') == (1, -2)
        assert parse_vector([3, 4]) == (3, 4)
        assert parse_vector(5) == (5,)
        assert format_vector((1, -2)) == "(1, -2)"

    @mark.potentials
    def test_parse_vector_rejects_text(self):
        with pytest.raises(ConfigurationError) as info:
            parse_vector('(1, a)', line=4, column='xi')
        assert info.value.line == 4
        assert info.value.column == 'xi'

class DecayProfileTests:

    @mark.potentials
    def test_profile_sums(self):
        profile = DecayProfile({((0,), (1,)): 1.0, ((0,), (3,)): 0.5, ((2,), (1,)): 0.25})
        assert len(profile) == 3
        assert profile.total_sum() == pytest.approx(1.75)
        assert profile.tail_sum(2.0) == pytest.approx(0.5)
        assert profile.tail_sum(0.5, epsilon=0.25) == pytest.approx(0.5)
        assert profile.reach() == 3
        assert profile[((0,), (3,))] == 0.5
        assert profile[((5,), (1,))] == 0.0

    @mark.potentials
    def test_profile_arithmetic(self):
        a = DecayProfile({((0,), (1,)): 1.0})
        b = DecayProfile({((0,), (1,)): 0.5, ((1,), (1,)): 2.0})
        total = a + b
        assert total[((0,), (1,))] == pytest.approx(1.5)
        assert total.dominates(a) and total.dominates(b)
        assert not a.dominates(b)
        assert a.scaled(4.0).total_sum() == pytest.approx(4.0)
        assert len(total.restricted(lambda j, xi: not any(j))) == 1

    @mark.potentials
    def test_profile_validation(self):
        with pytest.raises(ValueError):
            DecayProfile({((0,), (1,)): -1.0})
        with pytest.raises(ValueError):
            DecayProfile({((0,), (0,)): 1.0})
        with pytest.raises(ValueError):
            DecayProfile(variant='sparse')

    @mark.potentials
    def test_profile_from_csv(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text('j,xi,value\n"(0)","(1)",1.0\n"(1)","(2)",0.5\n')
        profile = DecayProfile.from_csv(path)
        assert profile[((1,), (2,))] == 0.5
        frame = profile.to_frame()
        assert list(frame.columns) == ['j', 'xi', 'value']
        assert DecayProfile.from_frame(frame).total_sum() == pytest.approx(1.5)

    @mark.potentials
    def test_profile_from_csv_reports_line(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text('j,xi,value\n"(0)","(1)",1.0\n"(1)","(2)",oops\n')
        with pytest.raises(ConfigurationError) as info:
            DecayProfile.from_csv(path)
        assert info.value.line == 3
        assert info.value.column == 'value'
        assert info.value.path == path

    @mark.potentials
    def test_profile_from_frame_missing_column(self):
        with pytest.raises(ConfigurationError):
            DecayProfile.from_frame(pd.DataFrame({'j': ['(0)'], 'value': [1.0]}))
