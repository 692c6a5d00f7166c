"""
Tests for number parsing and serialisation helpers.
"""

import json
import math
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from artin_mazur.utils import (
    dump_json,
    format_number,
    json_ready,
    read_json,
    save_json,
    to_fraction,
)


class TestToFraction:
    """Test exact parsing of rational values."""

    @pytest.mark.parametrize("text", ['1/8', '0.125', '2^-3', ' 1 / 8 '])
    def test_text_forms(self, text):
        """Test the fraction, decimal and power forms."""
        assert to_fraction(text) == Fraction(1, 8)

    def test_numbers(self):
        """Test ints, floats and numpy scalars."""
        assert to_fraction(3) == 3
        assert to_fraction(0.5) == Fraction(1, 2)
        assert to_fraction(np.int64(4)) == 4
        assert to_fraction(Fraction(2, 3)) == Fraction(2, 3)

    @pytest.mark.parametrize("text", ['abc', '1/0', ''])
    def test_invalid_text_raises(self, text):
        """Test that non-rational text is refused."""
        with pytest.raises(ValueError):
            to_fraction(text)


class TestFormatNumber:
    """Test report formatting of numbers."""

    def test_fractions(self):
        """Test integer and small-denominator fractions."""
        assert format_number(Fraction(4, 2)) == '2'
        assert format_number(Fraction(1, 3)) == '1/3'

    def test_large_denominator_falls_back_to_float(self):
        """Test that huge denominators print as floats."""
        assert format_number(Fraction(1, 3 ** 20)) == f"{1 / 3 ** 20:.6g}"

    def test_floats(self):
        """Test significant digits and non-finite values."""
        assert format_number(math.pi) == '3.14159'
        assert format_number(math.pi, 3) == '3.14'
        assert format_number(math.inf) == 'inf'


class TestJson:
    """Test conversion to plain JSON types."""

    def test_json_ready(self):
        """Test Fractions, numpy scalars, tuples and non-finite floats."""
        data = {
            'f': Fraction(1, 3),
            'i': np.int64(5),
            'b': np.bool_(True),
            't': (1, 2),
            'inf': math.inf,
            'na': pd.NA,
            1: np.array([1.5, 2.5]),
        }
        assert json_ready(data) == {
            'f': '1/3',
            'i': 5,
            'b': True,
            't': [1, 2],
            'inf': 'inf',
            'na': None,
            '1': [1.5, 2.5],
        }

    def test_dump_json_is_sorted(self):
        """Test sorted keys and two-space indent."""
        text = dump_json({'b': 1, 'a': Fraction(1, 2)})
        assert text == '{\n  "a": "1/2",\n  "b": 1\n}'

    def test_save_and_read(self, tmp_path):
        """Test that a saved file reads back as plain JSON."""
        path = tmp_path / 'out.json'
        save_json({'rho': Fraction(1, 2)}, path)
        assert read_json(path) == {'rho': '1/2'}
        assert json.loads(path.read_text()) == {'rho': '1/2'}


if __name__ == '__main__':
    pytest.main([__file__])
