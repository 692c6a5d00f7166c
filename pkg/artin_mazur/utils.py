"""
Utility functions for number parsing and serialisation.
"""

import json
import math
from fractions import Fraction

import numpy as np
import pandas as pd


def to_fraction(value):
    """
    Convert a text or numeric value to an exact Fraction.

    Args:
        value: '1/8', '0.125', '2^-3', an int, a float or a Fraction

    Returns:
        Fraction

    Raises:
        ValueError if the value cannot be read as a rational number
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float, np.integer, np.floating)):
        return Fraction(value)
    text = str(value).strip().replace(' ', '')
    if '^' in text:
        base, exponent = text.split('^', 1)
        return Fraction(int(base)) ** int(exponent)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"'{value}' is not a rational number") from e


def format_number(value, digits=6):
    """Short text for a Fraction, float or int as it should appear in reports."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        if value.denominator < 10 ** 6:
            return str(value)
        value = float(value)
    if isinstance(value, float):
        if math.isinf(value) or math.isnan(value):
            return str(value)
        return f"{value:.{digits}g}"
    return str(value)


def json_ready(value):
    """
    Convert nested results to plain JSON types.

    Fractions become their 'p/q' text, tuples become lists, numpy scalars
    become Python numbers and non-finite floats become strings.
    """
    if isinstance(value, dict):
        return {str(k): json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    if isinstance(value, np.ndarray):
        return [json_ready(v) for v in value.tolist()]
    if value is pd.NA:
        return None
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


def dump_json(data):
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(json_ready(data), indent=2, sort_keys=True)


def save_json(data, filename):
    with open(filename, 'w') as f:
        f.write(dump_json(data) + '\n')


def read_json(filename):
    with open(filename, 'r') as f:
        return json.load(f)
