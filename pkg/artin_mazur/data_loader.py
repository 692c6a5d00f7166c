"""
Map configuration and input file loading.
"""

import logging
import os
from dataclasses import dataclass, field

import pandas as pd

from .config import BUILTIN_MAPS
from .exactmat import SignedIntMatrix
from .expmap import make_circle_map, make_toral_map
from .sft import ShiftPoint, SubshiftOfFiniteType, as_expanding_map
from .utils import read_json, to_fraction

MAP_KINDS = ('circle', 'toral', 'sft')


@dataclass(frozen=True)
class MapSpec:
    """A validated map configuration: kind plus its parameters."""

    kind: str
    name: str
    k: int = None
    matrix: SignedIntMatrix = None

    def subshift(self):
        if self.kind != 'sft':
            raise ValueError(f"Map '{self.name}' is a {self.kind} map, not a subshift")
        return SubshiftOfFiniteType(self.matrix)

    def expanding_map(self, strict=False):
        """
        Instantiate the map.

        Toral maps are built with strict=False by default so that hyperbolic
        automorphisms can still be counted; their is_expanding flag tells
        whether shadowing and entropy estimates apply.
        """
        if self.kind == 'circle':
            return make_circle_map(self.k)
        if self.kind == 'toral':
            return make_toral_map(self.matrix, strict=strict)
        return as_expanding_map(self.subshift())

    def describe(self):
        info = {'kind': self.kind, 'name': self.name}
        if self.k is not None:
            info['k'] = self.k
        if self.matrix is not None:
            info['matrix'] = [list(row) for row in self.matrix.rows]
        return info


@dataclass(frozen=True)
class ExperimentConfig:
    """Map plus command parameters and the output format selector."""

    map_spec: MapSpec
    command: str
    params: dict = field(default_factory=dict)
    output: str = 'text'
    seed: int = 0


def load_matrix_file(filepath):
    """
    Load an integer matrix from the text format of SignedIntMatrix.

    Args:
        filepath: Path to a file with a dimension line and one row per line

    Returns:
        SignedIntMatrix
    """
    logging.info(f"Reading matrix file '{filepath}' ...")
    with open(filepath, 'r') as f:
        matrix = SignedIntMatrix.from_text(f.read())
    logging.info(f"   Found a {matrix.dim}x{matrix.dim} matrix.")
    logging.info(f"Reading matrix file '{filepath}' ... done.")
    return matrix


def validate_map_config(config, name='map', base_dir='.'):
    """
    Check a map configuration dict and turn it into a MapSpec.

    Args:
        config: Dict with 'kind' and either 'k' (circle) or 'matrix' /
            'matrix_file' (toral, sft)
        name: Label used in messages
        base_dir: Directory relative matrix_file paths are resolved against

    Returns:
        MapSpec

    Raises:
        ValueError on any schema violation
    """
    if not isinstance(config, dict):
        raise ValueError(f"Map config '{name}' must be a JSON object")
    kind = config.get('kind')
    if kind not in MAP_KINDS:
        logging.error(f"Map config '{name}' has kind {kind!r}; expected one of {MAP_KINDS}.")
        raise ValueError(f"Unknown map kind {kind!r}")
    unknown = set(config) - {'kind', 'k', 'matrix', 'matrix_file', 'name'}
    if unknown:
        raise ValueError(f"Map config '{name}' has unknown keys {sorted(unknown)}")

    if kind == 'circle':
        k = config.get('k')
        if not isinstance(k, int) or isinstance(k, bool) or k < 2:
            logging.error(f"Circle map '{name}' needs an integer k >= 2, got {k!r}.")
            raise ValueError(f"Circle map degree must be an integer >= 2, got {k!r}")
        return MapSpec('circle', config.get('name', name), k=k)

    if 'matrix' in config and 'matrix_file' in config:
        raise ValueError(f"Map config '{name}' gives both 'matrix' and 'matrix_file'")
    if 'matrix' in config:
        rows = config['matrix']
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise ValueError(f"Map config '{name}': 'matrix' must be a list of rows")
        matrix = SignedIntMatrix(rows)
    elif 'matrix_file' in config:
        matrix = load_matrix_file(os.path.join(base_dir, config['matrix_file']))
    else:
        logging.error(f"Map config '{name}' has neither 'matrix' nor 'matrix_file'.")
        raise ValueError(f"A {kind} map needs 'matrix' or 'matrix_file'")

    if kind == 'toral' and matrix.dim != 2:
        raise ValueError(f"Toral maps need a 2x2 matrix, got dimension {matrix.dim}")
    if kind == 'sft' and not matrix.is_binary:
        raise ValueError("An sft transition matrix must have entries in {0, 1}")
    return MapSpec(kind, config.get('name', name), matrix=matrix)


def load_map_config(source):
    """
    Load a map configuration from a JSON file or a built-in preset name.

    Args:
        source: Path to a JSON file, or one of the BUILTIN_MAPS names

    Returns:
        MapSpec
    """
    if source is None:
        logging.error("Missing required argument: --map")
        raise ValueError("No map given; use --map <file or preset>")
    if not os.path.exists(source) and source in BUILTIN_MAPS:
        logging.info(f"Using built-in map '{source}'.")
        return validate_map_config(BUILTIN_MAPS[source], name=source)

    logging.info(f"Reading map config '{source}' ...")
    config = read_json(source)
    name = os.path.splitext(os.path.basename(source))[0]
    spec = validate_map_config(config, name=name, base_dir=os.path.dirname(source) or '.')
    logging.info(f"   Found a {spec.kind} map.")
    logging.info(f"Reading map config '{source}' ... done.")
    return spec


def parse_point(spec, value):
    """Read one point of the map's space from its text form."""
    if spec.kind == 'circle':
        return to_fraction(value)
    if spec.kind == 'toral':
        return tuple(to_fraction(v) for v in value)
    text = str(value).strip()
    if '(' not in text or not text.endswith(')'):
        raise ValueError(f"Shift point '{text}' must look like 'prefix(cycle)'")
    prefix, cycle = text[:-1].split('(', 1)
    return ShiftPoint(tuple(int(s) for s in prefix), tuple(int(s) for s in cycle))


def load_pseudo_orbit(filepath, spec):
    """
    Load a pseudo-orbit from CSV.

    Circle maps read column 'x', toral maps columns 'x' and 'y', shift
    maps column 'point' with values like '01(10)'. Values are parsed
    exactly ('1/3' or decimal text).

    Args:
        filepath: CSV path
        spec: MapSpec the points belong to

    Returns:
        List of exact points
    """
    logging.info(f"Reading pseudo-orbit file '{filepath}' ...")
    df = pd.read_csv(filepath, dtype=str)
    columns = {'circle': ['x'], 'toral': ['x', 'y'], 'sft': ['point']}[spec.kind]
    missing = [c for c in columns if c not in df.columns]
    if missing:
        logging.error(f"Pseudo-orbit file '{filepath}' lacks columns {missing}.")
        raise ValueError(f"Pseudo-orbit CSV needs columns {columns}")
    if df.empty:
        raise ValueError(f"Pseudo-orbit file '{filepath}' has no rows")
    if spec.kind == 'toral':
        points = [parse_point(spec, (x, y)) for x, y in zip(df['x'], df['y'])]
    else:
        points = [parse_point(spec, v) for v in df[columns[0]]]
    logging.info(f"   Found {len(points)} points.")
    logging.info(f"Reading pseudo-orbit file '{filepath}' ... done.")
    return points
