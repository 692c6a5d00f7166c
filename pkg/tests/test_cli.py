"""
Tests for the artin-mazur command line.
"""

import argparse
import json
from fractions import Fraction

import pytest

from artin_mazur.args import create_parser, fraction_type, parse_args
from artin_mazur.cli import build_experiment, main
from artin_mazur.commands import register_all_commands
from artin_mazur.commands.check import check_radius, check_sft_zeta, check_toral_counts


class TestArgs:
    """Test argument parsing."""

    def test_fraction_arguments(self):
        """Test exact parsing of --eps and --mesh."""
        args = parse_args(['entropy', '--map', 'circle2', '--eps', '2^-6', '--mesh', '1/8'])
        assert args.eps == Fraction(1, 64)
        assert args.mesh == Fraction(1, 8)
        assert args.order == 8

    @pytest.mark.parametrize("value", ['0', '-1/2', 'half'])
    def test_fraction_type_rejects(self, value):
        """Test that non-positive or malformed values are refused."""
        with pytest.raises(argparse.ArgumentTypeError):
            fraction_type(value)

    def test_command_is_required(self):
        """Test that a sub-command must be given."""
        with pytest.raises(SystemExit) as exc:
            create_parser().parse_args([])
        assert exc.value.code == 2

    def test_json_and_csv_exclusive(self):
        """Test that only one output format is accepted."""
        with pytest.raises(SystemExit) as exc:
            parse_args(['count', '--map', 'full2', '--json', '--csv'])
        assert exc.value.code == 2

    def test_build_experiment(self):
        """Test the experiment config collected from arguments."""
        config = build_experiment(parse_args(['count', '--map', 'cat', '--csv', '--order', '5']))
        assert config.map_spec.kind == 'toral'
        assert config.output == 'csv'
        assert config.params['order'] == 5

    def test_check_needs_no_map(self):
        """Test that check runs without --map."""
        assert build_experiment(parse_args(['check'])).map_spec is None

    def test_registered_commands(self):
        """Test that every parser sub-command has a command function."""
        commands = register_all_commands()
        assert set(commands) == {'zeta', 'count', 'entropy', 'shadow', 'cover', 'check'}


class TestZetaCommand:
    """Test the zeta sub-command."""

    def test_golden_mean(self, capsys):
        """Test the text report for the golden-mean shift."""
        result = main(['zeta', '--map', 'fibonacci', '--order', '6'])
        out = capsys.readouterr().out
        assert "zeta [trace]: 1/(1 - z - z^2)" in out
        assert "counts [trace]: 1, 3, 4, 7, 11, 18" in out
        assert "agreement: yes" in out
        assert out.rstrip().endswith("status: ok")
        assert result.passed

    def test_cat_map_json(self, capsys):
        """Test the fitted zeta function of the cat map."""
        main(['zeta', '--map', 'cat', '--json'])
        data = json.loads(capsys.readouterr().out)
        assert data['zeta'] == "(1 - 2z + z^2)/(1 - 3z + z^2)"
        assert data['method'] == 'toral'
        assert data['counts']['toral'][:3] == [1, 5, 16]
        assert data['passed'] is True

    def test_circle_map_from_file(self, map_config_file, capsys):
        """Test a circle map read from a JSON config."""
        result = main(['zeta', '--map', map_config_file({'kind': 'circle', 'k': 3})])
        capsys.readouterr()
        assert result.data['zeta'] == "(1 - z)/(1 - 3z)"
        assert result.data['method'] == 'cover'


class TestCountCommand:
    """Test the count sub-command."""

    def test_circle_counts(self, capsys):
        """Test that all methods give 2^n - 1."""
        result = main(['count', '--map', 'circle2', '--order', '6'])
        capsys.readouterr()
        assert result.table['exact'].tolist() == [1, 3, 7, 15, 31, 63]
        assert {'cover', 'exact', 'bruteforce'} <= set(result.table.columns)
        assert result.table['agree'].all()

    def test_cat_counts(self, capsys):
        """Test determinant counts against lattice enumeration."""
        result = main(['count', '--map', 'cat', '--order', '5'])
        capsys.readouterr()
        assert result.data['counts']['toral'] == [1, 5, 16, 45, 121]
        assert result.data['counts']['bruteforce'] == [1, 5, 16, 45, 121]

    def test_csv_output(self, capsys):
        """Test the CSV rendering of the count table."""
        main(['count', '--map', 'full2', '--order', '4', '--csv'])
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith('n,trace,bruteforce')
        assert len(lines) == 5


class TestShadowCommand:
    """Test the shadow sub-command."""

    def test_shadow_csv(self, pseudo_orbit_file, capsys):
        """Test a period-2 pseudo-orbit near 1/3."""
        path = pseudo_orbit_file(['0.333', '0.667', '0.333', '0.667'])
        result = main(['shadow', '--map', 'circle2', '--pseudo-orbit', path])
        capsys.readouterr()
        assert result.passed
        assert result.data['points'] == 4
        assert len(result.table) == 4

    def test_big_jump_exits(self, pseudo_orbit_file):
        """Test that a jump above the shadowing bound is an error."""
        path = pseudo_orbit_file(['0', '1/2'])
        with pytest.raises(SystemExit) as exc:
            main(['shadow', '--map', 'circle2', '--pseudo-orbit', path])
        assert exc.value.code == 1

    def test_missing_pseudo_orbit_exits(self):
        """Test that shadow needs --pseudo-orbit."""
        with pytest.raises(SystemExit) as exc:
            main(['shadow', '--map', 'circle2'])
        assert exc.value.code == 1


class TestCoverAndEntropyCommands:
    """Test the cover and entropy sub-commands."""

    def test_cover_tripling(self, capsys):
        """Test the twelve-arc cover of the tripling map."""
        result = main(['cover', '--map', 'circle3', '--order', '5'])
        out = capsys.readouterr().out
        assert "rectangles 12" in out
        assert result.data['counts']['cover'] == [2, 8, 26, 80, 242]
        assert result.data['report']['passed'] is True

    def test_cover_of_toral_map_exits(self):
        """Test that toral maps get no cover."""
        with pytest.raises(SystemExit) as exc:
            main(['cover', '--map', 'cat'])
        assert exc.value.code == 1

    def test_entropy_full_shift(self, capsys):
        """Test exact log 2 for the full 2-shift."""
        result = main(['entropy', '--map', 'full2', '--n-max', '6', '--json'])
        data = json.loads(capsys.readouterr().out)
        assert result.passed
        assert data['report']['overlap'] is True
        assert data['within_preimage_bound'] is True


class TestErrors:
    """Test exit codes for bad input."""

    def test_missing_map_exits(self):
        """Test that zeta needs --map."""
        with pytest.raises(SystemExit) as exc:
            main(['zeta'])
        assert exc.value.code == 1

    def test_missing_file_exits(self, tmp_path):
        """Test that an unreadable map file is an error."""
        with pytest.raises(SystemExit) as exc:
            main(['zeta', '--map', str(tmp_path / 'missing.json')])
        assert exc.value.code == 1

    def test_invalid_config_exits(self, map_config_file):
        """Test that a schema violation is an error."""
        with pytest.raises(SystemExit) as exc:
            main(['count', '--map', map_config_file({'kind': 'circle', 'k': 1})])
        assert exc.value.code == 1


class TestCheckCommand:
    """Test the acceptance checks."""

    def test_cheap_checks(self):
        """Test the exact-arithmetic checks on their own."""
        for check in (check_sft_zeta, check_toral_counts, check_radius):
            ok, detail = check({})
            assert ok, detail

    @pytest.mark.slow
    def test_all_checks_pass(self, capsys):
        """Test the full check run."""
        result = main(['check'])
        out = capsys.readouterr().out
        assert "8 of 8 checks passed" in out
        assert result.passed


if __name__ == '__main__':
    pytest.main([__file__])
