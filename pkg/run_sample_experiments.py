"""
Quick script to run every sub-command on sample maps.
Writes map configs and a pseudo-orbit to a temporary directory, then runs
the artin-mazur CLI on them.
"""

import os
import tempfile

from artin_mazur.cli import main
from artin_mazur.utils import save_json


def create_sample_data():
    """Create sample map configs, a matrix file and a pseudo-orbit."""
    tmpdir = tempfile.mkdtemp()
    print(f"Creating sample data in {tmpdir}")

    tripling_path = os.path.join(tmpdir, 'tripling.json')
    save_json({'kind': 'circle', 'k': 3}, tripling_path)

    # Matrix file next to the config that refers to it
    with open(os.path.join(tmpdir, 'golden.txt'), 'w') as f:
        f.write("# golden mean shift\n2\n1 1\n1 0\n")
    golden_path = os.path.join(tmpdir, 'golden.json')
    save_json({'kind': 'sft', 'matrix_file': 'golden.txt', 'name': 'golden'}, golden_path)

    # Period-2 orbit of the doubling map, rounded to three digits
    orbit_path = os.path.join(tmpdir, 'orbit.csv')
    with open(orbit_path, 'w') as f:
        f.write("x\n")
        for i in range(12):
            f.write("0.333\n" if i % 2 == 0 else "0.667\n")

    print(f"Created {tripling_path}")
    print(f"Created {golden_path}")
    print(f"Created {orbit_path}")

    return tmpdir, tripling_path, golden_path, orbit_path


if __name__ == '__main__':
    tmpdir, tripling_path, golden_path, orbit_path = create_sample_data()

    runs = [
        ['zeta', '--map', golden_path],
        ['zeta', '--map', tripling_path],
        ['zeta', '--map', 'cat', '--order', '10'],
        ['count', '--map', 'circle2', '--order', '10'],
        ['cover', '--map', tripling_path, '--order', '6'],
        ['shadow', '--map', 'circle2', '--pseudo-orbit', orbit_path, '--beta', '1/20'],
        ['entropy', '--map', 'full2'],
    ]
    for run in runs:
        print("\n" + "=" * 60)
        print("artin-mazur " + " ".join(run))
        print("=" * 60)
        main(run)

    print(f"\nTemporary files remain at: {tmpdir}")
    print("You can delete them manually if needed.")
