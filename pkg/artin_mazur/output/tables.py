"""
Table builders for command reports.
"""

import pandas as pd

from ..utils import format_number


def counts_table(columns, order):
    """
    Side-by-side periodic counts, one column per method tag.

    Args:
        columns: Dict method tag -> list of counts (None where unavailable)
        order: Number of rows N_1..N_order

    Returns:
        DataFrame with column 'n', one column per method and 'agree'
    """
    df = pd.DataFrame({'n': list(range(1, order + 1))})
    for method, values in columns.items():
        df[method] = pd.array(list(values) + [None] * (order - len(values)), dtype='Int64')
    methods = list(columns)
    df['agree'] = df[methods].nunique(axis=1, dropna=True) <= 1
    return df


def certificate_table(certificate):
    """Per-step distances of a shadowing certificate."""
    return pd.DataFrame(certificate.to_records(), columns=['i', 'error'])


def cover_table(cover):
    """One row per rectangle with its successors under the transition matrix."""
    rows = []
    for i, rect in enumerate(cover.rectangles):
        successors = [j for j in range(cover.size) if cover.transition[i, j] == 1]
        rows.append(
            {
                'index': i,
                'rectangle': str(rect),
                'diameter': format_number(rect.diameter),
                'successors': ' '.join(str(j) for j in successors),
            }
        )
    return pd.DataFrame(rows, columns=['index', 'rectangle', 'diameter', 'successors'])


def check_table(results):
    """Acceptance check outcomes, one row per criterion."""
    return pd.DataFrame(results, columns=['criterion', 'name', 'passed', 'seconds', 'detail'])
