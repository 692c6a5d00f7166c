"""
Output module: report tables and their text, JSON and CSV renderings.
"""

from .tables import counts_table, certificate_table, cover_table, check_table
from .formats import CommandResult, emit, render_text, render_csv

__all__ = [
    'counts_table',
    'certificate_table',
    'cover_table',
    'check_table',
    'CommandResult',
    'emit',
    'render_text',
    'render_csv',
]
