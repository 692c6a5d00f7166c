"""
Emitting command results as text, JSON or CSV.
"""

import sys
from dataclasses import dataclass, field

import pandas as pd

from ..utils import dump_json


@dataclass
class CommandResult:
    """What a command produced: structured data, an optional table and text lines."""

    command: str
    data: dict
    table: pd.DataFrame = None
    lines: list = field(default_factory=list)
    passed: bool = True

    def to_dict(self):
        payload = dict(self.data)
        payload['command'] = self.command
        payload['passed'] = self.passed
        if self.table is not None:
            payload['table'] = self.table.to_dict(orient='records')
        return payload


def render_text(result):
    parts = list(result.lines)
    if result.table is not None and not result.table.empty:
        parts.append('')
        parts.append(result.table.to_string(index=False))
    parts.append('')
    parts.append(f"status: {'ok' if result.passed else 'FAILED'}")
    return '\n'.join(parts)


def render_csv(result):
    table = result.table
    if table is None:
        table = pd.DataFrame([result.data])
    return table.to_csv(index=False).rstrip('\n')


def emit(result, output='text', stream=None):
    """
    Write a result to a stream.

    Args:
        result: CommandResult
        output: 'text', 'json' or 'csv'
        stream: File object (default sys.stdout)
    """
    stream = sys.stdout if stream is None else stream
    if output == 'json':
        text = dump_json(result.to_dict())
    elif output == 'csv':
        text = render_csv(result)
    else:
        text = render_text(result)
    stream.write(text + '\n')
