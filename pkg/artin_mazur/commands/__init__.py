"""
Commands module for the artin-mazur command line.

Each sub-command lives in its own module and maps an ExperimentConfig to
a CommandResult.
"""

from .zeta import cmd_zeta
from .count import cmd_count
from .entropy import cmd_entropy
from .shadow import cmd_shadow
from .cover import cmd_cover
from .check import cmd_check


def register_all_commands(registry=None):
    """
    Register all sub-commands.

    Args:
        registry: Optional dict to fill (a new one is created otherwise)

    Returns:
        Dict sub-command name -> command function
    """
    registry = {} if registry is None else registry
    registry.update(
        {
            'zeta': cmd_zeta,
            'count': cmd_count,
            'entropy': cmd_entropy,
            'shadow': cmd_shadow,
            'cover': cmd_cover,
            'check': cmd_check,
        }
    )
    return registry


__all__ = [
    'register_all_commands',
    'cmd_zeta',
    'cmd_count',
    'cmd_entropy',
    'cmd_shadow',
    'cmd_cover',
    'cmd_check',
]
