"""
shadow sub-command: certify a true orbit near a pseudo-orbit from a CSV file.
"""

import logging

from ..cover import default_theta_beta
from ..data_loader import load_pseudo_orbit
from ..output import CommandResult, certificate_table
from ..shadow import make_pseudo_orbit, max_alpha_for_beta, shadow_finite
from ..utils import format_number


def cmd_shadow(config):
    spec = config.map_spec
    path = config.params.get('pseudo_orbit')
    if not path:
        logging.error("Missing required argument: --pseudo-orbit")
        raise ValueError("shadow needs --pseudo-orbit <csv>")
    fmap = spec.expanding_map(strict=True)
    points = load_pseudo_orbit(path, spec)
    beta = config.params.get('beta') or default_theta_beta(fmap)
    po = make_pseudo_orbit(fmap, points)
    certificate = shadow_finite(fmap, po, beta)
    passed = certificate.max_error < beta

    data = {
        'map': spec.describe(),
        'points': len(po),
        'alpha': po.alpha,
        'alpha_max': max_alpha_for_beta(fmap, beta),
        'beta': beta,
        'max_jump': po.max_jump,
        'shadow_point': str(certificate.point),
        'max_error': float(certificate.max_error),
    }
    lines = [
        f"map: {spec.name} ({spec.kind})",
        f"pseudo-orbit: {len(po)} points, max jump {format_number(po.max_jump)}",
        f"beta: {format_number(beta)}",
        f"shadow point: {format_number(certificate.point, 17)}",
        f"max error: {format_number(float(certificate.max_error))}",
    ]
    return CommandResult('shadow', data, certificate_table(certificate), lines, passed=passed)
