"""Python access to the conegeom numerics.

Bodies are passed as dicts (or JSON strings) in the same format the CLI reads.
"""
import json as _json

from . import _core
from ._core import GeometryError, QuadratureConfig, omega_lp_closed_form, section5_closed_form, section5_integral
from ._core import beta_power_expansion, weighted_beta_expansion, stirling_rel_error

__all__ = [
    "GeometryError", "QuadratureConfig", "describe", "support", "radial", "volume", "polar_volume", "as_p",
    "omega_entropy", "omega_p_limit", "omega_lp_closed_form", "kl_p_q", "kl_q_p", "zp_support",
    "floating_support", "beta_power_expansion", "weighted_beta_expansion", "stirling_rel_error",
    "section5_closed_form", "section5_integral",
]


def _spec(body):
    return body if isinstance(body, str) else _json.dumps(body)


def _cfg(cfg):
    return cfg if cfg is not None else QuadratureConfig()


def describe(body):
    return _core.describe(_spec(body))


def support(body, u):
    return _core.support(_spec(body), list(map(float, u)))


def radial(body, u):
    return _core.radial(_spec(body), list(map(float, u)))


def volume(body, cfg=None):
    return _core.volume(_spec(body), _cfg(cfg))


def polar_volume(body, cfg=None):
    return _core.polar_volume(_spec(body), _cfg(cfg))


def as_p(body, p, cfg=None):
    """p may be float('inf') or float('-inf')."""
    return _core.as_p(_spec(body), float(p), _cfg(cfg))


def omega_entropy(body, cfg=None):
    return _core.omega_entropy(_spec(body), _cfg(cfg))


def omega_p_limit(body, cfg=None):
    return _core.omega_p_limit(_spec(body), _cfg(cfg))


def kl_p_q(body, cfg=None):
    return _core.kl_p_q(_spec(body), _cfg(cfg))


def kl_q_p(body, cfg=None):
    return _core.kl_q_p(_spec(body), _cfg(cfg))


def zp_support(body, p, theta, cfg=None):
    return _core.zp_support(_spec(body), float(p), list(map(float, theta)), _cfg(cfg))


def floating_support(body, delta, theta, cfg=None):
    return _core.floating_support(_spec(body), float(delta), list(map(float, theta)), _cfg(cfg))
