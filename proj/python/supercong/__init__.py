"""Python access to the supercong verification core."""

import json
from fractions import Fraction

from . import _core
from ._core import ConfigError, GuardExceeded, PreconditionError

__version__ = _core.__version__

__all__ = [
    "ConfigError",
    "GuardExceeded",
    "PreconditionError",
    "corollary_check",
    "corollary_lhs",
    "eval_identity",
    "gamma_p",
    "harmonic",
    "identity_names",
    "oracle_value",
    "run",
    "theorem_check",
    "verify_identity",
]


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def harmonic(n, order=1):
    return _fraction(_core.harmonic(n, order))


def eval_identity(name, n):
    lhs, rhs = _core.eval_identity(name, n)
    return _fraction(lhs), _fraction(rhs)


def oracle_value(n, lam, p):
    """p^n times the finite-field (n+1)F_n at lam, as an int."""
    return int(_core.oracle_value(n, lam, p))


gamma_p = _core.gamma_p
corollary_lhs = _core.corollary_lhs
corollary_check = _core.corollary_check
theorem_check = _core.theorem_check
identity_names = _core.identity_names
verify_identity = _core.verify_identity


def run(subcommand, *args):
    """Run a CLI subcommand with JSON output; returns (exit_code, report)."""
    code, out, err = _core.cli([subcommand, *args, "--format", "json"])
    if code == 2:
        raise ConfigError(err.strip())
    return code, json.loads(out)
