"""Exact centre, fiber and multiplicity computations."""

import json

from ._core import (
    HeckeError,
    artin_basis,
    centre_point,
    char_poly,
    count_mult_one,
    dense_set,
    disc_power,
    f_lambda,
    from_sym_coords,
    identity_check,
    mult,
    partitions,
    rsk,
    run_command,
    simple_check,
    split_check,
    to_sym_coords,
)

__version__ = "0.1.0"


def run(command, **config):
    """Run an hcverify subcommand in process.

    Keyword arguments use the config-file keys (shape, roots, q, mode, scan,
    seed, limits, pairs, expect). Returns (report dict, exit code).
    """
    text, code = run_command(command, json.dumps(config))
    return json.loads(text), code


def error_code(exc):
    """Code name carried by a HeckeError, e.g. "NotAPower"."""
    return str(exc).split(":", 1)[0]


__all__ = [
    "HeckeError",
    "artin_basis",
    "centre_point",
    "char_poly",
    "count_mult_one",
    "dense_set",
    "disc_power",
    "error_code",
    "f_lambda",
    "from_sym_coords",
    "identity_check",
    "mult",
    "partitions",
    "rsk",
    "run",
    "run_command",
    "simple_check",
    "split_check",
    "to_sym_coords",
]
