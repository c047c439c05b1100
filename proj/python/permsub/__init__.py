"""Valuated flag matroids and permutahedral subdivisions.

Every function takes and returns plain Python data in the JSON schemas of the
``permsub`` command-line tool: rationals are ``"p/q"`` strings, valuated
matroids are ``{"n", "d", "values"}`` dicts, flags are lists of those, and
height functions are ``{"n", "heights"}`` dicts.
"""

import json

from . import _core

InputError = _core.InputError
FORMAT_VERSION = _core.FORMAT_VERSION

__all__ = [
    "InputError",
    "FORMAT_VERSION",
    "check_plucker",
    "check_incidence",
    "check_positive_plucker",
    "check_positive_incidence",
    "check_flag",
    "truncate",
    "elongate",
    "tropicalize",
    "compress",
    "compress_point",
    "subdivide",
    "skeleton",
    "check_positive_flag",
    "decompose",
    "lift",
    "fan",
    "bruhat_leq",
    "permutations",
]


def _enc(value):
    return json.dumps(value)


def check_plucker(mu):
    return json.loads(_core.check_plucker(_enc(mu)))


def check_incidence(mu, nu):
    return json.loads(_core.check_incidence(_enc(mu), _enc(nu)))


def check_positive_plucker(mu):
    return json.loads(_core.check_positive_plucker(_enc(mu)))


def check_positive_incidence(nu, mu):
    return json.loads(_core.check_positive_incidence(_enc(nu), _enc(mu)))


def check_flag(flag):
    return json.loads(_core.check_flag(_enc(flag)))


def truncate(mu):
    return json.loads(_core.truncate(_enc(mu)))


def elongate(mu):
    return json.loads(_core.elongate(_enc(mu)))


def tropicalize(matrix, rows=0):
    return json.loads(_core.tropicalize(_enc(matrix), rows))


def compress(flag):
    return json.loads(_core.compress(_enc(flag)))


def compress_point(flag, point):
    """Compression at a lattice point; None when every decomposition is infinite."""
    return _core.compress_point(_enc(flag), list(point))


def subdivide(heights):
    return json.loads(_core.subdivide(_enc(heights)))


def skeleton(heights):
    return json.loads(_core.skeleton(_enc(heights)))


def check_positive_flag(heights):
    return json.loads(_core.check_positive_flag(_enc(heights)))


def decompose(heights):
    return json.loads(_core.decompose(_enc(heights)))


def lift(flag):
    return json.loads(_core.lift(_enc(flag)))


def fan(n, homology=False, refinement=False, threads=0):
    return json.loads(_core.fan(n, homology, refinement, threads))


def bruhat_leq(a, b):
    return _core.bruhat_leq(a, b)


def permutations(n):
    return list(_core.permutations(n))
