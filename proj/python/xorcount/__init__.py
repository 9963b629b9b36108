"""XOR-count search and verification for multiplication matrices over GF(2)."""

import json

from . import _core
from ._core import (
    CapError,
    char_poly,
    companion,
    irreducibles,
    is_irreducible,
    min_poly,
    netlist,
    normalize_poly,
    poly_mul,
    poly_pow,
    poly_weight,
    realize,
    smallest_factor,
)

__all__ = [
    "CapError",
    "char_poly",
    "companion",
    "element_class",
    "emit",
    "irreducibles",
    "is_irreducible",
    "min_poly",
    "netlist",
    "normalize_poly",
    "poly_mul",
    "poly_pow",
    "poly_weight",
    "realize",
    "search",
    "simulate",
    "smallest_factor",
    "table",
    "verify",
    "xor_count",
]


def search(poly, n=None, t_max=2, threads=1, timing=True):
    return json.loads(_core.search(poly, n, t_max, threads, timing))


def table(degree, t_max=2, threads=1, timing=True):
    return json.loads(_core.table(degree, t_max, threads, timing))


def verify(claim, n_max=None, d_max=7, threads=1, fail_fast=False, timing=True):
    return json.loads(_core.verify(claim, n_max, d_max, threads, fail_fast, timing))


def emit(cycle_type, factors):
    return json.loads(_core.emit(list(cycle_type), [tuple(f) for f in factors]))


def simulate(program, bits):
    if not isinstance(program, str):
        program = json.dumps(program)
    return _core.simulate(program, list(bits))


def xor_count(rows, t_max=2):
    return json.loads(_core.xor_count(list(rows), t_max))


def element_class(rows):
    out = _core.element_class(list(rows))
    return None if out is None else json.loads(out)
