"""Weighted complete intersection toolkit.

Families and pairs are passed in the text grammar used by the CLI, for
example ``"8,8,8 / 2^4,3^5,5^3"`` and ``"6,6/2^2,3^2"``.
"""

import json

from . import _core
from ._core import (
    DomainError,
    UsageError,
    augment,
    brauer_bound,
    brauer_bound_min,
    cancel,
    delta,
    factorize,
    frobenius,
    fundamental_index,
    gcd_many,
    h0,
    is_h_regular,
    is_smooth,
    monomial_count,
    quasi_smooth,
    representable,
    run_cli,
    wci_well_formed,
)


def check(family):
    return json.loads(_core.check_json(family))


def pair_report(pair, h=1, prime=None):
    return json.loads(_core.pair_report_json(pair, h, prime))


def base_locus(family, ell):
    return json.loads(_core.base_locus_json(family, ell))


def verify(claim, bounds=None, prime=None, workers=0, timing=True):
    return json.loads(_core.verify_json(claim, bounds or {}, prime, workers, timing))


__all__ = [
    "DomainError",
    "UsageError",
    "augment",
    "base_locus",
    "brauer_bound",
    "brauer_bound_min",
    "cancel",
    "check",
    "delta",
    "factorize",
    "frobenius",
    "fundamental_index",
    "gcd_many",
    "h0",
    "is_h_regular",
    "is_smooth",
    "monomial_count",
    "pair_report",
    "quasi_smooth",
    "representable",
    "run_cli",
    "verify",
    "wci_well_formed",
]
