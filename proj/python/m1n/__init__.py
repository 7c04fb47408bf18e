"""Exact divisor-class computations on M-bar_{1,n} and M-bar_g.

Classes, profiles and certificates are plain dicts in the JSON file formats
used by the ``m1n`` command-line tool; scalars are ``Fraction`` for
constants and lists of ``Fraction`` (ascending powers of a) otherwise.
"""

import json
from fractions import Fraction

from . import _m1n
from ._m1n import (
    CertificateRefused,
    DomainError,
    Error,
    IncompletePremise,
    IntegralityError,
    MarkingIndexError,
    ParseError,
    ResourceGuardError,
    SpaceMismatchError,
)

__all__ = [
    "glue_pullback", "forget_pullback", "pair", "normalize", "export",
    "pairing_direct", "pairing_binomial", "pairing_closed", "certify",
    "verify", "run_cli", "scalar", "Error", "MarkingIndexError",
    "SpaceMismatchError", "DomainError", "ResourceGuardError",
    "IntegralityError", "ParseError", "IncompletePremise", "CertificateRefused",
]


def scalar(value):
    """Decode a serialized scalar: "p/q" -> Fraction, [c0, c1, ...] -> list."""
    if isinstance(value, list):
        return [Fraction(c) for c in value]
    return Fraction(value)


def glue_pullback(w, m):
    return json.loads(_m1n.glue_pullback(json.dumps(w), m))


def forget_pullback(w, n):
    return json.loads(_m1n.forget_pullback(json.dumps(w), n))


def pair(profile, cls):
    return scalar(json.loads(_m1n.pair(json.dumps(profile), json.dumps(cls))))


def normalize(cls):
    return json.loads(_m1n.normalize(json.dumps(cls)))


def export(name):
    return json.loads(_m1n.export_item(name))


def pairing_direct(d, cap=6):
    return Fraction(_m1n.pairing_direct(d, cap))


def pairing_binomial(d):
    return Fraction(_m1n.pairing_binomial(d))


def pairing_closed(d):
    return Fraction(_m1n.pairing_closed(d))


def certify(divisor, m, profile, irreducible=False):
    return json.loads(_m1n.certify(json.dumps(divisor), m, json.dumps(profile), irreducible))


def verify(section="all", max_d=12, direct_max_d=6):
    """Return (all_pass, report dict)."""
    ok, report = _m1n.verify(section, max_d, direct_max_d)
    return ok, json.loads(report)


def run_cli(args):
    """Return (exit code, stdout, stderr)."""
    return _m1n.run_cli(list(args))
