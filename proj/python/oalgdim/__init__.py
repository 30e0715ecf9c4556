"""Canonical dimensions of locally analytic representations.

Rational inputs may be ints, strings such as "1/2", or Fraction; rational
outputs are Fraction.  Word arguments to `element` are 0-based, text words
("s2s1", "2,1") are 1-based.
"""

from fractions import Fraction

from . import _oalgdim
from ._oalgdim import (
    OalgdimError,
    RootDatum,
    WeylElement,
    a_coeffs,
    bruhat_leq,
    dim_bounds,
    dim_parabolic_induction,
    element,
    enumerate_group,
    gl2_trianguline_dim,
    goldie_profile,
    kl_poly,
    load_cache,
    longest_element,
    parse_element,
    root_datum,
    save_cache,
)

__version__ = _oalgdim.__version__

__all__ = [
    "OalgdimError",
    "RootDatum",
    "WeylElement",
    "a_coeffs",
    "bruhat_leq",
    "dim_bounds",
    "dim_parabolic_induction",
    "dim_simple",
    "dominant_conjugate",
    "dot_dominant",
    "drinfeld_dim",
    "element",
    "enumerate_group",
    "error_kind",
    "gl2_trianguline_dim",
    "goldie_degree",
    "goldie_profile",
    "kl_poly",
    "load_cache",
    "longest_element",
    "main",
    "parse_element",
    "root_datum",
    "save_cache",
]


def _coords(values):
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("weights are exact; pass int, str or Fraction, not float")
        out.append(str(v))
    return out


def _fractions(values):
    return [Fraction(v) for v in values]


def error_kind(exc):
    """The kind name carried by an OalgdimError, e.g. 'NonIntegralWeight'."""
    return getattr(exc, "kind", None)


def dot_dominant(datum, weight):
    return _oalgdim.dot_dominant(datum, _coords(weight))


def dominant_conjugate(datum, weight):
    out = _oalgdim.dominant_conjugate(datum, _coords(weight))
    out["mu"] = _fractions(out["mu"])
    return out


def goldie_degree(w, t=None):
    return _oalgdim.goldie_degree(w, None if t is None else _coords(t))


def dim_simple(datum, weight):
    out = _oalgdim.dim_simple(datum, _coords(weight))
    out["mu"] = _fractions(out["mu"])
    return out


def drinfeld_dim(d, r, s, pairing="lagged", orientation="upper"):
    out = _oalgdim.drinfeld_dim(d, r, s, pairing, orientation)
    for step in out["steps"]:
        step["mu"] = _fractions(step["mu"])
        step["dominant"] = _fractions(step["dominant"])
    return out


def main(argv=None):
    """Run the command line front end in-process; returns the exit code."""
    import sys

    code, out, err = _oalgdim.run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
