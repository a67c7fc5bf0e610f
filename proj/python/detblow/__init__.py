"""Exact determinantal geometry over prime fields.

Thin dict-returning wrappers around the compiled core; matrices travel as the
same JSON documents the CLI reads and writes.
"""

import json

from detblow import _core  # type: ignore[attr-defined]

DetblowError = _core.DetblowError

DEFAULT_PRIME = 2**31 - 1


def _loads(s):
    return json.loads(s)


def sample(kind, value, n=3, p=DEFAULT_PRIME, seed=1):
    """Sample a Hilbert-Burch matrix: kind 'bminimal' (degree s) or 'linear' (sigma)."""
    return _loads(_core.sample(kind, value, n, p, seed))


def sample_degree_matrix(degrees, n=3, p=DEFAULT_PRIME, seed=1):
    return _loads(_core.sample_degree_matrix(degrees, n, p, seed))


def analyze(matrix, max_degree=0):
    """Degree, dimension, sigma, genus and Hilbert table of the variety."""
    return _loads(_core.analyze(json.dumps(matrix), max_degree))


def secant_loci(matrix, max_degree=0):
    """Line locus (Lambda) and sigma-secant locus (Gamma) reports."""
    return _loads(_core.secant_loci(json.dumps(matrix), max_degree))


def secant_witness(matrix, seed=1, max_degree=0):
    """A verified rational sigma-secant line, or None."""
    return _loads(_core.secant_witness(json.dumps(matrix), seed, max_degree))


def blowup(matrix, mode="sigma", max_degree=0):
    """Presentation and invariants of the blown-up image Y."""
    return _loads(_core.blowup(json.dumps(matrix), mode, max_degree))


def line_length(matrix, p_point, q_point):
    """Intersection length of the variety with the line through two points."""
    return _loads(_core.line_length(json.dumps(matrix), list(p_point), list(q_point)))


def bminimal_profile(s):
    """Type (d, k), templates, twists and genus of the B-minimal curve of degree s."""
    return _loads(_core.bminimal_profile(s))


def residual(a, b, deg_c, g_c):
    """Liaison arithmetic: the residual curve of C in a complete intersection (a, b)."""
    return _loads(_core.residual(a, b, deg_c, g_c))


def en_betti_table(n, sigma):
    """Eagon-Northcott Betti table of I_Y as [index, twist, multiplicity] rows."""
    return _loads(_core.en_betti_table(n, sigma))


def genus_minimal(s):
    return _core.genus_minimal(s)
