"""Chromatic quasisymmetric functions, vertical-strip LLT polynomials and
unipotent characters of GL_n(F_q).

Results come back as plain dicts/lists decoded from the library's JSON.
"""

import json

from . import _core
from ._core import ChromglError, SizeGuard, set_allow_large_groups

__all__ = [
    "ChromglError",
    "SizeGuard",
    "as_expand",
    "check_names",
    "csf",
    "d_coeffs",
    "induce",
    "llt",
    "p_one_induced",
    "set_allow_large_groups",
    "verify",
]


def csf(graph):
    """X_gamma in the monomial basis. `graph` is a Dyck word or "n:1-2,2-3"."""
    return json.loads(_core.csf(graph))


def llt(path):
    return json.loads(_core.llt(path))


def as_expand(path):
    return json.loads(_core.as_expand(path))


def d_coeffs(graph):
    return json.loads(_core.d_coeffs(graph))


def induce(kind, index, q):
    """Induce chi_bar/chi/delta/delta_bar (graph index) or psi (Schroder word) to GL_n(F_q)."""
    return json.loads(_core.induce(kind, index, q))


def p_one_induced(kind, index, q):
    return json.loads(_core.p_one_induced(kind, index, q))


def check_names():
    return list(_core.check_names())


def verify(names=None, n=None, q=None, deep=False):
    if names is None:
        names = check_names()
    elif isinstance(names, str):
        names = [names]
    return json.loads(_core.verify(list(names), n, q, deep))
