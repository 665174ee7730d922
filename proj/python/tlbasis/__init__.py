"""Exact computations in the Temperley-Lieb algebra: diagram, Zinno and X bases."""

import json as _json

from ._tlbasis import (
    FullyCommutative,
    InvariantError,
    LaurentPoly,
    NoncrossingPartition,
    PreconditionError,
    TLElement,
    basis_order,
    closed_form_h,
    enumerate_fc,
    enumerate_pc,
    f_set,
    h_matrix,
    m_matrix,
    p_coefficient,
    phi,
    psi,
    q_set,
    x_element,
    x_lr,
    zinno_element,
)
from ._tlbasis import _verify_json


def verify(n_max, only=(), seed=1):
    """Run the statement checks up to rank n_max; returns a list of report dicts."""
    return _json.loads(_verify_json(n_max, list(only), seed))


__all__ = [
    "FullyCommutative",
    "InvariantError",
    "LaurentPoly",
    "NoncrossingPartition",
    "PreconditionError",
    "TLElement",
    "basis_order",
    "closed_form_h",
    "enumerate_fc",
    "enumerate_pc",
    "f_set",
    "h_matrix",
    "m_matrix",
    "p_coefficient",
    "phi",
    "psi",
    "q_set",
    "verify",
    "x_element",
    "x_lr",
    "zinno_element",
]
