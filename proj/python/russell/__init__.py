"""Numerical verification of definite-integral identities."""

from ._core import (
    DomainError,
    agm,
    ellip_k,
    gamma,
    gauss_2f1,
    gauss_constant,
    identity_ids,
    integrate_finite,
    integrate_semi_infinite,
    jacobi,
    lemma1_closed_form,
    lerch_phi,
    moment_recursive,
    pochhammer,
    r1_series,
    run,
    sweep,
    verify,
)

__all__ = [
    "DomainError",
    "agm",
    "ellip_k",
    "gamma",
    "gauss_2f1",
    "gauss_constant",
    "identity_ids",
    "integrate_finite",
    "integrate_semi_infinite",
    "jacobi",
    "lemma1_closed_form",
    "lerch_phi",
    "moment_recursive",
    "pochhammer",
    "r1_series",
    "run",
    "sweep",
    "verify",
]
