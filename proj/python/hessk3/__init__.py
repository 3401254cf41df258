"""Exact verification kernel for the Hessian-quartic K3 family."""

from ._core import (
    __version__,
    constant_term,
    cusp,
    enumerate_triples,
    fc_scaling,
    lattice_summary,
    reduce_triple,
    smith_normal_form,
    theta_constants,
    theta_diagonal,
    verify,
)

__all__ = [
    "__version__",
    "constant_term",
    "cusp",
    "enumerate_triples",
    "fc_scaling",
    "lattice_summary",
    "reduce_triple",
    "smith_normal_form",
    "theta_constants",
    "theta_diagonal",
    "verify",
]
