"""Hamilton cycles in odd graphs and middle levels graphs."""

from ._core import (
    binomial,
    brute_force_hamilton,
    catalan,
    enumerate_dyck,
    factor,
    family_bits,
    hamilton_middle_levels,
    hamilton_odd,
    mirror,
    path,
    pattern,
    pi,
    tree_json,
    verify_certificate,
    verify_factor,
    verify_psi,
    verify_tree,
)

__all__ = [
    "binomial",
    "brute_force_hamilton",
    "catalan",
    "enumerate_dyck",
    "factor",
    "family_bits",
    "hamilton_middle_levels",
    "hamilton_odd",
    "mirror",
    "path",
    "pattern",
    "pi",
    "tree_json",
    "verify_certificate",
    "verify_factor",
    "verify_psi",
    "verify_tree",
]
