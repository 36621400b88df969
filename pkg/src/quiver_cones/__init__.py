"""Exact computation of semi-invariant weight cones of acyclic quivers."""

from .quiver import (
    DimVector,
    Involution,
    OrbitBasis,
    Quiver,
    Weight,
    antisym_basis,
    euler_form,
    euler_row,
    euler_col,
    tau_dim,
    tau_weight,
    validate_involution,
    validate_quiver,
    weight_eval,
)
from .schofield import ExtTable, box
from .cones import (
    InequalitySystem,
    IsoPair,
    MembershipResult,
    counts,
    enumerate_I0,
    inequalities,
    member_antiinv,
    member_dw,
    member_inductive,
)
from .redundancy import RationalLP, irredundant_core, is_redundant, redundant_row, solve_max
from .zoo import make_d5hat, make_kronecker, make_line, make_sun
from .quiverfile import (
    format_vector,
    parse_dim_vector,
    parse_quiver_file,
    parse_weight,
    serialize_quiver,
)
from . import errors

__all__ = [
    "Quiver", "DimVector", "Weight", "Involution", "OrbitBasis",
    "validate_quiver", "validate_involution", "euler_form", "weight_eval",
    "euler_row", "euler_col", "tau_dim", "tau_weight", "antisym_basis",
    "ExtTable", "box",
    "InequalitySystem", "IsoPair", "MembershipResult",
    "member_dw", "member_inductive", "member_antiinv",
    "enumerate_I0", "inequalities", "counts",
    "RationalLP", "solve_max", "redundant_row", "is_redundant", "irredundant_core",
    "make_line", "make_kronecker", "make_sun", "make_d5hat",
    "parse_quiver_file", "serialize_quiver", "parse_dim_vector", "parse_weight",
    "format_vector",
    "errors",
]
