"""Exact ladder-operator algebra for the Jaynes-Cummings operator bundle."""

from ._fockbundle import (
    ConfigError,
    DomainError,
    Operator,
    OpMatrix,
    __version__,
    chart_unitary,
    dirac_string_map,
    h_jc,
    lift,
    nc_spin_rep,
    projector,
    propagator,
    spin_rep,
    transition,
    verify,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Operator",
    "OpMatrix",
    "chart_unitary",
    "dirac_string_map",
    "h_jc",
    "lift",
    "nc_spin_rep",
    "projector",
    "propagator",
    "spin_rep",
    "transition",
    "verify",
]
