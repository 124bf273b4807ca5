"""Exact invariants of finite topological spaces (posets)."""

from ._core import (
    FiniteTCError,
    Poset,
    builtin,
    cat,
    cc,
    cc_bounded,
    cc_inf,
    cc_k,
    core,
    homotopic,
    is_contractible,
    parse_poset,
    sc,
)

__all__ = [
    "FiniteTCError",
    "Poset",
    "builtin",
    "cat",
    "cc",
    "cc_bounded",
    "cc_inf",
    "cc_k",
    "core",
    "homotopic",
    "is_contractible",
    "parse_poset",
    "sc",
]
