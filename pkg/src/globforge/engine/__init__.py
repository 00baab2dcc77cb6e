"""Equational engine: terms, rules, derivations, and the built-in suites."""

from .derivation import (
    BracketIntroStep,
    Derivation,
    DerivationContext,
    InverseUniquenessStep,
    RewriteStep,
    Suite,
    apply_step,
    check_derivation,
    check_suite,
)
from .rules import RewriteRule, rule_library
from .suites import builtin_suites

__all__ = [
    "BracketIntroStep",
    "Derivation",
    "DerivationContext",
    "InverseUniquenessStep",
    "RewriteRule",
    "RewriteStep",
    "Suite",
    "apply_step",
    "builtin_suites",
    "check_derivation",
    "check_suite",
    "rule_library",
]
