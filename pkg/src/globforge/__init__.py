"""Finite truncated higher-dimensional structures: validators, free
constructions, and a derivation checker for their equational theory."""

from .globular import (
    GlobularMorphism,
    TruncatedGlobularSet,
    boundary,
    globular_set,
    parallel,
    validate_globular,
    validate_morphism,
)
from .layers import (
    ReflexorStructure,
    ReversorStructure,
    validate_involutive,
    validate_reflexive_compat,
    validate_reflexors,
    validate_reversors,
)
from .magma import (
    AmbiguousInverseError,
    CompositionStructure,
    InfinityMagma,
    NMagma,
    NoInverseError,
    StrictNCategory,
    check_functor_reversors,
    compute_index,
    derive_canonical_reversors,
    validate_magma,
    validate_strict,
)
from .report import ValidationReport, Violation, emit_report, parse_report
from .stretching import (
    Stretching,
    dump_stretching,
    generate_free_stretching,
    induced_algebra_magma,
    load_stretching,
    validate_stretching,
)
from .terms import StretchTerm, TermContext
from .normalform import Strictifier, normalize2
from .words import Word, free_groupoid_cells, make_word, parse_word, reduce_word, word_name
from .dsl import ParseError, parse_structure
from .engine import builtin_suites, check_derivation, check_suite, rule_library

__version__ = "0.1.0"
