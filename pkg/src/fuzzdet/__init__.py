"""Fuzzy finite automata over complete residuated lattices.

Exact-arithmetic evaluation of fuzzy languages, four determinization
constructions producing crisp-deterministic fuzzy automata (forward and
reverse Nerode, the minimal inclusion-degree construction, double
reversal), a psi-glued generalization, a line-oriented document format and
DOT export.
"""

from .algebra import (
    FuzzyMatrix,
    FuzzyVector,
    SemiringClosure,
    ValueSet,
    dot,
    identity_matrix,
    inclusion_degree,
    mat_compose,
    mat_vec,
    semiring_closure,
    vec_mat,
)
from .automata import (
    Cdfa,
    FuzzyAutomaton,
    StateLabel,
    Word,
    cdfa_as_fuzzy_automaton,
    cdfa_equivalent,
    cdfa_evaluate,
    evaluate,
    find_witness,
    reverse,
    right_language_step,
)
from .determinize import (
    DEFAULT_CAP,
    BuildStats,
    CapExceeded,
    DetOutcome,
    InvarianceViolation,
    PreflightReport,
    TransitionTree,
    TreeVertex,
    automaton_values,
    brzozowski,
    check_left_invariant,
    d_automaton,
    d_epsilon,
    d_step,
    nerode,
    preflight,
    psi_d_automaton,
    reverse_nerode,
    reverse_nerode_tree,
)
from .errors import (
    AlphabetMismatch,
    DimensionMismatch,
    FormatError,
    FuzzdetError,
    InvalidCap,
    LatticeMismatch,
    PsiNotLeftInvariant,
    PsiNotReflexive,
    UnknownSymbol,
)
from .formats import (
    export_dot,
    format_word,
    parse_automaton,
    parse_matrix,
    parse_word,
    serialize_automaton,
)
from .lattice import (
    BOOLEAN,
    GODEL,
    GOGUEN,
    LUKASIEWICZ,
    Lattice,
    Value,
    chain,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatch",
    "BOOLEAN",
    "BuildStats",
    "CapExceeded",
    "Cdfa",
    "DEFAULT_CAP",
    "DetOutcome",
    "DimensionMismatch",
    "FormatError",
    "FuzzdetError",
    "FuzzyAutomaton",
    "FuzzyMatrix",
    "FuzzyVector",
    "GODEL",
    "GOGUEN",
    "InvalidCap",
    "InvarianceViolation",
    "LUKASIEWICZ",
    "Lattice",
    "LatticeMismatch",
    "PreflightReport",
    "PsiNotLeftInvariant",
    "PsiNotReflexive",
    "SemiringClosure",
    "StateLabel",
    "TransitionTree",
    "TreeVertex",
    "UnknownSymbol",
    "Value",
    "ValueSet",
    "Word",
    "automaton_values",
    "brzozowski",
    "cdfa_as_fuzzy_automaton",
    "cdfa_equivalent",
    "cdfa_evaluate",
    "chain",
    "check_left_invariant",
    "d_automaton",
    "d_epsilon",
    "d_step",
    "dot",
    "evaluate",
    "export_dot",
    "find_witness",
    "format_word",
    "identity_matrix",
    "inclusion_degree",
    "mat_compose",
    "mat_vec",
    "nerode",
    "parse_automaton",
    "parse_matrix",
    "parse_word",
    "preflight",
    "psi_d_automaton",
    "reverse",
    "reverse_nerode",
    "reverse_nerode_tree",
    "right_language_step",
    "semiring_closure",
    "serialize_automaton",
    "vec_mat",
]
