"""Invariants of right-angled Coxeter groups, their Artin groups, and the
adjoint groups of their Coxeter quandles.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from raq._core import (  # noqa: F401
    INFINITE_ORDER,
    CellCapError,
    CoxeterMatrix,
    CoxeterSystem,
    SimpleGraph,
    SimplicialComplex,
    abelianize,
    adjoint_product,
    bbcg_check,
    betti,
    build_right_angled_system,
    build_system,
    clique_count_by_size,
    collapse_crosscheck,
    deletion,
    e3_hilbert,
    flag_complex,
    full_subcomplex,
    generation_check,
    graph_to_json,
    is_flag,
    link,
    normalize,
    parse_graph,
    reflections,
    sr_dim,
    tits_matrix,
    word_equals,
)

__all__ = [
    "INFINITE_ORDER",
    "CellCapError",
    "CoxeterMatrix",
    "CoxeterSystem",
    "SimpleGraph",
    "SimplicialComplex",
    "abelianize",
    "adjoint_product",
    "bbcg_check",
    "betti",
    "build_right_angled_system",
    "build_system",
    "clique_count_by_size",
    "collapse_crosscheck",
    "deletion",
    "e3_hilbert",
    "flag_complex",
    "full_subcomplex",
    "generation_check",
    "graph_to_json",
    "is_flag",
    "link",
    "normalize",
    "parse_graph",
    "reflections",
    "sr_dim",
    "tits_matrix",
    "word_equals",
]

__version__ = "0.1.0"
