"""Exact-distance square roots of graphs."""

from ._exactroot import (
    BudgetError,
    Graph,
    ParseError,
    PreconditionError,
    bipartite_root_to_cover,
    bruteforce_tree_roots,
    clique_cover_gadget,
    complement,
    connected_components,
    count_nonisomorphic_tree_roots,
    cover_to_bipartite_root,
    emit_edge_list,
    emit_graph6,
    exact_square,
    gen_GS,
    gen_TL,
    is_clique_tree,
    is_tree,
    parse_edge_list,
    parse_graph6,
    random_clique_tree,
    random_tree,
    recognize_any_root,
    recognize_tree_root,
)

__all__ = [name for name in dir() if not name.startswith("_")]
