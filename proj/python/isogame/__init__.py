"""Exact solver and verification suite for the isolation game on graphs."""

from ._core import (
    Graph,
    canonical_graph6,
    cycle,
    enumerate_connected,
    enumerate_trees,
    extremal_d,
    extremal_s,
    family_f,
    from_graph6,
    fuzz,
    game_value,
    ghat,
    is_terminal,
    isolation_number,
    make_graphs,
    marked_set,
    max_turn_value_gap,
    optimal_moves,
    path,
    playable,
    policy_vs_optimal,
    recheck,
    solve,
    to_graph6,
    verify_cycles,
    verify_ghat,
    verify_paths,
    verify_trees,
    white_set,
)

__all__ = [
    "Graph",
    "canonical_graph6",
    "cycle",
    "enumerate_connected",
    "enumerate_trees",
    "extremal_d",
    "extremal_s",
    "family_f",
    "from_graph6",
    "fuzz",
    "game_value",
    "ghat",
    "is_terminal",
    "isolation_number",
    "make_graphs",
    "marked_set",
    "max_turn_value_gap",
    "optimal_moves",
    "path",
    "playable",
    "policy_vs_optimal",
    "recheck",
    "solve",
    "to_graph6",
    "verify_cycles",
    "verify_ghat",
    "verify_paths",
    "verify_trees",
    "white_set",
]
