"""Synchronizing-word construction toolkit.

Thin re-export of the compiled core. Words are strings over the automaton's
letter names, state sets are Python sets of ints, exact rationals are
fractions.Fraction.
"""

from ._core import (
    Automaton,
    InapplicableError,
    InputError,
    InternalError,
    NoSyncError,
    apply,
    apply_state,
    cerny_automaton,
    distribution_matrix,
    from_json,
    gen_random,
    is_eulerian,
    is_strongly_connected,
    is_synchronizing,
    load,
    one_cluster_letters,
    oracle_shortest_sync,
    preimage,
    pseudo_eulerian_witness,
    save,
    sync_one_cluster,
    sync_pseudo_eulerian,
    sync_via_w,
    theorem_bound,
    verify_uniform_w,
    zscore,
)

__all__ = [
    "Automaton",
    "InapplicableError",
    "InputError",
    "InternalError",
    "NoSyncError",
    "apply",
    "apply_state",
    "cerny_automaton",
    "distribution_matrix",
    "from_json",
    "gen_random",
    "is_eulerian",
    "is_strongly_connected",
    "is_synchronizing",
    "load",
    "one_cluster_letters",
    "oracle_shortest_sync",
    "preimage",
    "pseudo_eulerian_witness",
    "save",
    "sync_one_cluster",
    "sync_pseudo_eulerian",
    "sync_via_w",
    "theorem_bound",
    "verify_uniform_w",
    "zscore",
]
