"""Exhaustive sweep: every connected labeled graph up to 4 vertices.

Small enough to brute-force completely, this closes the corner cases that
random corpora can miss: every adjacency layout, every source, all four
searches, fast output membership, and verifier agreement.
"""

from __future__ import annotations

import itertools

import lexsearch as lx

from conftest import ALL_KINDS, FAST_ENGINES, all_labeled_graphs


def test_every_small_graph_every_source_every_kind():
    for n in (2, 3, 4):
        for base in all_labeled_graphs(n):
            for source in range(1, n + 1):
                g = base.with_source(source)
                for kind in ALL_KINDS:
                    valid = set(lx.enumerate_orderings(g, kind))
                    sigma, _ = FAST_ENGINES[kind](g, debug=True)
                    assert tuple(sigma) in valid, (g.edges, source, kind, sigma)
                    ref, _ = lx.reference_search(g, kind)
                    assert tuple(ref) in valid


def test_every_small_graph_verifier_agrees_with_membership():
    for n in (2, 3, 4):
        for g in all_labeled_graphs(n):
            perms = list(itertools.permutations(range(1, n + 1)))
            for kind in ALL_KINDS:
                valid = set(lx.enumerate_orderings(g, kind))
                for perm in perms:
                    assert lx.verify_ordering(g, kind, list(perm)).valid == (
                        perm in valid
                    ), (g.edges, kind, perm)


def test_five_vertex_graphs_from_default_source():
    graphs = all_labeled_graphs(5)
    assert len(graphs) == 728  # connected labeled graphs on 5 vertices
    for g in graphs:
        for kind in ALL_KINDS:
            sigma, _ = FAST_ENGINES[kind](g, debug=True)
            assert lx.verify_ordering(g, kind, sigma).valid, (g.edges, kind)
