"""Ordering verifier: the correctness gate for the fast engines.

Replays the label rules with the selection at every step forced to the
candidate ordering, and checks that each forced choice carried a
lexicographically maximal label.  The replay shares only the label rules
with the fast engines, never their data structures, so a bug in a fast
engine cannot certify itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .labels import (
    GREATER,
    INF,
    Label,
    SearchKind,
    format_label,
    lex_compare,
    update,
)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""
    step: int = 0
    vertex: int = 0
    vertex_label: Label = ()
    witness: int = 0
    witness_label: Label = ()

    def __bool__(self) -> bool:
        return self.valid

    def message(self) -> str:
        if self.valid:
            return "valid"
        if self.witness:
            return (
                f"invalid at step {self.step}: vertex {self.vertex} has label "
                f"{format_label(self.vertex_label)} but vertex {self.witness} "
                f"has label {format_label(self.witness_label)}"
            )
        return f"invalid: {self.reason}"


VALID = Verdict(valid=True)


def verify_ordering(
    g: Graph,
    kind: SearchKind,
    sigma: Sequence[int],
    *,
    allow_disconnected: bool = False,
) -> Verdict:
    """Check whether ``sigma`` is a possible output of the search ``kind``.

    Non-permutations and wrong lengths give an invalid verdict with a
    diagnostic rather than an exception.  Ties are permitted: any vertex
    whose label no other unnumbered vertex beats is acceptable.
    """
    n = g.n
    if len(sigma) != n:
        return Verdict(False, reason=f"not a permutation: length {len(sigma)} != {n}")
    seen = [False] * (n + 1)
    for v in sigma:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
            return Verdict(False, reason=f"not a permutation of 1..{n}")
        seen[v] = True
    verdict, _ = _replay(g, kind, sigma, allow_disconnected=allow_disconnected)
    return verdict


def replay_selection_labels(
    g: Graph,
    kind: SearchKind,
    sigma: Sequence[int],
    *,
    allow_disconnected: bool = False,
) -> list[Label]:
    """Labels each sigma[i] held when it was numbered, maximal or not.

    Useful for regenerating golden per-step label tables along a fixed
    ordering without requiring the ordering to be valid.
    """
    _, selection_labels = _replay(
        g, kind, sigma, allow_disconnected=allow_disconnected
    )
    return selection_labels


def _replay(
    g: Graph,
    kind: SearchKind,
    sigma: Sequence[int],
    *,
    allow_disconnected: bool,
) -> tuple[Verdict, list[Label]]:
    n = g.n
    labels: list[Label] = [()] * (n + 1)
    labels[g.source] = (INF,)
    numbered = [False] * (n + 1)
    # Labeled unnumbered vertices, maintained with swap-removal so each
    # step scans only actual candidates.
    candidates: list[int] = [g.source]
    cand_index = [-1] * (n + 1)
    cand_index[g.source] = 0
    selection_labels: list[Label] = []
    failure: Verdict | None = None

    def drop_candidate(v: int) -> None:
        idx = cand_index[v]
        if idx < 0:
            return
        last = candidates[-1]
        candidates[idx] = last
        cand_index[last] = idx
        candidates.pop()
        cand_index[v] = -1

    for i, chosen in enumerate(sigma, start=1):
        chosen_label = labels[chosen]
        witness = 0
        for v in candidates:
            if v == chosen:
                continue
            if lex_compare(labels[v], chosen_label) == GREATER:
                witness = v
                break
        is_restart = not chosen_label and not witness
        if is_restart:
            # No labeled unnumbered vertex at all: only reachable on
            # disconnected input.  The extension restarts at the smallest
            # unnumbered id with a fresh infinity label.
            if allow_disconnected:
                labels[chosen] = (INF,)
                chosen_label = labels[chosen]
        selection_labels.append(chosen_label)
        if failure is None:
            if witness:
                failure = Verdict(
                    False,
                    reason="label not maximal",
                    step=i,
                    vertex=chosen,
                    vertex_label=labels[chosen],
                    witness=witness,
                    witness_label=labels[witness],
                )
            elif is_restart:
                expected = next(v for v in range(1, n + 1) if not numbered[v])
                if not allow_disconnected:
                    failure = Verdict(
                        False,
                        reason=(
                            f"no labeled candidate at step {i}: graph is "
                            "disconnected (rerun with the disconnected extension)"
                        ),
                        step=i,
                        vertex=chosen,
                    )
                elif chosen != expected:
                    failure = Verdict(
                        False,
                        reason=f"disconnected restart must pick vertex {expected}",
                        step=i,
                        vertex=chosen,
                    )
        numbered[chosen] = True
        drop_candidate(chosen)
        for w in g.adj[chosen]:
            if numbered[w]:
                continue
            if not labels[w]:
                cand_index[w] = len(candidates)
                candidates.append(w)
            labels[w] = update(labels[w], kind, i, n)

    return (failure if failure is not None else VALID), selection_labels
