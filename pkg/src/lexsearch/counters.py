"""Operation counters used to certify complexity at desk scale."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounters:
    """Counts of the operations that dominate each engine's running time.

    ``node_moves``
        relocations of a vertex inside the engine's linked structure
        (first insertion included, selection pops excluded); bounded by 2m.
    ``comparisons``
        comparator calls during neighbor sorts (list engines) or structure
        descent steps (partition engines) or label entries examined
        (reference engine).
    ``sort_elements``
        total number of neighbors handed to per-step sorts.
    ``set_creations`` / ``set_removals``
        partition-set lifecycle events (partition engines only).
    ``label_entries``
        label entries added by updates; the initial infinity sentinel of
        the source is not counted, so this total is at most 2m.
    """

    node_moves: int = 0
    comparisons: int = 0
    sort_elements: int = 0
    set_creations: int = 0
    set_removals: int = 0
    label_entries: int = 0

    def total(self) -> int:
        """The counter sum reported against complexity budgets."""
        return self.node_moves + self.comparisons + self.sort_elements

    def to_json_dict(self) -> dict[str, int]:
        """The stable JSON shape emitted by the CLI."""
        return {
            "node_moves": self.node_moves,
            "comparisons": self.comparisons,
            "sort_elements": self.sort_elements,
        }
