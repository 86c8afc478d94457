"""Label values and the four update rules that distinguish the searches.

A label is a tuple of integers, possibly starting with the ``INF``
sentinel (only the start vertex ever holds it).  Labels are ordered
lexicographically with proper prefixes comparing smaller, which is
exactly Python's native tuple order once ``INF`` is ``math.inf``.
"""

from __future__ import annotations

import enum
import math
from typing import Tuple, Union

#: Sentinel that compares greater than every integer.  Stored as a float
#: so no integer label entry can ever collide with it.
INF = math.inf

#: Per-vertex priority sentinel for vertices that were never labeled.
MINUS_INF = -math.inf

Entry = Union[int, float]
Label = Tuple[Entry, ...]

EMPTY: Label = ()

LESS, EQUAL, GREATER = -1, 0, 1


class SearchKind(enum.Enum):
    """The four searches, each a (grow direction, step value) pair.

    At step ``i`` of a search over ``n`` vertices the chosen vertex's
    unnumbered neighbors each get exactly one entry added to their label:

    ============  =========  ==========
    kind          direction  value
    ============  =========  ==========
    LEXBFS        append     ``n - i``
    LEXUP         append     ``i``
    LEXDFS        prepend    ``i``
    LEXDOWN       prepend    ``n - i``
    ============  =========  ==========
    """

    LEXBFS = "lexbfs"
    LEXUP = "lexup"
    LEXDFS = "lexdfs"
    LEXDOWN = "lexdown"

    @property
    def prepends(self) -> bool:
        return self in (SearchKind.LEXDFS, SearchKind.LEXDOWN)

    def step_value(self, i: int, n: int) -> int:
        """The integer added to a neighbor's label at step ``i``."""
        if self in (SearchKind.LEXBFS, SearchKind.LEXDOWN):
            return n - i
        return i

    @classmethod
    def from_name(cls, name: str) -> "SearchKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown search kind: {name!r}") from None


def lex_compare(a: Label, b: Label) -> int:
    """Compare two labels; returns LESS, EQUAL or GREATER.

    A proper prefix compares smaller; at the first differing position the
    smaller entry loses; ``INF`` beats every integer.
    """
    for x, y in zip(a, b):
        if x != y:
            return LESS if x < y else GREATER
    if len(a) == len(b):
        return EQUAL
    return LESS if len(a) < len(b) else GREATER


def lex_compare_counted(a: Label, b: Label) -> tuple[int, int]:
    """Like :func:`lex_compare` but also reports entry positions examined."""
    examined = 0
    for x, y in zip(a, b):
        examined += 1
        if x != y:
            return (LESS if x < y else GREATER), examined
    if len(a) == len(b):
        return EQUAL, examined
    return (LESS if len(a) < len(b) else GREATER), examined


def update(label: Label, kind: SearchKind, i: int, n: int) -> Label:
    """Grow ``label`` by one entry according to ``kind`` at step ``i``."""
    if not 1 <= i <= n:
        raise ValueError(f"step index {i} outside 1..{n}")
    value = kind.step_value(i, n)
    if kind.prepends:
        return (value,) + label
    return label + (value,)


def format_label(label: Label) -> str:
    """Serialize a label: ``[8,7]``, ``[inf]``, ``[]``."""
    return "[" + ",".join("inf" if e == INF else str(e) for e in label) + "]"
