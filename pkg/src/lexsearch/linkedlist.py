"""Doubly linked list with externally held node handles.

Every structural operation is O(1).  Nodes are handed out by the insert
methods and stay valid until unlinked, so callers can keep per-element
handles and remove or relocate elements without searching.  Sentinel
head/tail nodes make raw pointer surgery safe without knowing which
list a node currently belongs to (needed by ``splice_replace``).
"""

from __future__ import annotations

from typing import Any, Iterator


class Node:
    __slots__ = ("value", "prev", "next")

    def __init__(self, value: Any = None):
        self.value = value
        self.prev: Node | None = None
        self.next: Node | None = None

    def unlink(self) -> None:
        """Remove this node from whatever list it is in."""
        self.prev.next = self.next
        self.next.prev = self.prev
        self.prev = None
        self.next = None

    def insert_before(self, value: Any) -> "Node":
        """Insert a new node holding ``value`` directly before this one."""
        node = Node(value)
        node.prev = self.prev
        node.next = self
        self.prev.next = node
        self.prev = node
        return node

    def insert_after(self, value: Any) -> "Node":
        """Insert a new node holding ``value`` directly after this one."""
        node = Node(value)
        node.next = self.next
        node.prev = self
        self.next.prev = node
        self.next = node
        return node


class LinkedList:
    __slots__ = ("_head", "_tail")

    def __init__(self):
        self._head = Node()
        self._tail = Node()
        self._head.next = self._tail
        self._tail.prev = self._head

    @property
    def first(self) -> Node | None:
        node = self._head.next
        return node if node is not self._tail else None

    @property
    def last(self) -> Node | None:
        node = self._tail.prev
        return node if node is not self._head else None

    def is_empty(self) -> bool:
        return self._head.next is self._tail

    def append(self, value: Any) -> Node:
        return self._tail.insert_before(value)

    def appendleft(self, value: Any) -> Node:
        return self._head.insert_after(value)

    def __iter__(self) -> Iterator[Any]:
        node = self._head.next
        while node is not self._tail:
            yield node.value
            node = node.next

    def __len__(self) -> int:
        # O(n); used by tests and debug checks only.
        return sum(1 for _ in self)


def splice_replace(node: Node, chain: LinkedList) -> None:
    """Replace ``node`` (in whatever list it lives) by the contents of ``chain``.

    The nodes of ``chain`` keep their identity; ``chain`` is left empty.
    If ``chain`` is empty this is a plain unlink.
    """
    first = chain._head.next
    if first is chain._tail:
        node.unlink()
        return
    last = chain._tail.prev
    before, after = node.prev, node.next
    before.next = first
    first.prev = before
    last.next = after
    after.prev = last
    node.prev = None
    node.next = None
    chain._head.next = chain._tail
    chain._tail.prev = chain._head
