"""Young diagrams with arm/leg statistics.

English notation, 0-based box coordinates: ``parts`` weakly decrease
downwards, the box ``(row, col)`` requires ``col < parts[row]``.  The arm of
a box counts boxes strictly to its right, the leg counts boxes strictly
below, so the single box of the partition (1) has arm = leg = 0.
"""

from __future__ import annotations

from typing import Iterator, List, Tuple


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for row, p in enumerate(self.parts):
            for col in range(p):
                yield (row, col)

    def contains_box(self, box: Tuple[int, int]) -> bool:
        row, col = box
        return 0 <= row < len(self.parts) and 0 <= col < self.parts[row]

    def arm(self, box: Tuple[int, int]) -> int:
        if not self.contains_box(box):
            raise ValueError(f"box {box} outside diagram {self}")
        row, col = box
        return self.parts[row] - col - 1

    def leg(self, box: Tuple[int, int]) -> int:
        if not self.contains_box(box):
            raise ValueError(f"box {box} outside diagram {self}")
        row, col = box
        return sum(1 for r in range(row + 1, len(self.parts)) if self.parts[r] > col)

    def arm_leg(self, box: Tuple[int, int]) -> Tuple[int, int]:
        return self.arm(box), self.leg(box)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n, in reverse-lexicographic order.

    For n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  The order is fixed;
    cache keys and any parallel scheduling depend on it.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [Partition(())]
    out = []
    parts = (n,)
    out.append(Partition(parts))
    while True:
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return out
        rest = len(parts) - i
        parts = parts[:i] + (parts[i] - 1,)
        while rest > 0:
            nxt = min(parts[-1], rest)
            parts = parts + (nxt,)
            rest -= nxt
        out.append(Partition(parts))


def arm_leg(mu: Partition, box: Tuple[int, int]) -> Tuple[int, int]:
    """Spec-level name for :meth:`Partition.arm_leg`."""
    return mu.arm_leg(box)


def partition_count(n: int) -> int:
    """p(n), by the Euler recurrence (used only as a test oracle)."""
    table = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            table[m] += table[m - k]
    return table[n]
