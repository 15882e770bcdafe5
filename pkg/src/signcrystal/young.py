"""Partitions, multipartitions and the addable/removable box calculus.

Components are 0-based, rows and columns 1-based.  Partitions are kept in
canonical form: weakly decreasing positive rows with trailing zeros
trimmed, so structural equality is mathematical equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import ValidationError

Partition = tuple[int, ...]


class BoxRef(NamedTuple):
    comp: int
    row: int
    col: int


def check_partition(rows: Iterable[int]) -> Partition:
    """Canonicalize a row-length sequence; trailing zeros are trimmed."""
    parts = tuple(rows)
    for r in parts:
        if not isinstance(r, int) or isinstance(r, bool):
            raise ValidationError(f"partition rows must be integers, got {r!r}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValidationError(f"partition rows must be weakly decreasing, got {parts}")
    if parts and parts[-1] < 0:
        raise ValidationError(f"partition rows must be nonnegative, got {parts}")
    return parts


def removable_corners(p: Partition) -> list[tuple[int, int]]:
    """(row, col) of boxes whose removal leaves a diagram, by row."""
    corners = []
    for j in range(len(p)):
        below = p[j + 1] if j + 1 < len(p) else 0
        if below < p[j]:
            corners.append((j + 1, p[j]))
    return corners


def addable_corners(p: Partition) -> list[tuple[int, int]]:
    """(row, col) of positions whose addition leaves a diagram, by row."""
    corners = []
    for j in range(len(p)):
        if j == 0 or p[j] < p[j - 1]:
            corners.append((j + 1, p[j] + 1))
    corners.append((len(p) + 1, 1))
    return corners


def content(box: BoxRef) -> int:
    """Column minus row."""
    return box.col - box.row


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(check_partition(c) for c in self.components)
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_lists(cls, data) -> "Multipartition":
        """Accepts [[3,1],[]] or {"components": [[3,1],[]]}."""
        if isinstance(data, dict):
            if set(data) != {"components"}:
                raise ValidationError('multipartition object must have a single "components" key')
            data = data["components"]
        if not isinstance(data, (list, tuple)):
            raise ValidationError("multipartition must be a list of row-length lists")
        comps = []
        for rows in data:
            if not isinstance(rows, (list, tuple)):
                raise ValidationError("each component must be a list of row lengths")
            comps.append(check_partition(rows))
        return cls(tuple(comps))

    def to_lists(self) -> list[list[int]]:
        return [list(c) for c in self.components]

    @property
    def ell(self) -> int:
        return len(self.components)

    @cached_property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def boxes(self) -> Iterator[BoxRef]:
        for ci, part in enumerate(self.components):
            for ri, width in enumerate(part):
                for col in range(1, width + 1):
                    yield BoxRef(ci, ri + 1, col)

    @cached_property
    def addable_boxes(self) -> tuple[BoxRef, ...]:
        return tuple(
            BoxRef(ci, row, col)
            for ci, part in enumerate(self.components)
            for row, col in addable_corners(part)
        )

    @cached_property
    def removable_boxes(self) -> tuple[BoxRef, ...]:
        return tuple(
            BoxRef(ci, row, col)
            for ci, part in enumerate(self.components)
            for row, col in removable_corners(part)
        )

    def add_box(self, box: BoxRef) -> "Multipartition":
        part = self._component(box.comp)
        if (box.row, box.col) not in addable_corners(part):
            raise ValidationError(f"box {tuple(box)} is not addable in component {box.comp}")
        rows = list(part)
        if box.row == len(rows) + 1:
            rows.append(1)
        else:
            rows[box.row - 1] += 1
        return self._replace_component(box.comp, tuple(rows))

    def remove_box(self, box: BoxRef) -> "Multipartition":
        part = self._component(box.comp)
        if (box.row, box.col) not in removable_corners(part):
            raise ValidationError(f"box {tuple(box)} is not removable in component {box.comp}")
        rows = list(part)
        rows[box.row - 1] -= 1
        if rows and rows[-1] == 0:
            rows.pop()
        return self._replace_component(box.comp, tuple(rows))

    def _component(self, ci: int) -> Partition:
        if not 0 <= ci < len(self.components):
            raise ValidationError(f"component {ci} out of range for ell={len(self.components)}")
        return self.components[ci]

    def _replace_component(self, ci: int, part: Partition) -> "Multipartition":
        return Multipartition(self.components[:ci] + (part,) + self.components[ci + 1:])

    def sort_key(self) -> tuple:
        return (self.size, self.components)

    def __str__(self) -> str:
        return "|".join("(" + ",".join(map(str, c)) + ")" for c in self.components)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n, largest first part first."""
    if n < 0:
        raise ValidationError("partition size must be nonnegative")
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in _compositions(n - head, k - 1):
            yield (head,) + tail


def multipartitions_of(ell: int, n: int) -> Iterator[Multipartition]:
    """All ell-multipartitions with exactly n boxes."""
    if ell < 1:
        raise ValidationError("need at least one component")
    for sizes in _compositions(n, ell):
        pools = [tuple(partitions_of(s)) for s in sizes]
        for combo in itertools.product(*pools):
            yield Multipartition(tuple(combo))


def multipartitions_up_to(ell: int, max_boxes: int) -> Iterator[Multipartition]:
    """All ell-multipartitions with at most max_boxes boxes, by size."""
    for n in range(max_boxes + 1):
        yield from multipartitions_of(ell, n)
