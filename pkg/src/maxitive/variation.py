"""Disjoint variation of a maxitive measure.

The disjoint variation is ``m(B) = sup_pi sum_{P in pi} tau(B & P)`` over
finite partitions ``pi`` of the space.  Splitting a block never lowers the
sum since ``tau(P1) + tau(P2) >= max(tau(P1), tau(P2))``, so on a finite
space the supremum sits at the partition into singletons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import AdditiveMeasure, MaxitiveMeasure, MeasureError, Space
from .extrat import ZERO, ExtRat

__all__ = [
    "ORACLE_MAX_ATOMS",
    "PartitionEnumerationTooLarge",
    "Partition",
    "restricted_growth_strings",
    "set_partitions",
    "bell",
    "disjoint_variation",
    "variation_oracle",
    "variation_oracle_table",
]

ORACLE_MAX_ATOMS = 10


class PartitionEnumerationTooLarge(MeasureError):
    pass


@dataclass(frozen=True)
class Partition:
    space: Space
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen = 0
        for b in blocks:
            self.space.check_mask(b)
            if b == 0:
                raise MeasureError("partition blocks must be nonempty")
            if b & seen:
                raise MeasureError("partition blocks must be pairwise disjoint")
            seen |= b
        if seen != self.space.full:
            raise MeasureError("partition blocks must cover the space")

    def __len__(self) -> int:
        return len(self.blocks)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; each string labels atom
    ``i`` with its block index.

    >>> list(restricted_growth_strings(3))
    [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    """
    if n <= 0:
        yield ()
        return
    a = [0] * n
    # b[i] = 1 + max(a[:i]), the largest value a[i] may take
    b = [1] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = top


def set_partitions(space: Space) -> Iterator[Partition]:
    for rgs in restricted_growth_strings(space.n):
        blocks = [0] * (max(rgs) + 1)
        for atom, block in enumerate(rgs):
            blocks[block] |= 1 << atom
        yield Partition(space, tuple(blocks))


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def disjoint_variation(tau: MaxitiveMeasure) -> AdditiveMeasure:
    """Least additive measure dominating ``tau``: singleton values, summed."""
    return AdditiveMeasure(tau.space, tau.atom_values)


def _check_oracle_size(space: Space) -> None:
    if space.n > ORACLE_MAX_ATOMS:
        raise PartitionEnumerationTooLarge(
            f"{space.n} atoms means {bell(space.n)} partitions; the oracle stops at "
            f"{ORACLE_MAX_ATOMS} atoms ({bell(ORACLE_MAX_ATOMS)} partitions)"
        )


def variation_oracle(tau: MaxitiveMeasure, B: int) -> ExtRat:
    """Maximum of ``sum tau(B & P)`` over every partition of the space."""
    _check_oracle_size(tau.space)
    tau.space.check_mask(B)
    best = ZERO
    for partition in set_partitions(tau.space):
        total = ZERO
        for block in partition.blocks:
            total = total + tau(B & block)
        if total > best:
            best = total
    return best


def variation_oracle_table(tau: MaxitiveMeasure) -> tuple[ExtRat, ...]:
    """:func:`variation_oracle` for every set, sharing one enumeration."""
    _check_oracle_size(tau.space)
    best = [ZERO] * tau.space.size
    partitions = [p.blocks for p in set_partitions(tau.space)]
    for B in range(tau.space.size):
        for blocks in partitions:
            total = ZERO
            for block in blocks:
                total = total + tau(B & block)
            if total > best[B]:
                best[B] = total
    return tuple(best)
