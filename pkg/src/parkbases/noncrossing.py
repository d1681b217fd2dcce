"""
Non-crossing partitions of {0, ..., n} and their maximal chains.

A partition is non-crossing when no four points a < b < c < d have a, c in one
block and b, d in a different block.  Partitions are canonicalised as tuples of
blocks sorted by minimum, each block a sorted tuple.

A maximal chain refines from the all-singletons partition to the one-block
partition in n steps, each merging exactly two blocks.  Chains correspond to
bases (`partition_chain` / `chain_to_basis`) and, via the merge labels
(`stanley_labels`), to parking functions shifted down by one.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Iterator, Sequence

from .dbasis import to_arcs
from .roots import Root

Block = tuple[int, ...]


@dataclasses.dataclass(frozen=True, slots=True)
class NCPartition:
    """A non-crossing partition of {0, ..., n} in canonical block order."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        ground = sorted(x for block in self.blocks for x in block)
        if ground != list(range(len(ground))):
            raise ValueError("blocks must partition a range {0, ..., n}")
        for block in self.blocks:
            if list(block) != sorted(block):
                raise ValueError(f"block {block} is not sorted")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("blocks must be sorted by minimum")
        for b1, b2 in itertools.combinations(self.blocks, 2):
            if _cross(b1, b2):
                raise ValueError(f"blocks {b1} and {b2} cross")

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks) - 1


def _cross(b1: Block, b2: Block) -> bool:
    """Whether two disjoint sorted blocks interleave a < b < c < d."""
    labelled = sorted([(x, 0) for x in b1] + [(x, 1) for x in b2])
    runs = sum(1 for i in range(1, len(labelled)) if labelled[i][1] != labelled[i - 1][1])
    return runs >= 3


def partition(blocks: Sequence[Sequence[int]]) -> NCPartition:
    """Canonicalise and validate a partition given as any iterable of blocks."""
    canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
    return NCPartition(canon)


def singletons(n: int) -> NCPartition:
    return NCPartition(tuple((i,) for i in range(n + 1)))


@dataclasses.dataclass(frozen=True, slots=True)
class NCChain:
    """A maximal chain of non-crossing partitions of {0, ..., n}."""

    partitions: tuple[NCPartition, ...]

    def __post_init__(self):
        if not self.partitions:
            raise ValueError("empty chain")
        n = self.partitions[0].n
        if len(self.partitions) != n + 1:
            raise ValueError(f"a maximal chain on {{0..{n}}} has {n + 1} partitions")
        if self.partitions[0] != singletons(n):
            raise ValueError("chains must start at the all-singletons partition")
        if len(self.partitions[-1].blocks) != 1:
            raise ValueError("chains must end at the one-block partition")
        for lower, upper in zip(self.partitions, self.partitions[1:]):
            merge_of(lower, upper)  # raises unless exactly two blocks merge

    @property
    def n(self) -> int:
        return self.partitions[0].n


def merge_of(lower: NCPartition, upper: NCPartition) -> tuple[Block, Block]:
    """The pair of `lower` blocks merged to reach `upper`, minima in order.

    Raises ValueError unless `upper` is `lower` with exactly two blocks joined.
    """
    lower_set = set(lower.blocks)
    upper_set = set(upper.blocks)
    gone = sorted(lower_set - upper_set, key=lambda b: b[0])
    new = upper_set - lower_set
    if len(gone) != 2 or len(new) != 1:
        raise ValueError("not a single-merge cover")
    merged = new.pop()
    if tuple(sorted(gone[0] + gone[1])) != merged:
        raise ValueError("merged block does not match the removed pair")
    return gone[0], gone[1]


def merge_label(lower: NCPartition, upper: NCPartition) -> int:
    """The label of a merge: with min(B) < min(B'), the largest i in B below B'."""
    b, b_prime = merge_of(lower, upper)
    cutoff = min(b_prime)
    label = max(i for i in b if i < cutoff)
    # "below B'" means below every element; blocks merge non-crossingly, so
    # comparing against the minimum is the same thing.  Checked on every call.
    assert label == max(
        (i for i in b if all(i < x for x in b_prime)), default=None
    ), "the two readings of the label rule diverged"
    return label


def stanley_labels(chain: NCChain) -> tuple[int, ...]:
    """The sequence of merge labels of a maximal chain.

    Adding 1 to every entry gives a parking function, and the map is a
    bijection onto parking functions.
    """
    return tuple(
        merge_label(lower, upper)
        for lower, upper in zip(chain.partitions, chain.partitions[1:])
    )


def partition_chain(basis: Sequence[Root]) -> NCChain:
    """The chain of connected-component partitions of the first k arcs of a basis."""
    arcs = to_arcs(basis)
    n = arcs.rank
    parts = [singletons(n)]
    components: list[set[int]] = [{i} for i in range(n + 1)]
    for left, right in arcs.arcs:
        comp_left = next(c for c in components if left in c)
        comp_right = next(c for c in components if right in c)
        if comp_left is comp_right:
            raise ValueError("arcs of a basis never close a cycle")
        components.remove(comp_left)
        components.remove(comp_right)
        components.append(comp_left | comp_right)
        parts.append(partition(components))
    return NCChain(tuple(parts))


def chain_to_basis(chain: NCChain) -> tuple[Root, ...]:
    """The basis whose arc components realise the chain (inverse of partition_chain)."""
    n = chain.n
    roots = []
    for lower, upper in zip(chain.partitions, chain.partitions[1:]):
        b, b_prime = merge_of(lower, upper)
        label = merge_label(lower, upper)
        roots.append(Root(label + 1, max(b_prime), n))
    return tuple(roots)


def maximal_chains(n: int) -> Iterator[NCChain]:
    """All maximal chains of non-crossing partitions of {0, ..., n}.

    There are (n+1)^(n-1) of them.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def rec(prefix: list[NCPartition]) -> Iterator[NCChain]:
        current = prefix[-1]
        if len(current.blocks) == 1:
            yield NCChain(tuple(prefix))
            return
        blocks = current.blocks
        for i, j in itertools.combinations(range(len(blocks)), 2):
            merged = [b for k, b in enumerate(blocks) if k not in (i, j)]
            merged.append(tuple(sorted(blocks[i] + blocks[j])))
            try:
                nxt = partition(merged)
            except ValueError:
                continue  # the merge would cross a third block
            prefix.append(nxt)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([singletons(n)])
