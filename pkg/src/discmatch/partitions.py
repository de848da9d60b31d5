"""Set partitions of small vertex sets, stored as sorted tuples of disjoint bitmasks."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def canonical(blocks: Iterable[int]) -> Partition:
    """Sorted tuple of nonempty blocks; equal partitions get equal encodings."""
    return tuple(sorted(b for b in blocks if b))


def ground(p: Partition) -> int:
    out = 0
    for b in p:
        out |= b
    return out


def rgs(p: Partition, order: Sequence[int]) -> tuple[int, ...]:
    """Restricted-growth string of ``p`` over the vertex list ``order``."""
    label: dict[int, int] = {}
    out = []
    for v in order:
        bit = 1 << v
        block = next(b for b in p if b & bit)
        if block not in label:
            label[block] = len(label)
        out.append(label[block])
    return tuple(out)


def from_rgs(word: Sequence[int], order: Sequence[int]) -> Partition:
    blocks: dict[int, int] = {}
    for v, lab in zip(order, word):
        blocks[lab] = blocks.get(lab, 0) | (1 << v)
    return canonical(blocks.values())


def join(a: Partition, b: Partition) -> Partition:
    """Finest common coarsening: blocks that share a vertex are merged transitively."""
    blocks = list(a)
    for bz in b:
        merged = bz
        keep = []
        for blk in blocks:
            if blk & merged:
                merged |= blk
            else:
                keep.append(blk)
        keep.append(merged)
        blocks = keep
    return canonical(blocks)


def block_of(p: Partition, v: int) -> int:
    bit = 1 << v
    for b in p:
        if b & bit:
            return b
    return 0


def all_partitions(items: Sequence[int]) -> Iterator[Partition]:
    """Every partition of the vertex list ``items``."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in all_partitions(rest):
        yield canonical(sub + (1 << first,))
        for i in range(len(sub)):
            yield canonical(sub[:i] + (sub[i] | (1 << first),) + sub[i + 1 :])


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Number of partitions of an ``n``-element set."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def merge_into(p: Partition, v: int, nbr_mask: int) -> Partition:
    """Add ``v`` to ``p``, fusing it with every block that meets ``nbr_mask``."""
    fused = 1 << v
    keep = []
    for b in p:
        if b & nbr_mask:
            fused |= b
        else:
            keep.append(b)
    keep.append(fused)
    return canonical(keep)


def blocks_nonadjacent(p: Partition, masks: Sequence[int]) -> bool:
    """No edge joins two different blocks."""
    for b in p:
        reach = 0
        x = b
        while x:
            bit = x & -x
            x ^= bit
            reach |= masks[bit.bit_length() - 1]
        if reach & (ground(p) & ~b):
            return False
    return True


def in_sift(gamma: Partition, gamma_prime: Partition, v: int, masks: Sequence[int]) -> bool:
    """Whether ``gamma_prime`` arises from ``gamma`` by deleting ``v`` and splitting its block.

    The block of ``v`` minus ``v`` must be covered by blocks of ``gamma_prime``
    that are pairwise non-adjacent and each contain a neighbor of ``v``; every
    other block of ``gamma`` must be kept unchanged.
    """
    own = block_of(gamma, v)
    if not own:
        return False
    if ground(gamma_prime) != ground(gamma) & ~(1 << v):
        return False
    others = [b for b in gamma if b != own]
    if any(b not in gamma_prime for b in others):
        return False
    pi = [b for b in gamma_prime if b not in others]
    rest = own & ~(1 << v)
    if ground(tuple(pi)) != rest:
        return False
    if any(not (b & masks[v]) for b in pi):
        return False
    return blocks_nonadjacent(canonical(pi), masks)
