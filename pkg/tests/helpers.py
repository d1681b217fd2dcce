"""Shared test utilities: independent oracles and cached enumerations."""
from __future__ import annotations

import functools

from parkbases.dbasis import distinguished_bases
from parkbases.parking import parking_functions
from parkbases.roots import Root


def bilinear_seifert(a: Root, b: Root) -> int:
    """Independent Seifert oracle: expand over simple-root pairs and sum."""
    total = 0
    for i in a.support():
        for j in b.support():
            if i == j:
                total += 1
            elif j == i + 1:
                total -= 1
    return total


@functools.lru_cache(maxsize=None)
def all_bases(n: int) -> tuple:
    return tuple(distinguished_bases(n))


@functools.lru_cache(maxsize=None)
def all_pfs(n: int) -> tuple:
    return tuple(parking_functions(n))


def root(lo: int, hi: int, n: int) -> Root:
    return Root(lo, hi, n)


def basis_of_pairs(pairs, n: int) -> tuple[Root, ...]:
    return tuple(Root(lo, hi, n) for lo, hi in pairs)


# The full generator action on the 16 parking functions of three cars,
# transcribed arrow by arrow from the reference picture: two 2-cycles and four
# 3-cycles per generator.
ALPHA1_RANK3 = {
    (1, 2, 1): (2, 1, 1), (2, 1, 1): (1, 2, 1),
    (1, 3, 2): (3, 1, 2), (3, 1, 2): (1, 3, 2),
    (1, 1, 1): (1, 3, 1), (1, 3, 1): (3, 1, 1), (3, 1, 1): (1, 1, 1),
    (1, 2, 3): (2, 1, 3), (2, 1, 3): (1, 1, 3), (1, 1, 3): (1, 2, 3),
    (1, 1, 2): (1, 2, 2), (1, 2, 2): (2, 1, 2), (2, 1, 2): (1, 1, 2),
    (3, 2, 1): (2, 2, 1), (2, 2, 1): (2, 3, 1), (2, 3, 1): (3, 2, 1),
}
ALPHA2_RANK3 = {
    (1, 3, 1): (1, 1, 3), (1, 1, 3): (1, 3, 1),
    (2, 1, 2): (2, 2, 1), (2, 2, 1): (2, 1, 2),
    (1, 2, 1): (1, 1, 1), (1, 1, 1): (1, 1, 2), (1, 1, 2): (1, 2, 1),
    (1, 2, 2): (1, 2, 3), (1, 2, 3): (1, 3, 2), (1, 3, 2): (1, 2, 2),
    (3, 1, 1): (3, 1, 2), (3, 1, 2): (3, 2, 1), (3, 2, 1): (3, 1, 1),
    (2, 1, 1): (2, 1, 3), (2, 1, 3): (2, 3, 1), (2, 3, 1): (2, 1, 1),
}
