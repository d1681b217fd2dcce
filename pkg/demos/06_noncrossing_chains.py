#!/usr/bin/env python3
"""Maximal chains of non-crossing partitions.

Drawing the first k arcs of a basis and taking connected components yields a
maximal chain of non-crossing partitions of {0, ..., n}.  Labelling each merge
by the largest element of the lower block beneath the other block gives a
parking function shifted down by one, and chasing the definitions shows the
composite map is the initial vector again.
"""
from parkbases import (
    chain_to_basis,
    initial_vector,
    maximal_chains,
    partition_chain,
    reconstruct,
    stanley_labels,
)

basis = reconstruct((2, 2, 1))
print("basis:", ", ".join(map(str, basis)))
chain = partition_chain(basis)
print("its chain of arc components:")
for part in chain.partitions:
    print("  ", " | ".join(",".join(map(str, block)) for block in part.blocks))
labels = stanley_labels(chain)
print("merge labels:", labels)
print("labels + 1:  ", tuple(v + 1 for v in labels), "== initial vector", initial_vector(basis))
print("rebuilding the basis from the chain:", ", ".join(map(str, chain_to_basis(chain))))

for n in range(1, 5):
    count = sum(1 for _ in maximal_chains(n))
    print(f"maximal chains on {{0..{n}}}: {count} = (n+1)^(n-1) = {(n + 1) ** (n - 1)}")
