#!/usr/bin/env python3
"""Interval modules of the linear quiver and exceptional sequences.

Each positive root is the dimension vector of one indecomposable
representation of 1 -> 2 -> ... -> n.  Hom dimensions come from a closed form
that is re-checked against an exact intertwiner solve; Ext^1 follows from the
Euler form.  A complete sequence with vanishing backwards Hom and Ext is the
same thing as a valid ordered basis, and its filtration levels are exactly the
parking function of the basis.
"""
from parkbases import (
    IntervalModule,
    Root,
    ext_dim,
    euler,
    filtration_level,
    hom_dim,
    hom_dim_oracle,
    hom_ext_table,
    is_exceptional_sequence,
    is_nondecreasing_collection,
    modules_of,
    reconstruct,
)

n = 3
v = IntervalModule(Root(2, 2, n))
w = IntervalModule(Root(1, 2, n))
print("the submodule [2,2] of [1,2]:")
print("  hom_dim =", hom_dim(v, w), " (oracle:", hom_dim_oracle(v, w), ")")
print("  reversed direction:", hom_dim(w, v))
print("  euler form equals hom - ext:", euler(v, w), "=", hom_dim(v, w), "-", ext_dim(v, w))

basis = reconstruct((2, 1, 1))
mods = modules_of(basis)
print("\nthe sequence for the parking function (2,1,1):", ", ".join(map(str, basis)))
print("  is exceptional:", is_exceptional_sequence(mods))
hom, ext = hom_ext_table(mods)
print("  hom matrix:", hom)
print("  ext matrix:", ext)
print("  filtration levels:", tuple(filtration_level(m) for m in mods))

print("\nnon-decreasing collections have no embeddings between members:")
nd = modules_of(reconstruct((1, 1, 2, 2, 2, 4, 6)))
print("  sequence of (1,1,2,2,2,4,6):", is_nondecreasing_collection(nd))
print("  sequence of (2,1,1):        ", is_nondecreasing_collection(mods))
