"""Multiplication-table groups and their subgroup lattices.

Every group here is a plain table on 0..n-1; subgroups come out in a
canonical order, so runs are reproducible byte for byte.
"""
from equialg import (cyclic_group, direct_product, subgroup_lattice,
                     subgroups)

print("== cyclic groups ==")
for n in [1, 2, 4, 6, 8]:
    g = cyclic_group(n)
    hs = subgroups(g)
    print(f"{g.name}: {len(hs)} subgroups with orders",
          [h.order for h in hs])

print()
print("== prime power chains ==")
for p in [2, 3]:
    for k in [1, 2, 3]:
        lat = subgroup_lattice(cyclic_group(p ** k))
        shape = "chain" if lat.is_chain() else "not a chain"
        print(f"C_{p}^{k}: {len(lat)} subgroups, {shape}")

print()
print("== the Klein four group is a diamond ==")
v4 = direct_product(cyclic_group(2), cyclic_group(2))
lat = subgroup_lattice(v4)
print(f"{v4.name}: {len(lat)} subgroups, chain: {lat.is_chain()}")
for i, h in enumerate(lat.nodes):
    above = [j for j in range(len(lat)) if lat.leq[i][j] and i != j]
    print(f"  node {i} (order {h.order}) below {above}")

print()
print("== JSON round trip ==")
text = cyclic_group(4).to_json()
print(text)
