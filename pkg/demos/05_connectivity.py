"""Connectivity arithmetic on the almost-unital poset, and little-disk
connectivity over the order-two group.

The join bound conn(i) + conn(j) + 2 <= conn(i v j) is checked on every
pair of nodes, with the strict locus read off exactly; the little-disk
values reproduce the three-case table and its non-additivity.
"""
from equialg import (GSet, RepDimension, conn_join_bound, conn_n_infty,
                     cyclic_group, disk_conn_c2, disk_conn_value,
                     enumerate_systems, f_trivial, level_tables,
                     non_additivity_witness)

C4 = cyclic_group(4)
C2 = cyclic_group(2)

print("== connectivity functions on the almost-unital poset ==")
poset = enumerate_systems(C4, 12, "almost_unital")
t = level_tables(C4, 12)
f = conn_n_infty(f_trivial(t), poset)
print(f"{len(poset)} nodes; the trivial system's function is infinite on "
      f"{len(f.infinite_set())} of them")

print()
print("== the join bound, all pairs ==")
strict_total = 0
for i in poset.nodes:
    for j in poset.nodes:
        rep = conn_join_bound(i, j, poset)
        assert rep.holds
        strict_total += len(rep.strict_witnesses)
print(f"holds on all {len(poset)}^2 pairs; "
      f"{strict_total} strict witnesses overall")

print()
print("== little-disk connectivity over C_2 ==")
print("arity (fixed, free)   value for a=1, b=2")
for c, d in [(3, 0), (1, 1), (2, 1), (2, 2)]:
    print(f"  ({c},{d})              {disk_conn_c2(1, 2, ('G', c, d))}")

v = RepDimension.c2(1, 2)
s = GSet.trivial(C2, 2) + GSet.regular(C2)
print("independent fixed-point-dimension evaluation agrees:",
      disk_conn_value(v, s) == disk_conn_c2(1, 2, ("G", 2, 1)))

print()
print("== non-additivity ==")
for args in [(2, 2), (3, 2), (4, 4)]:
    w = non_additivity_witness(*args)
    print(f"  a'={args[0]}, b={args[1]}: bound {w['lhs_bound']} < "
          f"{w['rhs']}  [{w['provenance']}]")
