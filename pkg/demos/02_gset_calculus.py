"""Finite G-set calculus: orbits, induction, coinduction, spans.

The running group is C_4; every claim printed here is recomputed from the
explicit action tables.
"""
from equialg import (GSet, Span, Subgroup, coinduce, compose_spans,
                     cyclic_group, double_cosets, fixed_points, hom_count,
                     induce, orbit_decompose, restrict, terminal_map)
from equialg.gsets import GSetMap

C4 = cyclic_group(4)
e = Subgroup(C4, {0})
c2 = Subgroup(C4, {0, 2})

print("== orbit decomposition ==")
s = GSet.regular(C4) + GSet.orbit(C4, c2) + GSet.trivial(C4, 2)
for (order, members), mult in orbit_decompose(s):
    print(f"  {mult} orbit(s) with stabilizer {list(members)}")

print()
print("== induction and restriction are adjoint ==")
h_point = GSet.trivial(e.as_group())
ind = induce(e, h_point)
print(f"Ind_e(point) has {ind.size} points "
      f"({len(ind.orbits())} orbit)")
t = GSet.orbit(C4, c2) + GSet.trivial(C4)
print("hom counts agree:",
      hom_count(ind, t), "==", hom_count(h_point, restrict(e, t)))

print()
print("== coinduction keeps the full mapping set ==")
two = GSet.trivial(e.as_group(), 2)
co = coinduce(e, two)
print(f"CoInd_e(2 points) has {co.size} = 2^[C4:e] points;",
      f"{len(fixed_points(co, Subgroup(C4, set(C4.elements))))} are fixed")

print()
print("== double cosets ==")
print("C2 \\ C4 / C2 representatives:", double_cosets(c2, c2, C4))

print()
print("== span composition realizes restriction-after-transfer ==")
free = GSet.regular(C4)
tr = Span(GSetMap.identity(free), terminal_map(free))
re = Span(terminal_map(free), GSetMap.identity(free))
comp = compose_spans(tr, re)
print(f"apex of the composite: {comp.apex.size} points,",
      f"{len(comp.apex.orbits())} free orbits")
