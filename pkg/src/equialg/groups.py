"""Finite groups as explicit multiplication tables, with subgroup lattices.

Everything is index-based: a group of order n has elements 0..n-1 and a
total multiplication table.  Intended scale is |G| <= 16, so every
algorithm here is exhaustive and every value is validated on construction.
"""
from __future__ import annotations

import json
from itertools import product

from .errors import ValidationError


class FiniteGroup:
    """A finite group on elements 0..n-1 given by a multiplication table."""

    __slots__ = ("mul_table", "order", "identity", "inv_table", "name", "_hash")

    def __init__(self, mul, name: str = ""):
        mul = tuple(tuple(int(x) for x in row) for row in mul)
        n = len(mul)
        if n == 0:
            raise ValidationError("group order 0 is invalid")
        for row in mul:
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise ValidationError("multiplication table must be square over 0..n-1")
        identity = None
        for e in range(n):
            if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValidationError("no two-sided identity")
        for a, b, c in product(range(n), repeat=3):
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise ValidationError(f"associativity fails at {(a, b, c)}")
        inv = []
        for a in range(n):
            b = next((b for b in range(n)
                      if mul[a][b] == identity and mul[b][a] == identity), None)
            if b is None:
                raise ValidationError(f"element {a} has no inverse")
            inv.append(b)
        self.mul_table = mul
        self.order = n
        self.identity = identity
        self.inv_table = tuple(inv)
        self.name = name or f"G{n}"
        self._hash = hash(mul)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv_table[a]

    def conj(self, g: int, a: int) -> int:
        """g a g^-1."""
        return self.mul(self.mul(g, a), self.inv_table[g])

    def power(self, a: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in self.elements for b in self.elements)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul_table == other.mul_table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def to_json(self) -> str:
        data = {"order": self.order,
                "mul": [list(row) for row in self.mul_table],
                "name": self.name}
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FiniteGroup":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad group JSON: {exc}") from exc
        if not isinstance(data, dict) or "mul" not in data:
            raise ValidationError("group JSON needs a 'mul' table")
        g = cls(data["mul"], name=str(data.get("name", "")))
        if "order" in data and int(data["order"]) != g.order:
            raise ValidationError("declared order does not match table size")
        return g


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n with elements 0..n-1 and addition mod n."""
    if n < 1:
        raise ValidationError("cyclic group order must be >= 1")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)],
                       name=f"C{n}")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Product group on pairs, flattened as a*|h| + b."""
    nh = h.order
    size = g.order * nh
    mul = [[0] * size for _ in range(size)]
    for a1, b1 in product(g.elements, h.elements):
        for a2, b2 in product(g.elements, h.elements):
            mul[a1 * nh + b1][a2 * nh + b2] = g.mul(a1, a2) * nh + h.mul(b1, b2)
    return FiniteGroup(mul, name=f"{g.name}x{h.name}")


class Subgroup:
    """A subgroup presented as a set of element ids of its parent group."""

    __slots__ = ("parent", "members", "key", "_as_group", "_embedding")

    def __init__(self, parent: FiniteGroup, members):
        members = frozenset(int(x) for x in members)
        if parent.identity not in members:
            raise ValidationError("subgroup must contain the identity")
        for a in members:
            if not 0 <= a < parent.order:
                raise ValidationError(f"element {a} out of range")
            if parent.inv_table[a] not in members:
                raise ValidationError(f"not closed under inverse at {a}")
            for b in members:
                if parent.mul(a, b) not in members:
                    raise ValidationError(f"not closed under product at {(a, b)}")
        self.parent = parent
        self.members = members
        self.key = (len(members), tuple(sorted(members)))
        self._as_group = None
        self._embedding = None

    @property
    def order(self) -> int:
        return len(self.members)

    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, a):
        return a in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent == other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash((self.parent, self.members))

    def __repr__(self):
        return f"Subgroup({sorted(self.members)} <= {self.parent.name})"

    def conjugate_by(self, g: int) -> "Subgroup":
        return Subgroup(self.parent, {self.parent.conj(g, a) for a in self.members})

    def is_normal(self) -> bool:
        return all(self.conjugate_by(g).members == self.members
                   for g in self.parent.elements)

    @property
    def embedding(self) -> tuple:
        """Sorted member ids; position = local element id in as_group()."""
        if self._embedding is None:
            self._embedding = tuple(sorted(self.members))
        return self._embedding

    def as_group(self) -> FiniteGroup:
        """This subgroup as a standalone group on 0..k-1 via `embedding`."""
        if self._as_group is None:
            emb = self.embedding
            pos = {a: i for i, a in enumerate(emb)}
            mul = [[pos[self.parent.mul(a, b)] for b in emb] for a in emb]
            self._as_group = FiniteGroup(mul, name=f"{self.parent.name}|{list(emb)}")
        return self._as_group

    def to_local(self, a: int) -> int:
        return self.embedding.index(a)

    def relative_to(self, big: "Subgroup") -> "Subgroup":
        """This subgroup as a subgroup of big.as_group(); requires self <= big."""
        if not self.members <= big.members:
            raise ValidationError("relative_to needs a containing subgroup")
        return Subgroup(big.as_group(), {big.to_local(a) for a in self.members})


def generated_subgroup(g: FiniteGroup, gens) -> frozenset:
    """Member set of the subgroup generated by `gens`."""
    members = {g.identity}
    frontier = set(gens) | {g.identity}
    while frontier:
        new = set()
        for a in frontier:
            members.add(a)
        for a in members:
            for b in members:
                c = g.mul(a, b)
                if c not in members:
                    new.add(c)
        for a in list(members):
            c = g.inv_table[a]
            if c not in members:
                new.add(c)
        frontier = new - members
        members |= new
    return frozenset(members)


def subgroups(g: FiniteGroup) -> list:
    """All subgroups, sorted by (order, lexicographic member list).

    Cyclic subgroups are closed under pairwise join; every subgroup is a
    join of the cyclic subgroups of its elements, so the fixpoint below is
    exhaustive.
    """
    cyclics = {generated_subgroup(g, [a]) for a in g.elements}
    found = set(cyclics)
    found.add(frozenset({g.identity}))
    frontier = set(found)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                j = generated_subgroup(g, h | c)
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(g, m)
            for m in sorted(found, key=lambda m: (len(m), tuple(sorted(m))))]


class SubgroupLattice:
    """Subgroups of a group with containment order and conjugacy classes."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.nodes = subgroups(group)
        self.index_of = {h.members: i for i, h in enumerate(self.nodes)}
        n = len(self.nodes)
        self.leq = tuple(tuple(self.nodes[i].members <= self.nodes[j].members
                               for j in range(n)) for i in range(n))
        # conjugation permutes subgroups; orbits are the conjugacy classes
        conj_of = []
        for g in group.elements:
            conj_of.append(tuple(self.index_of[self.nodes[i].conjugate_by(g).members]
                                 for i in range(n)))
        self.conj_table = tuple(conj_of)
        seen = [False] * n
        classes = []
        for i in range(n):
            if seen[i]:
                continue
            orbit = sorted({conj_of[g][i] for g in group.elements})
            for j in orbit:
                seen[j] = True
            classes.append(tuple(orbit))
        self.conj_classes = tuple(classes)
        self.class_of = {}
        for c, orbit in enumerate(self.conj_classes):
            for i in orbit:
                self.class_of[i] = c

    def __len__(self):
        return len(self.nodes)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def class_rep(self, i: int) -> int:
        """Canonical (minimal-index) subgroup in the conjugacy class of node i."""
        return self.conj_classes[self.class_of[i]][0]

    def is_chain(self) -> bool:
        return all(self.leq[i][j] or self.leq[j][i]
                   for i in range(len(self.nodes)) for j in range(len(self.nodes)))


_LATTICES: dict = {}


def subgroup_lattice(g: FiniteGroup) -> SubgroupLattice:
    """Cached subgroup lattice of g."""
    lat = _LATTICES.get(g)
    if lat is None:
        lat = SubgroupLattice(g)
        _LATTICES[g] = lat
    return lat
