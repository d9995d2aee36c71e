"""Extended-integer connectivity arithmetic on the almost-unital poset.

The connectivity function of a weak indexing system takes the value
infinity on its down-set and -2 elsewhere; sums are pointwise with
infinity absorbing.  The join bound states that the sum of two
connectivity functions shifted by 2 is at most the connectivity of the
join, with strictness exactly on the part of the join's down-set missed
by the two separate down-sets.

Little-disk connectivity over representations is evaluated through fixed
point dimensions: an orbit with stabilizer K contributes the bounds
dim V^K - dim V^J - 2 over the subgroups J strictly above K (passing to a
smaller subgroup can only grow the fixed space, and the margin bounds the
connectivity), and two or more fixed points contribute dim V^G - 2.
"""
from __future__ import annotations

from .errors import ValidationError
from .groups import FiniteGroup, cyclic_group, subgroup_lattice
from .gsets import GSet, fixed_points
from .indexing import WeakIndexingSystem, join
from .poset import Poset


class ExtInt:
    """An integer or +infinity, with absorbing addition and total order."""

    __slots__ = ("value",)

    def __init__(self, value):
        if value is not None and not isinstance(value, int):
            raise ValidationError("ExtInt takes an int or None for infinity")
        self.value = value

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __add__(self, other):
        if isinstance(other, int):
            other = ExtInt(other)
        if self.infinite or other.infinite:
            return INF
        return ExtInt(self.value + other.value)

    __radd__ = __add__

    def __le__(self, other):
        if other.infinite:
            return True
        if self.infinite:
            return False
        return self.value <= other.value

    def __lt__(self, other):
        return self <= other and self != other

    def __eq__(self, other):
        return isinstance(other, ExtInt) and self.value == other.value

    def __hash__(self):
        return hash(("ExtInt", self.value))

    def __repr__(self):
        return "inf" if self.infinite else str(self.value)


INF = ExtInt(None)
MINUS_TWO = ExtInt(-2)


class ConnFunction:
    """An extended-integer function on an enumerated poset of systems."""

    __slots__ = ("poset", "values")

    def __init__(self, poset: Poset, values):
        values = tuple(v if isinstance(v, ExtInt) else ExtInt(v) for v in values)
        if len(values) != len(poset):
            raise ValidationError("need one value per poset node")
        self.poset = poset
        self.values = values

    def __getitem__(self, i) -> ExtInt:
        return self.values[i]

    def __eq__(self, other):
        return (isinstance(other, ConnFunction) and self.poset is other.poset
                and self.values == other.values)

    def __le__(self, other: "ConnFunction") -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))

    def __repr__(self):
        return f"ConnFunction({list(self.values)})"

    def infinite_set(self) -> frozenset:
        return frozenset(i for i, v in enumerate(self.values) if v.infinite)


def conn_n_infty(i: WeakIndexingSystem, poset: Poset) -> ConnFunction:
    """Infinity on the down-set of i, -2 off it."""
    return ConnFunction(poset, [INF if node <= i else MINUS_TWO
                                for node in poset.nodes])


def conn_add(f: ConnFunction, g: ConnFunction) -> ConnFunction:
    if f.poset is not g.poset:
        raise ValidationError("connectivity functions over different domains")
    return ConnFunction(f.poset, [a + b for a, b in zip(f.values, g.values)])


def conn_shift(f: ConnFunction, k: int) -> ConnFunction:
    return ConnFunction(f.poset, [v + k for v in f.values])


class JoinBoundReport:
    """Outcome of the pointwise join bound check."""

    def __init__(self, holds, strict_witnesses, lhs, rhs):
        self.holds = holds
        self.strict_witnesses = tuple(strict_witnesses)
        self.lhs = lhs
        self.rhs = rhs

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return (f"JoinBoundReport(holds={self.holds}, "
                f"strict={len(self.strict_witnesses)})")


def conn_join_bound(i: WeakIndexingSystem, j: WeakIndexingSystem,
                    poset: Poset) -> JoinBoundReport:
    """Check conn(i) + conn(j) + 2 <= conn(i v j) pointwise on the poset.

    Strict witnesses are the nodes where the inequality is strict; the
    bound holds with equality away from down(i v j) minus the union of the
    two separate down-sets.
    """
    lhs = conn_shift(conn_add(conn_n_infty(i, poset), conn_n_infty(j, poset)), 2)
    rhs = conn_n_infty(join(i, j), poset)
    holds = lhs <= rhs
    strict = [k for k in range(len(poset))
              if lhs[k] <= rhs[k] and lhs[k] != rhs[k]]
    return JoinBoundReport(holds, strict, lhs, rhs)


class RepDimension:
    """Fixed point dimensions of an orthogonal representation, one value
    per subgroup."""

    __slots__ = ("group", "dims")

    def __init__(self, group: FiniteGroup, dims):
        lat = subgroup_lattice(group)
        dims = {int(k): int(v) for k, v in dict(dims).items()}
        if sorted(dims) != list(range(len(lat.nodes))):
            raise ValidationError("need one dimension per subgroup")
        if any(v < 0 for v in dims.values()):
            raise ValidationError("dimensions must be nonnegative")
        self.group = group
        self.dims = dims

    @classmethod
    def c2(cls, a: int, b: int) -> "RepDimension":
        """a + b*sign over the order-two group: dim^e = a+b, dim^full = a."""
        if a < 0 or b < 0:
            raise ValidationError("multiplicities must be nonnegative")
        return cls(cyclic_group(2), {0: a + b, 1: a})


def disk_conn_c2(a: int, b: int, s) -> ExtInt:
    """Little-disk connectivity over the order-two group at the arity s.

    s is ("e", k) for k free points at the trivial level, or ("G", c, d)
    for c fixed points and d free orbits.  Arities with no constraining
    content (fewer than two points at the trivial level; d = 0 and c < 2)
    have infinite connectivity.
    """
    if a < 0 or b < 0:
        raise ValidationError("multiplicities must be nonnegative")
    kind = s[0]
    if kind == "e":
        k = s[1]
        return ExtInt(max(-2, a + b - 2)) if k >= 2 else INF
    if kind == "G":
        c, d = s[1], s[2]
        if d == 0:
            return ExtInt(max(-2, a - 2)) if c >= 2 else INF
        if c < 2:
            return ExtInt(max(-2, b - 2))
        return ExtInt(max(-2, min(a, b) - 2))
    raise ValidationError(f"unknown arity descriptor {s!r}")


def _constraints(v: RepDimension, s: GSet) -> list:
    """Upper bounds on the connectivity level from the two conditions."""
    lat = subgroup_lattice(v.group)
    bounds = []
    top = len(lat.nodes) - 1
    seen_types = set()
    for orbit in s.orbits():
        k = lat.index_of[s.stabilizer(orbit[0]).members]
        if k in seen_types:
            continue
        seen_types.add(k)
        for j in range(len(lat.nodes)):
            if j != k and lat.leq[k][j]:
                bounds.append(v.dims[k] - v.dims[j] - 2)
    full = lat.nodes[top]
    if len(fixed_points(s, full)) >= 2:
        bounds.append(v.dims[top] - 2)
    return bounds


def disk_conn_general(v: RepDimension, s: GSet, ell: int) -> bool:
    """Is the little-disk structure ell-connected at the arity s?"""
    if s.group != v.group:
        raise ValidationError("arity is over a different group")
    return all(ell <= b for b in _constraints(v, s))


def disk_conn_value(v: RepDimension, s: GSet) -> ExtInt:
    """Largest passing level, infinite when the constraint set is empty,
    floored at -2."""
    bounds = _constraints(v, s)
    if not bounds:
        return INF
    return ExtInt(max(-2, min(bounds)))


def non_additivity_witness(a_prime: int, b: int) -> dict:
    """Summing the bounds of two representations with equal arity support
    undershoots the bound of their direct sum at the mixed arity with two
    fixed points and one free orbit."""
    if a_prime <= 1 or b <= 1:
        raise ValidationError("both multiplicities must exceed 1")
    arity = ("G", 2, 1)
    lhs = disk_conn_c2(1, b, arity) + disk_conn_c2(a_prime, 1, arity) + 2
    rhs = disk_conn_c2(a_prime + 1, b + 1, arity)
    return {"lhs_bound": lhs, "rhs": rhs, "strict": lhs < rhs,
            "provenance": "forthcoming: additivity of little-disk "
                          "structures under direct sum"}
