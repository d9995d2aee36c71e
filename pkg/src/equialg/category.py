"""Weak indexing categories: the encoding by classes of G-set maps.

A map of finite G-sets decomposes over the orbits of its codomain; over an
orbit with stabilizer H the map is induced from its fiber, an H-set.  The
isomorphism class of a map is therefore a multiset of components
(conjugacy class of H, fiber class up to the normalizer twist), and a wide
pullback-stable subcategory satisfying the summand condition is exactly a
set of map classes determined by its admissible components.

This module works with explicit map-class sets: a literal validity checker
and closure (composition via matchings, pullback against arbitrary maps,
summand splitting and assembly, all isomorphisms), an exhaustive
enumeration at small scale, and the conversions to and from the system
encoding of `indexing.py`.  The two encodings are computed by independent
routines, so their agreement is a real check of the equivalence.
"""
from __future__ import annotations

from collections import defaultdict, deque
from itertools import permutations

from .errors import CutoffOverflowError, GuardExceededError, ValidationError
from .groups import FiniteGroup
from .gsets import GSetMap
from .indexing import (CheckReport, LevelTables, WeakIndexingSystem,
                       close_system, default_cutoff, level_tables, system_check)
from .poset import Poset


# -- map classes ----------------------------------------------------------

def component(tables: LevelTables, hi: int, cid: int) -> tuple:
    """Canonical component: base moved to its conjugacy-class representative,
    fiber normalizer-minimized."""
    rep = tables.lat.class_rep(hi)
    if rep != hi:
        n = next(g for g in tables.group.elements
                 if tables._conj_sid(g, hi) == rep)
        hi, cid = tables.conj_cls(n, hi, cid)
        assert hi == rep
    return (rep, tables.weyl_canonical(rep, cid))


def comp_sizes(tables: LevelTables, comp: tuple) -> tuple:
    hi, cid = comp
    index = tables.group.order // tables.sub_order[hi]
    return (tables.size(hi, cid) * index, index)


def class_sizes(tables: LevelTables, mc: tuple) -> tuple:
    src = dst = 0
    for comp in mc:
        s, d = comp_sizes(tables, comp)
        src += s
        dst += d
    return (src, dst)


_COD_CACHE: dict = {}
_DOM_CACHE: dict = {}
_COMPOSE_CACHE: dict = {}
_PULLBACK_CACHE: dict = {}


def cod_class(tables: LevelTables, mc: tuple) -> tuple:
    """G-set class of the codomain: the multiset of base orbit types."""
    key = (id(tables), mc)
    if key not in _COD_CACHE:
        _COD_CACHE[key] = tuple(sorted(h for (h, _) in mc))
    return _COD_CACHE[key]


def dom_class(tables: LevelTables, mc: tuple) -> tuple:
    """G-set class of the domain: induced fiber orbits, as G-orbit types."""
    key = (id(tables), mc)
    if key not in _DOM_CACHE:
        out = []
        for (h, cid) in mc:
            out.extend(tables.lat.class_rep(m) for m in tables.classes[h][cid])
        _DOM_CACHE[key] = tuple(sorted(out))
    return _DOM_CACHE[key]


def map_class_of(tables: LevelTables, f: GSetMap) -> tuple:
    """Isomorphism class of an equivariant map, as a component multiset."""
    if f.src.group != tables.group:
        raise ValidationError("map is over a different group")
    if f.src.size > tables.cutoff or f.dst.size > tables.cutoff:
        raise CutoffOverflowError(
            f"map of sizes {f.src.size}->{f.dst.size} exceeds cutoff {tables.cutoff}")
    lat = tables.lat
    comps = []
    for orbit in f.dst.orbits():
        y = orbit[0]
        hi = lat.index_of[f.dst.stabilizer(y).members]
        stab = tables.members[hi]
        fiber = [x for x in f.src.points if f.on_points[x] == y]
        types = []
        seen = set()
        for x in fiber:
            if x in seen:
                continue
            sub_orbit = {f.src.act[g][x] for g in stab}
            seen |= sub_orbit
            k = lat.index_of[f.src.stabilizer(min(sub_orbit)).members]
            types.append(tables.h_class_rep[hi][k])
        cid = tables.encode(hi, tuple(types))
        assert cid is not None
        comps.append(component(tables, hi, cid))
    return tuple(sorted(comps))


def structure_class(tables: LevelTables, hi: int, cid: int) -> tuple:
    """Class of the structure map (induced H-set over the orbit G/H)."""
    return (component(tables, hi, cid),)


def iso_classes(tables: LevelTables) -> set:
    """Classes of isomorphisms: all fibers are one-point sets."""
    reps = sorted({tables.lat.class_rep(i) for i in range(tables.n_sids)})
    out = set()

    def rec(i, dst_left, acc):
        out.add(tuple(sorted(acc)))
        for j in range(i, len(reps)):
            h = reps[j]
            d = tables.group.order // tables.sub_order[h]
            if d <= dst_left:
                rec(j, dst_left - d, acc + [component(tables, h, tables.star(h))])

    rec(0, tables.cutoff, [])
    return out


def map_class_universe(tables: LevelTables, guard: int = 400_000) -> list:
    """All map classes within the cutoff, canonically ordered."""
    reps = sorted({tables.lat.class_rep(i) for i in range(tables.n_sids)})
    comps = []
    for h in reps:
        for cid in range(len(tables.classes[h])):
            if tables.weyl_canonical(h, cid) == cid:
                comps.append((h, cid))
    comps.sort()
    out = []

    def rec(i, src_left, dst_left, acc):
        out.append(tuple(acc))
        if len(out) > guard:
            raise GuardExceededError(
                f"map-class universe exceeds the guard of {guard}")
        for j in range(i, len(comps)):
            s, d = comp_sizes(tables, comps[j])
            if s <= src_left and d <= dst_left:
                rec(j, src_left - s, dst_left - d, acc + [comps[j]])

    rec(0, tables.cutoff, tables.cutoff, [])
    return sorted(out)


# -- the categorical operations on classes --------------------------------

def _matchings(left, right):
    """Distinct bijections left_i -> right_{perm(i)} between equal-size lists."""
    seen = set()
    for perm in permutations(range(len(right))):
        assignment = tuple(right[p] for p in perm)
        if assignment not in seen:
            seen.add(assignment)
            yield assignment


def _transports(tables, src_level, dst_level, cid):
    """Distinct conjugation transports of a class between conjugate levels."""
    outs = set()
    for g in tables.group.elements:
        if tables._conj_sid(g, src_level) == dst_level:
            hj, moved = tables.conj_cls(g, src_level, cid)
            outs.add(moved)
    return sorted(outs)


def compose_classes(tables: LevelTables, c1: tuple, c2: tuple) -> set:
    """All classes of g∘f over representatives f in c1: T -> S, g in c2: S -> R.

    A representative pairing matches the orbit slots of the fibers of c2
    (the orbits of S) with the components of c1, type by type; each
    matching assembles composite fibers as indexed coproducts.
    """
    if cod_class(tables, c1) != dom_class(tables, c2):
        return set()
    ckey = (id(tables), c1, c2)
    if ckey in _COMPOSE_CACHE:
        return _COMPOSE_CACHE[ckey]
    fibers_by_type = defaultdict(list)
    for comp in c1:
        fibers_by_type[comp[0]].append(comp)
    slots_by_type = defaultdict(list)
    for j, (h, cid) in enumerate(c2):
        for k in tables.classes[h][cid]:
            slots_by_type[tables.lat.class_rep(k)].append((j, k))
    types = sorted(slots_by_type)
    assert sorted(fibers_by_type) == types
    per_type = [list(_matchings(slots_by_type[t], fibers_by_type[t]))
                for t in types]
    results = set()

    def assemble(ti, chosen):
        if ti == len(types):
            # chosen: per type, fibers aligned with slots_by_type[type]
            options = [[]]
            for t, fibers in zip(types, chosen):
                for (j, k), (rep, fid) in zip(slots_by_type[t], fibers):
                    branches = _transports(tables, rep, k, fid)
                    options = [opt + [(j, k, b)] for opt in options
                               for b in branches]
            for opt in options:
                fibers_out = [list() for _ in c2]
                for (j, k, fid_k) in opt:
                    hj = c2[j][0]
                    fibers_out[j].extend(tables.h_class_rep[hj][m]
                                         for m in tables.classes[k][fid_k])
                comps = []
                for j, (hj, _) in enumerate(c2):
                    cid = tables.encode(hj, tuple(fibers_out[j]))
                    assert cid is not None
                    comps.append(component(tables, hj, cid))
                results.add(tuple(sorted(comps)))
            return
        for m in per_type[ti]:
            assemble(ti + 1, chosen + [m])

    assemble(0, [])
    _COMPOSE_CACHE[ckey] = results
    return results


def pullback_classes(tables: LevelTables, cf: tuple, cg: tuple) -> set:
    """All classes of the base change of cf: T -> S along cg: U -> S,
    as maps (T x_S U) -> U.  Matchings pair the components of the two maps
    over the shared codomain; unrepresentable pullbacks are skipped."""
    if cod_class(tables, cf) != cod_class(tables, cg):
        return set()
    ckey = (id(tables), cf, cg)
    if ckey in _PULLBACK_CACHE:
        return _PULLBACK_CACHE[ckey]
    f_by_type = defaultdict(list)
    g_by_type = defaultdict(list)
    for comp in cf:
        f_by_type[comp[0]].append(comp)
    for comp in cg:
        g_by_type[comp[0]].append(comp)
    types = sorted(f_by_type)
    per_type = [list(_matchings(g_by_type[t], f_by_type[t])) for t in types]
    results = set()

    def assemble(ti, acc, src_budget):
        if ti == len(types):
            results.add(tuple(sorted(acc)))
            return
        t = types[ti]
        for m in per_type[ti]:
            comps = list(acc)
            budget = src_budget
            ok = True
            for (h, fid_g), (h2, fid_f) in zip(g_by_type[t], m):
                assert h == h2
                for k in tables.classes[h][fid_g]:
                    rcid = tables.restrict_cls(h, k, fid_f)
                    if rcid is None:
                        ok = False
                        break
                    comp = component(tables, k, rcid)
                    budget -= comp_sizes(tables, comp)[0]
                    if budget < 0:
                        ok = False
                        break
                    comps.append(comp)
                if not ok:
                    break
            if ok:
                assemble(ti + 1, comps, budget)

    assemble(0, [], tables.cutoff)
    _PULLBACK_CACHE[ckey] = results
    return results


def sub_multisets(mc: tuple) -> set:
    """All proper nonempty sub-multisets of a component multiset."""
    out = set()
    n = len(mc)
    for bits in range(1, (1 << n) - 1):
        out.add(tuple(mc[i] for i in range(n) if bits >> i & 1))
    return out


class _Ops:
    """Interned map classes and lazily cached pair operations at one cutoff."""

    def __init__(self, tables: LevelTables, universe: list):
        self.tables = tables
        self.classes = list(universe)
        self.id_of = {mc: i for i, mc in enumerate(self.classes)}
        self.cod = [cod_class(tables, mc) for mc in self.classes]
        self.dom = [dom_class(tables, mc) for mc in self.classes]
        self.sizes = [class_sizes(tables, mc) for mc in self.classes]
        self.by_cod = defaultdict(list)
        for i, c in enumerate(self.cod):
            self.by_cod[c].append(i)
        self._compose: dict = {}
        self._pullback: dict = {}
        self._subs: dict = {}
        self._union: dict = {}

    def encode_all(self, mcs):
        return [self.id_of[mc] for mc in mcs]

    def compose(self, u: int, v: int):
        key = (u, v)
        if key not in self._compose:
            out = compose_classes(self.tables, self.classes[u], self.classes[v])
            self._compose[key] = tuple(sorted(self.id_of[m] for m in out))
        return self._compose[key]

    def pullback(self, u: int, v: int):
        key = (u, v)
        if key not in self._pullback:
            out = pullback_classes(self.tables, self.classes[u], self.classes[v])
            self._pullback[key] = tuple(sorted(self.id_of[m] for m in out))
        return self._pullback[key]

    def subs(self, u: int):
        if u not in self._subs:
            self._subs[u] = tuple(sorted(self.id_of[m]
                                         for m in sub_multisets(self.classes[u])))
        return self._subs[u]

    def union(self, u: int, v: int) -> int:
        key = (u, v) if u <= v else (v, u)
        if key not in self._union:
            merged = tuple(sorted(self.classes[u] + self.classes[v]))
            src, dst = class_sizes(self.tables, merged)
            if src <= self.tables.cutoff and dst <= self.tables.cutoff:
                self._union[key] = self.id_of[merged]
            else:
                self._union[key] = -1
        return self._union[key]


_OPS_CACHE: dict = {}


def _ops_for(tables: LevelTables, universe: list | None = None) -> _Ops:
    key = id(tables)
    if key not in _OPS_CACHE:
        _OPS_CACHE[key] = _Ops(tables, universe or map_class_universe(tables))
    return _OPS_CACHE[key]


def is_weak_indexing_category(tables: LevelTables, classes,
                              universe: list | None = None) -> CheckReport:
    """Literal validity of an explicit set of map classes: wideness,
    composition, pullback stability, and both summand directions."""
    classes = set(classes)
    for m in sorted(iso_classes(tables)):
        if m not in classes:
            return CheckReport(False, "wide", m, "missing an isomorphism class")
    pool = sorted(classes)
    for c1 in pool:
        for c2 in pool:
            for comp in sorted(compose_classes(tables, c1, c2)):
                if comp not in classes:
                    return CheckReport(False, "composition", (c1, c2, comp))
    if universe is None:
        universe = map_class_universe(tables)
    by_cod = defaultdict(list)
    for g in universe:
        by_cod[cod_class(tables, g)].append(g)
    for f in pool:
        for g in by_cod[cod_class(tables, f)]:
            for pb in sorted(pullback_classes(tables, f, g)):
                if pb not in classes:
                    return CheckReport(False, "pullback", (f, g, pb))
    for m in pool:
        for sub in sorted(sub_multisets(m)):
            if sub not in classes:
                return CheckReport(False, "summand-split", (m, sub))
    for c1 in pool:
        for c2 in pool:
            union = tuple(sorted(c1 + c2))
            src, dst = class_sizes(tables, union)
            if src <= tables.cutoff and dst <= tables.cutoff \
                    and union not in classes:
                return CheckReport(False, "summand-assemble", (c1, c2, union))
    return CheckReport(True)


def close_category(tables: LevelTables, seeds, unital: bool = False,
                   universe: list | None = None) -> frozenset:
    """Least valid map-class set containing the seeds (literal fixpoint)."""
    ops = _ops_for(tables, universe)
    ids = _close_ids(tables, ops, [ops.id_of[tuple(sorted(m))] for m in seeds],
                     unital)
    return frozenset(ops.classes[i] for i in ids)


def _close_ids(tables, ops, seed_ids, unital):
    classes: set = set()
    order: list = []
    pending: deque = deque()

    def add(u):
        if u >= 0 and u not in classes:
            classes.add(u)
            order.append(u)
            pending.append(u)

    for m in sorted(iso_classes(tables)):
        add(ops.id_of[m])
    if unital:
        reps = sorted({tables.lat.class_rep(i) for i in range(tables.n_sids)})
        for h in reps:
            add(ops.id_of[(component(tables, h, tables.empty(h)),)])
    for u in seed_ids:
        add(u)
    while pending:
        m = pending.popleft()
        for sub in ops.subs(m):
            add(sub)
        for other in list(order):
            add(ops.union(m, other))
            for comp in ops.compose(m, other):
                add(comp)
            for comp in ops.compose(other, m):
                add(comp)
        for g in ops.by_cod[ops.cod[m]]:
            for pb in ops.pullback(m, g):
                add(pb)
    return frozenset(classes)


# -- the category value type and conversions ------------------------------

class WeakIndexingCategory:
    """A weak indexing category at a cutoff, stored by its admissible
    components; full map-class sets are materialized on demand."""

    __slots__ = ("tables", "components", "_key")

    def __init__(self, tables: LevelTables, components, validate: bool = True):
        self.tables = tables
        self.components = frozenset(components)
        self._key = None
        if validate:
            rep = system_check(self.to_system())
            if not rep:
                raise ValidationError(f"not a weak indexing category: {rep}")

    @property
    def group(self):
        return self.tables.group

    @property
    def cutoff(self):
        return self.tables.cutoff

    def value_key(self):
        if self._key is None:
            t = self.tables
            self._key = tuple(sorted(
                (tuple(sorted(t.members[h])), t.classes[h][c])
                for (h, c) in self.components))
        return self._key

    def sort_key(self):
        return (len(self.components), self.value_key())

    def __eq__(self, other):
        return (isinstance(other, WeakIndexingCategory)
                and self.tables is other.tables
                and self.components == other.components)

    def __hash__(self):
        return hash((id(self.tables), self.components))

    def __le__(self, other):
        return self.components <= other.components

    def __repr__(self):
        return (f"WeakIndexingCategory({self.group.name}@{self.cutoff}, "
                f"{len(self.components)} components)")

    def contains_class(self, mc: tuple) -> bool:
        return all(comp in self.components for comp in mc)

    def contains(self, f: GSetMap) -> bool:
        return self.contains_class(map_class_of(self.tables, f))

    def map_classes(self, guard: int = 400_000) -> frozenset:
        universe = map_class_universe(self.tables, guard)
        return frozenset(mc for mc in universe if self.contains_class(mc))

    def to_system(self) -> WeakIndexingSystem:
        """Admissible H-sets are those whose structure map lies in the
        category; conjugate levels are filled by transport."""
        t = self.tables
        adm = []
        for hi in range(t.n_sids):
            keep = set()
            for cid in range(len(t.classes[hi])):
                if component(t, hi, cid) in self.components:
                    keep.add(cid)
            adm.append(keep)
        return WeakIndexingSystem(t, adm, validate=False)

    @classmethod
    def from_system(cls, sys: WeakIndexingSystem) -> "WeakIndexingCategory":
        t = sys.tables
        reps = sorted({t.lat.class_rep(i) for i in range(t.n_sids)})
        comps = set()
        for h in reps:
            for cid in sys.admissible[h]:
                comps.add((h, t.weyl_canonical(h, cid)))
        return cls(t, comps, validate=False)

    @classmethod
    def from_map_classes(cls, tables: LevelTables, classes
                         ) -> "WeakIndexingCategory":
        comps = {comp for mc in classes for comp in mc}
        return cls(tables, comps)


def system_of_category(cat: WeakIndexingCategory) -> WeakIndexingSystem:
    return cat.to_system()


def category_of_system(sys: WeakIndexingSystem) -> WeakIndexingCategory:
    return WeakIndexingCategory.from_system(sys)


def i_trivial(tables: LevelTables) -> WeakIndexingCategory:
    from .indexing import f_trivial
    return WeakIndexingCategory.from_system(f_trivial(tables))


def i_complete(tables: LevelTables) -> WeakIndexingCategory:
    from .indexing import f_complete
    return WeakIndexingCategory.from_system(f_complete(tables))


def generate_category(group: FiniteGroup, generators, unital: bool = False,
                      cutoff: int | None = None) -> WeakIndexingCategory:
    """Least weak indexing category containing the generating maps.

    The closure runs on the level encoding (the map-level fixpoint is
    equivalent but only feasible at very small cutoffs); the optional
    unitality flag adjoins the empty arity everywhere.
    """
    tables = level_tables(group, cutoff or default_cutoff(group))
    seeds = []
    for f in generators:
        for (h, cid) in map_class_of(tables, f):
            seeds.append((h, cid))
    sys = close_system(tables, seeds,
                       unital_levels=range(tables.n_sids) if unital else ())
    return WeakIndexingCategory.from_system(sys)


def enumerate_categories(group: FiniteGroup, cutoff: int,
                         which: str = "all", ground_guard: int = 400) -> Poset:
    """Exhaustive map-class-set enumeration (the oracle path; small scale).

    Every valid class set is the closure of its singletons, so closing the
    closure-atoms under joins is exhaustive.
    """
    tables = level_tables(group, cutoff)
    universe = map_class_universe(tables, guard=100_000)
    if len(universe) > ground_guard:
        raise GuardExceededError(
            f"{len(universe)} map classes exceed the guard of {ground_guard}")
    ops = _ops_for(tables, universe)
    unital = which == "unital"
    core = _close_ids(tables, ops, [], unital)
    atoms = {}
    for u in range(len(universe)):
        if u in core:
            continue
        a = _close_ids(tables, ops, [u], unital)
        atoms.setdefault(a, a)
    found = {core: core}
    frontier = [core]
    join_memo: dict = {}
    while frontier:
        new = []
        for x in frontier:
            for a in atoms:
                if a <= x:
                    continue
                mk = (x, a)
                j = join_memo.get(mk)
                if j is None:
                    j = _close_ids(tables, ops, sorted(x | a), unital)
                    join_memo[mk] = j
                if j not in found:
                    found[j] = j
                    new.append(j)
        frontier = new
    nodes = [frozenset(ops.classes[i] for i in ids) for ids in found]
    if which == "almost_unital":
        nodes = [n for n in nodes
                 if WeakIndexingCategory.from_map_classes(tables, n)
                 .to_system().is_almost_unital()]
    return Poset(nodes, leq=lambda a, b: a <= b,
                 key=lambda n: (len(n), tuple(sorted(n))))
