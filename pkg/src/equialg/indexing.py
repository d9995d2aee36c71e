"""Weak indexing systems over a finite group, at a finite size cutoff.

A weak indexing system assigns to every subgroup H a set of isomorphism
classes of H-sets (the admissible arities at H) subject to four axiom
families: it contains the one-point H-set, it is stable under conjugation
and under restriction to subgroups, and it is closed under coproducts
indexed by its own admissible sets.

H-set classes are encoded as sorted multisets of orbit types, an orbit
type being an H-conjugacy-class representative of a subgroup of H.  The
finite encoding truncates level H at cutoff * |H| / |G| points, so that an
H-set is representable exactly when the G-set induced from it fits the
global cutoff; an empirical doubling test (enumerate at c and 2c) guards
the truncation.

Transfer systems, the lattice operations, generation / closure, and
exhaustive enumeration live here as well.  The equivalent encoding by
categories of G-set maps is in `category.py`.
"""
from __future__ import annotations

from collections import deque

from .errors import GuardExceededError, ValidationError
from .groups import FiniteGroup, subgroup_lattice
from .poset import Poset


class CheckReport:
    """Outcome of a validity check; falsy iff some axiom failed."""

    def __init__(self, ok: bool, axiom: str = "", witness=None, message: str = ""):
        self.ok = bool(ok)
        self.axiom = axiom
        self.witness = witness
        self.message = message

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "CheckReport(ok)"
        return f"CheckReport(fail: {self.axiom}, witness={self.witness})"


def _ok():
    return CheckReport(True)


class LevelTables:
    """Shared per-(group, cutoff) tables: orbit types, class interning,
    and cached restriction / induction / conjugation / coproduct operations.
    """

    def __init__(self, group: FiniteGroup, cutoff: int):
        if cutoff < 1:
            raise ValidationError("cutoff must be positive")
        self.group = group
        self.cutoff = cutoff
        self.lat = subgroup_lattice(group)
        self.n_sids = len(self.lat.nodes)
        self.members = [h.members for h in self.lat.nodes]
        self.sub_order = [h.order for h in self.lat.nodes]
        self.abelian = group.is_abelian()
        self.sub_sids = []      # per H: sids of subgroups contained in H
        self.h_class_rep = []   # per H: {K sid -> H-conjugacy class rep sid}
        self.orbit_types = []   # per H: sorted tuple of rep sids
        self.level_cutoff = [cutoff * o // group.order for o in self.sub_order]
        for hi in range(self.n_sids):
            hm = self.members[hi]
            subs = [k for k in range(self.n_sids) if self.members[k] <= hm]
            rep = {}
            for k in subs:
                orbit = {self._conj_sid(g, k) for g in hm}
                r = min(orbit)
                for k2 in orbit:
                    rep[k2] = r
            self.sub_sids.append(tuple(subs))
            self.h_class_rep.append(rep)
            self.orbit_types.append(tuple(sorted(set(rep.values()))))
        # interned H-set classes per level, sorted by (size, tuple)
        self.classes = []
        self.class_id = []
        self.cls_size = []
        for hi in range(self.n_sids):
            lst = sorted(self._enumerate_level(hi, self.level_cutoff[hi]),
                         key=lambda c: (self._size_of(hi, c), c))
            self.classes.append(lst)
            self.class_id.append({c: i for i, c in enumerate(lst)})
            self.cls_size.append(tuple(self._size_of(hi, c) for c in lst))
        self._res_cache: dict = {}
        self._ind_cache: dict = {}
        self._conj_cache: dict = {}
        self._coprod_cache: dict = {}
        self._orbit_res_cache: dict = {}

    # -- raw helpers ---------------------------------------------------
    def _conj_sid(self, g: int, sid: int) -> int:
        grp = self.group
        m = frozenset(grp.conj(g, a) for a in self.members[sid])
        return self.lat.index_of[m]

    def orbit_size(self, hi: int, k: int) -> int:
        return self.sub_order[hi] // self.sub_order[k]

    def _size_of(self, hi: int, cls: tuple) -> int:
        return sum(self.orbit_size(hi, k) for k in cls)

    def _enumerate_level(self, hi: int, bound: int):
        types = self.orbit_types[hi]
        out = []

        def rec(i, left, acc):
            if i == len(types):
                out.append(tuple(acc))
                return
            rec(i + 1, left, acc)
            size = self.orbit_size(hi, types[i])
            k = 1
            while k * size <= left:
                rec(i + 1, left - k * size, acc + [types[i]] * k)
                k += 1

        rec(0, bound, [])
        return [tuple(sorted(c)) for c in out]

    def star(self, hi: int) -> int:
        """Class id of the one-point H-set."""
        return self.class_id[hi][(self.h_class_rep[hi][hi],)]

    def empty(self, hi: int) -> int:
        return self.class_id[hi][()]

    def size(self, hi: int, cid: int) -> int:
        return self.cls_size[hi][cid]

    def encode(self, hi: int, cls: tuple):
        """Class id at level hi, or None if it exceeds the level cutoff."""
        return self.class_id[hi].get(tuple(sorted(cls)))

    # -- operations on classes ----------------------------------------
    def restrict_orbit(self, hi: int, ki: int, li: int) -> tuple:
        """Orbit types of Res^H_K (H/L) via double cosets K\\H/L."""
        key = (hi, ki, li)
        got = self._orbit_res_cache.get(key)
        if got is None:
            grp = self.group
            km, lm = self.members[ki], self.members[li]
            remaining = set(self.members[hi])
            out = []
            while remaining:
                x = min(remaining)
                orbit = {grp.mul(grp.mul(a, x), b) for a in km for b in lm}
                remaining -= orbit
                stab = km & frozenset(grp.conj(x, b) for b in lm)
                out.append(self.h_class_rep[ki][self.lat.index_of[stab]])
            got = tuple(sorted(out))
            self._orbit_res_cache[key] = got
        return got

    def restrict_cls(self, hi: int, ki: int, cid: int):
        """Restriction to an actual subgroup K <= H; None if unrepresentable."""
        key = (hi, ki, cid)
        if key in self._res_cache:
            return self._res_cache[key]
        cls = self.classes[hi][cid]
        out = []
        for li in cls:
            out.extend(self.restrict_orbit(hi, ki, li))
        res = self.encode(ki, tuple(out))
        self._res_cache[key] = res
        return res

    def induce_cls(self, ki: int, hi: int, cid: int):
        """Induction of a K-set class up to H >= K; None if unrepresentable."""
        key = (ki, hi, cid)
        if key in self._ind_cache:
            return self._ind_cache[key]
        cls = self.classes[ki][cid]
        res = self.encode(hi, tuple(self.h_class_rep[hi][m] for m in cls))
        self._ind_cache[key] = res
        return res

    def conj_cls(self, g: int, hi: int, cid: int):
        """Transport a class at level H to level gHg^-1."""
        key = (g, hi, cid)
        if key in self._conj_cache:
            return self._conj_cache[key]
        hj = self._conj_sid(g, hi)
        cls = self.classes[hi][cid]
        res = self.encode(hj, tuple(self.h_class_rep[hj][self._conj_sid(g, k)]
                                    for k in cls))
        assert res is not None  # conjugation preserves size and level cutoff
        self._conj_cache[key] = (hj, res)
        return self._conj_cache[key]

    def coproduct_single(self, hi: int, cid_s: int, ki: int, cid_t: int):
        """Replace one orbit slot of type K in S by the induction of T.

        This is the single-slot instance of the self-indexed coproduct; the
        general indexed coproduct is an iterated composition of such steps
        (shrinking slots first keeps intermediates within the cutoff), so
        closing under it closes under all indexed coproducts that fit.
        """
        key = (hi, cid_s, ki, cid_t)
        if key in self._coprod_cache:
            return self._coprod_cache[key]
        cls = list(self.classes[hi][cid_s])
        assert ki in cls
        cls.remove(ki)
        ind = self.classes[ki][cid_t]
        cls.extend(self.h_class_rep[hi][m] for m in ind)
        res = self.encode(hi, tuple(cls))
        self._coprod_cache[key] = res
        return res

    def weyl_canonical(self, hi: int, cid: int) -> int:
        """Least class in the orbit of cid under the normalizer of H."""
        if self.abelian:
            return cid
        grp = self.group
        best = cid
        for g in grp.elements:
            if self._conj_sid(g, hi) != hi:
                continue
            _, moved = self.conj_cls(g, hi, cid)
            if moved < best:
                best = moved
        return best

    def guard_levels(self, limit: int):
        total = sum(len(c) for c in self.classes)
        if total > limit:
            raise GuardExceededError(
                f"{total} level classes exceed the guard of {limit}")


_TABLES: dict = {}


def level_tables(group: FiniteGroup, cutoff: int) -> LevelTables:
    key = (group, cutoff)
    if key not in _TABLES:
        _TABLES[key] = LevelTables(group, cutoff)
    return _TABLES[key]


def default_cutoff(group: FiniteGroup) -> int:
    return 3 * group.order


class WeakIndexingSystem:
    """Admissible H-set classes for every subgroup H of a fixed group."""

    __slots__ = ("tables", "admissible", "_key")

    def __init__(self, tables: LevelTables, admissible, validate: bool = True):
        self.tables = tables
        self.admissible = tuple(frozenset(a) for a in admissible)
        if len(self.admissible) != tables.n_sids:
            raise ValidationError("need one admissible set per subgroup")
        self._key = None
        if validate:
            rep = system_check(self)
            if not rep:
                raise ValidationError(f"not a weak indexing system: {rep}")

    @property
    def group(self):
        return self.tables.group

    @property
    def cutoff(self):
        return self.tables.cutoff

    def contains(self, hi: int, cid: int) -> bool:
        return cid in self.admissible[hi]

    def value_key(self) -> tuple:
        """Canonical cutoff-independent content: class tuples per level."""
        if self._key is None:
            t = self.tables
            self._key = tuple(
                tuple(sorted(t.classes[hi][c] for c in self.admissible[hi]))
                for hi in range(t.n_sids))
        return self._key

    def sort_key(self):
        return (sum(len(a) for a in self.admissible), self.value_key())

    def __eq__(self, other):
        return (isinstance(other, WeakIndexingSystem)
                and self.tables is other.tables
                and self.admissible == other.admissible)

    def __hash__(self):
        return hash((id(self.tables), self.admissible))

    def __le__(self, other: "WeakIndexingSystem") -> bool:
        return all(a <= b for a, b in zip(self.admissible, other.admissible))

    def __repr__(self):
        sizes = [len(a) for a in self.admissible]
        return f"WeakIndexingSystem({self.group.name}@{self.cutoff}, levels={sizes})"

    # -- predicates ----------------------------------------------------
    def unit_family(self) -> frozenset:
        """Sids of the subgroups at which the empty set is admissible."""
        t = self.tables
        return frozenset(hi for hi in range(t.n_sids)
                         if t.empty(hi) in self.admissible[hi])

    def is_unital(self) -> bool:
        return len(self.unit_family()) == self.tables.n_sids

    def is_almost_unital(self) -> bool:
        """Wherever any nontrivial arity is admissible, so is the empty set."""
        t = self.tables
        for hi in range(t.n_sids):
            nontrivial = self.admissible[hi] - {t.star(hi)}
            if nontrivial and t.empty(hi) not in self.admissible[hi]:
                return False
        return True

    def is_summand_closed(self) -> bool:
        """Independent characterization: every summand (the empty one
        included) of an admissible set other than the one-point set is
        admissible.  Closure under nonempty summands alone is strictly
        weaker: a level admitting exactly the positive fold arities is
        closed under nonempty summands but not almost-unital."""
        t = self.tables
        for hi in range(t.n_sids):
            for cid in self.admissible[hi]:
                cls = t.classes[hi][cid]
                if cid == t.star(hi):
                    continue
                n = len(cls)
                for bits in range(1 << n):
                    sub = tuple(cls[i] for i in range(n) if bits >> i & 1)
                    scid = t.encode(hi, sub)
                    if scid is not None and scid not in self.admissible[hi]:
                        return False
        return True

    def to_json(self) -> str:
        import json
        t = self.tables
        levels = {}
        for hi in range(t.n_sids):
            name = str(list(sorted(t.members[hi])))
            levels[name] = sorted(
                [sorted(list(sorted(t.members[k])) for k in t.classes[hi][c])
                 for c in self.admissible[hi]])
        return json.dumps({"group": self.group.name, "cutoff": self.cutoff,
                           "levels": levels},
                          sort_keys=True, separators=(",", ":"))


def system_check(sys: WeakIndexingSystem) -> CheckReport:
    """Validity report: units, conjugation, restriction, self-indexed
    coproducts (single-slot form; see LevelTables.coproduct_single)."""
    t = sys.tables
    for hi in range(t.n_sids):
        if t.star(hi) not in sys.admissible[hi]:
            return CheckReport(False, "unit", (hi,),
                               "missing one-point set at some level")
    if not t.abelian:
        for g in t.group.elements:
            for hi in range(t.n_sids):
                for cid in sys.admissible[hi]:
                    hj, moved = t.conj_cls(g, hi, cid)
                    if moved not in sys.admissible[hj]:
                        return CheckReport(False, "conjugation", (g, hi, cid))
    for hi in range(t.n_sids):
        for cid in sorted(sys.admissible[hi]):
            for ki in t.sub_sids[hi]:
                if ki == hi:
                    continue
                res = t.restrict_cls(hi, ki, cid)
                if res is not None and res not in sys.admissible[ki]:
                    return CheckReport(False, "restriction", (hi, cid, ki, res))
    for hi in range(t.n_sids):
        for cid in sorted(sys.admissible[hi]):
            for ki in set(t.classes[hi][cid]):
                for tid in sorted(sys.admissible[ki]):
                    out = t.coproduct_single(hi, cid, ki, tid)
                    if out is not None and out not in sys.admissible[hi]:
                        return CheckReport(False, "indexed-coproduct",
                                           (hi, cid, ki, tid, out))
    return _ok()


def is_weak_indexing_system(candidate: WeakIndexingSystem) -> CheckReport:
    return system_check(candidate)


def close_system(tables: LevelTables, seed, unital_levels=()) -> WeakIndexingSystem:
    """Least weak indexing system containing the seed (level, class-id) pairs.

    Results exceeding a level cutoff are unrepresentable and simply not
    recorded; the doubling test in the enumeration covers the truncation.
    """
    t = tables
    adm = [set() for _ in range(t.n_sids)]
    pending = deque()
    slot_index = [[] for _ in range(t.n_sids)]  # per K: (H, S-cid) with a K slot

    def add(hi, cid):
        if cid is not None and cid not in adm[hi]:
            adm[hi].add(cid)
            pending.append((hi, cid))

    for hi in range(t.n_sids):
        add(hi, t.star(hi))
    for hi in unital_levels:
        add(hi, t.empty(hi))
    for hi, cid in seed:
        add(hi, cid)
    while pending:
        hi, cid = pending.popleft()
        if not t.abelian:
            for g in t.group.elements:
                hj, moved = t.conj_cls(g, hi, cid)
                add(hj, moved)
        for ki in t.sub_sids[hi]:
            if ki != hi:
                add(ki, t.restrict_cls(hi, ki, cid))
        for ki in set(t.classes[hi][cid]):
            slot_index[ki].append((hi, cid))
            for tid in sorted(adm[ki]):
                add(hi, t.coproduct_single(hi, cid, ki, tid))
        for (hj, sid) in list(slot_index[hi]):
            add(hj, t.coproduct_single(hj, sid, hi, cid))
    return WeakIndexingSystem(t, adm, validate=False)


def join(a: WeakIndexingSystem, b: WeakIndexingSystem) -> WeakIndexingSystem:
    if a.tables is not b.tables:
        raise ValidationError("join needs a shared group and cutoff")
    if b <= a:
        return a
    if a <= b:
        return b
    return close_system(a.tables,
                        [(hi, c) for hi in range(a.tables.n_sids)
                         for c in sorted(a.admissible[hi] | b.admissible[hi])])


def meet(a: WeakIndexingSystem, b: WeakIndexingSystem) -> WeakIndexingSystem:
    if a.tables is not b.tables:
        raise ValidationError("meet needs a shared group and cutoff")
    out = WeakIndexingSystem(
        a.tables, [x & y for x, y in zip(a.admissible, b.admissible)],
        validate=False)
    assert system_check(out)
    return out


# -- named systems ------------------------------------------------------

def f_trivial(tables: LevelTables) -> WeakIndexingSystem:
    return WeakIndexingSystem(
        tables, [{tables.star(hi)} for hi in range(tables.n_sids)],
        validate=False)


def f_infinity(tables: LevelTables) -> WeakIndexingSystem:
    """All finite multisets of one-point sets at every level."""
    adm = []
    for hi in range(tables.n_sids):
        star_type = tables.h_class_rep[hi][hi]
        adm.append({cid for cid, cls in enumerate(tables.classes[hi])
                    if all(k == star_type for k in cls)})
    return WeakIndexingSystem(tables, adm, validate=False)


def f_zero(tables: LevelTables, family) -> WeakIndexingSystem:
    """Empty and one-point sets on a downward-closed family of subgroups."""
    family = frozenset(family)
    for hi in family:
        for ki in tables.sub_sids[hi]:
            if ki not in family:
                raise ValidationError("family must be downward closed")
    adm = [{tables.star(hi)} | ({tables.empty(hi)} if hi in family else set())
           for hi in range(tables.n_sids)]
    return WeakIndexingSystem(tables, adm, validate=False)


def f_complete(tables: LevelTables) -> WeakIndexingSystem:
    return WeakIndexingSystem(
        tables, [set(range(len(tables.classes[hi])))
                 for hi in range(tables.n_sids)],
        validate=False)


# -- enumeration --------------------------------------------------------

def _families(tables: LevelTables):
    """Downward-closed, conjugation-stable subgroup families, as sid sets."""
    t = tables
    out = set()
    for bits in range(1 << t.n_sids):
        fam = frozenset(i for i in range(t.n_sids) if bits >> i & 1)
        ok = all(set(t.sub_sids[hi]) <= fam for hi in fam)
        ok = ok and all(t._conj_sid(g, hi) in fam
                        for g in t.group.elements for hi in fam)
        if ok:
            out.add(fam)
    return sorted(out, key=lambda f: (len(f), sorted(f)))


def _complete_by_joins(tables, found, atoms):
    """Close a set of systems under joins with the given atoms."""
    by_key = {s.value_key(): s for s in found}
    frontier = list(by_key.values())
    memo = {}
    while frontier:
        new = []
        for x in frontier:
            for a in atoms:
                if a <= x:
                    continue
                mk = (x.value_key(), a.value_key())
                j = memo.get(mk)
                if j is None:
                    j = join(x, a)
                    memo[mk] = j
                k = j.value_key()
                if k not in by_key:
                    by_key[k] = j
                    new.append(j)
        frontier = new
    return list(by_key.values())


_ENUM_CACHE: dict = {}


def enumerate_systems(group: FiniteGroup, cutoff: int | None = None,
                      which: str = "all", level_guard: int = 1200) -> Poset:
    """All weak indexing systems at the cutoff, as a poset under containment.

    `which` is one of "all", "unital", "almost_unital".  Every system is a
    join of closures of single classes over a closed core, so closing the
    atom set under joins is exhaustive.  The unfiltered lattice is not
    finite in the large-cutoff limit (fold arities may live in proper
    numerical submonoids), so "all" is guarded to small ground sets; the
    unital and almost-unital posets are finite and saturate.
    """
    if which not in ("all", "unital", "almost_unital"):
        raise ValidationError(f"unknown filter {which!r}")
    t = level_tables(group, cutoff or default_cutoff(group))
    t.guard_levels(level_guard)
    key = (group, t.cutoff, which)
    if key in _ENUM_CACHE:
        return _ENUM_CACHE[key]
    if which == "all":
        t.guard_levels(80)
        found = _enumerate_over_core(t, core_levels=(), seed_levels=range(t.n_sids))
    elif which == "unital":
        found = _enumerate_over_core(t, core_levels=range(t.n_sids),
                                     seed_levels=range(t.n_sids))
    else:
        by_key = {}
        for fam in _families(t):
            for s in _enumerate_over_core(t, core_levels=sorted(fam),
                                          seed_levels=sorted(fam)):
                if s.is_almost_unital():
                    by_key.setdefault(s.value_key(), s)
        found = list(by_key.values())
    poset = Poset(found, leq=lambda a, b: a <= b, key=lambda s: s.sort_key())
    _ENUM_CACHE[key] = poset
    return poset


_CORE_CACHE: dict = {}


def _enumerate_over_core(tables, core_levels, seed_levels):
    t = tables
    key = (id(t), tuple(core_levels), tuple(seed_levels))
    if key in _CORE_CACHE:
        return _CORE_CACHE[key]
    core = close_system(t, [], unital_levels=core_levels)
    atoms = {}
    for hi in seed_levels:
        for cid in range(len(t.classes[hi])):
            if cid in core.admissible[hi]:
                continue
            a = close_system(t, [(hi, cid)], unital_levels=core_levels)
            atoms.setdefault(a.value_key(), a)
    atoms = sorted(atoms.values(), key=lambda s: s.sort_key())
    out = _complete_by_joins(t, [core], atoms)
    _CORE_CACHE[key] = out
    return out


def truncate_system(sys: WeakIndexingSystem, tables_small: LevelTables
                    ) -> WeakIndexingSystem:
    """Restrict a system to the (smaller) cutoff of `tables_small`."""
    t_big, t_small = sys.tables, tables_small
    if t_big.group != t_small.group or t_small.cutoff > t_big.cutoff:
        raise ValidationError("truncation needs the same group, smaller cutoff")
    adm = []
    for hi in range(t_big.n_sids):
        keep = set()
        for cid in sys.admissible[hi]:
            scid = t_small.encode(hi, t_big.classes[hi][cid])
            if scid is not None:
                keep.add(scid)
        adm.append(keep)
    return WeakIndexingSystem(t_small, adm, validate=False)


# -- transfer systems ----------------------------------------------------

class TransferSystem:
    """A relation on subgroups refining containment, closed under
    conjugation and restriction; stored as reflexive sid pairs."""

    __slots__ = ("group", "lat", "rel")

    def __init__(self, group: FiniteGroup, rel, validate: bool = True):
        self.group = group
        self.lat = subgroup_lattice(group)
        n = len(self.lat.nodes)
        rel = frozenset((int(a), int(b)) for a, b in rel) | frozenset(
            (i, i) for i in range(n))
        self.rel = rel
        if validate:
            rep = transfer_check(self)
            if not rep:
                raise ValidationError(f"not a transfer system: {rep}")

    def related(self, ki: int, hi: int) -> bool:
        return (ki, hi) in self.rel

    def nontrivial_pairs(self) -> tuple:
        return tuple(sorted(p for p in self.rel if p[0] != p[1]))

    def sort_key(self):
        return (len(self.rel), tuple(sorted(self.rel)))

    def __eq__(self, other):
        return (isinstance(other, TransferSystem)
                and self.group == other.group and self.rel == other.rel)

    def __hash__(self):
        return hash((self.group, self.rel))

    def __le__(self, other: "TransferSystem") -> bool:
        return self.rel <= other.rel

    def __repr__(self):
        return f"TransferSystem({self.group.name}, {self.nontrivial_pairs()})"


def transfer_check(ts: TransferSystem) -> CheckReport:
    lat = ts.lat
    grp = ts.group
    n = len(lat.nodes)
    for (k, h) in ts.rel:
        if not lat.leq[k][h]:
            return CheckReport(False, "refines-containment", (k, h))
    for (k, h) in ts.rel:
        for (k2, h2) in ts.rel:
            if h == k2 and (k, h2) not in ts.rel:
                return CheckReport(False, "transitivity", (k, h, h2))
    for g in grp.elements:
        for (k, h) in ts.rel:
            gk = lat.index_of[lat.nodes[k].conjugate_by(g).members]
            gh = lat.index_of[lat.nodes[h].conjugate_by(g).members]
            if (gk, gh) not in ts.rel:
                return CheckReport(False, "conjugation", (g, k, h))
    for (k, h) in ts.rel:
        for l in range(n):
            if not lat.leq[l][h]:
                continue
            m = lat.index_of[lat.nodes[k].members & lat.nodes[l].members]
            if (m, l) not in ts.rel:
                return CheckReport(False, "restriction", (k, h, l))
    return _ok()


def transfer_system_of(sys: WeakIndexingSystem) -> TransferSystem:
    """K -> H transfer allowed iff the orbit H/K is admissible at H.

    Only defined for unital systems, where the relation is a transfer
    system on the nose.
    """
    if not sys.is_unital():
        raise ValidationError("transfer extraction needs a unital system")
    t = sys.tables
    rel = set()
    for hi in range(t.n_sids):
        for ki in t.sub_sids[hi]:
            orbit = t.encode(hi, (t.h_class_rep[hi][ki],))
            if orbit is not None and orbit in sys.admissible[hi]:
                rel.add((ki, hi))
    return TransferSystem(sys.group, rel)


def enumerate_transfer_systems(group: FiniteGroup, pair_guard: int = 22) -> Poset:
    """All transfer systems on the subgroup lattice, by brute force."""
    lat = subgroup_lattice(group)
    n = len(lat.nodes)
    strict = [(k, h) for k in range(n) for h in range(n)
              if k != h and lat.leq[k][h]]
    if len(strict) > pair_guard:
        raise GuardExceededError(
            f"{len(strict)} containment pairs exceed the guard of {pair_guard}")
    found = []
    for bits in range(1 << len(strict)):
        rel = {strict[i] for i in range(len(strict)) if bits >> i & 1}
        ts = TransferSystem(group, rel, validate=False)
        if transfer_check(ts):
            found.append(ts)
    return Poset(found, leq=lambda a, b: a <= b, key=lambda s: s.sort_key())
