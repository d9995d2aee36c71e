"""Weak indexing systems and categories, transfer systems, enumeration."""
from itertools import combinations, product

import pytest

from equialg import ValidationError, cyclic_group, trivial_group
from equialg.category import (WeakIndexingCategory, category_of_system,
                              close_category, enumerate_categories,
                              generate_category, i_complete, i_trivial,
                              is_weak_indexing_category, iso_classes,
                              map_class_of, map_class_universe,
                              system_of_category)
from equialg.groups import Subgroup
from equialg.gsets import GSet, GSetMap, orbit_projection, terminal_map
from equialg.indexing import (WeakIndexingSystem, close_system,
                              enumerate_systems, enumerate_transfer_systems,
                              f_complete, f_infinity, f_trivial, f_zero, join,
                              level_tables, meet, system_check,
                              transfer_check, transfer_system_of,
                              truncate_system)

C1 = trivial_group()
C2 = cyclic_group(2)
C4 = cyclic_group(4)


def fold_map(group):
    """The fold of the free orbit: [G/e] -> *."""
    return terminal_map(GSet.regular(group))


def e_level_fold(group, n=2):
    """n copies of the free orbit folding onto one: the e-level fold."""
    free = GSet.regular(group)
    src = free
    for _ in range(n - 1):
        src = src + free
    return GSetMap(src, free, [x % free.size for x in range(src.size)])


# -- system validity -------------------------------------------------------

def test_f_infinity_valid():
    t = level_tables(C2, 6)
    assert system_check(f_infinity(t))


def test_missing_point_set_invalid():
    t = level_tables(C2, 6)
    s = WeakIndexingSystem(t, [set(), {t.star(1)}], validate=False)
    rep = system_check(s)
    assert not rep and rep.axiom == "unit"


def test_f_zero_on_family_valid():
    t = level_tables(C4, 12)
    for family in [(0,), (0, 1), (0, 1, 2)]:
        assert system_check(f_zero(t, family))
    with pytest.raises(ValidationError):
        f_zero(t, (1,))  # not downward closed


def test_restriction_violation_detected():
    t = level_tables(C2, 6)
    # free orbit admissible at C_2 but its restriction 2* missing at e
    free_cid = t.encode(1, (0,))
    s = WeakIndexingSystem(t, [{t.star(0)}, {t.star(1), free_cid}],
                           validate=False)
    rep = system_check(s)
    assert not rep and rep.axiom == "restriction"


# -- category validity (the literal checker) -------------------------------

def test_full_category_valid():
    t = level_tables(C2, 4)
    u = map_class_universe(t)
    assert is_weak_indexing_category(t, frozenset(u), u)


def test_isos_only_valid():
    t = level_tables(C2, 4)
    assert is_weak_indexing_category(t, iso_classes(t))


def test_isos_plus_fold_fails_with_pullback_witness():
    t = level_tables(C2, 6)
    bad = set(iso_classes(t)) | {map_class_of(t, fold_map(C2))}
    rep = is_weak_indexing_category(t, bad)
    assert not rep and rep.axiom == "pullback"
    f, g, missing = rep.witness
    assert f == map_class_of(t, fold_map(C2))


# -- conversions ------------------------------------------------------------

def test_system_of_category_named_examples():
    t = level_tables(C2, 6)
    assert system_of_category(i_trivial(t)).admissible == f_trivial(t).admissible
    assert system_of_category(i_complete(t)).admissible == f_complete(t).admissible
    zero = category_of_system(f_zero(t, (0, 1)))
    assert system_of_category(zero).admissible == f_zero(t, (0, 1)).admissible


def test_f_infinity_category_is_folds_plus_isos():
    t = level_tables(C2, 4)
    cat = category_of_system(f_infinity(t))
    for mc in cat.map_classes():
        for (h, cid) in mc:
            assert all(k == t.h_class_rep[h][h] for k in t.classes[h][cid])


def test_round_trip_on_every_enumerated_system_over_c2():
    t = level_tables(C2, 6)
    for s in enumerate_systems(C2, 6, "all"):
        back = system_of_category(category_of_system(s))
        assert back.admissible == s.admissible
    for cat in [i_trivial(t), i_complete(t)]:
        assert category_of_system(system_of_category(cat)) == cat


def test_unit_family_and_predicates():
    t = level_tables(C2, 6)
    assert f_infinity(t).unit_family() == frozenset({0, 1})
    assert f_trivial(t).unit_family() == frozenset()
    assert f_zero(t, (0,)).unit_family() == frozenset({0})
    assert f_infinity(t).is_unital()
    assert f_trivial(t).is_almost_unital() and not f_trivial(t).is_unital()
    assert f_complete(t).is_unital()


# -- lattice operations -----------------------------------------------------

def test_join_bottom_and_idempotent():
    t = level_tables(C2, 6)
    triv = f_trivial(t)
    for s in [f_infinity(t), f_zero(t, (0, 1)), f_complete(t)]:
        assert join(triv, s).admissible == s.admissible
        assert join(s, s).admissible == s.admissible


def test_meet_is_valid_and_greatest_lower_bound():
    poset = enumerate_systems(C2, 4, "all")
    nodes = poset.nodes
    for a, b in list(combinations(nodes, 2))[::7]:
        m = meet(a, b)
        assert system_check(m)
        assert m <= a and m <= b
        for c in nodes:
            if c <= a and c <= b:
                assert c <= m


def test_join_is_least_upper_bound_against_exhaustive_poset():
    poset = enumerate_systems(C2, 4, "all")
    nodes = poset.nodes
    for a, b in list(combinations(nodes, 2))[::7]:
        j = join(a, b)
        assert a <= j and b <= j
        for c in nodes:
            if a <= c and b <= c:
                assert j <= c


def test_join_of_transfer_generated_contains_composite_transfer():
    e = Subgroup(C4, {0})
    c2 = Subgroup(C4, {0, 2})
    full = Subgroup(C4, set(C4.elements))
    i1 = generate_category(C4, [orbit_projection(C4, e, c2)], unital=True)
    i2 = generate_category(C4, [orbit_projection(C4, c2, full)], unital=True)
    ts1 = transfer_system_of(i1.to_system())
    ts2 = transfer_system_of(i2.to_system())
    assert ts1.related(0, 1) and not ts1.related(0, 2)
    assert ts2.related(1, 2) and not ts2.related(0, 2)
    joined = join(i1.to_system(), i2.to_system())
    assert transfer_system_of(joined).related(0, 2)


# -- generation -------------------------------------------------------------

def test_generate_empty_is_trivial():
    t = level_tables(C2, 6)
    assert generate_category(C2, []).to_system().admissible == \
        f_trivial(t).admissible


@pytest.mark.parametrize("p", [2, 3])
def test_generate_single_transfer_unital(p):
    g = cyclic_group(p)
    t = level_tables(g, 3 * p)
    cat = generate_category(g, [fold_map(g)], unital=True)
    s = cat.to_system()
    assert s.is_unital()
    ts = transfer_system_of(s)
    assert ts.related(0, 1)  # the complete transfer system for C_p
    # level e is saturated with folds, level G has no fixed-point folds
    assert s.admissible[0] == set(range(len(t.classes[0])))
    two_fixed = t.encode(1, (1, 1))
    assert two_fixed not in s.admissible[1]


def test_generate_e_level_fold_only():
    t = level_tables(C2, 6)
    cat = generate_category(C2, [e_level_fold(C2)])
    s = cat.to_system()
    assert s.admissible[0] == {t.encode(0, tuple([0] * n)) for n in range(1, 4)}
    assert s.admissible[1] == {t.star(1)}


def test_generate_rejects_oversized_generators():
    from equialg.errors import CutoffOverflowError
    big = GSet.trivial(C2, 20)
    with pytest.raises(CutoffOverflowError):
        generate_category(C2, [terminal_map(big)], cutoff=6)


# -- enumeration ------------------------------------------------------------

def test_trivial_group_unital_count():
    assert len(enumerate_systems(C1, 3, "unital")) == 2
    assert len(enumerate_systems(C1, 3, "almost_unital")) == 3


def test_trivial_minimum_is_trivial_system():
    for which in ["all", "unital", "almost_unital"]:
        poset = enumerate_systems(C2, 4, which)
        mins = poset.minimal()
        assert len(mins) == 1
        bottom = poset.nodes[mins[0]]
        if which == "unital":
            t = level_tables(C2, 4)
            assert bottom.admissible == f_zero(t, (0, 1)).admissible
        else:
            assert bottom.admissible == f_trivial(bottom.tables).admissible


def test_dual_path_enumeration_c2():
    """System-side and map-class-side enumerations agree in count and order."""
    cutoff = 4
    pc = enumerate_categories(C2, cutoff, "all")
    ps = enumerate_systems(C2, cutoff, "all")
    assert len(pc) == len(ps)
    t = level_tables(C2, cutoff)
    sys_of = [WeakIndexingCategory.from_map_classes(t, n).to_system()
              for n in pc.nodes]
    pairing = [ps.index(s) for s in sys_of]
    assert pc.is_isomorphic_via(ps, pairing)


def test_category_enumeration_nodes_are_valid_and_segal_structured():
    cutoff = 4
    u = map_class_universe(level_tables(C2, cutoff))
    pc = enumerate_categories(C2, cutoff, "all")
    t = level_tables(C2, cutoff)
    for n in pc.nodes[::17]:
        assert is_weak_indexing_category(t, n, u)
    for n in pc.nodes:
        wic = WeakIndexingCategory.from_map_classes(t, n)
        assert wic.map_classes() == n


def test_brute_force_power_set_oracle_c2():
    t = level_tables(C2, 4)
    per_level = []
    for hi in range(t.n_sids):
        ids = [c for c in range(len(t.classes[hi])) if c != t.star(hi)]
        subs = [frozenset(comb) | {t.star(hi)}
                for r in range(len(ids) + 1) for comb in combinations(ids, r)]
        per_level.append(subs)
    expected = set()
    for adm in product(*per_level):
        s = WeakIndexingSystem(t, adm, validate=False)
        if system_check(s):
            expected.add(s.value_key())
    got = {s.value_key() for s in enumerate_systems(C2, 4, "all")}
    assert got == expected


@pytest.mark.parametrize("which", ["unital", "almost_unital"])
def test_saturation_c2(which):
    small = enumerate_systems(C2, 6, which)
    big = enumerate_systems(C2, 12, which)
    assert len(small) == len(big)
    t_small = level_tables(C2, 6)
    pairing = [small.index(truncate_system(s, t_small)) for s in big.nodes]
    assert big.is_isomorphic_via(small, pairing)


def test_all_filter_is_not_saturated_at_small_cutoffs():
    # fold arities in proper numerical submonoids appear as the cutoff grows,
    # so only the unital and almost-unital posets stabilize
    assert len(enumerate_systems(C2, 4, "all")) != len(enumerate_systems(C2, 6, "all"))


def test_almost_unital_agrees_with_summand_closure():
    for s in enumerate_systems(C2, 6, "all"):
        assert s.is_almost_unital() == s.is_summand_closed()


# -- transfer systems --------------------------------------------------------

def test_transfer_counts_catalan():
    for n, expect in [(1, 1), (2, 2), (4, 5), (8, 14)]:
        assert len(enumerate_transfer_systems(cyclic_group(n))) == expect


def test_transfer_of_unital_systems_and_monotone():
    poset = enumerate_systems(C4, 12, "unital")
    for s in poset:
        ts = transfer_system_of(s)
        assert transfer_check(ts)
    nodes = poset.nodes
    for a in nodes[::3]:
        for b in nodes[::3]:
            if a <= b:
                assert transfer_system_of(a) <= transfer_system_of(b)


def test_transfer_extraction_needs_unital():
    t = level_tables(C2, 6)
    with pytest.raises(ValidationError):
        transfer_system_of(f_trivial(t))


def test_poset_exports():
    poset = enumerate_transfer_systems(C4)
    dot = poset.to_dot("transfers")
    assert dot.count("->") == len(poset.covers())
    assert len(poset.to_json()) > 10


def test_system_json_lists_orbit_multisets():
    t = level_tables(C2, 6)
    text = f_zero(t, (0, 1)).to_json()
    assert '"levels"' in text and '"cutoff"' in text
