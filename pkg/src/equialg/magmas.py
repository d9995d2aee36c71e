"""C_p-unital magmas, interchange, the Eckmann-Hilton engine, and
semi-Mackey functors, all over explicit finite operation tables.

A C_p-unital magma is a two-level coefficient system (a level-e carrier
with C_p-action and a fixed-level carrier) with unital magma structures on
both levels, a restriction r into the fixed points, an equivariant
transfer t, and r∘t equal to multiplication by p.  "Multiplication by p"
defaults to the p-fold power x·(x·(...)); the `norm_axiom` toggle switches
to the twisted product over the group, and the two readings agree whenever
the action is trivial (in particular on every carrier the exhaustive sweep
reaches).

The engine is a falsification harness: `eckmann_hilton` checks its
preconditions, then asserts the conclusions pointwise and raises
`TheoremViolation` with a witness if any fails.
"""
from __future__ import annotations

import json
from itertools import permutations, product

from .errors import GuardExceededError, TheoremViolation, ValidationError
from .groups import cyclic_group
from .gsets import GSet, GSetMap, Span, compose_spans, terminal_map
from .indexing import CheckReport


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, p))


def _perm_power(perm, k):
    out = list(range(len(perm)))
    for _ in range(k):
        out = [perm[i] for i in out]
    return tuple(out)


class CoefficientSystem:
    """Carriers for both levels: level e with a C_p-action given by the
    generator permutation, level G with trivial action, and r into the
    fixed points of level e."""

    __slots__ = ("p", "size_e", "sigma", "size_g", "r")

    def __init__(self, p, size_e, sigma, size_g, r):
        if not _is_prime(p):
            raise ValidationError("p must be prime")
        sigma = tuple(int(x) for x in sigma)
        r = tuple(int(x) for x in r)
        if sorted(sigma) != list(range(size_e)):
            raise ValidationError("generator action must be a permutation")
        if _perm_power(sigma, p) != tuple(range(size_e)):
            raise ValidationError("generator action must have order dividing p")
        if len(r) != size_g or any(not 0 <= x < size_e for x in r):
            raise ValidationError("r must map level G into level e")
        if any(sigma[x] != x for x in r):
            raise ValidationError("r must land in the fixed points")
        self.p = p
        self.size_e = size_e
        self.sigma = sigma
        self.size_g = size_g
        self.r = r

    def act(self, g, x):
        for _ in range(g % self.p):
            x = self.sigma[x]
        return x

    def fixed(self):
        return [x for x in range(self.size_e) if self.sigma[x] == x]

    def key(self):
        return (self.p, self.size_e, self.sigma, self.size_g, self.r)

    def __eq__(self, other):
        return isinstance(other, CoefficientSystem) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _table(raw, n):
    tab = tuple(tuple(int(x) for x in row) for row in raw)
    if len(tab) != n or any(len(row) != n for row in tab):
        raise ValidationError("operation table must be square")
    if any(not 0 <= x < n for row in tab for x in row):
        raise ValidationError("operation table entries out of range")
    return tab


def nested_product(mul, xs):
    """x1 · (x2 · (x3 · ...)); the p-ary operation used throughout."""
    out = xs[-1]
    for x in reversed(xs[:-1]):
        out = mul[x][out]
    return out


class CpUnitalMagma:
    """Unital magma structures on both levels of a coefficient system,
    with an equivariant transfer."""

    __slots__ = ("base", "mul_e", "unit_e", "mul_g", "unit_g", "t")

    def __init__(self, base: CoefficientSystem, mul_e, unit_e, mul_g, unit_g, t,
                 validate=True, norm_axiom=False):
        self.base = base
        self.mul_e = _table(mul_e, base.size_e)
        self.unit_e = int(unit_e)
        self.mul_g = _table(mul_g, base.size_g)
        self.unit_g = int(unit_g)
        self.t = tuple(int(x) for x in t)
        if len(self.t) != base.size_e or any(
                not 0 <= x < base.size_g for x in self.t):
            raise ValidationError("t must map level e to level G")
        if validate:
            rep = validate_magma(self, norm_axiom=norm_axiom)
            if not rep:
                raise ValidationError(f"not a C_p-unital magma: {rep}")

    def pow_p(self, x):
        return nested_product(self.mul_e, [x] * self.base.p)

    def norm(self, x):
        return nested_product(self.mul_e,
                              [self.base.act(g, x) for g in range(self.base.p)])

    def key(self):
        return (self.base.key(), self.mul_e, self.unit_e, self.mul_g,
                self.unit_g, self.t)

    def __eq__(self, other):
        return isinstance(other, CpUnitalMagma) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def validate_magma(m: CpUnitalMagma, norm_axiom: bool = False) -> CheckReport:
    """Exhaustive axiom check; reports the first violated axiom and witness."""
    b = m.base
    ne, ng = b.size_e, b.size_g
    for x in range(ne):
        if m.mul_e[m.unit_e][x] != x or m.mul_e[x][m.unit_e] != x:
            return CheckReport(False, "unit-e", (x,))
    for x in range(ng):
        if m.mul_g[m.unit_g][x] != x or m.mul_g[x][m.unit_g] != x:
            return CheckReport(False, "unit-G", (x,))
    if b.sigma[m.unit_e] != m.unit_e:
        return CheckReport(False, "action-unital", (m.unit_e,))
    for x in range(ne):
        for y in range(ne):
            if b.sigma[m.mul_e[x][y]] != m.mul_e[b.sigma[x]][b.sigma[y]]:
                return CheckReport(False, "action-multiplicative", (x, y))
    if b.r[m.unit_g] != m.unit_e:
        return CheckReport(False, "r-unital", ())
    for x in range(ng):
        for y in range(ng):
            if b.r[m.mul_g[x][y]] != m.mul_e[b.r[x]][b.r[y]]:
                return CheckReport(False, "r-multiplicative", (x, y))
    if m.t[m.unit_e] != m.unit_g:
        return CheckReport(False, "t-unital", ())
    for x in range(ne):
        for y in range(ne):
            if m.t[m.mul_e[x][y]] != m.mul_g[m.t[x]][m.t[y]]:
                return CheckReport(False, "t-multiplicative", (x, y))
    for x in range(ne):
        if m.t[b.sigma[x]] != m.t[x]:
            return CheckReport(False, "t-equivariant", (x,))
    for x in range(ne):
        expect = m.norm(x) if norm_axiom else m.pow_p(x)
        if b.r[m.t[x]] != expect:
            return CheckReport(False, "r-t-multiplication-by-p",
                               (x, b.r[m.t[x]], expect))
    return CheckReport(True)


def is_homomorphism(maps, m: CpUnitalMagma, n: CpUnitalMagma) -> bool:
    """Is (f_e, f_G) a homomorphism of C_p-unital magmas m -> n?

    Checks unit preservation, multiplicativity at both levels,
    equivariance, and the two intertwining squares with r and t.
    """
    fe, fg = maps
    mb, nb = m.base, n.base
    if mb.p != nb.p:
        return False
    if len(fe) != mb.size_e or len(fg) != mb.size_g:
        raise ValidationError("carriers do not match")
    if fe[m.unit_e] != n.unit_e or fg[m.unit_g] != n.unit_g:
        return False
    for x in range(mb.size_e):
        if fe[mb.sigma[x]] != nb.sigma[fe[x]]:
            return False
        for y in range(mb.size_e):
            if fe[m.mul_e[x][y]] != n.mul_e[fe[x]][fe[y]]:
                return False
    for x in range(mb.size_g):
        for y in range(mb.size_g):
            if fg[m.mul_g[x][y]] != n.mul_g[fg[x]][fg[y]]:
                return False
    for x in range(mb.size_e):
        if fg[m.t[x]] != n.t[fe[x]]:
            return False
    for x in range(mb.size_g):
        if fe[mb.r[x]] != nb.r[fg[x]]:
            return False
    return True


class InterchangePair:
    """Two C_p-unital magma structures on one coefficient system."""

    __slots__ = ("base", "star", "bullet")

    def __init__(self, star: CpUnitalMagma, bullet: CpUnitalMagma):
        if star.base != bullet.base:
            raise ValidationError("the two structures must share carriers and r")
        self.base = star.base
        self.star = star
        self.bullet = bullet

    def key(self):
        return (self.star.key(), self.bullet.key())

    def __eq__(self, other):
        return isinstance(other, InterchangePair) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def check_interchange(pair: InterchangePair,
                      norm_axiom: bool = False) -> CheckReport:
    """The interchange relations between the two structures.

    Beyond shared units and the grid laws, the two transfers must
    intertwine the other structure's multiplications, restrict compatibly
    (r∘t of one structure is multiplication by p in the other, read per
    the active axiom), and agree through the identified p-ary
    multiplications: t_bullet(star(y_1..y_p)) = t_star(bullet(y_1..y_p)).
    Without that last relation the two transfers are not coupled at all,
    and structures with t_star != t_bullet satisfy everything else.
    """
    s, b = pair.star, pair.bullet
    base = pair.base
    p, ne, ng = base.p, base.size_e, base.size_g
    if s.unit_e != b.unit_e or s.unit_g != b.unit_g:
        return CheckReport(False, "shared-unit", ())
    for (mul1, mul2, n, level) in [(s.mul_e, b.mul_e, ne, "e"),
                                   (s.mul_g, b.mul_g, ng, "G")]:
        for a, x, y, z in product(range(n), repeat=4):
            if mul2[mul1[a][x]][mul1[y][z]] != mul1[mul2[a][y]][mul2[x][z]]:
                return CheckReport(False, f"binary-interchange-{level}",
                                   (a, x, y, z))
    if p > 2:
        for (mul1, mul2, n, level) in [(s.mul_e, b.mul_e, ne, "e"),
                                       (s.mul_g, b.mul_g, ng, "G")]:
            for grid in product(range(n), repeat=p * p):
                rows = [grid[i * p:(i + 1) * p] for i in range(p)]
                cols = [grid[i::p] for i in range(p)]
                lhs = nested_product(mul2, [nested_product(mul1, r) for r in rows])
                rhs = nested_product(mul1, [nested_product(mul2, c) for c in cols])
                if lhs != rhs:
                    return CheckReport(False, f"grid-interchange-{level}", grid)
    for x, y in product(range(ne), repeat=2):
        if b.t[s.mul_e[x][y]] != s.mul_g[b.t[x]][b.t[y]]:
            return CheckReport(False, "t-bullet-star-homomorphism", (x, y))
        if s.t[b.mul_e[x][y]] != b.mul_g[s.t[x]][s.t[y]]:
            return CheckReport(False, "t-star-bullet-homomorphism", (x, y))
    for x in range(ne):
        mult_s = s.norm(x) if norm_axiom else s.pow_p(x)
        mult_b = b.norm(x) if norm_axiom else b.pow_p(x)
        if base.r[b.t[x]] != mult_s:
            return CheckReport(False, "restriction-square-bullet", (x,))
        if base.r[s.t[x]] != mult_b:
            return CheckReport(False, "restriction-square-star", (x,))
    for xs in product(range(ne), repeat=p):
        if b.t[nested_product(s.mul_e, xs)] != s.t[nested_product(b.mul_e, xs)]:
            return CheckReport(False, "transfer-interchange", xs)
    return CheckReport(True)


class SemiMackeyFunctor:
    """Commutative monoids at both levels with restriction and transfer
    satisfying the double coset law r(t(x)) = product of the orbit of x."""

    __slots__ = ("base", "mul_e", "unit_e", "mul_g", "unit_g", "t")

    def __init__(self, base, mul_e, unit_e, mul_g, unit_g, t, validate=True):
        self.base = base
        self.mul_e = _table(mul_e, base.size_e)
        self.unit_e = int(unit_e)
        self.mul_g = _table(mul_g, base.size_g)
        self.unit_g = int(unit_g)
        self.t = tuple(int(x) for x in t)
        if validate:
            rep = semi_mackey_check(self)
            if not rep:
                raise ValidationError(f"not a semi-Mackey functor: {rep}")

    def key(self):
        return (self.base.key(), self.mul_e, self.unit_e, self.mul_g,
                self.unit_g, self.t)

    def __eq__(self, other):
        return isinstance(other, SemiMackeyFunctor) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def as_magma(self, norm_axiom: bool = False) -> CpUnitalMagma:
        return CpUnitalMagma(self.base, self.mul_e, self.unit_e, self.mul_g,
                             self.unit_g, self.t, norm_axiom=norm_axiom)


def _span_rt_composite(p):
    """The composite span encoding restriction-after-transfer on the free
    orbit, built by actual span composition."""
    g = cyclic_group(p)
    free = GSet.regular(g)
    transfer = Span(GSetMap.identity(free), terminal_map(free))
    restriction = Span(terminal_map(free), GSetMap.identity(free))
    return compose_spans(transfer, restriction), free


def evaluate_span_endo(sm: SemiMackeyFunctor, span: Span, free: GSet):
    """Evaluate a span from the free orbit to itself on level-e values.

    Pull along the left leg, push along the right leg; free orbits carry
    level-e values twisted by the transporting group element, fixed orbits
    carry level-G values moved by r and t.
    """
    base = sm.base
    p = base.p
    apex = span.apex

    def transport(s, x, rep):
        return min(g for g in range(p) if s.act[g][rep] == x)

    def run(v):
        # pull: value at each apex orbit rep
        vals = []
        reps = [orbit[0] for orbit in apex.orbits()]
        for rep in reps:
            img = span.left.on_points[rep]
            a = transport(free, img, free.orbits()[0][0])
            orbit_size = len(next(o for o in apex.orbits() if rep in o))
            assert orbit_size == p  # apex of the double-coset span is free
            vals.append(base.act(a, v))
        # push: multiply contributions at the target's base point
        out = sm.unit_e
        target_rep = free.orbits()[0][0]
        for rep, val in zip(reps, vals):
            img = span.right.on_points[rep]
            b = transport(free, img, target_rep)
            moved = base.act((-b) % p, val)
            out = sm.mul_e[out][moved]
        return out

    return run


def semi_mackey_check(sm: SemiMackeyFunctor) -> CheckReport:
    """Full validity: monoid axioms, homomorphism and equivariance
    conditions, and the double coset law checked twice: by the direct
    orbit-product formula and through composition of the transfer and
    restriction spans."""
    base = sm.base
    ne, ng, p = base.size_e, base.size_g, base.p
    for (mul, n, unit, level) in [(sm.mul_e, ne, sm.unit_e, "e"),
                                  (sm.mul_g, ng, sm.unit_g, "G")]:
        for x in range(n):
            if mul[unit][x] != x or mul[x][unit] != x:
                return CheckReport(False, f"unit-{level}", (x,))
        for x, y in product(range(n), repeat=2):
            if mul[x][y] != mul[y][x]:
                return CheckReport(False, f"commutativity-{level}", (x, y))
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    return CheckReport(False, f"associativity-{level}", (x, y, z))
    if base.sigma[sm.unit_e] != sm.unit_e:
        return CheckReport(False, "action-unital", ())
    for x, y in product(range(ne), repeat=2):
        if base.sigma[sm.mul_e[x][y]] != sm.mul_e[base.sigma[x]][base.sigma[y]]:
            return CheckReport(False, "action-multiplicative", (x, y))
    if base.r[sm.unit_g] != sm.unit_e or sm.t[sm.unit_e] != sm.unit_g:
        return CheckReport(False, "units-preserved", ())
    for x, y in product(range(ng), repeat=2):
        if base.r[sm.mul_g[x][y]] != sm.mul_e[base.r[x]][base.r[y]]:
            return CheckReport(False, "r-multiplicative", (x, y))
    for x, y in product(range(ne), repeat=2):
        if sm.t[sm.mul_e[x][y]] != sm.mul_g[sm.t[x]][sm.t[y]]:
            return CheckReport(False, "t-multiplicative", (x, y))
    for x in range(ne):
        if sm.t[base.sigma[x]] != sm.t[x]:
            return CheckReport(False, "t-equivariant", (x,))
    norm = lambda x: nested_product(
        sm.mul_e, [base.act(g, x) for g in range(p)])
    for x in range(ne):
        if base.r[sm.t[x]] != norm(x):
            return CheckReport(False, "double-coset-law",
                               (x, base.r[sm.t[x]], norm(x)))
    span, free = _span_rt_composite(p)
    run = evaluate_span_endo(sm, span, free)
    for x in range(ne):
        if run(x) != norm(x):
            return CheckReport(False, "double-coset-span-path",
                               (x, run(x), norm(x)))
    return CheckReport(True)


def eckmann_hilton(pair: InterchangePair,
                   norm_axiom: bool = False) -> SemiMackeyFunctor:
    """The Eckmann-Hilton conclusion, asserted pointwise.

    Rejects pairs failing the interchange precondition with
    ValidationError; raises TheoremViolation with a witness if any of the
    proved consequences fails on a pair that passed it.  The double coset
    law is asserted in the orbit-product form; under the default literal
    reading of multiplication-by-p the two forms agree on every carrier
    with trivial action, and a divergence is falsifying evidence.
    """
    for m, name in [(pair.star, "star"), (pair.bullet, "bullet")]:
        rep = validate_magma(m, norm_axiom=norm_axiom)
        if not rep:
            raise ValidationError(f"{name} structure invalid: {rep}")
    rep = check_interchange(pair, norm_axiom=norm_axiom)
    if not rep:
        raise ValidationError(f"interchange precondition fails: {rep}")
    s, b = pair.star, pair.bullet
    base = pair.base
    if s.mul_e != b.mul_e or s.mul_g != b.mul_g:
        raise TheoremViolation("interchanging multiplications differ",
                               (s.mul_e, b.mul_e, s.mul_g, b.mul_g))
    if s.t != b.t:
        raise TheoremViolation("interchanging transfers differ", (s.t, b.t))
    for (mul, n, level) in [(s.mul_e, base.size_e, "e"),
                            (s.mul_g, base.size_g, "G")]:
        for x, y in product(range(n), repeat=2):
            if mul[x][y] != mul[y][x]:
                raise TheoremViolation(
                    f"multiplication at level {level} not commutative",
                    (x, y))
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise TheoremViolation(
                        f"multiplication at level {level} not associative",
                        (x, y, z))
    for x in range(base.size_e):
        norm = nested_product(s.mul_e,
                              [base.act(g, x) for g in range(base.p)])
        if base.r[s.t[x]] != norm:
            raise TheoremViolation("double coset law fails",
                                   (x, base.r[s.t[x]], norm))
    try:
        return SemiMackeyFunctor(base, s.mul_e, s.unit_e, s.mul_g, s.unit_g, s.t)
    except ValidationError as exc:
        raise TheoremViolation(f"output is not a semi-Mackey functor: {exc}")


def pair_of_semi_mackey(sm: SemiMackeyFunctor) -> InterchangePair:
    """Duplicate the commutative structure; inverse to eckmann_hilton.

    The magma is built under the orbit-product reading of
    multiplication-by-p, which the double coset law supplies; on trivial
    actions this coincides with the literal p-fold power.
    """
    m = sm.as_magma(norm_axiom=True)
    return InterchangePair(m, m)


# -- exhaustive enumeration ------------------------------------------------

def _unital_tables(n):
    """All tables on 0..n-1 with 0 a two-sided unit."""
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    for fill in product(range(n), repeat=len(cells)):
        tab = [[0] * n for _ in range(n)]
        for i in range(n):
            tab[0][i] = tab[i][0] = i
        for (i, j), v in zip(cells, fill):
            tab[i][j] = v
        yield tuple(tuple(row) for row in tab)


def _sigmas(n, p):
    ident = tuple(range(n))
    out = []
    for perm in permutations(range(n)):
        if perm[0] == 0 and _perm_power(perm, p) == ident:
            out.append(perm)
    return out


def _relabelings(n):
    """Carrier bijections fixing the unit 0."""
    return [(0,) + rest for rest in permutations(range(1, n))]


def _relabel_pair(pair: InterchangePair, pe, pg):
    base = pair.base

    def tab(mul, perm):
        n = len(perm)
        return tuple(tuple(perm[mul[_inv(perm)[i]][_inv(perm)[j]]]
                           for j in range(n)) for i in range(n))

    def vec(v, out_perm, in_perm):
        return tuple(out_perm[v[_inv(in_perm)[i]]] for i in range(len(v)))

    sigma = vec(base.sigma, pe, pe)
    r = vec(base.r, pe, pg)
    nb = CoefficientSystem(base.p, base.size_e, sigma, base.size_g, r)
    out = []
    for m in [pair.star, pair.bullet]:
        out.append(CpUnitalMagma(
            nb, tab(m.mul_e, pe), pe[m.unit_e], tab(m.mul_g, pg),
            pg[m.unit_g], vec(m.t, pg, pe), validate=False))
    return InterchangePair(out[0], out[1])


def _inv(perm):
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v] = i
    return out


def canonical_pair_key(pair: InterchangePair) -> tuple:
    best = None
    for pe in _relabelings(pair.base.size_e):
        for pg in _relabelings(pair.base.size_g):
            k = _relabel_pair(pair, pe, pg).key()
            if best is None or k < best:
                best = k
    return best


def _valid_magmas(p, ne, ng, norm_axiom=False):
    """All valid C_p-unital magmas on carriers of exact sizes, grouped by
    shared coefficient system."""
    by_base = {}
    for sigma in _sigmas(ne, p):
        fixed = [x for x in range(ne) if sigma[x] == x]
        for r in product(fixed, repeat=ng):
            if r[0] != 0:
                continue
            try:
                base = CoefficientSystem(p, ne, sigma, ng, r)
            except ValidationError:
                continue
            for mul_e in _unital_tables(ne):
                for mul_g in _unital_tables(ng):
                    for t in product(range(ng), repeat=ne):
                        if t[0] != 0:
                            continue
                        m = CpUnitalMagma(base, mul_e, 0, mul_g, 0, t,
                                          validate=False)
                        if validate_magma(m, norm_axiom=norm_axiom):
                            by_base.setdefault(base.key(), []).append(m)
    return by_base


def enumerate_interchanging_pairs(p, max_e, max_g, norm_axiom=False,
                                  guard: int = 4) -> list:
    """All interchanging pairs with carrier sizes up to the bounds, one per
    isomorphism class of pairs, in canonical order."""
    if not _is_prime(p) or p > 3 or max_e > guard or max_g > guard:
        raise GuardExceededError("pair sweep bounds exceed the guard")
    found = {}
    for ne in range(1, max_e + 1):
        for ng in range(1, max_g + 1):
            for base_key, magmas in _valid_magmas(p, ne, ng, norm_axiom).items():
                for m1 in magmas:
                    for m2 in magmas:
                        pair = InterchangePair(m1, m2)
                        if check_interchange(pair, norm_axiom=norm_axiom):
                            found.setdefault(canonical_pair_key(pair), pair)
    return [found[k] for k in sorted(found)]


def enumerate_semi_mackey(p, max_e, max_g) -> list:
    """All semi-Mackey functors with carrier sizes up to the bounds, one
    per isomorphism class, in canonical order (independent enumeration)."""
    found = {}
    for ne in range(1, max_e + 1):
        for ng in range(1, max_g + 1):
            for sigma in _sigmas(ne, p):
                fixed = [x for x in range(ne) if sigma[x] == x]
                for r in product(fixed, repeat=ng):
                    if r[0] != 0:
                        continue
                    base = CoefficientSystem(p, ne, sigma, ng, r)
                    for mul_e in _unital_tables(ne):
                        for mul_g in _unital_tables(ng):
                            for t in product(range(ng), repeat=ne):
                                if t[0] != 0:
                                    continue
                                sm = SemiMackeyFunctor(
                                    base, mul_e, 0, mul_g, 0, t, validate=False)
                                if semi_mackey_check(sm):
                                    pair = pair_of_semi_mackey(sm)
                                    found.setdefault(
                                        canonical_pair_key(pair), sm)
    return [found[k] for k in sorted(found)]


def pair_homs(a: InterchangePair, b: InterchangePair) -> list:
    """All homomorphisms of interchanging pairs: simultaneous homomorphisms
    of the star and bullet structures."""
    out = []
    for fe in product(range(b.base.size_e), repeat=a.base.size_e):
        for fg in product(range(b.base.size_g), repeat=a.base.size_g):
            if is_homomorphism((fe, fg), a.star, b.star) and \
                    is_homomorphism((fe, fg), a.bullet, b.bullet):
                out.append((fe, fg))
    return out


def semi_mackey_homs(a: SemiMackeyFunctor, b: SemiMackeyFunctor) -> list:
    return pair_homs(pair_of_semi_mackey(a), pair_of_semi_mackey(b))


# -- JSON pair format -------------------------------------------------------

def pair_to_json(pair: InterchangePair) -> str:
    b = pair.base
    data = {"p": b.p, "size_e": b.size_e, "size_g": b.size_g,
            "sigma": list(b.sigma), "r": list(b.r),
            "unit_e": pair.star.unit_e, "unit_g": pair.star.unit_g,
            "star": {"mul_e": [list(r) for r in pair.star.mul_e],
                     "mul_g": [list(r) for r in pair.star.mul_g],
                     "t": list(pair.star.t)},
            "bullet": {"mul_e": [list(r) for r in pair.bullet.mul_e],
                       "mul_g": [list(r) for r in pair.bullet.mul_g],
                       "t": list(pair.bullet.t)}}
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def pair_from_json(text: str, norm_axiom: bool = False) -> InterchangePair:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad pair JSON: {exc}") from exc
    try:
        base = CoefficientSystem(data["p"], data["size_e"], data["sigma"],
                                 data["size_g"], data["r"])
        magmas = []
        for name in ["star", "bullet"]:
            part = data[name]
            magmas.append(CpUnitalMagma(
                base, part["mul_e"], data.get("unit_e", 0), part["mul_g"],
                data.get("unit_g", 0), part["t"], norm_axiom=norm_axiom))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"pair JSON missing field: {exc}") from exc
    return InterchangePair(magmas[0], magmas[1])
