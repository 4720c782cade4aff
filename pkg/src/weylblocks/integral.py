"""Integral root data attached to a rational weight.

For a weight lam, the roots pairing integrally with lam form a root subsystem;
its Weyl group W_int sits inside the subgroup W_ext of elements moving lam by
a lattice weight.  The quotient embeds into (weight lattice)/(root lattice)
through the homomorphism ``tau(w) = w(lam) - lam  mod  root lattice``, and is
realized inside W_ext by the abelian chamber subgroup C of elements that
permute the positive integral roots, giving W_ext = C x| W_int.

This module also hosts the constructive certificates around that picture:
regular dominant and subgeneric weights in lam + (weight lattice), the
canonical weight supported on the integral span, compatibility of dot orbits,
and the enumeration of proper pairs indexing one dot-orbit intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from .coxeter import (
    DEFAULT_GROUP_BOUND,
    SubgroupHandle,
    dot_stabilizer,
    generate_group,
    sort_key,
    subgroup,
)
from .rootsys import (
    CartanDatum,
    FiniteAbelianElement,
    Root,
    Weight,
    WeylElement,
    classify_weight,
    dot_action,
    smith_normal_form,
    to_dominant_dot,
    torsion_group,
)

_SCAN_CAP = 10000  # safety cap for the certificate scans; never hit in practice


def _is_lattice(coords) -> bool:
    return all(x.denominator == 1 for x in coords)


def _wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _perm_inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, p in enumerate(perm):
        out[p] = i
    return tuple(out)


@dataclass(frozen=True, eq=False)
class IntegralDatum:
    """The integral package attached to one rational weight.

    All members are frozen at construction; the structural identities
    (kernel of tau, semidirect decomposition, chamber action on the simple
    roots) are verified once while building.
    """

    datum: CartanDatum = field(repr=False)
    lam: Weight
    integral_roots: tuple[Root, ...]       # positives then their negatives
    integral_positive: tuple[Root, ...]
    integral_simples: tuple[Root, ...]     # indexed 1..k downstream
    simple_reflections: tuple[WeylElement, ...]
    w_int: SubgroupHandle
    w_ext: tuple[WeylElement, ...]         # sorted by (length, word)
    chamber: SubgroupHandle
    tau_table: dict = field(repr=False)    # WeylElement -> FiniteAbelianElement
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return len(self.integral_simples)

    @property
    def w_ext_set(self) -> frozenset[WeylElement]:
        return frozenset(self.tau_table)

    def contains_ext(self, w: WeylElement) -> bool:
        return w in self.tau_table

    # -- the integral system as a Coxeter group of its own -----------------

    def int_length(self, w: WeylElement) -> int:
        n = self.datum.num_positive
        return sum(1 for r in self.integral_positive
                   if w.root_perm[r.index] >= n)

    def int_left_descent(self, w: WeylElement, j: int) -> bool:
        """True iff s_j w is shorter in the integral system; j is 1-based."""
        n = self.datum.num_positive
        inv = _perm_inverse(w.root_perm)
        return inv[self.integral_simples[j - 1].index] >= n

    def int_reduced_word(self, w: WeylElement) -> tuple[int, ...]:
        """Lex-minimal reduced word over the integral simple indices."""
        memo = self._memo.setdefault("int_words", {})
        hit = memo.get(w.root_perm)
        if hit is not None:
            return hit
        n = self.datum.num_positive
        word: list[int] = []
        x = w
        while True:
            inv = _perm_inverse(x.root_perm)
            j = next((j for j in range(1, self.rank + 1)
                      if inv[self.integral_simples[j - 1].index] >= n), None)
            if j is None:
                break
            word.append(j)
            x = self.simple_reflections[j - 1] * x
        if not x.is_identity:
            raise ValueError("element is not in the integral Weyl group")
        out = tuple(word)
        memo[w.root_perm] = out
        return out

    def int_sort_key(self, w: WeylElement):
        return (self.int_length(w), self.int_reduced_word(w))

    def int_elements(self) -> tuple[WeylElement, ...]:
        if "int_elements" not in self._memo:
            self._memo["int_elements"] = tuple(
                sorted(self.w_int.elements, key=self.int_sort_key))
        return self._memo["int_elements"]

    def int_bruhat_leq(self, x: WeylElement, w: WeylElement) -> bool:
        """Bruhat order of the integral Coxeter system (lifting property)."""
        memo = self._memo.setdefault("int_bruhat", {})

        def rec(xp, wp):
            if self.int_length(xp) == 0:
                return True
            if self.int_length(xp) > self.int_length(wp):
                return False
            key = (xp.root_perm, wp.root_perm)
            hit = memo.get(key)
            if hit is not None:
                return hit
            j = next(j for j in range(1, self.rank + 1)
                     if self.int_left_descent(wp, j))
            s = self.simple_reflections[j - 1]
            sx, sw = s * xp, s * wp
            out = rec(sx, sw) if self.int_length(sx) < self.int_length(xp) \
                else rec(xp, sw)
            memo[key] = out
            return out

        return rec(x, w)

    def conjugate_simple(self, c: WeylElement, j: int) -> int:
        """Index j' with c s_j c^{-1} = s_{j'}, for chamber elements c."""
        img_index = c.root_perm[self.integral_simples[j - 1].index]
        table = self._memo.setdefault(
            "simple_by_root",
            {r.index: pos + 1 for pos, r in enumerate(self.integral_simples)})
        if img_index not in table:
            raise ValueError("conjugation does not preserve the simple system")
        return table[img_index]


def integral_datum(datum: CartanDatum, lam: Weight,
                   bound: int = DEFAULT_GROUP_BOUND) -> IntegralDatum:
    """Build (and cache) the integral package of a rational weight."""
    lam = tuple(Q(x) for x in lam)
    key = ("integral", lam)
    if key in datum._memo:
        return datum._memo[key]

    n = datum.num_positive
    int_pos = tuple(r for r in datum.positive_roots
                    if r.pair(lam).denominator == 1)
    int_roots = int_pos + tuple(datum.roots[r.index + n] for r in int_pos)

    pos_weights = {r.as_weight for r in int_pos}
    simples = tuple(
        r for r in int_pos
        if not any(_wsub(r.as_weight, b.as_weight) in pos_weights
                   for b in int_pos if b.height < r.height))
    refl = tuple(datum.reflection(r) for r in simples)

    w_int = subgroup(datum, refl, "reflection", bound)
    w_ext = tuple(w for w in generate_group(datum, bound)
                  if _is_lattice(_wsub(w.act(lam), lam)))
    chamber_els = frozenset(
        w for w in w_ext
        if all(w.root_perm[r.index] < n for r in int_pos))
    chamber = SubgroupHandle(datum, tuple(
        sorted(chamber_els - {datum.identity},
               key=lambda w: sort_key(datum, w))), chamber_els, "chamber")

    torsion = torsion_group(datum)
    tau_table = {w: torsion.class_of(_wsub(w.act(lam), lam)) for w in w_ext}

    idat = IntegralDatum(
        datum=datum, lam=lam, integral_roots=int_roots,
        integral_positive=int_pos, integral_simples=simples,
        simple_reflections=refl, w_int=w_int, w_ext=w_ext,
        chamber=chamber, tau_table=tau_table)
    _validate(idat)
    datum._memo[key] = idat
    return idat


def _validate(idat: IntegralDatum) -> None:
    datum = idat.datum
    # positive integral roots decompose over the integral simples
    if idat.integral_simples:
        cols = [r.as_weight for r in idat.integral_simples]
        matrix = tuple(tuple(c[i] for c in cols) for i in range(datum.rank))
        from .rootsys import solve_rational

        for r in idat.integral_positive:
            x = solve_rational(matrix, r.as_weight)
            if x is None or any(c.denominator != 1 or c < 0 for c in x):
                raise AssertionError(
                    f"integral root {r} does not decompose over the simples")
    # kernel of tau is exactly W_int
    for w in idat.w_ext:
        if idat.tau_table[w].is_zero != (w in idat.w_int.elements):
            raise AssertionError("kernel of tau differs from W_int")
    # semidirect shape
    if idat.chamber.elements & idat.w_int.elements != {datum.identity}:
        raise AssertionError("chamber meets W_int nontrivially")
    if idat.chamber.order * idat.w_int.order != len(idat.w_ext):
        raise AssertionError("|C| * |W_int| != |W_ext|")
    for c in idat.chamber.elements:
        for cc in idat.chamber.elements:
            if c * cc != cc * c:
                raise AssertionError("chamber subgroup is not abelian")
        for j in range(1, idat.rank + 1):
            idat.conjugate_simple(c, j)  # raises if not a simple


# ---------------------------------------------------------------------------
# the homomorphism tau and the semidirect decomposition
# ---------------------------------------------------------------------------

def tau(idat: IntegralDatum, w: WeylElement) -> FiniteAbelianElement:
    """Class of w(lam) - lam modulo the root lattice."""
    hit = idat.tau_table.get(w)
    if hit is None:
        raise ValueError("element does not move lam by a lattice weight")
    return hit


def chamber_decompose(idat: IntegralDatum,
                      w: WeylElement) -> tuple[WeylElement, WeylElement]:
    """The unique (c, u) with w = c u, c in the chamber, u in W_int."""
    if not idat.contains_ext(w):
        raise ValueError("element does not move lam by a lattice weight")
    for u in idat.int_elements():
        c = w * u.inverse()
        if c in idat.chamber.elements:
            return c, u
    raise AssertionError("semidirect decomposition failed")  # unreachable


def lambda_sharp(idat: IntegralDatum) -> Weight:
    """The weight in the rational span of the integral roots matching lam
    on every integral coroot, by exact linear algebra."""
    if not idat.integral_simples:
        return idat.datum.zero_weight()
    k = idat.rank
    cartan_int = tuple(
        tuple(idat.integral_simples[i].pair(idat.integral_simples[j].as_weight)
              for j in range(k))
        for i in range(k))
    rhs = tuple(idat.integral_simples[i].pair(idat.lam) for i in range(k))
    from .rootsys import solve_rational

    x = solve_rational(cartan_int, rhs)
    out = idat.datum.zero_weight()
    for c, r in zip(x, idat.integral_simples):
        out = _wadd(out, tuple(c * y for y in r.as_weight))
    return out


def dominant_dot_rep(idat: IntegralDatum,
                     nu: Weight) -> tuple[WeylElement, Weight]:
    """(w, dom) with dom = w . nu dominant, ascending through the integral
    simple reflections (smallest index first)."""
    nu = tuple(Q(x) for x in nu)
    if not _is_lattice(_wsub(nu, idat.lam)):
        raise ValueError("weight is not in lam + (weight lattice)")
    datum = idat.datum
    w = datum.identity
    x = nu
    while True:
        shifted = _wadd(x, datum.rho)
        j = next((j for j in range(idat.rank)
                  if idat.integral_simples[j].pair(shifted) < 0), None)
        if j is None:
            return w, x
        s = idat.simple_reflections[j]
        x = dot_action(datum, s, x)
        w = s * w


# ---------------------------------------------------------------------------
# certificates: regular dominant and subgeneric weights
# ---------------------------------------------------------------------------

def find_regular_dominant(idat: IntegralDatum) -> Weight:
    """First lam + m*rho (m = 0, 1, 2, ...) that is regular dominant."""
    datum = idat.datum
    for m in range(_SCAN_CAP):
        cand = _wadd(idat.lam, tuple(Q(m) * r for r in datum.rho))
        cls = classify_weight(datum, cand)
        if cls.dominant and cls.regular:
            return cand
    raise AssertionError("regular dominant scan exceeded cap")  # unreachable


def _solve_single_diophantine(row: tuple[int, ...], target: int):
    """Integer x with sum(row[j] x[j]) == target, or None.

    Folds the extended gcd left to right, so the answer is deterministic.
    """
    n = len(row)
    g, coeffs = 0, [0] * n
    for j, r in enumerate(row):
        if r == 0:
            continue
        if g == 0:
            g, coeffs = abs(r), [0] * n
            coeffs[j] = 1 if r > 0 else -1
            continue
        a, b = g, r
        # extended gcd of (a, b)
        old_r, rr = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while rr:
            qq = old_r // rr
            old_r, rr = rr, old_r - qq * rr
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        coeffs = [old_s * c for c in coeffs]
        coeffs[j] += old_t
        g = old_r
    if g == 0:
        return None if target else tuple(0 for _ in row)
    if target % g:
        return None
    f = target // g
    return tuple(c * f for c in coeffs)


def _solve_integer_system(rows: list[list[int]], rhs: list[int]):
    """One integer solution of rows * x == rhs, or None (Smith normal form)."""
    p, s, q = smith_normal_form(rows)
    k, n = len(rows), len(rows[0])
    pr = [sum(p[i][j] * rhs[j] for j in range(k)) for i in range(k)]
    y = [0] * n
    for i in range(k):
        d = s[i][i] if i < min(k, n) else 0
        if d == 0:
            if pr[i] != 0:
                return None
            continue
        if pr[i] % d:
            return None
        y[i] = pr[i] // d
    return tuple(sum(q[i][j] * y[j] for j in range(n)) for i in range(n))


def find_subgeneric(idat: IntegralDatum, i: int) -> Weight:
    """A dominant weight in lam + (weight lattice) whose dot stabilizer is
    exactly {e, s} for the i-th integral simple reflection (i is 1-based).

    Three steps: land on the wall of s alone, find a lattice direction fixed
    by s but strictly positive on every other integral simple coroot, then
    walk along it until the certificate checks.  All scans start at the
    minimal coefficient.
    """
    if not 1 <= i <= idat.rank:
        raise ValueError(f"integral simple index {i} out of range "
                         f"1..{idat.rank}")
    datum = idat.datum
    alpha = idat.integral_simples[i - 1]
    row = tuple(int(x) for x in alpha.coroot_row)

    # step 1: mu' in lam + lattice with <mu' + rho, alpha^vee> = 0
    omega = _solve_single_diophantine(row, 1)
    target = alpha.pair(_wadd(idat.lam, datum.rho))
    assert target.denominator == 1
    mu1 = _wadd(idat.lam, tuple(Q(-int(target) * x) for x in omega))

    # step 2: delta in the lattice with <delta, alpha^vee> = 0 and
    # <delta, beta^vee> = m > 0 on the other integral simples
    rows = [[int(x) for x in r.coroot_row] for r in idat.integral_simples]
    delta = None
    for m in range(1, _SCAN_CAP):
        rhs = [0 if j == i - 1 else m for j in range(idat.rank)]
        delta = _solve_integer_system(rows, rhs)
        if delta is not None:
            break
    assert delta is not None

    # step 3: minimal l with mu' + l*delta dominant and singular on alpha only
    for l in range(_SCAN_CAP):
        cand = _wadd(mu1, tuple(Q(l * x) for x in delta))
        cls = classify_weight(datum, cand)
        if cls.dominant and cls.singular_roots == (alpha,):
            return cand
    raise AssertionError("subgeneric scan exceeded cap")  # unreachable


# ---------------------------------------------------------------------------
# compatibility and proper pairs
# ---------------------------------------------------------------------------

def are_compatible(datum: CartanDatum, lam: Weight, lam2: Weight,
                   bound: int = DEFAULT_GROUP_BOUND) -> bool:
    """True iff some dot translate of lam differs from lam2 by a lattice
    weight, i.e. the two dot orbits carry compatible central data."""
    lam = tuple(Q(x) for x in lam)
    lam2 = tuple(Q(x) for x in lam2)
    return any(_is_lattice(_wsub(dot_action(datum, w, lam), lam2))
               for w in generate_group(datum, bound))


@dataclass(frozen=True)
class ProperPair:
    """(mu, lam): lam dominant, mu the canonical point of its stabilizer
    orbit, mu - lam a lattice weight."""

    mu: Weight
    lam: Weight


def _orbit_rep_key(datum: CartanDatum, x: Weight):
    cls = classify_weight(datum, x)
    return (0 if cls.antidominant else 1, x)


def enumerate_Xi(datum: CartanDatum, mu: Weight, lam: Weight,
                 bound: int = DEFAULT_GROUP_BOUND) -> tuple[ProperPair, ...]:
    """Proper pairs indexing the orbit intersection attached to (mu, lam).

    One pair per W_lam-dot-orbit on the intersection of the full dot orbit
    of mu with lam_dom + (weight lattice); empty when the orbits are not
    compatible.  The cardinality equals the double coset count
    W_mu \\ W_ext / W_lam (checked in the test suite).
    """
    mu = tuple(Q(x) for x in mu)
    lam = tuple(Q(x) for x in lam)
    _, lam_dom = to_dominant_dot(datum, lam)
    mu0 = next((dot_action(datum, w, mu) for w in generate_group(datum, bound)
                if _is_lattice(_wsub(dot_action(datum, w, mu), lam_dom))),
               None)
    if mu0 is None:
        return ()
    idat = integral_datum(datum, lam_dom, bound)
    orbit = {dot_action(datum, w, mu0) for w in idat.w_ext}
    stab = dot_stabilizer(datum, lam_dom)
    pairs = []
    remaining = set(orbit)
    for x in sorted(orbit):
        if x not in remaining:
            continue
        block = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in stab.generators:
                    z = dot_action(datum, g, y)
                    if z not in block:
                        block.add(z)
                        nxt.append(z)
            frontier = nxt
        remaining -= block
        rep = min(block, key=lambda y: _orbit_rep_key(datum, y))
        pairs.append(ProperPair(rep, lam_dom))
    pairs.sort(key=lambda p: p.mu)
    return tuple(pairs)
