"""Weyl groups as finite Coxeter groups.

Full enumeration by closure under the simple reflections, lengths and reduced
words through the root permutation (``length(w) = #{alpha > 0 : w(alpha) < 0}``),
Bruhat order by the lifting property, reflection subgroups, dot-action
stabilizers, and double-coset decompositions.

Elements are canonically keyed by their root permutation; reduced words are
computed on demand (greedy smallest left descent, which yields the
lexicographically minimal word) and memoized on the datum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .rootsys import (
    WEYL_ORDER,
    CartanDatum,
    GroupBoundExceeded,
    Weight,
    WeylElement,
    classify_weight,
)

DEFAULT_GROUP_BOUND = 10**6


def length(datum: CartanDatum, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    n = datum.num_positive
    return sum(1 for i in range(n) if w.root_perm[i] >= n)


def is_left_descent(datum: CartanDatum, w: WeylElement, i: int) -> bool:
    """True iff length(s_i w) < length(w); i is 1-based."""
    # s_i w < w  iff  w^{-1}(alpha_i) < 0  iff  alpha_i in w(Phi_-)
    alpha_index = datum.simple_root(i).index
    return alpha_index in _negative_image(datum, w)


def _negative_image(datum: CartanDatum, w: WeylElement) -> frozenset[int]:
    n = datum.num_positive
    return frozenset(w.root_perm[i] for i in range(n, 2 * n))


def reduced_word(datum: CartanDatum, w: WeylElement) -> tuple[int, ...]:
    """Lexicographically minimal reduced word, as 1-based simple indices."""
    memo = datum._memo.setdefault("words", {})
    cached = memo.get(w.root_perm)
    if cached is not None:
        return cached
    word: list[int] = []
    n = datum.num_positive
    x = w
    while not x.is_identity:
        inv = x.inverse()
        i = next(i for i in range(1, datum.rank + 1)
                 if inv.root_perm[datum.simple_root(i).index] >= n)
        word.append(i)
        x = datum.simple_reflections[i - 1] * x
    out = tuple(word)
    memo[w.root_perm] = out
    return out


def from_word(datum: CartanDatum, word) -> WeylElement:
    """Product s_{i_1} s_{i_2} ... for a sequence of 1-based simple indices."""
    w = datum.identity
    for i in word:
        w = w * datum.simple_reflections[i - 1]
    return w


def sort_key(datum: CartanDatum, w: WeylElement) -> tuple[int, tuple[int, ...]]:
    """(length, reduced word) - the canonical total order on elements."""
    return (length(datum, w), reduced_word(datum, w))


def generate_group(datum: CartanDatum,
                   bound: int = DEFAULT_GROUP_BOUND) -> tuple[WeylElement, ...]:
    """All Weyl group elements, sorted by (length, reduced word).

    Raises GroupBoundExceeded when the group is larger than ``bound``.
    The result is cached on the datum and shared (read-only).
    """
    if "group" in datum._memo:
        return datum._memo["group"]
    seen = {datum.identity.root_perm: datum.identity}
    frontier = [datum.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in datum.simple_reflections:
                u = w * s
                if u.root_perm not in seen:
                    if len(seen) >= bound:
                        raise GroupBoundExceeded(
                            f"group order exceeds bound {bound}")
                    seen[u.root_perm] = u
                    nxt.append(u)
        frontier = nxt
    out = tuple(sorted(seen.values(), key=lambda w: sort_key(datum, w)))
    expected = 1
    for part in datum.type_label.split("x"):
        expected *= WEYL_ORDER[part[0]](int(part[1:]))
    if len(out) != expected:
        raise AssertionError(f"enumerated {len(out)} elements, expected "
                             f"{expected} for {datum.type_label}")
    datum._memo["group"] = out
    return out


def group_order(datum: CartanDatum, bound: int = DEFAULT_GROUP_BOUND) -> int:
    return len(generate_group(datum, bound))


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    """A subgroup given by generators, with its element set materialized."""

    datum: CartanDatum = field(repr=False)
    generators: tuple[WeylElement, ...]
    elements: frozenset[WeylElement]
    kind_tag: str = "generic"  # parabolic | reflection | chamber | generic

    @cached_property
    def sorted_elements(self) -> tuple[WeylElement, ...]:
        return tuple(sorted(self.elements,
                            key=lambda w: sort_key(self.datum, w)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.elements


def closure(datum: CartanDatum, generators,
            bound: int = DEFAULT_GROUP_BOUND) -> frozenset[WeylElement]:
    """Closure of a generating set under products (hence inverses: finite)."""
    gens = list(generators)
    seen = {datum.identity.root_perm: datum.identity}
    frontier = [datum.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = w * g
                if u.root_perm not in seen:
                    if len(seen) >= bound:
                        raise GroupBoundExceeded(
                            f"subgroup closure exceeds bound {bound}")
                    seen[u.root_perm] = u
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen.values())


def subgroup(datum: CartanDatum, generators, kind_tag: str = "generic",
             bound: int = DEFAULT_GROUP_BOUND) -> SubgroupHandle:
    gens = tuple(sorted(set(generators), key=lambda w: sort_key(datum, w)))
    return SubgroupHandle(datum, gens, closure(datum, gens, bound), kind_tag)


def trivial_subgroup(datum: CartanDatum) -> SubgroupHandle:
    return SubgroupHandle(datum, (), frozenset({datum.identity}), "generic")


def dot_stabilizer(datum: CartanDatum, lam: Weight) -> SubgroupHandle:
    """The stabilizer of lam under the dot action.

    For a real reflection group the point stabilizer is generated by the
    reflections it contains, i.e. by the s_alpha with <lam+rho, alpha^vee> = 0;
    the test suite re-checks this against the brute-force stabilizer.
    """
    walls = classify_weight(datum, lam).singular_roots
    gens = tuple(datum.reflection(alpha) for alpha in walls)
    return subgroup(datum, gens, "reflection")


def brute_force_dot_stabilizer(datum: CartanDatum, lam: Weight,
                               bound: int = DEFAULT_GROUP_BOUND) -> frozenset:
    """O(|W|) stabilizer scan; test-suite oracle for dot_stabilizer."""
    from .rootsys import dot_action

    return frozenset(w for w in generate_group(datum, bound)
                     if dot_action(datum, w, lam) == lam)


# ---------------------------------------------------------------------------
# Bruhat order
# ---------------------------------------------------------------------------

def bruhat_leq(datum: CartanDatum, x: WeylElement, w: WeylElement) -> bool:
    """Bruhat order with subword-property semantics, via the lifting property.

    For a left descent s of w:  x <= w  iff  (sx <= sw when sx < x, else
    x <= sw).  Memoized on the datum.
    """
    memo = datum._memo.setdefault("bruhat", {})

    def rec(xp: WeylElement, wp: WeylElement) -> bool:
        if xp.is_identity:
            return True
        if length(datum, xp) > length(datum, wp):
            return False
        key = (xp.root_perm, wp.root_perm)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i = next(i for i in range(1, datum.rank + 1)
                 if is_left_descent(datum, wp, i))
        s = datum.simple_reflections[i - 1]
        sw = s * wp
        sx = s * xp
        if length(datum, sx) < length(datum, xp):
            out = rec(sx, sw)
        else:
            out = rec(xp, sw)
        memo[key] = out
        return out

    return rec(x, w)


# ---------------------------------------------------------------------------
# double cosets
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DoubleCosetDecomposition:
    left: SubgroupHandle
    right: SubgroupHandle
    ambient: frozenset[WeylElement]
    cosets: tuple[tuple[WeylElement, frozenset[WeylElement]], ...]

    @property
    def count(self) -> int:
        return len(self.cosets)


def double_cosets(datum: CartanDatum, ambient, h: SubgroupHandle,
                  k: SubgroupHandle) -> DoubleCosetDecomposition:
    """Partition of ``ambient`` into H g K orbits.

    Representatives are length-minimal, ties broken by the lexicographic
    reduced word; the cosets are sorted by their representative's key.
    Raises ValueError when H or K does not act within ambient.
    """
    amb = frozenset(ambient)
    for grp, side in ((h, "left"), (k, "right")):
        if not grp.elements <= amb:
            raise ValueError(f"{side} subgroup is not contained in ambient")
    unassigned = {w.root_perm: w for w in amb}
    blocks = []
    for w in sorted(amb, key=lambda u: sort_key(datum, u)):
        if w.root_perm not in unassigned:
            continue
        orbit = {w.root_perm: w}
        frontier = [w]
        while frontier:
            nxt = []
            for g in frontier:
                for hg in h.generators:
                    u = hg * g
                    if u.root_perm not in orbit:
                        orbit[u.root_perm] = u
                        nxt.append(u)
                for kg in k.generators:
                    u = g * kg
                    if u.root_perm not in orbit:
                        orbit[u.root_perm] = u
                        nxt.append(u)
            frontier = nxt
        members = frozenset(orbit.values())
        if not members <= amb:
            raise ValueError("ambient set is not closed under H g K")
        rep = min(members, key=lambda u: sort_key(datum, u))
        blocks.append((rep, members))
        for u in members:
            del unassigned[u.root_perm]
    blocks.sort(key=lambda b: sort_key(datum, b[0]))
    return DoubleCosetDecomposition(h, k, amb, tuple(blocks))
