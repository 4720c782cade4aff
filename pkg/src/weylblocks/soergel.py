"""Formal graded tensor words over a block's generator alphabet.

Words are sequences over {Bs(j)} (one letter per integral simple reflection)
and {Rw(c)} (one letter per chamber element), with a finite-abelian grading:
each twist contributes tau(c), Bs letters contribute nothing, and a word may
carry a constant shift (attached per word, so grading stays additive under
concatenation).  The rewrite rules

    Rw(c) Rw(c')  ->  Rw(c'c)
    Bs(t) Rw(c)   ->  Rw(c) Bs(c t c^{-1})
    Rw(e)         ->  (empty)

push all twists into a single leading letter; the resulting normal form is
unique, preserves the Bs letter count, the grading, and the one-sided rank
2^(#Bs).  Singular parabolic-chain words and the translation-product objects
with their predicted images live here too, as does the stratified index of
indecomposable classes by chamber element and double coset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from .coxeter import closure, dot_stabilizer, double_cosets, sort_key
from .integral import IntegralDatum, integral_datum, tau, _is_lattice, \
    _wsub, dominant_dot_rep
from .rootsys import CartanDatum, FiniteAbelianElement, Weight, WeylElement, \
    classify_weight, dot_action, lattice_class


@dataclass(frozen=True)
class BsLetter:
    simple_index: int  # 1-based position in the integral simple system

    def __str__(self) -> str:
        return f"B{self.simple_index}"


@dataclass(frozen=True)
class RwLetter:
    twist: WeylElement

    def __str__(self) -> str:
        return "R"


Letter = BsLetter | RwLetter


@dataclass(frozen=True)
class BimoduleWord:
    ambient: IntegralDatum = field(compare=False, repr=False)
    letters: tuple[Letter, ...] = ()
    shift: FiniteAbelianElement = None

    @property
    def bs_count(self) -> int:
        return sum(1 for l in self.letters if isinstance(l, BsLetter))


def make_word(idat: IntegralDatum, letters,
              shift: FiniteAbelianElement | None = None) -> BimoduleWord:
    """Validated word: Bs indices within the simple system, twists in the
    chamber subgroup."""
    from .rootsys import torsion_group

    letters = tuple(letters)
    for l in letters:
        if isinstance(l, BsLetter):
            if not 1 <= l.simple_index <= idat.rank:
                raise ValueError(f"Bs index {l.simple_index} out of range")
        elif isinstance(l, RwLetter):
            if l.twist not in idat.chamber.elements:
                raise ValueError("twist is not a chamber element")
        else:
            raise TypeError(f"not a letter: {l!r}")
    if shift is None:
        shift = torsion_group(idat.datum).zero
    return BimoduleWord(idat, letters, shift)


def grading(word: BimoduleWord) -> FiniteAbelianElement:
    """Sum of tau over the twists, plus the word's shift."""
    out = word.shift
    for l in word.letters:
        if isinstance(l, RwLetter):
            out = out + tau(word.ambient, l.twist)
    return out


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

def rewrite_sites(word: BimoduleWord) -> tuple[int, ...]:
    """Positions where one rewrite applies (drop, fuse or swap at p)."""
    ls = word.letters
    sites = []
    for p, l in enumerate(ls):
        if isinstance(l, RwLetter) and l.twist.is_identity:
            sites.append(p)
        elif p + 1 < len(ls) and isinstance(ls[p + 1], RwLetter):
            sites.append(p)
    return tuple(sites)


def rewrite_step(word: BimoduleWord, site: int | None = None) -> BimoduleWord:
    """One rule application (leftmost site by default)."""
    sites = rewrite_sites(word)
    if not sites:
        return word
    p = sites[0] if site is None else site
    if p not in sites:
        raise ValueError(f"no rewrite applies at position {p}")
    idat = word.ambient
    ls = list(word.letters)
    l = ls[p]
    if isinstance(l, RwLetter) and l.twist.is_identity:
        del ls[p]
    elif isinstance(l, RwLetter):
        nxt = ls[p + 1]
        ls[p: p + 2] = [RwLetter(nxt.twist * l.twist)]
    else:
        c = ls[p + 1].twist
        ls[p: p + 2] = [RwLetter(c),
                        BsLetter(idat.conjugate_simple(c, l.simple_index))]
    return BimoduleWord(idat, tuple(ls), word.shift)


def normalize(word: BimoduleWord) -> BimoduleWord:
    """Unique normal form: at most one leading twist, then Bs letters only.

    Applies leftmost rewrites until exhaustion; the step count is bounded by
    (len + 1)^2, which the loop asserts.
    """
    cap = (len(word.letters) + 1) ** 2
    out = word
    for _ in range(cap):
        sites = rewrite_sites(out)
        if not sites:
            return out
        out = rewrite_step(out, sites[0])
    raise AssertionError("rewriting did not terminate within the bound")


def rank_left(obj) -> int:
    """Rank as a free one-sided module in the completed, ungraded setting.

    Regular words: 2 per Bs letter, 1 per twist.  Singular chains: the
    product of the gluing-to-factor index ratios, times the order of the
    parabolic subgroup on the left (the chain denotes the restriction of an
    ambient word with full rings at both ends).
    """
    if isinstance(obj, BimoduleWord):
        return 2 ** normalize(obj).bs_count
    if isinstance(obj, SingularWord):
        idat = obj.ambient
        num = den = 1
        for p in range(1, len(obj.chain), 2):
            num *= parabolic_order(idat, obj.chain[p])
            den *= parabolic_order(idat, obj.chain[p - 1])
        total = parabolic_order(idat, obj.mu_subset) * Q(num, den)
        assert total.denominator == 1
        return int(total)
    raise TypeError(f"cannot take a rank of {obj!r}")


# ---------------------------------------------------------------------------
# singular parabolic chains
# ---------------------------------------------------------------------------

def parabolic_order(idat: IntegralDatum, subset) -> int:
    """Order of the subgroup generated by the named integral simples."""
    key = ("parabolic_order", frozenset(subset))
    if key not in idat._memo:
        gens = [idat.simple_reflections[j - 1] for j in sorted(subset)]
        idat._memo[key] = len(closure(idat.datum, gens))
    return idat._memo[key]


@dataclass(frozen=True)
class SingularWord:
    """An alternating parabolic chain [I_0, J_1, I_2, ..., J_{n-1}, I_n]
    of subsets of the integral simple system (1-based indices), twisted on
    the left by a chamber element.

    The even slots are the tensor factors, the odd slots the gluing
    subgroups; the first slot must be the twist-conjugate of the mu-side
    parabolic and the last slot the lam-side parabolic.
    """

    ambient: IntegralDatum = field(compare=False, repr=False)
    chain: tuple[frozenset, ...] = ()
    twist: WeylElement = None
    mu_subset: frozenset = frozenset()
    lam_subset: frozenset = frozenset()


def validate_singular_word(sw: SingularWord) -> bool:
    """Shape check: alternating containments, twisted leading subset,
    lam-side tail."""
    idat = sw.ambient
    n = len(sw.chain)
    if n % 2 == 0 or n == 0:
        return False
    universe = set(range(1, idat.rank + 1))
    for subset in (*sw.chain, sw.mu_subset, sw.lam_subset):
        if not set(subset) <= universe:
            return False
    if sw.twist not in idat.chamber.elements:
        return False
    for p in range(1, n, 2):
        if not (sw.chain[p - 1] <= sw.chain[p] and sw.chain[p + 1] <= sw.chain[p]):
            return False
    conj = frozenset(idat.conjugate_simple(sw.twist, j) for j in sw.mu_subset)
    return sw.chain[0] == conj and sw.chain[-1] == sw.lam_subset


# ---------------------------------------------------------------------------
# translation-product objects and their predicted images
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PObjectSpec:
    """Data for one translation-product object: a chamber element, a wall
    itinerary through subgeneric weights, and the certificates backing it."""

    ambient: IntegralDatum = field(compare=False, repr=False)
    mu: Weight = ()
    c: WeylElement = None
    indices: tuple[int, ...] = ()
    nu: Weight = ()                       # regular dominant in lam + lattice
    nu_i: dict = field(default_factory=dict, compare=False)  # index -> Weight


def p_object_spec(idat: IntegralDatum, mu: Weight, c: WeylElement,
                  indices) -> PObjectSpec:
    """Assemble a spec, computing the certificates with the minimal scans."""
    from .integral import find_regular_dominant, find_subgeneric

    mu = tuple(Q(x) for x in mu)
    indices = tuple(int(j) for j in indices)
    if c not in idat.chamber.elements:
        raise ValueError("twist is not a chamber element")
    if not _is_lattice(_wsub(mu, idat.lam)):
        raise ValueError("mu is not in lam + (weight lattice)")
    if not classify_weight(idat.datum, mu).dominant:
        raise ValueError("mu is not dominant")
    nu = find_regular_dominant(idat)
    nu_i = {j: find_subgeneric(idat, j) for j in sorted(set(indices))}
    return PObjectSpec(idat, mu, c, indices, nu, nu_i)


def _check_certificates(spec: PObjectSpec) -> None:
    idat = spec.ambient
    datum = idat.datum
    cls = classify_weight(datum, spec.nu)
    if not (cls.dominant and cls.regular
            and _is_lattice(_wsub(spec.nu, idat.lam))):
        raise ValueError("invalid certificate: nu is not regular dominant "
                         "in lam + (weight lattice)")
    for j in spec.indices:
        if j not in spec.nu_i:
            raise ValueError(f"missing subgeneric certificate for index {j}")
        wall = idat.integral_simples[j - 1]
        cls = classify_weight(datum, spec.nu_i[j])
        if not (cls.dominant and cls.singular_roots == (wall,)
                and _is_lattice(_wsub(spec.nu_i[j], idat.lam))):
            raise ValueError(f"invalid certificate: nu_{j} is not subgeneric "
                             "on its wall")


def build_P_object(spec: PObjectSpec) -> tuple[tuple, BimoduleWord]:
    """(factorization, predicted image) of a translation-product object.

    The factorization lists the translation steps (pairs of weights) for
    display; the predicted image is the normalized word with the twist on
    the left, the wall letters in itinerary order, and the block shift
    mu - lam, so its total grading is the class of c.mu - lam.
    """
    _check_certificates(spec)
    idat = spec.ambient
    datum = idat.datum
    c_mu = dot_action(datum, spec.c, spec.mu)
    steps: list[tuple[Weight, Weight]] = [(c_mu, spec.nu)]
    for j in spec.indices:
        steps.append((spec.nu, spec.nu_i[j]))
        steps.append((spec.nu_i[j], spec.nu))
    steps.append((spec.nu, idat.lam))
    # block shift mu - lam; together with the twist's own class the image
    # carries the predicted total character c.mu - lam
    shift = lattice_class(datum, _wsub(spec.mu, idat.lam))
    raw = make_word(idat, [RwLetter(spec.c)]
                    + [BsLetter(j) for j in spec.indices], shift)
    return tuple(steps), normalize(raw)


# ---------------------------------------------------------------------------
# the stratified index of indecomposable classes
# ---------------------------------------------------------------------------

def indecomposable_index(datum: CartanDatum, mu: Weight, lam: Weight,
                         bound: int = 10**6):
    """Labels (c, double-coset representative) for the indecomposable
    classes of the block of the dominant pair (mu, lam).

    For each chamber element c, one label per double coset of the stabilizer
    of c.mu against the stabilizer of lam inside the integral Weyl group;
    the total is checked against the one-shot double-coset count in the
    extended group, which is computed independently.
    """
    mu = tuple(Q(x) for x in mu)
    lam = tuple(Q(x) for x in lam)
    for name, x in (("mu", mu), ("lam", lam)):
        if not classify_weight(datum, x).dominant:
            raise ValueError(f"{name} = {x} is not dominant")
    idat = integral_datum(datum, lam, bound)
    if _is_lattice(_wsub(mu, lam)):
        mu_d = mu
    else:
        from .coxeter import generate_group

        aligned = next((dot_action(datum, w, mu)
                        for w in generate_group(datum, bound)
                        if _is_lattice(_wsub(dot_action(datum, w, mu), lam))),
                       None)
        if aligned is None:
            raise ValueError("mu and lam are not compatible")
        _, mu_d = dominant_dot_rep(idat, aligned)

    stab_lam = dot_stabilizer(datum, lam)
    labels = []
    for c in idat.chamber.sorted_elements:
        c_mu = dot_action(datum, c, mu_d)
        stab_c_mu = dot_stabilizer(datum, c_mu)
        dec = double_cosets(datum, idat.w_int.elements, stab_c_mu, stab_lam)
        labels.extend((c, rep) for rep, _ in dec.cosets)

    total = double_cosets(datum, frozenset(idat.w_ext),
                          dot_stabilizer(datum, mu_d), stab_lam).count
    if len(labels) != total:
        raise AssertionError(
            f"stratified label count {len(labels)} disagrees with the "
            f"double-coset count {total}")
    labels.sort(key=lambda t: (sort_key(datum, t[0]), sort_key(datum, t[1])))
    return tuple(labels)
