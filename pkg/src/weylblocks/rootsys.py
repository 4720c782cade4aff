"""Exact root-system and weight arithmetic.

Cartan data for the finite types A-G (and products, e.g. "A1xA1"), with all
coordinates kept as exact rationals:

* weights are tuples of Fractions in the fundamental-weight basis, so the
  pairing with the i-th simple coroot is just coordinate i;
* roots carry both their simple-root coordinates and the row functional
  ``nu -> <nu, alpha^vee>``;
* Weyl group elements are stored as permutations of the root list together
  with their exact action matrix on fundamental-weight coordinates.

Simple roots follow the Bourbaki numbering; the columns of the Cartan matrix
are the simple roots written in the fundamental-weight basis, i.e.
``cartan_matrix[j][i] == <alpha_i, alpha_j^vee>``.

Everything here is immutable after construction and safe to share between
threads; the only mutable state is a per-datum memo dict used for reduced
words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache

Weight = tuple[Q, ...]
Matrix = tuple[tuple[Q, ...], ...]

#: positive-root counts and group orders for the irreducible types, used as
#: construction-time sanity checks.
POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

WEYL_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}

_RANK_RANGE = {"A": (1, 8), "B": (2, 8), "C": (2, 8), "D": (3, 8),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class UnknownTypeError(ValueError):
    """Raised for type labels outside the supported finite types."""


class GroupBoundExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured group bound."""


# ---------------------------------------------------------------------------
# exact linear algebra on small matrices
# ---------------------------------------------------------------------------

def mat_vec(m: Matrix, v: Weight) -> Weight:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))


def mat_inv(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination (matrix must be square)."""
    n = len(m)
    a = [list(row) + list(ident) for row, ident in zip(m, mat_identity(n))]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Q(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve_rational(m: Matrix, rhs: Weight) -> Weight | None:
    """One exact solution of ``m x = rhs``, or None when inconsistent.

    Free coordinates are set to zero, so the answer is deterministic.
    """
    rows, cols = len(m), len(m[0]) if m else 0
    a = [list(m[i]) + [rhs[i]] for i in range(rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Q(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Q(0)] * cols
    for i, c in pivots:
        x[c] = a[i][cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Smith normal form and the finite group  (weight lattice)/(root lattice)
# ---------------------------------------------------------------------------

def smith_normal_form(m):
    """Return (p, s, q) with p*m*q == s in Smith normal form, p, q unimodular.

    The diagonal of s is nonnegative and satisfies the divisibility chain
    s[0][0] | s[1][1] | ...  All matrices are lists of lists of ints; m is
    not modified.
    """
    rows, cols = len(m), len(m[0])
    s = [list(r) for r in m]
    p = [[int(i == j) for j in range(rows)] for i in range(rows)]
    q = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row[dst] += f * row[src]
        s[dst] = [x + f * y for x, y in zip(s[dst], s[src])]
        p[dst] = [x + f * y for x, y in zip(p[dst], p[src])]

    def add_col(src, dst, f):
        for row in s:
            row[dst] += f * row[src]
        for row in q:
            row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, rows)
                       for j in range(t, cols) if s[i][j] != 0]
            if not entries:
                break
            _, bi, bj = min(entries)
            swap_rows(t, bi)
            swap_cols(t, bj)
            for i in range(t + 1, rows):
                if s[i][t]:
                    add_row(t, i, -(s[i][t] // s[t][t]))
            for j in range(t + 1, cols):
                if s[t][j]:
                    add_col(t, j, -(s[t][j] // s[t][t]))
            if any(s[i][t] for i in range(t + 1, rows)) or \
                    any(s[t][j] for j in range(t + 1, cols)):
                continue  # remainders survived; shrink the pivot again
            pivot = s[t][t]
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if s[i][j] % pivot), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)  # pull the non-divisible row up and redo
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            p[t] = [-x for x in p[t]]
    return p, s, q


@dataclass(frozen=True)
class FiniteAbelianElement:
    """An element of a fixed finite abelian group, as residues per modulus."""

    residues: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(
            r % m for r, m in zip(self.residues, self.moduli)))

    def __add__(self, other: "FiniteAbelianElement") -> "FiniteAbelianElement":
        if self.moduli != other.moduli:
            raise ValueError("elements of different groups")
        return FiniteAbelianElement(
            tuple(a + b for a, b in zip(self.residues, other.residues)),
            self.moduli)

    def __neg__(self) -> "FiniteAbelianElement":
        return FiniteAbelianElement(
            tuple(-r for r in self.residues), self.moduli)

    def __sub__(self, other: "FiniteAbelianElement") -> "FiniteAbelianElement":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return all(r == 0 for r in self.residues)

    def __str__(self) -> str:
        parts = [(r, m) for r, m in zip(self.residues, self.moduli) if m > 1]
        if not parts:
            return "0"
        if len(parts) == 1:
            return f"{parts[0][0]} mod {parts[0][1]}"
        return "(" + ", ".join(f"{r} mod {m}" for r, m in parts) + ")"


@dataclass(frozen=True, eq=False)
class FiniteAbelianGroup:
    """The cokernel Z^n / M Z^n of an integer matrix, via Smith normal form."""

    moduli: tuple[int, ...]
    projector: tuple[tuple[int, ...], ...]  # unimodular P with P*M*Q diagonal

    @classmethod
    def cokernel(cls, m) -> "FiniteAbelianGroup":
        p, s, _ = smith_normal_form(m)
        n = len(m)
        moduli = tuple(s[i][i] if i < len(s) else 0 for i in range(n))
        if any(d == 0 for d in moduli):
            raise ValueError("matrix is singular; cokernel is infinite")
        return cls(moduli, tuple(tuple(r) for r in p))

    @property
    def order(self) -> int:
        out = 1
        for d in self.moduli:
            out *= d
        return out

    @property
    def zero(self) -> FiniteAbelianElement:
        return FiniteAbelianElement((0,) * len(self.moduli), self.moduli)

    def class_of(self, vector) -> FiniteAbelianElement:
        """Class of an integer vector modulo the column lattice."""
        ints = []
        for x in vector:
            if x != int(x):
                raise ValueError(f"vector {vector} is not integral")
            ints.append(int(x))
        res = tuple(sum(row[j] * ints[j] for j in range(len(ints)))
                    for row in self.projector)
        return FiniteAbelianElement(res, self.moduli)


# ---------------------------------------------------------------------------
# roots and Weyl group elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    """One root: simple-root coordinates plus the coroot pairing functional."""

    index: int
    simple_coords: tuple[int, ...]
    as_weight: Weight
    coroot_row: tuple[Q, ...]

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def pair(self, weight: Weight) -> Q:
        """<weight, alpha^vee> as an exact rational."""
        return sum(c * x for c, x in zip(self.coroot_row, weight))

    def __str__(self) -> str:
        return "+".join(f"{c}a{i + 1}" for i, c in
                        enumerate(self.simple_coords) if c) or "0"


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: root permutation plus exact weight matrix.

    Equality and hashing use only the root permutation; the matrix is
    determined by it.  The matrix is kept with plain integer entries (the
    group preserves the weight lattice), which keeps products cheap.
    """

    root_perm: tuple[int, ...]
    weight_matrix: Matrix = field(compare=False, repr=False)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        perm = tuple(self.root_perm[p] for p in other.root_perm)
        return WeylElement(perm, mat_mul(self.weight_matrix,
                                         other.weight_matrix))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.root_perm)
        for i, p in enumerate(self.root_perm):
            inv[p] = i
        return WeylElement(tuple(inv), _as_int_matrix(mat_inv(self.weight_matrix)))

    def act(self, weight: Weight) -> Weight:
        """The linear action on fundamental-weight coordinates."""
        return mat_vec(self.weight_matrix, weight)

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.root_perm))


def _as_int_matrix(m) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in m:
        ints = []
        for x in row:
            if x != int(x):
                raise AssertionError("matrix is not integral on the lattice")
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """A semisimple root datum over exact rationals.

    ``roots`` lists the positive roots (sorted by height, then by simple
    coordinates) followed by their negatives; index(-alpha) = index(alpha) +
    num_positive.  This ordering is frozen so every downstream enumeration is
    deterministic.
    """

    type_label: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Q, ...]  # d_i = (alpha_i, alpha_i)/2, per component
    roots: tuple[Root, ...]
    rho: Weight
    inverse_cartan: Matrix
    simple_reflections: tuple[WeylElement, ...]
    identity: WeylElement
    _root_index: dict = field(repr=False)
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.roots[: self.num_positive]

    def root_index(self, weight: Weight) -> int:
        return self._root_index[weight]

    def negative_of(self, index: int) -> int:
        n = self.num_positive
        return index + n if index < n else index - n

    def simple_root(self, i: int) -> Root:
        """The i-th simple root, 1-based Bourbaki numbering."""
        return self.roots[self._root_index[self._simple_weight(i)]]

    def _simple_weight(self, i: int) -> Weight:
        return tuple(Q(self.cartan_matrix[j][i - 1]) for j in range(self.rank))

    def zero_weight(self) -> Weight:
        return (Q(0),) * self.rank

    def weight(self, *coords) -> Weight:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        return tuple(Q(c) for c in coords)

    def root_coords(self, weight: Weight) -> Weight:
        """Coordinates of a weight in the simple-root basis."""
        return mat_vec(self.inverse_cartan, weight)

    def bilinear(self, x: Weight, y: Weight) -> Q:
        """The W-invariant form, normalized per component by (a_i, a_i)=2d_i."""
        yc = self.root_coords(y)
        return sum(x[j] * self.symmetrizer[j] * yc[j] for j in range(self.rank))

    def reflection(self, root: Root) -> WeylElement:
        """The reflection s_alpha as a WeylElement."""
        key = ("refl", root.index)
        if key not in self._memo:
            self._memo[key] = _reflection_element(self, root)
        return self._memo[key]


def _reflection_element(datum: CartanDatum, root: Root) -> WeylElement:
    n = datum.rank
    alpha = root.as_weight
    cols = []
    for j in range(n):
        e_j = tuple(Q(int(i == j)) for i in range(n))
        img = tuple(e_j[i] - root.coroot_row[j] * alpha[i] for i in range(n))
        cols.append(img)
    matrix = _as_int_matrix(
        tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))
    perm = []
    for beta in datum.roots:
        img = tuple(beta.as_weight[i] - root.pair(beta.as_weight) * alpha[i]
                    for i in range(n))
        perm.append(datum._root_index[img])
    return WeylElement(tuple(perm), matrix)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _cartan_block(letter: str, n: int) -> list[list[int]]:
    """Bourbaki Cartan matrix with a[i][j] = <alpha_j, alpha_i^vee>."""
    a = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):  # 1-based
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if letter in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if letter == "B":           # alpha_n short
            bond(n - 1, n, -1, -2)
        if letter == "C":           # alpha_n long
            bond(n - 1, n, -2, -1)
    elif letter == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        bond(n - 2, n)
    elif letter == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(2, 4)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)          # alpha_3, alpha_4 short
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, -3, -1)          # alpha_1 short, alpha_2 long
    return a


def parse_type_label(label: str) -> list[tuple[str, int]]:
    """Split e.g. "A2xB3" into [("A", 2), ("B", 3)], validating ranks."""
    factors = []
    for part in label.split("x"):
        part = part.strip()
        if len(part) < 2 or part[0] not in "ABCDEFG" or not part[1:].isdigit():
            raise UnknownTypeError(f"cannot parse type label {part!r}")
        letter, n = part[0], int(part[1:])
        lo, hi = _RANK_RANGE[letter]
        if not lo <= n <= hi:
            raise UnknownTypeError(
                f"rank {n} out of supported range [{lo}, {hi}] for type {letter}")
        factors.append((letter, n))
    if not factors:
        raise UnknownTypeError("empty type label")
    return factors


def _symmetrizer(cartan: list[list[int]]) -> list[Q]:
    """d_i with d_i * a[i][j] == d_j * a[j][i], one propagation per component."""
    n = len(cartan)
    d: list[Q | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if cartan[i][j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    queue.append(j)
    return [x for x in d]


@lru_cache(maxsize=None)
def build_root_system(type_label: str) -> CartanDatum:
    """Construct the Cartan datum for a (product of) finite type(s).

    >>> build_root_system("A2").num_positive
    3
    >>> build_root_system("G2").num_positive
    6
    >>> build_root_system("A1xA1").num_positive
    2
    """
    factors = parse_type_label(type_label)
    rank = sum(n for _, n in factors)
    cartan = [[0] * rank for _ in range(rank)]
    offset = 0
    for letter, n in factors:
        block = _cartan_block(letter, n)
        for i in range(n):
            for j in range(n):
                cartan[offset + i][offset + j] = block[i][j]
        offset += n
    d = _symmetrizer(cartan)

    # close the simple roots under the simple reflections, in root coordinates
    def pair_with_simple(coords: tuple[int, ...], i: int) -> int:
        return sum(cartan[i][j] * coords[j] for j in range(rank))

    seen = {tuple(int(i == j) for j in range(rank)) for i in range(rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for coords in frontier:
            for i in range(rank):
                k = pair_with_simple(coords, i)
                img = list(coords)
                img[i] -= k
                img_t = tuple(img)
                if img_t not in seen:
                    seen.add(img_t)
                    nxt.append(img_t)
        frontier = nxt

    positives = sorted((c for c in seen if sum(c) > 0),
                       key=lambda c: (sum(c), tuple(-x for x in c)))
    expected = sum(POSITIVE_ROOT_COUNT[l](n) for l, n in factors)
    if len(positives) != expected:
        raise AssertionError(
            f"root closure produced {len(positives)} positive roots, "
            f"expected {expected} for {type_label}")

    cartan_t = tuple(tuple(row) for row in cartan)
    cartan_q = tuple(tuple(Q(x) for x in row) for row in cartan)
    inverse_cartan = mat_inv(cartan_q)

    def as_weight(coords) -> Weight:
        return tuple(sum(Q(cartan[i][j] * coords[j]) for j in range(rank))
                     for i in range(rank))

    def coroot_row(coords) -> tuple[Q, ...]:
        # <omega_j, alpha^vee> = 2 (omega_j, alpha) / (alpha, alpha)
        norm = sum(2 * d[i] * Q(coords[i]) * Q(cartan[i][j] * coords[j])
                   for i in range(rank) for j in range(rank)) / 2
        return tuple(2 * d[j] * Q(coords[j]) / norm for j in range(rank))

    roots: list[Root] = []
    index_of: dict[Weight, int] = {}
    ordered = positives + [tuple(-c for c in p) for p in positives]
    for idx, coords in enumerate(ordered):
        w = as_weight(coords)
        roots.append(Root(idx, tuple(coords), w, coroot_row(coords)))
        index_of[w] = idx

    rho = tuple(Q(1) for _ in range(rank))
    datum = CartanDatum(
        type_label="x".join(f"{l}{n}" for l, n in factors),
        rank=rank,
        cartan_matrix=cartan_t,
        symmetrizer=tuple(d),
        roots=tuple(roots),
        rho=rho,
        inverse_cartan=inverse_cartan,
        simple_reflections=(),  # filled below
        identity=WeylElement(tuple(range(len(roots))),
                             tuple(tuple(int(i == j) for j in range(rank))
                                   for i in range(rank))),
        _root_index=index_of,
    )
    simples = tuple(_reflection_element(datum, datum.simple_root(i + 1))
                    for i in range(rank))
    object.__setattr__(datum, "simple_reflections", simples)
    return datum


# ---------------------------------------------------------------------------
# the dot action and weight classification
# ---------------------------------------------------------------------------

def dot_action(datum: CartanDatum, w: WeylElement, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho."""
    if len(lam) != datum.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, "
                         f"expected {datum.rank}")
    shifted = tuple(x + r for x, r in zip(lam, datum.rho))
    moved = w.act(shifted)
    return tuple(x - r for x, r in zip(moved, datum.rho))


@dataclass(frozen=True)
class WeightClass:
    dominant: bool
    antidominant: bool
    regular: bool
    singular_roots: tuple[Root, ...]  # positive roots with <lam+rho, a^vee> = 0


def classify_weight(datum: CartanDatum, lam: Weight) -> WeightClass:
    """Dominance / antidominance / regularity of a rational weight.

    Dominant means no positive root pairs with lam + rho to a negative
    integer; regular means the dot stabilizer is trivial, i.e. no positive
    root pairs to zero.
    """
    shifted = tuple(x + r for x, r in zip(lam, datum.rho))
    dominant = antidominant = True
    singular = []
    for root in datum.positive_roots:
        v = root.pair(shifted)
        if v == 0:
            singular.append(root)
        elif v.denominator == 1:
            if v < 0:
                dominant = False
            else:
                antidominant = False
    return WeightClass(dominant, antidominant, len(singular) == 0,
                       tuple(singular))


@dataclass(frozen=True)
class LatticeMembership:
    in_weight_lattice: bool
    in_root_lattice: bool
    torsion_class: FiniteAbelianElement | None


def torsion_group(datum: CartanDatum) -> FiniteAbelianGroup:
    """The finite group (weight lattice)/(root lattice) of the datum."""
    key = "torsion"
    if key not in datum._memo:
        datum._memo[key] = FiniteAbelianGroup.cokernel(
            [list(r) for r in datum.cartan_matrix])
    return datum._memo[key]


def weight_lattice_tests(datum: CartanDatum, lam: Weight) -> LatticeMembership:
    """Membership in the weight and root lattices, plus the torsion class.

    The class is the image of lam in Z^n modulo the Cartan matrix columns,
    computed through the Smith normal form; it is only defined for lattice
    weights (None otherwise).
    """
    in_wl = all(x.denominator == 1 for x in lam)
    rc = datum.root_coords(lam)
    in_rl = all(x.denominator == 1 for x in rc)
    cls = torsion_group(datum).class_of(lam) if in_wl else None
    return LatticeMembership(in_wl, in_rl, cls)


def lattice_class(datum: CartanDatum, lam: Weight) -> FiniteAbelianElement:
    """Torsion class of a lattice weight; raises for non-lattice input."""
    if any(x.denominator != 1 for x in lam):
        raise ValueError(f"{lam} is not in the weight lattice")
    return torsion_group(datum).class_of(lam)


def to_dominant_dot(datum: CartanDatum,
                    nu: Weight) -> tuple[WeylElement, Weight]:
    """(w, dom) with dom = w . nu the dominant point of the full dot orbit.

    Ascends through simple reflections, always taking the smallest index with
    a negative pairing, so the output is deterministic.
    """
    w = datum.identity
    x = nu
    while True:
        shifted = tuple(a + r for a, r in zip(x, datum.rho))
        i = next((j for j in range(datum.rank) if shifted[j] < 0), None)
        if i is None:
            return w, x
        s = datum.simple_reflections[i]
        x = dot_action(datum, s, x)
        w = s * w


if __name__ == "__main__":
    import doctest

    doctest.testmod()
