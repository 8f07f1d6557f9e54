"""Split root data, Weyl groups, and dominance orders.

Coordinates
-----------
Weights are integer vectors in the basis dual to the simple coroots
(fundamental-weight coordinates), extended by central torus coordinates.
Coweights are integer vectors in the basis of simple coroots, extended the
same way.  With these choices the canonical pairing is the plain dot
product, the j-th simple root is the j-th column of the Cartan matrix, and
the j-th simple coroot is the j-th standard basis vector.

The Cartan matrix convention is C[i][j] = value of the j-th simple root on
the i-th simple coroot, so dominance of a weight is a coordinate sign test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import budgets
from .errors import BudgetExceededError
from .linalg import (
    IntMat,
    IntVec,
    determinant,
    identity_matrix,
    mat_mul,
    mat_vec,
    rational_inverse,
    transpose,
)


@dataclass(frozen=True)
class Weight:
    """Element of the weight lattice, in fundamental-weight coordinates."""

    coords: IntVec

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class Coweight:
    """Element of the coweight lattice, in simple-coroot coordinates."""

    coords: IntVec

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "Coweight":
        return Coweight(tuple(k * a for a in self.coords))


def pairing(weight: Weight, coweight: Coweight) -> int:
    """Canonical pairing between a weight and a coweight."""
    return sum(a * b for a, b in zip(weight.coords, coweight.coords, strict=True))


@dataclass(frozen=True)
class LeviSubset:
    """A subset of Dynkin node labels selecting a Levi factor."""

    nodes: frozenset[int]

    def __contains__(self, label: int) -> bool:
        return label in self.nodes

    def sorted_nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.nodes))


def levi(*labels: int) -> LeviSubset:
    return LeviSubset(frozenset(labels))


@dataclass(frozen=True)
class RootDatum:
    """A split root datum: Cartan matrix plus an optional central torus.

    ``cartan_matrix[i][j]`` is the value of simple root j on simple coroot i.
    Node labels are 1-based in Bourbaki order.
    """

    cartan_matrix: IntMat
    central_rank: int = 0
    type_string: str | None = None

    def __post_init__(self) -> None:
        n = len(self.cartan_matrix)
        if any(len(row) != n for row in self.cartan_matrix):
            raise ValueError("Cartan matrix must be square")
        if self.central_rank < 0:
            raise ValueError("central rank must be non-negative")
        for i in range(n):
            if self.cartan_matrix[i][i] != 2:
                raise ValueError("Cartan matrix diagonal must be 2")
            for j in range(n):
                if i != j:
                    cij = self.cartan_matrix[i][j]
                    cji = self.cartan_matrix[j][i]
                    if cij > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (cij == 0) != (cji == 0):
                        raise ValueError("Cartan matrix zero pattern must be symmetric")
        _check_finite_type(self.cartan_matrix)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def dim(self) -> int:
        return self.rank + self.central_rank

    @property
    def weight_basis_labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def simple_root(self, label: int) -> Weight:
        """The simple root at a node, as a weight (column of the Cartan matrix)."""
        j = self._index(label)
        col = tuple(self.cartan_matrix[i][j] for i in range(self.rank))
        return Weight(col + (0,) * self.central_rank)

    def simple_coroot(self, label: int) -> Coweight:
        j = self._index(label)
        return Coweight(tuple(int(i == j) for i in range(self.dim)))

    def fundamental_weight(self, label: int) -> Weight:
        j = self._index(label)
        return Weight(tuple(int(i == j) for i in range(self.dim)))

    def central_weight(self, k: int) -> Weight:
        """Basis weight of the k-th central torus coordinate (0-based)."""
        if not 0 <= k < self.central_rank:
            raise ValueError("central coordinate out of range")
        j = self.rank + k
        return Weight(tuple(int(i == j) for i in range(self.dim)))

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self.simple_root(i) for i in self.weight_basis_labels)

    @property
    def simple_coroots(self) -> tuple[Coweight, ...]:
        return tuple(self.simple_coroot(i) for i in self.weight_basis_labels)

    def full_levi(self) -> LeviSubset:
        return LeviSubset(frozenset(self.weight_basis_labels))

    def check_levi(self, subset: LeviSubset) -> None:
        if not subset.nodes <= set(self.weight_basis_labels):
            raise ValueError(f"Levi nodes {sorted(subset.nodes)} not in diagram")

    def _index(self, label: int) -> int:
        if not 1 <= label <= self.rank:
            raise ValueError(f"node label {label} out of range")
        return label - 1

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_string,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "central_rank": self.central_rank,
        }


def _check_finite_type(c: IntMat) -> None:
    """Every principal minor of a finite-type Cartan matrix is positive."""
    n = len(c)
    if n > 12:
        raise ValueError("rank above the supported bound (12)")
    from itertools import combinations

    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            minor = tuple(tuple(c[i][j] for j in subset) for i in subset)
            if determinant(minor) <= 0:
                raise ValueError("Cartan matrix is not of finite type")


# ---------------------------------------------------------------------------
# Built-in Cartan types

def _chain(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def _cartan_table(family: str, n: int) -> IntMat:
    if family == "A":
        if n < 1:
            raise ValueError("A requires rank >= 1")
        c = _chain(n)
    elif family == "B":
        if n < 2:
            raise ValueError("B requires rank >= 2")
        c = _chain(n)
        c[n - 1][n - 2] = -2
    elif family == "C":
        if n < 2:
            raise ValueError("C requires rank >= 2")
        c = _chain(n)
        c[n - 2][n - 1] = -2
    elif family == "D":
        if n < 3:
            raise ValueError("D requires rank >= 3")
        c = _chain(n)
        c[n - 1][n - 2] = 0
        c[n - 2][n - 1] = 0
        c[n - 1][n - 3] = -1
        c[n - 3][n - 1] = -1
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E requires rank 6, 7 or 8")
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for a, b in edges:
            if a <= n and b <= n:
                c[a - 1][b - 1] = -1
                c[b - 1][a - 1] = -1
    elif family == "F":
        if n != 4:
            raise ValueError("F requires rank 4")
        c = _chain(4)
        c[2][1] = -2
    elif family == "G":
        if n != 2:
            raise ValueError("G requires rank 2")
        c = [[2, -3], [-1, 2]]
    else:
        raise ValueError(f"unknown family {family!r}")
    return tuple(tuple(row) for row in c)


_COMPONENT_RE = re.compile(r"^([A-G])(\d+)$|^T(\d+)$")


def build_datum(type_string: str) -> RootDatum:
    """Build a simply-connected root datum from a Cartan-type expression.

    The expression is a product of irreducible types and optional central
    torus factors, e.g. ``"A2"``, ``"B3"``, ``"A1xA1"``, ``"A2xT1"``.
    Components may be separated by ``x``, ``*`` or the multiplication sign.
    """
    text = type_string.strip().replace("×", "x").replace("*", "x")
    if not text:
        raise ValueError("empty type string")
    blocks: list[IntMat] = []
    central = 0
    for part in text.split("x"):
        m = _COMPONENT_RE.match(part.strip().upper())
        if not m:
            raise ValueError(f"cannot parse type component {part!r}")
        if m.group(3) is not None:
            central += int(m.group(3))
        else:
            blocks.append(_cartan_table(m.group(1), int(m.group(2))))
    rank = sum(len(b) for b in blocks)
    cartan = [[0] * rank for _ in range(rank)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, x in enumerate(row):
                cartan[offset + i][offset + j] = x
        offset += len(block)
    return RootDatum(tuple(tuple(row) for row in cartan), central, text)


# ---------------------------------------------------------------------------
# Weyl elements

@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element with its cached action matrices.

    ``weight_matrix`` acts on weight coordinates, ``coweight_matrix`` on
    coweight coordinates; both fix the central block.  Equality and hashing
    go through the weight action, so duplicate words collapse.
    """

    word: tuple[int, ...]
    weight_matrix: IntMat
    coweight_matrix: IntMat

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.weight_matrix == other.weight_matrix

    def __hash__(self) -> int:
        return hash(self.weight_matrix)


def identity_element(datum: RootDatum) -> WeylElement:
    eye = identity_matrix(datum.dim)
    return WeylElement((), eye, eye)


@lru_cache(maxsize=None)
def simple_reflection(datum: RootDatum, label: int) -> WeylElement:
    j = datum._index(label)
    n = datum.dim
    wmat = [list(row) for row in identity_matrix(n)]
    for i in range(datum.rank):
        wmat[i][j] -= datum.cartan_matrix[i][j]
    weight_matrix = tuple(tuple(row) for row in wmat)
    return WeylElement((label,), weight_matrix, transpose(weight_matrix))


def compose(left: WeylElement, right: WeylElement) -> WeylElement:
    """The element acting as left after right: (left*right)(v) = left(right(v))."""
    return WeylElement(
        left.word + right.word,
        mat_mul(left.weight_matrix, right.weight_matrix),
        mat_mul(left.coweight_matrix, right.coweight_matrix),
    )


def act(w: WeylElement, v: Weight | Coweight):
    """Apply a Weyl element to a weight or coweight."""
    if len(v.coords) != len(w.weight_matrix):
        raise ValueError("dimension mismatch")
    if isinstance(v, Weight):
        return Weight(mat_vec(w.weight_matrix, v.coords))
    return Coweight(mat_vec(w.coweight_matrix, v.coords))


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum, subset: LeviSubset, cap: int | None = None) -> tuple[WeylElement, ...]:
    """All elements of the group generated by the reflections of a Levi subset.

    Breadth-first closure, deduplicated by action matrix, so the stored words
    are reduced.  Raises BudgetExceededError past the enumeration cap.
    """
    datum.check_levi(subset)
    limit = budgets.weyl_cap(cap)
    gens = [simple_reflection(datum, i) for i in subset.sorted_nodes()]
    ident = identity_element(datum)
    seen: dict[IntMat, WeylElement] = {ident.weight_matrix: ident}
    frontier = [ident]
    while frontier:
        next_frontier = []
        for w in frontier:
            for s in gens:
                sw = compose(s, w)
                if sw.weight_matrix not in seen:
                    seen[sw.weight_matrix] = sw
                    next_frontier.append(sw)
                    if len(seen) > limit:
                        raise BudgetExceededError(
                            f"Weyl enumeration exceeded cap {limit}")
        frontier = next_frontier
    return tuple(sorted(seen.values(), key=lambda w: (len(w.word), w.word)))


@lru_cache(maxsize=None)
def positive_coroots(datum: RootDatum) -> tuple[Coweight, ...]:
    """All positive coroots: closure of the simple coroots under simple
    reflections, keeping vectors with non-negative simple-coroot coordinates."""
    rank = datum.rank
    gens = [simple_reflection(datum, i) for i in datum.weight_basis_labels]
    found: set[IntVec] = {datum.simple_coroot(i).coords for i in datum.weight_basis_labels}
    frontier = list(found)
    while frontier:
        next_frontier = []
        for coords in frontier:
            for s in gens:
                image = mat_vec(s.coweight_matrix, coords)
                if all(x >= 0 for x in image[:rank]) and image not in found:
                    found.add(image)
                    next_frontier.append(image)
        frontier = next_frontier
    return tuple(Coweight(c) for c in sorted(found))


def is_dominant(v: Weight, subset: LeviSubset) -> bool:
    """Whether the weight pairs non-negatively with the subset's coroots."""
    return all(v.coords[i - 1] >= 0 for i in subset.nodes)


def coweight_is_dominant(datum: RootDatum, v: Coweight, subset: LeviSubset) -> bool:
    """Whether the coweight pairs non-negatively with the subset's roots."""
    c = datum.cartan_matrix
    rank = datum.rank
    for i in subset.nodes:
        j = i - 1
        if sum(c[r][j] * v.coords[r] for r in range(rank)) < 0:
            return False
    return True


def dominant_representative(datum: RootDatum, v: Weight, subset: LeviSubset) -> tuple[Weight, WeylElement]:
    """The unique subset-dominant element of the orbit of v, with a witness w
    such that the representative equals w applied to v."""
    datum.check_levi(subset)
    nodes = sorted(subset.nodes)
    current = v
    witness = identity_element(datum)
    while True:
        label = next((i for i in nodes if current.coords[i - 1] < 0), None)
        if label is None:
            return current, witness
        s = simple_reflection(datum, label)
        current = act(s, current)
        witness = compose(s, witness)


@lru_cache(maxsize=None)
def _levi_block_inverse(datum: RootDatum, subset: LeviSubset):
    idx = [i - 1 for i in subset.sorted_nodes()]
    block = tuple(tuple(datum.cartan_matrix[r][c] for c in idx) for r in idx)
    return idx, rational_inverse(block)


def dominance_leq(datum: RootDatum, a, b, subset: LeviSubset) -> bool:
    """Whether b - a is a non-negative integer combination of the subset's
    simple roots (for weights) or simple coroots (for coweights)."""
    datum.check_levi(subset)
    if type(a) is not type(b):
        raise TypeError("cannot compare a weight with a coweight")
    diff = tuple(x - y for x, y in zip(b.coords, a.coords, strict=True))
    rank = datum.rank
    if any(diff[rank:]):
        return False
    if isinstance(a, Coweight):
        inside = {i - 1 for i in subset.nodes}
        return all(x >= 0 if j in inside else x == 0 for j, x in enumerate(diff[:rank]))
    if not subset.nodes:
        return not any(diff)
    idx, inv = _levi_block_inverse(datum, subset)
    rhs = [diff[i] for i in idx]
    coeffs = [sum(f * x for f, x in zip(row, rhs)) for row in inv]
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return False
    recon = [0] * rank
    for c, j in zip(coeffs, idx):
        col = [datum.cartan_matrix[r][j] for r in range(rank)]
        recon = [x + int(c) * y for x, y in zip(recon, col)]
    return tuple(recon) == diff[:rank]


@lru_cache(maxsize=None)
def _root_coordinate_solver(datum: RootDatum):
    return rational_inverse(datum.cartan_matrix)


def simple_root_coordinates(datum: RootDatum, v: Weight) -> tuple[Fraction, ...]:
    """Coordinates of a weight in the simple-root basis (exact rationals).

    Raises ValueError when the weight leaves the span of the simple roots
    (i.e. has a central component).
    """
    rank = datum.rank
    if any(v.coords[rank:]):
        raise ValueError("weight has a central component")
    inv = _root_coordinate_solver(datum)
    return tuple(sum((Fraction(f) * x for f, x in zip(row, v.coords[:rank])), Fraction(0))
                 for row in inv)
