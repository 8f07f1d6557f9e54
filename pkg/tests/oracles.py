"""Independent oracle computations used to derive and pin expected values.

Everything here is deliberately written against different primitives than
the library: root systems are realized in Euclidean coordinates with exact
Fractions, cone membership goes through exhaustive vertex search, and
monoid membership through bounded exhaustive combination search.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

Vec = tuple[Fraction, ...]


def _f(x) -> Fraction:
    return Fraction(x)


def inner(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def euclidean_simple_roots(family: str, n: int) -> list[Vec]:
    """Bourbaki realizations of the simple roots, with exact coordinates."""
    if family == "A":
        dim = n + 1
        return [tuple(_f(int(j == i) - int(j == i + 1)) for j in range(dim))
                for i in range(n)]
    if family in ("B", "C", "D"):
        def e(i):
            return tuple(_f(int(j == i)) for j in range(n))

        chain = [tuple(x - y for x, y in zip(e(i), e(i + 1))) for i in range(n - 1)]
        if family == "B":
            return chain + [e(n - 1)]
        if family == "C":
            return chain + [tuple(2 * x for x in e(n - 1))]
        return chain + [tuple(x + y for x, y in zip(e(n - 2), e(n - 1)))]
    if family == "G":
        return [(_f(1), _f(-1), _f(0)), (_f(-2), _f(1), _f(1))]
    if family == "F":
        return [
            (_f(0), _f(1), _f(-1), _f(0)),
            (_f(0), _f(0), _f(1), _f(-1)),
            (_f(0), _f(0), _f(0), _f(1)),
            (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
        ]
    if family == "E":
        half = Fraction(1, 2)
        alpha1 = (half, -half, -half, -half, -half, -half, -half, half)
        alpha2 = tuple(_f(int(j < 2)) for j in range(8))
        rest = [tuple(_f(int(j == i - 1) - int(j == i - 2)) for j in range(8))
                for i in range(2, 8)]
        return ([alpha1, alpha2] + rest)[:n]
    raise ValueError(family)


def cartan_matrix_from_roots(roots: list[Vec]) -> list[list[int]]:
    """C[i][j] = value of simple root j on simple coroot i = 2(a_j,a_i)/(a_i,a_i)."""
    n = len(roots)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = 2 * inner(roots[j], roots[i]) / inner(roots[i], roots[i])
            assert val.denominator == 1
            row.append(int(val))
        out.append(row)
    return out


def euclidean_root_closure(simple: list[Vec]) -> set[Vec]:
    """All roots: closure of the simple roots under all root reflections."""
    roots = set(simple) | {tuple(-x for x in r) for r in simple}
    changed = True
    while changed:
        changed = False
        for alpha in list(roots):
            for beta in list(roots):
                coeff = 2 * inner(beta, alpha) / inner(alpha, alpha)
                image = tuple(b - coeff * a for b, a in zip(beta, alpha))
                if image not in roots:
                    roots.add(image)
                    changed = True
    return roots


def positive_root_count(family: str, n: int) -> int:
    simple = euclidean_simple_roots(family, n)
    return len(euclidean_root_closure(simple)) // 2


def weyl_order_by_orbit(simple: list[Vec]) -> int:
    """Order of the Weyl group as the orbit size of a regular vector."""
    dim = len(simple[0])
    seed = tuple(_f(1 + 7 * k + 13 * k * k) for k in range(dim))
    for alpha in euclidean_root_closure(simple):
        assert inner(seed, alpha) != 0, "seed vector is not regular"
    orbit = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            for alpha in simple:
                coeff = 2 * inner(v, alpha) / inner(alpha, alpha)
                image = tuple(x - coeff * a for x, a in zip(v, alpha))
                if image not in orbit:
                    orbit.add(image)
                    nxt.append(image)
        frontier = nxt
    return len(orbit)


def cone_member_by_vertex_search(generators, v) -> bool:
    """Whether v is a non-negative rational combination of the generators,
    by exhaustive search over linearly independent subsets (Caratheodory)."""
    gens = [tuple(g) for g in generators]
    if not any(v):
        return True
    if not gens:
        return False
    dim = len(v)
    for size in range(1, dim + 1):
        for subset in itertools.combinations(gens, size):
            coeffs = _solve_nonnegative(subset, v)
            if coeffs is not None:
                return True
    return False


def _solve_nonnegative(subset, v):
    """Solve sum t_i s_i = v when the s_i are independent; require t >= 0."""
    r = len(subset)
    dim = len(v)
    rows = []
    cols = []
    for j in range(dim):
        candidate = cols + [j]
        mat = [[Fraction(subset[i][k]) for i in range(r)] for k in candidate]
        if _rank(mat) == len(candidate):
            cols = candidate
        if len(cols) == r:
            break
    if len(cols) < r:
        return None  # dependent subset
    square = [[Fraction(subset[i][k]) for i in range(r)] for k in cols]
    rhs = [Fraction(v[k]) for k in cols]
    t = _solve_square(square, rhs)
    if t is None or any(x < 0 for x in t):
        return None
    for j in range(dim):
        if sum(t[i] * subset[i][j] for i in range(r)) != v[j]:
            return None
    return t


def _rank(mat) -> int:
    work = [row[:] for row in mat]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while rank < len(work) and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / work[rank][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


def _solve_square(mat, rhs):
    n = len(mat)
    work = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [work[i][n] for i in range(n)]


def monoid_member_by_exhaustion(generators, v, cap: int) -> bool:
    """Membership by trying every coefficient vector with entries <= cap."""
    gens = [tuple(g) for g in generators]
    for combo in itertools.product(range(cap + 1), repeat=len(gens)):
        total = tuple(sum(c * g[j] for c, g in zip(combo, gens))
                      for j in range(len(v)))
        if total == tuple(v):
            return True
    return False


def box(dim: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=dim)
