"""The enveloping-semigroup cone on pairs of weights and its idempotent
projection onto the weight lattice.

For a semisimple datum of rank n, the cone lives in dimension 2n: a pair
(first, second) belongs to it when ``second - w(first)`` has non-negative
rational simple-root coordinates for every Weyl element w.  Lattice points
are, by default, integer pairs whose difference lies in the root lattice
(integral simple-root coordinates), which is exactly the character lattice
of the enhanced group.

Evaluation at the idempotent point of a Levi subset sends a non-negative
root monomial to 1 when it is supported on the Levi nodes and to 0
otherwise; the induced projection (first, second) -> eps * first maps the
cone's lattice points onto the Levi-Weyl orbit of the dominant cone, which
``check_image`` verifies on windows in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cones import RationalCone, enumerate_points
from .linalg import IntVec, adjugate_and_det, primitive
from .parabolic_monoid import ParabolicData, in_wm_dominant
from .reports import CheckReport, instance_label
from .root_datum import (
    LeviSubset,
    RootDatum,
    Weight,
    WeylElement,
    dominant_representative,
    simple_root_coordinates,
    weyl_group,
)


@dataclass(frozen=True)
class CpPoint:
    """Idempotent evaluation rule: 1 on the Levi simple roots, 0 off them."""

    levi: LeviSubset


@dataclass(frozen=True)
class VinbergCone:
    datum: RootDatum
    cone: RationalCone
    weyl_cache: tuple[WeylElement, ...]


@lru_cache(maxsize=None)
def _cartan_adjugate(datum: RootDatum) -> tuple[tuple[IntVec, ...], int]:
    return adjugate_and_det(datum.cartan_matrix)


@lru_cache(maxsize=None)
def _positive_root_functionals(datum: RootDatum) -> tuple[IntVec, ...]:
    """Integer covectors whose non-negativity on a weight says that its
    simple-root coordinates are non-negative (scaled fundamental coweights)."""
    adj, det = _cartan_adjugate(datum)
    sign = 1 if det > 0 else -1
    return tuple(primitive(tuple(sign * x for x in row)) for row in adj)


@lru_cache(maxsize=None)
def vinberg_cone(datum: RootDatum, weyl_cap: int | None = None) -> VinbergCone:
    """The cone of weight pairs (first, second) with second - w(first) in the
    non-negative rational root span for every Weyl element w."""
    if datum.central_rank != 0:
        raise ValueError("the pair cone requires a semisimple datum")
    n = datum.rank
    group = weyl_group(datum, datum.full_levi(), weyl_cap)
    halfspaces: list[IntVec] = []
    for w in group:
        for u in _positive_root_functionals(datum):
            # u.(second - w(first)) >= 0 as a covector on (first, second)
            left = tuple(-sum(u[r] * w.weight_matrix[r][c] for r in range(n))
                         for c in range(n))
            halfspaces.append(left + u)
    cone = RationalCone.from_halfspaces(2 * n, halfspaces)
    return VinbergCone(datum, cone, group)


def eval_at_cp(datum: RootDatum, v: Weight, cp: CpPoint) -> int:
    """Evaluate a non-negative root monomial at the Levi idempotent point.

    Requires integral, non-negative simple-root coordinates; returns 1 when
    the monomial is supported on the Levi nodes, 0 otherwise.
    """
    datum.check_levi(cp.levi)
    coords = simple_root_coordinates(datum, v)
    if any(c.denominator != 1 or c < 0 for c in coords):
        raise ValueError("weight is not in the non-negative integral root span")
    off = [c for label, c in zip(datum.weight_basis_labels, coords)
           if label not in cp.levi.nodes]
    return 1 if all(c == 0 for c in off) else 0


def pr_off_levi(datum: RootDatum, v: Weight, levi: LeviSubset) -> tuple[int, ...]:
    """Simple-root coordinates of a root-lattice weight on the nodes outside
    the Levi subset, in increasing node order."""
    datum.check_levi(levi)
    coords = simple_root_coordinates(datum, v)
    if any(c.denominator != 1 for c in coords):
        raise ValueError("weight is not in the root lattice")
    return tuple(int(c) for label, c in zip(datum.weight_basis_labels, coords)
                 if label not in levi.nodes)


def _difference_in_root_lattice(datum: RootDatum, diff: IntVec) -> bool:
    adj, det = _cartan_adjugate(datum)
    d = abs(det)
    return all(sum(row[r] * diff[r] for r in range(datum.rank)) % d == 0
               for row in adj)


def lattice_pairs(vc: VinbergCone, height_bound: int, *, strict: bool = True) -> tuple[IntVec, ...]:
    """Lattice points of the pair cone with max-norm <= height_bound.

    With strict=True (the default) a pair must have its difference in the
    root lattice, matching the character lattice of the enhanced group.
    """
    key = ("pairs", height_bound, strict)
    cached = vc.cone._aux_cache.get(key)
    if cached is not None:
        return cached
    n = vc.datum.rank
    points = enumerate_points(vc.cone, height_bound)
    if strict:
        points = tuple(
            p for p in points
            if _difference_in_root_lattice(
                vc.datum, tuple(p[n + i] - p[i] for i in range(n))))
    vc.cone._aux_cache[key] = points
    return points


def _split_pair(vc: VinbergCone, pair: tuple[Weight, Weight]) -> IntVec:
    first, second = pair
    n = vc.datum.rank
    if len(first.coords) != n or len(second.coords) != n:
        raise ValueError("pair dimension mismatch")
    return first.coords + second.coords


def project_idempotent(vc: VinbergCone, cp: CpPoint,
                       pair: tuple[Weight, Weight]) -> Weight:
    """Apply the weight map (first, second) -> eps * first, with eps the
    idempotent evaluation of the difference."""
    point = _split_pair(vc, pair)
    if not vc.cone.contains(point):
        raise ValueError("pair is outside the cone")
    first, second = pair
    diff = second - first
    if not _difference_in_root_lattice(vc.datum, diff.coords):
        raise ValueError("pair difference is not in the root lattice")
    eps = eval_at_cp(vc.datum, diff, cp)
    return first.scale(eps)


def check_image(vc: VinbergCone, cp: CpPoint, pd: ParabolicData,
                height_bound: int) -> CheckReport:
    """Verify on a window that the idempotent projection maps the pair cone's
    lattice points exactly onto the Levi-Weyl orbit of the dominant cone."""
    datum = vc.datum
    if pd.datum != datum or pd.levi != cp.levi:
        raise ValueError("inconsistent datum or Levi across arguments")
    report = CheckReport("vinberg-image", pd.instance(),
                         f"window:h{height_bound}", True)
    n = datum.rank
    for point in lattice_pairs(vc, height_bound):
        first = Weight(point[:n])
        diff = Weight(tuple(point[n + i] - point[i] for i in range(n)))
        image = first.scale(eval_at_cp(datum, diff, cp))
        if not in_wm_dominant(pd, image):
            report.add_counterexample({
                "kind": "image-escapes-orbit",
                "pair": [list(point[:n]), list(point[n:])],
                "image": list(image.coords),
            })
    for coords in itertools.product(range(-height_bound, height_bound + 1), repeat=n):
        v = Weight(coords)
        if not in_wm_dominant(pd, v):
            continue
        rep, _ = dominant_representative(datum, v, pd.levi)
        point = v.coords + rep.coords
        if not vc.cone.contains(point):
            report.add_counterexample({
                "kind": "witness-pair-outside-cone",
                "vector": list(coords),
                "pair": [list(v.coords), list(rep.coords)],
            })
            continue
        image = project_idempotent(vc, cp, (v, rep))
        if image != v:
            report.add_counterexample({
                "kind": "witness-pair-misses-vector",
                "vector": list(coords),
                "image": list(image.coords),
            })
    return report
