"""Independent grid oracle for cone distances.

Every top-dimensional orthant is sampled on a cubical mesh, grid points
are identified across orthant charts and orbit symmetries exactly (via
face tables and lexicographic reduction, in integer mesh units), and
neighboring grid points are joined by all Chebyshev moves.  Each move
has half-sup length ``mesh / 2`` regardless of direction, so shortest
grid paths are breadth-first searches with uniform weights, and within
one orthant the grid distance between aligned points is exact.  Grid
path lengths converge to the true distance from above as the mesh
shrinks; the implementation shares only the complex's combinatorics
with the geodesic solver, not its search.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .metric import ConePoint, _require_same_complex
from .quotient import QuotientComplex

_APEX_KEY = ("", ())


class GridOracle:
    """Mesh discretization of the cone over one complex, up to a box bound.

    Building the node identification is the expensive part, so construct
    once and query many times.
    """

    def __init__(self, cx: QuotientComplex, mesh: float, box: float):
        if not mesh > 0:
            raise ValueError(f"mesh must be positive, got {mesh}")
        if not box > 0:
            raise ValueError(f"box must be positive, got {box}")
        units = box / mesh
        self.units = int(round(units))
        if self.units < 1 or abs(units - self.units) > 1e-9:
            raise ValueError(f"box {box} must be a positive multiple of mesh {mesh}")
        self.cx = cx
        self.mesh = float(mesh)
        self.box = float(box)

        self._orbit_ids = list(cx.maximal_ids)
        self._dims = [cx.orbit(oid).n_edges for oid in self._orbit_ids]
        self._shapes = [(self.units + 1,) * m for m in self._dims]
        self._blocks = []
        start = 0
        for shape in self._shapes:
            size = int(np.prod(shape))
            self._blocks.append((start, start + size))
            start += size
        self.n_nodes = start
        if self.n_nodes > 5_000_000:
            raise ValueError(
                f"grid would hold {self.n_nodes} nodes; coarsen the mesh "
                f"or shrink the box"
            )

        self._class_of_key: dict[tuple, int] = {}
        class_id = np.empty(self.n_nodes, dtype=np.int64)
        pos = 0
        for oid, m in zip(self._orbit_ids, self._dims):
            auts = cx.orbit(oid).automorphisms
            subfaces = cx.subfaces(oid) if m > 1 else {}
            face_auts = {
                fid: cx.orbit(fid).automorphisms
                for fid, _ in subfaces.values()
            }
            for ivec in product(range(self.units + 1), repeat=m):
                key = self._key(oid, ivec, auts, subfaces, face_auts)
                idx = self._class_of_key.setdefault(key, len(self._class_of_key))
                class_id[pos] = idx
                pos += 1
        self._class_id = class_id
        self.n_classes = len(self._class_of_key)

    def _key(self, oid, ivec, auts, subfaces, face_auts):
        support = tuple(i for i, v in enumerate(ivec) if v > 0)
        if not support:
            return _APEX_KEY
        if len(support) == len(ivec):
            return (oid, min(tuple(ivec[a[i]] for i in range(len(a))) for a in auts))
        fid, iota = subfaces[frozenset(support)]
        vec = tuple(ivec[iota[t]] for t in range(len(iota)))
        fauts = face_auts[fid]
        return (fid, min(tuple(vec[a[i]] for i in range(len(a))) for a in fauts))

    def point_key(self, p: ConePoint) -> tuple:
        if p.is_apex:
            return _APEX_KEY
        ivec = []
        for v in p.coords:
            r = v / self.mesh
            i = int(round(r))
            if abs(r - i) > 1e-6:
                raise ValueError(
                    f"coordinate {v} is not aligned to mesh {self.mesh}"
                )
            if i > self.units:
                raise ValueError(
                    f"coordinate {v} exceeds the box bound {self.box}"
                )
            ivec.append(i)
        orbit = self.cx.orbit(p.orbit_id)
        reduced = min(
            tuple(ivec[a[i]] for i in range(len(a))) for a in orbit.automorphisms
        )
        return (p.orbit_id, reduced)

    def _dilate(self, frontier: np.ndarray) -> np.ndarray:
        out = np.zeros_like(frontier)
        for (lo, hi), shape, m in zip(self._blocks, self._shapes, self._dims):
            f = frontier[lo:hi].reshape(shape)
            o = out[lo:hi].reshape(shape)
            for delta in product((-1, 0, 1), repeat=m):
                if all(d == 0 for d in delta):
                    continue
                src = tuple(
                    slice(1, None) if d == -1 else slice(None, -1) if d == 1 else slice(None)
                    for d in delta
                )
                dst = tuple(
                    slice(None, -1) if d == -1 else slice(1, None) if d == 1 else slice(None)
                    for d in delta
                )
                o[dst] |= f[src]
        return out

    def distance(self, p: ConePoint, q: ConePoint) -> float:
        """Shortest grid-path length between two mesh-aligned points."""
        _require_same_complex(p, q)
        kp = self.point_key(p)
        kq = self.point_key(q)
        if kp == kq:
            return 0.0
        try:
            cls_p = self._class_of_key[kp]
            cls_q = self._class_of_key[kq]
        except KeyError as exc:
            raise ValueError(f"point not representable on this grid: {exc}") from exc
        frontier = self._class_id == cls_p
        visited = frontier.copy()
        hops = 0
        while True:
            hops += 1
            nf = self._dilate(frontier)
            nf &= ~visited
            if not nf.any():
                raise RuntimeError("grid search exhausted; box too small")
            hit = np.zeros(self.n_classes, dtype=bool)
            hit[self._class_id[nf]] = True
            if hit[cls_q]:
                return hops * self.mesh / 2.0
            nf = hit[self._class_id] & ~visited
            visited |= nf
            frontier = nf


def brute_force_distance(
    p: ConePoint, q: ConePoint, mesh: float, box: float | None = None
) -> float:
    """One-shot grid-path distance; see :class:`GridOracle`.

    The default box is the largest endpoint coordinate, which never cuts
    off a shortest path: clamping every coordinate of a path to the box
    is a half-sup-nonexpansive map fixing both endpoints and commuting
    with the face and symmetry identifications.
    """
    top = max((p.max_coord, q.max_coord))
    if box is None:
        box = max(top, mesh)
        box = mesh * int(np.ceil(box / mesh - 1e-9))
        box = max(box, mesh)
    if top > box + 1e-9:
        raise ValueError(f"box {box} too small for coordinates up to {top}")
    oracle = GridOracle(p.complex, mesh, box)
    return oracle.distance(p, q)
