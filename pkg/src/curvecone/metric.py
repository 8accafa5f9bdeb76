"""The cone metric space over a quotient complex.

Points live in orthants ``[0, oo)^k`` attached to simplex orbits, all
sharing one apex where every coordinate vanishes.  Each orthant carries
the half-sup metric ``d(x, y) = max_i |x_i - y_i| / 2`` and the whole
space carries the induced path metric, with orbit symmetries glueing
orthant boundaries to each other.

Distances are computed exactly: enumerate simple galleries (sequences of
pairwise distinct top-dimensional orbits joined by shared-face
identifications), minimize each gallery's length as a linear program in
the transit breakpoints, and keep the best over all galleries and the
route through the apex.  Restricting to simple galleries is what makes
the search finite; a validation mode re-runs the search allowing orbit
revisits so tests can corroborate that revisiting never helps.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field

from .lp import solve_lp
from .quotient import QuotientComplex, SimplexOrbit, Transit

APEX_ID = "apex"
SCHEMA_POINT = "curvecone/cone-point/1"
SCHEMA_GEODESIC = "curvecone/geodesic/1"

_TIE = 1e-12


class ComplexMismatchError(ValueError):
    """The two points do not belong to the same quotient complex."""


class OrbitMismatchError(ValueError):
    """Coordinate data does not fit the orbit's edge set."""


# ---------------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConePoint:
    """A canonical point of the cone: supporting orbit plus positive
    coordinates, reduced to the lexicographically least vector in its
    symmetry orbit.  ``orbit_id`` is ``None`` at the apex."""

    orbit_id: str | None
    coords: tuple[float, ...]
    complex: QuotientComplex = field(compare=False, repr=False)

    @property
    def is_apex(self) -> bool:
        return self.orbit_id is None

    @property
    def max_coord(self) -> float:
        return max(self.coords) if self.coords else 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_POINT,
            "orbit": self.orbit_id,
            "coords": {str(i): v for i, v in enumerate(self.coords)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _coerce_coords(orbit: SimplexOrbit, coords) -> list[float]:
    k = orbit.n_edges
    if isinstance(coords, dict):
        vec = [0.0] * k
        for key, val in coords.items():
            i = int(key)
            if not 0 <= i < k:
                raise OrbitMismatchError(f"edge {key} not in orbit {orbit.id}")
            vec[i] = float(val)
    else:
        vec = [float(v) for v in coords]
        if len(vec) != k:
            raise OrbitMismatchError(
                f"{len(vec)} coordinates for orbit {orbit.id} with {k} edges"
            )
    for v in vec:
        if not (v >= 0.0) or v != v or v == float("inf"):
            raise ValueError(f"coordinates must be finite and nonnegative, got {vec}")
    return vec


def _drop_zero_edges(cx: QuotientComplex, orbit_id: str, vec: list[float]):
    """Push a point onto the face spanned by its nonzero coordinates."""
    while True:
        zeros = [i for i, v in enumerate(vec) if v == 0.0]
        if not zeros:
            return orbit_id, vec
        if len(vec) == 1:
            return None, []
        fm = cx.face(orbit_id, zeros[0])
        inj = dict(fm.edge_injection)
        new = [0.0] * (len(vec) - 1)
        for s, t in inj.items():
            new[t] = vec[s]
        vec = new
        orbit_id = fm.target


def _reduce_by_symmetry(orbit: SimplexOrbit, vec) -> tuple[float, ...]:
    return min(tuple(vec[a[i]] for i in range(len(a))) for a in orbit.automorphisms)


def cone_point(cx: QuotientComplex, orbit_id: str | None, coords=()) -> ConePoint:
    """Canonicalizing constructor: zero coordinates are dropped onto the
    spanned face, and the apex is returned when everything vanishes."""
    if orbit_id in (None, APEX_ID):
        if any(float(v) != 0.0 for v in (coords.values() if isinstance(coords, dict) else coords)):
            raise ValueError("apex point cannot carry nonzero coordinates")
        return ConePoint(None, (), cx)
    orbit = cx.orbit(orbit_id)
    vec = _coerce_coords(orbit, coords)
    support_id, vec = _drop_zero_edges(cx, orbit_id, vec)
    if support_id is None:
        return ConePoint(None, (), cx)
    reduced = _reduce_by_symmetry(cx.orbit(support_id), vec)
    return ConePoint(support_id, reduced, cx)


def apex(cx: QuotientComplex) -> ConePoint:
    return ConePoint(None, (), cx)


def point_from_dict(cx: QuotientComplex, payload: dict) -> ConePoint:
    if payload.get("schema_version") != SCHEMA_POINT:
        raise ValueError(f"unsupported point schema {payload.get('schema_version')!r}")
    return cone_point(cx, payload["orbit"], payload.get("coords", {}))


def scale(p: ConePoint, lam: float) -> ConePoint:
    """Dilate a point by ``lam > 0``; the cone's self-similarity."""
    if not lam > 0:
        raise ValueError(f"scale factor must be positive, got {lam}")
    if p.is_apex:
        return p
    return ConePoint(p.orbit_id, tuple(lam * v for v in p.coords), p.complex)


# ---------------------------------------------------------------------------
# Orthant-level distances
# ---------------------------------------------------------------------------


def orthant_distance(orbit: SimplexOrbit, x, y) -> float:
    """Half-sup distance between two coordinate vectors on one orbit."""
    xs = _coerce_coords(orbit, x)
    ys = _coerce_coords(orbit, y)
    return 0.5 * max(abs(a - b) for a, b in zip(xs, ys))


def symmetric_orthant_distance(orbit: SimplexOrbit, x, y) -> float:
    """Minimum of the orthant distance over the orbit's symmetry group.

    An upper bound for the quotient path metric between the two classes;
    within a single orbit it is also attained by a straight segment.
    """
    xs = _coerce_coords(orbit, x)
    ys = _coerce_coords(orbit, y)
    best = None
    for a in orbit.automorphisms:
        cand = 0.5 * max(abs(xs[i] - ys[a[i]]) for i in range(len(xs)))
        if best is None or cand < best:
            best = cand
    return best


# ---------------------------------------------------------------------------
# Galleries and geodesics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Gallery:
    """Combinatorial trace of a geodesic: orbit sequence, shared-face
    transits with their developing identifications, and the embeddings
    realizing the endpoints in the first and last orbit."""

    orbit_ids: tuple[str, ...]
    transits: tuple[Transit, ...]
    start_embedding: tuple[int, ...]
    end_embedding: tuple[int, ...]


@dataclass(frozen=True)
class GeodesicResult:
    distance: float
    gallery: Gallery
    breakpoints: tuple[tuple[float, ...], ...]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_GEODESIC,
            "distance": self.distance,
            "gallery": {
                "orbits": list(self.gallery.orbit_ids),
                "transits": [
                    {
                        "face": t.face_id,
                        "into_source": list(t.into_source),
                        "into_target": list(t.into_target),
                    }
                    for t in self.gallery.transits
                ],
                "start_embedding": list(self.gallery.start_embedding),
                "end_embedding": list(self.gallery.end_embedding),
            },
            "breakpoints": [list(w) for w in self.breakpoints],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _require_same_complex(p: ConePoint, q: ConePoint) -> None:
    if p.complex is q.complex:
        return
    same = p.complex.surface == q.complex.surface and [
        o.id for o in p.complex.orbits
    ] == [o.id for o in q.complex.orbits]
    if not same:
        raise ComplexMismatchError(
            f"points live on different complexes "
            f"({p.complex.surface} vs {q.complex.surface})"
        )


def _pad(embedding, coords, size) -> list[float]:
    vec = [0.0] * size
    for c, e in enumerate(embedding):
        vec[e] = coords[c]
    return vec


def _gallery_lp(cx, seq, transits, emb_p, p, emb_q=None, q=None):
    """Value of one gallery, minimizing over transit breakpoints.

    With ``emb_q`` given the gallery is closed at ``q``; otherwise the
    last orbit is left open and the value lower-bounds every completion:
    the path may stop at the final breakpoint for free, except that
    reaching ``q`` still costs at least half the gap between ``q``'s top
    coordinate and the breakpoint height (the top-coordinate function is
    nonexpansive up to the factor two in the metric), which a slack
    variable charges against the breakpoint coordinate sum.
    """
    sizes = [cx.orbit(oid).n_edges for oid in seq]
    closed = emb_q is not None
    n_seg = len(seq) if closed else len(seq) - 1
    if n_seg == 0:
        return 0.0, ()
    n_bp = len(transits)
    if closed and n_bp == 0:
        # Single segment: direct half-sup evaluation.
        u = _pad(emb_p, p.coords, sizes[0])
        v = _pad(emb_q, q.coords, sizes[0])
        return 0.5 * max(abs(a - b) for a, b in zip(u, v)), ()

    offsets = []
    pos = n_seg
    for t in transits:
        offsets.append(pos)
        pos += len(t.into_source)
    nvar = pos
    climb_var = None
    if not closed and q is not None and q.coords:
        climb_var = nvar
        nvar += 1
    c = [1.0] * n_seg + [0.0] * (nvar - n_seg)
    if climb_var is not None:
        c[climb_var] = 1.0
    rows, rhs = [], []
    if climb_var is not None:
        # s + sum(w_last) / 2 >= max(q) / 2, an admissible completion cost.
        last = transits[-1]
        row = [0.0] * nvar
        row[climb_var] = -1.0
        for cidx in range(len(last.into_source)):
            row[offsets[-1] + cidx] = -0.5
        rows.append(row)
        rhs.append(-0.5 * max(q.coords))
    for j in range(n_seg):
        m = sizes[j]
        const = [0.0] * m
        coefs: list[list[tuple[int, float]]] = [[] for _ in range(m)]
        if j == 0:
            for e, v in enumerate(_pad(emb_p, p.coords, m)):
                const[e] += v
        else:
            t = transits[j - 1]
            for cidx, e in enumerate(t.into_target):
                coefs[e].append((offsets[j - 1] + cidx, 1.0))
        if closed and j == n_seg - 1:
            for e, v in enumerate(_pad(emb_q, q.coords, m)):
                const[e] -= v
        else:
            t = transits[j]
            for cidx, e in enumerate(t.into_source):
                coefs[e].append((offsets[j] + cidx, -1.0))
        for e in range(m):
            row = [0.0] * nvar
            row[j] = -2.0
            for var, co in coefs[e]:
                row[var] += co
            rows.append(row)
            rhs.append(-const[e])
            row2 = [0.0] * nvar
            row2[j] = -2.0
            for var, co in coefs[e]:
                row2[var] -= co
            rows.append(row2)
            rhs.append(const[e])
    res = solve_lp(c, rows, rhs)
    bps = []
    for t, off in zip(transits, offsets):
        bps.append(tuple(float(res.x[off + i]) for i in range(len(t.into_source))))
    if not closed:
        return res.value, ()
    return res.value, tuple(bps[: len(transits)])


def _apex_route(p: ConePoint, q: ConePoint) -> GeodesicResult:
    value = 0.5 * p.max_coord + 0.5 * q.max_coord
    gallery = Gallery(
        orbit_ids=(p.orbit_id, q.orbit_id),
        transits=(Transit(APEX_ID, (), ()),),
        start_embedding=tuple(range(len(p.coords))),
        end_embedding=tuple(range(len(q.coords))),
    )
    return GeodesicResult(value, gallery, ((),))


def _ray_result(other: ConePoint, at_start: bool) -> GeodesicResult:
    ident = tuple(range(len(other.coords)))
    gallery = Gallery(
        orbit_ids=(other.orbit_id,),
        transits=(),
        start_embedding=() if at_start else ident,
        end_embedding=ident if at_start else (),
    )
    return GeodesicResult(0.5 * other.max_coord, gallery, ())


def distance(p: ConePoint, q: ConePoint, *, revisit_budget: int = 0) -> GeodesicResult:
    """Exact distance and a geodesic between two cone points.

    Enumerates galleries of top-dimensional orbits best-first by a
    lower-bound linear program, allowing each orbit at most once plus
    ``revisit_budget`` repeats, with every shared-face transit
    identification; each closed gallery is scored by its breakpoint
    linear program, and the route through the apex is always considered.
    Among equal-length geodesics the lexicographically least orbit
    sequence wins, with the apex route last.
    """
    _require_same_complex(p, q)
    cx = p.complex
    if p.is_apex and q.is_apex:
        return GeodesicResult(0.0, Gallery((), (), (), ()), ())
    if p.is_apex:
        return _ray_result(q, at_start=True)
    if q.is_apex:
        return _ray_result(p, at_start=False)

    best = _apex_route(p, q)
    best_is_apex = True
    max_ids = list(cx.maximal_ids)
    max_len = len(max_ids) + max(0, revisit_budget)

    def consider(value, seq, transits, emb_p, emb_q, bps):
        # Ties resolve to the lexicographically least orbit sequence,
        # independent of search order; the apex route loses all ties.
        nonlocal best, best_is_apex
        better = value < best.distance - _TIE
        if not better and value <= best.distance + _TIE:
            better = best_is_apex or tuple(seq) < best.gallery.orbit_ids
        if better:
            gallery = Gallery(tuple(seq), tuple(transits), emb_p, emb_q)
            best = GeodesicResult(value, gallery, bps)
            best_is_apex = False

    def lex_corridor(seq):
        # A tie can still matter if it can end in a lexicographically
        # smaller orbit sequence than the current best gallery's.
        return best_is_apex or tuple(seq) <= best.gallery.orbit_ids

    # Best-first over gallery prefixes ordered by their open lower bound;
    # once the cheapest open prefix cannot beat the best value, nothing
    # else on the heap can either and the search stops.
    heap = []
    counter = 0
    for start in max_ids:
        # One start embedding per symmetry orbit of the start chart: the
        # twist is absorbed by the fully enumerated first transit (or end
        # embedding), so the quotient loses no gallery values.
        for emb_p in cx.embeddings_mod_host(p.orbit_id, start):
            heap.append((0.0, counter, [start], [], emb_p))
            counter += 1
    heapq.heapify(heap)
    while heap:
        bound, _, seq, transits, emb_p = heapq.heappop(heap)
        if bound > best.distance + _TIE:
            break
        if bound >= best.distance - _TIE and not lex_corridor(seq):
            continue
        cur = seq[-1]
        for emb_q in cx.embeddings(q.orbit_id, cur):
            value, bps = _gallery_lp(cx, seq, transits, emb_p, p, emb_q, q)
            consider(value, seq, transits, emb_p, emb_q, bps)
        if len(seq) >= max_len:
            continue
        repeats = len(seq) - len(set(seq))
        for nxt in max_ids:
            extra = 1 if nxt in seq else 0
            if repeats + extra > revisit_budget:
                continue
            for tr in cx.transits(cur, nxt):
                child_bound, _ = _gallery_lp(
                    cx, seq + [nxt], transits + [tr], emb_p, p, None, q
                )
                if child_bound <= best.distance + _TIE:
                    heapq.heappush(
                        heap,
                        (child_bound, counter, seq + [nxt], transits + [tr], emb_p),
                    )
                    counter += 1
    return best


def segment_lengths(result: GeodesicResult, p: ConePoint, q: ConePoint) -> tuple[float, ...]:
    """Per-segment half-sup lengths recomputed from the breakpoints; their
    sum equals the reported distance up to solver tolerance.  The apex
    route is covered by the same arithmetic: its empty transit pads to
    the zero vector on both sides."""
    cx = p.complex
    gal = result.gallery
    if not gal.orbit_ids:
        return ()
    if p.is_apex or q.is_apex:
        other = q if p.is_apex else p
        return (0.5 * other.max_coord,)
    lengths = []
    n_seg = len(gal.orbit_ids)
    for j in range(n_seg):
        size = cx.orbit(gal.orbit_ids[j]).n_edges
        if j == 0:
            u = _pad(gal.start_embedding, p.coords, size)
        else:
            t = gal.transits[j - 1]
            u = _pad(t.into_target, result.breakpoints[j - 1], size)
        if j == n_seg - 1:
            v = _pad(gal.end_embedding, q.coords, size)
        else:
            t = gal.transits[j]
            v = _pad(t.into_source, result.breakpoints[j], size)
        lengths.append(0.5 * max(abs(a - b) for a, b in zip(u, v)))
    return tuple(lengths)


def dropped_edges(result: GeodesicResult, p: ConePoint, q: ConePoint):
    """Support edges of the endpoints whose thread dies inside the gallery.

    Returns ``(dropped_from_p, dropped_from_q)`` as lists of (edge, coord)
    pairs.  Any such coordinate forces ``distance >= coord / 2``, since a
    dropped curve's coordinate must pass through zero along the path.
    """
    gal = result.gallery

    def thread(embedding, coords, transits, into_first, into_second):
        dropped = []
        for c, x in enumerate(coords):
            e = embedding[c]
            alive = True
            for t in transits:
                src = getattr(t, into_first)
                if e in src:
                    e = getattr(t, into_second)[src.index(e)]
                else:
                    alive = False
                    break
            if not alive:
                dropped.append((c, x))
        return dropped

    fwd = thread(gal.start_embedding, p.coords, gal.transits, "into_source", "into_target")
    bwd = thread(
        gal.end_embedding,
        q.coords,
        tuple(reversed(gal.transits)),
        "into_target",
        "into_source",
    )
    return fwd, bwd
