"""The finite quotient complex of curve-system orbits for one surface.

Every simplex orbit is stored once, as the canonical form of its cut
graph, together with its edge-symmetry group.  Face maps record which
orbit a curve deletion lands on and how the surviving curves are
re-identified there.  The complex also exposes the derived gluing data
needed by the metric layer: face tables for arbitrary curve subsets,
the set of embeddings of an orbit into a host orbit, and the transit
identifications between pairs of top-dimensional orbits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .multicurves import (
    CanonicalForm,
    InvalidMulticurve,
    MulticurveGraph,
    VertexDecoration,
    canonicalize,
    delete_curve,
    label_hash,
)
from .surfaces import Surface

SCHEMA_COMPLEX = "curvecone/quotient-complex/1"


@dataclass(frozen=True)
class SimplexOrbit:
    """One orbit of curve systems: canonical cut graph plus symmetries."""

    id: str
    graph: MulticurveGraph
    dim: int
    automorphisms: tuple[tuple[int, ...], ...]

    @property
    def n_edges(self) -> int:
        return len(self.graph.edges)


@dataclass(frozen=True)
class FaceMap:
    """Curve deletion between orbits, with the surviving-edge injection.

    ``edge_injection`` pairs each surviving canonical edge of ``source``
    with its canonical edge in ``target``.  Distinct deleted edges may
    share a target orbit.
    """

    source: str
    deleted_edge: int
    target: str
    edge_injection: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Transit:
    """Shared-face identification between consecutive gallery orbits.

    ``into_source[c]`` / ``into_target[c]`` give the host edges carrying
    face edge ``c`` in the two orbits; automorphism twists of the face
    are already folded in.  The apex transit (empty face) is the
    degenerate case with no carried edges.
    """

    face_id: str
    into_source: tuple[int, ...]
    into_target: tuple[int, ...]

    @property
    def is_apex(self) -> bool:
        return not self.into_source


def orbit_from_canonical(cf: CanonicalForm) -> SimplexOrbit:
    k = len(cf.graph.edges)
    return SimplexOrbit(
        id=f"d{k - 1}-{label_hash(cf.label)}",
        graph=cf.graph,
        dim=k - 1,
        automorphisms=cf.automorphisms,
    )


# ---------------------------------------------------------------------------
# Orbit enumeration
# ---------------------------------------------------------------------------


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _spans_connected(nv: int, edges) -> bool:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in edges:
        parent[find(u)] = find(w)
    root = find(0)
    return all(find(v) == root for v in range(nv))


def enumerate_orbits(surface: Surface, k: int) -> list[SimplexOrbit]:
    """All orbits of ``k``-curve systems on ``surface``.

    Generates connected decorated multigraphs with ``k`` edges satisfying
    the genus and marked-point accounting and per-vertex stability, then
    removes duplicates by canonical form.  Output is sorted by orbit id.
    """
    if not 1 <= k <= surface.complexity:
        raise ValueError(
            f"curve count {k} out of range [1, {surface.complexity}] for {surface}"
        )
    seen: dict[str, CanonicalForm] = {}
    for nv in range(1, k + 2):
        b1 = k - nv + 1
        if b1 < 0:
            continue
        g_res = surface.genus - b1
        if g_res < 0:
            continue
        pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
        for eset in combinations_with_replacement(pairs, k):
            if not _spans_connected(nv, eset):
                continue
            degs = [0] * nv
            for u, w in eset:
                degs[u] += 1
                degs[w] += 1
            for gdist in _compositions(g_res, nv):
                # Stability forces a floor on each vertex's marked count.
                mins = [
                    max(0, 3 - 2 * g - d) for g, d in zip(gdist, degs)
                ]
                rem = surface.marked_points - sum(mins)
                if rem < 0:
                    continue
                for extra in _compositions(rem, nv):
                    decs = tuple(
                        VertexDecoration(g, m + e)
                        for g, m, e in zip(gdist, mins, extra)
                    )
                    graph = MulticurveGraph(decs, eset)
                    cf = canonicalize(graph)
                    if cf.label not in seen:
                        seen[cf.label] = cf
    orbits = [orbit_from_canonical(cf) for cf in seen.values()]
    orbits.sort(key=lambda o: o.id)
    return orbits


# ---------------------------------------------------------------------------
# The assembled complex
# ---------------------------------------------------------------------------


class QuotientComplex:
    """All simplex orbits of one surface with face maps and gluing caches.

    Immutable after construction; the lazy caches are filled with
    idempotent derived data only, so instances are safe to share.
    """

    def __init__(self, surface: Surface, orbits, face_maps):
        self.surface = surface
        self.orbits = tuple(sorted(orbits, key=lambda o: (o.dim, o.id)))
        self.face_maps = tuple(face_maps)
        self._by_id = {o.id: o for o in self.orbits}
        self._face_at = {
            (fm.source, fm.deleted_edge): fm for fm in self.face_maps
        }
        self.max_dim = max(o.dim for o in self.orbits)
        self.maximal_ids = tuple(
            o.id for o in self.orbits if o.dim == self.max_dim
        )
        self._subface_cache: dict[str, dict] = {}
        self._embedding_cache: dict[tuple[str, str], tuple] = {}
        self._transit_cache: dict[tuple[str, str], tuple] = {}

    # -- basic access -------------------------------------------------------

    def orbit(self, orbit_id: str) -> SimplexOrbit:
        try:
            return self._by_id[orbit_id]
        except KeyError:
            raise KeyError(f"no orbit {orbit_id!r} in complex of {self.surface}")

    def orbits_of_dim(self, dim: int) -> tuple[SimplexOrbit, ...]:
        return tuple(o for o in self.orbits if o.dim == dim)

    def face(self, orbit_id: str, edge: int) -> FaceMap:
        return self._face_at[(orbit_id, edge)]

    def orbit_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for o in self.orbits:
            counts[o.dim] = counts.get(o.dim, 0) + 1
        return counts

    # -- derived gluing data --------------------------------------------------

    def subfaces(self, orbit_id: str) -> dict[frozenset, tuple[str, tuple[int, ...]]]:
        """For each proper nonempty edge subset ``F`` of the orbit, the face
        orbit spanned by ``F`` and the injection of that face's canonical
        edges onto ``F`` (``iota[c]`` is the host edge carrying face edge
        ``c``)."""
        cached = self._subface_cache.get(orbit_id)
        if cached is not None:
            return cached
        orbit = self.orbit(orbit_id)
        k = orbit.n_edges
        table = {}
        for size in range(1, k):
            for keep in combinations(range(k), size):
                cur_id = orbit_id
                cur_of = {f: f for f in keep}
                while True:
                    kept_now = set(cur_of.values())
                    k_cur = self.orbit(cur_id).n_edges
                    spare = [e for e in range(k_cur) if e not in kept_now]
                    if not spare:
                        break
                    fm = self._face_at[(cur_id, spare[0])]
                    inj = dict(fm.edge_injection)
                    cur_of = {f: inj[c] for f, c in cur_of.items()}
                    cur_id = fm.target
                iota = [0] * len(keep)
                for f, c in cur_of.items():
                    iota[c] = f
                table[frozenset(keep)] = (cur_id, tuple(iota))
        self._subface_cache[orbit_id] = table
        return table

    def embeddings(self, face_id: str, host_id: str) -> tuple[tuple[int, ...], ...]:
        """All edge injections realizing ``face_id`` as a face of
        ``host_id``, automorphism twists of the face included.  When the
        two coincide this is the host's edge-symmetry group."""
        key = (face_id, host_id)
        cached = self._embedding_cache.get(key)
        if cached is not None:
            return cached
        if face_id == host_id:
            result = self.orbit(host_id).automorphisms
        else:
            face_auts = self.orbit(face_id).automorphisms
            found = set()
            for _keep, (fid, iota) in self.subfaces(host_id).items():
                if fid != face_id:
                    continue
                for a in face_auts:
                    found.add(tuple(iota[a[c]] for c in range(len(a))))
            result = tuple(sorted(found))
        self._embedding_cache[key] = result
        return result

    def maximal_embeddings(self, face_id: str) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """All (maximal orbit, embedding) realizations of an orbit."""
        out = []
        for mid in self.maximal_ids:
            for emb in self.embeddings(face_id, mid):
                out.append((mid, emb))
        return tuple(out)

    def embeddings_mod_host(self, face_id: str, host_id: str) -> tuple[tuple[int, ...], ...]:
        """One embedding per orbit of the host symmetry group's action.

        Post-composing an embedding with a host symmetry relabels the
        whole host chart, so search procedures that already enumerate
        every identification out of the host lose nothing by fixing one
        representative per orbit."""
        embs = self.embeddings(face_id, host_id)
        auts = self.orbit(host_id).automorphisms
        reps = set()
        for e in embs:
            reps.add(
                min(tuple(b[e[c]] for c in range(len(e))) for b in auts)
            )
        return tuple(sorted(reps))

    def transits(self, source_id: str, target_id: str) -> tuple[Transit, ...]:
        """Shared-face identifications usable between two maximal orbits,
        reduced to the maximal ones (a transit whose carried-edge maps
        factor through a larger shared face is dropped)."""
        key = (source_id, target_id)
        cached = self._transit_cache.get(key)
        if cached is not None:
            return cached

        def chart(orbit_id):
            entries = [
                (fid, iota) for (fid, iota) in self.subfaces(orbit_id).values()
            ]
            k = self.orbit(orbit_id).n_edges
            entries.append((orbit_id, tuple(range(k))))
            return entries

        raw = set()
        for fid_a, iota_a in chart(source_id):
            for fid_b, iota_b in chart(target_id):
                if fid_a != fid_b:
                    continue
                if fid_a == source_id and source_id != target_id:
                    continue
                for a in self.orbit(fid_a).automorphisms:
                    twisted = tuple(iota_a[a[c]] for c in range(len(a)))
                    raw.add((fid_a, twisted, iota_b))
        candidates = sorted(raw)

        kept = []
        for fid, into_s, into_t in candidates:
            dominated = False
            for fid2, into_s2, into_t2 in candidates:
                if len(into_s2) <= len(into_s):
                    continue
                for j in self.embeddings(fid, fid2):
                    if all(
                        into_s2[j[c]] == into_s[c] and into_t2[j[c]] == into_t[c]
                        for c in range(len(into_s))
                    ):
                        dominated = True
                        break
                if dominated:
                    break
            if not dominated:
                kept.append(Transit(fid, into_s, into_t))
        result = tuple(kept)
        self._transit_cache[key] = result
        return result

    # -- invariants -----------------------------------------------------------

    def check_invariants(self) -> None:
        d = self.surface.complexity
        if self.max_dim != d - 1:
            raise InvalidMulticurve(
                f"top orbit dimension {self.max_dim} != {d - 1} for {self.surface}"
            )
        for mid in self.maximal_ids:
            graph = self.orbit(mid).graph
            degs = graph.degrees()
            for v, dec in enumerate(graph.vertices):
                if dec.piece_genus != 0 or dec.piece_marked + degs[v] != 3:
                    raise InvalidMulticurve(
                        f"maximal orbit {mid} has a non-pants piece at vertex {v}"
                    )
        # Every orbit below the top extends to one more curve.
        for k in range(1, d):
            lower = {o.id for o in self.orbits_of_dim(k - 1)}
            covered = {
                fm.target
                for fm in self.face_maps
                if self._by_id[fm.source].dim == k
            }
            if not lower <= covered:
                missing = sorted(lower - covered)
                raise InvalidMulticurve(
                    f"orbits {missing} extend to no larger curve system"
                )


def build_complex(surface: Surface) -> QuotientComplex:
    """Enumerate all orbits of a surface and assemble face maps.

    Orbits for every curve count up to the pants number, face maps via
    curve deletion matched through canonical forms; structural invariants
    are verified before the complex is returned.
    """
    d = surface.complexity
    all_orbits: list[SimplexOrbit] = []
    for k in range(1, d + 1):
        all_orbits.extend(enumerate_orbits(surface, k))

    by_id = {o.id: o for o in all_orbits}
    face_maps = []
    for orbit in all_orbits:
        k = orbit.n_edges
        if k < 2:
            continue
        for e in range(k):
            sub = delete_curve(orbit.graph, e)
            cf = canonicalize(sub)
            target = orbit_from_canonical(cf)
            if target.id not in by_id:
                raise InvalidMulticurve(
                    f"face of {orbit.id} (delete {e}) missing from enumeration"
                )
            injection = []
            for s in range(k):
                if s == e:
                    continue
                pos = s - 1 if s > e else s
                injection.append((s, cf.edge_order[pos]))
            face_maps.append(
                FaceMap(orbit.id, e, target.id, tuple(injection))
            )
    cx = QuotientComplex(surface, all_orbits, face_maps)
    cx.check_invariants()
    return cx


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def complex_to_dict(cx: QuotientComplex) -> dict:
    """Serialize to the versioned schema.

    Top-level fields: ``schema_version`` (string, required),
    ``surface`` (``genus``/``marked_points``), ``orbits`` (each with
    ``id``, ``dim``, ``vertices`` as [genus, marked] pairs, ``edges`` as
    endpoint pairs in canonical order, and ``automorphisms`` as edge
    permutations), and ``face_maps`` (``from``, ``deleted_edge``,
    ``to``, ``edge_injection`` as [source edge, target edge] pairs).
    """
    return {
        "schema_version": SCHEMA_COMPLEX,
        "surface": {
            "genus": cx.surface.genus,
            "marked_points": cx.surface.marked_points,
        },
        "orbits": [
            {
                "id": o.id,
                "dim": o.dim,
                "vertices": [
                    [d.piece_genus, d.piece_marked] for d in o.graph.vertices
                ],
                "edges": [list(e) for e in o.graph.edges],
                "automorphisms": [list(a) for a in o.automorphisms],
            }
            for o in cx.orbits
        ],
        "face_maps": [
            {
                "from": fm.source,
                "deleted_edge": fm.deleted_edge,
                "to": fm.target,
                "edge_injection": [list(p) for p in fm.edge_injection],
            }
            for fm in cx.face_maps
        ],
    }


def complex_to_json(cx: QuotientComplex, indent: int | None = 2) -> str:
    return json.dumps(complex_to_dict(cx), indent=indent, sort_keys=True)


def complex_from_dict(payload: dict) -> QuotientComplex:
    """Rebuild a complex from its serialized form.

    The complex is reconstructed from the surface and re-derived; the
    payload's orbit ids must match exactly, which guards against stale
    or hand-edited files.
    """
    if payload.get("schema_version") != SCHEMA_COMPLEX:
        raise ValueError(
            f"unsupported complex schema {payload.get('schema_version')!r}"
        )
    surf = Surface(
        payload["surface"]["genus"], payload["surface"]["marked_points"]
    )
    cx = build_complex(surf)
    stored = sorted(o["id"] for o in payload["orbits"])
    derived = sorted(o.id for o in cx.orbits)
    if stored != derived:
        raise ValueError("complex payload does not match its surface's orbits")
    return cx


def complex_from_json(text: str) -> QuotientComplex:
    return complex_from_dict(json.loads(text))


def complex_to_dot(cx: QuotientComplex) -> str:
    """Face-map diagram in DOT format, one node per orbit."""
    lines = [
        "digraph quotient_complex {",
        '  rankdir="BT";',
        f'  label="{cx.surface} curve-system orbits";',
    ]
    for o in cx.orbits:
        decs = ",".join(
            f"({d.piece_genus},{d.piece_marked})" for d in o.graph.vertices
        )
        edges = ",".join(f"{u}-{w}" for u, w in o.graph.edges)
        sym = len(o.automorphisms)
        lines.append(
            f'  "{o.id}" [label="dim {o.dim}\\npieces {decs}\\ncurves {edges}\\n'
            f'symmetries {sym}"];'
        )
    for fm in cx.face_maps:
        lines.append(
            f'  "{fm.source}" -> "{fm.target}" [label="drop {fm.deleted_edge}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
