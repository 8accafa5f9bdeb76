"""Enumerate curve-system orbit complexes for small surfaces.

Every system of disjoint essential curves on a surface, taken up to
homeomorphism, is a decorated multigraph: pieces become vertices, curves
become edges.  This script builds the finite complex of such orbits for
a few surfaces and prints what the library found.
"""

from curvecone import Surface, build_complex, complex_to_dot, complex_to_json


def describe(genus, marked):
    surface = Surface(genus, marked)
    cx = build_complex(surface)
    print(f"== {surface}: pants count {surface.complexity}, "
          f"top dimension {surface.curve_complex_dim}")
    for dim in sorted(cx.orbit_counts()):
        print(f"   dim {dim}: {cx.orbit_counts()[dim]} orbit(s)")
    for orbit in cx.orbits:
        pieces = ", ".join(
            f"(g={d.piece_genus}, n={d.piece_marked})" for d in orbit.graph.vertices
        )
        curves = ", ".join(f"{u}-{w}" for u, w in orbit.graph.edges)
        print(f"   {orbit.id}  pieces [{pieces}]  curves [{curves}]  "
              f"symmetries {len(orbit.automorphisms)}")
    print()
    return cx


# The twice-marked torus is the classic picture: one vertex orbit for
# nonseparating curves, one for separating ones, and two edge orbits.
# The nonseparating/nonseparating edge orbit has an order-two symmetry
# swapping its curves, so its cone is a quadrant folded along the
# diagonal; the other edge orbit's cone is an honest quadrant.
cx12 = describe(1, 2)

nn = next(o for o in cx12.orbits if len(o.automorphisms) == 2)
print(f"The orbit {nn.id} carries the swap symmetry {nn.automorphisms[1]};")
print("both of its face maps land on the same vertex orbit:")
for fm in cx12.face_maps:
    if fm.source == nn.id:
        print(f"   drop curve {fm.deleted_edge} -> {fm.target}")
print()

# The closed genus-2 surface has two pants decomposition types: the theta
# graph (two pieces sharing all three curves, symmetries = all curve
# shuffles) and the dumbbell (two one-handle pieces and a bridge).
describe(2, 0)

# Serialization: a versioned JSON document and a DOT diagram of the face
# maps, for machines and eyeballs respectively.
print("JSON starts with:", complex_to_json(cx12)[:72], "...")
print("DOT starts with: ", complex_to_dot(cx12).splitlines()[0])
