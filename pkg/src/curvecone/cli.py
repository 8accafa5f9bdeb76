"""Batch command-line interface: complex export, distances, verification.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .metric import ComplexMismatchError, OrbitMismatchError, distance, point_from_dict
from .multicurves import InvalidMulticurve
from .quotient import (
    build_complex,
    complex_from_json,
    complex_to_dot,
    complex_to_json,
)
from .surfaces import Surface, UnsupportedSurfaceError
from .verify import run_verification


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecone",
        description="Curve-system quotient complexes and their cone metric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_complex = sub.add_parser(
        "complex", help="enumerate the orbit complex of a surface"
    )
    p_complex.add_argument("-g", "--genus", type=int, required=True)
    p_complex.add_argument("-n", "--marked", type=int, required=True)
    p_complex.add_argument("--format", choices=("json", "dot"), default="json")
    p_complex.add_argument(
        "--out",
        help="write the serialized complex here ('-' for stdout; "
        "omitted: summary only)",
    )

    p_dist = sub.add_parser("dist", help="distance between two cone points")
    p_dist.add_argument("complex_file")
    p_dist.add_argument("point_p")
    p_dist.add_argument("point_q")
    p_dist.add_argument("--out", help="write the geodesic JSON here (default stdout)")

    p_verify = sub.add_parser("verify", help="run the property suites")
    p_verify.add_argument("-g", "--genus", type=int, required=True)
    p_verify.add_argument("-n", "--marked", type=int, required=True)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=200)
    p_verify.add_argument("--epsilon0", type=float, default=0.1)
    p_verify.add_argument(
        "--mesh", type=float, default=None, help="also run the grid oracle suite"
    )
    p_verify.add_argument("--out", help="write the report JSON here (default stdout)")
    return parser


def _summary_lines(cx) -> list[str]:
    counts = cx.orbit_counts()
    plural = lambda n: "orbit" if n == 1 else "orbits"  # noqa: E731
    return [f"dim {d}: {counts[d]} {plural(counts[d])}" for d in sorted(counts)]


def _cmd_complex(args) -> int:
    cx = build_complex(Surface(args.genus, args.marked))
    payload = complex_to_json(cx) if args.format == "json" else complex_to_dot(cx)
    summary = "\n".join(_summary_lines(cx))
    if args.out is None:
        print(summary)
    elif args.out == "-":
        print(summary, file=sys.stderr)
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        with open(args.out, "w") as handle:
            handle.write(payload if payload.endswith("\n") else payload + "\n")
        print(summary)
    return 0


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w") as handle:
            handle.write(text + "\n")


def _cmd_dist(args) -> int:
    with open(args.complex_file) as handle:
        cx = complex_from_json(handle.read())
    points = []
    for path in (args.point_p, args.point_q):
        with open(path) as handle:
            points.append(point_from_dict(cx, json.load(handle)))
    result = distance(points[0], points[1])
    _emit(result.to_json(), args.out)
    return 0


def _cmd_verify(args) -> int:
    cx = build_complex(Surface(args.genus, args.marked))
    report = run_verification(
        cx,
        seed=args.seed,
        samples=args.samples,
        epsilon0=args.epsilon0,
        mesh=args.mesh,
    )
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {"complex": _cmd_complex, "dist": _cmd_dist, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except (
        UnsupportedSurfaceError,
        InvalidMulticurve,
        ComplexMismatchError,
        OrbitMismatchError,
        ValueError,
        KeyError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"curvecone: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
