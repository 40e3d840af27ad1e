"""Command-line driver.

Subcommands: generate, verify, project, encode, decode, contact, render,
appendix-figure.  All file formats are the line-oriented ASCII formats
from the formats module; any module error exits nonzero with a one-line
diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codec import decode_bits, encode_bits
from .contact import classify_contact, validate_tiling
from .formats import parse_bits, parse_tiling, serialize_bits, serialize_tiling
from .generator import generate_greedy
from .lattice import ORIGIN
from .projections import project_12, project_flat, project_mu
from .render import OBJ_MODES, SVG_MODES, appendix_figure_svg, render_obj, render_svg
from .tiles import Tile, TileKind, TilingDocument


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="ascii", newline="")


def _load_doc(path: str) -> TilingDocument:
    return parse_tiling(_read(path))


def _cmd_generate(args: argparse.Namespace) -> int:
    seed = Tile(TileKind(args.seed_kind), 0, ORIGIN)
    doc = generate_greedy(args.count, seed)
    _write(args.outfile, serialize_tiling(doc))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = validate_tiling(_load_doc(args.infile))
    for line in report.lines():
        print(line)
    return 0 if report.valid else 1


def _projection_csv(doc: TilingDocument, mode: str) -> str:
    vertices = sorted(doc.vertices(), key=lambda v: v.as_tuple())
    lines = []
    if mode == "flat":
        lines.append("x1,x2,x3,x4,X,Y")
        for v in vertices:
            X, Y = project_flat(v)
            lines.append(f"{v.x1},{v.x2},{v.x3},{v.x4},{X},{Y}")
    elif mode == "one-two":
        lines.append("x1,x2,x3,x4,px,py,pz")
        for v in vertices:
            px, py, pz = project_12(v)
            lines.append(f"{v.x1},{v.x2},{v.x3},{v.x4},{px},{py},{pz}")
    else:  # mu
        lines.append("x1,x2,x3,x4,z36,z72,fx,fy,fz")
        for v in vertices:
            p = project_mu(v)
            fx, fy, fz = p.as_floats()
            lines.append(
                f"{v.x1},{v.x2},{v.x3},{v.x4},{p.z36},{p.z72},"
                f"{fx:.9f},{fy:.9f},{fz:.9f}"
            )
    return "\n".join(lines) + "\n"


def _cmd_project(args: argparse.Namespace) -> int:
    doc = _load_doc(args.infile)
    if args.outfile.endswith(".obj"):
        if args.mode not in OBJ_MODES:
            raise ValueError(f"OBJ output supports modes {OBJ_MODES}, not {args.mode!r}")
        _write(args.outfile, render_obj(doc, args.mode))
    else:
        _write(args.outfile, _projection_csv(doc, args.mode))
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    grid = encode_bits(_load_doc(args.infile))
    _write(args.outfile, serialize_bits(grid))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    doc = decode_bits(parse_bits(_read(args.infile)))
    _write(args.outfile, serialize_tiling(doc))
    return 0


def _cmd_contact(args: argparse.Namespace) -> int:
    doc = _load_doc(args.doc)
    n = len(doc.tiles)
    for idx in (args.a, args.b):
        if not 0 <= idx < n:
            raise ValueError(f"tile index {idx} out of range 0..{n - 1}")
    print(classify_contact(doc.tiles[args.a], doc.tiles[args.b]).value)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    _write(args.outfile, render_svg(_load_doc(args.infile), args.mode))
    return 0


def _cmd_appendix_figure(args: argparse.Namespace) -> int:
    _write(args.outfile, appendix_figure_svg())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penrose-lattice",
        description="Exact lattice representations of Penrose rhombus tilings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="grow a tiling greedily around the origin")
    p.add_argument("--count", type=int, required=True, help="number of tiles")
    p.add_argument("--seed-kind", choices=["N", "W"], default="W")
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="validate a tiling file (exit 0 iff valid)")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("project", help="write projected vertices as CSV (or OBJ)")
    p.add_argument("--mode", choices=["mu", "one-two", "flat"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True,
                   help="CSV output; a .obj suffix writes a mesh for mu/one-two")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("encode", help="tiling file -> bit grid file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="bit grid file -> tiling file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("contact", help="classify the contact of two tiles in a file")
    p.add_argument("--doc", required=True)
    p.add_argument("--a", type=int, required=True, help="first tile index")
    p.add_argument("--b", type=int, required=True, help="second tile index")
    p.set_defaults(func=_cmd_contact)

    p = sub.add_parser("render", help="render a tiling view as SVG")
    p.add_argument("--mode", choices=list(SVG_MODES), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser(
        "appendix-figure",
        help="render the contact-class point cloud for the canonical tile pair",
    )
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_appendix_figure)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
