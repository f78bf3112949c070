"""Command-line interface: enumerate diagrams, cross walls, build cover
graphs, and run the verification suites.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
Outputs are deterministic; the optional GROWTH_THREADS variable caps
worker counts but never changes the output."""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from growth.checks import SUITES, run_checks
from growth.cylgrowth import CylGrowthDiagram, cgd_enumerate, cgd_validate
from growth.decgd import Decgd, decgd_enumerate
from growth.moduli import Wall, build_cover_graph, cross_cgd, cross_decgd, \
    export, graph_components
from growth.partitions import Frame, normalize


@dataclass(frozen=True)
class RunConfig:
    command: str
    frame: Frame | None = None
    shape: tuple | None = None
    wall: tuple | None = None
    path: str | None = None
    fmt: str = "text"
    out: str | None = None
    only: str | None = None
    twice: bool = False


class UsageError(Exception):
    pass


def parse_shape(text: str):
    """Parse "3,1;2;1;1" into a tuple of partitions: conditions separated
    by semicolons, parts by commas."""
    shape = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError(f"empty condition in shape {text!r}")
        try:
            parts = [int(x) for x in chunk.split(",")]
        except ValueError:
            raise UsageError(f"cannot parse partition {chunk!r}")
        if any(p < 0 for p in parts):
            raise UsageError(f"negative part in {chunk!r}")
        shape.append(normalize(parts))
    return tuple(shape)


def parse_wall(text: str, r: int) -> Wall:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse wall {text!r}; expected 'a,b'")
    try:
        return Wall(a, b, r)
    except ValueError as exc:
        raise UsageError(str(exc))


def _threads() -> int:
    raw = os.environ.get("GROWTH_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"GROWTH_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("GROWTH_THREADS must be at least 1")
    return value


def _frame(args) -> Frame:
    if args.d is None or args.n is None:
        raise UsageError("--d and --n are required")
    if not 0 < args.d < args.n:
        raise UsageError("need 0 < d < n")
    return Frame(args.d, args.n)


def _write(config: RunConfig, data: bytes) -> None:
    if config.out:
        with open(config.out, "wb") as handle:
            handle.write(data)
    else:
        sys.stdout.write(data.decode())


def _diagram_text(obj) -> str:
    def fmt_row(row):
        return " ".join("." if not p else ",".join(str(x) for x in p)
                        for p in row)

    rows = obj.gamma if isinstance(obj, Decgd) else obj.rows
    return "\n".join(fmt_row(row) for row in rows)


def cmd_enumerate(config: RunConfig) -> int:
    frame = config.frame
    if config.shape is None:
        diagrams = cgd_enumerate(frame)
    else:
        if len(config.shape) < 3:
            raise UsageError("need at least 3 conditions")
        if sum(sum(lam) for lam in config.shape) != frame.size:
            print(f"note: no diagrams, the sizes must satisfy "
                  f"sum |lam_i| = d(n-d) = {frame.size}", file=sys.stderr)
        diagrams = decgd_enumerate(frame, config.shape)
    if config.fmt == "json":
        payload = json.dumps([g.to_json() for g in diagrams],
                             indent=2, sort_keys=True) + "\n"
    elif config.fmt == "text":
        payload = "\n\n".join(_diagram_text(g) for g in diagrams)
        payload += "\n" if payload else ""
    else:
        raise UsageError(f"format {config.fmt!r} not supported here")
    _write(config, payload.encode())
    print(f"{len(diagrams)} diagrams", file=sys.stderr)
    return 0


def _load_diagram(path: str):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read diagram from {path}: {exc}")
    try:
        if "a" in data and "b" in data:
            return Decgd.from_json(data)
        return CylGrowthDiagram.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"malformed diagram in {path}: {exc}")


def cmd_wallcross(config: RunConfig) -> int:
    if config.path is None:
        raise UsageError("--input FILE with the diagram is required")
    diagram = _load_diagram(config.path)
    if config.wall is None:
        raise UsageError("--wall a,b is required")
    wall = parse_wall(config.wall, diagram.r)
    cross = cross_decgd if isinstance(diagram, Decgd) else cross_cgd
    try:
        crossed = cross(diagram, wall)
    except ValueError as exc:
        raise UsageError(str(exc))
    if config.twice:
        again = cross(crossed, wall)
        if again != diagram:
            print("crossing twice does not restore the diagram",
                  file=sys.stderr)
            return 1
        print("crossing twice restores the diagram", file=sys.stderr)
    if config.fmt == "json":
        payload = json.dumps(crossed.to_json(), indent=2, sort_keys=True) \
            + "\n"
    elif config.fmt == "text":
        payload = _diagram_text(crossed) + "\n"
    else:
        raise UsageError(f"format {config.fmt!r} not supported here")
    _write(config, payload.encode())
    return 0


def cmd_cover(config: RunConfig) -> int:
    frame = config.frame
    if config.shape is None:
        raise UsageError("--shape is required")
    if len(config.shape) < 3:
        raise UsageError("need at least 3 conditions")
    graph = build_cover_graph(frame, config.shape)
    if config.fmt in ("json", "dot"):
        _write(config, export(graph, config.fmt))
    summary = (f"{len(graph.nodes)} nodes, {len(graph.edges)} edges, "
               f"{graph_components(graph)} components")
    if config.fmt == "text":
        _write(config, (summary + "\n").encode())
    else:
        print(summary, file=sys.stderr)
    return 0


def cmd_verify(config: RunConfig) -> int:
    try:
        results = run_checks(config.only)
    except ValueError as exc:
        raise UsageError(str(exc))
    failures = 0
    lines = []
    for name, ok, detail, secs in results:
        status = "PASS" if ok else "FAIL"
        failures += 0 if ok else 1
        lines.append(f"{status} {name} ({secs:.2f}s): {detail}")
    payload = "\n".join(lines) + "\n"
    _write(config, payload.encode())
    if failures:
        print(f"{failures} of {len(results)} checks failed", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growth",
        description="growth diagrams, wall crossings, cover graphs, and "
                    "exact conic verification")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, frame=True):
        if frame:
            p.add_argument("--d", type=int)
            p.add_argument("--n", type=int)
        p.add_argument("--format", dest="fmt", default="text",
                       choices=["json", "dot", "text"])
        p.add_argument("--out")

    p = sub.add_parser("enumerate", help="list diagrams for a frame")
    common(p)
    p.add_argument("--shape", help="conditions, e.g. '3,1;2;1;1'")

    p = sub.add_parser("wallcross", help="cross a wall on a diagram")
    common(p, frame=False)
    p.add_argument("--input", dest="path", help="diagram JSON file")
    p.add_argument("--wall", help="positions 'a,b'")
    p.add_argument("--twice", action="store_true",
                   help="also verify that crossing twice restores the input")

    p = sub.add_parser("cover", help="build the monodromy cover graph")
    common(p)
    p.add_argument("--shape", help="conditions, e.g. '1;1;1;1'")

    p = sub.add_parser("verify", help="run the verification suites")
    common(p, frame=False)
    p.add_argument("--only", choices=list(SUITES))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        frame = None
        if args.command in ("enumerate", "cover"):
            frame = _frame(args)
        shape = None
        if getattr(args, "shape", None):
            shape = parse_shape(args.shape)
        config = RunConfig(
            command=args.command, frame=frame, shape=shape,
            wall=getattr(args, "wall", None),
            path=getattr(args, "path", None),
            fmt=args.fmt, out=args.out,
            only=getattr(args, "only", None),
            twice=getattr(args, "twice", False),
        )
        handler = {"enumerate": cmd_enumerate, "wallcross": cmd_wallcross,
                   "cover": cmd_cover, "verify": cmd_verify}[args.command]
        return handler(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
