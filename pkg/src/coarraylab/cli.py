"""Command-line front end: analyze, compare, browse the catalog, serve the API.

Exit codes: 0 on success (regardless of hole-free status), 1 on input or
lookup errors, 2 on IO/internal failures.
"""

from __future__ import annotations

import argparse
import os
import sys
import traceback

from . import catalog as catalog_mod
from .catalog import UnknownEntryError
from .core import CoarrayAnalysis, ComparisonReport, ResourceLimitError, analyze, compare
from .parsing import ParseError, parse_array
from .render import RenderOptions, render_stem_svg
from .serialize import analysis_json, comparison_json

DEFAULT_PORT = 8780


def _join(values) -> str:
    return ", ".join(str(v) for v in values)


def _hole_text(hole_list) -> str:
    return _join(hole_list) if hole_list else "(none)"


def _weights_text(pw) -> str:
    return f"w(1)={pw[0]}  w(2)={pw[1]}  w(3)={pw[2]}"


def format_analysis_text(analysis: CoarrayAnalysis) -> str:
    rows = [
        ("Sensor positions", _join(analysis.source.positions)),
        ("Normalized", _join(analysis.normalized.positions)),
        ("Sensor count N", str(analysis.source.count)),
        ("Aperture A", str(analysis.aperture)),
        (f"DCA ({len(analysis.dca)} lags)", _join(analysis.dca)),
        ("Holes", _hole_text(analysis.holes)),
        ("Status", analysis.status),
        ("Primary weights", _weights_text(analysis.primary_weights)),
    ]
    label_width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label.ljust(label_width)} : {value}" for label, value in rows)


def format_comparison_text(report: ComparisonReport) -> str:
    def fields(analysis: CoarrayAnalysis) -> list[str]:
        return [
            _join(analysis.source.positions),
            _join(analysis.normalized.positions),
            str(analysis.source.count),
            str(analysis.aperture),
            _join(analysis.dca),
            _hole_text(analysis.holes),
            analysis.status,
            _weights_text(analysis.primary_weights),
        ]

    labels = [
        "Sensor positions",
        "Normalized",
        "Sensor count N",
        "Aperture A",
        "DCA",
        "Holes",
        "Status",
        "Primary weights",
    ]
    col_a = fields(report.a)
    col_b = fields(report.b)
    label_width = max(len(s) for s in labels)
    a_width = max(len(s) for s in col_a + ["A"])
    lines = [f"{'Field'.ljust(label_width)} | {'A'.ljust(a_width)} | B"]
    lines.append(f"{'-' * label_width} | {'-' * a_width} | ---")
    for label, va, vb in zip(labels, col_a, col_b):
        lines.append(f"{label.ljust(label_width)} | {va.ljust(a_width)} | {vb}")
    lines.append("")
    lines.append("Deltas (A - B)")
    lines.append(f"  aperture          : {report.aperture_delta}")
    lines.append(f"  sensor count      : {report.sensor_count_delta}")
    lines.append(f"  primary weights   : {_join(report.primary_weight_delta)}")
    lines.append(f"  hole set symm diff: {_hole_text(report.hole_set_delta)}")
    return "\n".join(lines)


def _array_from_flags(positions, ies, catalog_id):
    if positions is not None:
        return parse_array(positions, "positions")
    if ies is not None:
        return parse_array(ies, "ies")
    return catalog_mod.get_entry(catalog_id).sensor_array()


def _render_options(args) -> RenderOptions:
    tick = args.tick_step
    if tick != "auto":
        try:
            tick = int(tick)
        except ValueError:
            raise ValueError(f"--tick-step must be 'auto' or an integer, got {tick!r}")
    return RenderOptions(
        width=args.width,
        height=args.height,
        tick_step=tick,
        highlight_holes=not args.no_hole_highlight,
    )


def _cmd_analyze(args) -> int:
    array = _array_from_flags(args.positions, args.ies, args.catalog)
    result = analyze(array)
    if args.svg:
        svg = render_stem_svg(result, _render_options(args))
        with open(args.svg, "w") as handle:
            handle.write(svg)
    if args.json == "-":
        sys.stdout.write(analysis_json(result))
        return 0
    if args.json:
        with open(args.json, "w") as handle:
            handle.write(analysis_json(result))
    print(format_analysis_text(result))
    return 0


def _cmd_compare(args) -> int:
    array_a = _array_from_flags(args.a_positions, args.a_ies, args.a_catalog)
    array_b = _array_from_flags(args.b_positions, args.b_ies, args.b_catalog)
    report = compare(array_a, array_b)
    if args.json == "-":
        sys.stdout.write(comparison_json(report))
        return 0
    if args.json:
        with open(args.json, "w") as handle:
            handle.write(comparison_json(report))
    print(format_comparison_text(report))
    return 0


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        entries = catalog_mod.list_entries()
        id_width = max(len(e.id) for e in entries)
        family_width = max(len(e.family) for e in entries)
        for entry in entries:
            print(f"{entry.id.ljust(id_width)}  {entry.family.ljust(family_width)}  {entry.name}")
        return 0
    entry = catalog_mod.get_entry(args.id)
    print(f"id         : {entry.id}")
    print(f"name       : {entry.name}")
    print(f"family     : {entry.family}")
    print(f"definition : {entry.definition_format}: {entry.definition_text}")
    if entry.expected:
        print("published  :")
        for key, claim in sorted(entry.expected.items()):
            print(f"  {key} = {claim.value}  [{claim.source}]")
    print()
    print(format_analysis_text(analyze(entry.sensor_array())))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    ui_dir = args.ui_dir
    if ui_dir is None:
        candidate = os.environ.get("COARRAYLAB_UI_DIR", os.path.join("frontend", "dist"))
        ui_dir = candidate if os.path.isdir(candidate) else None
    if ui_dir:
        print(f"serving UI from {ui_dir}", file=sys.stderr)
    else:
        print("no UI directory found; serving API only", file=sys.stderr)
    app = create_app(ui_dir=ui_dir, cors_origin=args.cors_origin)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _add_input_group(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    dash = f"--{prefix}" if prefix else "--"
    group.add_argument(f"{dash}positions", metavar="LIST", help="explicit sensor positions, e.g. '0, 1, 4, 6'")
    group.add_argument(f"{dash}ies", metavar="SPEC", help="IES notation, e.g. '2^7' or 'ones(1,14)'")
    group.add_argument(f"{dash}catalog", metavar="ID", help="built-in catalog entry id")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coarraylab",
        description="Difference-coarray analysis of sparse linear arrays",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one array")
    _add_input_group(pa)
    pa.add_argument("--json", nargs="?", const="-", metavar="PATH",
                    help="emit JSON; to stdout when no PATH is given")
    pa.add_argument("--svg", metavar="PATH", help="write a weight-function stem plot")
    pa.add_argument("--width", type=int, default=640)
    pa.add_argument("--height", type=int, default=400)
    pa.add_argument("--tick-step", default="auto", help="x-axis tick step (default: auto)")
    pa.add_argument("--no-hole-highlight", action="store_true",
                    help="omit hole markers from the SVG")
    pa.set_defaults(func=_cmd_analyze)

    pc = sub.add_parser("compare", help="compare two arrays side by side")
    _add_input_group(pc, "a-")
    _add_input_group(pc, "b-")
    pc.add_argument("--json", nargs="?", const="-", metavar="PATH")
    pc.set_defaults(func=_cmd_compare)

    pk = sub.add_parser("catalog", help="browse the built-in array catalog")
    ksub = pk.add_subparsers(dest="catalog_command", required=True)
    ksub.add_parser("list", help="list all entries")
    kshow = ksub.add_parser("show", help="show one entry with a fresh analysis")
    kshow.add_argument("id")
    pk.set_defaults(func=_cmd_catalog)

    ps = sub.add_parser("serve", help="run the JSON HTTP service")
    ps.add_argument("--host", default=os.environ.get("COARRAYLAB_HOST", "127.0.0.1"))
    ps.add_argument("--port", type=int,
                    default=int(os.environ.get("COARRAYLAB_PORT", DEFAULT_PORT)))
    ps.add_argument("--ui-dir", default=None,
                    help="static UI assets directory (default: $COARRAYLAB_UI_DIR or frontend/dist)")
    ps.add_argument("--cors-origin", default=None,
                    help="enable CORS for this origin (dev mode)")
    ps.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc.message} (at offset {exc.position})", file=sys.stderr)
        return 1
    except (UnknownEntryError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
