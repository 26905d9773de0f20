"""ecodom command line.

Exit codes: 0 compliant, 1 non-compliant, 2 usage, parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, tables, ventsim
from .ingest import ParseError, dumps_canonical, parse_and_validate, schema_description
from .report import Verdict, render_json, render_text
from .rules import RuleId, check_all

EXIT_COMPLIANT = 0
EXIT_NON_COMPLIANT = 1
EXIT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise _Exit(status)


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _rule_list(text: str) -> list[RuleId]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        try:
            out.append(RuleId(item.upper()))
        except ValueError:
            allowed = ", ".join(r.value for r in RuleId)
            raise argparse.ArgumentTypeError(f"unknown rule {item!r}; allowed: {allowed}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ecodom", description="ECODOM passive-cooling compliance checker")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check a building model file")
    c.add_argument("file", type=Path)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--rules", type=_rule_list, default=None,
                   help="comma-separated rule ids to evaluate (default: all)")

    t = sub.add_parser("tables", help="print the prescriptive tables")
    t.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("vent", help="estimate single-zone cross ventilation")
    v.add_argument("--wind", type=float, default=4.0, help="wind speed, m/s")
    v.add_argument("--area-wind", type=float, default=2.0, help="windward opening area, m²")
    v.add_argument("--area-lee", type=float, default=2.0, help="leeward opening area, m²")
    v.add_argument("--volume", type=float, default=175.0, help="zone volume, m³")
    v.add_argument("--cross-section", type=float, default=17.5, help="flow-normal section, m²")
    v.add_argument("--cd", type=float, default=0.61, help="discharge coefficient")
    v.add_argument("--cp-w", type=float, default=0.6, help="windward pressure coefficient")
    v.add_argument("--cp-l", type=float, default=-0.3, help="leeward pressure coefficient")
    v.add_argument("--density", type=float, default=1.2, help="air density, kg/m³")
    v.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("schema", help="describe the building model file format")
    return p


def _use_color(stream) -> bool:
    return not os.environ.get("ECODOM_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _cmd_check(args) -> int:
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"ecodom: cannot read {args.file}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        model, errors = parse_and_validate(text)
    except ParseError as exc:
        print(f"ecodom: {args.file}: {exc.location}", file=sys.stderr)
        return EXIT_ERROR
    if errors:
        print(f"ecodom: {args.file}: {len(errors)} validation error(s)", file=sys.stderr)
        for err in errors:
            print(f"  {err}", file=sys.stderr)
        return EXIT_ERROR
    report = check_all(model, rules=args.rules)
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_text(report, color=_use_color(sys.stdout)))
    return EXIT_COMPLIANT if report.verdict is Verdict.COMPLIANT else EXIT_NON_COMPLIANT


def _cmd_tables(args) -> int:
    if args.format == "json":
        sys.stdout.write(dumps_canonical(tables.tables_as_dict()) + "\n")
    else:
        sys.stdout.write(tables.render_tables_text())
    return 0


def _cmd_vent(args) -> int:
    scenario = ventsim.VentScenario(
        wind_speed_ms=args.wind,
        openings_windward_m2=args.area_wind,
        openings_leeward_m2=args.area_lee,
        zone_volume_m3=args.volume,
        cross_section_m2=args.cross_section,
        air_density_kgm3=args.density,
        discharge_coefficient=args.cd,
        cp_windward=args.cp_w,
        cp_leeward=args.cp_l,
    )
    try:
        result = ventsim.estimate(scenario)
    except ValueError as exc:
        print(f"ecodom: {exc}", file=sys.stderr)
        return EXIT_ERROR
    check = ventsim.meets_targets(result)
    if args.format == "json":
        doc = {
            "assumptions": {k: float(v) for k, v in vars(scenario).items()},
            "result": {k: float(v) for k, v in vars(result).items()},
            "targets": {"ach_ok": check.ach_ok, "speed_band": check.speed_band.value,
                        "min_ach_per_h": ventsim.MIN_ACH,
                        "speed_band_ms": list(ventsim.SPEED_BAND_MS)},
        }
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return 0
    s = scenario
    lo, hi = ventsim.SPEED_BAND_MS
    print(f"assumptions: U={s.wind_speed_ms:g} m/s, rho={s.air_density_kgm3:g} kg/m³, "
          f"Cd={s.discharge_coefficient:g}, Cp windward={s.cp_windward:+g}, "
          f"Cp leeward={s.cp_leeward:+g}, A windward={s.openings_windward_m2:g} m², "
          f"A leeward={s.openings_leeward_m2:g} m², V={s.zone_volume_m3:g} m³, "
          f"section={s.cross_section_m2:g} m²; single zone, no stack effect")
    print(f"internal pressure: {result.internal_pressure_pa:.4f} Pa")
    print(f"flow: {result.volumetric_flow_m3s:.4f} m³/s")
    print(f"ACH: {result.ach_per_h:.1f} vol/h (target >= {ventsim.MIN_ACH:g})")
    print(f"mean air speed: {result.mean_air_speed_ms:.2f} m/s (band {lo:g}-{hi:g})")
    print(f"ach_ok={str(check.ach_ok).lower()} speed_band={check.speed_band.value}")
    return 0


def _cmd_schema(args) -> int:
    doc = {"schema_version": 1, "document": schema_description(),
           "notes": ["unknown fields are rejected",
                     "lengths in metres, insulation thickness in centimetres",
                     "orientation_deg is clockwise from true north"]}
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return 0


_COMMANDS = {"check": _cmd_check, "tables": _cmd_tables, "vent": _cmd_vent, "schema": _cmd_schema}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Exit as exc:
        return exc.code
    return _COMMANDS[args.command](args)


def main() -> int:
    return run(sys.argv[1:])
