"""ECODOM prescriptions evaluated against a building model.

Each ``check_*`` function is pure and returns only the findings it raises; a
compliant element produces nothing.  :func:`check_all` runs the whole catalog
and assembles a :class:`~ecodom.report.ComplianceReport`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Optional

from . import tables
from .model import (
    ACKind,
    BuildingModel,
    Color,
    Dwelling,
    Hemisphere,
    RoofAssembly,
    RoofKind,
    RoomKind,
    Site,
    ValidationError,
    WaterHeaterKind,
    validate_model,
)

if TYPE_CHECKING:
    from .report import ComplianceReport


class RuleId(str, Enum):
    SITE = "R-SITE"
    ROOF = "R-ROOF"
    WALL = "R-WALL"
    WIN = "R-WIN"
    VENT = "R-VENT"
    FAN = "R-FAN"
    AC = "R-AC"
    DHW = "R-DHW"


class Severity(str, Enum):
    FAIL = "FAIL"
    WARN = "WARN"
    INFO = "INFO"


# the five compulsory prescription points and the rules that enforce them
PRESCRIPTION_POINTS: dict[str, tuple[RuleId, ...]] = {
    "location on site": (RuleId.SITE,),
    "solar protection": (RuleId.ROOF, RuleId.WALL, RuleId.WIN),
    "natural ventilation or air fans": (RuleId.VENT, RuleId.FAN),
    "domestic hot water": (RuleId.DHW,),
    "air-conditioned bedroom option": (RuleId.AC,),
}

MIN_PROTECTED_PERIMETER = 0.75  # strict
MIN_PROTECTED_WIDTH_M = 3.0
MIN_LOFT_VENT_RATIO = 0.15
MIN_PERMEABILITY = 0.25
MIN_COP = {ACKind.WINDOW_UNIT: 2.5, ACKind.SPLIT_SYSTEM: 3.0}
MAX_COOLING_W_PER_M2 = 80.0
MIN_AC_AIR_RENEWAL_M3H = 25.0
SOLAR_STORAGE_L_PER_M2 = (60.0, 120.0)
MIN_SOLAR_PRODUCTION_KWH_M2 = 700.0

_REL_EPS = 1e-9


def _at_least(measured: float, required: float) -> bool:
    return measured >= required - _REL_EPS * max(1.0, abs(required))


def _at_most(measured: float, required: float) -> bool:
    return measured <= required + _REL_EPS * max(1.0, abs(required))


@dataclass(frozen=True)
class Quantity:
    value: float
    unit: str

    def __str__(self) -> str:
        if self.unit == "flag":
            return "yes" if self.value else "no"
        text = f"{self.value:.4f}".rstrip("0")
        if text.endswith("."):
            text += "0"
        return f"{text} {self.unit}" if self.unit else text


def _q(value: float, unit: str) -> Quantity:
    return Quantity(round(float(value), 4), unit)


YES = Quantity(1.0, "flag")
NO = Quantity(0.0, "flag")


@dataclass(frozen=True)
class Finding:
    rule_id: RuleId
    severity: Severity
    dwelling: str
    entity_path: str
    measured: Quantity
    required: Quantity
    comparator: str  # relation the measured value must satisfy: >=, <=, >, ==
    message: str
    remediation: Optional[str] = None

    def sort_key(self) -> tuple:
        return (self.dwelling, self.rule_id.value, self.entity_path, self.message)


def _finding(rule: RuleId, dwelling: str, path: str, measured: Quantity, required: Quantity,
             comparator: str, message: str, remediation: Optional[str] = None,
             severity: Severity = Severity.FAIL) -> Finding:
    return Finding(rule, severity, dwelling, path, measured, required, comparator,
                   message, remediation)


def _flag(rule: RuleId, dwelling: str, path: str, ok: bool, message: str,
          remediation: Optional[str] = None) -> list[Finding]:
    if ok:
        return []
    return [_finding(rule, dwelling, path, NO, YES, "==", message, remediation)]


def _cm(x: float) -> str:
    return f"{x:g} cm"


# -- site ---------------------------------------------------------------------

def check_site(site: Site) -> list[Finding]:
    out = []
    if not site.protected_perimeter_fraction > MIN_PROTECTED_PERIMETER:
        out.append(_finding(
            RuleId.SITE, "", "site.protected_perimeter_fraction",
            _q(site.protected_perimeter_fraction, "fraction"),
            _q(MIN_PROTECTED_PERIMETER, "fraction"), ">",
            "surroundings must be shaded on more than three quarters of the perimeter",
            "extend lawn, shrubs or planted sun-blocks around the building"))
    if not _at_least(site.protected_width_m, MIN_PROTECTED_WIDTH_M):
        out.append(_finding(
            RuleId.SITE, "", "site.protected_width_m",
            _q(site.protected_width_m, "m"), _q(MIN_PROTECTED_WIDTH_M, "m"), ">=",
            "shaded strip around the building is too narrow",
            f"widen the planted strip to {MIN_PROTECTED_WIDTH_M:g} m"))
    return out


# -- roof ---------------------------------------------------------------------

def check_roof(roof: RoofAssembly, *, path: str = "roof", dwelling: str = "") -> list[Finding]:
    ins = roof.insulation
    lam = ins.lambda_w_mk if ins else tables.POLYSTYRENE_LAMBDA
    installed = ins.thickness_cm if ins else 0.0
    ins_path = f"{path}.insulation.thickness_cm" if ins else f"{path}.insulation"
    out = []

    if roof.kind is RoofKind.SIMPLE:
        required = tables.roof_min_insulation(RoofKind.SIMPLE, roof.color, lam)
        if not _at_least(installed, required):
            out.append(_finding(
                RuleId.ROOF, dwelling, ins_path, _q(installed, "cm"), _q(required, "cm"), ">=",
                f"{roof.color.value} roof (α={roof.color.alpha}) with λ={lam:g} W/m.K "
                f"needs {_cm(required)} of insulation",
                f"increase insulation to {_cm(required)}"))
        return out

    vent = roof.loft_vent
    if vent is not None:
        ratio = vent.openings_area_m2 / vent.roof_area_m2
        if not _at_least(ratio, MIN_LOFT_VENT_RATIO):
            missing = MIN_LOFT_VENT_RATIO * vent.roof_area_m2 - vent.openings_area_m2
            out.append(_finding(
                RuleId.ROOF, dwelling, f"{path}.loft_vent", _q(ratio, "ratio"),
                _q(MIN_LOFT_VENT_RATIO, "ratio"), ">=",
                "loft vent openings / roof area is too small for a ventilated loft",
                f"add {missing:.2f} m² of vents spread along the perimeter"))

    required = tables.roof_min_insulation(RoofKind.VENTILATED_LOFT, roof.color, lam)
    fallback = required is None
    if fallback:
        required = tables.roof_min_insulation(RoofKind.SIMPLE, roof.color, lam)
    note = ("no prescription for this configuration; conservative fallback applied "
            "(simple-roof requirement)") if fallback else ""
    if not _at_least(installed, required):
        out.append(_finding(
            RuleId.ROOF, dwelling, ins_path, _q(installed, "cm"), _q(required, "cm"), ">=",
            note or f"ceiling under a {roof.color.value} ventilated loft needs {_cm(required)} "
                    f"of insulation (λ={lam:g} W/m.K)",
            f"increase insulation to {_cm(required)}"))
    elif fallback:
        out.append(_finding(
            RuleId.ROOF, dwelling, ins_path, _q(installed, "cm"), _q(required, "cm"), ">=",
            note, severity=Severity.WARN))
    return out


# -- walls and windows --------------------------------------------------------

def check_walls(dwelling: Dwelling, *, hemisphere: Hemisphere = Hemisphere.SOUTHERN,
                path: str = "dwellings[0]") -> list[Finding]:
    out = []
    for j, wall in enumerate(dwelling.walls):
        wp = f"{path}.walls[{j}]"
        if wall.vertical_shading_with_airgap:
            continue
        orient = tables.for_hemisphere(dwelling.facade(wall.facade_id).orientation, hemisphere)
        if wall.color is Color.DARK:
            out.append(_finding(
                RuleId.WALL, dwelling.id, f"{wp}.color", _q(wall.color.alpha, "α"),
                _q(Color.MEDIUM.alpha, "α"), "<=",
                f"no prescriptive path for a dark {orient.value} wall",
                "lighten the wall colour or provide vertical shading with an airgap"))
            continue
        ratio_req = tables.wall_min_overhang_ratio(wall.material, wall.color, orient)
        lam = wall.insulation.lambda_w_mk if wall.insulation else tables.POLYSTYRENE_LAMBDA
        ins_req = tables.wall_min_insulation(wall.material, wall.color, orient, lam)
        ratio = wall.canopy.d_m / wall.canopy.h_m if wall.canopy else 0.0
        thickness = wall.insulation.thickness_cm if wall.insulation else 0.0
        if (ratio_req == 0 or ins_req == 0 or _at_least(ratio, ratio_req)
                or _at_least(thickness, ins_req)):
            continue
        depth = f" (d >= {ratio_req * wall.canopy.h_m:.2f} m)" if wall.canopy else ""
        out.append(_finding(
            RuleId.WALL, dwelling.id, wp, _q(ratio, "ratio"), _q(ratio_req, "ratio"), ">=",
            f"{wall.color.value} {wall.material.value} wall facing {orient.value} is unprotected: "
            f"canopy d/h {ratio:.2f} < {ratio_req:g}, insulation {_cm(thickness)} < {_cm(ins_req)}",
            f"add a canopy with d/h >= {ratio_req:g}{depth}, or insulate to {_cm(ins_req)}, "
            "or add vertical shading with an airgap"))
    return out


def _principal_rooms(dwelling: Dwelling) -> dict[str, int]:
    return {r.name: j for j, r in enumerate(dwelling.rooms) if r.kind is RoomKind.PRINCIPAL}


def check_windows(dwelling: Dwelling, *, hemisphere: Hemisphere = Hemisphere.SOUTHERN,
                  path: str = "dwellings[0]") -> list[Finding]:
    principal = _principal_rooms(dwelling)
    out = []
    for j, op in enumerate(dwelling.openings):
        if not op.external or op.room not in principal or op.other_shading_device:
            continue
        orient = tables.for_hemisphere(dwelling.facade(op.facade_id).orientation, hemisphere)
        required = tables.window_min_shading_ratio(orient)
        a = op.shading.a_m if op.shading else 0.0
        ratio = op.shading.d_m / (2 * a + op.height_m) if op.shading else 0.0
        if _at_least(ratio, required):
            continue
        out.append(_finding(
            RuleId.WIN, dwelling.id, f"{path}.openings[{j}]", _q(ratio, "ratio"),
            _q(required, "ratio"), ">=",
            f"opening {op.id!r} of {op.room!r} facing {orient.value} is not shaded enough",
            f"add a canopy at least {required * (2 * a + op.height_m):.2f} m deep, "
            "or fit venetian blinds or opaque mobile strips"))
    return out


# -- ventilation --------------------------------------------------------------

@dataclass(frozen=True)
class PermeabilitySummary:
    facade_1: str
    facade_2: str
    so1_m2: float
    so2_m2: float
    sp1_m2: float
    sp2_m2: float
    sp_m2: float
    si1_m2: float
    si2_m2: float
    p1: float
    p2: float

    def rounded(self, ndigits: int = 4) -> "PermeabilitySummary":
        return PermeabilitySummary(self.facade_1, self.facade_2, *(
            round(getattr(self, name), ndigits) for name in (
                "so1_m2", "so2_m2", "sp1_m2", "sp2_m2", "sp_m2", "si1_m2", "si2_m2", "p1", "p2")))


def compute_permeability(dwelling: Dwelling, facade_pair: tuple[str, str]) -> PermeabilitySummary:
    """Exterior and interior permeability of one dwelling level across a facade pair."""
    principal = _principal_rooms(dwelling)
    if not principal:
        raise ValueError(f"dwelling {dwelling.id!r} has no principal room")
    f1, f2 = facade_pair
    if dwelling.facade(f1).opposite_facade_id != f2:
        raise ValueError(f"facades {f1!r} and {f2!r} are not declared opposite")

    def side(fid: str) -> tuple[float, float, float]:
        ext = [op for op in dwelling.openings
               if op.external and op.facade_id == fid and op.room in principal]
        rooms = {op.room for op in ext}
        so = sum(op.net_area_m2 for op in ext)
        sp = sum(dwelling.rooms[principal[name]].floor_area_m2 for name in rooms)
        si = sum(op.net_area_m2 for op in dwelling.openings
                 if not op.external and op.room in rooms)
        return so, sp, si

    so1, sp1, si1 = side(f1)
    so2, sp2, si2 = side(f2)
    sp = (sp1 + sp2) / 2
    p1 = so1 / sp if sp > 0 else 0.0
    p2 = so2 / sp if sp > 0 else 0.0
    return PermeabilitySummary(f1, f2, so1, so2, sp1, sp2, sp, si1, si2, p1, p2)


def opposite_pairs(dwelling: Dwelling) -> list[tuple[str, str]]:
    pairs = []
    for facade in dwelling.facades:
        other = facade.opposite_facade_id
        if other is not None and (other, facade.id) not in pairs:
            pairs.append((facade.id, other))
    return pairs


def ventilation_pair(dwelling: Dwelling) -> Optional[PermeabilitySummary]:
    """Best-ventilated opposite facade pair with principal-room openings on both sides."""
    best = None
    for pair in opposite_pairs(dwelling):
        s = compute_permeability(dwelling, pair)
        if s.so1_m2 <= 0 or s.so2_m2 <= 0:
            continue
        if best is None or min(s.p1, s.p2) > min(best.p1, best.p2):
            best = s
    return best


def check_ventilation(dwelling: Dwelling, *, path: str = "dwellings[0]") -> list[Finding]:
    out = []
    principal = _principal_rooms(dwelling)
    with_external = {op.room for op in dwelling.openings if op.external}
    for name, j in principal.items():
        if name not in with_external:
            out.append(_finding(
                RuleId.VENT, dwelling.id, f"{path}.rooms[{j}]", _q(0.0, "m²"), _q(0.0, "m²"), ">",
                f"principal room {name!r} has no external opening",
                "open the room onto an outside facade"))

    summary = ventilation_pair(dwelling)
    if summary is None:
        sides = 0
        for pair in opposite_pairs(dwelling):
            s = compute_permeability(dwelling, pair)
            sides = max(sides, (s.so1_m2 > 0) + (s.so2_m2 > 0))
        out.append(_finding(
            RuleId.VENT, dwelling.id, f"{path}.facades", _q(sides, "facades"),
            _q(2, "facades"), ">=",
            "no cross ventilation: principal rooms need openings on two opposing facades",
            "add principal-room openings on the opposite facade and declare opposite_facade_id"))
        return out

    required = MIN_PERMEABILITY * summary.sp_m2
    index = {f.id: k for k, f in enumerate(dwelling.facades)}
    sides = ((1, summary.facade_1, summary.so1_m2, summary.p1, summary.si1_m2),
             (2, summary.facade_2, summary.so2_m2, summary.p2, summary.si2_m2))
    for k, fid, so, p, _si in sides:
        if not _at_least(so, required):
            out.append(_finding(
                RuleId.VENT, dwelling.id, f"{path}.facades[{index[fid]}]", _q(so, "m²"),
                _q(required, "m²"), ">=",
                f"exterior permeability P{k} = {p:.3f} < {MIN_PERMEABILITY:g} on facade {fid!r} "
                f"(Sp = {summary.sp_m2:g} m²)",
                f"replace windows with door-windows to add {required - so:.2f} m² "
                f"of principal-room openings on facade {fid!r}"))
    limiting = min(summary.so1_m2, summary.so2_m2)
    for k, fid, _so, _p, si in sides:
        if not _at_least(si, limiting):
            out.append(_finding(
                RuleId.VENT, dwelling.id, f"{path}.facades[{index[fid]}]", _q(si, "m²"),
                _q(limiting, "m²"), ">=",
                f"interior openings Si{k} on the facade {fid!r} side are smaller than the "
                "limiting external opening area",
                f"widen internal doors or partition openings by {limiting - si:.2f} m²"))
    return out


def check_fans(dwelling: Dwelling, *, path: str = "dwellings[0]") -> list[Finding]:
    out = []
    for j, room in enumerate(dwelling.rooms):
        rp = f"{path}.rooms[{j}]"
        out += _flag(RuleId.FAN, dwelling.id, f"{rp}.has_fan_ceiling_wiring",
                     room.has_fan_ceiling_wiring,
                     f"room {room.name!r} lacks ceiling wiring for an air fan",
                     "provide a dedicated ceiling supply for a fan")
        out += _flag(RuleId.FAN, dwelling.id, f"{rp}.has_fan_wall_switch",
                     room.has_fan_wall_switch,
                     f"room {room.name!r} lacks a wall switch for the air fan",
                     "wire the fan supply to a wall switch")
    return out


# -- air conditioning ---------------------------------------------------------

def check_ac(dwelling: Dwelling, *, path: str = "dwellings[0]") -> list[Finding]:
    out = []
    for j, unit in enumerate(dwelling.ac_units):
        up = f"{path}.ac_units[{j}]"
        did = dwelling.id
        cop_min = MIN_COP[unit.kind]
        if not _at_least(unit.cooling_efficiency, cop_min):
            out.append(_finding(
                RuleId.AC, did, f"{up}.cooling_efficiency", _q(unit.cooling_efficiency, "COP"),
                _q(cop_min, "COP"), ">=",
                f"{unit.kind.value} in {unit.room!r} is not efficient enough",
                f"choose a unit with a cooling efficiency of at least {cop_min:g}"))
        limit = MAX_COOLING_W_PER_M2 * dwelling.room(unit.room).floor_area_m2
        if not _at_most(unit.cooling_power_w, limit):
            out.append(_finding(
                RuleId.AC, did, f"{up}.cooling_power_w", _q(unit.cooling_power_w, "W"),
                _q(limit, "W"), "<=",
                f"unit in {unit.room!r} is oversized ({MAX_COOLING_W_PER_M2:g} W/m² maximum)",
                f"choose a unit of at most {limit:g} W"))
        if not _at_least(unit.mech_air_renewal_m3h, MIN_AC_AIR_RENEWAL_M3H):
            out.append(_finding(
                RuleId.AC, did, f"{up}.mech_air_renewal_m3h", _q(unit.mech_air_renewal_m3h, "m³/h"),
                _q(MIN_AC_AIR_RENEWAL_M3H, "m³/h"), ">=",
                f"air-conditioned room {unit.room!r} lacks controlled air renewal",
                f"install a mechanical air renewal of {MIN_AC_AIR_RENEWAL_M3H:g} m³/h"))
        out += _flag(RuleId.AC, did, f"{up}.room_sealed", unit.room_sealed,
                     f"air-conditioned room {unit.room!r} is not closed",
                     "seal the room (closable doors and windows)")
        out += _flag(RuleId.AC, did, f"{up}.maintenance_contract", unit.maintenance_contract,
                     f"no maintenance contract for the unit in {unit.room!r}",
                     "sign a maintenance contract")
    return out


# -- domestic hot water -------------------------------------------------------

def check_dhw(dwelling: Dwelling, *, path: str = "dwellings[0]") -> list[Finding]:
    wh = dwelling.water_heater
    wp = f"{path}.water_heater"
    did = dwelling.id
    out: list[Finding] = []

    if wh.kind is WaterHeaterKind.ELECTRIC_INSTANT:
        return _flag(RuleId.DHW, did, f"{wp}.kind", False,
                     "instant electric water heaters are excluded",
                     "install a solar, electric storage or gas water heater")

    if wh.kind is WaterHeaterKind.SOLAR:
        s = wh.solar
        out += _flag(RuleId.DHW, did, f"{wp}.solar.cstb_certified", s.cstb_certified,
                     "solar water heater lacks CSTB technical approval")
        need = tables.solar_dhw_min_collector(dwelling.f_type)
        if not _at_least(s.collector_area_m2, need):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.solar.collector_area_m2", _q(s.collector_area_m2, "m²"),
                _q(need, "m²"), ">=", f"collector area too small for a {dwelling.f_type.value} dwelling",
                f"install at least {need:g} m² of collectors"))
        density = s.storage_l / s.collector_area_m2
        lo, hi = SOLAR_STORAGE_L_PER_M2
        if not _at_least(density, lo):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.solar.storage_l", _q(density, "L/m²"), _q(lo, "L/m²"), ">=",
                "solar storage is undersized for the collector area",
                f"use at least {lo * s.collector_area_m2:g} L of storage"))
        elif not _at_most(density, hi):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.solar.storage_l", _q(density, "L/m²"), _q(hi, "L/m²"), "<=",
                "solar storage is oversized for the collector area",
                f"use at most {hi * s.collector_area_m2:g} L of storage"))
        if not _at_least(s.annual_production_kwh_per_m2, MIN_SOLAR_PRODUCTION_KWH_M2):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.solar.annual_production_kwh_per_m2",
                _q(s.annual_production_kwh_per_m2, "kWh/m²"),
                _q(MIN_SOLAR_PRODUCTION_KWH_M2, "kWh/m²"), ">=",
                "conventional annual production per collector m² is too low"))
        return out

    if wh.kind is WaterHeaterKind.ELECTRIC_STORAGE:
        e = wh.electric
        req = tables.electric_dhw_requirements(dwelling.f_type)
        out += _flag(RuleId.DHW, did, f"{wp}.electric.nf_marked", e.nf_marked,
                     "electric water heater lacks the NF mark")
        if not _at_least(e.storage_l, req.min_storage_l):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.electric.storage_l", _q(e.storage_l, "L"),
                _q(req.min_storage_l, "L"), ">=",
                f"storage too small for a {dwelling.f_type.value} dwelling",
                f"install at least {req.min_storage_l:g} L"))
        if not _at_most(e.cooling_constant, req.max_cooling_constant):
            out.append(_finding(
                RuleId.DHW, did, f"{wp}.electric.cooling_constant", _q(e.cooling_constant, ""),
                _q(req.max_cooling_constant, ""), "<=",
                "standing losses too high (cooling constant)",
                f"choose a tank with a cooling constant of at most {req.max_cooling_constant:g}"))
        out += _flag(RuleId.DHW, did, f"{wp}.electric.three_position_switch",
                     e.three_position_switch,
                     "supply lacks the three-position switch (off-peak / override / off)")
        return out

    g = wh.gas
    out += _flag(RuleId.DHW, did, f"{wp}.gas.nf_marked", g.nf_marked,
                 "gas water heater lacks the NF mark")
    out += _flag(RuleId.DHW, did, f"{wp}.gas.flue_outlet", g.flue_outlet,
                 "no burnt-gas outlet provided")
    return out


# -- whole building -----------------------------------------------------------

class InvalidModelError(ValueError):
    def __init__(self, errors: list[ValidationError]):
        self.errors = errors
        super().__init__("; ".join(map(str, errors)))


ALL_RULES = frozenset(RuleId)


def check_dwelling(dwelling: Dwelling, *, hemisphere: Hemisphere, path: str,
                   rules: Iterable[RuleId] = ALL_RULES) -> list[Finding]:
    rules = set(rules)
    out: list[Finding] = []
    if RuleId.ROOF in rules:
        out += check_roof(dwelling.roof, path=f"{path}.roof", dwelling=dwelling.id)
    if RuleId.WALL in rules:
        out += check_walls(dwelling, hemisphere=hemisphere, path=path)
    if RuleId.WIN in rules:
        out += check_windows(dwelling, hemisphere=hemisphere, path=path)
    if RuleId.VENT in rules:
        out += check_ventilation(dwelling, path=path)
    if RuleId.FAN in rules:
        out += check_fans(dwelling, path=path)
    if RuleId.AC in rules:
        out += check_ac(dwelling, path=path)
    if RuleId.DHW in rules:
        out += check_dhw(dwelling, path=path)
    return out


def evaluate(building: BuildingModel, rules: Iterable[RuleId] = ALL_RULES) -> list[Finding]:
    """All findings for a valid model, in report order."""
    rules = set(rules)
    out = check_site(building.site) if RuleId.SITE in rules else []
    for i, dwelling in enumerate(building.dwellings):
        out += check_dwelling(dwelling, hemisphere=building.site.hemisphere,
                              path=f"dwellings[{i}]", rules=rules)
    return sorted(out, key=Finding.sort_key)


def check_all(building: BuildingModel,
              rules: Optional[Iterable[RuleId]] = None) -> "ComplianceReport":
    from .report import build_report

    errors = validate_model(building)
    if errors:
        raise InvalidModelError(errors)
    findings = evaluate(building, ALL_RULES if rules is None else rules)
    summaries = {d.id: ventilation_pair(d) for d in building.dwellings}
    return build_report(building, findings, summaries)
