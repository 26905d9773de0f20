"""Domain types for a building submitted to the ECODOM checker.

Everything here is plain immutable data.  Construction never validates;
:func:`validate_model` reports every broken invariant with an entity path so
that a model read from a file can be diagnosed in one pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class Hemisphere(str, Enum):
    SOUTHERN = "southern"
    NORTHERN = "northern"


class FType(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6PLUS = "F6plus"


class RoomKind(str, Enum):
    PRINCIPAL = "principal"
    SERVICE = "service"


class WallMaterial(str, Enum):
    CONCRETE_20CM = "concrete_20cm"
    HOLLOW_CONCRETE_BLOCKS = "hollow_concrete_blocks"
    WOOD = "wood"

    @property
    def base_resistance(self) -> float:
        """Thermal resistance of the bare wall, m²·K/W."""
        return _BASE_RESISTANCE[self]


_BASE_RESISTANCE = {
    WallMaterial.CONCRETE_20CM: 0.1,
    WallMaterial.HOLLOW_CONCRETE_BLOCKS: 0.2,
    WallMaterial.WOOD: 0.5,
}


class Color(str, Enum):
    LIGHT = "light"
    MEDIUM = "medium"
    DARK = "dark"

    @property
    def alpha(self) -> float:
        """Solar absorptivity of the colour bucket."""
        return {"light": 0.4, "medium": 0.6, "dark": 0.8}[self.value]

    @classmethod
    def from_alpha(cls, alpha: float) -> "Color":
        if alpha <= 0.5:
            return cls.LIGHT
        if alpha <= 0.7:
            return cls.MEDIUM
        return cls.DARK


class RoofKind(str, Enum):
    # terrace, inclined roof without loft, closed or barely ventilated loft
    SIMPLE = "simple"
    VENTILATED_LOFT = "ventilated_loft"


class Placement(str, Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"


class WaterHeaterKind(str, Enum):
    SOLAR = "solar"
    ELECTRIC_STORAGE = "electric_storage"
    ELECTRIC_INSTANT = "electric_instant"
    GAS = "gas"


class ACKind(str, Enum):
    WINDOW_UNIT = "window_unit"
    SPLIT_SYSTEM = "split_system"


class Orientation(str, Enum):
    """Cardinal orientation used by the prescriptive tables."""

    EAST = "East"
    SOUTH = "South"
    WEST = "West"
    NORTH = "North"

    @classmethod
    def from_degrees(cls, degrees: float) -> "Orientation":
        # 90° sectors centred on N/E/S/W; a 45° boundary goes clockwise
        sector = int(math.floor(((degrees % 360.0) + 45.0) / 90.0)) % 4
        return (cls.NORTH, cls.EAST, cls.SOUTH, cls.WEST)[sector]


@dataclass(frozen=True)
class Site:
    hemisphere: Hemisphere
    protected_perimeter_fraction: float
    protected_width_m: float


@dataclass(frozen=True)
class Room:
    name: str
    kind: RoomKind
    floor_area_m2: float
    volume_m3: float
    has_fan_ceiling_wiring: bool
    has_fan_wall_switch: bool


@dataclass(frozen=True)
class Facade:
    id: str
    orientation_deg: float
    opposite_facade_id: Optional[str] = None

    @property
    def orientation(self) -> Orientation:
        return Orientation.from_degrees(self.orientation_deg)


@dataclass(frozen=True)
class Canopy:
    d_m: float
    h_m: float


@dataclass(frozen=True)
class Insulation:
    lambda_w_mk: float
    thickness_cm: float


@dataclass(frozen=True)
class WallAssembly:
    facade_id: str
    material: WallMaterial
    color: Color
    canopy: Optional[Canopy] = None
    insulation: Optional[Insulation] = None
    vertical_shading_with_airgap: bool = False


@dataclass(frozen=True)
class LoftVent:
    openings_area_m2: float
    roof_area_m2: float


@dataclass(frozen=True)
class RoofAssembly:
    kind: RoofKind
    color: Color
    insulation: Optional[Insulation] = None
    loft_vent: Optional[LoftVent] = None


@dataclass(frozen=True)
class WindowShading:
    d_m: float
    a_m: float = 0.0


@dataclass(frozen=True)
class OpeningUnit:
    id: str
    room: str
    placement: Placement
    net_area_m2: float
    height_m: float
    facade_id: Optional[str] = None
    shading: Optional[WindowShading] = None
    other_shading_device: bool = False

    @property
    def external(self) -> bool:
        return self.placement is Placement.EXTERNAL


@dataclass(frozen=True)
class SolarHeater:
    collector_area_m2: float
    storage_l: float
    annual_production_kwh_per_m2: float
    cstb_certified: bool


@dataclass(frozen=True)
class ElectricHeater:
    storage_l: float
    cooling_constant: float
    nf_marked: bool
    three_position_switch: bool


@dataclass(frozen=True)
class GasHeater:
    nf_marked: bool
    flue_outlet: bool


@dataclass(frozen=True)
class WaterHeater:
    kind: WaterHeaterKind
    solar: Optional[SolarHeater] = None
    electric: Optional[ElectricHeater] = None
    gas: Optional[GasHeater] = None


@dataclass(frozen=True)
class ACUnit:
    room: str
    kind: ACKind
    cooling_efficiency: float
    cooling_power_w: float
    room_sealed: bool
    mech_air_renewal_m3h: float
    maintenance_contract: bool


@dataclass(frozen=True)
class Dwelling:
    id: str
    f_type: FType
    rooms: tuple[Room, ...]
    facades: tuple[Facade, ...]
    walls: tuple[WallAssembly, ...]
    roof: RoofAssembly
    openings: tuple[OpeningUnit, ...]
    water_heater: WaterHeater
    ac_units: tuple[ACUnit, ...] = ()

    def room(self, name: str) -> Room:
        for room in self.rooms:
            if room.name == name:
                return room
        raise KeyError(name)

    def facade(self, facade_id: str) -> Facade:
        for facade in self.facades:
            if facade.id == facade_id:
                return facade
        raise KeyError(facade_id)

    def facade_index(self, facade_id: str) -> int:
        return [f.id for f in self.facades].index(facade_id)


@dataclass(frozen=True)
class BuildingModel:
    site: Site
    dwellings: tuple[Dwelling, ...] = ()
    schema_version: int = 1


@dataclass(frozen=True)
class ValidationError:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


MAX_OPENING_AREA_M2 = 20.0
CEILING_HEIGHT_BAND_M = (2.0, 5.0)


@dataclass
class _Collector:
    errors: list[ValidationError] = field(default_factory=list)

    def add(self, path: str, message: str) -> None:
        self.errors.append(ValidationError(path, message))

    def positive(self, path: str, value: float) -> None:
        if not _finite(value) or value <= 0:
            self.add(path, f"must be > 0, got {value!r}")

    def non_negative(self, path: str, value: float) -> None:
        if not _finite(value) or value < 0:
            self.add(path, f"must be >= 0, got {value!r}")


def _finite(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)


def validate_model(building: BuildingModel) -> list[ValidationError]:
    """Return every invariant violation in ``building``, in document order.

    An empty list means the model is safe to hand to the rule engine.
    """
    out = _Collector()
    if building.schema_version != 1:
        out.add("schema_version", f"unsupported schema version {building.schema_version!r}")
    _validate_site(out, building.site)
    seen: set[str] = set()
    for i, dwelling in enumerate(building.dwellings):
        path = f"dwellings[{i}]"
        if dwelling.id in seen:
            out.add(f"{path}.id", f"duplicate dwelling id {dwelling.id!r}")
        seen.add(dwelling.id)
        _validate_dwelling(out, path, dwelling)
    return out.errors


def _validate_site(out: _Collector, site: Site) -> None:
    frac = site.protected_perimeter_fraction
    if not _finite(frac) or not 0.0 <= frac <= 1.0:
        out.add("site.protected_perimeter_fraction", f"must be within [0, 1], got {frac!r}")
    out.non_negative("site.protected_width_m", site.protected_width_m)


def _validate_insulation(out: _Collector, path: str, ins: Optional[Insulation]) -> None:
    if ins is None:
        return
    out.positive(f"{path}.lambda_w_mk", ins.lambda_w_mk)
    out.non_negative(f"{path}.thickness_cm", ins.thickness_cm)


def _validate_dwelling(out: _Collector, path: str, d: Dwelling) -> None:
    if not d.id:
        out.add(f"{path}.id", "must be non-empty")

    room_names: set[str] = set()
    for j, room in enumerate(d.rooms):
        rp = f"{path}.rooms[{j}]"
        if room.name in room_names:
            out.add(f"{rp}.name", f"duplicate room name {room.name!r}")
        room_names.add(room.name)
        out.positive(f"{rp}.floor_area_m2", room.floor_area_m2)
        out.positive(f"{rp}.volume_m3", room.volume_m3)
        if _finite(room.floor_area_m2) and _finite(room.volume_m3) \
                and room.floor_area_m2 > 0 and room.volume_m3 > 0:
            height = room.volume_m3 / room.floor_area_m2
            lo, hi = CEILING_HEIGHT_BAND_M
            if not lo <= height <= hi:
                out.add(f"{rp}.volume_m3",
                        f"volume/floor area = {height:.2f} m is outside [{lo}, {hi}] m")
    if not any(r.kind is RoomKind.PRINCIPAL for r in d.rooms):
        out.add(f"{path}.rooms", "dwelling needs at least one principal room")

    facade_ids: dict[str, Facade] = {}
    for j, facade in enumerate(d.facades):
        fp = f"{path}.facades[{j}]"
        if facade.id in facade_ids:
            out.add(f"{fp}.id", f"duplicate facade id {facade.id!r}")
        facade_ids.setdefault(facade.id, facade)
        if not _finite(facade.orientation_deg) or not 0.0 <= facade.orientation_deg < 360.0:
            out.add(f"{fp}.orientation_deg",
                    f"must be within [0, 360), got {facade.orientation_deg!r}")
    for j, facade in enumerate(d.facades):
        other_id = facade.opposite_facade_id
        if other_id is None:
            continue
        fp = f"{path}.facades[{j}].opposite_facade_id"
        other = facade_ids.get(other_id)
        if other is None:
            out.add(fp, f"references unknown facade {other_id!r}")
        elif other_id == facade.id:
            out.add(fp, "a facade cannot be opposite to itself")
        elif other.opposite_facade_id != facade.id:
            out.add(fp, f"facade {other_id!r} does not reference {facade.id!r} back")

    for j, wall in enumerate(d.walls):
        wp = f"{path}.walls[{j}]"
        if wall.facade_id not in facade_ids:
            out.add(f"{wp}.facade_id", f"references unknown facade {wall.facade_id!r}")
        if wall.canopy is not None:
            out.positive(f"{wp}.canopy.d_m", wall.canopy.d_m)
            out.positive(f"{wp}.canopy.h_m", wall.canopy.h_m)
        _validate_insulation(out, f"{wp}.insulation", wall.insulation)

    roof = d.roof
    _validate_insulation(out, f"{path}.roof.insulation", roof.insulation)
    if roof.kind is RoofKind.VENTILATED_LOFT and roof.loft_vent is None:
        out.add(f"{path}.roof.loft_vent", "required for a ventilated loft")
    if roof.loft_vent is not None:
        out.positive(f"{path}.roof.loft_vent.openings_area_m2", roof.loft_vent.openings_area_m2)
        out.positive(f"{path}.roof.loft_vent.roof_area_m2", roof.loft_vent.roof_area_m2)

    opening_ids: set[str] = set()
    for j, op in enumerate(d.openings):
        op_path = f"{path}.openings[{j}]"
        if op.id in opening_ids:
            out.add(f"{op_path}.id", f"duplicate opening id {op.id!r}")
        opening_ids.add(op.id)
        if op.room not in room_names:
            out.add(f"{op_path}.room", f"references unknown room {op.room!r}")
        if op.external:
            if op.facade_id is None:
                out.add(f"{op_path}.facade_id", "required for an external opening")
            elif op.facade_id not in facade_ids:
                out.add(f"{op_path}.facade_id", f"references unknown facade {op.facade_id!r}")
        elif op.facade_id is not None:
            out.add(f"{op_path}.facade_id", "an internal opening has no facade")
        out.positive(f"{op_path}.net_area_m2", op.net_area_m2)
        if _finite(op.net_area_m2) and op.net_area_m2 > MAX_OPENING_AREA_M2:
            out.add(f"{op_path}.net_area_m2",
                    f"must be <= {MAX_OPENING_AREA_M2:g} m², got {op.net_area_m2!r}")
        out.positive(f"{op_path}.height_m", op.height_m)
        if op.shading is not None:
            out.non_negative(f"{op_path}.shading.d_m", op.shading.d_m)
            out.non_negative(f"{op_path}.shading.a_m", op.shading.a_m)

    _validate_water_heater(out, f"{path}.water_heater", d.water_heater)

    for j, unit in enumerate(d.ac_units):
        up = f"{path}.ac_units[{j}]"
        if unit.room not in room_names:
            out.add(f"{up}.room", f"references unknown room {unit.room!r}")
        out.positive(f"{up}.cooling_efficiency", unit.cooling_efficiency)
        out.positive(f"{up}.cooling_power_w", unit.cooling_power_w)
        out.non_negative(f"{up}.mech_air_renewal_m3h", unit.mech_air_renewal_m3h)


_PAYLOAD_FOR_KIND = {
    WaterHeaterKind.SOLAR: "solar",
    WaterHeaterKind.ELECTRIC_STORAGE: "electric",
    WaterHeaterKind.ELECTRIC_INSTANT: "electric",
    WaterHeaterKind.GAS: "gas",
}


def _validate_water_heater(out: _Collector, path: str, wh: WaterHeater) -> None:
    expected = _PAYLOAD_FOR_KIND[wh.kind]
    for name in ("solar", "electric", "gas"):
        present = getattr(wh, name) is not None
        if name == expected and not present:
            out.add(f"{path}.{name}", f"required for kind {wh.kind.value!r}")
        elif name != expected and present:
            out.add(f"{path}.{name}", f"not allowed for kind {wh.kind.value!r}")
    if wh.solar is not None:
        out.positive(f"{path}.solar.collector_area_m2", wh.solar.collector_area_m2)
        out.non_negative(f"{path}.solar.storage_l", wh.solar.storage_l)
        out.non_negative(f"{path}.solar.annual_production_kwh_per_m2",
                         wh.solar.annual_production_kwh_per_m2)
    if wh.electric is not None:
        out.non_negative(f"{path}.electric.storage_l", wh.electric.storage_l)
        out.non_negative(f"{path}.electric.cooling_constant", wh.electric.cooling_constant)
