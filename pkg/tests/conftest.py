from pathlib import Path

import pytest

from ecodom.ingest import parse_building
from ecodom.model import (
    ACKind,
    ACUnit,
    BuildingModel,
    Canopy,
    Color,
    Dwelling,
    ElectricHeater,
    Facade,
    FType,
    GasHeater,
    Hemisphere,
    Insulation,
    LoftVent,
    OpeningUnit,
    Placement,
    RoofAssembly,
    RoofKind,
    Room,
    RoomKind,
    Site,
    WallAssembly,
    WallMaterial,
    WaterHeater,
    WaterHeaterKind,
    WindowShading,
)

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> BuildingModel:
    return parse_building((FIXTURES / name).read_text(encoding="utf-8"))


def room(name, area, kind=RoomKind.PRINCIPAL, height=2.5, wired=True, switched=True):
    return Room(name, kind, area, area * height, wired, switched)


def ext(id, room, facade, area, height=2.2, d=None, a=0.0, blinds=False):
    shading = WindowShading(d, a) if d is not None else None
    return OpeningUnit(id, room, Placement.EXTERNAL, area, height, facade, shading, blinds)


def internal(id, room, area, height=2.0):
    return OpeningUnit(id, room, Placement.INTERNAL, area, height)


def dwelling_d1() -> Dwelling:
    """F3, ventilated loft, electric storage heater, split AC; cross ventilated E-W."""
    return Dwelling(
        id="D1",
        f_type=FType.F3,
        rooms=(
            room("bed1", 12.0),
            room("bed2", 10.0),
            room("living", 18.0),
            room("kitchen", 8.0, RoomKind.SERVICE),
            room("corridor", 5.0, RoomKind.SERVICE),
        ),
        facades=(
            Facade("E", 90.0, "W"),
            Facade("W", 270.0, "E"),
            Facade("N", 0.0),
            Facade("S", 180.0),
        ),
        walls=(
            WallAssembly("E", WallMaterial.CONCRETE_20CM, Color.LIGHT, canopy=Canopy(1.2, 2.5)),
            WallAssembly("W", WallMaterial.CONCRETE_20CM, Color.LIGHT,
                         insulation=Insulation(0.029, 1.0)),
            WallAssembly("N", WallMaterial.WOOD, Color.LIGHT),
            WallAssembly("S", WallMaterial.CONCRETE_20CM, Color.LIGHT,
                         vertical_shading_with_airgap=True),
        ),
        roof=RoofAssembly(RoofKind.VENTILATED_LOFT, Color.LIGHT, loft_vent=LoftVent(10.0, 60.0)),
        openings=(
            ext("bed1-e", "bed1", "E", 4.0, d=1.8),
            ext("living-e", "living", "E", 4.0, d=1.8),
            ext("bed2-w", "bed2", "W", 3.5, blinds=True),
            ext("living-w", "living", "W", 4.0, d=2.3),
            ext("kitchen-n", "kitchen", "N", 1.0, height=1.0),
            internal("bed1-door", "bed1", 2.0),
            internal("bed2-door", "bed2", 2.0),
            internal("living-arch", "living", 6.0),
        ),
        water_heater=WaterHeater(
            WaterHeaterKind.ELECTRIC_STORAGE,
            electric=ElectricHeater(150.0, 0.23, nf_marked=True, three_position_switch=True)),
        ac_units=(
            ACUnit("bed1", ACKind.SPLIT_SYSTEM, 3.2, 900.0, room_sealed=True,
                   mech_air_renewal_m3h=30.0, maintenance_contract=True),
        ),
    )


def dwelling_d2() -> Dwelling:
    """F1 studio, simple polyurethane roof, gas heater, window AC; cross ventilated N-S."""
    return Dwelling(
        id="D2",
        f_type=FType.F1,
        rooms=(room("main", 20.0), room("bath", 4.0, RoomKind.SERVICE)),
        facades=(Facade("N", 0.0, "S"), Facade("S", 180.0, "N")),
        walls=(
            WallAssembly("N", WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.MEDIUM,
                         canopy=Canopy(1.4, 2.5)),
            WallAssembly("S", WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.MEDIUM,
                         insulation=Insulation(0.041, 2.0)),
        ),
        roof=RoofAssembly(RoofKind.SIMPLE, Color.LIGHT, insulation=Insulation(0.029, 4.0)),
        openings=(
            ext("main-n", "main", "N", 5.0, d=1.4),
            ext("main-s", "main", "S", 5.0, blinds=True),
            internal("main-bath", "main", 5.5),
        ),
        water_heater=WaterHeater(WaterHeaterKind.GAS, gas=GasHeater(True, True)),
        ac_units=(
            ACUnit("main", ACKind.WINDOW_UNIT, 2.6, 1500.0, room_sealed=True,
                   mech_air_renewal_m3h=25.0, maintenance_contract=True),
        ),
    )


def compliant_building(hemisphere=Hemisphere.SOUTHERN) -> BuildingModel:
    return BuildingModel(
        site=Site(hemisphere, 0.8, 3.0),
        dwellings=(dwelling_d1(), dwelling_d2()),
    )


@pytest.fixture
def building():
    return compliant_building()


@pytest.fixture
def initial():
    return load_fixture("ladecouverte_initial.json")


@pytest.fixture
def modified():
    return load_fixture("ladecouverte_modified.json")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
