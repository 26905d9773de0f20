import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecodom import tables
from ecodom.model import Color, FType, Hemisphere, Orientation, RoofKind, WallMaterial

E, S, W, N = Orientation.EAST, Orientation.SOUTH, Orientation.WEST, Orientation.NORTH
ORIENTS = (E, S, W, N)
CON, HOL, WOOD = (WallMaterial.CONCRETE_20CM, WallMaterial.HOLLOW_CONCRETE_BLOCKS,
                  WallMaterial.WOOD)
LIGHT, MEDIUM, DARK = Color.LIGHT, Color.MEDIUM, Color.DARK

# transcribed from the reference document, row by row (E, S, W, N)
OVERHANG_ROWS = {
    (CON, LIGHT): (0.4, 0.2, 0.7, 0.5), (CON, MEDIUM): (1, 0.5, 1.3, 0.7),
    (HOL, LIGHT): (0.1, 0.1, 0.3, 0.2), (HOL, MEDIUM): (0.5, 0.3, 0.8, 0.5),
    (WOOD, LIGHT): (0, 0, 0, 0), (WOOD, MEDIUM): (0, 0, 0.2, 0.1),
}
INSULATION_ROWS = {
    (CON, LIGHT): (1, 1, 1, 1), (CON, MEDIUM): (2, 1, 2, 2),
    (HOL, LIGHT): (1, 1, 1, 1), (HOL, MEDIUM): (1, 1, 2, 2),
    (WOOD, LIGHT): (0, 0, 0, 0), (WOOD, MEDIUM): (0, 0, 1, 1),
}
OVERHANG_CELLS = [(m, c, o, v) for (m, c), row in OVERHANG_ROWS.items() for o, v in zip(ORIENTS, row)]
INSULATION_CELLS = [(m, c, o, v) for (m, c), row in INSULATION_ROWS.items()
                    for o, v in zip(ORIENTS, row)]
ROOF_CELLS = [
    (RoofKind.SIMPLE, LIGHT, 0.041, 5), (RoofKind.SIMPLE, LIGHT, 0.029, 4),
    (RoofKind.SIMPLE, MEDIUM, 0.041, 8), (RoofKind.SIMPLE, MEDIUM, 0.029, 6),
    (RoofKind.SIMPLE, DARK, 0.041, 10), (RoofKind.SIMPLE, DARK, 0.029, 8),
    (RoofKind.VENTILATED_LOFT, LIGHT, 0.041, 0), (RoofKind.VENTILATED_LOFT, LIGHT, 0.029, 0),
    (RoofKind.VENTILATED_LOFT, MEDIUM, 0.041, 2), (RoofKind.VENTILATED_LOFT, MEDIUM, 0.029, 0),
]
WINDOW_CELLS = [(E, 0.8), (S, 0.3), (W, 1.0), (N, 0.6)]
SOLAR_CELLS = [(FType.F1, 1.5), (FType.F2, 1.5), (FType.F3, 2.0), (FType.F4, 2.5),
               (FType.F5, 3.0), (FType.F6PLUS, 3.5)]
ELECTRIC_CELLS = [(FType.F1, 100, 0.32), (FType.F2, 100, 0.32), (FType.F3, 150, 0.23),
                  (FType.F4, 200, 0.22), (FType.F5, 250, 0.22), (FType.F6PLUS, 300, 0.22)]


def test_cell_counts():
    assert len(ROOF_CELLS) == 10
    assert len(OVERHANG_CELLS) == 24
    assert len(INSULATION_CELLS) == 24
    assert len(WINDOW_CELLS) == 4


@pytest.mark.parametrize("kind,color,lam,expected", ROOF_CELLS)
def test_roof_golden(kind, color, lam, expected):
    assert tables.roof_min_insulation(kind, color, lam) == expected


@pytest.mark.parametrize("material,color,orient,expected", OVERHANG_CELLS)
def test_wall_overhang_golden(material, color, orient, expected):
    assert tables.wall_min_overhang_ratio(material, color, orient) == expected


@pytest.mark.parametrize("material,color,orient,expected", INSULATION_CELLS)
def test_wall_insulation_golden(material, color, orient, expected):
    assert tables.wall_min_insulation(material, color, orient) == expected


@pytest.mark.parametrize("orient,expected", WINDOW_CELLS)
def test_window_golden(orient, expected):
    assert tables.window_min_shading_ratio(orient) == expected


@pytest.mark.parametrize("f_type,expected", SOLAR_CELLS)
def test_solar_golden(f_type, expected):
    assert tables.solar_dhw_min_collector(f_type) == expected


@pytest.mark.parametrize("f_type,storage,constant", ELECTRIC_CELLS)
def test_electric_golden(f_type, storage, constant):
    req = tables.electric_dhw_requirements(f_type)
    assert (req.min_storage_l, req.max_cooling_constant) == (storage, constant)


def test_no_data_cells():
    assert tables.roof_min_insulation(RoofKind.VENTILATED_LOFT, DARK, 0.041) is None
    for m in WallMaterial:
        for o in ORIENTS:
            assert tables.wall_min_overhang_ratio(m, DARK, o) is None
            assert tables.wall_min_insulation(m, DARK, o) is None


def test_roof_scaled_for_other_conductivity():
    assert tables.roof_min_insulation(RoofKind.SIMPLE, LIGHT, 0.0505) == 6.2
    # resistance of the rounded-up thickness covers the tabulated polystyrene one
    assert 6.2 / 0.0505 >= 5 / 0.041
    assert 6.1 / 0.0505 < 5 / 0.041


def _brute_ceiling_tenth(x):
    k = 0
    while k / 10 < x - 1e-12:
        k += 1
    return k / 10


@given(st.floats(0.042, 0.2), st.sampled_from([LIGHT, MEDIUM, DARK]))
def test_roof_scaling_matches_resistance_oracle(lam, color):
    t_ps = {LIGHT: 5, MEDIUM: 8, DARK: 10}[color]
    got = tables.roof_min_insulation(RoofKind.SIMPLE, color, lam)
    assert got == pytest.approx(_brute_ceiling_tenth(t_ps * lam / 0.041))
    assert got / lam >= t_ps / 0.041 - 1e-12


@given(st.floats(0.005, 0.2), st.floats(0.005, 0.2),
       st.sampled_from(list(tables.ROOF_INSULATION_CM)))
@settings(max_examples=300)
def test_roof_scaling_monotone(l1, l2, key):
    l1, l2 = sorted((l1, l2))
    assert tables.roof_min_insulation(*key, l1) <= tables.roof_min_insulation(*key, l2)


@given(st.floats(0.005, 0.2), st.floats(0.005, 0.2))
def test_wall_scaling_monotone(l1, l2):
    l1, l2 = sorted((l1, l2))
    for o in ORIENTS:
        assert tables.wall_min_insulation(CON, MEDIUM, o, l1) <= \
            tables.wall_min_insulation(CON, MEDIUM, o, l2)


def test_wall_insulation_scaled():
    # 2 cm at 0.041 -> 2 * 0.035 / 0.041 = 1.707 -> 1.8
    assert tables.wall_min_insulation(CON, MEDIUM, E, 0.035) == 1.8


@pytest.mark.parametrize("deg,expected", [
    (0, N), (44.9, N), (45, E), (90, E), (134.9, E), (135, S), (180, S),
    (225, W), (270, W), (314.9, W), (315, N), (359.9, N),
])
def test_orientation_snapping(deg, expected):
    assert Orientation.from_degrees(deg) is expected


def test_hemisphere_swap():
    assert tables.for_hemisphere(N, Hemisphere.NORTHERN) is S
    assert tables.for_hemisphere(S, Hemisphere.NORTHERN) is N
    assert tables.for_hemisphere(E, Hemisphere.NORTHERN) is E
    assert tables.for_hemisphere(N, Hemisphere.SOUTHERN) is N


def test_tables_dump_covers_every_cell():
    d = tables.tables_as_dict()
    assert len(d["roof_insulation_cm"]) == 10
    assert len(d["wall_overhang_ratio"]) == 24
    assert len(d["wall_insulation_cm"]) == 24
    assert len(d["window_shading_ratio"]) == 4
    assert len(d["solar_dhw_min_collector_m2"]) == 6
    assert len(d["electric_dhw"]) == 6
    assert "1.3" in tables.render_tables_text()


def test_ceil_tenth_ignores_float_noise():
    assert tables.ceil_tenth(0.1 * 3) == 0.3
    assert tables.ceil_tenth(6.158) == 6.2
    assert math.isclose(tables.ceil_tenth(6.1000001), 6.2)
