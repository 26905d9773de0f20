"""Prescriptive tables of the ECODOM reference document, with lookups.

Table cells are stored verbatim.  Lookups return ``None`` where the standard
gives no prescription (dark walls, dark ventilated lofts).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .model import Color, FType, Hemisphere, Orientation, RoofKind, WallMaterial

POLYSTYRENE_LAMBDA = 0.041
POLYURETHANE_LAMBDA = 0.029

E, S, W, N = Orientation.EAST, Orientation.SOUTH, Orientation.WEST, Orientation.NORTH

# (kind, colour) -> (thickness at 0.041, thickness at 0.029), cm
ROOF_INSULATION_CM: dict[tuple[RoofKind, Color], tuple[float, float]] = {
    (RoofKind.SIMPLE, Color.LIGHT): (5.0, 4.0),
    (RoofKind.SIMPLE, Color.MEDIUM): (8.0, 6.0),
    (RoofKind.SIMPLE, Color.DARK): (10.0, 8.0),
    # printed as "dark (α = 0.4)"; keyed by α
    (RoofKind.VENTILATED_LOFT, Color.LIGHT): (0.0, 0.0),
    (RoofKind.VENTILATED_LOFT, Color.MEDIUM): (2.0, 0.0),
}


def _row(*values: float) -> dict[Orientation, float]:
    return dict(zip((E, S, W, N), values))


# minimum canopy d/h by material and colour (Reunion orientation columns)
WALL_OVERHANG_RATIO: dict[tuple[WallMaterial, Color], dict[Orientation, float]] = {
    (WallMaterial.CONCRETE_20CM, Color.LIGHT): _row(0.4, 0.2, 0.7, 0.5),
    (WallMaterial.CONCRETE_20CM, Color.MEDIUM): _row(1.0, 0.5, 1.3, 0.7),
    (WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.LIGHT): _row(0.1, 0.1, 0.3, 0.2),
    (WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.MEDIUM): _row(0.5, 0.3, 0.8, 0.5),
    (WallMaterial.WOOD, Color.LIGHT): _row(0, 0, 0, 0),
    (WallMaterial.WOOD, Color.MEDIUM): _row(0, 0, 0.2, 0.1),
}

# minimum wall insulation, cm at λ = 0.041
WALL_INSULATION_CM: dict[tuple[WallMaterial, Color], dict[Orientation, float]] = {
    (WallMaterial.CONCRETE_20CM, Color.LIGHT): _row(1, 1, 1, 1),
    (WallMaterial.CONCRETE_20CM, Color.MEDIUM): _row(2, 1, 2, 2),
    (WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.LIGHT): _row(1, 1, 1, 1),
    (WallMaterial.HOLLOW_CONCRETE_BLOCKS, Color.MEDIUM): _row(1, 1, 2, 2),
    (WallMaterial.WOOD, Color.LIGHT): _row(0, 0, 0, 0),
    (WallMaterial.WOOD, Color.MEDIUM): _row(0, 0, 1, 1),
}

# d/(2a+h), or d/h for a flush canopy
WINDOW_SHADING_RATIO: dict[Orientation, float] = _row(0.8, 0.3, 1.0, 0.6)

SOLAR_MIN_COLLECTOR_M2: dict[FType, float] = {
    FType.F1: 1.5,
    FType.F2: 1.5,
    FType.F3: 2.0,
    FType.F4: 2.5,
    FType.F5: 3.0,
    FType.F6PLUS: 3.5,
}


@dataclass(frozen=True)
class ElectricDhwRequirement:
    min_storage_l: float
    max_cooling_constant: float


ELECTRIC_DHW: dict[FType, ElectricDhwRequirement] = {
    FType.F1: ElectricDhwRequirement(100, 0.32),
    FType.F2: ElectricDhwRequirement(100, 0.32),
    FType.F3: ElectricDhwRequirement(150, 0.23),
    FType.F4: ElectricDhwRequirement(200, 0.22),
    FType.F5: ElectricDhwRequirement(250, 0.22),
    FType.F6PLUS: ElectricDhwRequirement(300, 0.22),
}


def ceil_tenth(x: float) -> float:
    """Round up to 0.1 cm, ignoring float noise below 1e-9."""
    return math.ceil(round(x * 10.0, 9)) / 10.0


def _is(lam: float, ref: float) -> bool:
    return math.isclose(lam, ref, rel_tol=1e-12, abs_tol=0.0)


def scale_thickness(t_ref_cm: float, lam: float, lam_ref: float = POLYSTYRENE_LAMBDA) -> float:
    """Thickness giving the same thermal resistance as ``t_ref_cm`` at ``lam_ref``."""
    if _is(lam, lam_ref):
        return t_ref_cm
    return ceil_tenth(t_ref_cm * lam / lam_ref)


def for_hemisphere(orientation: Orientation, hemisphere: Hemisphere) -> Orientation:
    """Column to read for a site; tables are written for the southern hemisphere."""
    if hemisphere is Hemisphere.NORTHERN:
        return {N: S, S: N}.get(orientation, orientation)
    return orientation


def roof_min_insulation(kind: RoofKind, color: Color, lambda_w_mk: float) -> Optional[float]:
    """Minimum roof (or loft ceiling) insulation in cm for conductivity ``lambda_w_mk``.

    Conductivities other than the two tabulated ones are scaled by resistance
    equivalence: from the polystyrene column above 0.041, from the
    polyurethane column below 0.029, and in between never less than the
    polyurethane cell so that the result stays monotone in conductivity.
    """
    if lambda_w_mk <= 0:
        raise ValueError("conductivity must be positive")
    cell = ROOF_INSULATION_CM.get((kind, color))
    if cell is None:
        return None
    t_ps, t_pu = cell
    if _is(lambda_w_mk, POLYSTYRENE_LAMBDA):
        return t_ps
    if _is(lambda_w_mk, POLYURETHANE_LAMBDA):
        return t_pu
    if lambda_w_mk > POLYSTYRENE_LAMBDA:
        return scale_thickness(t_ps, lambda_w_mk, POLYSTYRENE_LAMBDA)
    if lambda_w_mk < POLYURETHANE_LAMBDA:
        return scale_thickness(t_pu, lambda_w_mk, POLYURETHANE_LAMBDA)
    return max(t_pu, scale_thickness(t_ps, lambda_w_mk, POLYSTYRENE_LAMBDA))


def wall_min_overhang_ratio(material: WallMaterial, color: Color,
                            orientation: Orientation) -> Optional[float]:
    row = WALL_OVERHANG_RATIO.get((material, color))
    return None if row is None else row[orientation]


def wall_min_insulation(material: WallMaterial, color: Color, orientation: Orientation,
                        lambda_w_mk: float = POLYSTYRENE_LAMBDA) -> Optional[float]:
    if lambda_w_mk <= 0:
        raise ValueError("conductivity must be positive")
    row = WALL_INSULATION_CM.get((material, color))
    if row is None:
        return None
    return scale_thickness(row[orientation], lambda_w_mk)


def window_min_shading_ratio(orientation: Orientation) -> float:
    return WINDOW_SHADING_RATIO[orientation]


def solar_dhw_min_collector(f_type: FType) -> float:
    return SOLAR_MIN_COLLECTOR_M2[f_type]


def electric_dhw_requirements(f_type: FType) -> ElectricDhwRequirement:
    return ELECTRIC_DHW[f_type]


def tables_as_dict() -> dict:
    """All tables as plain JSON-friendly data."""
    return {
        "roof_insulation_cm": [
            {"roof_kind": k.value, "color": c.value, "color_alpha": c.alpha,
             "lambda_w_mk": lam, "min_thickness_cm": t}
            for (k, c), cells in ROOF_INSULATION_CM.items()
            for lam, t in zip((POLYSTYRENE_LAMBDA, POLYURETHANE_LAMBDA), cells)
        ],
        "wall_overhang_ratio": [
            {"material": m.value, "color": c.value, "orientation": o.value, "min_d_over_h": v}
            for (m, c), row in WALL_OVERHANG_RATIO.items() for o, v in row.items()
        ],
        "wall_insulation_cm": [
            {"material": m.value, "color": c.value, "orientation": o.value,
             "lambda_w_mk": POLYSTYRENE_LAMBDA, "min_thickness_cm": v}
            for (m, c), row in WALL_INSULATION_CM.items() for o, v in row.items()
        ],
        "window_shading_ratio": [
            {"orientation": o.value, "min_ratio": v} for o, v in WINDOW_SHADING_RATIO.items()
        ],
        "solar_dhw_min_collector_m2": [
            {"f_type": f.value, "min_collector_m2": v} for f, v in SOLAR_MIN_COLLECTOR_M2.items()
        ],
        "electric_dhw": [
            {"f_type": f.value, "min_storage_l": r.min_storage_l,
             "max_cooling_constant": r.max_cooling_constant}
            for f, r in ELECTRIC_DHW.items()
        ],
    }


def render_tables_text() -> str:
    lines: list[str] = []
    orients = (E, S, W, N)

    lines.append("Roof insulation (cm)")
    lines.append(f"  {'roof':<16}{'colour':<8}{'alpha':>6}{'λ=0.041':>10}{'λ=0.029':>10}")
    for (k, c), (ps, pu) in ROOF_INSULATION_CM.items():
        lines.append(f"  {k.value:<16}{c.value:<8}{c.alpha:>6.1f}{ps:>10g}{pu:>10g}")
    lines.append("  ventilated loft also needs vent openings / roof area >= 0.15")

    for title, table in (("Wall canopy, minimum d/h", WALL_OVERHANG_RATIO),
                         ("Wall insulation (cm, λ=0.041)", WALL_INSULATION_CM)):
        lines.append("")
        lines.append(title)
        head = "".join(f"{o.value:>7}" for o in orients)
        lines.append(f"  {'material':<24}{'colour':<8}{head}")
        for (m, c), row in table.items():
            cells = "".join(f"{row[o]:>7g}" for o in orients)
            lines.append(f"  {m.value:<24}{c.value:<8}{cells}")

    lines.append("")
    lines.append("Window canopy, minimum d/(2a+h)")
    lines.append("  " + "".join(f"{o.value:>7}" for o in orients))
    lines.append("  " + "".join(f"{WINDOW_SHADING_RATIO[o]:>7g}" for o in orients))

    lines.append("")
    lines.append("Solar water heater, minimum collector area")
    for f, v in SOLAR_MIN_COLLECTOR_M2.items():
        lines.append(f"  {f.value:<8}{v:>5g} m²")

    lines.append("")
    lines.append("Electric storage water heater")
    lines.append(f"  {'type':<8}{'storage':>9}{'cooling const':>15}")
    for f, r in ELECTRIC_DHW.items():
        lines.append(f"  {f.value:<8}{r.min_storage_l:>7g} L{r.max_cooling_constant:>15g}")
    lines.append("")
    lines.append("Orientation columns are for the southern hemisphere; North and South swap "
                 "for northern sites.")
    return "\n".join(lines) + "\n"
