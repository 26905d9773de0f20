"""Single-zone wind-driven cross-ventilation estimate.

Two aggregated orifices (windward and leeward) connect one well-mixed zone to
the outside.  The internal pressure is the root of the volume balance
``Q_in(p) - Q_out(p) = 0`` with orifice flow ``Q = Cd A sqrt(2 |dP| / rho)``.
No stack effect is modelled.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from enum import Enum

from scipy.optimize import brentq

MIN_ACH = 40.0
SPEED_BAND_MS = (0.2, 0.5)


@dataclass(frozen=True)
class VentScenario:
    wind_speed_ms: float
    openings_windward_m2: float
    openings_leeward_m2: float
    zone_volume_m3: float
    cross_section_m2: float
    air_density_kgm3: float = 1.2
    discharge_coefficient: float = 0.61
    cp_windward: float = 0.6
    cp_leeward: float = -0.3

    def validate(self) -> None:
        positive = ("openings_windward_m2", "openings_leeward_m2", "zone_volume_m3",
                    "cross_section_m2", "air_density_kgm3", "discharge_coefficient")
        for name in positive:
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be > 0, got {value!r}")
        if not math.isfinite(self.wind_speed_ms) or self.wind_speed_ms < 0:
            raise ValueError(f"wind_speed_ms must be >= 0, got {self.wind_speed_ms!r}")
        for name in ("cp_windward", "cp_leeward"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def dynamic_pressure_pa(self) -> float:
        return 0.5 * self.air_density_kgm3 * self.wind_speed_ms ** 2

    @property
    def windward_pressure_pa(self) -> float:
        return self.cp_windward * self.dynamic_pressure_pa

    @property
    def leeward_pressure_pa(self) -> float:
        return self.cp_leeward * self.dynamic_pressure_pa


@dataclass(frozen=True)
class VentResult:
    internal_pressure_pa: float
    volumetric_flow_m3s: float
    ach_per_h: float
    mean_air_speed_ms: float


class SpeedBand(str, Enum):
    BELOW = "below"
    IN_BAND = "in_band"
    ABOVE = "above"


@dataclass(frozen=True)
class TargetCheck:
    ach_ok: bool
    speed_band: SpeedBand


def orifice_flow(cd: float, area: float, dp: float, rho: float) -> float:
    """Signed flow through an orifice, positive in the direction of ``dp``."""
    return math.copysign(cd * area * math.sqrt(2.0 * abs(dp) / rho), dp)


def flow_in(s: VentScenario, p_internal: float) -> float:
    return orifice_flow(s.discharge_coefficient, s.openings_windward_m2,
                        s.windward_pressure_pa - p_internal, s.air_density_kgm3)


def flow_out(s: VentScenario, p_internal: float) -> float:
    return orifice_flow(s.discharge_coefficient, s.openings_leeward_m2,
                        p_internal - s.leeward_pressure_pa, s.air_density_kgm3)


def residual(s: VentScenario, p_internal: float) -> float:
    """Net volume flow into the zone, m³/s; decreasing in ``p_internal``."""
    return flow_in(s, p_internal) - flow_out(s, p_internal)


def solve_internal_pressure(s: VentScenario) -> float:
    s.validate()
    lo = min(s.windward_pressure_pa, s.leeward_pressure_pa)
    hi = max(s.windward_pressure_pa, s.leeward_pressure_pa)
    if hi - lo == 0.0:
        return lo
    f_lo, f_hi = residual(s, lo), residual(s, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    return brentq(lambda p: residual(s, p), lo, hi,
                  xtol=1e-15, rtol=4 * sys.float_info.epsilon, maxiter=500)


def estimate(s: VentScenario) -> VentResult:
    p = solve_internal_pressure(s)
    q = abs(0.5 * (flow_in(s, p) + flow_out(s, p)))
    return VentResult(
        internal_pressure_pa=p,
        volumetric_flow_m3s=q,
        ach_per_h=q * 3600.0 / s.zone_volume_m3,
        mean_air_speed_ms=q / s.cross_section_m2,
    )


def meets_targets(r: VentResult) -> TargetCheck:
    lo, hi = SPEED_BAND_MS
    if r.mean_air_speed_ms < lo:
        band = SpeedBand.BELOW
    elif r.mean_air_speed_ms > hi:
        band = SpeedBand.ABOVE
    else:
        band = SpeedBand.IN_BAND
    return TargetCheck(ach_ok=r.ach_per_h >= MIN_ACH, speed_band=band)
