import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecodom.ventsim import (
    SpeedBand,
    VentResult,
    VentScenario,
    estimate,
    meets_targets,
    residual,
    solve_internal_pressure,
)

DEFAULTS = dict(wind_speed_ms=4.0, openings_windward_m2=2.0, openings_leeward_m2=2.0,
                zone_volume_m3=175.0, cross_section_m2=17.5)


def scenario(**kw):
    return VentScenario(**{**DEFAULTS, **kw})


def series_orifice_flow(s: VentScenario) -> float:
    """Closed form for two orifices in series: 1/Aeff² = 1/Aw² + 1/Al²."""
    dp = (s.cp_windward - s.cp_leeward) * 0.5 * s.air_density_kgm3 * s.wind_speed_ms ** 2
    a_eff = 1.0 / math.sqrt(1 / s.openings_windward_m2 ** 2 + 1 / s.openings_leeward_m2 ** 2)
    return s.discharge_coefficient * a_eff * math.sqrt(2 * abs(dp) / s.air_density_kgm3)


def test_reference_case():
    s = scenario()
    # q = 9.6 Pa, total drop 8.64 Pa, 4.32 Pa per opening
    assert s.windward_pressure_pa - s.leeward_pressure_pa == pytest.approx(8.64)
    r = estimate(s)
    q_hand = 0.61 * 2 * math.sqrt(2 * 4.32 / 1.2)
    assert q_hand == pytest.approx(3.2736, abs=1e-4)
    assert r.volumetric_flow_m3s == pytest.approx(q_hand, rel=1e-9)
    assert r.ach_per_h == pytest.approx(67.34, abs=0.01)
    assert r.mean_air_speed_ms == pytest.approx(0.187, abs=1e-3)
    check = meets_targets(r)
    assert check.ach_ok and check.speed_band is SpeedBand.BELOW


def test_symmetric_case_is_midway():
    s = scenario(wind_speed_ms=7.3, openings_windward_m2=1.3, openings_leeward_m2=1.3)
    p = solve_internal_pressure(s)
    mid = (s.windward_pressure_pa + s.leeward_pressure_pa) / 2
    assert p == pytest.approx(mid, rel=1e-12, abs=1e-12)


def test_equal_area_closed_form():
    for u in (0.5, 2.0, 4.0, 11.0):
        s = scenario(wind_speed_ms=u)
        dp = s.windward_pressure_pa - s.leeward_pressure_pa
        closed = s.discharge_coefficient * s.openings_windward_m2 * math.sqrt(dp / s.air_density_kgm3)
        assert estimate(s).volumetric_flow_m3s == pytest.approx(closed, rel=1e-9)


def test_no_wind():
    r = estimate(scenario(wind_speed_ms=0.0))
    assert r.internal_pressure_pa == 0.0
    assert r.volumetric_flow_m3s == 0.0


def test_larger_windward_area_pulls_pressure_windward_grid_oracle():
    s = scenario(openings_windward_m2=2.0, openings_leeward_m2=1.0)
    p = solve_internal_pressure(s)
    grid = np.linspace(s.leeward_pressure_pa, s.windward_pressure_pa, 1_000_001)
    rho, cd = s.air_density_kgm3, s.discharge_coefficient
    q_in = cd * 2.0 * np.sign(s.windward_pressure_pa - grid) * np.sqrt(
        2 * np.abs(s.windward_pressure_pa - grid) / rho)
    q_out = cd * 1.0 * np.sign(grid - s.leeward_pressure_pa) * np.sqrt(
        2 * np.abs(grid - s.leeward_pressure_pa) / rho)
    p_grid = grid[np.argmin(np.abs(q_in - q_out))]
    step = grid[1] - grid[0]
    assert abs(p - p_grid) <= step
    mid = (s.windward_pressure_pa + s.leeward_pressure_pa) / 2
    # larger inlet -> interior pressure closer to the windward facade
    assert p > mid


def test_unequal_area_matches_series_closed_form():
    s = scenario(openings_windward_m2=2.0, openings_leeward_m2=1.0)
    p_closed = (4 * s.windward_pressure_pa + 1 * s.leeward_pressure_pa) / 5
    assert solve_internal_pressure(s) == pytest.approx(p_closed, rel=1e-12)
    assert estimate(s).volumetric_flow_m3s == pytest.approx(series_orifice_flow(s), rel=1e-9)


def test_doubling_areas_doubles_flow():
    a = estimate(scenario())
    b = estimate(scenario(openings_windward_m2=4.0, openings_leeward_m2=4.0))
    assert b.volumetric_flow_m3s == pytest.approx(2 * a.volumetric_flow_m3s, rel=1e-12)
    assert b.ach_per_h == pytest.approx(2 * a.ach_per_h, rel=1e-12)


@pytest.mark.parametrize("field", ["openings_windward_m2", "openings_leeward_m2",
                                   "zone_volume_m3", "cross_section_m2"])
def test_non_positive_inputs_rejected(field):
    with pytest.raises(ValueError):
        solve_internal_pressure(scenario(**{field: 0.0}))
    with pytest.raises(ValueError):
        estimate(scenario(wind_speed_ms=-1.0))


@pytest.mark.parametrize("ach,speed,ok,band", [
    (67.0, 0.19, True, SpeedBand.BELOW),
    (40.0, 0.2, True, SpeedBand.IN_BAND),
    (39.99, 0.5, False, SpeedBand.IN_BAND),
    (120.0, 0.51, True, SpeedBand.ABOVE),
])
def test_meets_targets(ach, speed, ok, band):
    check = meets_targets(VentResult(0.0, 1.0, ach, speed))
    assert (check.ach_ok, check.speed_band) == (ok, band)


scenarios = st.builds(
    VentScenario,
    wind_speed_ms=st.floats(0.0, 25.0),
    openings_windward_m2=st.floats(0.01, 20.0),
    openings_leeward_m2=st.floats(0.01, 20.0),
    zone_volume_m3=st.floats(10.0, 2000.0),
    cross_section_m2=st.floats(1.0, 100.0),
    air_density_kgm3=st.floats(1.0, 1.3),
    discharge_coefficient=st.floats(0.3, 1.0),
    cp_windward=st.floats(0.0, 1.0),
    cp_leeward=st.floats(-1.0, 0.0),
)


@given(scenarios)
@settings(max_examples=500)
def test_residual_and_closed_form_property(s):
    p = solve_internal_pressure(s)
    assert abs(residual(s, p)) < 1e-9
    assert estimate(s).volumetric_flow_m3s == pytest.approx(series_orifice_flow(s), rel=1e-9,
                                                             abs=1e-12)


@given(scenarios, st.floats(1.0, 3.0), st.sampled_from(
    ["wind_speed_ms", "openings_windward_m2", "openings_leeward_m2"]))
@settings(max_examples=500)
def test_ach_monotone(s, factor, field):
    bigger = VentScenario(**{**vars(s), field: getattr(s, field) * factor})
    assert estimate(bigger).ach_per_h >= estimate(s).ach_per_h * (1 - 1e-12)
