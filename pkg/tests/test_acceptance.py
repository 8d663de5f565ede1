"""Acceptance criteria, one test each, printing a PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` for the summary alone.
"""

import io
import math
import time
from fractions import Fraction as F

import numpy as np
import pytest

from beanstar import constants as K
from beanstar import extremal, geometry, radii, subordination, verify
from beanstar.cli import main
from beanstar.complex_core import bean_derivative
from beanstar.solve import SolveConfig

E = math.e
RESULTS = {}


@pytest.fixture(autouse=True)
def _report(request, capsys):
    yield
    name = request.node.name
    if name in RESULTS:
        ok, detail = RESULTS[name]
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def record(name, checks):
    """``checks`` is a list of (label, ok); record and assert all of them."""
    ok = all(c for _, c in checks)
    RESULTS[name] = (ok, "; ".join(f"{label} {'ok' if c else 'FAILED'}" for label, c in checks))
    assert ok, RESULTS[name][1]


def test_criterion_01_convexity_radius():
    r = geometry.convexity_radius()
    t = np.linspace(0, math.pi, 4001)
    record(
        "test_criterion_01_convexity_radius",
        [
            (f"r* = {r:.8f} in [0.7073, 0.7075]", 0.7073 <= r <= 0.7075),
            ("equation changes sign at r*", geometry.convexity_numerator(r + 1e-6, 0.0) < 0 < geometry.convexity_numerator(r - 1e-6, 0.0)),
            ("convex below r*", bool(np.min(geometry.convexity_numerator(r - 1e-3, t)) > 0)),
        ],
    )


def test_criterion_02_sharp_bounds():
    b = geometry.sharp_bounds()
    b2 = geometry.sharp_bounds(SolveConfig(scan_points=16384))
    arg_target = 0.43849139 * math.pi / 2
    record(
        "test_criterion_02_sharp_bounds",
        [
            (f"re_max {b.re_max:.7f}", abs(b.re_max - 1.38846) <= 5e-5),
            (f"theta0 {b.theta0:.6f}", abs(b.theta0 - 1.15197) <= 1e-3),
            (f"|Im| max {b.im_abs_max:.7f}", abs(b.im_abs_max - 0.69949) <= 5e-5),
            (f"theta1 {b.theta1:.6f}", abs(b.theta1 - 1.72466) <= 1e-3),
            (f"A(theta2) {b.mod_max ** 2:.6f}", abs(b.mod_max**2 - 2.0694) <= 5e-4),
            (f"theta2 {b.theta2:.6f}", abs(b.theta2 - 1.31364) <= 1e-3),
            (
                f"arg bound {b.arg_abs_max:.9f} vs {arg_target:.9f} (diff {abs(b.arg_abs_max - arg_target):.2e}, beta {b.beta:.9f})",
                abs(b.arg_abs_max - arg_target) <= 1e-6,
            ),
            ("stable under grid doubling", max(abs(b.re_max - b2.re_max), abs(b.arg_abs_max - b2.arg_abs_max), abs(b.mod_max - b2.mod_max)) <= 1e-12),
        ],
    )


def test_criterion_03_r0():
    lo, hi = 1.0, 1.4
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if subordination.r0_predicate(mid) else (mid, hi)
    r0 = subordination.r0_constant()
    record(
        "test_criterion_03_r0",
        [
            (f"R0 = {r0:.8f}", abs(r0 - 1.32725) <= 1e-5 and abs(r0 - E * math.sqrt(2 / (1 + E * E))) <= 1e-15),
            (f"predicate flips at {hi:.12f}", abs(hi - r0) <= 1e-10),
        ],
    )


def test_criterion_04_disks():
    r_a0 = geometry.inscribed_radius(K.ALPHA0)
    disk = geometry.minimax_enclosing_disk()
    c1 = geometry.enclosing_radius(1.0)
    record(
        "test_criterion_04_disks",
        [
            (f"r_alpha0 {r_a0:.6f}", abs(r_a0 - 0.41949) <= 5e-5),
            (f"minimax center {disk.center:.6f}", abs(disk.center - 1.006) <= 5e-3),
            (f"minimax radius {disk.radius:.6f}", abs(disk.radius - 0.69949) <= 1e-4),
            (f"center-1 radius {c1:.7f} vs 0.699517", abs(c1 - 0.699517) <= 1e-5),
        ],
    )


def test_criterion_05_inclusions():
    inc = geometry.inclusion_thresholds()
    record(
        "test_criterion_05_inclusions",
        [
            (f"rho {inc.parabolic_rho:.6f}", abs(inc.parabolic_rho - 0.13186) <= 1e-4),
            (f"theta {inc.parabolic_theta:.5f}", abs(inc.parabolic_theta - 1.8603) <= 5e-3),
            ("k-ST closed form", abs(inc.kst_k - 2 * E / (2 * E - math.sqrt(2 * (1 + E * E)))) <= 1e-10),
            ("Cassinian closed form", abs(inc.cassinian_c - (E * E - 1) / (E * E + 1)) <= 1e-10),
            (
                "Cassinian threshold is sharp",
                geometry.contains_curve(geometry.cassinian_curve(inc.cassinian_c - 1e-6))
                and not geometry.contains_curve(geometry.cassinian_curve(inc.cassinian_c + 1e-6)),
            ),
        ],
    )


def test_criterion_06_extremal_series():
    c = list(extremal.f0_series(4, exact=True))
    record(
        "test_criterion_06_extremal_series",
        [(f"coefficients {[str(x) for x in c[1:]]}", c == [0, 1, F(1, 2), F(1, 16), F(-13, 288), F(-11, 1152)])],
    )


def test_criterion_07_radii():
    sharp = [
        radii.radius_exp(),
        radii.radius_sg(),
        radii.radius_lune(),
        radii.radius_cardioid(),
        radii.radius_janowski(1, -1),
        radii.radius_janowski(0.8, 0.3),
        radii.radius_starlike_alpha(0.25),
        radii.radius_L_alpha(0.3),
        radii.radius_e_alpha(0.3),
        radii.radius_BS(0.5),
        radii.radius_cs(0.5),
        radii.radius_limacon(0.5),
        radii.radius_starlike_alpha_within(0.7),
    ]
    exp, sg, lune, card, jan = (r.value for r in sharp[:5])
    uncertified = [r.equation_id for r in sharp if not (r.inner_ok and r.outer_fail)]
    record(
        "test_criterion_07_radii",
        [
            (f"exp {exp:.7f}", abs(exp - 0.28311) <= 1e-5),
            (f"sg {sg:.7f}", abs(sg - 0.679492) <= 1e-6),
            (f"lune {lune:.7f}", abs(lune - 0.2869) <= 1e-4),
            (f"cardioid {card:.7f}", abs(card - 0.253877) <= 1e-6),
            (f"janowski(1,-1) {jan:.7f}", abs(jan - 0.1406) <= 1e-4),
            (f"probes on {len(sharp)} sharp radii {uncertified or ''}", not uncertified),
        ],
    )


def test_criterion_08_beta_bounds():
    t = time.perf_counter()
    queries = subordination.sample_queries(50, seed=0)
    failed = [
        (f, q)
        for f, q in queries
        if not subordination.verify_sufficiency(subordination.bound_for(f, q) * (1 + 1e-6), q, f, grid=1024)
    ]
    elapsed = time.perf_counter() - t
    sqrt_bound = subordination.beta_bound_sqrt(0, 1)
    record(
        "test_criterion_08_beta_bounds",
        [
            (f"{50 - len(failed)}/50 random tuples sufficient", not failed),
            (f"runtime {elapsed:.2f}s", elapsed < 5),
            ("sqrt bound (R0 + sqrt 2) 4", abs(sqrt_bound - (K.R0 + math.sqrt(2)) * 4) <= 1e-10),
        ],
    )


def test_criterion_09_property_suites():
    out = io.StringIO()
    code = main(["verify"], out=out)
    results = {c.name: c.passed for c in verify.run_checks()}
    named = [
        "conjugate_symmetry",
        "polar_vs_direct",
        "inverse_round_trip",
        "boundary_minimum_at_pi",
        "curve_nesting",
        "r_alpha_continuity",
    ]
    record(
        "test_criterion_09_property_suites",
        [(n, results[n]) for n in named] + [(f"verify exit code {code}", code == 0), (f"{len(results)} named checks", len(results) >= 25)],
    )


def test_criterion_10_reported_items():
    items = {c.name: c for c in verify.reported_items()}
    out = io.StringIO()
    main(["verify"], out=out)
    text = out.getvalue()
    c1, c2 = extremal.covering_radius(1e-9), extremal.covering_radius(5e-10)
    record(
        "test_criterion_10_reported_items",
        [
            (f"B'(0) = {bean_derivative(0).real} reported", "bean_derivative_at_0" in text and bean_derivative(0) == 0.5),
            ("0.483 infimum reported", "starlike_wrt_one_infimum" in items and "starlike_wrt_one_infimum" in text),
            (f"covering radius {c1:.10f} stable under halving", abs(c1 - c2) <= 1e-9 and "covering_radius" in text),
        ],
    )


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
