"""Oracle suite run by ``beanstar verify``.

Every check recomputes a quantity by a route independent of the library
path (direct evaluation, brute-force scanning, bisection on a predicate,
closed forms) and compares.  A second list, :func:`reported_items`, holds
observations that are printed but do not affect the exit code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List

import numpy as np

from . import constants as K
from . import extremal, geometry, radii, subordination
from .complex_core import bean_derivative, bean_series, eval_bean, inverse_bean, series_exp_integrate
from .solve import SolveConfig, extremize, smallest_root

EQ5 = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 16), Fraction(-13, 288), Fraction(-11, 1152)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Context:
    r0: float = K.R0


def stencil_coefficients(f: Callable, n_max: int, h: float = 0.5, nodes: int = 64) -> np.ndarray:
    """Taylor coefficients at 0 from a central difference stencil on the circle |z| = h.

    The stencil weights are exp(-2 pi i j n / nodes) / (nodes h**n); the
    aliasing error is of order (h / rho)**nodes with rho the convergence radius.
    """
    z = h * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    fz = np.array([f(complex(v)) for v in z])
    j = np.arange(nodes)
    return np.array(
        [np.sum(fz * np.exp(-2j * np.pi * j * n / nodes)) / (nodes * h**n) for n in range(n_max + 1)]
    )


def _conjugate_symmetry(ctx):
    rng = np.random.default_rng(1)
    z = np.sqrt(rng.random(10_000)) * np.exp(2j * np.pi * rng.random(10_000))
    err = np.max(np.abs(eval_bean(np.conj(z)) - np.conj(eval_bean(z))))
    return err <= 1e-12, f"max err {err:.2e}"


def _round_trip(ctx):
    rng = np.random.default_rng(2)
    z = 0.99 * np.sqrt(rng.random(10_000)) * np.exp(2j * np.pi * rng.random(10_000))
    err = np.max(np.abs(inverse_bean(eval_bean(z)) - z))
    return err <= 1e-10, f"max err {err:.2e}"


def _series_vs_stencil(ctx):
    c = stencil_coefficients(eval_bean, 8)
    s = bean_series(8)
    err = max(abs(c[n] - float(s[n])) for n in range(9))
    return err <= 1e-6, f"max coeff err {err:.2e}"


def _eq5_exact(ctx):
    f = series_exp_integrate(bean_series(4, exact=True))
    return list(f.coeffs) == EQ5, str([str(c) for c in f.coeffs])


def _eq5_float(ctx):
    f = series_exp_integrate(bean_series(4, exact=False))
    err = max(abs(a - float(b)) for a, b in zip(f.coeffs, EQ5))
    return err <= 1e-12, f"max err {err:.2e}"


def _root_residual(ctx):
    cfg = SolveConfig()
    r = geometry.convexity_radius(cfg)
    g = lambda x: 1 + 2 * math.exp(2 * x) + math.exp(4 * x) - (-1 + math.exp(2 * x) + 2 * math.exp(4 * x)) * x
    scale = max(abs(g(t)) for t in np.linspace(r - 0.01, r + 0.01, 21))
    return abs(g(r)) <= 10 * cfg.tol * (1 + scale), f"|G(r*)| = {abs(g(r)):.2e}"


def _scan_doubling(ctx):
    base, dbl = SolveConfig(), SolveConfig().doubled()
    pairs = [
        (geometry.convexity_radius(base), geometry.convexity_radius(dbl)),
        (radii.radius_cardioid(base).value, radii.radius_cardioid(dbl).value),
        (radii.radius_cs(0.5, base).value, radii.radius_cs(0.5, dbl).value),
        (radii.radius_convexity_alpha(0.5, "tan", base).value, radii.radius_convexity_alpha(0.5, "tan", dbl).value),
    ]
    diff = max(abs(a - b) for a, b in pairs)
    return diff <= 1e-12, f"max change {diff:.2e}"


def _negation(ctx):
    f = geometry.re_part
    t1, v1 = extremize(f, (0, math.pi), "max")
    t2, v2 = extremize(lambda t: -f(t), (0, math.pi), "min")
    return t1 == t2 and v1 == -v2, f"args {t1:.6f}/{t2:.6f}"


def _polar_vs_direct(ctx):
    theta = 2 * np.pi * np.arange(512) / 512
    err = 0.0
    for r in np.arange(1, 10) / 10:
        err = max(err, float(np.max(np.abs(geometry.polar_bean(r, theta) - eval_bean(r * np.exp(1j * theta))))))
    return err <= 1e-12, f"max err {err:.2e}"


def _min_at_pi(ctx):
    theta = np.linspace(0, np.pi, 2049)
    step = theta[1]
    worst = 0.0
    for r in np.arange(1, 11) / 10:
        w = eval_bean(r * np.exp(1j * theta))
        worst = max(worst, abs(theta[np.argmin(w.real)] - np.pi), abs(theta[np.argmin(np.abs(w))] - np.pi))
    return worst <= step, f"max offset {worst:.2e}"


def _ralpha_continuity(ctx):
    left = K.ALPHA0 - K.LEFT_END
    right = K.R0 - K.ALPHA0
    return abs(left - right) <= 1e-12 and abs(geometry.inscribed_radius(K.ALPHA0) - K.R_ALPHA0) <= 1e-12, f"{left:.12f} vs {right:.12f}"


def _nesting(ctx):
    ok = all(geometry.contains_curve(geometry.boundary_curve(r)[1]) for r in (0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999))
    return ok, "B(|z|=r) inside B(D) for r < 1"


def _inscribed_sharp(ctx):
    d_in = geometry.Disk(K.ALPHA0, K.R_ALPHA0 - 1e-4).circle()
    d_out = geometry.Disk(K.ALPHA0, K.R_ALPHA0 + 1e-3).circle()
    return geometry.contains_curve(d_in) and not geometry.contains_curve(d_out), "r_alpha0 -1e-4 in, +1e-3 out"


def _janowski_grid(ctx):
    bad = 0
    z = np.exp(2j * np.pi * np.arange(2048) / 2048)
    for A in np.linspace(-0.95, 1.0, 20):
        for B in np.linspace(-0.97, 0.93, 20):
            if not B < A:
                continue
            direct = geometry.contains_curve((1 + A * z) / (1 + B * z))
            bad += direct != geometry.janowski_subordination_test(A, B)
    return bad == 0, f"{bad} disagreements"


def _beta_monotone(ctx):
    rng = np.random.default_rng(3)
    ok = True
    for _ in range(20):
        B = rng.uniform(-0.9, 0.9)
        A = rng.uniform(B + 0.01, 1)
        g, k = rng.uniform(0.05, 1), int(rng.choice([-1, 0]))
        vals = [subordination.beta_bound_mixed(subordination.BetaQuery(a, g, k, 1, A, B)) for a in np.linspace(0, 1, 11)]
        ok &= all(x <= y * (1 + 1e-14) for x, y in zip(vals, vals[1:]))
    return ok, "nondecreasing in alpha"


def _beta_blowup(ctx):
    q = subordination.BetaQuery(0.5, 1.0, 0, 1, 0.501, 0.5)
    vals = [subordination.beta_bound_mixed(q), subordination.beta_bound_power(q)]
    vals.append(subordination.beta_bound_power(subordination.BetaQuery(0.5, 1.0, 0, 0, 0.501, 0.5)))
    return all(v > 100 for v in vals), ", ".join(f"{v:.3g}" for v in vals)


def _r0_flip(ctx):
    lo, hi = 1.0, 1.41
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if subordination.r0_predicate(mid):
            hi = mid
        else:
            lo = mid
    return abs(hi - ctx.r0) <= 1e-10, f"flip at {hi:.12f}"


def _r0_value(ctx):
    return abs(eval_bean(1.0).real - ctx.r0) <= 1e-12 and abs(ctx.r0 - 1.32725) <= 1e-5, f"R0 = {ctx.r0:.10f}"


def _sharp_radii(ctx):
    results = [
        radii.radius_janowski(1, -1),
        radii.radius_janowski(0.5, -0.5),
        radii.radius_janowski(0.8, 0.3),
        radii.radius_janowski(1.0, 0.2),
        radii.radius_starlike_alpha(0.25),
        radii.radius_exp(),
        radii.radius_sg(),
        radii.radius_lune(),
        radii.radius_cardioid(),
        radii.radius_starlike_alpha_within(0.7),
        radii.radius_limacon(1.0),
        radii.radius_limacon(0.5),
    ]
    for a in (0.0, 0.2, 0.4):
        results.append(radii.radius_L_alpha(a))
    for a in (0.0, 0.3, 0.6):
        results.append(radii.radius_e_alpha(a))
        results.append(radii.radius_BS(a))
        results.append(radii.radius_cs(a))
    failed = [f"{r.equation_id}{r.params}" for r in results if not (r.inner_ok and r.outer_fail)]
    return not failed, f"{len(results) - len(failed)}/{len(results)} certified" + (f"; failed {failed}" if failed else "")


def _e_alpha_zero(ctx):
    a, b = radii.radius_e_alpha(0).value, radii.radius_exp().value
    return abs(a - b) <= 1e-12 and abs(b - (math.log(ctx.r0))) <= 1e-12, f"{a:.12f} vs {b:.12f}"


def _janowski_continuity(ctx):
    left = radii.radius_janowski(0.5, -1e-9).value
    mid = radii.radius_janowski(0.5, 0.0).value
    return abs(left - mid) <= 1e-8, f"{left:.10f} vs {mid:.10f}"


def _monotone_radii(ctx):
    grid = np.linspace(0, 0.45, 11)
    checks = [
        ([radii.radius_L_alpha(a).value for a in grid], 1),
        ([radii.radius_e_alpha(a).value for a in np.linspace(0, 0.8, 11)], 1),
        ([radii.radius_BS(a).value for a in np.linspace(0, 0.95, 11)], -1),
        ([radii.radius_cs(a).value for a in np.linspace(0, 0.95, 11)], 1),
        ([radii.radius_convexity_alpha(a).value for a in np.linspace(0.05, 1, 11)], -1),
        ([radii.radius_starlike_alpha_within(a).value for a in np.linspace(0.5, 1, 11)], -1),
        ([radii.radius_starlike_alpha(a).value for a in np.linspace(0, 0.95, 11)], 1),
    ]
    ok = all(all(s * (y - x) > 0 for x, y in zip(v, v[1:])) for v, s in checks)
    return ok, "strict monotonicity on 11-point grids"


def _f0_quad_vs_series(ctx):
    f = extremal.f0_series(32, exact=False)
    xs = np.linspace(-0.5, 0.5, 21)
    err = max(abs(extremal.f0_value(float(x)) - float(f(float(x)))) for x in xs)
    return err <= 1e-10, f"max err {err:.2e}"


def _growth_order(ctx):
    rng = np.random.default_rng(4)
    recs = [extremal.growth_distortion(float(r)) for r in rng.uniform(0.05, 0.95, 10)]
    ok = all(0 < g.lower < g.upper and g.d_lower <= g.d_upper for g in recs)
    return ok, "0 < lower < upper, d_lower <= d_upper"


def _distortion_continuity(ctx):
    r0 = geometry.distortion_threshold()
    a = extremal.growth_distortion(r0 - 1e-8)
    b = extremal.growth_distortion(r0 + 1e-8)
    jump = abs(a.d_upper - b.d_upper)
    return jump <= 1e-6 and a.regime != b.regime, f"jump {jump:.2e} at r0 = {r0:.10f}"


def _distortion_threshold(ctx):
    # bisection on the sign-change scan of h_r, independent of the closed form
    lo, hi = 0.5, 0.8
    while hi - lo > 1e-9:
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if geometry.interior_root_flag(mid, 16384) else (mid, hi)
    r0 = geometry.distortion_threshold()
    ok = abs(r0 - 0.639) <= 2e-3 and 0 <= hi - r0 <= 1e-6
    return ok, f"closed form {r0:.10f}, scan {hi:.10f}"


def _convexity(ctx):
    r = geometry.convexity_radius()
    t = np.linspace(0, np.pi, 2001)
    ok = 0.7073 <= r <= 0.7075
    ok &= bool(np.min(geometry.convexity_numerator(r - 0.01, t)) > 0)
    ok &= bool(geometry.convexity_numerator(r + 0.01, 0.0) < 0)
    return ok, f"r* = {r:.8f}"


def _bounds_constants(ctx):
    b = geometry.sharp_bounds()
    ok = abs(b.re_max - 1.38846) <= 5e-5 and abs(b.theta0 - 1.15197) <= 1e-3
    ok &= abs(b.im_abs_max - 0.69949) <= 5e-5 and abs(b.theta1 - 1.72466) <= 1e-3
    ok &= abs(b.mod_max**2 - 2.0694) <= 5e-4 and abs(b.theta2 - 1.31364) <= 1e-3
    ok &= abs(b.re_min - K.LEFT_END) <= 1e-12 and abs(b.mod_min - K.LEFT_END) <= 1e-12
    return ok, f"Re<= {b.re_max:.6f}, |Im|<= {b.im_abs_max:.6f}, |B|^2<= {b.mod_max**2:.6f}"


def _inclusion(ctx):
    inc = geometry.inclusion_thresholds()
    ok = abs(inc.parabolic_rho - 0.13186) <= 1e-4 and abs(inc.parabolic_theta - 1.8603) <= 5e-3
    ok &= abs(inc.kst_k - 2 * math.e / (2 * math.e - math.sqrt(2 * (1 + math.e**2)))) <= 1e-10
    ok &= abs(inc.cassinian_c - math.tanh(1)) <= 1e-10 and inc.exp_inclusion
    return ok, f"rho = {inc.parabolic_rho:.6f} at {inc.parabolic_theta:.5f}"


def _cassinian(ctx):
    c = K.CASSINIAN_C
    ok = geometry.contains_curve(geometry.cassinian_curve(c - 1e-6))
    ok &= not geometry.contains_curve(geometry.cassinian_curve(c + 1e-6))
    return ok, "contained at c - 1e-6, not at c + 1e-6"


def _minimax(ctx):
    d = geometry.minimax_enclosing_disk()
    ok = abs(d.center - 1.006) <= 5e-3 and abs(d.radius - 0.69949) <= 1e-4
    _, rr = geometry.farthest_boundary_point(1.006)
    ok &= abs(rr - 0.69949) <= 1e-4
    return ok, f"center {d.center:.6f}, radius {d.radius:.6f}"


def _inscribed_value(ctx):
    v = geometry.inscribed_radius(K.ALPHA0)
    brute = float(np.min(np.abs(geometry.unit_circle_bean(8192) - K.ALPHA0)))
    return abs(v - 0.41949) <= 5e-5 and abs(v - brute) <= 1e-6, f"r_alpha0 = {v:.6f}, grid {brute:.6f}"


def _janowski_brute(ctx):
    z = np.exp(2j * np.pi * np.arange(2048) / 2048)

    def brute(A, B):
        inside = lambda r: geometry.contains_curve(geometry.janowski_disk(A, B, r).center + geometry.janowski_disk(A, B, r).radius * z)
        if inside(1 - 1e-12):
            return 1.0
        lo, hi = 0.0, 1.0
        while hi - lo > 1e-12:
            m = 0.5 * (lo + hi)
            lo, hi = (m, hi) if inside(m) else (lo, m)
        return lo

    params = [(1, -1), (0.5, -0.5), (0.8, 0.3), (1.0, 0.6), (0.3, 0.25), (-0.2, -0.9)]
    err = max(abs(radii.radius_janowski(A, B).value - brute(A, B)) for A, B in params)
    return err <= 1e-9, f"max err {err:.2e}"


def _beta_regime(ctx):
    # (A, B) = (1, 0) with gamma (k - 1) + 1 >= 0, where the modulus bound on Q holds
    ok = True
    for alpha in (0.0, 0.5, 1.0):
        for k, gammas in ((-1, (0.25, 0.5)), (0, (0.25, 0.5, 1.0))):
            for g in gammas:
                q = subordination.BetaQuery(alpha, g, k, 1, 1.0, 0.0)
                ok &= subordination.verify_sufficiency(subordination.beta_bound_mixed(q) * (1 + 1e-6), q)
    for k in (-1, 0, 1):
        q = subordination.BetaQuery(0.0, 0.5, k, 1, 1.0, 0.0)
        ok &= subordination.verify_sufficiency(subordination.beta_bound_sqrt(0.0, k) * (1 + 1e-6), q, "mixed")
    return ok, "A=1, B=0 grid and sqrt(1+z) family"


CHECKS = [
    ("conjugate_symmetry", _conjugate_symmetry),
    ("inverse_round_trip", _round_trip),
    ("bean_series_vs_stencil", _series_vs_stencil),
    ("f0_rational_coefficients", _eq5_exact),
    ("f0_float_coefficients", _eq5_float),
    ("smallest_root_residual", _root_residual),
    ("scan_doubling_stability", _scan_doubling),
    ("extremize_negation", _negation),
    ("polar_vs_direct", _polar_vs_direct),
    ("boundary_minimum_at_pi", _min_at_pi),
    ("r_alpha_continuity", _ralpha_continuity),
    ("curve_nesting", _nesting),
    ("inscribed_disk_sharpness", _inscribed_sharp),
    ("janowski_test_vs_containment", _janowski_grid),
    ("beta_mixed_monotone_alpha", _beta_monotone),
    ("beta_bounds_blow_up", _beta_blowup),
    ("r0_predicate_flip", _r0_flip),
    ("r0_value", _r0_value),
    ("sharp_radii_certified", _sharp_radii),
    ("e_alpha_zero_equals_exp", _e_alpha_zero),
    ("janowski_continuity_B0", _janowski_continuity),
    ("alpha_radii_monotone", _monotone_radii),
    ("f0_quadrature_vs_series", _f0_quad_vs_series),
    ("growth_ordering", _growth_order),
    ("distortion_continuity_r0", _distortion_continuity),
    ("distortion_threshold", _distortion_threshold),
    ("convexity_radius", _convexity),
    ("sharp_bounds_constants", _bounds_constants),
    ("inclusion_thresholds", _inclusion),
    ("cassinian_threshold", _cassinian),
    ("minimax_enclosing_disk", _minimax),
    ("inscribed_radius_alpha0", _inscribed_value),
    ("janowski_radius_vs_bisection", _janowski_brute),
    ("beta_sufficiency_A1_B0", _beta_regime),
]


def run_checks(perturb_r0: float = 0.0) -> List[CheckResult]:
    ctx = Context(r0=K.R0 + perturb_r0)
    out = []
    for name, fn in CHECKS:
        try:
            passed, detail = fn(ctx)
        except Exception as exc:  # a crashing check is a failing check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(passed), detail))
    return out


def reported_items() -> List[CheckResult]:
    """Observations printed alongside the checks; they never change the exit code."""
    items = []
    t = np.linspace(0, 2 * np.pi, 20001)
    z = np.exp(1j * t)
    d0 = bean_derivative(0.0)
    items.append(CheckResult("bean_derivative_at_0", True, f"B'(0) = {d0.real:.6f}; min Re B' on |z|=1 = {np.min(bean_derivative(z).real):.6f}"))
    w = eval_bean(z)
    inf_val = float(np.min((z * bean_derivative(z) / (w - 1)).real))
    items.append(CheckResult("starlike_wrt_one_infimum", inf_val > 0, f"min Re(z B'/(B - 1)) on |z|=1 = {inf_val:.6f}"))
    c1 = extremal.covering_radius(1e-9)
    c2 = extremal.covering_radius(5e-10)
    items.append(CheckResult("covering_radius", abs(c1 - c2) <= 1e-9, f"-f0(-1) = {c1:.10f} (tol 1e-9, halving change {abs(c1 - c2):.1e})"))
    items.append(CheckResult("enclosing_radius_center_1", True, f"max |B(e^it) - 1| = {geometry.enclosing_radius(1.0):.7f}"))
    b = geometry.sharp_bounds()
    items.append(CheckResult("strongly_starlike_order", True, f"beta = {b.beta:.9f}, arg bound = {b.arg_abs_max:.9f} rad"))
    fails = sum(
        not subordination.verify_sufficiency(subordination.bound_for(f, q) * (1 + 1e-6), q, f)
        for f, q in subordination.sample_queries(50, seed=0)
    )
    items.append(CheckResult("beta_sufficiency_random", fails == 0, f"{50 - fails}/50 random admissible queries pass at bound*(1+1e-6)"))
    items.append(CheckResult("r0_modulus_off_axis", True, f"max |w| on the bean boundary = {b.mod_max:.6f} > R0 = {K.R0:.6f}"))
    lim = radii.radius_limacon(-1.0)
    items.append(CheckResult("limacon_negative_s", bool(lim.inner_ok), f"s = -1: value {lim.value}, inner_ok {lim.inner_ok}"))
    return items
