"""Verification suites: named groups of seeded checks with pass/fail reports."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import numgeom as ng
from .basicaffine import hilbert_vs_weyl, v_sigma_stabilizer_dim
from .chamber import enumerate_faces
from .errors import ImplodeKitError
from .implosion import su_n_datum_check
from .rootdata import RootDatum, build_root_datum

SUITES = ("geometry", "contact", "embedding", "quadric", "hilbert")
HILBERT_RANGE = 12


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    seed: int
    count: int
    max_residual: float
    tolerance: float
    passed: bool
    extra: dict

    def to_json(self) -> dict:
        out = {"check_name": self.check_name, "seed": self.seed, "count": self.count,
               "max_residual": self.max_residual, "tolerance": self.tolerance, "pass": self.passed}
        out.update(self.extra)
        return out


@dataclass(frozen=True)
class Check:
    name: str
    tolerance: float
    # (seed, count) -> (max_residual, extra fields, extra pass condition)
    run: Callable


def _plain(f):
    return lambda seed, count: (f(seed, count), {}, True)


def _speed_check(n):
    def run(seed, count):
        worst, slowest = ng.s1_speed_stats(seed, count, n)
        return worst, {"min_speed": slowest}, slowest > ng.S1_MARGIN
    return run


def _fatness_check(n):
    def run(seed, count):
        rng = ng.rng_for(seed, f"fatness_su{n}")
        interior, wall = np.inf, 0.0
        for _ in range(count):
            lam = ng.random_lambda(n, rng)
            interior = min(interior, float(ng.fatness_singular_values(lam).min()))
            p = int(rng.integers(n - 1))
            on_wall = tuple(0 if i == p else x for i, x in enumerate(lam))
            wall = max(wall, float(ng.fatness_singular_values(on_wall).min()))
        return wall, {"min_interior_singular_value": interior}, interior > ng.FAT_MARGIN
    return run


def _injectivity_check(n):
    def run(seed, count):
        closest, farthest = ng.check_injectivity(seed, count, n)
        return farthest, {"min_distance": closest}, closest >= ng.INJECTIVITY_MARGIN
    return run


def _stabilizer_check(d):
    def run(seed, count):
        worst = 0
        for f in enumerate_faces(d):
            computed, expected, _ = v_sigma_stabilizer_dim(d, f)
            worst = max(worst, abs(computed - expected))
        return float(worst), {}, True
    return run


def _hilbert(seed, count):
    worst = 0
    for a in range(HILBERT_RANGE + 1):
        for b in range(HILBERT_RANGE + 1):
            hilbert, weyl, _ = hilbert_vs_weyl(a, b)
            worst = max(worst, abs(hilbert - weyl))
    return float(worst), {}, True


def _contact_cn(c, n):
    def run(seed, count):
        dnu, nu, hopf = ng.contact_cn(c, seed, count, n)
        return max(dnu, nu, hopf), {"residual_dnu": dnu, "residual_nu": nu, "residual_hopf": hopf}, True
    return run


def _contact_cotangent(seed, count):
    dnu, nu = ng.contact_cotangent_su2(-1.0, seed, count)
    return max(dnu, nu), {"residual_dnu": dnu, "residual_nu": nu}, True


def _su_rank(d: RootDatum) -> int:
    n = su_n_datum_check(d)
    if n not in (2, 3):
        raise ImplodeKitError("numerical suites are implemented for SU(2) and SU(3)")
    return n


def suite_checks(suite: str, d: RootDatum | None) -> list:
    if suite == "geometry":
        n = _su_rank(d)
        rho = (1,) * (n - 1)
        return [
            Check(f"pullback_one_form_su{n}", 1e-9, _plain(lambda s, c: ng.check_pullback_one_form(s, c, n))),
            Check(f"moment_compatibility_su{n}", 1e-9,
                  _plain(lambda s, c: ng.check_moment_compatibility(s, c, n))),
            Check(f"section_t_moment_su{n}", 1e-12, _plain(lambda s, c: ng.check_section_t_moment(s, c, n))),
            Check(f"omega_product_form_zero_su{n}", 1e-8,
                  _plain(lambda s, c: ng.check_omega_product_form(s, c, None, n))),
            Check(f"omega_product_form_rho_su{n}", 1e-8,
                  _plain(lambda s, c: ng.check_omega_product_form(s, c, rho, n))),
            Check(f"s1_locally_free_su{n}", 1e-10, _speed_check(n)),
            Check(f"fatness_su{n}", 1e-10, _fatness_check(n)),
        ]
    if suite == "embedding":
        n = _su_rank(d)
        return [
            Check(f"section_norm_su{n}", 1e-12, _plain(lambda s, c: ng.check_section_norm(s, c, n))),
            Check(f"equivariance_su{n}", 1e-10, _plain(lambda s, c: ng.check_equivariance(s, c, n))),
            Check(f"injectivity_su{n}", 1e-10, _injectivity_check(n)),
            Check(f"stabilizer_dims_su{n}", 1e-12, _stabilizer_check(d)),
        ]
    if suite == "quadric":
        if d is not None and su_n_datum_check(d) != 3:
            raise ImplodeKitError("the quadric suite is specific to SU(3)")
        return [Check("su3_quadric", 1e-12, _plain(ng.check_quadric))]
    if suite == "hilbert":
        return [Check("hilbert_vs_weyl_su3", 1e-12, _hilbert)]
    if suite == "contact":
        return [
            Check("contact_c1", 1e-10, _contact_cn(-0.5, 1)),
            Check("contact_c2", 1e-10, _contact_cn(-1.0, 2)),
            Check("contact_cotangent_su2", 1e-9, _contact_cotangent),
        ]
    raise ImplodeKitError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def run_check(check: Check, seed: int, count: int, tolerance: float | None = None) -> CheckResult:
    tol = check.tolerance if tolerance is None else tolerance
    residual, extra, ok = check.run(seed, count)
    return CheckResult(check.name, seed, count, residual, tol, bool(residual <= tol and ok), extra)


def run_suite(suite: str, d: RootDatum | None, seed: int, count: int,
              tolerance: float | None = None) -> dict:
    """Report for one suite.  ``tolerance`` replaces every residual bound; lower-bound margins stay."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if tolerance is not None and not tolerance > 0:
        raise ValueError("tolerance must be positive")
    if suite in ("quadric", "hilbert") and d is None:
        d = build_root_datum("A", 2)
    results = [run_check(c, seed, count, tolerance) for c in suite_checks(suite, d)]
    return {"schema_version": 1, "suite": suite, "group": d.name if d is not None else "none",
            "seed": seed, "count": count, "pass": all(r.passed for r in results),
            "checks": [r.to_json() for r in results]}
