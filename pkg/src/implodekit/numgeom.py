"""Floating-point checks of the form identities on T*SU(n) and its image in E.

Tangent vectors (xi, mu) at (k, lam) stand for d/dt (exp(t xi) k, lam + t mu).
Every quantity below is a closed-form expression; nothing is differentiated
numerically, so residuals only measure rounding.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import pi, sqrt
from typing import Sequence

import numpy as np

from . import sun
from .basicaffine import (EmbeddedPoint, act_algebra, act_group, embed_su_n, k_moment, section_point,
                          su3_quadric_residual, t_moment)
from .errors import InvalidSample, NotDominant
from .implosion import GroupPointSUn, implode_equivalent_su_n, levi_blocks

REPORT_SCHEMA = {
    "type": "object",
    "required": ["check_name", "seed", "count", "max_residual", "tolerance", "pass"],
    "properties": {
        "check_name": {"type": "string"},
        "seed": {"type": "integer", "minimum": 0},
        "count": {"type": "integer", "minimum": 1},
        "max_residual": {"type": "number", "minimum": 0},
        "tolerance": {"type": "number", "exclusiveMinimum": 0},
        "pass": {"type": "boolean"},
    },
}

SUITE_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "suite", "group", "seed", "count", "pass", "checks"],
    "properties": {
        "schema_version": {"const": 1},
        "suite": {"type": "string"},
        "group": {"type": "string"},
        "seed": {"type": "integer"},
        "count": {"type": "integer"},
        "pass": {"type": "boolean"},
        "checks": {"type": "array", "items": REPORT_SCHEMA},
    },
}

SKEW_TOL = 1e-12
S1_MARGIN = 1e-6  # circle speeds must clear this
FAT_MARGIN = 1e-8  # smallest singular value of the two-form on the open stratum
INJECTIVITY_MARGIN = 1e-6  # distance between images of inequivalent points


def rng_for(seed: int, check_name: str) -> np.random.Generator:
    """Independent stream per check, so suites can run in any order."""
    return np.random.default_rng([int(seed), zlib.crc32(check_name.encode())])


@dataclass(frozen=True, eq=False)
class TangentSample:
    k: np.ndarray
    lam: tuple
    xi: np.ndarray
    mu: tuple = field(default=())

    def __post_init__(self):
        k = np.asarray(self.k, dtype=complex)
        xi = np.asarray(self.xi, dtype=complex)
        n = k.shape[0]
        lam = tuple(self.lam)
        mu = tuple(self.mu) if self.mu else (0,) * (n - 1)
        if len(lam) != n - 1 or len(mu) != n - 1 or xi.shape != (n, n):
            raise ValueError("sample shapes do not match SU(n)")
        if any(x < 0 for x in lam):
            raise NotDominant(f"{lam} is not dominant")
        if np.linalg.norm(xi + xi.conj().T) > SKEW_TOL or abs(np.trace(xi)) > SKEW_TOL:
            raise InvalidSample("xi must be anti-Hermitian and traceless")
        if any(m != 0 for x, m in zip(lam, mu) if x == 0):
            raise InvalidSample("mu has a component along a direction vanishing on the face of lam")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def n(self) -> int:
        return self.k.shape[0]

    @property
    def body_xi(self) -> np.ndarray:
        """k^-1 xi k: the same vector moved to the identity by left translation."""
        return self.k.conj().T @ self.xi @ self.k


def beta_eval(sample: TangentSample) -> float:
    return sun.weight_value(sample.lam, sample.body_xi)


def random_lambda(n: int, rng: np.random.Generator, vanishing=()) -> tuple:
    """Dominant weight with coroot pairings in [1/4, 4] off ``vanishing``, as exact fractions."""
    return tuple(Fraction(0) if p in vanishing else Fraction(int(rng.integers(25, 401)), 100)
                 for p in range(n - 1))


def random_sample(n: int, rng: np.random.Generator, vanishing=(), identity: bool = False) -> TangentSample:
    k = np.eye(n, dtype=complex) if identity else sun.random_su(n, rng)
    lam = random_lambda(n, rng, vanishing)
    xi = sun.random_su_algebra(n, rng)
    mu = tuple(0.0 if p in vanishing else float(rng.standard_normal()) for p in range(n - 1))
    return TangentSample(k, lam, xi, mu)


def pushforward(sample: TangentSample, lam0: Sequence | None = None) -> tuple:
    """(F(k, lam), F_*(xi, mu)) with F(k, lam) = k . s(lam - lam0)."""
    lam = sample.lam if lam0 is None else tuple(x - y for x, y in zip(sample.lam, lam0))
    point = embed_su_n(sample.k, lam)
    moving = act_algebra(sample.xi, point).vector
    radial = []
    for x, m, comp in zip(lam, sample.mu, point.components):
        if x == 0:
            radial.append(np.zeros_like(comp))
        else:
            # d/dt sqrt((x + t m)/pi) = m / (2 sqrt(pi x)); comp already carries sqrt(x/pi)
            radial.append(comp * (m / (2 * float(x))))
    return point, moving + np.concatenate(radial)


def _max(values) -> float:
    return float(max(values, default=0.0))


# -- one-form, moments, two-form -------------------------------------------------

def pullback_one_form_residual(sample: TangentSample) -> float:
    point, vec = pushforward(sample)
    return abs(sun.beta_flat(point.vector, vec) - beta_eval(sample))


def check_pullback_one_form(seed: int, count: int, n: int = 2) -> float:
    rng = rng_for(seed, f"pullback_one_form_su{n}")
    return _max(pullback_one_form_residual(random_sample(n, rng)) for _ in range(count))


def moment_residual(k: np.ndarray, lam: Sequence) -> float:
    n = k.shape[0]
    point = embed_su_n(k, lam)
    h = sun.coadjoint(k, sun.weight_hermitian(lam))
    return _max(abs(k_moment(point, xi) + sun.pair(h, xi)) for xi in sun.su_basis(n))


def check_moment_compatibility(seed: int, count: int, n: int = 2) -> float:
    rng = rng_for(seed, f"moment_compatibility_su{n}")
    out = 0.0
    for _ in range(count):
        s = random_sample(n, rng)
        out = max(out, moment_residual(s.k, s.lam))
    return out


def section_t_moment_residual(lam: Sequence) -> float:
    return _max(abs(a + float(b)) for a, b in zip(t_moment(section_point(len(lam) + 1, lam)), lam))


def check_section_t_moment(seed: int, count: int, n: int = 2) -> float:
    rng = rng_for(seed, f"section_t_moment_su{n}")
    return _max(section_t_moment_residual(random_lambda(n, rng)) for _ in range(count))


def product_form(lam: Sequence, u1: TangentSample, u2: TangentSample) -> float:
    """mu1(eta2) - mu2(eta1) - lam([eta1, eta2]) with eta = k^-1 xi k."""
    e1, e2 = u1.body_xi, u2.body_xi
    return (sun.weight_value(u1.mu, e2) - sun.weight_value(u2.mu, e1)
            - sun.weight_value(lam, e1 @ e2 - e2 @ e1))


def product_form_residual(u1: TangentSample, u2: TangentSample, lam0: Sequence | None = None) -> float:
    """|omega_E(F_* u1, F_* u2) + orbit term - product form|; u1, u2 share their base point."""
    point, v1 = pushforward(u1, lam0)
    _, v2 = pushforward(u2, lam0)
    lhs = sun.omega_flat(v1, v2)
    if lam0 is not None:
        e1, e2 = u1.body_xi, u2.body_xi
        lhs -= sun.weight_value(lam0, e1 @ e2 - e2 @ e1)
    return abs(lhs - product_form(u1.lam, u1, u2))


def check_omega_product_form(seed: int, count: int, lam0: Sequence | None = None, n: int = 2) -> float:
    tag = "zero" if lam0 is None or not any(lam0) else "shifted"
    rng = rng_for(seed, f"omega_product_form_{tag}_su{n}")
    if lam0 is not None and not any(lam0):
        lam0 = None
    out = 0.0
    for _ in range(count):
        k = sun.random_su(n, rng)
        lam = random_lambda(n, rng)
        if lam0 is not None:
            lam = tuple(x + Fraction(y) for x, y in zip(lam, lam0))
        u1, u2 = (TangentSample(k, lam, sun.random_su_algebra(n, rng),
                                tuple(float(x) for x in rng.standard_normal(n - 1)))
                  for _ in range(2))
        out = max(out, product_form_residual(u1, u2, lam0))
    return out


@lru_cache(maxsize=None)
def _product_form_parts(n: int) -> tuple:
    """Constant mu-part and the per-coordinate bracket parts of the product form matrix."""
    algebra = sun.su_basis(n)
    r, size = n - 1, len(algebra) + n - 1
    const = np.zeros((size, size))
    for p in range(r):
        w = tuple(float(i == p) for i in range(r))
        for a, x in enumerate(algebra):
            # mu1(xi2) - mu2(xi1) with mu1 = e_p (row) or mu2 = e_p (column)
            const[len(algebra) + p, a] = sun.weight_value(w, x)
            const[a, len(algebra) + p] = -sun.weight_value(w, x)
    brackets = np.zeros((r, size, size))
    for p in range(r):
        w = tuple(float(i == p) for i in range(r))
        for a, x1 in enumerate(algebra):
            for b, x2 in enumerate(algebra):
                brackets[p, a, b] = sun.weight_value(w, x1 @ x2 - x2 @ x1)
    return const, brackets


def product_form_matrix(lam: Sequence) -> np.ndarray:
    """The product two-form at (1, lam) on the basis su(n) x (fundamental directions of t*)."""
    const, brackets = _product_form_parts(len(lam) + 1)
    return const - np.tensordot(np.array([float(x) for x in lam]), brackets, axes=1)


def fatness_singular_values(lam: Sequence) -> np.ndarray:
    return np.linalg.svd(product_form_matrix(lam), compute_uv=False)


# -- contact structure ----------------------------------------------------------

def _real_basis_orthogonal(z: np.ndarray) -> list:
    """Orthonormal real basis of {v in C^n : Re<z, v> = 0}."""
    n = len(z)
    flat = np.concatenate([z.real, z.imag])
    q, _ = np.linalg.qr(np.column_stack([flat, np.eye(2 * n)]))
    return [q[:n, j] + 1j * q[n:, j] for j in range(1, 2 * n)]


def contact_cn(c: float, seed: int, count: int, n: int = 2) -> tuple:
    """On |z|^2 = -2c in C^n: (max|omega(Xi, v)|, max|beta(-Xi/c) - 1|, max Reeb-Hopf misalignment)."""
    if c == 0:
        raise ValueError("c = 0 is the critical level")
    if c > 0:
        raise ValueError("phi = -|z|^2/2 is negative: the level set is empty for c > 0")
    rng = rng_for(seed, f"contact_c{n}")
    r_dnu = r_nu = r_hopf = 0.0
    for _ in range(count):
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z *= sqrt(-2 * c) / np.linalg.norm(z)
        reeb = 1j * z  # generator of the circle action with moment -|z|^2/2
        w = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        v = w - (sun.herm(w, z).real / sun.herm(z, z).real) * z
        r_dnu = max(r_dnu, abs(sun.omega_flat(reeb, v)))
        r_nu = max(r_nu, abs(sun.beta_flat(z, -reeb / c) - 1))
        basis = _real_basis_orthogonal(z)
        gram = np.array([[sun.omega_flat(a, b) for b in basis] for a in basis])
        _, _, vt = np.linalg.svd(gram)
        kernel = sum(x * b for x, b in zip(vt[-1], basis))
        unit = reeb / np.linalg.norm(reeb)
        r_hopf = max(r_hopf, float(np.linalg.norm(kernel - sun.herm(kernel, unit) * unit)))
    return r_dnu, r_nu, r_hopf


def _random_hermitian_traceless(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = (a + a.conj().T) / 2
    return h - np.trace(h) / n * np.eye(n)


def contact_cotangent_su2(c: float, seed: int, count: int) -> tuple:
    """Level set lam(Xi) = c of T*SU(2), left trivialised: (max|omega(Xi_M, v)|, max|beta(-Xi_M/c) - 1|)."""
    if c == 0:
        raise ValueError("c = 0 is the critical level")
    n = 2
    xi = sun.xi_matrix(n)
    unit = sun.weight_hermitian((1,))  # pairs to -1 with Xi
    rng = rng_for(seed, "contact_cotangent_su2")
    r_dnu = r_nu = 0.0

    def omega(lam, t1, t2):
        (e1, n1), (e2, n2) = t1, t2
        return sun.pair(n1, e2) - sun.pair(n2, e1) - sun.pair(lam, e1 @ e2 - e2 @ e1)

    for _ in range(count):
        lam = _random_hermitian_traceless(n, rng)
        lam = lam + (sun.pair(lam, xi) - c) * unit
        eta = sun.random_su_algebra(n, rng)
        nu = _random_hermitian_traceless(n, rng)
        nu = nu + sun.pair(nu, xi) * unit  # now nu(Xi) = 0: tangent to the level set
        # Xi_M has eta = -Xi and nu = -lam([Xi, .]), which is the Hermitian matrix [Xi, lam]
        gen = (-xi, xi @ lam - lam @ xi)
        r_dnu = max(r_dnu, abs(omega(lam, gen, (eta, nu))))
        r_nu = max(r_nu, abs(sun.pair(lam, -gen[0] / c) - 1))
    return r_dnu, r_nu


# -- circle action ------------------------------------------------------------------

def circle_speed(point: EmbeddedPoint) -> float:
    """Norm of the vector field of the circle generated by Xi, acting through the highest weights."""
    n = point.n
    xi = sun.xi_matrix(n)
    parts = []
    for p, comp in enumerate(point.components):
        w = tuple(int(i == p) for i in range(n - 1))
        parts.append(2j * pi * sun.weight_value(w, xi) * comp)
    return float(np.linalg.norm(np.concatenate(parts)))


def _off_vertex_face(n: int, rng: np.random.Generator) -> tuple:
    while True:
        vanishing = tuple(p for p in range(n - 1) if rng.random() < 0.3)
        if len(vanishing) < n - 1:
            return vanishing


def s1_speed_stats(seed: int, count: int, n: int = 2) -> tuple:
    """(max |speed - 2 pi ||F||| , min speed) over random points off the vertex."""
    rng = rng_for(seed, f"s1_locally_free_su{n}")
    worst, slowest = 0.0, np.inf
    for _ in range(count):
        vanishing = _off_vertex_face(n, rng)
        point = embed_su_n(sun.random_su(n, rng), random_lambda(n, rng, vanishing))
        speed = circle_speed(point)
        worst = max(worst, abs(speed - 2 * pi * float(np.linalg.norm(point.vector))))
        slowest = min(slowest, speed)
    return worst, float(slowest)


def s1_locally_free_check(seed: int, count: int, n: int = 2) -> float:
    return s1_speed_stats(seed, count, n)[1]


def circle_speed_at(k: np.ndarray, lam: Sequence) -> float:
    if not any(lam):
        raise InvalidSample("the vertex is fixed by the circle action")
    return circle_speed(embed_su_n(k, lam))


# -- embedding -------------------------------------------------------------------------

def check_section_norm(seed: int, count: int, n: int = 2) -> float:
    """| ||s(lam)||^2 - sum_p lam_p / pi |."""
    rng = rng_for(seed, f"section_norm_su{n}")
    out = 0.0
    for _ in range(count):
        lam = random_lambda(n, rng)
        v = section_point(n, lam).vector
        out = max(out, abs(float(np.vdot(v, v).real) - float(sum(lam)) / pi))
    return out


def check_equivariance(seed: int, count: int, n: int = 2) -> float:
    """F(k1 k2, lam) against k1 . F(k2, lam)."""
    rng = rng_for(seed, f"equivariance_su{n}")
    out = 0.0
    for _ in range(count):
        k1, k2 = sun.random_su(n, rng), sun.random_su(n, rng)
        lam = random_lambda(n, rng)
        a = embed_su_n(k1 @ k2, lam).vector
        b = act_group(k1, embed_su_n(k2, lam)).vector
        out = max(out, float(np.linalg.norm(a - b)))
    return out


def _random_levi_commutator(n: int, vanishing, rng: np.random.Generator) -> np.ndarray:
    g = np.eye(n, dtype=complex)
    for block in levi_blocks(n, vanishing):
        if len(block) > 1:
            g[np.ix_(block, block)] = sun.random_su(len(block), rng)
    return g


def check_injectivity(seed: int, count: int, n: int = 2) -> tuple:
    """(min distance between images of inequivalent pairs, max distance between equivalent ones)."""
    rng = rng_for(seed, f"injectivity_su{n}")
    closest, farthest = np.inf, 0.0
    for _ in range(count):
        vanishing = tuple(p for p in range(n - 1) if rng.random() < 0.3)
        lam = random_lambda(n, rng, vanishing)
        k1 = sun.random_su(n, rng)
        same = rng.random() < 0.5
        k2 = k1 @ _random_levi_commutator(n, vanishing, rng) if same else sun.random_su(n, rng)
        m1, m2 = GroupPointSUn(k1, lam), GroupPointSUn(k2, lam)
        gap = float(np.linalg.norm(embed_su_n(k1, lam).vector - embed_su_n(k2, lam).vector))
        if implode_equivalent_su_n(m1, m2):
            farthest = max(farthest, gap)
        else:
            closest = min(closest, gap)
    return float(closest), farthest


def check_quadric(seed: int, count: int) -> float:
    rng = rng_for(seed, "su3_quadric")
    out = 0.0
    for _ in range(count):
        vanishing = tuple(p for p in range(2) if rng.random() < 0.2)
        out = max(out, su3_quadric_residual(embed_su_n(sun.random_su(3, rng),
                                                       random_lambda(3, rng, vanishing))))
    return out


def contact_reeb_check(c: float, seed: int, count: int, model: str = "c2") -> tuple:
    """(residual_dnu, residual_nu) on the level set phi = c of a model space: c1, c2 or cotangent_su2."""
    if model in ("c1", "c2"):
        dnu, nu, _ = contact_cn(c, seed, count, int(model[1]))
        return dnu, nu
    if model == "cotangent_su2":
        return contact_cotangent_su2(c, seed, count)
    raise ValueError(f"unknown model {model!r}")
