"""The affine model: the module E, its highest-weight section and the SU(n) embedding.

For SU(n) the fundamental modules are the exterior powers Lambda^p C^n with
highest vectors v_p = e_1 ^ ... ^ e_p, and a point (k, lam) of T*K over the
chamber goes to sum_p sqrt(lam_p / pi) Lambda^p(k) v_p.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, pi, sqrt
from typing import Sequence

import numpy as np

from . import sun
from ._linalg import rank as exact_rank
from .chamber import Face, levi_roots
from .errors import ImplodeKitError, InvalidRootDatum, NotDominant
from .implosion import GroupPointSUn, check_special_unitary, su_n_datum_check
from .rootdata import RootDatum, build_root_datum, positive_roots, weyl_dimension

EMBEDDED_POINT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "modules"],
    "properties": {
        "schema_version": {"const": 1},
        "group": {"type": "string"},
        "modules": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["weight", "coeffs"],
                "properties": {
                    "weight": {"type": "array", "items": {"type": "integer"}},
                    "coeffs": {"type": "array",
                               "items": {"type": "array", "items": {"type": "number"},
                                         "minItems": 2, "maxItems": 2}},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class ModuleESpec:
    """Generators (weight, dim) of E.  Torus generators carry their central coordinates."""

    generators: tuple
    n: int | None = None  # set for SU(n): V_p is then Lambda^p C^n

    @property
    def dim(self) -> int:
        return sum(d for _, d in self.generators)


def _is_sc_times_torus(d: RootDatum) -> bool:
    """Fundamental weights integral on the cocharacters: [K,K] simply connected and split off."""
    return all(Fraction(x).denominator == 1 for row in d.weight_coords for x in row)


def module_E_spec(d: RootDatum) -> ModuleESpec:
    if d.rank_ss and not _is_sc_times_torus(d):
        raise InvalidRootDatum(f"{d.name}: the affine model needs a simply connected derived group")
    r, c = d.rank_ss, d.central_rank
    gens = []
    for p in range(r):
        w = tuple(int(i == p) for i in range(r))
        gens.append((w + (0,) * c, weyl_dimension(d, w)))
    for p in range(c):
        kappa = tuple(int(i == p) for i in range(c))
        gens.append(((0,) * r + kappa, 1))
        gens.append(((0,) * r + tuple(-x for x in kappa), 1))
    n = None
    if c == 0 and d.series == "A" and d.isogeny == "simply-connected":
        n = r + 1
    return ModuleESpec(tuple(gens), n)


def _chi(t: float) -> float:
    return sqrt(t + sqrt(t * t + 1))


def section_s(d: RootDatum, lam: Sequence) -> list:
    """Coefficients of s(lam) on the highest vectors, in the order of module_E_spec."""
    r, c = d.rank_ss, d.central_rank
    if len(lam) != r + c:
        raise ValueError(f"weight {tuple(lam)} must have {r + c} coordinates")
    ss = lam[:r]
    if any(x < 0 for x in ss):
        raise NotDominant(f"{tuple(ss)} is not dominant")
    out = [sqrt(float(x) / pi) for x in ss]
    for t in lam[r:]:
        x = _chi(float(t))
        out += [x / sqrt(2 * pi), 1 / (x * sqrt(2 * pi))]
    return out


@dataclass(frozen=True, eq=False)
class EmbeddedPoint:
    """A point of E = Lambda^1 C^n + ... + Lambda^{n-1} C^n."""

    components: tuple  # one complex vector per p = 1..n-1

    @property
    def n(self) -> int:
        return len(self.components) + 1

    @property
    def vector(self) -> np.ndarray:
        return np.concatenate(self.components) if self.components else np.zeros(0, dtype=complex)

    @classmethod
    def from_vector(cls, n: int, v) -> "EmbeddedPoint":
        v = np.asarray(v, dtype=complex)
        parts, start = [], 0
        for p in range(1, n):
            size = comb(n, p)
            parts.append(v[start:start + size])
            start += size
        if start != len(v):
            raise ValueError(f"vector of length {len(v)} does not fit E for SU({n})")
        return cls(tuple(parts))

    def to_json(self, group: str | None = None) -> dict:
        mods = []
        for p, comp in enumerate(self.components):
            w = [int(i == p) for i in range(self.n - 1)]
            mods.append({"weight": w, "coeffs": [[float(z.real), float(z.imag)] for z in comp]})
        return {"schema_version": 1, "group": group or f"A{self.n - 1}", "modules": mods}


def act_group(k: np.ndarray, v: EmbeddedPoint) -> EmbeddedPoint:
    return EmbeddedPoint(tuple(sun.exterior_power(k, p + 1) @ c for p, c in enumerate(v.components)))


def act_algebra(xi: np.ndarray, v: EmbeddedPoint) -> EmbeddedPoint:
    return EmbeddedPoint(tuple(sun.exterior_derivation(xi, p + 1) @ c
                               for p, c in enumerate(v.components)))


def section_point(n: int, lam: Sequence) -> EmbeddedPoint:
    if len(lam) != n - 1:
        raise ValueError("lam must have n - 1 fundamental coordinates")
    if any(x < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    return EmbeddedPoint(tuple(sqrt(float(x) / pi) * sun.highest_vector(n, p + 1)
                               for p, x in enumerate(lam)))


def embed_su_n(k, lam: Sequence) -> EmbeddedPoint:
    """F(k, lam) = k . s(lam); only the first column of each Lambda^p k is needed."""
    k = check_special_unitary(k)
    n = k.shape[0]
    if len(lam) != n - 1:
        raise ValueError("lam must have n - 1 fundamental coordinates")
    if any(x < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    comps = []
    for p, x in enumerate(lam, start=1):
        cols = tuple(range(p))
        minors = np.array([np.linalg.det(k[np.ix_(I, cols)]) for I in sun.wedge_basis(n, p)])
        comps.append(sqrt(float(x) / pi) * minors)
    return EmbeddedPoint(tuple(comps))


def embed_point(m: GroupPointSUn) -> EmbeddedPoint:
    return embed_su_n(m.k, m.lam)


# -- stabilizers -----------------------------------------------------------------

def _sl_basis_exact(n: int) -> list:
    """Complex basis of sl(n, C): E_ij (i != j) and E_ii - E_{i+1,i+1}, as integer matrices."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append([[int(a == i and b == j) for b in range(n)] for a in range(n)])
    for i in range(n - 1):
        out.append([[(1 if a == b == i else -1 if a == b == i + 1 else 0) for b in range(n)]
                    for a in range(n)])
    return out


def v_sigma_stabilizer_dim(d: RootDatum, sigma: Face, n: int | None = None) -> tuple:
    """(nullity of xi -> xi.v_sigma on sl(n,C), Levi-formula dimension, whether they agree).

    v_sigma is the sum of the highest vectors v_p over the simple roots p not
    vanishing on sigma.  The action matrix has integer entries, so the rank is exact.
    """
    n_expected = su_n_datum_check(d)
    n = n or n_expected
    if n != n_expected:
        raise ImplodeKitError(f"{d.name} is SU({n_expected}), not SU({n})")
    keep = [p for p in range(n - 1) if p not in sigma.vanishing_set]
    columns = []
    for x in _sl_basis_exact(n):
        xi = np.array(x, dtype=float)
        col = []
        for p in range(1, n):
            img = sun.exterior_derivation(xi, p) @ sun.highest_vector(n, p).real \
                if (p - 1) in keep else np.zeros(comb(n, p))
            col += [int(round(v)) for v in np.real(img)]
        columns.append(col)
    computed = len(columns) - exact_rank(columns)
    n_pos = len(positive_roots(d))
    levi = levi_roots(d, sigma)
    expected = len(levi) + len(sigma.vanishing_set) + (n_pos - len(levi) // 2)
    return computed, expected, computed == expected


# -- SU(3) quadric ---------------------------------------------------------------

# z_k = (-1)^(k+1) * coefficient of e_i ^ e_j, {i, j, k} = {1, 2, 3}; Lambda^2 basis (12), (13), (23)
_Z_FROM_WEDGE = ((2, 1), (1, -1), (0, 1))


def wz_coordinates(v: EmbeddedPoint) -> tuple:
    """(w, z) in C^3 x C^3 from an SU(3) point of E."""
    if v.n != 3:
        raise ValueError("w, z coordinates are defined for SU(3) only")
    w, lam2 = v.components
    return np.asarray(w), np.array([s * lam2[i] for i, s in _Z_FROM_WEDGE])


def su3_quadric_residual(v) -> float:
    """|sum_k w_k z_k|.  A raw 6-vector is read as (w, z) directly."""
    if isinstance(v, EmbeddedPoint):
        w, z = wz_coordinates(v)
    else:
        arr = np.asarray(v, dtype=complex)
        if arr.shape != (6,):
            raise ValueError("expected a vector in C^3 x C^3")
        w, z = arr[:3], arr[3:]
    return float(abs(np.sum(w * z)))


# -- moments -----------------------------------------------------------------------

def k_moment(v: EmbeddedPoint, xi: np.ndarray) -> float:
    """Phi_E^xi(v) = 1/2 omega(xi v, v) = -1/2 Im <xi v, v>."""
    vec = v.vector
    return -0.5 * sun.herm(act_algebra(xi, v).vector, vec).imag


def t_moment(v: EmbeddedPoint) -> tuple:
    """Torus moment in fundamental coordinates: the values on the simple coroots."""
    return tuple(k_moment(v, sun.coroot_matrix(v.n, p)) for p in range(v.n - 1))


def ambient_moments(v: EmbeddedPoint, xi) -> tuple:
    xi = np.asarray(xi, dtype=complex)
    if np.linalg.norm(xi + xi.conj().T) > 1e-12 or abs(np.trace(xi)) > 1e-12:
        raise ValueError("xi must be anti-Hermitian and traceless")
    return k_moment(v, xi), t_moment(v)


def torus_section_moment(lam: Sequence) -> tuple:
    """Moment of s(lam) for a torus: -pi (|c_+|^2 - |c_-|^2) on each circle factor."""
    out = []
    for t in lam:
        x = _chi(float(t))
        cp, cm = x / sqrt(2 * pi), 1 / (x * sqrt(2 * pi))
        out.append(-pi * (cp * cp - cm * cm))
    return tuple(out)


# -- Hilbert function ----------------------------------------------------------------

def hilbert_vs_weyl(a: int, b: int) -> tuple:
    """Bidegree (a, b) part of C[w, z]/(w.z) against dim V_(a,b) of SU(3)."""
    if a < 0 or b < 0:
        raise ValueError("degrees must be nonnegative")
    sym = lambda m: comb(m + 2, 2) if m >= 0 else 0  # noqa: E731
    hilbert = sym(a) * sym(b) - sym(a - 1) * sym(b - 1)
    weyl = weyl_dimension(build_root_datum("A", 2), (a, b))
    return hilbert, weyl, hilbert == weyl
