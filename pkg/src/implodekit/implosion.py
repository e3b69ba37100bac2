"""Strata of the universal imploded cross-section and point-level equivalence.

The stratum over a face sigma is K/[K_sigma, K_sigma] x sigma, so everything
here is bookkeeping over the face lattice plus a Smith-normal-form lattice
index for the smoothness class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .chamber import Face, enumerate_faces, face_of, levi_roots, make_face
from .errors import ImplodeKitError, InvalidGroupElement, NotDominant
from .rootdata import RootDatum, levi_fundamental_group_order, positive_roots

UNITARY_TOL = 1e-10
MEMBERSHIP_TOL = 1e-9
STRICT_MARGIN = 1e-12

STRATUM_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "strata"],
    "properties": {
        "schema_version": {"const": 1},
        "group": {"type": "string"},
        "strata": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["face", "real_dim", "orbit_type", "smoothness", "closure_preds"],
                "properties": {
                    "face": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "real_dim": {"type": "integer", "minimum": 0},
                    "orbit_type": {
                        "type": "object",
                        "required": ["label", "dim_commutator_parabolic"],
                        "properties": {"label": {"type": "string"},
                                       "dim_commutator_parabolic": {"type": "integer"}},
                    },
                    "smoothness": {
                        "type": "object",
                        "required": ["kind"],
                        "properties": {"kind": {"enum": ["Smooth", "OrbifoldOnly", "Singular"]}},
                    },
                    "closure_preds": {"type": "array",
                                      "items": {"type": "array", "items": {"type": "integer"}}},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class Smoothness:
    kind: str  # "Smooth", "OrbifoldOnly" or "Singular"
    k: int | None = None  # number of A1 factors of the Levi derived group
    order: int | None = None  # order of the finite central quotient

    def __str__(self):
        if self.kind == "Smooth":
            return f"Smooth({self.k})"
        if self.kind == "OrbifoldOnly":
            return f"OrbifoldOnly({self.order})"
        return "Singular"

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.k is not None:
            out["k"] = self.k
        if self.order is not None:
            out["order"] = self.order
        return out

    @property
    def slice_complex_dim(self) -> int | None:
        """Complex dimension of the transverse slice (C^2)^k, when it is one."""
        return 2 * self.k if self.kind in ("Smooth", "OrbifoldOnly") else None


@dataclass(frozen=True)
class Stratum:
    face: Face
    real_dim: int
    dim_commutator_parabolic: int  # complex dimension of [P_sigma, P_sigma]
    smoothness: Smoothness
    closure_preds: tuple = field(default=())  # faces sigma <= this face

    @property
    def orbit_type(self) -> str:
        return "G/[P_sigma,P_sigma]"

    def to_json(self) -> dict:
        return {
            "face": self.face.to_json(),
            "real_dim": self.real_dim,
            "orbit_type": {"label": self.orbit_type,
                           "dim_commutator_parabolic": self.dim_commutator_parabolic},
            "smoothness": self.smoothness.to_json(),
            "closure_preds": [f.to_json() for f in self.closure_preds],
        }


def commutator_levi_dim(d: RootDatum, sigma: Face) -> int:
    """dim [K_sigma, K_sigma] = |R_sigma| + |S_sigma|."""
    return len(levi_roots(d, sigma)) + len(sigma.vanishing_set)


def stratum_dim(d: RootDatum, sigma: Face) -> int:
    return d.dim_group - commutator_levi_dim(d, sigma) + sigma.dim


def commutator_parabolic_dim(d: RootDatum, sigma: Face) -> int:
    """Complex dim of [P_sigma,P_sigma] = [G_sigma,G_sigma] U_sigma."""
    n_pos = len(positive_roots(d))
    n_levi_pos = len(levi_roots(d, sigma)) // 2
    return commutator_levi_dim(d, sigma) + (n_pos - n_levi_pos)


def classify_smoothness(d: RootDatum, sigma: Face) -> Smoothness:
    s = sigma.vanishing_set
    orthogonal = all(d.cartan[i][j] == 0 for i in s for j in s if i != j)
    if not orthogonal:
        return Smoothness("Singular")
    order = levi_fundamental_group_order(d, s)
    if order == 1:
        return Smoothness("Smooth", k=len(s))
    return Smoothness("OrbifoldOnly", k=len(s), order=order)


def universal_strata(d: RootDatum) -> list:
    faces = enumerate_faces(d)
    out = []
    for f in faces:
        preds = tuple(g for g in faces if g <= f)
        out.append(Stratum(f, stratum_dim(d, f), commutator_parabolic_dim(d, f),
                           classify_smoothness(d, f), preds))
    return out


def strata_report(d: RootDatum) -> dict:
    return {"schema_version": 1, "group": d.name,
            "strata": [s.to_json() for s in universal_strata(d)]}


def cone_height(d: RootDatum, lam: Sequence) -> Fraction:
    """lam(Xi) with Xi = -(sum of simple coroots); <= 0 on the chamber."""
    if d.central_rank:
        raise ImplodeKitError("cone height is only proper for semisimple groups")
    lam = d.semisimple_part(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} is not dominant")
    return -sum((Fraction(x) for x in lam), Fraction(0))


# -- SU(n) points ------------------------------------------------------------

def check_special_unitary(k, tol: float = UNITARY_TOL) -> np.ndarray:
    k = np.asarray(k, dtype=complex)
    n = k.shape[0]
    if k.shape != (n, n):
        raise InvalidGroupElement("group element must be square")
    if np.linalg.norm(k.conj().T @ k - np.eye(n)) > tol or abs(np.linalg.det(k) - 1) > tol:
        raise InvalidGroupElement("matrix is not special unitary")
    return k


@dataclass(frozen=True, eq=False)
class GroupPointSUn:
    """A point (k, lam) of T*SU(n) over the closed chamber, left-trivialised."""

    k: np.ndarray
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "k", check_special_unitary(self.k))
        lam = tuple(self.lam)
        if len(lam) != self.k.shape[0] - 1:
            raise ValueError("lam must have n - 1 fundamental coordinates")
        if any(x < 0 for x in lam):
            raise NotDominant(f"{lam} is not dominant")
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return self.k.shape[0]


def levi_blocks(n: int, vanishing) -> list:
    """Diagonal blocks of the Levi of SU(n): runs of consecutive vanishing simple roots."""
    s = set(vanishing)
    blocks = []
    start = 0
    for i in range(n - 1):
        if i not in s:
            blocks.append(list(range(start, i + 1)))
            start = i + 1
    blocks.append(list(range(start, n)))
    return blocks


def in_levi_commutator(g: np.ndarray, vanishing, tol: float = MEMBERSHIP_TOL) -> bool:
    """Membership of g in S(U(n1)) x ... x S(U(nj)) with every block special unitary."""
    n = g.shape[0]
    mask = np.zeros((n, n), dtype=bool)
    for b in levi_blocks(n, vanishing):
        idx = np.ix_(b, b)
        mask[idx] = True
        blk = g[idx]
        if np.linalg.norm(blk.conj().T @ blk - np.eye(len(b))) > tol:
            return False
        if abs(np.linalg.det(blk) - 1) > tol:
            return False
    return bool(np.all(np.abs(g[~mask]) <= tol))


def implode_equivalent_su_n(m1: GroupPointSUn, m2: GroupPointSUn, tol: float = MEMBERSHIP_TOL) -> bool:
    """m1 ~ m2 iff same lam and k1^{-1} k2 lies in [K_lam, K_lam].

    The right action of K on T*K = K x k* is (k, lam) -> (k g^{-1}, g lam), so
    equivalent points differ by right multiplication.
    """
    if m1.n != m2.n:
        return False
    if tuple(m1.lam) != tuple(m2.lam):
        return False
    vanishing = [i for i, x in enumerate(m1.lam) if x == 0]
    g = m1.k.conj().T @ m2.k
    return in_levi_commutator(g, vanishing, tol)


def principal_stratum_membership_unp(x) -> bool:
    """Open-stratum test for U(n) acting on n x p matrices: orthogonal rows, strictly decreasing norms."""
    x = np.atleast_2d(np.asarray(x, dtype=complex))
    n = x.shape[0]
    gram = x @ x.conj().T
    off = gram - np.diag(np.diag(gram))
    if np.any(np.abs(off) > MEMBERSHIP_TOL):
        return False
    norms = np.sqrt(np.real(np.diag(gram)))
    return all(norms[j] - norms[j + 1] > STRICT_MARGIN for j in range(n - 1))


def su_n_datum_check(d: RootDatum) -> int:
    """Return n if the datum is SU(n) (type A, simply connected, no centre)."""
    if d.central_rank or d.series != "A" or d.isogeny != "simply-connected":
        raise ImplodeKitError(f"{d.name} is not SU(n)")
    return d.rank_ss + 1

