"""Faces of the fundamental Weyl chamber.

A face is identified with its vanishing set: the simple roots whose coroots
pair to zero with every point of the face.  Central directions only shift the
dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import NotInChamber
from .rootdata import RootDatum, all_roots

IN_STAR = "in-star"
IN_SUBCHAMBER = "in-subchamber-only"
OUTSIDE = "outside"


@dataclass(frozen=True)
class Face:
    vanishing_set: tuple  # sorted simple-root indices, zero based
    dim: int

    @property
    def key(self) -> tuple:
        return self.vanishing_set

    def to_json(self) -> list:
        return list(self.vanishing_set)

    def __le__(self, other: "Face") -> bool:  # closure order, not the dataclass order
        return set(other.vanishing_set) <= set(self.vanishing_set)

    def __lt__(self, other: "Face") -> bool:
        return self <= other and self != other

    def __ge__(self, other: "Face") -> bool:
        return other <= self

    def __gt__(self, other: "Face") -> bool:
        return other < self


def make_face(d: RootDatum, vanishing) -> Face:
    s = tuple(sorted(set(int(i) for i in vanishing)))
    if any(i < 0 or i >= d.rank_ss for i in s):
        raise ValueError(f"vanishing set {s} out of range for rank {d.rank_ss}")
    return Face(s, d.rank_ss - len(s) + d.central_rank)


def enumerate_faces(d: RootDatum) -> list:
    """All 2^r faces, ordered lexicographically by vanishing set."""
    r = d.rank_ss
    faces = [make_face(d, c) for k in range(r + 1) for c in combinations(range(r), k)]
    return sorted(faces, key=lambda f: f.vanishing_set)


def top_face(d: RootDatum) -> Face:
    return make_face(d, ())


def vertex_face(d: RootDatum) -> Face:
    return make_face(d, range(d.rank_ss))


def face_of(d: RootDatum, lam: Sequence) -> Face:
    lam = d.semisimple_part(lam)
    if any(x < 0 for x in lam):
        raise NotInChamber(f"{lam} is not in the closed dominant chamber")
    return make_face(d, [i for i, x in enumerate(lam) if x == 0])


@dataclass(frozen=True)
class FaceOrder:
    faces: tuple
    pairs: frozenset  # (sigma, tau) with sigma <= tau, as vanishing-set tuples
    stars: dict  # vanishing set -> list of faces in the open star

    def leq(self, a: Face, b: Face) -> bool:
        return (a.vanishing_set, b.vanishing_set) in self.pairs

    @property
    def maximum(self) -> Face:
        return next(f for f in self.faces if all(self.leq(g, f) for g in self.faces))

    @property
    def minimum(self) -> Face:
        return next(f for f in self.faces if all(self.leq(f, g) for g in self.faces))


def face_relations(d: RootDatum) -> FaceOrder:
    faces = tuple(enumerate_faces(d))
    pairs = frozenset((a.vanishing_set, b.vanishing_set) for a in faces for b in faces if a <= b)
    stars = {a.vanishing_set: [b for b in faces if a <= b] for a in faces}
    return FaceOrder(faces, pairs, stars)


def star(d: RootDatum, sigma: Face) -> list:
    return [t for t in enumerate_faces(d) if sigma <= t]


def levi_roots(d: RootDatum, sigma: Face) -> list:
    """Roots of the Levi subsystem: those in the integer span of the vanishing set."""
    s = set(sigma.vanishing_set)
    return [a for a in all_roots(d) if all(c == 0 for i, c in enumerate(a.simple) if i not in s)]


def star_membership(d: RootDatum, sigma: Face, lam: Sequence) -> str:
    """Classify ``lam`` against the open star of ``sigma`` and the Levi chamber.

    The Levi chamber is {<lam, a^vee> >= 0 for a in S_sigma}; the star adds
    strict positivity on the remaining simple roots.
    """
    lam = d.semisimple_part(lam)
    s = set(sigma.vanishing_set)
    if any(lam[i] < 0 for i in s):
        return OUTSIDE
    if all(lam[i] > 0 for i in range(d.rank_ss) if i not in s):
        return IN_STAR
    return IN_SUBCHAMBER
