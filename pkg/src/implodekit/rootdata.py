"""Root data: Cartan matrices, roots, coroots, Weyl group, characters.

Weights are tuples of integers in fundamental-weight coordinates, so that
``lam[i]`` is the pairing of ``lam`` with the i-th simple coroot.  A weight may
carry ``central_rank`` extra trailing entries for the central part; those are
ignored by everything that only sees the semisimple part.
"""
from __future__ import annotations

import json
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

from . import _linalg
from .errors import InvalidRootDatum, NotDominant, WeylGroupCapExceeded

DEFAULT_WEYL_CAP = 10**6

SERIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")

Weight = tuple


class Root(NamedTuple):
    simple: tuple  # coordinates in the basis of simple roots
    weight: tuple  # fundamental-weight coordinates
    coroot: tuple  # coordinates in the basis of simple coroots

    def __neg__(self):
        return Root(tuple(-x for x in self.simple), tuple(-x for x in self.weight),
                    tuple(-x for x in self.coroot))

    @property
    def height(self) -> int:
        return sum(self.simple)


def _chain_gram(n, diag=2):
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = diag
        if i + 1 < n:
            b[i][i + 1] = b[i + 1][i] = -1
    return b


def _gram(series: str, rank: int):
    """Gram matrix (alpha_i, alpha_j) of simple roots, Bourbaki numbering, scaled to integers."""
    if series == "A":
        return _chain_gram(rank)
    if series == "B":
        b = [[2 * x for x in row] for row in _chain_gram(rank)]
        b[-1][-1] = 2
        return b
    if series == "C":
        b = _chain_gram(rank)
        b[-1][-1] = 4
        b[-1][-2] = b[-2][-1] = -2
        return b
    if series == "D":
        b = _chain_gram(rank)
        b[-1][-2] = b[-2][-1] = 0
        b[-1][-3] = b[-3][-1] = -1
        return b
    if series == "G2":
        return [[2, -3], [-3, 6]]
    if series == "F4":
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if series[0] == "E":
        b = [[0] * rank for _ in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        for i in range(rank):
            b[i][i] = 2
        for i, j in edges:
            b[i][j] = b[j][i] = -1
        return b
    raise InvalidRootDatum(f"unknown series {series!r}")


def _normalize_series(series: str, rank):
    s = str(series).upper()
    fixed = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
    if s in ("G", "F", "E") and rank is not None:
        s = f"{s}{rank}"
    if s in fixed:
        if rank is not None and int(rank) != fixed[s]:
            raise InvalidRootDatum(f"series {s} has rank {fixed[s]}, got {rank}")
        return s, fixed[s]
    if s not in ("A", "B", "C", "D"):
        raise InvalidRootDatum(f"unknown series {series!r}")
    if rank is None:
        raise InvalidRootDatum(f"series {s} needs a rank")
    rank = int(rank)
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}[s]
    if rank < minimum:
        raise InvalidRootDatum(f"{s}{rank} is not a valid root system")
    return s, rank


@dataclass(frozen=True)
class RootDatum:
    """A compact connected Lie group up to isogeny, as a based root datum.

    ``cartan[i][j]`` is the pairing of simple root j with simple coroot i.
    ``coroot_coords`` lists the simple coroots in a basis of the cocharacter
    lattice (length ``rank_ss + central_rank``); ``weight_coords`` lists the
    fundamental weights in the dual basis of the character lattice.  The
    latter are rational when the derived group is not simply connected.
    """

    name: str
    rank_ss: int
    central_rank: int
    cartan: tuple
    coroot_coords: tuple
    weight_coords: tuple = field(compare=False)
    series: str | None = field(default=None, compare=False)
    isogeny: str = field(default="custom", compare=False)

    def __post_init__(self):
        _validate(self)

    # -- derived constants -------------------------------------------------
    @property
    def lattice_rank(self) -> int:
        return self.rank_ss + self.central_rank

    @cached_property
    def symmetrizer(self) -> tuple:
        """Positive d_i with d_i * cartan[i][j] symmetric, normalised so min d_i = 1."""
        return _symmetrizer(self.cartan)

    @cached_property
    def root_form(self) -> tuple:
        """Invariant form on simple roots: (alpha_i, alpha_j) = d_i * cartan[i][j]."""
        d = self.symmetrizer
        r = self.rank_ss
        return tuple(tuple(d[i] * self.cartan[i][j] for j in range(r)) for i in range(r))

    @cached_property
    def weight_form(self) -> tuple:
        """Invariant form on fundamental weights, (varpi_i, varpi_j) = (D A^-1)_ij."""
        if self.rank_ss == 0:
            return ()
        inv = _linalg.inverse(self.cartan)
        d = self.symmetrizer
        return tuple(tuple(d[i] * inv[i][j] for j in range(self.rank_ss)) for i in range(self.rank_ss))

    @cached_property
    def cartan_inverse(self) -> tuple:
        return tuple(tuple(row) for row in _linalg.inverse(self.cartan)) if self.rank_ss else ()

    @cached_property
    def simple_root_weights(self) -> tuple:
        """alpha_j in fundamental coordinates: column j of the Cartan matrix."""
        r = self.rank_ss
        return tuple(tuple(self.cartan[i][j] for i in range(r)) for j in range(r))

    @cached_property
    def rho(self) -> tuple:
        return (1,) * self.rank_ss

    @cached_property
    def xi(self) -> tuple:
        """The cocharacter -sum of simple coroots, in simple-coroot coordinates."""
        return (-1,) * self.rank_ss

    @cached_property
    def _positive_roots(self) -> tuple:
        return tuple(_closure(self))

    @property
    def dim_group(self) -> int:
        return 2 * len(self._positive_roots) + self.rank_ss + self.central_rank

    # -- small helpers -----------------------------------------------------
    def pair(self, lam: Sequence, coroot: Sequence) -> Fraction | int:
        """<lam, coroot> for lam in fundamental coords, coroot in simple-coroot coords."""
        return sum(c * x for c, x in zip(coroot, lam))

    def ip(self, a: Sequence, b: Sequence):
        """Invariant inner product of two weights (fundamental coordinates)."""
        g = self.weight_form
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank_ss) for j in range(self.rank_ss)
                   if a[i] and b[j])

    def semisimple_part(self, lam: Sequence) -> tuple:
        if len(lam) not in (self.rank_ss, self.lattice_rank):
            raise ValueError(f"weight {tuple(lam)} has length {len(lam)}; "
                             f"expected {self.rank_ss} or {self.lattice_rank}")
        return tuple(lam[: self.rank_ss])

    def to_json(self) -> dict:
        out = {"name": self.name, "cartan": [list(r) for r in self.cartan],
               "coroot_coords": [list(r) for r in self.coroot_coords],
               "weight_coords": [[str(x) if Fraction(x).denominator != 1 else int(x) for x in r]
                                 for r in self.weight_coords],
               "central_rank": self.central_rank}
        if self.series:
            out["series"] = self.series
            out["rank"] = self.rank_ss
            out["isogeny"] = self.isogeny
        return out


def _symmetrizer(cartan) -> tuple:
    r = len(cartan)
    d: list = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j == i or cartan[i][j] == 0:
                    continue
                dj = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise InvalidRootDatum("Cartan matrix is not symmetrizable")
    return tuple(d)


def _validate(d: RootDatum):
    r, c = d.rank_ss, d.central_rank
    if r < 0 or c < 0:
        raise InvalidRootDatum("ranks must be nonnegative")
    a = d.cartan
    if len(a) != r or any(len(row) != r for row in a):
        raise InvalidRootDatum("cartan must be rank_ss x rank_ss")
    for i in range(r):
        if a[i][i] != 2:
            raise InvalidRootDatum("cartan diagonal must be 2")
        for j in range(r):
            if i != j:
                if a[i][j] > 0:
                    raise InvalidRootDatum("cartan off-diagonal entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InvalidRootDatum("cartan zero pattern must be symmetric")
    dsym = _symmetrizer(a)
    if any(x <= 0 for x in dsym):
        raise InvalidRootDatum("Cartan matrix is not symmetrizable with positive factors")
    # finite type: symmetrised form positive definite (leading minors)
    b = [[dsym[i] * a[i][j] for j in range(r)] for i in range(r)]
    for k in range(1, r + 1):
        if _linalg.det([row[:k] for row in b[:k]]) <= 0:
            raise InvalidRootDatum("Cartan matrix is not of finite type")
    n = r + c
    if len(d.coroot_coords) != r or any(len(v) != n for v in d.coroot_coords):
        raise InvalidRootDatum("coroot_coords must be rank_ss vectors of length rank_ss + central_rank")
    if r and _linalg.rank(d.coroot_coords) != r:
        raise InvalidRootDatum("simple coroots are linearly dependent")
    if len(d.weight_coords) != r or any(len(v) != n for v in d.weight_coords):
        raise InvalidRootDatum("weight_coords must be rank_ss vectors of length rank_ss + central_rank")
    for i in range(r):
        for j in range(r):
            p = sum(Fraction(x) * y for x, y in zip(d.weight_coords[i], d.coroot_coords[j]))
            if p != (1 if i == j else 0):
                raise InvalidRootDatum("fundamental weights do not pair to the identity with coroots")
    # every root must be a character: alpha_j = sum_i cartan[i][j] varpi_i integral
    for j in range(r):
        vec = [sum(a[i][j] * Fraction(d.weight_coords[i][k]) for i in range(r)) for k in range(n)]
        if any(x.denominator != 1 for x in vec):
            raise InvalidRootDatum(f"simple root {j} is not integral on the cocharacter lattice")


def _derive_weight_coords(coroot_coords, r, n):
    """Fundamental weights as the minimal-norm dual vectors C (C^T C)^-1."""
    if r == 0:
        return ()
    cmat = _linalg.transpose([list(v) for v in coroot_coords])  # n x r
    gram = _linalg.matmul(_linalg.transpose(cmat), cmat)
    try:
        w = _linalg.matmul(cmat, _linalg.inverse(gram))  # n x r
    except ZeroDivisionError as exc:
        raise InvalidRootDatum("simple coroots are linearly dependent") from exc
    return tuple(tuple(w[k][i] for k in range(n)) for i in range(r))


def _closure(d: RootDatum) -> list:
    """Positive roots by the root-string algorithm, ordered by height."""
    r = d.rank_ss
    a = d.cartan
    simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee> = sum_j n_j cartan[i][j]
                pairing = sum(beta[j] * a[i][j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    dsym = d.symmetrizer
    out = []
    for n in sorted(roots, key=lambda v: (sum(v), tuple(-x for x in v))):
        weight = tuple(sum(a[i][j] * n[j] for j in range(r)) for i in range(r))
        half_len = Fraction(sum(n[i] * dsym[i] * a[i][j] * n[j] for i in range(r) for j in range(r)), 2)
        coroot = tuple(n[j] * dsym[j] / half_len for j in range(r))
        if any(Fraction(x).denominator != 1 for x in coroot):
            raise InvalidRootDatum("non-integral coroot; Cartan matrix inconsistent")
        out.append(Root(n, weight, tuple(int(x) for x in coroot)))
    return out


# -- construction ------------------------------------------------------------

def build_root_datum(series: str, rank: int | None = None, isogeny: str = "simply-connected",
                     central_rank: int = 0, name: str | None = None) -> RootDatum:
    """Root datum of a simple type, simply connected or adjoint.

    ``central_rank`` appends a central torus as a direct factor.
    """
    s, r = _normalize_series(series, rank)
    gram = _gram(s, r)
    cartan = tuple(tuple(Fraction(2 * gram[i][j], gram[i][i]) for j in range(r)) for i in range(r))
    if any(x.denominator != 1 for row in cartan for x in row):
        raise InvalidRootDatum("internal: non-integral Cartan entry")
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    n = r + central_rank
    if isogeny in ("simply-connected", "sc"):
        cor = [[int(i == j) for j in range(n)] for i in range(r)]
        isogeny = "simply-connected"
    elif isogeny in ("adjoint", "ad"):
        # cocharacter lattice = coweight lattice; coroot i = sum_j cartan[i][j] coweight_j
        cor = [list(cartan[i]) + [0] * central_rank for i in range(r)]
        isogeny = "adjoint"
    else:
        raise InvalidRootDatum(f"isogeny must be simply-connected or adjoint, got {isogeny!r}")
    cor = tuple(tuple(v) for v in cor)
    label = name or (f"{s}{r}" if len(s) == 1 else s) + ("" if isogeny == "simply-connected" else "/adjoint") \
        + (f"xT{central_rank}" if central_rank else "")
    return RootDatum(label, r, central_rank, cartan, cor, _derive_weight_coords(cor, r, n), series=s,
                     isogeny=isogeny)


def custom_root_datum(cartan, coroot_coords, central_rank: int = 0, weight_coords=None,
                      name: str = "custom") -> RootDatum:
    r = len(cartan)
    n = r + central_rank
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    if any(len(v) != n for v in coroot_coords):
        raise InvalidRootDatum("coroot_coords must have length rank + central_rank")
    cor = tuple(tuple(int(x) for x in v) for v in coroot_coords)
    if weight_coords is None:
        wc = _derive_weight_coords(cor, r, n)
    else:
        wc = tuple(tuple(Fraction(x) for x in v) for v in weight_coords)
    return RootDatum(name, r, central_rank, cartan, cor, wc)


def torus(k: int, name: str | None = None) -> RootDatum:
    return RootDatum(name or f"T{k}", 0, k, (), (), ())


def unitary_group(n: int) -> RootDatum:
    """U(n): cocharacters Z^n, coroots e_i - e_{i+1}."""
    cartan = build_root_datum("A", n - 1).cartan
    cor = [[(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)] for i in range(n - 1)]
    return custom_root_datum(cartan, cor, central_rank=1, name=f"U({n})")


def root_datum_from_json(obj) -> RootDatum:
    """Parse the root-datum JSON schema (series form or explicit-lattice form)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise InvalidRootDatum("root datum JSON must be an object")

    def _ints(v, what):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidRootDatum(f"{what} must contain integers only")
        return v

    if "series" in obj:
        rank = obj.get("rank")
        if rank is not None:
            _ints(rank, "rank")
        return build_root_datum(obj["series"], rank, obj.get("isogeny", "simply-connected"),
                                central_rank=_ints(obj.get("central_rank", 0), "central_rank"),
                                name=obj.get("name"))
    for key in ("cartan", "coroot_coords"):
        if key not in obj:
            raise InvalidRootDatum(f"missing field {key!r}")
    for key in ("cartan", "coroot_coords", "weight_coords"):
        for row in obj.get(key) or []:
            for x in row:
                _ints(x, key)
    return custom_root_datum(obj["cartan"], obj["coroot_coords"],
                             central_rank=_ints(obj.get("central_rank", 0), "central_rank"),
                             weight_coords=obj.get("weight_coords"), name=obj.get("name", "custom"))


# -- roots and Weyl group ----------------------------------------------------

def positive_roots(d: RootDatum) -> list:
    return list(d._positive_roots)


def all_roots(d: RootDatum) -> list:
    pos = positive_roots(d)
    return pos + [-a for a in pos]


def is_dominant(d: RootDatum, lam: Sequence) -> bool:
    return all(x >= 0 for x in d.semisimple_part(lam))


def _require_dominant(d, lam):
    lam = d.semisimple_part(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"weight {lam} is not dominant")
    return lam


def reflect(d: RootDatum, lam: Sequence, i: int) -> tuple:
    """Simple reflection s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    li = lam[i]
    if not li:
        return tuple(lam)
    col = d.simple_root_weights[i]
    return tuple(x - li * c for x, c in zip(lam, col))


def to_dominant(d: RootDatum, lam: Sequence, cap: int = DEFAULT_WEYL_CAP):
    """Return (dominant conjugate, length of the Weyl element used)."""
    lam = tuple(lam)
    steps = 0
    while True:
        i = next((k for k, x in enumerate(lam) if x < 0), None)
        if i is None:
            return lam, steps
        lam = reflect(d, lam, i)
        steps += 1
        if steps > cap:
            raise WeylGroupCapExceeded(f"more than {cap} reflections")


def weyl_group(d: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> list:
    """All Weyl group elements as reduced words (tuples of simple-reflection indices).

    Elements are enumerated through the orbit of rho, which W permits simply
    transitively.
    """
    rho = d.rho
    seen = {rho: ()}
    layer = [rho]
    while layer:
        nxt = []
        for v in layer:
            word = seen[v]
            for i in range(d.rank_ss):
                if v[i] > 0:  # going down in the Bruhat-like order keeps words reduced
                    w = reflect(d, v, i)
                    if w not in seen:
                        seen[w] = (i,) + word
                        if len(seen) > cap:
                            raise WeylGroupCapExceeded(f"Weyl group larger than cap={cap}")
                        nxt.append(w)
        layer = nxt
    return sorted(seen.values(), key=lambda w: (len(w), w))


def weyl_group_order(d: RootDatum) -> int:
    """|W| as the product of the degrees m_i + 1.

    The exponents m_i form the partition dual to the heights of the positive
    roots, so nothing is enumerated.
    """
    heights = [a.height for a in positive_roots(d)]
    top = max(heights, default=0)
    count = [sum(1 for h in heights if h == k) for k in range(top + 2)]
    order = 1
    for k in range(1, top + 1):
        order *= (k + 1) ** (count[k] - count[k + 1])
    return order


def apply_word(d: RootDatum, word: Sequence[int], lam: Sequence) -> tuple:
    lam = tuple(lam)
    for i in reversed(word):
        lam = reflect(d, lam, i)
    return lam


def weyl_orbit(d: RootDatum, lam: Sequence, cap: int = DEFAULT_WEYL_CAP) -> set:
    lam = tuple(lam)
    seen = {lam}
    layer = [lam]
    while layer:
        nxt = []
        for v in layer:
            for i in range(d.rank_ss):
                w = reflect(d, v, i)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise WeylGroupCapExceeded(f"orbit larger than cap={cap}")
                    nxt.append(w)
        layer = nxt
    return seen


# -- representation theory ---------------------------------------------------

def weyl_dimension(d: RootDatum, lam: Sequence) -> int:
    lam = _require_dominant(d, lam)
    num = Fraction(1)
    for a in positive_roots(d):
        num *= Fraction(d.pair(lam, a.coroot) + sum(a.coroot), sum(a.coroot))
    assert num.denominator == 1
    return int(num)


def _in_root_cone(d: RootDatum, diff: Sequence) -> bool:
    """Is ``diff`` (fundamental coords) a nonnegative integer combination of simple roots?"""
    inv = d.cartan_inverse
    r = d.rank_ss
    for i in range(r):
        c = sum(inv[i][j] * diff[j] for j in range(r))
        if c < 0 or c.denominator != 1:
            return False
    return True


@lru_cache(maxsize=4096)
def _freudenthal(d: RootDatum, lam: tuple) -> dict:
    r = d.rank_ss
    if r == 0:
        return {lam: 1}
    pos = [a.weight for a in positive_roots(d)]
    simple = d.simple_root_weights
    # integer multiple of the invariant form keeps the recursion out of Fraction arithmetic
    scale = 1
    for row in d.weight_form:
        for x in row:
            scale = scale * Fraction(x).denominator // gcd(scale, Fraction(x).denominator)
    g = [[int(x * scale) for x in row] for row in d.weight_form]

    def ip(a, b):
        return sum(a[i] * g[i][j] * b[j] for i in range(r) for j in range(r))

    pos_g = [[sum(g[i][j] * a[j] for j in range(r)) for i in range(r)] for a in pos]
    lr = tuple(x + 1 for x in lam)
    norm_top = ip(lr, lr)
    mult = {lam: 1}
    frontier = [lam]
    while frontier:
        level = set()
        for mu in frontier:
            for i in range(r):
                nu = tuple(x - y for x, y in zip(mu, simple[i]))
                if nu in mult or nu in level:
                    continue
                dom, _ = to_dominant(d, nu)
                if _in_root_cone(d, tuple(x - y for x, y in zip(lam, dom))):
                    level.add(nu)
        frontier = []
        for nu in sorted(level):
            total = 0
            for a, ag in zip(pos, pos_g):
                k = 1
                while True:
                    up = tuple(x + k * y for x, y in zip(nu, a))
                    m = mult.get(up)
                    if m is None:
                        break
                    total += m * sum(u * v for u, v in zip(up, ag))
                    k += 1
            nr = tuple(x + 1 for x in nu)
            m, rem = divmod(2 * total, norm_top - ip(nr, nr))
            assert rem == 0 and m >= 0, (lam, nu, m)
            if m:
                mult[nu] = m
                frontier.append(nu)
    return mult


def weight_multiplicities(d: RootDatum, lam: Sequence) -> dict:
    """Weight multiplicities of the irreducible module V_lam (Freudenthal recursion)."""
    lam = _require_dominant(d, lam)
    return dict(_freudenthal(d, tuple(int(x) for x in lam)))


def levi_fundamental_group_order(d: RootDatum, vanishing) -> int:
    """[X_* cap span_Q(S^vee) : Z-span(S^vee)], the product of the Smith invariants."""
    from sympy import ZZ, Matrix  # heavy import, only needed here
    from sympy.matrices.normalforms import invariant_factors

    idx = sorted(vanishing)
    if not idx:
        return 1
    mat = Matrix([list(d.coroot_coords[i]) for i in idx]).T  # lattice_rank x |S|
    out = 1
    for x in invariant_factors(mat, domain=ZZ):
        out *= abs(int(x)) or 1
    return out
