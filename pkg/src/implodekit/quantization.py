"""Characters: tensor products, N-invariants, holomorphic induction and cuts.

Virtual representations and torus characters are plain dicts from weight
tuples to nonzero integers.  Weights may carry central coordinates after the
semisimple ones; those just add under tensor product.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .chamber import Face, face_of
from .errors import ImplodeKitError, NotDominant
from .rootdata import DEFAULT_WEYL_CAP, RootDatum, to_dominant, weight_multiplicities, weyl_dimension

CHARACTER_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "character"],
    "properties": {
        "schema_version": {"const": 1},
        "group": {"type": "string"},
        "character": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["weight", "mult"],
                "properties": {"weight": {"type": "array", "items": {"type": "integer"}},
                               "mult": {"type": "integer"}},
                "additionalProperties": False,
            },
        },
    },
}

CUT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "group", "face", "lambda0", "points"],
    "properties": {
        "schema_version": {"const": 1},
        "group": {"type": "string"},
        "face": {"type": "array", "items": {"type": "integer"}},
        "lambda0": {"type": "array", "items": {"type": "string"}},
        "points": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
    },
}


def _clean(m: dict) -> dict:
    return {k: v for k, v in sorted(m.items()) if v}


def _split(d: RootDatum, lam: Sequence) -> tuple:
    lam = tuple(lam)
    if len(lam) not in (d.rank_ss, d.lattice_rank):
        raise ValueError(f"weight {lam} has length {len(lam)}; expected {d.rank_ss} or {d.lattice_rank}")
    return lam[: d.rank_ss], lam[d.rank_ss:]


def _dominant(d: RootDatum, lam: Sequence) -> tuple:
    ss, central = _split(d, lam)
    if any(x < 0 for x in ss):
        raise NotDominant(f"weight {tuple(lam)} is not dominant")
    return tuple(int(x) for x in ss), tuple(central)


def character_to_json(m: dict) -> list:
    return [{"weight": [int(x) for x in w], "mult": int(c)} for w, c in sorted(m.items())]


def virtual_dimension(d: RootDatum, v: dict) -> int:
    return sum(c * weyl_dimension(d, w) for w, c in v.items())


def tensor_decompose(d: RootDatum, lam: Sequence, mu: Sequence) -> dict:
    """V_lam (x) V_mu by Klimyk's formula: dot-reflect lam + nu over the weights nu of the smaller factor."""
    a, ca = _dominant(d, lam)
    b, cb = _dominant(d, mu)
    if ca and cb and len(ca) != len(cb):
        raise ValueError("central parts of different lengths")
    central = tuple(x + y for x, y in zip(ca, cb)) if ca and cb else (ca or cb)
    if weyl_dimension(d, b) > weyl_dimension(d, a):
        a, b = b, a
    out = Counter()
    for nu, m in weight_multiplicities(d, b).items():
        shifted = tuple(x + y + 1 for x, y in zip(a, nu))
        dom, steps = to_dominant(d, shifted)
        if any(x == 0 for x in dom):
            continue
        out[tuple(x - 1 for x in dom) + central] += m if steps % 2 == 0 else -m
    return _clean(out)


def _partition(p: Sequence, n: int, what: str) -> tuple:
    p = tuple(p)
    if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in p):
        raise ValueError(f"{what} must be a list of nonnegative integers")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{what} must be weakly decreasing")
    p = tuple(x for x in p if x)
    if len(p) > n:
        raise ValueError(f"{what} has more than {n} rows")
    return p


def lr_coefficients_type_a(n: int, lam: Sequence, mu: Sequence) -> dict:
    """Littlewood-Richardson coefficients c^nu_{lam,mu} for nu with at most n rows.

    Fills the boxes of nu/lam row by row: ``c[i][j]`` counts the entries j+1 in
    row i, subject to column strictness and the lattice-word condition.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lam = _partition(lam, n, "lam")
    mu = _partition(mu, n, "mu")
    m = len(mu)
    base = list(lam) + [0] * (n - len(lam))
    out = Counter()

    def fill_row(i, prev, used, shape):
        if i == n:
            if all(u == t for u, t in zip(used, mu)):
                out[tuple(x for x in shape if x)] += 1
            return
        row = [0] * m

        def pick(j, filled, before):
            # ``filled`` = base[i] + entries <= j already placed; ``before`` = the same in row i-1
            if j == m:
                new_used = [u + c for u, c in zip(used, row)]
                fill_row(i + 1, row[:], new_used, shape + [filled])
                return
            hi = mu[j] - used[j]
            if i > 0:
                hi = min(hi, before - filled)
            if j > 0:
                hi = min(hi, used[j - 1] - used[j])
            for c in range(max(hi, -1) + 1):
                row[j] = c
                nxt_before = before + (prev[j] if i > 0 else 0)
                pick(j + 1, filled + c, nxt_before)
            row[j] = 0

        pick(0, base[i], base[i - 1] if i > 0 else 0)

    fill_row(0, [0] * m, [0] * m, [])
    return _clean(out)


def partition_to_weight(p: Sequence, n: int) -> tuple:
    """Partition with <= n rows to SU(n) fundamental coordinates; full columns drop out."""
    p = list(p) + [0] * (n - len(p))
    return tuple(p[i] - p[i + 1] for i in range(n - 1))


def weight_to_partition(w: Sequence) -> tuple:
    return tuple(x for x in (sum(w[i:]) for i in range(len(w))) if x)


def lr_as_weights(n: int, lam: Sequence, mu: Sequence) -> dict:
    """LR coefficients of the partitions of two SU(n) weights, keyed by weight."""
    out = Counter()
    coeffs = lr_coefficients_type_a(n, weight_to_partition(lam), weight_to_partition(mu))
    for nu, c in coeffs.items():
        out[partition_to_weight(nu, n)] += c
    return _clean(out)


def n_invariants(v: dict) -> dict:
    """N-invariants of a virtual representation: one highest-weight line per copy of V_lam."""
    return _clean(dict(v))


def holomorphic_induct(d: RootDatum, t: dict, cap: int = DEFAULT_WEYL_CAP) -> dict:
    """Bott's rule applied weight by weight."""
    out = Counter()
    for lam, c in t.items():
        ss, central = _split(d, lam)
        dom, steps = to_dominant(d, tuple(x + 1 for x in ss), cap)
        if any(x == 0 for x in dom):
            continue
        out[tuple(x - 1 for x in dom) + tuple(central)] += c if steps % 2 == 0 else -c
    return _clean(out)


def rr_implosion(d: RootDatum, labels: Iterable[Sequence]) -> dict:
    """N-invariants of the quantization of a product of coadjoint orbits K.lam_1 x ... x K.lam_m."""
    labels = [tuple(x) for x in labels]
    for lam in labels:
        _dominant(d, lam)
    current = {(0,) * d.rank_ss: 1}
    for lam in labels:
        nxt = Counter()
        for w, c in current.items():
            for u, k in tensor_decompose(d, w, lam).items():
                nxt[u] += c * k
        current = _clean(nxt)
    return n_invariants(current)


def cut_polytope(d: RootDatum, points: Iterable[Sequence], lam0: Sequence, tau: Face) -> list:
    """Points p with p - lam0 in the closed face tau (all pairings >= 0, zero on S_tau)."""
    lam0 = tuple(Fraction(x) for x in d.semisimple_part(lam0))
    if not set(tau.vanishing_set) <= set(face_of(d, lam0).vanishing_set):
        raise ImplodeKitError(f"{lam0} does not lie in the closure of face {tau.vanishing_set}")
    s = set(tau.vanishing_set)
    out = []
    for p in points:
        q = tuple(Fraction(x) for x in d.semisimple_part(p))
        diff = [x - y for x, y in zip(q, lam0)]
        if all(x >= 0 for x in diff) and all(diff[i] == 0 for i in s):
            out.append(tuple(p))
    return out
