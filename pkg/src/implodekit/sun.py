"""Matrix realization of SU(n): Lie algebra basis, weight pairing and exterior powers.

Covectors on su(n) are represented by Hermitian matrices H through
``H(xi) = Im tr(H xi) / 2pi``.  With that convention the simple coroot
alpha_p^vee is the matrix 2 pi i (E_pp - E_{p+1,p+1}) and a dominant weight
with fundamental coordinates lam is diag(h) with h_j = lam_j + ... + lam_{n-1}.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, pi

import numpy as np

TWO_PI = 2 * pi


def random_su(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random element of SU(n) (Gaussian QR, phases fixed, then det normalised)."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return q / np.linalg.det(q) ** (1.0 / n)


def coroot_matrix(n: int, p: int) -> np.ndarray:
    """Simple coroot p (zero based) as an element of su(n)."""
    m = np.zeros((n, n), dtype=complex)
    m[p, p] = TWO_PI * 1j
    m[p + 1, p + 1] = -TWO_PI * 1j
    return m


def xi_matrix(n: int) -> np.ndarray:
    """Xi = -(sum of simple coroots) = 2 pi i diag(-1, 0, ..., 0, 1)."""
    return -sum(coroot_matrix(n, p) for p in range(n - 1))


def su_basis(n: int) -> list:
    """Real basis of su(n): the simple coroots, then E_jk - E_kj and i(E_jk + E_kj) for j < k."""
    out = [coroot_matrix(n, p) for p in range(n - 1)]
    for j in range(n):
        for k in range(j + 1, n):
            a = np.zeros((n, n), dtype=complex)
            a[j, k], a[k, j] = 1, -1
            b = np.zeros((n, n), dtype=complex)
            b[j, k] = b[k, j] = 1j
            out += [a, b]
    return out


def random_su_algebra(n: int, rng: np.random.Generator) -> np.ndarray:
    coeffs = rng.standard_normal(n * n - 1)
    return sum(c * b for c, b in zip(coeffs, su_basis(n)))


def weight_hermitian(lam) -> np.ndarray:
    """Hermitian matrix representing the weight with fundamental coordinates lam."""
    lam = [float(x) for x in lam]
    h = np.cumsum(lam[::-1])[::-1].tolist() + [0.0]
    return np.diag(h).astype(complex)


def pair(h: np.ndarray, xi: np.ndarray) -> float:
    """Value of the covector represented by h on xi.  The only place the 2 pi enters."""
    return float(np.imag(np.trace(h @ xi))) / TWO_PI


def weight_value(lam, xi: np.ndarray) -> float:
    return pair(weight_hermitian(lam), xi)


def coadjoint(k: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Ad*(k) on covectors: (Ad*(k) h)(xi) = h(k^-1 xi k)."""
    return k @ h @ k.conj().T


# -- exterior powers ---------------------------------------------------------

@lru_cache(maxsize=None)
def wedge_basis(n: int, p: int) -> tuple:
    """Increasing index tuples I, the basis e_I of Lambda^p C^n, in lexicographic order."""
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def _derivation_tensor(n: int, p: int) -> np.ndarray:
    # T[I, J, i, j] with (Lambda^p xi)_{IJ} = sum_ij T[I,J,i,j] xi_ij
    basis = wedge_basis(n, p)
    pos = {I: a for a, I in enumerate(basis)}
    t = np.zeros((len(basis), len(basis), n, n))
    for b, J in enumerate(basis):
        for slot, j in enumerate(J):
            for i in range(n):
                if i != j and i in J:
                    continue
                new = list(J)
                new[slot] = i
                # sign of the permutation sorting ``new``
                sign = (-1) ** sum(1 for x in new for y in new if x > y and new.index(x) < new.index(y))
                t[pos[tuple(sorted(new))], b, i, j] += sign
    return t


def exterior_power(k: np.ndarray, p: int) -> np.ndarray:
    """Lambda^p k: the matrix of p x p minors det k[I, J]."""
    n = k.shape[0]
    basis = wedge_basis(n, p)
    out = np.empty((len(basis), len(basis)), dtype=complex)
    for a, I in enumerate(basis):
        for b, J in enumerate(basis):
            out[a, b] = np.linalg.det(k[np.ix_(I, J)])
    return out


def exterior_derivation(xi: np.ndarray, p: int) -> np.ndarray:
    """Derived action of a Lie algebra element on Lambda^p C^n."""
    return np.einsum("abij,ij->ab", _derivation_tensor(xi.shape[0], p), xi)


def highest_vector(n: int, p: int) -> np.ndarray:
    """e_1 ^ ... ^ e_p in Lambda^p C^n."""
    v = np.zeros(comb(n, p), dtype=complex)
    v[0] = 1
    return v


# -- Hermitian structure on E --------------------------------------------------

def herm(v: np.ndarray, w: np.ndarray) -> complex:
    """<v, w> = sum v_i conj(w_i): linear in the first slot."""
    return complex(np.vdot(w, v))


def omega_flat(v: np.ndarray, w: np.ndarray) -> float:
    return -herm(v, w).imag


def beta_flat(v: np.ndarray, w: np.ndarray) -> float:
    """The invariant primitive -1/2 Im<v, w> of omega at v, evaluated on w."""
    return -0.5 * herm(v, w).imag
