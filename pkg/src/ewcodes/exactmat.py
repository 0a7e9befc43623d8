"""Exact integer arithmetic on {-1, 0, +1} matrices.

Determinants, structural predicates (weighing, conference, skew type,
skew-EW), Ehlich-Wojtas bound values and order feasibility.  Nothing in
here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple, Optional

import numpy as np


class SignMatrix:
    """Immutable square matrix with entries in {-1, 0, +1}."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"sign matrix must be square, got shape {a.shape}")
        if a.size and not np.isin(a, (-1, 0, 1)).all():
            raise ValueError("sign matrix entries must be -1, 0 or +1")
        a.setflags(write=False)
        self._a = a

    @property
    def a(self) -> np.ndarray:
        """Read-only integer array view."""
        return self._a

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def T(self) -> "SignMatrix":
        return SignMatrix(self._a.T)

    def __neg__(self) -> "SignMatrix":
        return SignMatrix(-self._a)

    def __eq__(self, other):
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool((self._a == other._a).all())

    def __hash__(self):
        return hash((self.n, self._a.tobytes()))

    def __repr__(self):
        return f"SignMatrix(n={self.n})"

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def rows_str(self) -> list[str]:
        sym = {1: "1", -1: "-", 0: "0"}
        return [" ".join(sym[int(v)] for v in row) for row in self._a]


def _arr(M) -> np.ndarray:
    return M.a if isinstance(M, SignMatrix) else np.asarray(M, dtype=np.int64)


# ---------------------------------------------------------------------------
# constants

def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def ones(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.int64)


def block_x(n: int) -> np.ndarray:
    """diag(J_{n/2}, J_{n/2})."""
    if n % 2:
        raise ValueError("block_x needs even n")
    h = n // 2
    X = np.zeros((n, n), dtype=np.int64)
    X[:h, :h] = 1
    X[h:, h:] = 1
    return X


def block_l(n: int) -> np.ndarray:
    """diag(L, L) with L = (n-3)I + 2J of order n/2."""
    return (n - 3) * identity(n) + 2 * block_x(n)


# ---------------------------------------------------------------------------
# determinants and bounds

def det_exact(M) -> int:
    """|det M| by Bareiss fraction-free elimination over Python ints."""
    a = [[int(v) for v in row] for row in _arr(M)]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (ri[j] * pivot - aik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return abs(sign * a[n - 1][n - 1])


class EWBounds(NamedTuple):
    pm1_skew_type: int    # (2n-2)(n-2)^(n/2-1)
    zero_diag_skew: int   # (2n-3)(n-3)^(n/2-1)
    conference: int       # (n-1)^(n/2)


def ew_bounds(n: int) -> EWBounds:
    if n < 4 or n % 2:
        raise ValueError(f"bounds need even n >= 4, got {n}")
    h = n // 2
    return EWBounds(
        (2 * n - 2) * (n - 2) ** (h - 1),
        (2 * n - 3) * (n - 3) ** (h - 1),
        (n - 1) ** h,
    )


# ---------------------------------------------------------------------------
# predicates

def gram(M) -> np.ndarray:
    a = _arr(M)
    return a @ a.T


def is_weighing(W, k: int) -> bool:
    a = _arr(W)
    n = a.shape[0]
    if not 0 <= k <= n:
        return False
    return bool((gram(a) == k * identity(n)).all())


def is_symmetric(W) -> bool:
    a = _arr(W)
    return bool((a == a.T).all())


def is_skew(W) -> bool:
    a = _arr(W)
    return bool((a == -a.T).all())


def is_conference(W) -> bool:
    """W(n, n-1) with zero diagonal."""
    a = _arr(W)
    n = a.shape[0]
    return bool((np.diag(a) == 0).all()) and is_weighing(a, n - 1)


def is_skew_type(K) -> bool:
    """(-1,1)-matrix with K + K^T = 2I."""
    a = _arr(K)
    n = a.shape[0]
    if not (np.abs(a) == 1).all():
        return False
    return bool((a + a.T == 2 * identity(n)).all())


def gram_deviation(H) -> np.ndarray:
    """(H-I)(H-I)^T - diag(L, L); all zero for a skew-EW matrix."""
    a = _arr(H)
    n = a.shape[0]
    S = a - identity(n)
    return S @ S.T - block_l(n)


def is_skew_ew(H) -> bool:
    a = _arr(H)
    n = a.shape[0]
    if n % 4 != 2 or not is_skew_type(a):
        return False
    return not gram_deviation(a).any()


class BoundMismatch(RuntimeError):
    """det K and det(K - I) disagree about attaining their bounds."""


def is_max_det_skew_type(K) -> bool:
    a = _arr(K)
    if not is_skew_type(a):
        raise ValueError("is_max_det_skew_type requires a skew-type matrix")
    n = a.shape[0]
    if n < 4 or n % 2:
        # odd order: K - I is skew of odd order, so det(K - I) = 0; no EW bound
        return False
    b = ew_bounds(n)
    full = det_exact(a) == b.pm1_skew_type
    shifted = det_exact(a - identity(n)) == b.zero_diag_skew
    if full != shifted:
        raise BoundMismatch(f"order {n}: det K at bound={full}, det(K-I) at bound={shifted}")
    return full


# ---------------------------------------------------------------------------
# feasibility

def _square_root(m: int) -> Optional[int]:
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None


def two_squares(m: int) -> Optional[tuple[int, int]]:
    """Some (y, z), 0 <= y <= z, with y^2 + z^2 = m, or None."""
    for y in range(isqrt(m // 2) + 1):
        z = _square_root(m - y * y)
        if z is not None:
            return (y, z)
    return None


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    n_mod4: int
    two_n_minus_3_square: Optional[int]
    sum_two_squares: Optional[int]
    skew_ew_possible: bool
    n_minus_1_two_squares: Optional[tuple[int, int]] = None
    conference_possible: bool = False

    def note(self) -> str:
        if self.skew_ew_possible:
            x, t = self.two_n_minus_3_square, self.sum_two_squares
            return f"2n-3={x}^2, n-1={t}^2+{t + 1}^2"
        if self.n_mod4 != 2:
            return "n not 2 mod 4"
        msg = f"2n-3={2 * self.n - 3} not a square"
        if self.n_minus_1_two_squares:
            y, z = self.n_minus_1_two_squares
            msg += f" (though n-1={z}^2+{y}^2)"
        return msg


def conference_possible(n: int) -> bool:
    """Necessary condition for a conference matrix of order n."""
    if n % 2:
        return False
    if n % 4 == 0:
        return True
    return two_squares(n - 1) is not None


def feasibility(n: int) -> FeasibilityReport:
    if n < 2:
        raise ValueError(f"feasibility needs n >= 2, got {n}")
    x = _square_root(2 * n - 3)
    t = None
    if x is not None:
        # x odd, x = 2t + 1, so n - 1 = (x^2 + 1)/2 = t^2 + (t+1)^2
        t = (x - 1) // 2
        assert t * t + (t + 1) ** 2 == n - 1
    return FeasibilityReport(
        n=n,
        n_mod4=n % 4,
        two_n_minus_3_square=x,
        sum_two_squares=t,
        skew_ew_possible=(n % 4 == 2 and x is not None),
        n_minus_1_two_squares=two_squares(n - 1),
        conference_possible=conference_possible(n),
    )
