"""Generator matrices for self-dual codes built from sign matrices.

Three constructions over GF(p):

* ``p1``   G = [a I | W]              W a weighing matrix W(n, k), a^2 + k = 0
* ``p2``   G = [a I | b I + W]        W skew, a^2 + b^2 + k = 0
* ``star`` G = [a I | b X + c (H - I)] H skew-EW, X = diag(J, J), with
           a^2 + (n/2) b^2 + (n-1) c^2 = 0 and (n/2) b^2 + 2 c^2 = 0

plus the coefficient solvers and a Paley generator for symmetric
conference matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exactmat import SignMatrix, block_x, identity, is_skew, is_skew_ew, is_weighing
from .gfcode import LinearCode, check_field, is_prime


@dataclass(frozen=True, order=True)
class CoefficientSolution:
    p: int
    alpha: int
    beta: Optional[int] = None
    gamma: Optional[int] = None

    def coefficients(self) -> tuple[int, ...]:
        return tuple(v for v in (self.alpha, self.beta, self.gamma) if v is not None)

    def __str__(self):
        return ",".join(map(str, self.coefficients()))


# ---------------------------------------------------------------------------
# congruences

def p1_holds(k: int, alpha: int, p: int) -> bool:
    return alpha % p != 0 and (alpha * alpha + k) % p == 0


def p2_holds(k: int, alpha: int, beta: int, p: int) -> bool:
    return alpha % p != 0 and beta % p != 0 and (alpha**2 + beta**2 + k) % p == 0


def star_holds(n: int, alpha: int, beta: int, gamma: int, p: int) -> bool:
    if 0 in (alpha % p, beta % p, gamma % p):
        return False
    h = n // 2
    return ((alpha**2 + h * beta**2 + (n - 1) * gamma**2) % p == 0
            and (h * beta**2 + 2 * gamma**2) % p == 0)


def solve_p1(n: int, k: int, p: int) -> list[CoefficientSolution]:
    p = check_field(p)
    return [CoefficientSolution(p, a) for a in range(1, p) if p1_holds(k, a, p)]


def solve_p2(n: int, k: int, p: int) -> list[CoefficientSolution]:
    p = check_field(p)
    return [CoefficientSolution(p, a, b)
            for a, b in itertools.product(range(1, p), repeat=2) if p2_holds(k, a, b, p)]


def solve_star(n: int, p: int) -> list[CoefficientSolution]:
    if n % 4 != 2:
        raise ValueError(f"star construction needs n = 2 mod 4, got {n}")
    p = check_field(p)
    return [CoefficientSolution(p, a, b, c)
            for a, b, c in itertools.product(range(1, p), repeat=3)
            if star_holds(n, a, b, c, p)]


def canonical(solutions: list[CoefficientSolution]) -> Optional[CoefficientSolution]:
    """Lexicographically least solution, preferring gamma = 1 when one exists."""
    if not solutions:
        return None
    with_unit = [s for s in solutions if s.gamma in (None, 1)]
    return min(with_unit or solutions)


# ---------------------------------------------------------------------------
# builders

def _as_sign(W) -> SignMatrix:
    return W if isinstance(W, SignMatrix) else SignMatrix(W)


def build_p1(W, k: int, alpha: int, p: int) -> LinearCode:
    W = _as_sign(W)
    p = check_field(p)
    if not is_weighing(W, k):
        raise ValueError(f"W is not a weighing matrix of weight {k}")
    if not p1_holds(k, alpha, p):
        raise ValueError(f"alpha={alpha} fails alpha^2 + {k} = 0 mod {p}")
    n = W.n
    G = np.hstack([alpha * identity(n), W.a])
    return LinearCode(p, G, name=f"p1 a={alpha}")


def build_p2(W, k: int, alpha: int, beta: int, p: int) -> LinearCode:
    W = _as_sign(W)
    p = check_field(p)
    if not is_skew(W):
        raise ValueError("W is not skew (W != -W^T)")
    if not is_weighing(W, k):
        raise ValueError(f"W is not a weighing matrix of weight {k}")
    if not p2_holds(k, alpha, beta, p):
        raise ValueError(f"(alpha, beta)=({alpha}, {beta}) fails alpha^2 + beta^2 + {k} = 0 mod {p}")
    n = W.n
    G = np.hstack([alpha * identity(n), beta * identity(n) + W.a])
    return LinearCode(p, G, name=f"p2 a={alpha} b={beta}")


def star_right_block(H, beta: int, gamma: int) -> np.ndarray:
    """beta X + gamma (H - I) over the integers."""
    H = _as_sign(H)
    return beta * block_x(H.n) + gamma * (H.a - identity(H.n))


def build_star(H, alpha: int, beta: int, gamma: int, p: int) -> LinearCode:
    H = _as_sign(H)
    p = check_field(p)
    if not is_skew_ew(H):
        raise ValueError("H is not of skew-EW type")
    if not star_holds(H.n, alpha, beta, gamma, p):
        raise ValueError(f"(alpha, beta, gamma)=({alpha}, {beta}, {gamma}) fails the "
                         f"star congruences for n={H.n}, p={p}")
    G = np.hstack([alpha * identity(H.n), star_right_block(H, beta, gamma)])
    return LinearCode(p, G, name=f"star a={alpha} b={beta} c={gamma}")


# ---------------------------------------------------------------------------
# Paley conference matrices

def paley_conference(q: int) -> SignMatrix:
    """Symmetric conference matrix of order q + 1, q prime, q = 1 mod 4.

    Quadratic-character matrix Q[i, j] = chi(j - i) bordered by a row and
    column of ones with a zero corner.
    """
    if q % 4 != 1:
        raise ValueError(f"Paley conference matrix needs q = 1 mod 4, got {q}")
    if not is_prime(q):
        raise ValueError(f"only prime q is supported, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    chi = [0] + [1 if x in squares else -1 for x in range(1, q)]
    C = np.zeros((q + 1, q + 1), dtype=np.int64)
    C[0, 1:] = 1
    C[1:, 0] = 1
    for i in range(q):
        for j in range(q):
            C[i + 1, j + 1] = chi[(j - i) % q]
    return SignMatrix(C)


# ---------------------------------------------------------------------------
# distance caps

def star_distance_cap(n: int) -> int:
    if n == 2:
        return 3
    if n >= 6 and n % 2 == 0:
        return n // 2 + 2
    raise ValueError(f"no distance cap for n={n}")


def conference_distance_cap(n: int) -> int:
    if n == 2:
        return 3
    if n >= 6 and n % 2 == 0:
        return n // 2 + 3
    raise ValueError(f"no distance cap for n={n}")
