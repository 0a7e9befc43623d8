"""Search for a signed row permutation turning a (-1,1)-matrix into skew type.

Row i of M moves to position sigma(i) and is multiplied by m[i, sigma(i)],
which makes the new diagonal all +1.  The result K is of skew type iff
K + K^T = 2I.  Instead of trying all n! permutations, positions are filled
in order 0..n-1 and a candidate source row is rejected as soon as it breaks
k[r, c] = -k[c, r] against an already placed row.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactmat import SignMatrix, is_skew_type

NODE_CAP = 10**9


class SearchInconclusive(RuntimeError):
    def __init__(self, nodes: int, found: list):
        super().__init__(f"node cap reached after {nodes} expansions")
        self.nodes = nodes
        self.found = found


@dataclass(frozen=True)
class SignedPermutation:
    """sigma[i] is the target row of source row i; signs[i] multiplies it."""

    sigma: tuple[int, ...]
    signs: tuple[int, ...]

    def apply(self, M) -> np.ndarray:
        a = M.a if isinstance(M, SignMatrix) else np.asarray(M, dtype=np.int64)
        out = np.empty_like(a)
        for i, (r, s) in enumerate(zip(self.sigma, self.signs)):
            out[r] = s * a[i]
        return out

    def compose(self, first: "SignedPermutation") -> "SignedPermutation":
        """The signed permutation 'apply first, then self'."""
        sigma = tuple(self.sigma[first.sigma[i]] for i in range(len(first.sigma)))
        signs = tuple(first.signs[i] * self.signs[first.sigma[i]] for i in range(len(first.sigma)))
        return SignedPermutation(sigma, signs)


def witness_for(M, sigma) -> SignedPermutation:
    """The forced signs for a given sigma: signs[i] = m[i, sigma(i)]."""
    a = M.a if isinstance(M, SignMatrix) else np.asarray(M)
    return SignedPermutation(tuple(int(r) for r in sigma),
                             tuple(int(a[i, r]) for i, r in enumerate(sigma)))


def random_signed_permutation(n: int, rng: np.random.Generator) -> SignedPermutation:
    sigma = tuple(int(v) for v in rng.permutation(n))
    signs = tuple(int(v) for v in rng.choice((-1, 1), size=n))
    return SignedPermutation(sigma, signs)


def verify_witness(M, K, witness: SignedPermutation) -> bool:
    a = M.a if isinstance(M, SignMatrix) else np.asarray(M)
    k = K.a if isinstance(K, SignMatrix) else np.asarray(K)
    n = a.shape[0]
    if sorted(witness.sigma) != list(range(n)):
        return False
    if any(s not in (-1, 1) for s in witness.signs):
        return False
    return bool((witness.apply(a) == k).all()) and is_skew_type(k)


def find_skew_equivalent(M, mode: str = "first", node_cap: int = NODE_CAP):
    """List of (K, witness) with K skew type and K = witness applied to M.

    ``mode='first'`` stops at the first hit of the deterministic order
    (positions filled in order, source rows tried ascending).  Raises
    SearchInconclusive if ``node_cap`` expansions are exhausted.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', got {mode!r}")
    a = M.a if isinstance(M, SignMatrix) else np.asarray(M, dtype=np.int64)
    n = a.shape[0]
    if not (np.abs(a) == 1).all():
        raise ValueError("skew search needs a (-1,1)-matrix")

    # cand[i, r] = row i as it would appear at position r
    cand = a[:, :, None] * a[:, None, :]
    K = np.zeros((n, n), dtype=np.int64)
    src = [-1] * n
    used = [False] * n
    found = []
    nodes = 0

    def place(r: int) -> bool:
        nonlocal nodes
        if r == n:
            sigma = [0] * n
            for pos, i in enumerate(src):
                sigma[i] = pos
            w = witness_for(a, sigma)
            found.append((SignMatrix(K.copy()), w))
            return mode == "first"
        for i in range(n):
            if used[i]:
                continue
            nodes += 1
            if nodes > node_cap:
                raise SearchInconclusive(nodes, found)
            row = cand[i, r]
            if r and not (row[:r] == -K[:r, r]).all():
                continue
            K[r] = row
            used[i] = True
            src[r] = i
            if place(r + 1):
                return True
            used[i] = False
        return False

    place(0)
    return found
