"""Embedded matrices, matrix file formats and the published table rows.

Sign-matrix format::

    # comment lines start with '#'
    6
    1 1 - 1 1 1
    ...

The first non-comment line is the order n, followed by n rows of n
whitespace-separated tokens from {1, +, -1, -, 0}.  ``dump_matrix`` writes
``1``, ``-`` and ``0``.

Generator format (for codes over GF(p))::

    gf 7 6 12
    2 0 0 0 0 0 3 3 ...

Header ``gf p K N`` followed by K rows of N residues in [0, p).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .exactmat import (SignMatrix, det_exact, ew_bounds, gram_deviation,
                       is_skew_ew, is_symmetric, is_weighing)

DATA_ENV = "EWCODES_DATA"
EW26_FILE = "ew26.txt"


def data_dir() -> Path:
    return Path(os.environ.get(DATA_ENV, "data"))


# ---------------------------------------------------------------------------
# parse errors

class MatrixParseError(ValueError):
    def __init__(self, msg: str, line: int, col: Optional[int] = None):
        where = f"line {line}" + (f", column {col}" if col is not None else "")
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.col = col


class HeaderError(MatrixParseError):
    pass


class RowLengthError(MatrixParseError):
    pass


class RowCountError(MatrixParseError):
    pass


class SymbolError(MatrixParseError):
    pass


class TrailingDataError(MatrixParseError):
    pass


_TOKENS = {"1": 1, "+1": 1, "+": 1, "-1": -1, "-": -1, "0": 0}


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield lineno, s


def parse_matrix(text: str) -> SignMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise HeaderError("missing order header", 1)
    hline, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise HeaderError(f"expected the matrix order, got {header!r}", hline) from None
    if n < 1:
        raise HeaderError(f"order must be positive, got {n}", hline)
    body = lines[1:n + 1]
    if len(body) < n:
        last = lines[-1][0]
        raise RowCountError(f"expected {n} rows, found {len(body)}", last)
    rows = []
    for lineno, s in body:
        toks = s.split()
        if len(toks) != n:
            raise RowLengthError(f"expected {n} entries, found {len(toks)}", lineno)
        row = []
        for col, t in enumerate(toks, start=1):
            if t not in _TOKENS:
                raise SymbolError(f"illegal symbol {t!r}", lineno, col)
            row.append(_TOKENS[t])
        rows.append(row)
    if len(lines) > n + 1:
        raise TrailingDataError("unexpected data after the last row", lines[n + 1][0])
    return SignMatrix(rows)


def dump_matrix(M: SignMatrix, comment: str = "") -> str:
    out = [f"# {c}" for c in comment.splitlines()] if comment else []
    out.append(str(M.n))
    out.extend(M.rows_str())
    return "\n".join(out) + "\n"


def load_matrix(source: Union[str, Path]) -> SignMatrix:
    return parse_matrix(Path(source).read_text())


def parse_generator(text: str) -> tuple[int, np.ndarray]:
    lines = list(_content_lines(text))
    if not lines:
        raise HeaderError("missing 'gf p K N' header", 1)
    hline, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "gf" or not all(x.isdigit() for x in parts[1:]):
        raise HeaderError(f"expected 'gf p K N', got {header!r}", hline)
    p, K, N = map(int, parts[1:])
    body = lines[1:K + 1]
    if len(body) < K:
        raise RowCountError(f"expected {K} rows, found {len(body)}", lines[-1][0])
    rows = []
    for lineno, s in body:
        toks = s.split()
        if len(toks) != N:
            raise RowLengthError(f"expected {N} entries, found {len(toks)}", lineno)
        row = []
        for col, t in enumerate(toks, start=1):
            if not t.isdigit() or int(t) >= p:
                raise SymbolError(f"illegal residue {t!r} mod {p}", lineno, col)
            row.append(int(t))
        rows.append(row)
    if len(lines) > K + 1:
        raise TrailingDataError("unexpected data after the last row", lines[K + 1][0])
    return p, np.array(rows, dtype=np.int64).reshape(K, N)


def dump_generator(p: int, G: np.ndarray, comment: str = "") -> str:
    out = [f"# {c}" for c in comment.splitlines()] if comment else []
    K, N = G.shape
    out.append(f"gf {p} {K} {N}")
    out.extend(" ".join(str(int(v)) for v in row) for row in G)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# embedded matrices (rows as printed, '-' for -1)

_EW6 = """
1 1 - 1 1 1
- 1 1 1 1 1
1 - 1 1 1 1
- - - 1 - 1
- - - 1 1 -
- - - - 1 1
"""

_EW14 = """
1 1 - - 1 - 1 1 - - - - - -
- 1 1 1 - - 1 - - 1 - - - -
1 - 1 1 1 - - - - - 1 - - -
1 - - 1 - 1 1 - - - - - - 1
- 1 - 1 1 1 - - - - - 1 - -
1 1 1 - - 1 - - 1 - - - - -
- - 1 - 1 1 1 - - - - - 1 -
- 1 1 1 1 1 1 1 1 - 1 - - 1
1 1 1 1 1 - 1 - 1 - - 1 1 1
1 - 1 1 1 1 1 1 1 1 - 1 - -
1 1 - 1 1 1 1 - 1 1 1 - 1 -
1 1 1 1 - 1 1 1 - - 1 1 1 -
1 1 1 1 1 1 - 1 - 1 - - 1 1
1 1 1 - 1 1 1 - - 1 1 1 - 1
"""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    kind: str
    matrix: SignMatrix
    note: str


def _from_rows(rows: str) -> SignMatrix:
    body = rows.strip().splitlines()
    return parse_matrix(f"{len(body)}\n" + "\n".join(body))


def _check_skew_ew(M: SignMatrix, name: str) -> None:
    n = M.n
    b = ew_bounds(n)
    if not (is_skew_ew(M) and not gram_deviation(M).any()
            and det_exact(M) == b.pm1_skew_type):
        raise RuntimeError(f"catalog self-check failed for {name}")


def _check_conference(M: SignMatrix, name: str) -> None:
    n = M.n
    if not (is_weighing(M, n - 1) and is_symmetric(M) and det_exact(M) == ew_bounds(n).conference):
        raise RuntimeError(f"catalog self-check failed for {name}")


@lru_cache(maxsize=None)
def _entries() -> dict[str, CatalogEntry]:
    from .constructions import paley_conference

    out = {}
    for name, rows, note in (
        ("EW6", _EW6, "unique skew-EW matrix of order 6 up to equivalence"),
        ("EW14", _EW14, "skew-EW matrix of order 14"),
    ):
        M = _from_rows(rows)
        _check_skew_ew(M, name)
        out[name] = CatalogEntry(name, M.n, "skew-EW", M, note)
    for name, q in (("C6", 5), ("C14", 13)):
        M = paley_conference(q)
        _check_conference(M, name)
        out[name] = CatalogEntry(name, M.n, "symmetric-conference", M,
                                 f"Paley conference matrix from GF({q})")
    return out


def names() -> list[str]:
    return list(_entries())


def get(name: str) -> CatalogEntry:
    try:
        return _entries()[name.upper()]
    except KeyError:
        raise KeyError(f"unknown catalog matrix {name!r}; known: {', '.join(names())}") from None


def load_ew26() -> Optional[SignMatrix]:
    """The order-26 skew-EW matrix from the data directory, if supplied."""
    path = data_dir() / EW26_FILE
    return load_matrix(path) if path.exists() else None


def resolve(source: str) -> SignMatrix:
    """Catalog name, ``EW26`` (from the data directory) or a file path."""
    if source.upper() == "EW26":
        M = load_ew26()
        if M is None:
            raise FileNotFoundError(f"EW26 requires {data_dir() / EW26_FILE}")
        return M
    if source.upper() in _entries():
        return get(source).matrix
    return load_matrix(source)


# ---------------------------------------------------------------------------
# published table rows

@dataclass(frozen=True)
class PublishedRow:
    table: int
    N: int
    p: int
    coefficients: Optional[tuple[int, ...]]
    d: Optional[int]
    d_b: str

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def blank(self) -> bool:
        return self.coefficients is None


def _blank(table, N, p):
    return PublishedRow(table, N, p, None, None, "")


_TABLE1_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)
_TABLE2_PRIMES = (3, 5, 7, 23)

_TABLE1 = {
    (12, 3): ((1,), 6, "6"),
    (12, 7): ((3,), 6, "6"),
    (12, 23): ((8,), 6, "7"),
    (28, 7): ((1,), 10, "11 - 13"),
    (28, 11): ((3,), 10, "10 - 14"),
    (28, 17): ((2,), 10, "10 - 15"),
    (28, 19): ((5,), 10, "10 - 15"),
}

# (alpha, beta); gamma = 1 throughout
_TABLE2 = {
    (12, 7): ((2, 2), 5, "6"),
    (28, 3): ((1, 1), 9, "9"),
    (28, 5): ((2, 2), 8, "10 - 12"),
    (28, 23): ((9, 7), 9, ""),
    (52, 3): ((1, 1), 12, "15"),
}


def rows(table: int) -> list[PublishedRow]:
    if table == 1:
        data, Ns, primes = _TABLE1, (12, 28), _TABLE1_PRIMES
    elif table == 2:
        data, Ns, primes = _TABLE2, (12, 28, 52), _TABLE2_PRIMES
    else:
        raise KeyError(f"unknown table {table}")
    out = []
    for N in Ns:
        for p in primes:
            if (N, p) in data:
                coeffs, d, db = data[N, p]
                out.append(PublishedRow(table, N, p, coeffs, d, db))
            else:
                out.append(_blank(table, N, p))
    return out
