"""Command-line interface.

Exit codes: 0 success, 1 negative result (predicate false, no solutions,
no witness, published value not reproduced), 2 usage or input error.

``--format tsv`` switches every command to tab-separated output: one
``key<TAB>value`` line per field, or a header line plus one line per row
for tabular results.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional

import numpy as np

from . import catalog
from .constructions import (build_p1, build_p2, build_star, canonical, solve_p1, solve_p2,
                            solve_star, star_distance_cap, conference_distance_cap)
from .exactmat import (SignMatrix, det_exact, ew_bounds, feasibility, gram, gram_deviation, identity,
                       is_conference, is_max_det_skew_type, is_skew_ew, is_skew_type,
                       is_symmetric, is_weighing)
from .gfcode import (CapExceeded, LinearCode, ENUM_CAP, is_self_dual,
                     min_distance, min_distance_bounded, min_distance_enum)
from .skewsearch import (NODE_CAP, SearchInconclusive, find_skew_equivalent,
                         random_signed_permutation)


class UsageError(Exception):
    pass


class Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def kv(self, pairs):
        for k, v in pairs:
            v = _fmt(v)
            if self.fmt == "tsv":
                print(f"{k}\t{v}", file=self.stream)
            else:
                print(f"{k}: {v}", file=self.stream)

    def table(self, header, rows):
        rows = [[_fmt(v) for v in r] for r in rows]
        if self.fmt == "tsv":
            print("\t".join(header), file=self.stream)
            for r in rows:
                print("\t".join(r), file=self.stream)
            return
        widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(), file=self.stream)
        for r in rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip(), file=self.stream)

    def text(self, s: str):
        print(s, end="" if s.endswith("\n") else "\n", file=self.stream)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v))
    return str(v)


def _source(name: str):
    try:
        return catalog.resolve(name)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot load {name!r}: {e}") from e


def _coeffs(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"coefficients must be comma-separated integers, got {text!r}") from None


def _infer_weight(W) -> int:
    return int(gram(W)[0, 0])


def build_code(method: str, source: str, p: int, coeffs: Optional[tuple[int, ...]]) -> LinearCode:
    """Build a code from a construction name, a matrix source and coefficients.

    Missing coefficients default to the canonical solution.
    """
    M = _source(source)
    try:
        if method == "p1":
            k = _infer_weight(M)
            if coeffs is None:
                sol = canonical(solve_p1(M.n, k, p))
                if sol is None:
                    raise UsageError(f"no p1 coefficients for k={k} over GF({p})")
                coeffs = sol.coefficients()
            return build_p1(M, k, *coeffs, p)
        if method == "p2":
            k = _infer_weight(M)
            if coeffs is None:
                sol = canonical(solve_p2(M.n, k, p))
                if sol is None:
                    raise UsageError(f"no p2 coefficients for k={k} over GF({p})")
                coeffs = sol.coefficients()
            return build_p2(M, k, *coeffs, p)
        if method == "star":
            if coeffs is None:
                sol = canonical(solve_star(M.n, p)) if M.n % 4 == 2 else None
                if sol is None:
                    raise UsageError(f"no star coefficients for n={M.n} over GF({p})")
                coeffs = sol.coefficients()
            return build_star(M, *coeffs, p)
    except TypeError:
        raise UsageError(f"wrong number of coefficients for {method}: {coeffs}") from None
    except ValueError as e:
        raise UsageError(str(e)) from e
    raise UsageError(f"unknown construction {method!r}")


# ---------------------------------------------------------------------------
# commands

def cmd_check(args, out: Out) -> int:
    M = _source(args.source)
    prop = args.property
    n = M.n
    pairs = [("source", args.source), ("n", n), ("property", prop)]
    if prop == "skew-type":
        ok = is_skew_type(M)
        pairs.append(("symmetric", is_symmetric(M)))
    elif prop.startswith("weighing:"):
        try:
            k = int(prop.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad weight in {prop!r}") from None
        ok = is_weighing(M, k)
        dev = gram(M) - k * identity(n)
        pairs.append(("gram_deviations", int(np.count_nonzero(dev))))
    elif prop == "conference":
        ok = is_conference(M)
        pairs += [("symmetric", is_symmetric(M)), ("det", det_exact(M))]
        if n >= 4 and n % 2 == 0:
            pairs.append(("bound", ew_bounds(n).conference))
    elif prop == "skew-ew":
        ok = is_skew_ew(M)
        pairs.append(("skew_type", is_skew_type(M)))
        pairs.append(("det_shifted", det_exact(M.a - identity(n))))
        if n >= 4 and n % 2 == 0:
            pairs.append(("bound", ew_bounds(n).zero_diag_skew))
            pairs.append(("gram_deviations", int(np.count_nonzero(gram_deviation(M)))))
    elif prop == "max-det-skew":
        if not is_skew_type(M):
            raise UsageError("max-det-skew needs a skew-type matrix")
        ok = is_max_det_skew_type(M)
        pairs.append(("det", det_exact(M)))
        if n >= 4 and n % 2 == 0:
            b = ew_bounds(n)
            pairs += [("bound", b.pm1_skew_type),
                      ("det_shifted", det_exact(M.a - identity(n))),
                      ("bound_shifted", b.zero_diag_skew)]
    else:
        raise UsageError(f"unknown property {prop!r}")
    pairs.insert(3, ("verdict", ok))
    out.kv(pairs)
    return 0 if ok else 1


def cmd_feasibility(args, out: Out) -> int:
    if args.n_min > args.n_max:
        raise UsageError("n_min must not exceed n_max")
    rows = []
    for n in range(max(2, args.n_min), args.n_max + 1):
        if n % 4 != 2:
            continue
        r = feasibility(n)
        rows.append([n, r.two_n_minus_3_square, r.sum_two_squares, r.skew_ew_possible,
                     r.conference_possible, r.note()])
    out.table(["n", "x", "t", "skew_ew_possible", "conference_possible", "note"], rows)
    return 0


def cmd_solve(args, out: Out) -> int:
    nums = args.params
    m = args.method
    want = 2 if m == "star" else 3
    if len(nums) != want:
        raise UsageError(f"solve {m} expects {'n p' if m == 'star' else 'n k p'}")
    try:
        if m == "star":
            sols = solve_star(*nums)
        elif m == "p1":
            sols = solve_p1(*nums)
        else:
            sols = solve_p2(*nums)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if not sols:
        out.kv([("method", m), ("params", nums), ("solutions", "none")])
        return 1
    shown = sols if args.all else [canonical(sols)]
    names = ["alpha", "beta", "gamma"][:len(shown[0].coefficients())]
    out.table(["p"] + names, [[s.p, *s.coefficients()] for s in shown])
    return 0


def cmd_construct(args, out: Out) -> int:
    C = build_code(args.method, args.source, args.p, _coeffs(args.coeffs))
    sd = is_self_dual(C)
    text = catalog.dump_generator(
        C.p, C.generator,
        comment=f"{args.method} {args.source} p={C.p} {C.name}\n[{C.N},{C.K}] self_dual={_fmt(sd)}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    if out.fmt == "tsv":
        out.kv([("method", args.method), ("source", args.source), ("p", C.p),
                ("N", C.N), ("K", C.K), ("self_dual", sd)])
    else:
        out.text(text)
    return 0 if sd else 1


def _load_code(args) -> LinearCode:
    if args.method == "gen":
        try:
            with open(args.source) as fh:
                p, G = catalog.parse_generator(fh.read())
            return LinearCode(p, G)
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot load generator {args.source!r}: {e}") from e
    if args.p is None:
        raise UsageError("p is required for constructed codes")
    return build_code(args.method, args.source, args.p, _coeffs(args.coeffs))


def cmd_distance(args, out: Out) -> int:
    C = _load_code(args)
    t0 = time.perf_counter()
    try:
        if args.algorithm == "enum":
            rep = min_distance_enum(C, cap=args.cap)
        elif args.algorithm == "bounded":
            rep = min_distance_bounded(C, work_cap=args.work_cap)
        else:
            rep = min_distance(C, "auto", cap=args.cap)
    except CapExceeded as e:
        raise UsageError(str(e)) from e
    pairs = [("code", f"[{C.N},{C.K}]"), ("p", C.p)]
    pairs += list(rep.as_dict().items())
    n = C.K
    if args.method == "star":
        pairs.append(("distance_cap", star_distance_cap(n)))
    elif args.method == "p1" and n >= 6 and rep.d is not None:
        if is_conference(_source(args.source)):
            pairs.append(("distance_cap", conference_distance_cap(n)))
    pairs.append(("seconds", f"{time.perf_counter() - t0:.3f}"))
    out.kv(pairs)
    return 0


def _recompute_row(row: catalog.PublishedRow):
    """(coefficients, computed d or marker, exact, match) for one published cell."""
    n = row.n
    if row.table == 1:
        W = catalog.get(f"C{n}").matrix
        if row.blank:
            return None, "-", None, not solve_p1(n, n - 1, row.p)
        C = build_p1(W, n - 1, row.coefficients[0], row.p)
        coeffs = row.coefficients
    else:
        if row.blank:
            return None, "-", None, not solve_star(n, row.p)
        if n == 26:
            H = catalog.load_ew26()
            if H is None:
                return row.coefficients + (1,), f"requires {catalog.data_dir() / catalog.EW26_FILE}", None, None
        else:
            H = catalog.get(f"EW{n}").matrix
        coeffs = row.coefficients + (1,)
        C = build_star(H, *coeffs, row.p)
    if not is_self_dual(C):
        return coeffs, "not self-dual", False, False
    rep = min_distance(C, "auto")
    return coeffs, rep.d, rep.exact, rep.exact and rep.d == row.d


def cmd_tables(args, out: Out) -> int:
    rows = catalog.rows(args.which)
    names = ("alpha",) if args.which == 1 else ("alpha", "beta")
    if not args.recompute:
        out.table(["table", "N", "p", ",".join(names), "d", "d_b"],
                  [[r.table, r.N, r.p, r.coefficients, r.d, r.d_b] for r in rows])
        return 0
    table_rows = []
    bad = 0
    for r in rows:
        coeffs, d, exact, match = _recompute_row(r)
        if match is False:
            bad += 1
        table_rows.append([r.table, r.N, r.p, coeffs, r.d, r.d_b, d, exact,
                           "skipped" if match is None else match])
    out.table(["table", "N", "p", "coefficients", "d_published", "d_b", "d_computed",
               "exact", "match"], table_rows)
    return 1 if bad else 0


def cmd_skew_search(args, out: Out) -> int:
    M = _source(args.source)
    scramble = None
    if args.scramble is not None:
        scramble = random_signed_permutation(M.n, np.random.default_rng(args.scramble))
        M = SignMatrix(scramble.apply(M))
    pairs = [("source", args.source), ("n", M.n), ("mode", args.mode)]
    if scramble is not None:
        pairs.append(("scramble_seed", args.scramble))
    try:
        found = find_skew_equivalent(M, mode=args.mode, node_cap=args.node_cap)
    except SearchInconclusive as e:
        out.kv(pairs + [("status", "inconclusive (cap)"), ("nodes", e.nodes)])
        return 1
    except ValueError as e:
        raise UsageError(str(e)) from e
    if not found:
        out.kv(pairs + [("status", "no row-witness found")])
        return 1
    pairs += [("status", "found"), ("count", len(found))]
    K, w = found[0]
    pairs += [("sigma", w.sigma), ("signs", w.signs)]
    out.kv(pairs)
    if out.fmt != "tsv":
        out.text(catalog.dump_matrix(K, comment="skew-type matrix K"))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")

    ap = argparse.ArgumentParser(prog="ewcodes", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="structural predicates")
    s.add_argument("source", help="catalog name (EW6, EW14, C6, C14, EW26) or matrix file")
    s.add_argument("property", help="skew-type | weighing:K | conference | skew-ew | max-det-skew")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("feasibility", parents=[common], help="necessary conditions per order")
    s.add_argument("n_min", type=int)
    s.add_argument("n_max", type=int)
    s.set_defaults(func=cmd_feasibility)

    s = sub.add_parser("solve", parents=[common], help="coefficient solutions")
    s.add_argument("method", choices=("p1", "p2", "star"))
    s.add_argument("params", type=int, nargs="+", help="star: n p; p1/p2: n k p")
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("construct", parents=[common], help="build a generator matrix")
    s.add_argument("method", choices=("p1", "p2", "star"))
    s.add_argument("source")
    s.add_argument("p", type=int)
    s.add_argument("coeffs", nargs="?", help="comma-separated, e.g. 1,1,1")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("distance", parents=[common], help="minimum distance")
    s.add_argument("method", choices=("p1", "p2", "star", "gen"))
    s.add_argument("source", help="matrix source, or a generator file for 'gen'")
    s.add_argument("p", type=int, nargs="?")
    s.add_argument("coeffs", nargs="?")
    s.add_argument("--algorithm", choices=("auto", "enum", "bounded"), default="auto")
    s.add_argument("--cap", type=int, default=ENUM_CAP, help="enumeration cap on p^K")
    s.add_argument("--work-cap", type=int, default=None, help="message budget for bounded search")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("tables", parents=[common], help="published tables")
    s.add_argument("which", type=int, choices=(1, 2))
    s.add_argument("--recompute", action="store_true")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("skew-search", parents=[common], help="signed row permutation to skew type")
    s.add_argument("source")
    s.add_argument("--mode", choices=("first", "all"), default="first")
    s.add_argument("--node-cap", type=int, default=NODE_CAP)
    s.add_argument("--scramble", type=int, metavar="SEED",
                   help="apply a seeded random signed row permutation first")
    s.set_defaults(func=cmd_skew_search)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    out = Out(args.format)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
