#!/usr/bin/env python3
"""Recompute both distance tables and write them as TSV under results/."""

import argparse
import contextlib
import io
from pathlib import Path

from ewcodes.cli import main


def run(argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    status = 0
    for which in (1, 2):
        code, text = run(["tables", str(which), "--recompute", "--format", "tsv"])
        (out / f"table{which}.tsv").write_text(text)
        print(text)
        status |= code
    raise SystemExit(status)
