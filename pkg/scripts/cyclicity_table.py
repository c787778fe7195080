"""Tabulate p-primary cyclicity of cyclotomic discriminant groups against the ramification criterion."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

from tracelattice.discgroup import crosscheck_row, ramified_pairs


@dataclass
class CyclicityConfig:
    max_m: int = 100
    csv_out: Path | None = None


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=CyclicityConfig.max_m)
    parser.add_argument("--csv-out", type=Path, default=None)
    cfg = CyclicityConfig(**vars(parser.parse_args()))

    rows = [crosscheck_row(m, p) for m, p in ramified_pairs(cfg.max_m)]
    cyclic = [(r.m, r.p) for r in rows if r.snf_cyclic]
    bad = [(r.m, r.p) for r in rows if not r.agree]
    print(f"{len(rows)} ramified pairs with m <= {cfg.max_m}")
    print(f"nontrivial cyclic p-part: {cyclic}")
    print(f"disagreements: {bad}")

    if cfg.csv_out:
        with open(cfg.csv_out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["m", "p", "e", "f", "g", "exponents", "snf_cyclic", "predicted"])
            for r in rows:
                w.writerow([r.m, r.p, r.e, r.f, r.g, " ".join(map(str, r.exponents)), r.snf_cyclic, r.predicted])
        print(f"table written to {cfg.csv_out}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
