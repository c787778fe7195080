"""Floating-point embedding form versus the exact trace-form Gram matrix."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from tracelattice.cyclotomic import phi
from tracelattice.theorems import check_bk


@dataclass
class EmbeddingConfig:
    max_m: int = 30
    tol: float = 1e-6


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=EmbeddingConfig.max_m)
    parser.add_argument("--tol", type=float, default=EmbeddingConfig.tol)
    cfg = EmbeddingConfig(**vars(parser.parse_args()))

    worst = 0.0
    print(f"{'m':>4} {'n':>4} {'max dev':>10}")
    for m in range(1, cfg.max_m + 1):
        dev = check_bk(m)
        worst = max(worst, dev)
        print(f"{m:>4} {phi(m):>4} {dev:>10.2e}")
    print(f"worst deviation {worst:.2e} (tolerance {cfg.tol:g})")
    return 0 if worst <= cfg.tol else 1


if __name__ == "__main__":
    raise SystemExit(main())
