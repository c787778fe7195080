"""Classify every field in both families and summarize agreement with the predictions."""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from tracelattice.roots import DEFAULT_MAX_NODES
from tracelattice.theorems import sweep


@dataclass
class SweepConfig:
    max_m: int = 60
    max_quad: int = 200
    max_nodes: int = DEFAULT_MAX_NODES
    out: Path = Path("results/sweep.json")


def parse_config() -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    for f in fields(SweepConfig):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return SweepConfig(**vars(parser.parse_args()))


def main() -> int:
    cfg = parse_config()
    start = time.perf_counter()
    records = sweep(cfg.max_m, cfg.max_quad, max_nodes=cfg.max_nodes)
    elapsed = time.perf_counter() - start

    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(json.dumps([r.to_json() for r in records], indent=2))

    similar = Counter(r.similar for r in records if r.similar)
    roots = [r.spec.label for r in records if r.root_lattice]
    bad = [r for r in records if not r.agrees]
    print(f"config: { {k: str(v) for k, v in asdict(cfg).items()} }")
    print(f"{len(records)} fields in {elapsed:.1f}s, {len(bad)} disagreements")
    print(f"unscaled root lattices: {', '.join(roots)}")
    print("similarity classes of the primitive rescale:")
    for label, count in sorted(similar.items(), key=lambda kv: -kv[1]):
        print(f"  {label:<12} {count}")
    for r in bad:
        print(f"  DISAGREE {r.spec.label}: {r.agreement} {r.error or ''}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
