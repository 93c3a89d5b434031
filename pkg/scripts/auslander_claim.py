"""Compare Auslander's determinator formula with the minimal determinator.

For seeded random morphisms between random modules over a linear quiver,
records whether the claimed object determines the morphism and whether it
carries summands that are not needed.
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass

import numpy as np

from detmorph.determined import check_auslander_claim
from detmorph.oracle import random_morphism, random_representation
from detmorph.quiver import linear_algebra
from detmorph.rep import hom_space


@dataclass
class ClaimConfig:
    n: int = 3
    p: int = 5
    count: int = 40
    max_dim: int = 2
    seed: int = 0


def sample_morphisms(cfg: ClaimConfig):
    alg = linear_algebra(cfg.n, cfg.p)
    rng = np.random.default_rng(cfg.seed)
    out = []
    while len(out) < cfg.count:
        s = int(rng.integers(0, 2 ** 31))
        dims_x = {v: int(rng.integers(0, cfg.max_dim + 1)) for v in alg.vertices}
        dims_y = {v: int(rng.integers(0, cfg.max_dim + 1)) for v in alg.vertices}
        X = random_representation(alg, dims_x, s)
        Y = random_representation(alg, dims_y, s + 1)
        if hom_space(X, Y).dim:
            out.append(random_morphism(X, Y, s))
    return out


def run(cfg: ClaimConfig) -> dict:
    tally = Counter()
    rows = []
    for a in sample_morphisms(cfg):
        r = check_auslander_claim(a)
        key = "insufficient" if not r.verdict else (
            "sufficient, redundant" if r.details["claimStrictlyLarger"] else "sufficient, tight")
        tally[key] += 1
        rows.append({
            "source": list(a.source.dim_vector),
            "target": list(a.target.dim_vector),
            "claimDetermines": r.verdict,
            "minimal": [list(m.dim_vector) for m in r.minimal_summands],
            "claim": [list(m["dims"].values()) for m in r.details["claimSummands"]],
        })
    return {"config": asdict(cfg), "tally": dict(sorted(tally.items())), "cases": rows}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(ClaimConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    cfg = ClaimConfig(**{k: getattr(args, k) for k in asdict(ClaimConfig())})
    result = run(cfg)
    if args.json:
        print(json.dumps(result, sort_keys=True))
        return
    print(f"A{cfg.n} over F_{cfg.p}, {cfg.count} morphisms")
    for k, v in result["tally"].items():
        print(f"  {k:24s} {v}")
    for row in result["cases"]:
        if not row["claimDetermines"]:
            print(f"  fails: {row['source']} -> {row['target']}  minimal {row['minimal']}  claim {row['claim']}")


if __name__ == "__main__":
    main()
