"""Knit the AR quiver of a representation-finite bound quiver algebra."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from detmorph.determined import ar_quiver_dot, knit_ar_quiver
from detmorph.quiver import BoundQuiverAlgebra, linear_algebra


@dataclass
class ARConfig:
    algebra: str | None = None   # JSON file; default is a linear quiver
    n: int = 4
    p: int = 5
    max_vertices: int = 500
    dot: str | None = None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--algebra")
    ap.add_argument("--n", type=int, default=ARConfig.n)
    ap.add_argument("--p", type=int, default=ARConfig.p)
    ap.add_argument("--max-vertices", type=int, default=ARConfig.max_vertices)
    ap.add_argument("--dot", help="write DOT to this file")
    cfg = ARConfig(**vars(ap.parse_args(argv)))

    alg = (BoundQuiverAlgebra.from_json(Path(cfg.algebra).read_text()) if cfg.algebra
           else linear_algebra(cfg.n, cfg.p))
    q = knit_ar_quiver(alg, cfg.max_vertices)
    print(f"{len(q.vertices)} indecomposables, {len(q.arrows)} irreducible maps")
    for i, m in enumerate(q.vertices):
        t = q.tau[i]
        tau_txt = "projective" if t is None else f"tau = {list(q.vertices[t].dim_vector)}"
        print(f"  {i:3d} {list(m.dim_vector)}  {tau_txt}")
    if cfg.dot:
        Path(cfg.dot).write_text(ar_quiver_dot(q) + "\n")
        print(f"wrote {cfg.dot}")


if __name__ == "__main__":
    main()
