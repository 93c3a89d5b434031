"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 violated mathematical precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ar import tau
from .determined import (DeterminationReport, GammaSubmodule, check_auslander_claim,
                         construct_determined, decide_right_determined, gamma_closure,
                         image_hom, minimal_determinator, almost_split_ending_at)
from .errors import InputError, PreconditionError
from .oracle import enumerate_test_modules, refute_determination
from .poset import FinitePoset, class_determined, determinator_candidates, determinators, \
    object_determines
from .quiver import BoundQuiverAlgebra
from .rep import Representation, RepMorphism, indecomposable_decomposition, is_right_minimal


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc


def _load_algebra(path: str) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra.from_dict(_read_json(path))


def _load_rep(alg, path: str) -> Representation:
    return Representation.from_dict(alg, _read_json(path))


def _load_morphism(alg, path: str) -> RepMorphism:
    return RepMorphism.from_dict(alg, _read_json(path))


def _load_generators(path: str, C: Representation, Y: Representation) -> list[RepMorphism]:
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("generators")
    if not isinstance(data, list):
        raise InputError("generators file must hold a list or {\"generators\": [...]}")
    gens = []
    for item in data:
        maps = item.get("vertexMaps", item) if isinstance(item, dict) else None
        if not isinstance(maps, dict):
            raise InputError("each generator needs vertexMaps")
        gens.append(RepMorphism(C, Y, {str(k): v for k, v in maps.items()}))
    return gens


def parse_max_dims(text: str) -> dict[str, int]:
    out = {}
    for part in filter(None, (s.strip() for s in text.split(","))):
        if ":" not in part:
            raise InputError(f"bad --max-dim entry {part!r}; expected vertex:bound")
        v, d = part.rsplit(":", 1)
        try:
            out[v.strip()] = int(d)
        except ValueError as exc:
            raise InputError(f"bad bound in {part!r}") from exc
    return out


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _write_out(args, payload: dict):
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")


def _summands_line(mods: list[Representation]) -> str:
    if not mods:
        return "(zero module)"
    return " (+) ".join(str(list(m.dim_vector)) for m in mods)


# commands

def cmd_construct(args) -> int:
    alg = _load_algebra(args.algebra)
    C = _load_rep(alg, args.c)
    Y = _load_rep(alg, args.y)
    gens = _load_generators(args.h, C, Y) if args.h else []
    H = gamma_closure(C, Y, gens)
    given = GammaSubmodule(C, Y, H.space.coords_many(gens), H.space) if gens else H
    notes = []
    if given != H:
        notes.append("generators were not End(C)-closed; using their closure")
    alpha = construct_determined(C, Y, H, functional_seed=args.seed or None)
    image_ok = image_hom(C, alpha, H.space) == H
    minimal = is_right_minimal(alpha)
    payload = alpha.to_dict()
    _write_out(args, payload)
    report = {"morphism": payload, "sourceDims": list(alpha.source.dim_vector),
              "imageEqualsH": image_ok, "rightMinimal": minimal, "notes": notes}
    human = "\n".join(notes + [
        f"X dimension vector: {list(alpha.source.dim_vector)}",
        f"Im Hom(C, alpha) = H: {image_ok}",
        f"right minimal: {minimal}",
    ])
    _emit(args, report, human)
    return 0


def cmd_check(args) -> int:
    alg = _load_algebra(args.algebra)
    a = _load_morphism(alg, args.morphism)
    C = _load_rep(alg, args.c)
    report = decide_right_determined(a, C)
    _write_out(args, report.to_dict())
    _emit(args, report.to_dict(), f"right determined by C: {report.verdict}")
    return 0


def cmd_mindet(args) -> int:
    alg = _load_algebra(args.algebra)
    a = _load_morphism(alg, args.morphism)
    summands = minimal_determinator(a)
    report = DeterminationReport(True, minimal_summands=summands)
    _write_out(args, report.to_dict())
    _emit(args, report.to_dict(), f"minimal determinator: {_summands_line(summands)}")
    return 0


def _dot(tau_z: Representation, middle: Representation, z: Representation) -> str:
    def label(m):
        return "[" + ",".join(map(str, m.dim_vector)) + "]"
    return "\n".join([
        "digraph ar_sequence {",
        "  rankdir=LR;",
        f'  tau [label="tau Z {label(tau_z)}"];',
        f'  mid [label="X {label(middle)}"];',
        f'  z [label="Z {label(z)}"];',
        "  tau -> mid;",
        "  mid -> z;",
        "}",
    ])


def cmd_ar(args) -> int:
    alg = _load_algebra(args.algebra)
    Z = _load_rep(alg, args.z)
    res = almost_split_ending_at(Z)
    middle = indecomposable_decomposition(res.middle)
    payload = {
        "morphism": res.morphism.to_dict(),
        "middleSummands": [m.to_dict() for m in middle],
        "kernel": res.kernel.to_dict() if res.kernel is not None else None,
        "projective": res.kernel is None,
    }
    _write_out(args, res.morphism.to_dict())
    if args.dot:
        tz = res.kernel if res.kernel is not None else tau(Z)
        print(_dot(tz, res.middle, Z))
        return 0
    lines = [f"minimal right almost split morphism: {list(res.middle.dim_vector)} -> {list(Z.dim_vector)}",
             f"middle term summands: {_summands_line(middle)}"]
    if res.kernel is not None:
        lines.append(f"AR sequence kernel (tau Z): {list(res.kernel.dim_vector)}")
    else:
        lines.append("Z is projective: no AR sequence ends at Z")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_poset(args) -> int:
    P = FinitePoset.from_dict(_read_json(args.poset))
    for e in (args.x, args.y):
        if e not in P.index:
            raise InputError(f"unknown element {e}")
    x, y = args.x, args.y
    cands = sorted(determinator_candidates(P, x, y))
    if args.c is not None:
        if args.c not in P.index:
            raise InputError(f"unknown element {args.c}")
        verdict = object_determines(P, x, y, args.c)
        payload = {"verdict": verdict, "candidates": cands}
        human = f"{x} -> {y} right determined by {args.c}: {verdict}"
    elif args.cls is not None:
        D = [c for c in args.cls.split(",") if c]
        unknown = [c for c in D if c not in P.index]
        if unknown:
            raise InputError(f"unknown elements {unknown}")
        verdict = class_determined(P, x, y, D)
        payload = {"verdict": verdict, "candidates": cands}
        human = f"{x} -> {y} right determined by class {D}: {verdict}"
    else:
        dets = determinators(P, x, y)
        payload = {"verdict": bool(dets), "determinators": dets, "candidates": cands}
        human = f"{x} -> {y} determined by objects: {dets if dets else 'none'}"
    _emit(args, payload, human)
    return 0


def cmd_oracle(args) -> int:
    alg = _load_algebra(args.algebra)
    a = _load_morphism(alg, args.morphism)
    C = _load_rep(alg, args.c)
    bounds = parse_max_dims(args.max_dim) if args.max_dim else \
        {v: max(1, a.target.dims[v]) for v in alg.vertices}
    family = enumerate_test_modules(alg, bounds)
    witness = refute_determination(a, C, family)
    report = DeterminationReport(witness is None, witness=witness,
                                 details={"familySize": len(family), "semiDecision": True})
    _write_out(args, report.to_dict())
    human = (f"searched {len(family)} modules: "
             + ("no counterexample" if witness is None else
                f"counterexample from {list(witness.source.dim_vector)}"))
    _emit(args, report.to_dict(), human)
    return 0


def cmd_claim(args) -> int:
    alg = _load_algebra(args.algebra)
    a = _load_morphism(alg, args.morphism)
    report = check_auslander_claim(a)
    _write_out(args, report.to_dict())
    human = "\n".join([
        f"claimed determinator determines the morphism: {report.verdict}",
        f"minimal determinator: {_summands_line(report.minimal_summands)}",
        f"claim strictly larger than needed: {report.details['claimStrictlyLarger']}",
    ])
    _emit(args, report.to_dict(), human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the resulting morphism/report to FILE")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", required=True, help="algebra JSON file")

    parser = argparse.ArgumentParser(prog="detmorph",
                                     description="Morphisms determined by objects over bound quiver algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, alg], help="build the C-determined morphism with image H")
    p.add_argument("--c", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--h", help="generators of H (default: H = 0)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common, alg], help="decide right C-determination")
    p.add_argument("--morphism", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mindet", parents=[common, alg], help="minimal determinator")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=cmd_mindet)

    p = sub.add_parser("ar", parents=[common, alg], help="almost split morphism ending at Z")
    p.add_argument("--z", required=True)
    p.add_argument("--dot", action="store_true", help="print the AR sequence as DOT")
    p.set_defaults(func=cmd_ar)

    p = sub.add_parser("poset", parents=[common], help="determination in a finite poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--c")
    group.add_argument("--class", dest="cls", help="comma-separated class of objects")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("oracle", parents=[common, alg], help="brute-force counterexample search")
    p.add_argument("--morphism", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--max-dim", help='dimension bounds, e.g. "1:2,2:2"')
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("claim", parents=[common, alg], help="compare Auslander's determinator formula")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=cmd_claim)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
