"""Command-line entry point: ``gradedspecht {enumerate,branch,verify}``.

Output is deterministic. ``enumerate`` writes one JSON object per line,
``branch`` and ``verify`` write a single JSON document; ``--format csv``
writes a flat table instead, with nested values JSON-encoded in their cells.
``verify`` exits with status 0 exactly when no violations were found.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys

from .branching import (
    check_defect_shift_identity,
    check_degree_identity,
    check_restriction_identity,
    check_strictly_decreasing,
    dual_induction_filtration,
    graded_dim_induced,
    induction_filtration,
)
from .combinatorics import (
    Multipartition,
    QuiverParams,
    addable_nodes,
    block_of,
    codegree,
    defect,
    degree,
    enumerate_multicompositions,
    enumerate_multipartitions,
    enumerate_std,
    final_tableau,
    graded_dim,
    node_residue,
    residue_sequence,
)

SUITES = ("combinatorics", "strong", "tilting", "lk-action", "mlambda", "klr", "cross-model")
ENGINE_SUITES = ("strong", "tilting", "lk-action", "mlambda", "cross-model")

# the sweep used when no --e/--charge is given to the combinatorics suite
COMBINATORICS_SWEEP_E = (0, 2, 3, 4)
COMBINATORICS_SWEEP_CHARGES = ((0,), (0, 0), (3, 0), (7, 3, 0))


class UsageError(Exception):
    pass


def _charge(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"charge must be a comma separated list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, help="quantum characteristic (0 or >= 2)")
    common.add_argument("--level", type=int, help="number of components")
    common.add_argument("--charge", type=_charge, help="multicharge, comma separated")
    common.add_argument("--n", type=int, help="rank")
    common.add_argument("--n-max", type=int, dest="n_max", help="largest rank of a range starting at --n (default 0)")
    common.add_argument("--residue", type=int, help="residue i")
    common.add_argument("--mode", choices=("rational", "prime"), help="scalar field for algebra suites")
    common.add_argument("--p", type=int, help="prime for --mode prime")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default stdout)")

    parser = argparse.ArgumentParser(prog="gradedspecht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="multipartitions and standard tableaux with residues and degrees")
    br = sub.add_parser("branch", parents=[common], help="induction filtration of a graded Specht module")
    br.add_argument("--shape", required=True, help='multipartition as JSON, e.g. "[[2,1],[1]]"')
    br.add_argument("--dual", action="store_true", help="dual filtration (nodes bottom to top)")
    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("--suite", required=True, help="one of " + ", ".join(SUITES))
    return parser


# helpers


def _poly(p) -> list:
    return [list(x) for x in p.to_list()]


def _ranks(args, default=None) -> list[int]:
    if args.n is None and args.n_max is None:
        if default is None:
            raise UsageError("give --n or --n-max")
        return list(default)
    lo = args.n if args.n is not None else 0
    hi = args.n_max if args.n_max is not None else lo
    if lo < 0 or hi < lo:
        raise UsageError("need 0 <= --n <= --n-max")
    return list(range(lo, hi + 1))


def _quiver(args) -> QuiverParams:
    charge = args.charge
    if charge is None:
        charge = (0,) * (args.level or 1)
    if args.level is not None and args.level != len(charge):
        raise UsageError(f"--level {args.level} does not match --charge of length {len(charge)}")
    e = 0 if args.e is None else args.e
    try:
        return QuiverParams(e, charge)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_shape(text: str, level: int | None) -> Multipartition:
    try:
        data = json.loads(text)
        mu = Multipartition.from_list(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed shape {text!r}: {exc}")
    if level is not None and mu.level != level:
        raise UsageError(f"shape has {mu.level} components but level is {level}")
    return mu


# commands


def cmd_enumerate(args) -> tuple[list, int]:
    params = _quiver(args)
    rows = []
    for n in _ranks(args):
        for mu in enumerate_multipartitions(n, params):
            for t in enumerate_std(mu):
                rows.append(
                    {
                        "shape": mu.to_list(),
                        "tableau": t.to_list(),
                        "res": list(residue_sequence(t, params)),
                        "deg": degree(t, params),
                        "codeg": codegree(t, params),
                    }
                )
    return rows, 0


def cmd_branch(args) -> tuple[dict, int]:
    params = _quiver(args)
    mu = _parse_shape(args.shape, params.level)
    if mu.level != params.level:
        raise UsageError("shape level and charge length differ")
    if args.residue is None:
        raise UsageError("branch needs --residue")
    filt = (dual_induction_filtration if args.dual else induction_filtration)(mu, args.residue, params)
    out = filt.to_dict()
    for layer, d in zip(filt.layers, out["layers"]):
        d["graded_dim"] = _poly(graded_dim(layer.shape, params))
    out["graded_dim_induced"] = _poly(graded_dim_induced(mu, args.residue, params))
    out["params"] = params.metadata(mu.n)
    return out, 0


def _combinatorics_report(args) -> dict:
    if args.e is None and args.charge is None:
        configs = [(e, k) for e in COMBINATORICS_SWEEP_E for k in COMBINATORICS_SWEEP_CHARGES]
    else:
        q = _quiver(args)
        configs = [(q.e, q.multicharge)]
    ranks = _ranks(args, default=range(0, 7))
    checked = 0
    violations = []
    for e, kappa in configs:
        params = QuiverParams(e, kappa)
        for n in ranks:
            for mu in enumerate_multipartitions(n, params):
                where = {"e": e, "charge": list(kappa), "shape": mu.to_list()}
                t_mu = final_tableau(mu)
                checks = [
                    ("defect", codegree(t_mu, params) + degree(t_mu, params) == defect(block_of(mu, params), params)),
                    ("restriction", check_restriction_identity(mu, params)),
                ]
                residues = range(e) if e else sorted({node_residue(a, params) for a in addable_nodes(mu, None, params)})
                for i in residues:
                    filt = induction_filtration(mu, i, params)
                    checks.append((f"degree i={i}", check_degree_identity(mu, i, params)))
                    checks.append((f"defect-shift i={i}", check_defect_shift_identity(mu, i, params)))
                    checks.append((f"decreasing i={i}", check_strictly_decreasing([l.shape for l in filt.layers])))
                for name, ok in checks:
                    checked += 1
                    if not ok:
                        violations.append(dict(where, check=name))
    return {
        "suite": "combinatorics",
        "params": {"configs": [{"e": e, "charge": list(k)} for e, k in configs], "n": ranks},
        "checked": checked,
        "violations": violations,
    }


def _engine_params(args, n):
    from .hecke import HeckeParams

    level = args.level or (len(args.charge) if args.charge else 1)
    if args.charge is not None and len(args.charge) != level:
        raise UsageError("--level does not match --charge")
    if args.mode == "prime":
        raise UsageError(f"suite {args.suite} runs in rational mode")
    if args.e not in (None, 0):
        raise UsageError("rational mode has xi = 2, so e must be 0")
    if args.charge is None:
        return HeckeParams.semisimple(n, level)
    k = args.charge
    if any(k[l] - k[l + 1] < n for l in range(len(k) - 1)):
        raise UsageError(f"rational mode needs charges with gaps >= n = {n}, got {list(k)}")
    return HeckeParams(n, k, 2)


def _check_engine_scale(n, level):
    if n > 4 or level > 2:
        raise UsageError("algebra suites support n <= 4 and level <= 2")


def _engine_report(args) -> dict:
    from .hecke import CellularBases, HeckeAlgebra, verify_cross_model

    ranks = [n for n in _ranks(args) if n >= 1]
    if not ranks:
        raise UsageError("algebra suites need n >= 1")
    checked = 0
    violations = []
    instances = []
    for n in ranks:
        params = _engine_params(args, n)
        _check_engine_scale(n, params.level)
        alg = HeckeAlgebra(params)
        if args.suite == "cross-model":
            reps = [verify_cross_model(params, alg)]
        else:
            bases = CellularBases(alg)
            if args.suite == "strong":
                reps = [bases.verify_strong_dominance()]
            elif args.suite == "tilting":
                reps = [bases.verify_product_vanishing()]
            elif args.suite == "lk-action":
                reps = [bases.verify_Lk_action()]
            else:
                shapes = enumerate_multicompositions(n, params.level)
                reps = [bases.verify_mlambda_expansion(lam) for lam in shapes]
        for rep in reps:
            checked += rep.checked
            violations.extend(dict(v, params=rep.params) for v in rep.violations)
            inst = {"params": rep.params, "checked": rep.checked}
            if rep.extra:
                inst["extra"] = rep.extra
            instances.append(inst)
    return {
        "suite": args.suite,
        "params": {"mode": "rational", "xi": 2, "n": ranks},
        "checked": checked,
        "violations": violations,
        "instances": instances,
    }


def _klr_report(args) -> dict:
    from .hecke import HeckeAlgebra, HeckeParams, verify_klr

    if args.mode == "rational":
        raise UsageError("the klr suite runs in prime mode")
    p = args.p or 2
    if args.e not in (None, p):
        raise UsageError(f"prime mode has xi = 1, so e = p = {p}")
    level = args.level or (len(args.charge) if args.charge else 1)
    if args.charge is not None and len(args.charge) != level:
        raise UsageError("--level does not match --charge")
    charges = [args.charge] if args.charge is not None else list(itertools.product(range(p), repeat=level))
    ranks = [n for n in _ranks(args) if n >= 1]
    if not ranks:
        raise UsageError("the klr suite needs n >= 1")
    checked = 0
    violations = []
    instances = []
    for n in ranks:
        _check_engine_scale(n, level)
        for kappa in charges:
            try:
                params = HeckeParams.degenerate(n, kappa, p)
            except ValueError as exc:
                raise UsageError(str(exc))
            rep = verify_klr(params, HeckeAlgebra(params))
            checked += rep.checked
            violations.extend(dict(v, params=rep.params) for v in rep.violations)
            extra = {k: v for k, v in rep.extra.items() if k != "backend"}
            instances.append({"params": rep.params, "checked": rep.checked, "extra": extra})
    return {
        "suite": "klr",
        "params": {"mode": "prime", "p": p, "xi": 1, "n": ranks},
        "checked": checked,
        "violations": violations,
        "instances": instances,
    }


def cmd_verify(args) -> tuple[dict, int]:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    if args.suite == "combinatorics":
        report = _combinatorics_report(args)
    elif args.suite == "klr":
        report = _klr_report(args)
    else:
        report = _engine_report(args)
    return report, 0 if not report["violations"] else 1


# output


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if not rows:
        return ""
    fields = list(rows[0])
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: v if isinstance(v, (int, str)) else json.dumps(v, separators=(",", ":")) for k, v in row.items()})
    return buf.getvalue()


def render(command: str, result, fmt: str) -> str:
    if fmt == "csv":
        if command == "enumerate":
            return _csv(result)
        if command == "branch":
            return _csv(result["layers"])
        return _csv(
            [{"suite": result["suite"], "checked": result["checked"], "violations": len(result["violations"])}]
        )
    if command == "enumerate":
        return "".join(json.dumps(row, separators=(",", ":")) + "\n" for row in result)
    return json.dumps(result, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"enumerate": cmd_enumerate, "branch": cmd_branch, "verify": cmd_verify}[args.command]
    try:
        result, code = handler(args)
    except UsageError as exc:
        parser.error(str(exc))
    text = render(args.command, result, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
