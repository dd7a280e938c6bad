"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage error,
3 precondition failure (error code printed on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .corona import CoronaKind, CoronaSpec, corona
from .cospectral import cospectral_search, verify_cospectral_corollary
from .errors import PRECONDITION_CODES, SpectraError
from .graph import make_family, matrix_of
from .invariants import (
    FAMILY_NAMES,
    IntegralFamilyParams,
    family_spectrum,
    integer_root_check,
    integral_family,
    is_integral,
    kirchhoff_formula,
    kirchhoff_oracle,
    spanning_trees_formula,
    spanning_trees_oracle,
)
from .io import format_edgelist, graph_to_json, parse_graph_arg
from .poly import charpoly_exact
from .spectra import SpectrumMultiset, eigenvalues_sym, max_residual
from .theorems import theorem_charpoly

VERIFY_TOL = 1e-8


@dataclass
class VerifyReport:
    spec: str
    matrix: str
    theorem_poly: list[str]
    oracle_poly: list[str]
    exact_match: bool
    residual: float
    timing_ms: float


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text if text is not None else obj)


def _spec_from(args, kind=None) -> CoronaSpec:
    return CoronaSpec(parse_graph_arg(args.g1), parse_graph_arg(args.g2), kind or args.kind)


def _describe(spec: CoronaSpec) -> str:
    op = "⊙" if spec.kind is CoronaKind.VERTEX else "⊖"
    return f"G1(n={spec.g1.n},m={spec.g1.m}) {op} G2(n={spec.g2.n},m={spec.g2.m})"


def verify_case(spec: CoronaSpec, which: str) -> VerifyReport:
    start = time.perf_counter()
    theorem = theorem_charpoly(spec, which)
    graph = corona(spec)[0]
    M = matrix_of(graph, which)
    oracle = charpoly_exact(M)
    residual = max_residual(theorem.spectrum(), eigenvalues_sym(M))
    return VerifyReport(
        spec=_describe(spec),
        matrix=which,
        theorem_poly=theorem.expanded.to_json(),
        oracle_poly=oracle.to_json(),
        exact_match=theorem.expanded == oracle,
        residual=residual,
        timing_ms=(time.perf_counter() - start) * 1000,
    )


def _verify_job(job):
    return verify_case(*job)


def cmd_family(args):
    if args.kind == "complement_of":
        g = make_family("complement_of", parse_graph_arg(args.params[0]))
    else:
        g = make_family(args.kind, [int(p) for p in args.params])
    _emit(graph_to_json(g), args.json, format_edgelist(g).rstrip("\n"))
    return 0


def cmd_corona(args):
    spec = _spec_from(args)
    g, labeling = corona(spec)
    if args.labeling:
        Path(args.labeling).write_text(json.dumps(labeling.to_json()))
    if args.json:
        _emit({"graph": graph_to_json(g), "labeling": labeling.to_json()}, True)
    else:
        print(format_edgelist(g), end="")
    return 0


def _matrix_target(args):
    """Either an arbitrary --graph (direct only) or a corona spec."""
    if args.graph:
        if args.method == "theorem":
            raise SpectraError("INVALID_PARAMS", "--method theorem needs --g1/--g2/--kind")
        return None, parse_graph_arg(args.graph)
    if not (args.g1 and args.g2 and args.kind):
        raise SpectraError("INVALID_PARAMS", "give --graph, or --g1, --g2 and --kind")
    spec = _spec_from(args)
    return spec, None


def cmd_charpoly(args):
    spec, graph = _matrix_target(args)
    if args.method == "theorem":
        fp = theorem_charpoly(spec, args.matrix)
        oracle = charpoly_exact(matrix_of(corona(spec)[0], args.matrix))
        report = fp.to_json()
        report["spectrum"] = list(fp.spectrum().values)
        report["oracle_match"] = fp.expanded == oracle
        _emit(report, args.json, str(fp.expanded))
        return 0 if report["oracle_match"] else 1
    g = graph if graph is not None else corona(spec)[0]
    p = charpoly_exact(matrix_of(g, args.matrix))
    _emit({"expanded": p.to_json()}, args.json, str(p))
    return 0


def cmd_spectrum(args):
    spec, graph = _matrix_target(args)
    if args.method == "theorem":
        spec_ms = theorem_charpoly(spec, args.matrix).spectrum()
    else:
        g = graph if graph is not None else corona(spec)[0]
        spec_ms = eigenvalues_sym(matrix_of(g, args.matrix))
    text = "\n".join(f"{v:.10g} x{c}" for v, c in spec_ms.multiplicities())
    _emit(spec_ms.to_json(), args.json, text)
    return 0


def cmd_verify(args):
    g1, g2 = parse_graph_arg(args.g1), parse_graph_arg(args.g2)
    mats = ["A", "L", "Q"] if args.matrix == "all" else [args.matrix]
    kinds = ["vertex", "edge"] if args.kind == "both" else [args.kind]
    jobs = [(CoronaSpec(g1, g2, k), w) for w in mats for k in kinds]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as ex:
            reports = list(ex.map(_verify_job, jobs))
    else:
        reports = [verify_case(*j) for j in jobs]
    ok = all(r.exact_match for r in reports)
    if args.json:
        _emit([asdict(r) for r in reports], True)
    else:
        for r in reports:
            status = "MATCH" if r.exact_match else "MISMATCH"
            print(f"{r.matrix} {r.spec}: {status} residual={r.residual:.3g} ({r.timing_ms:.1f} ms)")
    return 0 if ok else 1


def cmd_invariants(args):
    spec = _spec_from(args)
    g = corona(spec)[0]
    t_formula, t_oracle = spanning_trees_formula(spec), spanning_trees_oracle(g)
    kf_formula, kf_oracle = kirchhoff_formula(spec), kirchhoff_oracle(g)
    kf_ok = abs(float(kf_formula) - kf_oracle) <= 1e-9 * abs(kf_oracle)
    out = {
        "spanning_trees": {"formula": str(t_formula), "oracle": str(t_oracle),
                           "match": t_formula == t_oracle},
        "kirchhoff": {"formula": float(kf_formula), "formula_exact": str(kf_formula),
                      "oracle": kf_oracle, "match": kf_ok},
    }
    text = (f"spanning trees: formula={t_formula} oracle={t_oracle}\n"
            f"Kirchhoff index: formula={kf_formula} (~{float(kf_formula):.12g}) oracle={kf_oracle:.12g}")
    _emit(out, args.json, text)
    return 0 if (t_formula == t_oracle and kf_ok) else 1


def cmd_integral_family(args):
    fam = integral_family(IntegralFamilyParams(args.name, tuple(args.params)))
    mults, route = family_spectrum(fam)
    integral = is_integral(mults, 1e-7)
    exact = integer_root_check(fam)
    out = {"n1": fam.n1, "n2": fam.n2, "kind": fam.spec.kind.value,
           "vertices": fam.spec.vertex_count(), "route": route,
           "integral": integral, "integer_roots_exact": exact,
           "multiplicities": [[v, c] for v, c in mults]}
    text = (f"n1={fam.n1} n2={fam.n2} vertices={fam.spec.vertex_count()} "
            f"integral={integral} exact={exact}\n"
            + "\n".join(f"{v:.10g} x{c}" for v, c in mults))
    _emit(out, args.json, text)
    return 0 if integral and exact else 1


def cmd_cospectral_search(args):
    pairs = cospectral_search(args.n, args.matrix, regular_only=args.regular, workers=args.workers)
    out = [{"g1": graph_to_json(a), "g2": graph_to_json(b), "poly": p.to_json()} for a, b, p in pairs]
    text = "\n".join(f"{list(a.edges)} ~ {list(b.edges)} : {p}" for a, b, p in pairs) or "(no pairs)"
    _emit(out, args.json, text)
    return 0


def cmd_cospectral_verify(args):
    pair = (parse_graph_arg(args.g1), parse_graph_arg(args.g2))
    ok = verify_cospectral_corollary(pair, parse_graph_arg(args.h), args.matrix, args.kind, args.side)
    _emit({"cospectral": ok}, args.json, "cospectral" if ok else "NOT cospectral")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="subcorona",
        description="Build subdivision coronae and compute or verify their spectra.",
        epilog="exit status: 0 ok, 1 mismatch, 2 usage error, 3 precondition failure")
    sub = p.add_subparsers(dest="command", required=True)

    def spec_args(sp, required=True):
        sp.add_argument("--g1", required=required, help="family shorthand (complete:5) or graph file")
        sp.add_argument("--g2", required=required)
        sp.add_argument("--kind", choices=["vertex", "edge"], required=required)

    sp = sub.add_parser("family", help="emit a named graph")
    sp.add_argument("kind", choices=["complete", "complete_bipartite", "path", "cycle", "empty", "complement_of"])
    sp.add_argument("params", nargs="*")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("corona", help="build G1 ⊙ G2 or G1 ⊖ G2")
    spec_args(sp)
    sp.add_argument("--labeling", help="write the labeling sidecar JSON here")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_corona)

    for name, func, text in (("charpoly", cmd_charpoly, "characteristic polynomial coefficients"),
                             ("spectrum", cmd_spectrum, "sorted eigenvalues with multiplicities")):
        sp = sub.add_parser(name, help=text)
        spec_args(sp, required=False)
        sp.add_argument("--graph", help="arbitrary graph (direct method only)")
        sp.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
        sp.add_argument("--method", choices=["direct", "theorem"], default="direct")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="theorem vs direct characteristic polynomials")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    sp.add_argument("--kind", choices=["vertex", "edge", "both"], default="both")
    sp.add_argument("--matrix", choices=["A", "L", "Q", "all"], default="all")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("invariants", help="spanning trees and Kirchhoff index")
    spec_args(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("integral-family", help="build and check an integral-graph family member")
    sp.add_argument("name", choices=FAMILY_NAMES)
    sp.add_argument("params", nargs="+", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_integral_family)

    sp = sub.add_parser("cospectral-search", help="exhaustive cospectral pairs on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    sp.add_argument("--regular", action="store_true", help="regular graphs only")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_cospectral_search)

    sp = sub.add_parser("cospectral-verify", help="check a cospectral-corona corollary")
    sp.add_argument("--g1", required=True, help="first graph of the cospectral pair")
    sp.add_argument("--g2", required=True, help="second graph of the cospectral pair")
    sp.add_argument("--h", required=True, help="the fixed graph")
    sp.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    sp.add_argument("--kind", choices=["vertex", "edge"], default="vertex")
    sp.add_argument("--side", choices=["vary_g1", "vary_g2"], default="vary_g1")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_cospectral_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if exc.code in PRECONDITION_CODES else 1


if __name__ == "__main__":
    sys.exit(main())
