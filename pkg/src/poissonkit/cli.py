"""Command line front end.

    poissonkit VERB [--in FILE] [--out FILE] [flags]

FILE arguments accept "-" for stdin/stdout.  Exit status is 0 when the
run succeeds and any checked property holds, 1 when a checked property
fails, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from math import comb

from . import documents
from .deform import DeformationFamily, jet_vanishing, track_degenerate_point
from .diagonal import (DiagonalSpec, curl_eigenvalues, log_annihilator,
                       make_diagonal, pfaffian, random_generic_spec)
from .multivectors import Multivector, curl, schouten
from .polynomials import format_polynomial, parse_polynomial
from .randomized import run_suites
from .rigidity import (diagonality_constraints, simplex_multiplicity_filter,
                       solve_rigidity)
from .structures import (PoissonStructure, chart_extend, degeneracy_ideal,
                         hamiltonian, invariant_hypersurface, jacobi_check,
                         poisson_bracket, rank_at, restrict_hyperplane)

DEFAULT_SEED = 20250815


def _load(path: str):
    if path == "-":
        return documents.loads(sys.stdin.read())
    return documents.load_path(path)


def _emit(text: str, path=None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _element(obj) -> Multivector:
    if isinstance(obj, PoissonStructure):
        return obj.bivector
    if isinstance(obj, Multivector):
        return obj
    raise ValueError("expected a multivector document")


def _structure(obj) -> PoissonStructure:
    if isinstance(obj, PoissonStructure):
        return obj
    if isinstance(obj, Multivector) and obj.degree == 2:
        return PoissonStructure(obj, None)
    raise ValueError("expected a bivector document")


def _spec(obj) -> DiagonalSpec:
    if isinstance(obj, DiagonalSpec):
        return obj
    raise ValueError("expected a diagonal-spec document")


def _family(obj) -> DeformationFamily:
    if isinstance(obj, DeformationFamily):
        return obj
    raise ValueError("expected a family document")


def cmd_parse(args) -> int:
    _emit(documents.serialize(_load(args.infile)), args.out)
    return 0


def cmd_schouten(args) -> int:
    a = _element(_load(args.infile))
    b = _element(_load(args.with_file))
    _emit(documents.serialize(schouten(a, b)), args.out)
    return 0


def cmd_jacobi(args) -> int:
    ps = _structure(_load(args.infile))
    obstruction = jacobi_check(ps)
    if obstruction.is_zero():
        _emit("0\n", args.out)
        return 0
    _emit(documents.serialize(obstruction), args.out)
    return 1


def cmd_curl(args) -> int:
    a = _element(_load(args.infile))
    if args.unit is None:
        result = curl(a)
    else:
        result = curl(a, parse_polynomial(args.unit, a.table))
    _emit(documents.serialize(result), args.out)
    return 0


def cmd_bracket(args) -> int:
    ps = _structure(_load(args.infile))
    f = parse_polynomial(args.f, ps.table)
    g = parse_polynomial(args.g, ps.table)
    _emit(format_polynomial(poisson_bracket(ps, f, g)) + "\n", args.out)
    return 0


def cmd_hamiltonian(args) -> int:
    ps = _structure(_load(args.infile))
    f = parse_polynomial(args.f, ps.table)
    _emit(documents.serialize(hamiltonian(ps, f)), args.out)
    return 0


def cmd_degeneracy(args) -> int:
    ps = _structure(_load(args.infile))
    ideal = degeneracy_ideal(ps, args.order)
    lines = [format_polynomial(g) for g in ideal.generators]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_rank(args) -> int:
    ps = _structure(_load(args.infile))
    point = documents.parse_assignments(args.point, ps.table)
    if args.params:
        point.update(documents.parse_assignments(
            args.params, ps.table, names=ps.table.parameters))
    _emit(f"{rank_at(ps, point)}\n", args.out)
    return 0


def cmd_restrict(args) -> int:
    ps = _structure(_load(args.infile))
    if args.coordinate not in ps.table.coordinates:
        raise ValueError(f"unknown coordinate {args.coordinate!r}")
    try:
        restricted = restrict_hyperplane(ps, args.coordinate)
    except ValueError as exc:
        print(f"restrict: {exc}", file=sys.stderr)
        return 1
    _emit(documents.serialize(restricted), args.out)
    return 0


def cmd_invariant(args) -> int:
    ps = _structure(_load(args.infile))
    f = parse_polynomial(args.f, ps.table)
    holds = invariant_hypersurface(ps, f)
    _emit("true\n" if holds else "false\n", args.out)
    return 0 if holds else 1


def cmd_chart(args) -> int:
    ps = _structure(_load(args.infile))
    n = ps.table.n_coordinates
    if not 0 <= args.target <= n:
        raise ValueError(f"chart index must lie in 0..{n}")
    try:
        moved = chart_extend(ps, args.target, args.zero_name)
    except ValueError as exc:
        print(f"chart: {exc}", file=sys.stderr)
        return 1
    _emit(documents.serialize(moved), args.out)
    return 0


def cmd_diagonal(args) -> int:
    if args.symbolic is not None:
        _emit(documents.serialize(DiagonalSpec.symbolic(args.symbolic)),
              args.out)
        return 0
    if args.random is not None:
        rng = random.Random(_resolve_seed(args.seed))
        _emit(documents.serialize(random_generic_spec(args.random, rng)),
              args.out)
        return 0
    if args.infile is None:
        raise ValueError("diagonal needs --in, --symbolic or --random")
    spec = _spec(_load(args.infile))
    _emit(documents.serialize(make_diagonal(spec)), args.out)
    return 0


def cmd_pfaffian(args) -> int:
    spec = _spec(_load(args.infile))
    table = spec.table()
    value = pfaffian(spec.lambda_matrix(table))
    _emit(format_polynomial(value) + "\n", args.out)
    return 0


def cmd_mu(args) -> int:
    spec = _spec(_load(args.infile))
    lines = [format_polynomial(value) for value in curl_eigenvalues(spec)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_logform(args) -> int:
    spec = _spec(_load(args.infile))
    if spec.n % 2 == 0:
        raise ValueError("log annihilator needs an odd number of coordinates")
    try:
        form = log_annihilator(spec)
    except ValueError as exc:
        print(f"logform: {exc}", file=sys.stderr)
        return 1
    lines = [format_polynomial(res) for res in form.residues]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_rigidity(args) -> int:
    if args.dim < 2:
        raise ValueError("--dim must be at least 2")
    system = diagonality_constraints(args.dim)
    try:
        dimension, basis = solve_rigidity(system)
    except AssertionError as exc:
        print("dimension: unresolved")
        print("diagonal: false")
        print(f"rigidity: {exc}", file=sys.stderr)
        return 1
    report = f"dimension: {dimension}\ndiagonal: true\n"
    _emit(report, args.out)
    if args.basis_out:
        docs = [documents.to_document(vector) for vector in basis]
        _emit(json.dumps(docs, indent=2) + "\n", args.basis_out)
    return 0 if dimension == comb(args.dim, 2) else 1


def cmd_simplex(args) -> int:
    result = simplex_multiplicity_filter(args.k)
    count = len(result.survivors)
    lines = [f"survivors: {count} of {result.total}"]
    for exps in result.survivors:
        mono = "*".join(f"x{v}" for v, e in enumerate(exps) if e)
        lines.append(f"monomial: {mono}")
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0 if count == 1 else 1


def cmd_track(args) -> int:
    family = _family(_load(args.family))
    try:
        result = track_degenerate_point(
            family, complex(args.t), tol=args.tol,
            initial_step=args.step)
    except ValueError as exc:
        print(f"track: {exc}", file=sys.stderr)
        return 1
    record = {
        "kind": "track",
        "t": [result.t.real, result.t.imag],
        "gamma": [[z.real, z.imag] for z in result.gamma],
        "residual": result.residual,
        "jet0": result.jet0,
        "jet1": result.jet1,
        "newton_iters": result.newton_iters,
    }
    _emit(json.dumps(record, indent=2) + "\n", args.out)
    return 0 if result.residual <= args.tol else 1


def cmd_jet(args) -> int:
    ps = _structure(_load(args.infile))
    point = documents.parse_assignments(args.point, ps.table, exact=False)
    if args.params:
        point.update(documents.parse_assignments(
            args.params, ps.table, names=ps.table.parameters, exact=False))
    order = jet_vanishing(ps, point, r=args.r, tol=args.tol)
    _emit((f">= {args.r + 1}" if order > args.r else str(order)) + "\n",
          args.out)
    return 0


def _resolve_seed(flag_value) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("POISSON_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


def cmd_selftest(args) -> int:
    seed = _resolve_seed(args.seed)
    failed = 0
    print(f"seed: {seed}")
    for name, cases, failures in run_suites(seed, cases=args.cases):
        if failures:
            failed += 1
            print(f"FAIL {name}: {failures} of {cases}")
        else:
            print(f"ok {name} ({cases} cases)")
    if failed:
        print(f"{failed} suite(s) failed")
        return 1
    print("all suites passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poissonkit",
        description="Exact calculus for polynomial Poisson structures.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, handler, help_text, infile=True, out=True):
        p = sub.add_parser(name, help=help_text)
        if infile:
            p.add_argument("--in", dest="infile", required=True,
                           metavar="FILE", help="input document")
        if out:
            p.add_argument("--out", default=None, metavar="FILE",
                           help="write output here instead of stdout")
        p.set_defaults(handler=handler)
        return p

    verb("parse", cmd_parse, "read a document and reprint it canonically")

    p = verb("schouten", cmd_schouten, "bracket of two multivectors")
    p.add_argument("--with", dest="with_file", required=True, metavar="FILE")

    verb("jacobi", cmd_jacobi, "print the integrability obstruction")

    p = verb("curl", cmd_curl, "curl with respect to a volume form")
    p.add_argument("--unit", default=None, metavar="POLY",
                   help="volume coefficient u (default 1)")

    p = verb("bracket", cmd_bracket, "Poisson bracket of two polynomials")
    p.add_argument("--f", required=True, metavar="POLY")
    p.add_argument("--g", required=True, metavar="POLY")

    p = verb("hamiltonian", cmd_hamiltonian, "Hamiltonian vector field")
    p.add_argument("--f", required=True, metavar="POLY")

    p = verb("degeneracy", cmd_degeneracy, "degeneracy ideal generators")
    p.add_argument("--order", type=int, required=True,
                   help="even rank bound 2k")

    p = verb("rank", cmd_rank, "rank of the structure matrix at a point")
    p.add_argument("--point", required=True, metavar="CSV",
                   help="exact coordinate values, comma separated")
    p.add_argument("--params", default=None, metavar="CSV",
                   help="parameter values as name=value pairs")

    p = verb("restrict", cmd_restrict, "restrict to a coordinate hyperplane")
    p.add_argument("--coordinate", required=True, metavar="NAME")

    p = verb("invariant", cmd_invariant, "test invariance of a hypersurface")
    p.add_argument("--f", required=True, metavar="POLY")

    p = verb("chart", cmd_chart, "move a projective structure to another chart")
    p.add_argument("--target", type=int, required=True,
                   help="chart index in 0..n")
    p.add_argument("--zero-name", default="x0", metavar="NAME",
                   help="label for the incoming coordinate")

    p = verb("diagonal", cmd_diagonal, "build or generate a diagonal structure",
             infile=False)
    p.add_argument("--in", dest="infile", default=None, metavar="FILE",
                   help="diagonal-spec document to build")
    p.add_argument("--symbolic", type=int, default=None, metavar="N",
                   help="emit the symbolic spec on N coordinates")
    p.add_argument("--random", type=int, default=None, metavar="N",
                   help="emit a random generic numeric spec")
    p.add_argument("--seed", type=int, default=None)

    verb("pfaffian", cmd_pfaffian, "Pfaffian of the coefficient matrix")
    verb("mu", cmd_mu, "curl eigenvalues of a diagonal spec")
    verb("logform", cmd_logform, "residues of the kernel log form")

    p = verb("rigidity", cmd_rigidity,
             "dimension and diagonality of the constrained bivector space",
             infile=False)
    p.add_argument("--dim", type=int, required=True, metavar="N")
    p.add_argument("--basis-out", default=None, metavar="FILE",
                   help="also write the certified basis as JSON")

    p = verb("simplex", cmd_simplex, "multiplicity filter on the k simplex",
             infile=False)
    p.add_argument("--k", type=int, required=True)

    p = verb("track", cmd_track, "track a degenerate point along a family",
             infile=False)
    p.add_argument("--family", required=True, metavar="FILE")
    p.add_argument("--t", required=True, metavar="VALUE",
                   help="parameter value, real or complex")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--step", type=float, default=1e-2,
                   help="initial continuation step")

    p = verb("jet", cmd_jet, "least nonvanishing jet order at a point")
    p.add_argument("--point", required=True, metavar="CSV",
                   help="float coordinate values, comma separated")
    p.add_argument("--params", default=None, metavar="CSV")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-6)

    p = verb("selftest", cmd_selftest, "run the randomized identity suites",
             infile=False, out=False)
    p.add_argument("--seed", type=int, default=None,
                   help="defaults to POISSON_SEED, then a fixed seed")
    p.add_argument("--cases", type=int, default=200)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except (OSError, json.JSONDecodeError, KeyError, TypeError,
            ValueError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
