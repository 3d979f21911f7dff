"""Command-line entry point: ``zpairs <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import acceptance, catalog
from .combinatorics import CombinatoricsError, automorphism_group, combinatorics_of, is_stable
from .configuration import (Configuration, ConfigurationError, ConsistencyError, chamber_partition,
                            chamber_sums, chamber_weight, validate)
from .depth import depth_report
from .dual import (ArrangementError, build_dpa, classify_c_leq_3,
                   cyclic_assignments, i_invariant, is_triangular_inner_cyclic, normalize_support)
from .field import FieldError, FieldSpec
from .io import FormatError, parse_scalar, read_file, serialize_arrangement, serialize_configuration
from .moduli import (ModuliError, ModuliParams, build_moduli_arrangement,
                     component_characterizations, moduli_configuration, moduli_membership,
                     triple_point, zariski_certificate)
from .plot import PlotError, render_svg
from .projective import GeometryError, Point

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CommandFailed(Exception):
    """Raised by a command to end with exit status 1 after its report."""


def _pt(p: Point) -> list[str]:
    return [str(x) for x in p.coords]


def _load_configuration(path: str) -> Configuration:
    obj = read_file(path)
    if not isinstance(obj, Configuration):
        raise FormatError(path, "$", "expected a configuration file, found an arrangement")
    return obj


def _load_valid(path: str) -> Configuration:
    c = _load_configuration(path)
    report = validate(c)
    if not report:
        raise CommandFailed(f"{path}: invalid configuration\n  " + "\n  ".join(report.lines()))
    return c


# ---------------------------------------------------------------- commands
# Each returns (result dict, human text lines, failed flag).

def cmd_validate(args):
    c = _load_configuration(args.file)
    report = validate(c)
    result = {"valid": report.ok, "t": c.t, "n": c.n, "m": c.m, "field": str(c.field),
              "violations": [{"kind": v.kind, "message": v.message, "indices": list(v.indices)}
                             for v in report.violations]}
    text = [f"{args.file}: {'valid' if report.ok else 'INVALID'} "
            f"({c.t} vertices, {c.n} surrounding points, m = {c.m}, field {c.field})"]
    text += [f"  {v.kind}: {v.message}" for v in report.violations]
    return result, text, not report.ok


def cmd_weight(args):
    c = _load_valid(args.file)
    sums, tau = chamber_sums(c), chamber_weight(c)
    part = chamber_partition(c)
    labels = c.point_labels()[c.t:]
    members = {str(ch): [labels[i] for i in part.members(ch)] for ch in range(4)}
    result = {"tau": tau, "m": c.m, "chamber_sums": sums, "chambers": members}
    text = [f"tau = {tau} (mod {c.m})"]
    text += [f"  chamber {ch}: sum {sums[ch]}  [{' '.join(members[str(ch)])}]" for ch in range(4)]
    return result, text, False


def cmd_comb(args):
    c = _load_valid(args.file)
    k = combinatorics_of(c)
    named = k.named()
    result = {"points": list(c.point_labels()), "subsets": named}
    return result, [f"{len(named)} maximal collinear subsets"] + ["  " + " ".join(s) for s in named], False


def cmd_aut(args):
    c = _load_valid(args.file)
    labels = c.point_labels()
    group = automorphism_group(combinatorics_of(c))
    images = [[labels[i] for i in g] for g in group]
    result = {"order": len(group), "points": list(labels), "automorphisms": images}
    text = [f"|Aut| = {len(group)}", "  " + " ".join(labels)]
    text += ["  " + " ".join(img) for img in images]
    return result, text, False


def cmd_stable(args):
    c = _load_valid(args.file)
    st = is_stable(c)
    return {"stable": st}, [f"stable: {str(st).lower()}"], False


def cmd_dual(args):
    c = _load_valid(args.file)
    a = build_dpa(c)
    report = is_triangular_inner_cyclic(a)
    doc = serialize_arrangement(a)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    result = {"arrangement": json.loads(doc), "triangular_inner_cyclic": report.ok,
              "reasons": report.reasons}
    text = [] if args.output else doc.rstrip("\n").splitlines()
    text.append(f"triangular inner-cyclic: {str(report.ok).lower()}")
    text += [f"  {r}" for r in report.reasons]
    return result, text, False


def cmd_invariant(args):
    obj = read_file(args.file)
    if isinstance(obj, Configuration):
        report = validate(obj)
        if not report:
            raise CommandFailed(f"{args.file}: invalid configuration\n  " + "\n  ".join(report.lines()))
        a, tau = build_dpa(obj), chamber_weight(obj)
    else:
        a, tau = obj, None
    rows = []
    for asg in cyclic_assignments(a.support):
        for start in range(args.tries):
            n = normalize_support(a, asg, start)
            rows.append({"assignment": list(asg), "torus": list(n.torus),
                         "exponent": i_invariant(a, asg, start)})
    values = sorted({r["exponent"] for r in rows})
    result = {"m": a.m, "exponents": values, "runs": rows}
    text = [f"I-invariant exponent(s): {values} (mod {a.m})"]
    failed = len(values) != 1
    if tau is not None:
        holds = values == [(-tau) % a.m]
        result.update(tau=tau, relation_holds=holds)
        text.append(f"tau = {tau}; exponent = -tau mod m: {str(holds).lower()}")
        failed |= not holds
    return result, text, failed


def cmd_pair(args):
    c1, c2 = _load_valid(args.file1), _load_valid(args.file2)
    r = zariski_certificate(c1, c2)
    labels1, labels2 = c1.point_labels(), c2.point_labels()
    phi = None if r.isomorphism is None else {labels1[i]: labels2[j] for i, j in enumerate(r.isomorphism)}
    result = {"verdict": r.verdict, "isomorphism": phi, "stable": list(r.stable),
              "uniform": list(r.uniform), "tau": [r.tau1, r.tau2]}
    text = [r.verdict,
            f"  isomorphism: {'none' if phi is None else ' '.join(f'{k}->{v}' for k, v in phi.items())}",
            f"  stable: {str(r.stable[0]).lower()}, {str(r.stable[1]).lower()}",
            f"  uniform plumbing: {r.uniform[0]}, {r.uniform[1]}",
            f"  tau: {r.tau1}, {r.tau2}"]
    return result, text, False


def cmd_depth(args):
    c = _load_valid(args.file)
    r = depth_report(c)
    text = [f"depth = {r.depth}", f"  l = {r.l}, tau = {r.tau}, j = {r.j}, rank = {r.rank}"]
    text += ["  " + " ".join(f"{v:3d}" for v in row) for row in r.matrix]
    return r.as_dict(), text, False


def cmd_moduli(args):
    spec = FieldSpec.quadratic(args.d) if args.d else None
    k1 = parse_scalar(args.k1, spec)
    k2 = parse_scalar(args.k2, spec or (k1.spec if k1.spec.is_quadratic else None))
    gamma = parse_scalar(args.gamma, k1.spec) if args.gamma else None
    p = ModuliParams.make(k1, k2, gamma, spec or (k2.spec if k2.spec.is_quadratic else k1.spec))
    verdict = moduli_membership(p)
    result = {"k1": str(p.k1), "k2": str(p.k2), "gamma": str(p.gamma), "accepted": verdict.accepted,
              "component": verdict.component, "violations": verdict.violations}
    text = [f"M({p.k1}, {p.k2}; {p.gamma}): {'accepted' if verdict.accepted else 'rejected'}"]
    text += [f"  violated: {v}" for v in verdict.violations]
    if verdict.accepted:
        lines = build_moduli_arrangement(p)
        ch = component_characterizations(lines)
        triples = {"L1,L11,L12": _pt(triple_point(lines, 1, 11, 12)),
                   "L2,L8,L9": _pt(triple_point(lines, 2, 8, 9)),
                   "L3,L4,L5": _pt(triple_point(lines, 3, 4, 5))}
        tau = chamber_weight(moduli_configuration(p))
        result.update(characterizations={"tangent_conic": ch.tangent_conic,
                                         "six_triple_points_on_conic": ch.six_triple_points_conic,
                                         "three_points_aligned": ch.three_points_aligned},
                      alignment_det=str(ch.alignment_det), triple_points=triples, tau=tau)
        name = {"Sigma0": "Σ⁰", "Sigma1": "Σ¹"}[verdict.component]
        text += [f"  component {name}",
                 "  characterizations: (" + ", ".join(str(b).lower() for b in ch.as_tuple()) + ")",
                 f"  alignment determinant: {ch.alignment_det}",
                 f"  tau = {tau}"]
        text += [f"  {k}: ({':'.join(v)})" for k, v in triples.items()]
    return result, text, False


def cmd_classify(args):
    obj = read_file(args.file)
    if isinstance(obj, Configuration):
        report = validate(obj)
        if not report:
            raise CommandFailed(f"{args.file}: invalid configuration\n  " + "\n  ".join(report.lines()))
        a = build_dpa(obj)
    else:
        a = obj
    cls = classify_c_leq_3(a.lines)
    names = a.line_labels()
    result = {"kind": cls.kind, "heavy_points": [_pt(p) for p in cls.heavy_points],
              "cover": [names[i] for i in cls.cover], "per_line": list(cls.per_line)}
    text = [cls.kind, f"  {len(cls.heavy_points)} points of multiplicity >= 3"]
    if cls.cover:
        text.append("  cover: " + ", ".join(f"{names[i]} ({n})" for i, n in zip(cls.cover, cls.per_line)))
    return result, text, False


def _catalog_config(args) -> Configuration:
    kwargs = {}
    if args.m is not None:
        kwargs["m"] = args.m
    if args.zeta is not None:
        kwargs["zeta"] = args.zeta
    return catalog.get(args.name, args.params, **kwargs)


def cmd_catalog(args):
    if args.action == "list":
        rows = catalog.listing()
        text = [f"{r['name']:14s} params {r['arity']}  {r['lines']:2d} lines  tau: {r['tau']:22s} "
                f"stable: {str(r['stable']).lower():5s}  l = {tuple(r['line_counts'])}"
                + (f"  ({r['note']})" if r["note"] else "") for r in rows]
        return {"entries": rows}, text, False
    if not args.name:
        raise CommandFailed("catalog emit needs an entry name")
    doc = serialize_configuration(_catalog_config(args))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
        return {"written": args.output}, [f"wrote {args.output}"], False
    return json.loads(doc), [doc.rstrip("\n")], False


def cmd_plot(args):
    obj = read_file(args.file)
    if isinstance(obj, Configuration):
        report = validate(obj)
        if not report:
            raise CommandFailed(f"{args.file}: invalid configuration\n  " + "\n  ".join(report.lines()))
    svg = render_svg(obj, args.chart)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return {"written": args.output, "bytes": len(svg.encode())}, [f"wrote {args.output}"], False


def cmd_selftest(args):
    results = acceptance.run_all()
    failed = [r for r in results if not r.passed]
    result = {"passed": len(results) - len(failed), "failed": len(failed),
              "criteria": [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                           for r in results]}
    text = [r.line() for r in results]
    text.append(f"{len(results) - len(failed)}/{len(results)} criteria pass")
    return result, text, bool(failed)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpairs", description="Exact (t,m)-configurations, "
                                     "dual plumbed arrangements and Zariski-pair certificates.")
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, fn, help, files=("file",)):
        p = sub.add_parser(name, help=help)
        for f in files:
            p.add_argument(f)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="print the report as JSON")
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check the configuration conditions")
    add("weight", cmd_weight, "chamber sums and chamber weight")
    add("comb", cmd_comb, "maximal collinear subsets")
    add("aut", cmd_aut, "combinatorial automorphism group")
    add("stable", cmd_stable, "whether every automorphism fixes the vertex set")
    p = add("dual", cmd_dual, "dual plumbed arrangement")
    p.add_argument("-o", "--output", help="write the arrangement file here")
    p = add("invariant", cmd_invariant, "I-invariant and its relation to the chamber weight")
    p.add_argument("--tries", type=int, default=2, help="torus elements per support assignment")
    add("pair", cmd_pair, "Zariski-pair certificate for two configurations", ("file1", "file2"))
    add("depth", cmd_depth, "quasi-projective depth of the dual character")
    p = add("moduli", cmd_moduli, "membership in the 13-line moduli family", ())
    p.add_argument("--k1", required=True)
    p.add_argument("--k2", required=True)
    p.add_argument("--gamma", help="defaults to k1^2")
    p.add_argument("--d", type=int, help="work in Q(sqrt d)")
    add("classify", cmd_classify, "C<=3 classification of the dual arrangement")
    p = add("catalog", cmd_catalog, "list or emit catalog configurations", ())
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--m", type=int, help="modulus (Pappus only)")
    p.add_argument("--zeta", type=int, help="plumbing value (Pappus only)")
    p.add_argument("-o", "--output")
    p = add("plot", cmd_plot, "SVG picture of the real configuration or arrangement")
    p.add_argument("--chart", help="vertex-pair:i,j (default 1,2), line-index:k or line:a,b,c")
    p.add_argument("-o", "--output", required=True)
    add("selftest", cmd_selftest, "run every acceptance check", ())
    return parser


_FAILURES = (FormatError, ConfigurationError, ConsistencyError, CombinatoricsError, ArrangementError,
             ModuliError, PlotError, GeometryError, FieldError, catalog.CatalogError, OSError)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        result, text, failed = args.func(args)
    except CommandFailed as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAIL
    except _FAILURES as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps({"command": args.command, "result": result}, ensure_ascii=False, indent=2))
    else:
        print("\n".join(text))
    return EXIT_FAIL if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
