"""Command-line interface.

Subcommands: algebra, enumerate, enumerate-sign, aepsilon, borel-schur,
certify, verify-fixtures, report.  Exit codes: 0 success, 1 input or
I/O error, 2 fixture mismatch, 3 enumeration budget exhausted.  All
artifacts are written atomically; output is deterministic and uses
exact integers only.
"""

import argparse
import json
import sys

from .fields import field_from_spec
from .presentation import parse_presentation
from .algebra import build_based_algebra
from .catalog import (
    CatalogError,
    resolve_presentation,
    certificate_spec,
)
from .borelschur import (
    borel_schur_quiver,
    borel_schur_presentation_n2,
    concealed_certificate,
    classification_report,
)
from .explore import (
    BudgetExhausted,
    enumerate_2silt,
    enumerate_2silt_epsilon,
    build_A_epsilon,
    normalize_epsilon,
    verify_fixture,
)
from .emit import (
    atomic_write,
    graph_to_json,
    graph_to_csv,
    graph_to_dot,
    presentation_to_dsl,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

_GRAPH_EMITTERS = {
    "json": ("json", lambda g, r: graph_to_json(g, r)),
    "csv": ("csv", lambda g, r: graph_to_csv(g)),
    "dot": ("dot", lambda g, r: graph_to_dot(g)),
}


def _add_common(sub, algebra=True, epsilon=False):
    if algebra:
        sub.add_argument("--algebra", help="built-in name, bs:n,r,p, "
                         "linear:n, concealed:<target>, or a DSL file path")
        sub.add_argument("--dsl", help="path to a DSL presentation file")
    if epsilon:
        sub.add_argument("--epsilon", required=epsilon == "required",
                         help="sign vector, e.g. -,-,-,+,+")
    sub.add_argument("--budget", type=int, default=100000,
                     help="maximum number of nodes to explore")
    sub.add_argument("--threads", type=int, default=1,
                     help="worker count (results are identical for any "
                     "value; exploration currently runs sequentially)")
    sub.add_argument("--emit", default="json",
                     help="comma-separated output formats: json, csv, "
                     "dot, dsl")
    sub.add_argument("--out", help="directory for output files; without "
                     "it, artifacts go to stdout")
    sub.add_argument("--scalar", default="rat",
                     help="scalar mode: rat or fp:<q>")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="twosilt",
        description="Two-term silting complexes, silting mutation, sign "
        "decomposition, and tau-tilting-finiteness certificates for "
        "bound quiver algebras.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("algebra", help="build an algebra and report "
                          "its structure")
    _add_common(sub)

    sub = subs.add_parser("enumerate", help="enumerate all two-term "
                          "silting complexes")
    _add_common(sub)

    sub = subs.add_parser("enumerate-sign", help="enumerate the two-term "
                          "silting complexes of one sign region")
    _add_common(sub, epsilon="required")

    sub = subs.add_parser("aepsilon", help="build the reduced algebra of "
                          "a sign region")
    _add_common(sub, epsilon="required")

    sub = subs.add_parser("borel-schur", help="generate a Borel-type "
                          "Schur algebra")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--emit", default="dsl")
    sub.add_argument("--out")
    sub.add_argument("--scalar", default="rat")

    sub = subs.add_parser("certify", help="run a tame-concealed "
                          "quotient/truncation certificate")
    sub.add_argument("--name", required=True,
                     help="a5bi, d6, e7-27, or e7-p1")
    sub.add_argument("--p", type=int, default=7,
                     help="prime for the e7-p1 family (p >= 7)")
    sub.add_argument("--out")

    sub = subs.add_parser("verify-fixtures", help="check enumeration "
                          "fixtures against freshly computed results")
    sub.add_argument("fixtures", nargs="+", help="fixture JSON files")
    sub.add_argument("--budget", type=int, default=100000)

    sub = subs.add_parser("report", help="tau-tilting-finiteness "
                          "classification verdict for S(n, r; p)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--out")

    return parser


def _deliver(artifacts, out_dir):
    """artifacts: list of (filename, text).  Write into out_dir, or print
    to stdout when no directory was given."""
    if out_dir:
        import os
        os.makedirs(out_dir, exist_ok=True)
        for filename, text in artifacts:
            atomic_write(os.path.join(out_dir, filename), text)
            print(os.path.join(out_dir, filename))
    else:
        for _, text in artifacts:
            sys.stdout.write(text)


def _resolve(args):
    if getattr(args, "dsl", None):
        with open(args.dsl) as fh:
            pres = parse_presentation(fh.read())
    elif getattr(args, "algebra", None):
        pres = resolve_presentation(args.algebra)
    else:
        raise CatalogError("one of --algebra or --dsl is required")
    field = field_from_spec(args.scalar)
    return pres, build_based_algebra(pres, field)


def _emit_formats(args):
    return [f.strip() for f in args.emit.split(",") if f.strip()]


def _algebra_summary(A, pres):
    return {
        "vertices": A.vertex_labels,
        "dim": A.dim,
        "arrows": len(pres.quiver.arrows) if pres else None,
        "relations": len(pres.relations) if pres else None,
        "schurian": A.is_schurian(),
        "dim_table": A.dim_table(),
    }


def _graph_artifacts(stem, graph, report, formats, pres=None):
    artifacts = []
    for fmt in formats:
        if fmt == "dsl":
            if pres is None:
                raise CatalogError("no presentation available for dsl "
                                   "output here")
            artifacts.append((stem + ".dsl", presentation_to_dsl(pres)))
            continue
        if fmt not in _GRAPH_EMITTERS:
            raise CatalogError("unknown --emit format %r" % fmt)
        ext, render = _GRAPH_EMITTERS[fmt]
        artifacts.append((stem + "." + ext, render(graph, report)))
    return artifacts


def _cmd_algebra(args):
    pres, A = _resolve(args)
    artifacts = []
    for fmt in _emit_formats(args):
        if fmt == "dsl":
            artifacts.append(("algebra.dsl", presentation_to_dsl(pres)))
        elif fmt == "json":
            artifacts.append(("algebra.json", json.dumps(
                _algebra_summary(A, pres), indent=2, sort_keys=True) + "\n"))
        else:
            raise CatalogError("algebra supports --emit json,dsl only")
    _deliver(artifacts, args.out)
    return EXIT_OK


def _cmd_enumerate(args):
    pres, A = _resolve(args)
    graph, report = enumerate_2silt(A, budget=args.budget)
    _deliver(_graph_artifacts("enumerate", graph, report,
                              _emit_formats(args), pres), args.out)
    return EXIT_OK if report.complete else EXIT_BUDGET


def _cmd_enumerate_sign(args):
    pres, A = _resolve(args)
    epsilon = normalize_epsilon(args.epsilon, A.n)
    graph, report = enumerate_2silt_epsilon(A, epsilon, budget=args.budget)
    _deliver(_graph_artifacts("enumerate-sign", graph, report,
                              _emit_formats(args), pres), args.out)
    return EXIT_OK if report.complete else EXIT_BUDGET


def _cmd_aepsilon(args):
    pres, A = _resolve(args)
    epsilon = normalize_epsilon(args.epsilon, A.n)
    Ae = build_A_epsilon(A, epsilon)
    artifacts = []
    for fmt in _emit_formats(args):
        if fmt != "json":
            raise CatalogError("aepsilon supports --emit json only (the "
                               "reduced algebra is given by its basis, "
                               "not a presentation)")
        artifacts.append(("aepsilon.json", json.dumps(
            _algebra_summary(Ae, None), indent=2, sort_keys=True) + "\n"))
    _deliver(artifacts, args.out)
    return EXIT_OK


def _cmd_borel_schur(args):
    formats = [f.strip() for f in args.emit.split(",") if f.strip()]
    artifacts = []
    if args.n == 2:
        pres = borel_schur_presentation_n2(args.r, args.p)
        for fmt in formats:
            if fmt == "dsl":
                artifacts.append(("borel-schur.dsl",
                                  presentation_to_dsl(pres)))
            elif fmt == "json":
                A = build_based_algebra(pres, field_from_spec(args.scalar))
                artifacts.append(("borel-schur.json", json.dumps(
                    _algebra_summary(A, pres), indent=2, sort_keys=True)
                    + "\n"))
            else:
                raise CatalogError("borel-schur supports --emit json,dsl")
    else:
        # n >= 3: only the quiver is constructed (no relations)
        quiver = borel_schur_quiver(args.n, args.r, args.p)
        doc = {
            "vertices": quiver.vertex_labels,
            "arrows": [[a.name, quiver.vertex_labels[a.source],
                        quiver.vertex_labels[a.target]]
                       for a in quiver.arrows],
            "relations": None,
            "note": "relations are only generated for n = 2",
        }
        for fmt in formats:
            if fmt != "json":
                raise CatalogError("borel-schur with n >= 3 supports "
                                   "--emit json only")
            artifacts.append(("borel-schur.json", json.dumps(
                doc, indent=2, sort_keys=True) + "\n"))
    _deliver(artifacts, args.out)
    return EXIT_OK


def _cmd_certify(args):
    spec = certificate_spec(args.name, p=args.p)
    report = concealed_certificate(
        spec["algebra"], spec["target"],
        quotient=spec["quotient"], truncate=spec["truncate"])
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _deliver([("certify-%s.json" % args.name, text)], args.out)
    return EXIT_OK if report["pass"] else EXIT_MISMATCH


def _cmd_verify_fixtures(args):
    failed = 0
    exhausted = 0
    for path in args.fixtures:
        report = verify_fixture(path)
        status = "ok" if report["pass"] else "FAIL"
        print("%s %s%s" % (status, path,
                           "" if report["pass"]
                           else " (%s)" % report.get("reason", "")))
        if not report["pass"]:
            if report.get("reason", "").startswith("budget exhausted"):
                exhausted += 1
            else:
                failed += 1
    if failed:
        return EXIT_MISMATCH
    if exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_report(args):
    report = classification_report(args.n, args.r, args.p)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _deliver([("report.json", text)], args.out)
    return EXIT_OK


_COMMANDS = {
    "algebra": _cmd_algebra,
    "enumerate": _cmd_enumerate,
    "enumerate-sign": _cmd_enumerate_sign,
    "aepsilon": _cmd_aepsilon,
    "borel-schur": _cmd_borel_schur,
    "certify": _cmd_certify,
    "verify-fixtures": _cmd_verify_fixtures,
    "report": _cmd_report,
}


def run(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    # join "--epsilon -,-,+" into "--epsilon=-,-,+" so argparse does not
    # mistake a sign vector starting with "-" for a flag
    merged = []
    skip = False
    for k, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--epsilon" and k + 1 < len(argv):
            merged.append("--epsilon=" + argv[k + 1])
            skip = True
        else:
            merged.append(token)
    parser = _build_parser()
    args = parser.parse_args(merged)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExhausted:
        print("error: exploration budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    except (CatalogError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
