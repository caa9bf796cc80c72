"""Command-line front end.

Diagrams are given as ``braid:N: i1 i2 ...``, ``pd:X(...) ...``,
``gauss:O1+ U2+ ...`` or a catalog name (``4_1``, ``T(2,5)``, ``C(2)``);
``-`` reads the specifier from standard input.  ``--json`` switches every
command to machine-readable output.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 domain error,
5 search budget exhausted.
"""

import argparse
import json
import logging
import os
import random
import sys

from . import catalog, diagram, invariants, notation, seifert, surfaces
from .errors import DomainError, NotationError, ValidationError

log = logging.getLogger("knotsurf")

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_BUDGET = 0, 2, 3, 4, 5


class BudgetExhausted(Exception):
    def __init__(self, payload):
        super().__init__("search budget exhausted")
        self.payload = payload


# ---------------------------------------------------------------------------
# input helpers

def _read(text):
    if text == "-":
        return sys.stdin.read().strip()
    return text


def load_diagram(spec, checked=True):
    """Parse a diagram specifier and (by default) validate the result."""
    spec = _read(spec).strip()
    if spec.startswith("braid:"):
        d = notation.braid_closure(notation.parse_braid(spec[len("braid:"):]))
    elif spec.startswith("pd:"):
        d = notation.parse_pd(spec[len("pd:"):])
    elif spec.startswith("gauss:"):
        d = notation.parse_gauss(spec[len("gauss:"):])
    else:
        d = catalog.named(spec)
    return diagram.check(d) if checked else d


def _diagram_from_args(args, checked=True):
    picked = [(k, getattr(args, k)) for k in ("braid", "pd", "gauss", "name")
              if getattr(args, k, None) is not None]
    spec = getattr(args, "diagram", None)
    if spec is not None:
        picked.append(("spec", spec))
    if len(picked) != 1:
        raise DomainError("give exactly one diagram (positional, --braid, --pd, --gauss or --name)")
    kind, value = picked[0]
    value = _read(value)
    if kind in ("spec", "name"):
        return value, load_diagram(value, checked)
    desc = "%s:%s" % (kind, value)
    return desc, load_diagram(desc, checked)


def _ints(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise NotationError("Syntax", 0, "expected a comma-separated list of integers")


def _matrix(text):
    text = _read(text)
    try:
        m = json.loads(text)
    except ValueError as exc:
        raise NotationError("Syntax", getattr(exc, "pos", 0) or 0, "matrix is not JSON: %s" % exc)
    if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
        raise NotationError("Syntax", 0, "matrix must be a JSON array of arrays")
    return invariants.as_matrix(m)


# ---------------------------------------------------------------------------
# reports

def invariant_report(descriptor, d):
    """Full invariant report for a knot diagram, as an ordered dict."""
    surf = seifert.build_surface(d)
    V = seifert.seifert_matrix(d)
    delta = invariants.alexander(V)
    sigma = invariants.signature(V)
    lower = invariants.genus_lower_bound(delta, sigma)
    upper = surf.genus
    report = {
        "input": descriptor,
        "crossings": d.crossing_count,
        "writhe": diagram.writhe(d),
        "seifert": {
            "discs": surf.discs,
            "bands": len(surf.bands),
            "euler": surf.euler,
            "genus_upper": upper,
        },
        "seifert_matrix": V,
        "alexander": {
            "text": str(delta),
            "coefficients": {str(e): c for e, c in sorted(delta.terms.items())},
        },
        "signature": sigma,
        "determinant": invariants.determinant_invariant(V),
        "genus_lower": lower,
    }
    if lower == upper:
        report["genus_exact"] = upper
    return report


def _emit(args, payload, text=None):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif text is not None:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(_table(payload) + "\n")


def _table(payload, indent=""):
    if not isinstance(payload, dict):
        return indent + json.dumps(payload)
    lines = []
    for k, v in payload.items():
        if isinstance(v, dict):
            lines.append("%s%s:" % (indent, k))
            lines.append(_table(v, indent + "  "))
        else:
            lines.append("%s%s: %s" % (indent, k, json.dumps(v) if not isinstance(v, str) else v))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands

def cmd_invariants(args):
    if args.batch:
        path = args.batch
        with (sys.stdin if path == "-" else open(path)) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        out = []
        for ln in lines:
            try:
                out.append(invariant_report(ln, load_diagram(ln)))
            except (NotationError, ValidationError, DomainError) as exc:
                out.append({"input": ln, "error": str(exc)})
        if args.json:
            _emit(args, out)
        else:
            sys.stdout.write("\n\n".join(_table(r) for r in out) + "\n")
        return EXIT_OK
    desc, d = _diagram_from_args(args)
    _emit(args, invariant_report(desc, d))
    return EXIT_OK


def cmd_validate(args):
    desc, d = _diagram_from_args(args, checked=False)
    report = diagram.validate(d)
    _emit(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_convert(args):
    desc, d = _diagram_from_args(args)
    fmt = notation.GAUSS if args.to == "gauss" else notation.PD
    text = notation.serialize(d, fmt)
    _emit(args, {"format": fmt, "text": text}, text)
    return EXIT_OK


def cmd_gen(args):
    if args.family == "torus":
        values = _ints(" ".join(args.params))
        if len(values) != 2:
            raise DomainError("gen torus needs P Q")
        p, q = values
        d = catalog.torus_knot(p, q)
    elif args.family == "two-bridge":
        d = catalog.two_bridge(_ints(" ".join(args.params)))
    elif args.family == "random-braid":
        rng = random.Random(args.seed)
        n = args.strands
        if n < 2:
            raise DomainError("random braids need at least 2 strands")
        letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(args.length)]
        word = notation.BraidWord(n, letters)
        d = notation.braid_closure(word)
        text = notation.serialize(d)
        _emit(args, {"braid": str(word), "pd": text}, "braid:%s\npd:%s" % (word, text))
        return EXIT_OK
    else:
        raise DomainError("unknown family %r" % args.family)
    text = notation.serialize(d)
    _emit(args, {"pd": text, "crossings": d.crossing_count}, text)
    return EXIT_OK


def cmd_cf(args):
    f = catalog.continued_fraction(_ints(" ".join(args.terms)))
    _emit(args, {"numerator": f.numerator, "denominator": f.denominator}, str(f))
    return EXIT_OK


def cmd_sum(args):
    d = diagram.connected_sum(load_diagram(args.a), load_diagram(args.b))
    text = notation.serialize(d)
    _emit(args, {"pd": text, "crossings": d.crossing_count}, text)
    return EXIT_OK


def cmd_mirror(args):
    d = diagram.mirror(load_diagram(args.a))
    text = notation.serialize(d)
    _emit(args, {"pd": text, "crossings": d.crossing_count}, text)
    return EXIT_OK


def cmd_simplify(args):
    d = load_diagram(args.a)
    res = diagram.simplify(d, args.max_crossings, args.max_states)
    payload = res.to_json()
    payload["pd"] = notation.serialize(res.result)
    if res.verdict == diagram.EXHAUSTED:
        raise BudgetExhausted(payload)
    _emit(args, payload)
    return EXIT_OK


def cmd_lk(args):
    d = load_diagram(args.d)
    value = diagram.linking_number(d, args.c1, args.c2)
    _emit(args, {"linking_number": value}, str(value))
    return EXIT_OK


def cmd_surface(args):
    p = surfaces.parse_word(_read(args.word))
    if args.op == "chi":
        v = surfaces.euler_characteristic(p)
        _emit(args, {"euler": v}, str(v))
    elif args.op == "orientable":
        v = surfaces.is_orientable(p)
        _emit(args, {"orientable": v}, str(v).lower())
    else:
        _emit(args, surfaces.classify(p).to_json())
    return EXIT_OK


def cmd_matrix(args):
    V = _matrix(args.matrix)
    op = args.op
    if op == "alexander":
        delta = invariants.alexander(V)
        _emit(args, delta.to_json(), str(delta))
    elif op == "signature":
        s = invariants.signature(V)
        _emit(args, {"signature": s}, str(s))
    elif op == "determinant":
        s = invariants.determinant_invariant(V)
        _emit(args, {"determinant": s}, str(s))
    elif op == "enlarge":
        kind = invariants.COL_TYPE if args.col else invariants.ROW_TYPE
        W = invariants.enlarge(V, _ints(args.vector or ""), kind)
        _emit(args, W, json.dumps(W))
    elif op == "reduce":
        W = invariants.reduce(V)
        _emit(args, W, json.dumps(W))
    elif op == "congruent":
        if not args.other:
            raise DomainError("congruent needs --other P")
        W = invariants.congruent(V, _matrix(args.other))
        _emit(args, W, json.dumps(W))
    elif op == "distinguish":
        if not args.other:
            raise DomainError("distinguish needs --other V2")
        verdict = invariants.s_distinguish(V, _matrix(args.other))
        _emit(args, {"verdict": verdict}, verdict)
    return EXIT_OK


def cmd_satellite_genus(args):
    g = invariants.satellite_genus(args.gp, args.w, args.gk)
    _emit(args, {"genus": g}, str(g))
    return EXIT_OK


def cmd_moves(args):
    desc, d = _diagram_from_args(args)
    sites = diagram.find_move_sites(d)
    _emit(args, [diagram.site_to_json(s) for s in sites],
          "\n".join(json.dumps(diagram.site_to_json(s)) for s in sites))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _add_diagram_options(p, positional=True):
    if positional:
        p.add_argument("diagram", nargs="?", help="diagram specifier (braid:, pd:, gauss:, name, or -)")
    p.add_argument("--braid", help="braid word 'n: i1 i2 ...'")
    p.add_argument("--pd", help="PD code")
    p.add_argument("--gauss", help="signed Gauss code")
    p.add_argument("--name", help="catalog name: " + ", ".join(catalog.available_names()))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="knotsurf",
        description="Knot invariants via Seifert surfaces, and closed-surface classification.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report of a knot")
    _add_diagram_options(p)
    p.add_argument("--batch", help="file with one diagram specifier per line (- for stdin)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("validate", help="validate a diagram and report face counts")
    _add_diagram_options(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="serialize a diagram as PD or Gauss code")
    _add_diagram_options(p)
    p.add_argument("--to", choices=["pd", "gauss"], default="pd")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("gen", help="generate torus, two-bridge or random-braid diagrams")
    p.add_argument("family", choices=["torus", "two-bridge", "random-braid"])
    p.add_argument("params", nargs="*", help="P Q for torus, A1,...,Al for two-bridge")
    p.add_argument("--strands", type=int, default=3)
    p.add_argument("--length", type=int, default=6)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cf", help="evaluate a continued fraction")
    p.add_argument("terms", nargs="+")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("sum", help="connected sum of two knots")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("mirror", help="mirror image of a diagram")
    p.add_argument("a")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("simplify", help="bounded Reidemeister search for fewer crossings")
    p.add_argument("a")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--max-states", type=int, default=100000)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("lk", help="linking number of two components")
    p.add_argument("d")
    p.add_argument("--c1", type=int, default=0)
    p.add_argument("--c2", type=int, default=1)
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("surface", help="polygonal presentation calculus")
    p.add_argument("op", choices=["chi", "classify", "orientable"])
    p.add_argument("--word", required=True, help="e.g. \"a b a' b'\"; faces separated by ;")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("matrix", help="Seifert-matrix algebra on JSON matrices")
    p.add_argument("op", choices=["alexander", "signature", "determinant", "enlarge",
                                  "reduce", "congruent", "distinguish"])
    p.add_argument("matrix", help="JSON array of arrays, e.g. [[-1,1],[0,-1]]")
    p.add_argument("--vector", help="enlargement vector, comma separated")
    p.add_argument("--col", action="store_true", help="column-type enlargement")
    p.add_argument("--other", help="second matrix (P for congruent, V2 for distinguish)")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("satellite-genus", help="g(P) + |w| g(K)")
    p.add_argument("gp", type=int)
    p.add_argument("w", type=int)
    p.add_argument("gk", type=int)
    p.set_defaults(func=cmd_satellite_genus)

    p = sub.add_parser("moves", help="list Reidemeister move sites")
    _add_diagram_options(p)
    p.set_defaults(func=cmd_moves)
    # accept --json/--seed after the subcommand as well
    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="machine-readable output")
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                       help="seed for randomized commands")
    return parser


def _configure_logging():
    level = os.environ.get("KNOT_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.ERROR),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    log.debug("command %s", args.command)
    try:
        return args.func(args)
    except NotationError as exc:
        _error(args, "parse", str(exc), exc.as_dict())
        return EXIT_PARSE
    except ValidationError as exc:
        extra = exc.report.to_json() if exc.report is not None else None
        _error(args, "validation", str(exc), extra)
        return EXIT_VALIDATION
    except BudgetExhausted as exc:
        _emit(args, exc.payload)
        return EXIT_BUDGET
    except DomainError as exc:
        _error(args, "domain", str(exc))
        return EXIT_DOMAIN


def _error(args, kind, message, detail=None):
    payload = {"error": kind, "message": message}
    if detail is not None:
        payload["detail"] = detail
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    sys.stderr.write("knotsurf: %s error: %s\n" % (kind, message))


if __name__ == "__main__":
    sys.exit(main())
