"""Command-line front end.

Every invocation prints exactly one JSON document on stdout.  Exit status is
0 on success, 1 when a certificate is refused and 2 on parse or guard errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .boundcert import CertificateRefused, certify_degree
from .closedform import (
    MAX_ROOT_POINTS,
    basis_root_of_unity,
    basis_uniform,
    root_of_unity_report,
)
from .combinat import (
    MAX_VECTORS,
    RootVectorFamily,
    SetFamily,
    balancing_lower_certificate,
    brute_force_K,
    counting_inequality,
    galvin_construction,
    galvin_failures,
    galvin_lower_certificate,
    from_mask,
    orthogonality_sweep,
)
from .exactnum import CyclotomicNumber, PrimeFieldElement, field_from_tag
from .groebner import GroebnerBasis, autoreduce, buchberger
from .pointideal import PointSet, vanishing_basis
from .polyring import Polynomial, TermOrder


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _sort_key(a):
    if isinstance(a, PrimeFieldElement):
        return (a.value,)
    if isinstance(a, CyclotomicNumber):
        return a.coeffs
    return (Fraction(a),)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_json(path: str):
    return json.loads(_read_text(path))


def _infer_n(lines) -> int:
    idx = [int(i) for line in lines for i in re.findall(r"x(\d+)", line)]
    return max(idx, default=1)


def _basis_doc(B: GroebnerBasis, **extra) -> dict:
    doc = B.to_json()
    doc.update(extra)
    return doc


# -- gb ----------------------------------------------------------------------


def cmd_gb_from_gens(args):
    lines = [ln.strip() for ln in _read_text(args.file).splitlines() if ln.strip() and not ln.startswith("#")]
    field = field_from_tag(args.field or "rational")
    n = args.n or _infer_n(lines)
    order = TermOrder(args.order)
    gens = [Polynomial.parse(ln, n, field) for ln in lines]
    B = buchberger(gens, order)
    if not args.no_reduce:
        B = autoreduce(B, check=False)
    return 0, _basis_doc(B, source="generators")


def cmd_gb_points(args):
    data = _read_json(args.file)
    if args.field:
        data["field"] = args.field
    pts = PointSet.from_json(data)
    if len(pts) > args.max_points:
        raise OverflowError(f"{len(pts)} points exceed --max-points {args.max_points}")
    ordered = PointSet(pts.n, pts.field, tuple(sorted(pts.points, key=lambda pt: [_sort_key(a) for a in pt])))
    B = vanishing_basis(ordered, TermOrder(args.order))
    return 0, _basis_doc(B, source="points", num_points=len(pts))


def cmd_gb_roots(args):
    order = TermOrder(args.order)
    if args.p**args.n > MAX_ROOT_POINTS:
        raise OverflowError(f"{args.p}^{args.n} exceeds the enumeration guard")
    verbatim = basis_root_of_unity(args.n, args.p, args.j, order)
    report = root_of_unity_report(args.n, args.p, args.j, order)
    B = autoreduce(verbatim, order, check=False)
    return 0, _basis_doc(B, source="roots-of-unity", closed_form=report)


def cmd_gb_uniform(args):
    if args.n > 12:
        raise OverflowError("expanded uniform bases are limited to n <= 12")
    field = field_from_tag(args.field or "rational")
    B = basis_uniform(args.n, args.d, field, TermOrder(args.order))
    return 0, _basis_doc(B, source="uniform", d=args.d)


# -- certify -----------------------------------------------------------------


def cmd_certify(args):
    data = _read_json(args.points)
    if args.field:
        data["field"] = args.field
    pts = PointSet.from_json(data)
    h_data = _read_json(args.h)
    if isinstance(h_data, dict):
        h_data = h_data["point"]
    field = pts.field
    h = tuple(field.parse(str(a)) for a in h_data)
    P = Polynomial.parse(_read_text(args.poly).strip(), pts.n, field)
    B = vanishing_basis(pts, TermOrder("deglex"))
    cert = certify_degree(P, B, h, points=pts.points)
    doc = cert.to_json(field)
    doc["theorem"] = "degree-lower-bound"
    return 0, doc


# -- search / galvin / check -------------------------------------------------


def cmd_search_k(args):
    if args.p**args.n > args.max_vectors:
        raise OverflowError(f"{args.p}^{args.n} vectors exceed --max-vectors {args.max_vectors}")
    rep = brute_force_K(args.n, args.p, args.kmax, symmetry=not args.no_symmetry, limit=args.max_vectors)
    doc = rep.to_json()
    if rep.witness is not None and args.certify:
        fam = RootVectorFamily(args.n, args.p, tuple(map(tuple, rep.witness)))
        doc["certificate"] = balancing_lower_certificate(fam)
    return 0, doc


def cmd_galvin_construct(args):
    fam = galvin_construction(args.n)
    return 0, dict(fam.to_json(), n=args.n, size=len(fam))


def _family_n(fam: SetFamily, n):
    if n:
        return n
    if fam.N % 4:
        raise ValueError("ground set size must be 4n")
    return fam.N // 4


def cmd_galvin_verify(args):
    fam = SetFamily.from_json(_read_json(args.file))
    n = _family_n(fam, args.n)
    shape_ok = fam.N == 4 * n and len(fam) > 0 and all(len(s) == 2 * n for s in fam.sets)
    bad = galvin_failures(fam, n) if shape_ok else []
    doc = {
        "theorem": "galvin-property",
        "n": n,
        "size": len(fam),
        "valid": bool(shape_ok and len(bad) == 0),
        "shape_ok": shape_ok,
        "failures": len(bad),
        "first_failure": list(from_mask(int(bad[0]))) if len(bad) else None,
        "exhaustive": True,
    }
    return 0, doc


def cmd_galvin_certify(args):
    fam = SetFamily.from_json(_read_json(args.file))
    return 0, galvin_lower_certificate(fam, args.p, assume_valid=args.assume_valid)


def cmd_check_counting(args):
    return 0, counting_inequality(args.p)


def cmd_check_ortho(args):
    if args.p**args.n > MAX_VECTORS:
        raise OverflowError(f"{args.p}^{args.n} vectors exceed the guard")
    doc = orthogonality_sweep(args.n, args.p)
    doc["theorem"] = "orthogonality-classes"
    return 0, doc


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=TermOrder.KINDS, default="deglex")
    common.add_argument("--field", default=None, help="fp:<p>, cyc:<p> or rational")
    common.add_argument("--threads", type=int, default=1, help="worker cap (computation is single-threaded)")
    common.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")

    parser = _Parser(prog="pointgb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    gb = sub.add_parser("gb", help="Groebner bases").add_subparsers(dest="gb_cmd", required=True)
    p = gb.add_parser("from-gens", parents=[common], help="basis of the ideal generated by text polynomials")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--no-reduce", action="store_true")
    p.set_defaults(func=cmd_gb_from_gens)

    p = gb.add_parser("points", parents=[common], help="reduced basis of the vanishing ideal of a point set")
    p.add_argument("file")
    p.add_argument("--max-points", type=int, default=5000)
    p.set_defaults(func=cmd_gb_points)

    p = gb.add_parser("roots-of-unity", parents=[common], help="closed-form basis of I(B_j)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-j", type=int, default=0)
    p.set_defaults(func=cmd_gb_roots)

    p = gb.add_parser("uniform", parents=[common], help="closed-form basis of I(V([n] choose d))")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_gb_uniform)

    p = sub.add_parser("certify", parents=[common], help="degree lower bound for a polynomial")
    p.add_argument("--points", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_certify)

    search = sub.add_parser("search").add_subparsers(dest="search_cmd", required=True)
    p = search.add_parser("k", parents=[common], help="exact search for the smallest balancing family")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--certify", action="store_true", help="run the lower-bound certificate on the witness")
    p.add_argument("--max-vectors", type=int, default=MAX_VECTORS)
    p.set_defaults(func=cmd_search_k)

    galvin = sub.add_parser("galvin").add_subparsers(dest="galvin_cmd", required=True)
    p = galvin.add_parser("construct", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_galvin_construct)
    p = galvin.add_parser("verify", parents=[common])
    p.add_argument("file")
    p.add_argument("-n", type=int, default=None)
    p.set_defaults(func=cmd_galvin_verify)
    p = galvin.add_parser("certify", parents=[common])
    p.add_argument("file")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--assume-valid", action="store_true")
    p.set_defaults(func=cmd_galvin_certify)

    check = sub.add_parser("check").add_subparsers(dest="check_cmd", required=True)
    p = check.add_parser("counting", parents=[common])
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_check_counting)
    p = check.add_parser("ortho", parents=[common])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=cmd_check_ortho)
    return parser


def _emit(doc, output=None):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dispatch(argv=None) -> int:
    parser = build_parser()
    output = None
    try:
        args = parser.parse_args(argv)
        output = args.output
        if getattr(args, "kmax", "unset") is None:
            args.kmax = args.n * (args.p - 1)
        code, doc = args.func(args)
    except CertificateRefused as exc:
        code, doc = 1, {"refused": True, "stage": exc.stage, "message": exc.message}
    except UsageError as exc:
        code, doc = 2, {"error": "usage", "message": str(exc)}
    except OverflowError as exc:
        code, doc = 2, {"error": "guard", "message": str(exc)}
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        code, doc = 2, {"error": "input", "message": f"{type(exc).__name__}: {exc}"}
    _emit(doc, output)
    return code


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
