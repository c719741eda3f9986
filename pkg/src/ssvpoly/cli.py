"""Command-line interface: ``ssv {e,p,tu,limit,walks,verify}``.

Exit codes: 0 success, 1 usage error, 2 verification failure,
3 internal inconsistency.
"""

import argparse
import json
import sys

from . import formulas, serialize, verify
from .errors import DomainError, InternalInconsistencyError, NotDivisibleError, SSVError
from .laurent import monomial_text
from .rootsys import MetaplecticContext

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_vector(text, r=None, what="mu"):
    try:
        v = tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x != "")
    except ValueError:
        raise UsageError(f"malformed vector for --{what}: {text!r}") from None
    if not v:
        raise UsageError(f"empty vector for --{what}")
    if r is not None and len(v) != r:
        raise UsageError(f"--{what} has {len(v)} entries but --r is {r}")
    return v


def parse_perm(text, r):
    u = parse_vector(text, r, "u")
    if sorted(u) != list(range(1, r + 1)):
        raise UsageError(f"--u must be a permutation of 1..{r} in one-line notation, got {text!r}")
    return tuple(x - 1 for x in u)


def _common(p, mu=True):
    p.add_argument("--r", type=int, required=True, help="rank (number of variables), at least 2")
    p.add_argument("--n", type=int, default=1, help="metaplectic degree, at least 1")
    if mu:
        p.add_argument("--mu", required=True, help="weight as comma-separated integers; use --mu=-1,0,1 for negatives")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--no-reduce-ghalf", action="store_true", help="keep G_{n/2} generic instead of using G_{n/2}^2 = 1")


def build_parser():
    parser = _Parser(prog="ssv", description="Metaplectic SSV polynomials for GL_r.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("e", help="nonsymmetric polynomial E_mu")
    _common(p)
    p.add_argument("--normalization", choices=("monic", "raw"), default="monic")

    p = sub.add_parser("p", help="symmetric polynomial P_mu (mu dominant)")
    _common(p)

    p = sub.add_parser("tu", help="walk sum from u, a multiple of T_u E_mu")
    _common(p)
    p.add_argument("--u", required=True, help="permutation of 1..r in one-line notation")

    p = sub.add_parser("limit", help="q -> 0 or q -> infinity limit of E_mu or P_mu")
    _common(p)
    p.add_argument("--direction", choices=("q0", "qinf"), required=True)
    p.add_argument("--object", choices=("e", "p"), default="e")
    p.add_argument("--normalization", choices=("monic", "raw"), default="monic")

    p = sub.add_parser("walks", help="table of alcove walks for E_mu")
    _common(p)
    p.add_argument("--u", default=None, help="start the walks at this permutation")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    return parser


def _context(args):
    if args.r is not None and args.r < 2:
        raise UsageError("--r must be at least 2")
    if args.n is not None and args.n < 1:
        raise UsageError("--n must be at least 1")
    return MetaplecticContext(args.r, args.n, not getattr(args, "no_reduce_ghalf", False))


def _emit(poly, ctx, mu, obj, normalization, fmt):
    if fmt == "json":
        return serialize.dumps(poly, ctx, mu, obj, normalization)
    if fmt == "latex":
        return poly.to_latex()
    return poly.to_text()


def _walks_output(args, ctx, mu):
    start = parse_perm(args.u, ctx.r) if args.u else None
    dec, rows = formulas.walk_table(mu, ctx, start)
    if args.format == "json":
        return json.dumps(
            {
                "r": ctx.r,
                "n": ctx.n,
                "mu": list(mu),
                "lambda": list(dec.lam),
                "word": list(dec.word),
                "betas": [{"finite": list(b.finite), "level": b.level} for b in dec.betas],
                "walks": [
                    {
                        "choices": list(p.choices),
                        "end": {"translation": list(p.end.translation), "perm": [x + 1 for x in p.end.perm]},
                        "wt": list(p.wt),
                        "phi": [x + 1 for x in p.phi],
                        "positive_folds": [j + 1 for j in p.pos_folds],
                        "negative_folds": [j + 1 for j in p.neg_folds],
                        "exp": list(t.exponent),
                        "coeff": serialize.scalar_to_json(t.coefficient),
                    }
                    for p, t in rows
                ],
            },
            sort_keys=True,
        )
    lines = [
        f"lambda = {dec.lam}",
        f"word = {dec.word}",
        "betas = " + (", ".join(str(b) for b in dec.betas) or "none"),
    ]
    for p, t in rows:
        folds = ["+%d" % (j + 1) for j in p.pos_folds] + ["-%d" % (j + 1) for j in p.neg_folds]
        coeff = t.coefficient.to_latex() if args.format == "latex" else t.coefficient.to_text()
        lines.append(
            " | ".join(
                [
                    " ".join(p.choices) or "-",
                    f"wt={p.wt}",
                    "phi=[" + ",".join(str(x + 1) for x in p.phi) + "]",
                    "folds=" + (",".join(folds) or "none"),
                    f"{monomial_text(t.exponent) or '1'}: {coeff}",
                ]
            )
        )
    return "\n".join(lines)


def run(argv):
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        if args.r is not None and args.r < 2 or args.n is not None and args.n < 1:
            raise UsageError("--r must be at least 2 and --n at least 1")
        results = verify.run_suite(args.suite, args.r, args.n)
        for res in results:
            print(res.line())
        failed = [res for res in results if not res.passed]
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
        return EXIT_VERIFY if failed else EXIT_OK

    ctx = _context(args)
    mu = parse_vector(args.mu, ctx.r)
    if args.command == "e":
        out = _emit(formulas.compute_E(mu, ctx, args.normalization), ctx, mu, "E", args.normalization, args.format)
    elif args.command == "p":
        out = _emit(formulas.compute_P(mu, ctx), ctx, mu, "P", "raw", args.format)
    elif args.command == "tu":
        u = parse_perm(args.u, ctx.r)
        out = _emit(formulas.compute_TuE(u, mu, ctx), ctx, mu, "TuE", "raw", args.format)
    elif args.command == "limit":
        direction = "zero" if args.direction == "q0" else "infinity"
        if args.object == "p":
            poly = formulas.compute_P_limit(mu, ctx, direction)
            norm = "raw"
        else:
            poly = formulas.compute_E_limit(mu, ctx, direction, args.normalization)
            norm = args.normalization
        out = _emit(poly, ctx, mu, f"{args.object.upper()}_{args.direction}", norm, args.format)
    else:
        out = _walks_output(args, ctx, mu)
    print(out)
    return EXIT_OK


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalInconsistencyError, NotDivisibleError) as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except SSVError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
