"""Command-line entry point (``peuler``)."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .dyck import DyckWord, bullet_sum, enumerate_dyck, format_sum, theta, theta_inverse
from .errors import PEulerError
from .eulerian import db_eulerian, multivariate_eulerian, multivariate_peak, univariate_eulerian, univariate_peak
from .fqsym import dab_product, shuffle
from .permstat import as_permutation, format_permutation
from .polyring import MultiAffinePoly, parse_poly, poly_from_json, simplify
from .poset import antichain, chain, linear_extensions, poset_from_json
from .stability import REGIONS, check_stable, is_real_rooted
from .univariate import UnivariatePoly, count_real_roots, squarefree_part
from .verify import SUITES, default_threads, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_REFUTED = 2
EXIT_USAGE = 64
EXIT_INPUT = 65


class InputError(Exception):
    """Malformed user input (exit 65)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# input helpers


def _read_source(text: str) -> str:
    p = Path(text)
    try:
        if p.is_file():
            return p.read_text()
    except OSError:
        pass
    return text


def load_poset(arg: str):
    kind, _, size = arg.partition(":")
    if kind in ("antichain", "chain") and size:
        try:
            n = int(size)
        except ValueError:
            raise InputError(f"bad size in {arg!r}") from None
        return antichain(n) if kind == "antichain" else chain(n)
    text = _read_source(arg)
    try:
        return poset_from_json(text if text.lstrip().startswith("{") else json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot read poset from {arg!r}: {exc}") from None


def load_poly(arg: str):
    text = _read_source(arg).strip()
    if text.startswith("{"):
        try:
            return poly_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"bad polynomial JSON: {exc}") from None
    return parse_poly(text)


def _multiaffine(f) -> MultiAffinePoly:
    f = simplify(f)
    if not isinstance(f, MultiAffinePoly):
        raise InputError("DAB elements must be multiaffine")
    return f


# ---------------------------------------------------------------------------
# output helpers


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_poly(args, f) -> None:
    _emit(args, str(f), f.to_json())


def _emit_uni(args, p: UnivariatePoly) -> None:
    _emit(args, str(p), {"coeffs": [str(c) for c in p.coeffs], "text": str(p)})


# ---------------------------------------------------------------------------
# subcommands


def cmd_extensions(args):
    exts = linear_extensions(load_poset(args.poset))
    _emit(args, "\n".join(format_permutation(p) for p in exts), [list(p) for p in exts])
    return EXIT_OK


def cmd_eulerian(args):
    _emit_poly(args, multivariate_eulerian(load_poset(args.poset)))
    return EXIT_OK


def cmd_eulerian_uni(args):
    _emit_uni(args, univariate_eulerian(load_poset(args.poset)))
    return EXIT_OK


def cmd_db_eulerian(args):
    _emit_poly(args, db_eulerian(load_poset(args.poset)))
    return EXIT_OK


def cmd_peak(args):
    _emit_poly(args, multivariate_peak(load_poset(args.poset)))
    return EXIT_OK


def cmd_peak_uni(args):
    _emit_uni(args, univariate_peak(load_poset(args.poset)))
    return EXIT_OK


def cmd_shuffle(args):
    s = shuffle(as_permutation(args.p), as_permutation(args.q))
    payload = [{"perm": list(p), "coeff": c} for p, c in sorted(s.items())]
    _emit(args, str(s), payload)
    return EXIT_OK


def cmd_dab_mul(args):
    _emit_poly(args, dab_product(_multiaffine(load_poly(args.a)), _multiaffine(load_poly(args.b))))
    return EXIT_OK


def _word(text: str) -> DyckWord:
    w = DyckWord("" if text in ("1", "e") else text)
    if not w.is_valid():
        raise InputError(f"{text!r} is not a Dyck code")
    return w


def cmd_dyck_mul(args):
    acc = {DyckWord(""): 1}
    for text in args.words:
        acc = bullet_sum(acc, {_word(text): 1})
    payload = [{"word": str(w), "coeff": c} for w, c in sorted(acc.items())]
    _emit(args, format_sum(acc), payload)
    return EXIT_OK


def cmd_dyck_enum(args):
    words = enumerate_dyck(args.n)
    _emit(args, "\n".join(str(w) for w in words), [str(w) for w in words])
    return EXIT_OK


def cmd_theta(args):
    if args.inverse:
        f = MultiAffinePoly.monomial(theta_inverse(_word(args.value)))
        _emit_poly(args, f)
        return EXIT_OK
    f = _multiaffine(load_poly(args.value))
    if len(f) != 1 or next(iter(f.items()))[1] != 1:
        raise InputError("theta takes a single monomial with coefficient 1")
    w = theta(f, args.n)
    _emit(args, str(w), str(w))
    return EXIT_OK


def cmd_check_realrooted(args):
    f = load_poly(args.poly)
    vs = f.variables()
    if len(vs) > 1:
        raise InputError("check-realrooted needs a univariate polynomial")
    p = UnivariatePoly.from_poly(f, next(iter(vs))) if vs else UnivariatePoly.from_poly(f)
    ok = is_real_rooted(p)
    q = squarefree_part(p)
    payload = {
        "real_rooted": ok,
        "degree": p.degree,
        "distinct_roots": max(q.degree, 0),
        "distinct_real_roots": count_real_roots(q) if q.degree >= 1 else 0,
    }
    _emit(args, "real-rooted" if ok else "not real-rooted", payload)
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_check_stable(args):
    f = load_poly(args.poly)
    verdict = check_stable(f, args.region, args.budget, args.seed)
    print(json.dumps(verdict.to_json(), sort_keys=True))
    return EXIT_REFUTED if verdict.refuted else EXIT_OK


def cmd_verify(args):
    extra = {}
    if args.suite == "forests" and args.stable_max:
        extra = {"stable_max": args.stable_max, "budget": args.budget}
    rep = run_suite(args.suite, args.max, seed=args.seed, threads=args.threads, **extra)
    if args.json:
        print(json.dumps(rep.to_json(), sort_keys=True))
    else:
        print(rep.summary())
        for fail in rep.failures[:20]:
            print("  FAIL", json.dumps(fail, sort_keys=True))
        if len(rep.failures) > 20:
            print(f"  ... {len(rep.failures) - 20} more")
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes (default: all cores)")

    parser = _Parser(prog="peuler", description="Multivariate P-Eulerian polynomials, FQSym and Dyck-path algebras.", parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=fn)
        return p

    for name, fn, text in [
        ("extensions", cmd_extensions, "linear extensions of a poset"),
        ("eulerian", cmd_eulerian, "multivariate P-Eulerian polynomial"),
        ("eulerian-uni", cmd_eulerian_uni, "univariate P-Eulerian polynomial"),
        ("db-eulerian", cmd_db_eulerian, "descent-bottom P-Eulerian polynomial"),
        ("peak", cmd_peak, "multivariate peak polynomial"),
        ("peak-uni", cmd_peak_uni, "univariate peak polynomial"),
    ]:
        add(name, fn, text).add_argument("poset", help="JSON file, inline JSON, antichain:N or chain:N")

    p = add("shuffle", cmd_shuffle, "shuffle product of two permutations")
    p.add_argument("p")
    p.add_argument("q")

    p = add("dab-mul", cmd_dab_mul, "DAB product of two w1-spans")
    p.add_argument("a", help="polynomial text, JSON, or a file holding either")
    p.add_argument("b")

    p = add("dyck-mul", cmd_dyck_mul, "bullet product of Dyck codes")
    p.add_argument("words", nargs="+")

    p = add("dyck-enum", cmd_dyck_enum, "all Dyck codes of semilength N")
    p.add_argument("n", type=int)

    p = add("theta", cmd_theta, "Theta of a w1-monomial (or its inverse)")
    p.add_argument("value")
    p.add_argument("--inverse", action="store_true", help="map a Dyck code back to its monomial")
    p.add_argument("--n", type=int, default=None, help="grade (default: degree - 1)")

    p = add("check-realrooted", cmd_check_realrooted, "exact real-rootedness of a univariate polynomial")
    p.add_argument("poly")

    p = add("check-stable", cmd_check_stable, "semi-decide stability of a multivariate polynomial")
    p.add_argument("poly")
    p.add_argument("--region", choices=REGIONS, default="upper")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify", cmd_verify, "run an oracle suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max", type=int, default=None, help="size bound (suite-specific default)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stable-max", type=int, default=0, help="forests: also run check_stable up to this size")
    p.add_argument("--budget", type=int, default=10_000, help="forests: check_stable budget")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.threads = getattr(args, "threads", None)
    if args.threads is None:
        args.threads = default_threads()
    elif args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except (InputError, PEulerError, json.JSONDecodeError) as exc:
        print(f"peuler: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError) as exc:
        print(f"peuler: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv=None) -> int:
    """Alias of :func:`main` for programmatic use."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
