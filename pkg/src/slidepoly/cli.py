"""Command-line front end: ``slidepoly <command> ...``.

Exit status is 0 on success, 1 on a domain error (for instance a shape
that is not a partition) and 2 on a malformed command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import pipedreams as pd
from . import products as pr
from . import stability as st
from . import tableaux as tb
from .core import (
    DomainError,
    Permutation,
    is_partition,
    parse_composition,
    reduced_words,
)
from .polynomial import (
    Expansion,
    Polynomial,
    expand_fundamental_slide,
    expand_monomial_slide,
    fundamental_slide_to_monomial_slide,
)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------

def permutation_arg(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid permutation {text!r}: {exc}") from None


def composition_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_composition(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid composition {text!r}: {exc}") from None


def positive_int(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {k}")
    return k


def _partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if lam and not is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    return lam


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

class Result:
    """Text and JSON renderings of one command's answer."""

    def __init__(self, text: str, data):
        self.text = text
        self.data = data


def _expansion(e: Expansion) -> Result:
    return Result(str(e), e.to_dict())


def _polynomial(p: Polynomial) -> Result:
    return Result(str(p), p.to_dict())


def _formal(fs: pr.FormalSum, basis: str) -> Result:
    return _expansion(fs.as_expansion(basis))


def _listing(items: list, to_text, to_data) -> Result:
    lines = [f"count: {len(items)}"]
    for item in items:
        lines.append(to_text(item))
    return Result("\n".join(lines), {"count": len(items), "items": [to_data(i) for i in items]})


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_expand(args) -> Result:
    if args.kind == "schubert":
        w = permutation_arg(args.index)
        if args.basis == "monomials":
            return _polynomial(pd.schubert_polynomial(w))
        e = pd.schubert_to_fundamental_slide(w)
        if args.basis == "mslide":
            acc = Expansion({}, "monomial-slide")
            for a, c in e.terms.items():
                acc = acc + fundamental_slide_to_monomial_slide(a) * c
            return _expansion(acc)
        return _expansion(e)
    if args.kind == "schur":
        lam = _partition(composition_arg(args.index))
        if args.n is None:
            raise UsageError("expand schur needs --n")
        if args.via == "ssyt":
            return _polynomial(tb.schur_via_ssyt(lam, args.n))
        if args.via == "syt":
            return _polynomial(tb.schur_via_syt(lam, args.n))
        return _expansion(tb.schur_via_qyt(lam, args.n)[1])
    # slide m|f <a>
    if args.which not in ("m", "f"):
        raise UsageError("expand slide takes 'm' or 'f' followed by a weak composition")
    a = composition_arg(args.index)
    if args.which == "m":
        return _polynomial(expand_monomial_slide(a))
    if args.basis == "mslide":
        return _expansion(fundamental_slide_to_monomial_slide(a))
    return _polynomial(expand_fundamental_slide(a))


def cmd_product(args) -> Result:
    kind = args.kind
    if kind == "schubert":
        u, v = permutation_arg(args.x), permutation_arg(args.y)
        e = pr.schubert_product_slide(u, v, args.threads)
        if args.to_schubert:
            return _expansion(pr.slide_expansion_to_schubert(e, positive=True))
        return _expansion(e)
    x, y = composition_arg(args.x), composition_arg(args.y)
    if kind == "mslide":
        return _formal(pr.quasi_slide_product(x, y), "monomial-slide")
    if kind == "fslide":
        fs = pr.slide_product(x, y)
        if args.to_schubert:
            return _expansion(pr.slide_expansion_to_schubert(fs.as_expansion("fundamental-slide")))
        return _formal(fs, "fundamental-slide")
    if any(p == 0 for p in x + y):
        raise DomainError("quasisymmetric products take strong compositions")
    if kind == "qsym-m":
        return _formal(pr.monomial_qsym_product(x, y), "monomial-qsym")
    return _formal(pr.fundamental_qsym_product(x, y), "fundamental-qsym")


def cmd_enumerate(args) -> Result:
    kind = args.kind
    if kind in ("pd", "qpd", "reduced-words"):
        w = permutation_arg(args.index)
        if kind == "reduced-words":
            words = sorted(reduced_words(w))
            return _listing(words, lambda s: " ".join(map(str, s)), list)
        dreams = pd.enumerate_pipe_dreams(w) if kind == "pd" else pd.enumerate_qpd(w)
        dreams = sorted(dreams, key=lambda p: (p.weight(), p.reading_order()))
        return _listing(
            dreams,
            lambda p: f"weight {p.weight()}\n{pd.render(p)}",
            lambda p: p.to_dict(),
        )
    lam = _partition(composition_arg(args.index))
    if kind == "syt":
        tabs = tb.enumerate_syt(lam)
    else:
        if args.n is None:
            raise UsageError(f"enumerate {kind} needs --n")
        tabs = tb.enumerate_ssyt(lam, args.n) if kind == "ssyt" else tb.enumerate_qyt(lam, args.n)
    tabs = sorted(tabs)
    return _listing(tabs, lambda t: str(t) + "\n", lambda t: t.to_dict())


def cmd_stanley(args) -> Result:
    w = permutation_arg(args.w)
    if args.via == "limit":
        return _expansion(st.stanley_via_stable_slide(w))
    return _expansion(st.stanley_via_reduced_words(w))


def _zeta_kind(x: str, y: str, kind: str) -> str:
    if kind != "auto":
        return kind
    bracketed = any(t.strip().startswith(("[", "(")) for t in (x, y))
    if not bracketed:
        try:
            permutation_arg(x), permutation_arg(y)
            return "perm"
        except argparse.ArgumentTypeError:
            pass
    parts = composition_arg(x) + composition_arg(y)
    return "weak" if 0 in parts else "strong"


def cmd_stability(args) -> Result:
    what = args.what
    if what == "eta":
        value = pd.eta(permutation_arg(args.args[0]))
        return Result(str(value), {"eta": value})
    if what == "zeta":
        x, y = args.args
        kind = _zeta_kind(x, y, args.kind)
        if kind == "perm":
            value = st.zeta_perm(permutation_arg(x), permutation_arg(y))
        elif kind == "strong":
            value = st.zeta_strong(composition_arg(x), composition_arg(y))
        else:
            value = st.zeta_weak(composition_arg(x), composition_arg(y))
        return Result(str(value), {"zeta": value, "kind": kind})
    if args.max is None:
        raise UsageError(f"stability {what} needs --max")
    if what == "profile-qpd":
        prof = pd.qpd_count_profile(permutation_arg(args.args[0]), args.max)
    else:
        a, b = (composition_arg(t) for t in args.args)
        prof = st.slide_product_stabilization_profile(a, b, args.max)
    return Result(" ".join(map(str, prof)), {"profile": list(prof)})


def cmd_verify(args) -> Result:
    checks = run_suite(args.suite)
    lines = [f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip() for label, ok, detail in checks]
    failed = sum(1 for _, ok, _ in checks if not ok)
    lines.append(f"{len(checks) - failed}/{len(checks)} passed")
    data = {"suite": args.suite, "checks": [
        {"name": label, "passed": ok, "detail": detail} for label, ok, detail in checks
    ], "failed": failed}
    res = Result("\n".join(lines), data)
    res.failed = failed  # type: ignore[attr-defined]
    return res


_STABILITY_ARITY = {"eta": 1, "zeta": 2, "profile-qpd": 1, "profile-product": 2}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default text)")
    common.add_argument("--output", default=argparse.SUPPRESS, help="write output to this file")
    common.add_argument("--threads", type=positive_int, default=argparse.SUPPRESS,
                        help="worker threads for product computations")

    parser = argparse.ArgumentParser(prog="slidepoly", parents=[common],
                                     description="Slide polynomials, pipe dreams and Schubert products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a polynomial in a basis")
    p.add_argument("kind", choices=("schubert", "schur", "slide"))
    p.add_argument("which", help="permutation, partition, or m|f for slide")
    p.add_argument("rest", nargs="?", help="weak composition for 'expand slide'")
    p.add_argument("--basis", choices=("monomials", "mslide", "fslide"), default=None)
    p.add_argument("--n", type=positive_int, default=None)
    p.add_argument("--via", choices=("ssyt", "syt", "qyt"), default="ssyt")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", parents=[common], help="multiply two basis elements")
    p.add_argument("kind", choices=("mslide", "fslide", "schubert", "qsym-m", "qsym-f"))
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--to-schubert", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("enumerate", parents=[common], help="list combinatorial objects")
    p.add_argument("kind", choices=("pd", "qpd", "ssyt", "syt", "qyt", "reduced-words"))
    p.add_argument("index")
    p.add_argument("--n", type=positive_int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stanley", parents=[common], help="Stanley symmetric function")
    p.add_argument("w")
    p.add_argument("--via", choices=("words", "limit"), default="words")
    p.set_defaults(func=cmd_stanley)

    p = sub.add_parser("stability", parents=[common], help="stabilization statistics")
    p.add_argument("what", choices=tuple(_STABILITY_ARITY))
    p.add_argument("args", nargs="+")
    p.add_argument("--max", type=positive_int, default=None)
    p.add_argument("--kind", choices=("auto", "perm", "strong", "weak"), default="auto",
                   help="how to read the arguments of zeta")
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("verify", parents=[common], help="run a built-in self-check suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.set_defaults(func=cmd_verify)
    return parser


def _normalize(args, parser) -> None:
    args.format = getattr(args, "format", "text")
    args.output = getattr(args, "output", None)
    args.threads = getattr(args, "threads", None) or (os.cpu_count() or 1)
    if args.command == "expand":
        if args.kind == "slide":
            if args.rest is None:
                parser.error("expand slide needs m|f and a weak composition")
            args.index = args.rest
            if args.basis not in (None, "monomials", "mslide"):
                parser.error("expand slide supports --basis monomials or mslide")
        else:
            if args.rest is not None:
                parser.error(f"unexpected argument {args.rest!r}")
            args.index = args.which
            if args.basis is None:
                args.basis = "fslide"
    if args.command == "stability" and len(args.args) != _STABILITY_ARITY[args.what]:
        parser.error(f"stability {args.what} takes {_STABILITY_ARITY[args.what]} argument(s)")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _normalize(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (argparse.ArgumentTypeError, UsageError) as exc:
        print(f"slidepoly: error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"slidepoly: {exc}", file=stderr)
        return 1
    if args.format == "json":
        body = json.dumps(result.data, indent=2, sort_keys=False)
    else:
        body = result.text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body, file=stdout)
    return 1 if getattr(result, "failed", 0) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
