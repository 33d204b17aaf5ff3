"""Command-line front end.

Eisenstein integers are written with ``w`` for omega, e.g. ``2+w``, ``-3w``,
``5-2w``.  Exit status is 0 on success, 1 when a verification fails or a
counterexample is found (or an effort budget runs out), and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import primes
from .core import EInt, canonicalize, norm, parse_eint, sextant
from .divisors import prime_power_sigma
from .mersenne import TAU, check_lemma38, mersenne, table1_mersenne, table1_norm
from .perfect import (
    SearchBudgetExceeded,
    check_two_mersenne_obstruction,
    construct_candidate,
    lemma32_sweep,
    search_norm_perfect,
    verify,
    verify_euclid_euler,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# A leading "-" would make argparse read "-3w" as an option.
_NEGATIVE_LITERAL = re.compile(r"^-(\d+[wω]?|[wω])([+-](\d+[wω]?|[wω]))?$")


class _Output:
    def __init__(self, as_json: bool, stream=None) -> None:
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, text: str, obj: dict) -> None:
        if self.as_json:
            print(json.dumps(obj), file=self.stream)
        else:
            print(text, file=self.stream)


def _enc(x: EInt) -> dict:
    return {"a": str(x.a), "b": str(x.b)}


def _marker(confidence: str) -> str:
    return " [probabilistic]" if confidence == primes.PROBABILISTIC else ""


def _eint_arg(text: str) -> EInt:
    try:
        return parse_eint(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def _confidence(text: str) -> int:
    n = _positive(text)
    if n < 64:
        raise argparse.ArgumentTypeError("confidence exponent must be at least 64")
    return n


def _term(x: EInt) -> str:
    return f"({x})" if x.a and x.b else str(x)


def _fmt_factorization(fac) -> str:
    parts = [] if fac.unit == 1 else [_term(fac.unit)]
    for p, e in fac:
        term = _term(p)
        parts.append(term if e == 1 else f"{term}^{e}")
    return " * ".join(parts) or "1"


def cmd_norm(args, out):
    out.emit(str(norm(args.eta)), {"eta": _enc(args.eta), "norm": str(norm(args.eta))})
    return EXIT_OK


def cmd_canon(args, out):
    u, c = canonicalize(args.eta)
    out.emit(f"{c}  unit={u}", {"eta": _enc(args.eta), "unit": _enc(u), "canonical": _enc(c)})
    return EXIT_OK


def cmd_sextant(args, out):
    s = sextant(args.eta)
    out.emit(str(s), {"eta": _enc(args.eta), "sextant": s})
    return EXIT_OK


def cmd_factor(args, out):
    fac = primes.factor(args.eta, budget=args.budget)
    out.emit(
        _fmt_factorization(fac) + _marker(fac.confidence),
        {
            "eta": _enc(args.eta),
            "unit": _enc(fac.unit),
            "factors": [{"prime": _enc(p), "exponent": e} for p, e in fac],
            "confidence": fac.confidence,
        },
    )
    return EXIT_OK


def cmd_sigma(args, out):
    fac = primes.factor(args.eta, budget=args.budget)
    s = EInt(1)
    for p, e in fac:
        s = s * prime_power_sigma(p, e)
    out.emit(str(s) + _marker(fac.confidence), {"eta": _enc(args.eta), "sigma": _enc(s), "confidence": fac.confidence})
    return EXIT_OK


def cmd_mersenne(args, out):
    rec = mersenne(args.tau, args.k)
    status = "prime" if rec.is_prime else "composite"
    out.emit(
        f"M_{rec.k} = {rec.m}  norm {rec.a_k}  {status}{_marker(rec.prime_status.confidence)}",
        {
            "tau": _enc(rec.tau),
            "k": rec.k,
            "m": _enc(rec.m),
            "a_k": str(rec.a_k),
            "prime": rec.is_prime,
            "confidence": rec.prime_status.confidence,
        },
    )
    return EXIT_OK


def cmd_table1(args, out):
    status = EXIT_OK
    for k in range(1, args.kmax + 1):
        rec = mersenne(TAU, k)
        closed_m, closed_a = table1_mersenne(k), table1_norm(k)
        match = rec.m == closed_m and rec.a_k == closed_a
        if not match:
            status = EXIT_FAIL
        out.emit(
            f"{k:4d}  {k % 12:2d}  {rec.m}  {rec.a_k}  {'ok' if match else 'MISMATCH'}",
            {"k": k, "m": _enc(rec.m), "a_k": str(rec.a_k), "table_m": _enc(closed_m), "table_a_k": str(closed_a), "match": match},
        )
    return status


def _verdict_obj(v) -> dict:
    return {
        "eta": _enc(v.eta),
        "tau": _enc(v.tau),
        "sigma": _enc(v.sigma_eta),
        "n_sigma": str(v.n_sigma),
        "n_tau_eta": str(v.n_tau_eta),
        "perfect": v.is_perfect,
        "norm_perfect": v.is_norm_perfect,
        "confidence": v.confidence,
    }


def _verdict_text(v) -> str:
    kind = "perfect" if v.is_perfect else "norm-perfect" if v.is_norm_perfect else "not norm-perfect"
    return (
        f"sigma = {v.sigma_eta}\n"
        f"N(sigma) = {v.n_sigma}\n"
        f"N(tau*eta) = {v.n_tau_eta}\n"
        f"{kind}{_marker(v.confidence)}"
    )


def cmd_verify(args, out):
    v = verify(args.tau, args.eta)
    out.emit(_verdict_text(v), _verdict_obj(v))
    return EXIT_OK if v.is_norm_perfect else EXIT_FAIL


def cmd_construct(args, out):
    eta = construct_candidate(args.tau, args.p, args.conj)
    out.emit(str(eta), {"tau": _enc(args.tau), "p": args.p, "conjugate": args.conj, "eta": _enc(eta)})
    return EXIT_OK


def cmd_euclid_euler(args, out):
    report = verify_euclid_euler(args.pmax, args.tau)
    for e in report.entries:
        obj = {"p": e.p, "status": e.status, "confidence": e.confidence}
        text = f"p={e.p}  {e.status}"
        if e.verdict is not None:
            obj.update(conjugate=e.use_conjugate, perfect=e.verdict.is_perfect, norm_perfect=e.verdict.is_norm_perfect)
            form = "conj(M_p)" if e.use_conjugate else "M_p"
            kind = "perfect" if e.verdict.is_perfect else "norm-perfect only"
            text += f"  tau^(p-1)*{form}  {kind}{_marker(e.confidence)}"
        out.emit(text, obj)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_search(args, out):
    report = search_norm_perfect(args.tau, args.bound, max_bound=args.max_bound, workers=args.workers)
    for v in report.hits:
        out.emit(f"hit {v.eta}", _verdict_obj(v))
    out.emit(
        f"{len(report.hits)} hits  ({report.candidates_checked} candidates, norm <= {report.norm_bound})",
        {"tau": _enc(report.tau), "bound": str(report.norm_bound), "candidates": report.candidates_checked, "hits": len(report.hits)},
    )
    # No norm-perfect eta exists for these tau, so any hit is a bug.
    theorem_tau = canonicalize(args.tau)[1] in (EInt(2), TAU)
    return EXIT_FAIL if report.hits and theorem_tau else EXIT_OK


def cmd_check_lemma32(args, out):
    sweep = lemma32_sweep(args.samples, args.kmax, args.seed)
    out.emit(
        f"{sweep.samples} samples  strict violations {len(sweep.strict_violations)}  "
        f"weak tested {sweep.weak_tested}  weak violations {len(sweep.weak_violations)}  "
        f"equalities {sweep.equalities}  bad equalities {len(sweep.bad_equalities)}",
        {
            "samples": sweep.samples,
            "strict_violations": len(sweep.strict_violations),
            "weak_tested": sweep.weak_tested,
            "weak_violations": len(sweep.weak_violations),
            "equalities": sweep.equalities,
            "bad_equalities": len(sweep.bad_equalities),
            "ok": sweep.ok,
        },
    )
    return EXIT_OK if sweep.ok else EXIT_FAIL


def cmd_check_thm42(args, out):
    report = check_two_mersenne_obstruction(args.kmax)
    out.emit(
        f"2^k - 1 for 2 <= k <= {args.kmax}: {len(report.counterexamples)} Eisenstein primes",
        {"kmax": args.kmax, "counterexamples": report.counterexamples, "ok": report.ok},
    )
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_check_lemma38(args, out):
    report = check_lemma38(args.kmax)
    out.emit(
        f"M_k prime for k in {report.prime_indices}; counterexamples {report.counterexamples}{_marker(report.confidence)}",
        {"kmax": args.kmax, "prime_indices": report.prime_indices, "counterexamples": report.counterexamples, "confidence": report.confidence},
    )
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object per result")
    common.add_argument("--confidence", type=_confidence, default=primes.DEFAULT_CONFIDENCE_BITS, metavar="BITS",
                        help="probabilistic primality error bound 2^-BITS (default %(default)s)")
    common.add_argument("--budget", type=_positive, default=primes.DEFAULT_RHO_BUDGET,
                        help="rho iteration budget per composite cofactor")

    parser = argparse.ArgumentParser(prog="eisenstein", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    for name, func, help in [
        ("norm", cmd_norm, "norm a^2 - ab + b^2"),
        ("canon", cmd_canon, "first-sextant associate and the unit used"),
        ("sextant", cmd_sextant, "sextant index 1..6"),
        ("factor", cmd_factor, "factor into canonical primes"),
        ("sigma", cmd_sigma, "complex sum of divisors"),
    ]:
        add(name, func, help).add_argument("eta", type=_eint_arg)

    p = add("mersenne", cmd_mersenne, "Mersenne number M_k over tau")
    p.add_argument("--tau", type=_eint_arg, required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = add("table1", cmd_table1, "M_k and A_k for tau = 2+w against the closed forms")
    p.add_argument("--kmax", type=_positive, default=24)

    p = add("verify", cmd_verify, "test eta for tau-perfection and tau-norm-perfection")
    p.add_argument("--tau", type=_eint_arg, required=True)
    p.add_argument("--eta", type=_eint_arg, required=True)

    p = add("construct", cmd_construct, "tau^(p-1) * M_p, or with conj(M_p)")
    p.add_argument("--tau", type=_eint_arg, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--conj", action="store_true")

    p = add("euclid-euler", cmd_euclid_euler, "verify the Euclid-form witnesses for p <= pmax")
    p.add_argument("--pmax", type=_positive, required=True)
    p.add_argument("--tau", type=_eint_arg, default=TAU)

    p = add("search", cmd_search, "exhaustive norm-perfect search over eta divisible by tau")
    p.add_argument("--tau", type=_eint_arg, required=True)
    p.add_argument("--bound", type=_positive, required=True)
    p.add_argument("--max-bound", type=_positive, default=10**7)
    p.add_argument("--workers", type=_positive, default=1)

    p = add("check-lemma32", cmd_check_lemma32, "random exact test of the geometric-sum norm bounds")
    p.add_argument("--samples", type=_positive, default=10_000)
    p.add_argument("--kmax", type=_positive, default=30)
    p.add_argument("--seed", type=int, default=0)

    p = add("check-thm42", cmd_check_thm42, "2^k - 1 is never an Eisenstein prime")
    p.add_argument("--kmax", type=_positive, default=64)

    p = add("check-lemma38", cmd_check_lemma38, "M_k prime forces k prime (tau = 2+w)")
    p.add_argument("--kmax", type=_positive, default=60)
    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = [" " + a if _NEGATIVE_LITERAL.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Output(args.json)
    saved_bits = primes.DEFAULT_CONFIDENCE_BITS
    primes.DEFAULT_CONFIDENCE_BITS = args.confidence
    try:
        return args.func(args, out)
    except (primes.FactorizationError, SearchBudgetExceeded, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        primes.DEFAULT_CONFIDENCE_BITS = saved_bits


if __name__ == "__main__":
    sys.exit(main())
