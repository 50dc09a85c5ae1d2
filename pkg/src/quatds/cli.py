"""Command line entry point.

    quatds verify {lie,group,fueter,forms,cauchy,level,all} [options]
    quatds basis --n K (--family {P,Q,h} | --emit {rn,jn,mu})

Exit codes: 0 all checks pass, 1 some check fails, 2 invalid configuration.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import ConfigError, QuatdsError
from .verify import SUITES, VerifyConfig, run_suite


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quatds", description="Verification suites and basis emitters.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--max-degree", type=int, default=5)
    v.add_argument("--level", type=int, default=5, help="quadrature level")
    v.add_argument("--degree", type=int, default=4, help="max degree of regular test polynomials (cauchy)")
    v.add_argument("--radius", type=float, default=0.5, help="sphere radius (cauchy)")
    v.add_argument("--N", type=int, default=2, help="congruence level (level)")
    v.add_argument("--height", type=int, default=2, help="G(Z) search height (level)")
    v.add_argument("--printed", action="store_true",
                   help="also run the as-displayed variants of corrected identities (these fail)")
    v.add_argument("--emit", choices=("json", "text"), default="json")
    v.add_argument("--out", metavar="FILE")

    b = sub.add_parser("basis", help="emit polynomial families or representation matrices as JSON")
    b.add_argument("--n", type=int, required=True)
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", choices=("P", "Q", "h"))
    g.add_argument("--emit", choices=("rn", "jn", "mu"))
    b.add_argument("--seed", type=int, default=0, help="seed for the sample element (rn, mu)")
    b.add_argument("--out", metavar="FILE")
    return p


def _text(report: dict) -> str:
    lines = []
    for r in report.get("suites", [report]):
        lines.append(f"[{r['suite']}] {'PASS' if r['pass'] else 'FAIL'}")
        for c in r["checks"]:
            lines.append(f"  {'PASS' if c['pass'] else 'FAIL'}  {c['id']:<45} {c['mode']:<5} "
                         f"{c['residual']:.3e}  {c['paper_ref']}")
    return "\n".join(lines) + "\n"


def _basis(args) -> dict:
    from .fueter import minimal_ktype, p_kl, q_kl
    from .group import random_sp11_exact
    from .representations import jn_solve, mu_matrix, rn_matrix
    from .group import random_unit_rational

    n = args.n
    if not 0 <= n <= 8:
        raise ConfigError("--n must be in 0..8")
    if args.family in ("P", "Q"):
        fn = p_kl if args.family == "P" else q_kl
        return {"family": args.family, "n": n,
                "polynomials": [{"k": k, "l": l, "terms": fn(n, k, l).to_json()}
                                for k in range(n + 1) for l in range(n + 1)]}
    if args.family == "h":
        if n < 1:
            raise ConfigError("h_k^n needs --n >= 1")
        return {"family": "h", "n": n,
                "functions": [{"k": k, "coordinates": [c.to_json() for c in minimal_ktype(n, k)[1]]}
                              for k in range(n + 1)]}
    rng = random.Random(args.seed)
    if args.emit == "rn":
        u = random_unit_rational(rng)
        from .quaternion import quaternion_to_json

        return {"emit": "rn", "n": n, "element": quaternion_to_json(u), "matrix": rn_matrix(u, n).to_json()}
    if args.emit == "jn":
        return {"emit": "jn", "n": n, "matrix": jn_solve(n).to_json()}
    g = random_sp11_exact(rng)
    return {"emit": "mu", "n": n, "element": g.to_json(), "matrix": mu_matrix(g, n).to_json()}


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "basis":
            _write(json.dumps(_basis(args), sort_keys=True) + "\n", args.out)
            return 0
        config = VerifyConfig(seed=args.seed, tol=args.tol, samples=args.samples, max_degree=args.max_degree,
                              level=args.level, degree=args.degree, radius=args.radius, N=args.N,
                              height=args.height, printed=args.printed)
        report = run_suite(args.suite, config)
    except ConfigError as exc:
        print(f"quatds: configuration error: {exc}", file=sys.stderr)
        return 2
    except QuatdsError as exc:
        print(f"quatds: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2, sort_keys=True) + "\n" if args.emit == "json" else _text(report)
    _write(text, args.out)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
