"""Command-line entry point.

Examples::

    yangian normalize "T[2,1,2]*T[1,2,1]"
    yangian pair "T[1,1,2]" "T[-1,2,1]"
    yangian commute "Z[2]" "T[1,1,2]"
    yangian rep --spec rho_c:2,sigma_c:1/2 --apply "T[1,1,2]"
    yangian check ybe --n 3

Every output starts with the configuration that produced it.  Exit status is
0 when everything passed, 1 when a check failed and 2 for usage, parse or
truncation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Sequence

from .algebra import AlgElement, commutator, format_word
from .errors import ParseError, YangianError
from .hopf import antipode, antipode_gen, z_circ_series, z_series
from .pairing import dual_system, gram_matrix, pair_monomials, universal_r
from .parse import parse_element, parse_raw
from .reps import KIND_ALIASES, RepSpec, rep_apply
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class EngineConfig:
    N: int
    D: int | None
    K: int
    seed: int

    def line(self) -> str:
        return f"# config N={self.N} D={'none' if self.D is None else self.D} K={self.K} seed={self.seed}"


@dataclass
class Output:
    """A command result in the three output formats."""

    data: Any
    text: list[str]
    header: list[str]
    rows: list[list[Any]]
    status: int = EXIT_OK


def _elem_rows(x: AlgElement) -> list[list[Any]]:
    return [[str(c), format_word(w) if w else "1"] for w, c in x.items()]


def _element_output(x: AlgElement) -> Output:
    return Output(x.to_json(), [str(x)], ["coeff", "mono"], _elem_rows(x))


# ----------------------------------------------------------------------
# subcommands


def cmd_normalize(args, cfg: EngineConfig) -> Output:
    return _element_output(parse_element(args.expr, cfg.N, cfg.D))


def cmd_commute(args, cfg: EngineConfig) -> Output:
    x = parse_element(args.left, cfg.N, cfg.D)
    y = parse_element(args.right, cfg.N, cfg.D)
    return _element_output(commutator(x, y))


def cmd_pair(args, cfg: EngineConfig) -> Output:
    x = parse_raw(args.yangian, cfg.N)
    z = parse_raw(args.dual, cfg.N)
    if any(g[0] < 0 for w in x for g in w):
        raise ParseError("the first argument must use positive levels only", args.yangian, 0)
    if any(g[0] > 0 for w in z for g in w):
        raise ParseError("the second argument must use negative levels only", args.dual, 0)
    value = sum((cx * cz * pair_monomials(wx, wz) for wx, cx in x.items() for wz, cz in z.items()), Fraction(0))
    return Output({"value": str(value)}, [str(value)], ["value"], [[str(value)]])


def cmd_gram(args, cfg: EngineConfig) -> Output:
    g = gram_matrix(args.deg, cfg.N)
    text = [f"degree {g.degree}: size {g.size}, rank {g.rank()}"]
    labels = [format_word(w) or "1" for w in g.rows]
    for label, row in zip(labels, g.values):
        text.append(f"{label:>32} | " + " ".join(f"{str(v):>4}" for v in row))
    rows = [
        [format_word(g.rows[p]) or "1", format_word(g.cols[q]) or "1", str(v)]
        for p, row in enumerate(g.values)
        for q, v in enumerate(row)
        if v
    ]
    return Output(g.to_json(), text, ["mono", "dual", "value"], rows)


def cmd_dual_basis(args, cfg: EngineConfig) -> Output:
    system = dual_system(args.deg_max, cfg.N)
    text = [f"{format_word(x) or '1'}  ->  {xd}" for x, xd in system.pairs]
    rows = [[format_word(x) or "1", str(c), format_word(w) or "1"] for x, xd in system.pairs for w, c in xd.items()]
    return Output(system.to_json(), text, ["mono", "coeff", "dual"], rows)


def cmd_urmatrix(args, cfg: EngineConfig) -> Output:
    ur = universal_r(args.deg_max, cfg.N)
    rows = [[str(c), format_word(zd) or "1", format_word(x) or "1"] for (zd, x), c in ur.items()]
    text = [f"{c} * ({d}) (x) ({y})" for c, d, y in rows]
    return Output(ur.to_json(), text, ["coeff", "dual", "yangian"], rows)


def cmd_zseries(args, cfg: EngineConfig) -> Output:
    K = args.order if args.order is not None else cfg.K
    zs = z_series(cfg.N, K)
    text = [f"Z^({r}) = {z}" for r, z in enumerate(zs)]
    rows = [[f"Z^({r})", c, m] for r, z in enumerate(zs) for c, m in _elem_rows(z)]
    data: dict[str, Any] = {"Z": [z.to_json() for z in zs]}
    if cfg.D is not None:
        zc = z_circ_series(cfg.N, cfg.D, K)
        for p in range(K + 1):
            c = zc.coeff((p,))
            c = c if isinstance(c, AlgElement) else AlgElement.scalar(cfg.N, c, cfg.D)
            text.append(f"Zcirc_{p} = {c}")
            rows.extend([f"Zcirc_{p}", a, m] for a, m in _elem_rows(c))
        data["Zcirc"] = {str(p): zc.coeff((p,)).to_json() if isinstance(zc.coeff((p,)), AlgElement) else str(zc.coeff((p,))) for p in range(K + 1)}
    return Output(data, text, ["series", "coeff", "mono"], rows)


def cmd_antipode(args, cfg: EngineConfig) -> Output:
    if args.of is not None:
        x = parse_element(args.of, cfg.N, cfg.D)
        return _element_output(antipode(x, cfg.D))
    if args.side == "y":
        levels = range(1, cfg.K + 1)
        D = None
    else:
        if cfg.D is None:
            raise YangianError("the dual antipode needs --dual-trunc")
        levels = range(-1, -cfg.D - 1, -1)
        D = cfg.D
    text, rows, data = [], [], {}
    for r in levels:
        for i in range(1, cfg.N + 1):
            for j in range(1, cfg.N + 1):
                name = f"S(T[{r},{i},{j}])"
                s = antipode_gen((r, i, j), cfg.N, D)
                text.append(f"{name} = {s}")
                rows.extend([name, c, m] for c, m in _elem_rows(s))
                data[name] = s.to_json()
    return Output(data, text, ["image_of", "coeff", "mono"], rows)


def parse_spec_list(text: str, n: int, order: int) -> list[RepSpec]:
    """``kind:param,kind:param`` into representation specs."""
    specs = []
    for item in text.split(","):
        kind, sep, param = item.strip().partition(":")
        if not sep or not param:
            raise ParseError(f"expected kind:param, got {item.strip()!r}", text, text.find(item))
        if kind not in KIND_ALIASES:
            raise ParseError(f"unknown representation {kind!r}; choose from {', '.join(sorted(KIND_ALIASES))}", text, text.find(item))
        try:
            value: Any = Fraction(param)
        except ValueError:
            if not param.isidentifier():
                raise ParseError(f"parameter {param!r} is neither a rational nor a variable name", text, text.find(param))
            value = param
        specs.append(RepSpec.make(kind, value, n, order))
    return specs


def cmd_rep(args, cfg: EngineConfig) -> Output:
    specs = parse_spec_list(args.spec, cfg.N, cfg.K)
    x = parse_element(args.apply, cfg.N, cfg.D)
    op = rep_apply(x, specs)
    rows = [
        [" ".join(map(str, row)), " ".join(map(str, col)), str(c)]
        for (row, col), c in sorted(op.entries.items())
    ]
    text = [f"[{r}] <- [{c}]: {v}" for r, c, v in rows] or ["0"]
    return Output(op.to_json(), text, ["row", "col", "coeff"], rows)


def cmd_check(args, cfg: EngineConfig) -> Output:
    kwargs = {"n": cfg.N if args.n_given else None, "D": cfg.D, "K": args.order, "seed": cfg.seed}
    results = sorted(run_suite(args.suite, **kwargs), key=lambda r: r.name)
    failed = sum(not r.passed for r in results)
    text = [r.line() for r in results] + [f"# {len(results) - failed} passed, {failed} failed"]
    rows = [["PASS" if r.passed else "FAIL", r.name, r.detail] for r in results]
    data = {"suite": args.suite, "results": [r.to_json() for r in results], "failed": failed}
    return Output(data, text, ["status", "identity", "detail"], rows, EXIT_FAIL if failed else EXIT_OK)


# ----------------------------------------------------------------------
# argument parsing


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, default=None, help="matrix size N (default 2)")
    common.add_argument("--dual-trunc", type=_nonnegative, default=None, help="dual-degree truncation D")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write the output to this file")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", type=_nonnegative, default=None, help="series order K (default 4)")

    parser = argparse.ArgumentParser(prog="yangian", description="Exact computations in Yangians and their doubles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common, order], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("commute", parents=[common, order], help="commutator of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_commute)

    p = sub.add_parser("pair", parents=[common, order], help="pairing of a Yangian and a dual expression")
    p.add_argument("yangian")
    p.add_argument("dual")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("gram", parents=[common, order], help="Gram matrix of one degree")
    p.add_argument("--deg", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("dual-basis", parents=[common, order], help="dual elements of the basis words")
    p.add_argument("--deg-max", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_dual_basis)

    p = sub.add_parser("urmatrix", parents=[common, order], help="truncated universal R-matrix")
    p.add_argument("--deg-max", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_urmatrix)

    p = sub.add_parser("zseries", parents=[common, order], help="coefficients of Z(u), and Zcirc(v) when D is given")
    p.set_defaults(func=cmd_zseries)

    p = sub.add_parser("antipode", parents=[common, order], help="antipode of the generators or of an expression")
    p.add_argument("--side", choices=("y", "dual"), default="y")
    p.add_argument("--of", default=None, help="expression to apply the antipode to")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("rep", parents=[common, order], help="image of an expression in a tensor product of representations")
    p.add_argument("--spec", required=True, help="comma-separated kind:param, e.g. rho_c:2,sigma_c:u")
    p.add_argument("--apply", required=True, help="expression to represent")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("check", parents=[common, order], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.set_defaults(func=cmd_check)
    return parser


def render(out: Output, cfg: EngineConfig, command: str, fmt: str) -> str:
    if fmt == "json":
        payload = {"config": asdict(cfg), "command": command, "result": out.data}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(cfg.line() + "\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.header)
        writer.writerows(out.rows)
        return buf.getvalue()
    return "\n".join([cfg.line(), *out.text]) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    args.n_given = args.n is not None
    cfg = EngineConfig(
        N=args.n if args.n is not None else 2,
        D=args.dual_trunc,
        K=args.order if args.order is not None else 4,
        seed=args.seed,
    )
    try:
        out = args.func(args, cfg)
    except (YangianError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(out, cfg, args.command, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
