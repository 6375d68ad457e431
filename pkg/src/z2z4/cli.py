"""
Command-line front end.

Matrix files start with a header ``alpha=<a> beta=<b>`` followed by one row
per line: alpha binary digits, ``|``, beta quaternary digits (the bar is
left out when either block is empty).  An argument of the form ``@name``
loads a registered matrix instead of a file; ``-`` reads stdin.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import re
import sys

from .algebra import CodeType, MixedMatrix, MixedVector
from .code import (
    AdditiveCode,
    Monomial,
    codeword_arrays,
    format_monomial,
    gray_arrays,
)
from .config import GuardExceeded, apply_config, load_config, settings
from .constructions import (
    double_additive,
    double_quaternary,
    extended_hamming_parity,
    extended_perfect_z2z4_dual,
    extended_perfect_z4_dual,
    hamming_parity,
    paper_matrix,
    paper_matrix_names,
    perfect_z2z4_dual,
    quadruple_additive,
    quadruple_quaternary,
)
from .duality import dual
from .lattice import eta, intersect, span
from .reproduce import TARGETS, reproduce
from .search import (
    NotFound,
    RefutedByExhaustion,
    SearchTask,
    enumerate_types,
    format_report,
    search,
)
from .verify import THEOREMS, verify_bound_theorem


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formats
# ---------------------------------------------------------------------------

_HEADER = re.compile(r"^alpha=(\d+) beta=(\d+)$")


def parse_matrix(text: str) -> MixedMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("missing header line 'alpha=<a> beta=<b>'")
    m = _HEADER.match(lines[0])
    if not m:
        raise ValueError(f"bad header {lines[0]!r}; expected 'alpha=<a> beta=<b>'")
    a, b = int(m.group(1)), int(m.group(2))
    rows = []
    for n, line in enumerate(lines[1:], 2):
        if a and b:
            if line.count("|") != 1:
                raise ValueError(f"line {n}: expected one '|' separator")
            bits, quats = line.split("|")
        elif a:
            bits, quats = line, ""
        else:
            bits, quats = "", line
        if len(bits) != a or len(quats) != b:
            raise ValueError(f"line {n}: ragged row {line!r} for alpha={a} beta={b}")
        if any(c not in "01" for c in bits):
            raise ValueError(f"line {n}: bad binary digit in {bits!r}")
        if any(c not in "0123" for c in quats):
            raise ValueError(f"line {n}: bad quaternary digit in {quats!r}")
        rows.append(MixedVector(tuple(int(c) for c in bits), tuple(int(c) for c in quats)))
    return MixedMatrix(a, b, rows)


def emit_matrix(M: MixedMatrix) -> str:
    out = [f"alpha={M.alpha} beta={M.beta}"]
    for r in M.rows:
        bits = "".join(map(str, r.bin))
        quats = "".join(map(str, r.quat))
        out.append(f"{bits}|{quats}" if M.alpha and M.beta else bits + quats)
    return "\n".join(out) + "\n"


_PERM = re.compile(r"^((?:\(\d+(?:,\d+)*\))*)((?:!\d+)*)$")


def parse_permutation(text: str, alpha: int, beta: int) -> Monomial:
    """Cycles of 1-based global coordinates plus ``!k`` sign flips."""
    s = text.replace(" ", "")
    if s in ("", "Id"):
        return Monomial.identity(alpha, beta)
    m = _PERM.match(s)
    if not m:
        raise ValueError(f"bad permutation {text!r}")
    cycles = [tuple(int(x) for x in c.split(",")) for c in re.findall(r"\(([^)]*)\)", m.group(1))]
    flips = [int(x) for x in re.findall(r"!(\d+)", m.group(2))]
    for k in flips:
        if not alpha < k <= alpha + beta:
            raise ValueError(f"sign flip !{k} is not on a quaternary coordinate")
    return Monomial.from_cycles(alpha, beta, cycles, flips)


def emit_permutation(m: Monomial) -> str:
    return format_monomial(m)


def parse_type(text: str) -> CodeType:
    m = re.match(r"^\((\d+),(\d+);(\d+),(\d+)(?:;(\d+))?\)$", text.replace(" ", ""))
    if not m:
        raise ValueError(f"bad type {text!r}; expected (alpha,beta;gamma,delta;kappa)")
    vals = [int(x) if x is not None else 0 for x in m.groups()]
    return CodeType(*vals).validate()


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _read_matrix(arg: str) -> MixedMatrix:
    if arg.startswith("@"):
        return paper_matrix(arg[1:])
    text = sys.stdin.read() if arg == "-" else open(arg).read()
    return parse_matrix(text)


def _read_code(arg: str, parity: bool) -> AdditiveCode:
    M = _read_matrix(arg)
    return AdditiveCode.from_parity_check(M) if parity else AdditiveCode(M)


FAMILIES = {
    "hamming": (hamming_parity, 1),
    "extended-hamming": (extended_hamming_parity, 1),
    "z4-extended": (extended_perfect_z4_dual, 2),
    "z2z4-perfect": (perfect_z2z4_dual, 2),
    "z2z4-extended": (extended_perfect_z2z4_dual, 2),
    "double-quaternary": (double_quaternary, "matrix"),
    "quadruple-quaternary": (quadruple_quaternary, "matrix"),
    "double-additive": (double_additive, "matrix"),
    "quadruple-additive": (quadruple_additive, "matrix"),
    "registry": (paper_matrix, "name"),
}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_type(args, out):
    C = _read_code(args.matrix, args.parity_check)
    out.write(f"{C.ctype}\n")
    return 0


def cmd_dual(args, out):
    C = _read_code(args.matrix, args.parity_check)
    out.write(emit_matrix(dual(C).gens))
    return 0


def cmd_gray(args, out):
    C = _read_code(args.matrix, args.parity_check)
    for B, Q in codeword_arrays(C):
        for row in gray_arrays(B, Q):
            out.write("".join(map(str, row)) + "\n")
    return 0


def cmd_span(args, out):
    C1, C2 = _read_code(args.a, args.parity_check), _read_code(args.b, args.parity_check)
    out.write(emit_matrix(span(C1, C2).gens))
    return 0


def cmd_intersect(args, out):
    C1, C2 = _read_code(args.a, args.parity_check), _read_code(args.b, args.parity_check)
    out.write(emit_matrix(intersect(C1, C2).gens))
    return 0


def cmd_eta(args, out):
    C1, C2 = _read_code(args.a, args.parity_check), _read_code(args.b, args.parity_check)
    out.write(f"{eta(C1, C2)}\n")
    return 0


def cmd_construct(args, out):
    if args.family == "list":
        out.write("\n".join(list(FAMILIES) + ["registry names: " + ", ".join(paper_matrix_names())]) + "\n")
        return 0
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[args.family]
    if arity == "matrix":
        if len(args.params) != 1:
            raise UsageError(f"{args.family} takes one matrix argument")
        H = fn(_read_matrix(args.params[0]))
    elif arity == "name":
        if len(args.params) != 1:
            raise UsageError("registry takes one name")
        H = fn(args.params[0])
    else:
        if len(args.params) != arity:
            raise UsageError(f"{args.family} takes {arity} integer parameter(s)")
        try:
            ints = [int(p) for p in args.params]
        except ValueError:
            raise UsageError(f"{args.family} parameters must be integers") from None
        H = fn(*ints)
    out.write(emit_matrix(H))
    return 0


def cmd_transform(args, out):
    M = _read_matrix(args.matrix)
    m = parse_permutation(args.perm, M.alpha, M.beta)
    out.write(emit_matrix(m.apply_matrix(M)))
    return 0


def cmd_search(args, out):
    C1, C2 = _read_code(args.a, args.parity_check), _read_code(args.b, args.parity_check)
    seed = 0 if args.seed is None else args.seed
    if args.target is None and args.eta is None:
        types = enumerate_types(C1, C2, args.mode, args.budget, args.signs, seed, not args.no_prune)
        out.write(format_report(types.values()))
        return 0
    if args.target is not None and args.eta is not None:
        raise UsageError("give either --target or --eta, not both")
    target = parse_type(args.target) if args.target is not None else args.eta
    if isinstance(target, int) and (target < 1 or target & (target - 1)):
        raise UsageError("--eta must be a power of two")
    if isinstance(target, int):
        target = target.bit_length() - 1
    task = SearchTask(C1, C2, target, args.budget, args.mode, args.signs, seed, not args.no_prune)
    res = search(task)
    if isinstance(res, NotFound):
        out.write(f"not found in {res.samples} samples (seed {res.seed})\n")
        return 1
    if isinstance(res, RefutedByExhaustion):
        out.write(f"refuted: none of {res.visited} orbit representatives ({res.orbit_size} monomials) reach it\n")
        return 1
    out.write(res.line() + "\n")
    return 0


_VERIFY_ALIASES = {"nonextended-7-4": ("nonextended", (4, 3))}


def cmd_verify(args, out):
    if args.seed is None:
        raise UsageError("verify requires --seed")
    theorem, params = args.theorem, tuple(args.params)
    if theorem in _VERIFY_ALIASES:
        theorem, default = _VERIFY_ALIASES[theorem]
        params = params or default
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(THEOREMS + tuple(_VERIFY_ALIASES))}")
    if not params:
        raise UsageError(f"{theorem} needs parameters")
    rep = verify_bound_theorem(theorem, params, args.budget, args.seed, args.signs)
    out.write(str(rep) + "\n")
    return 0 if rep.passed else 1


def cmd_reproduce(args, out):
    names = list(TARGETS) if args.target == "all" else [args.target]
    if any(n not in TARGETS for n in names):
        raise UsageError(f"unknown target {args.target!r}; known: all, {', '.join(TARGETS)}")
    ok = True
    for name in names:
        res = reproduce(name, seed=0 if args.seed is None else args.seed)
        out.write(res.text())
        ok &= res.passed
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="z2z4", description="Additive Z2Z4 codes: types, duals, intersections and searches.")
    p.add_argument("--config", help="key=value file with guard_log2, orbit_ceiling_log2, workers")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized steps")
    p.add_argument("--workers", type=int, default=None, help="processes for exhaustive searches")
    p.add_argument("--guard-log2", type=int, default=None, help="largest code enumerated explicitly (log2)")
    p.add_argument("--ceiling-log2", type=int, default=None, help="largest orbit searched exhaustively (log2)")
    sub = p.add_subparsers(dest="command", required=True)
    # --seed is accepted before or after the subcommand
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized steps")

    def code_cmd(name, fn, n_inputs, help):
        sp = sub.add_parser(name, help=help)
        if n_inputs == 1:
            sp.add_argument("matrix", help="matrix file, '-' or @registry-name")
        else:
            sp.add_argument("a", help="first matrix")
            sp.add_argument("b", help="second matrix")
        sp.add_argument("-p", "--parity-check", action="store_true", help="inputs are parity-check matrices")
        sp.set_defaults(func=fn)
        return sp

    code_cmd("type", cmd_type, 1, "print the type (alpha,beta;gamma,delta;kappa)")
    code_cmd("dual", cmd_dual, 1, "print generators of the dual code")
    code_cmd("gray", cmd_gray, 1, "print the binary Gray image, one codeword per line")
    code_cmd("span", cmd_span, 2, "generators of <C1, C2>")
    code_cmd("intersect", cmd_intersect, 2, "generators of C1 n C2")
    code_cmd("eta", cmd_eta, 2, "number of common codewords")

    sp = sub.add_parser("construct", help="emit a parity-check matrix from a family")
    sp.add_argument("family", help="family name, or 'list'")
    sp.add_argument("params", nargs="*")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("transform", help="apply a monomial to every row of a matrix")
    sp.add_argument("perm", help="cycles with optional !k sign flips, e.g. '(1,2)(5,6)!7'")
    sp.add_argument("matrix")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("search", help="search monomials m for the type of C1 n m(C2)", parents=[seeded])
    sp.add_argument("mode", choices=["randomized", "exhaustive"])
    sp.add_argument("a", help="first matrix")
    sp.add_argument("b", help="second matrix")
    sp.add_argument("-p", "--parity-check", action="store_true", help="inputs are parity-check matrices")
    sp.add_argument("--target", help="dual type to reach, e.g. '(8,4;6,1;6)'")
    sp.add_argument("--eta", type=int, help="intersection size to reach")
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--signs", action="store_true", help="include sign flips")
    sp.add_argument("--no-prune", action="store_true", help="disable stabiliser pruning")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="check a bound theorem on seeded samples", parents=[seeded])
    sp.add_argument("theorem", help=", ".join(THEOREMS + tuple(_VERIFY_ALIASES)))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--signs", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reproduce", help="rerun one published result", parents=[seeded])
    sp.add_argument("target", help="all, " + ", ".join(TARGETS))
    sp.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    saved = dataclasses.replace(settings)
    try:
        if args.config:
            apply_config(load_config(args.config))
        overrides = {
            "workers": args.workers,
            "guard_log2": args.guard_log2,
            "orbit_ceiling_log2": args.ceiling_log2,
        }
        apply_config({k: v for k, v in overrides.items() if v is not None})
        return args.func(args, out)
    except (UsageError, ValueError, KeyError, OSError, GuardExceeded) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"z2z4: error: {msg}", file=sys.stderr)
        return 2
    finally:
        apply_config(dataclasses.asdict(saved))


if __name__ == "__main__":
    sys.exit(main())
