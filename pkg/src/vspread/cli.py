"""Command-line front end.

Exit codes: 0 success, 1 domain error (infeasible f-vector, input not
strongly stable, ...), 2 usage or parse error.  With ``--json`` every
invocation writes exactly one JSON record to stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .betti import dominance_check, graded_betti, render_table
from .core import SpreadContext, count_t_spread, enumerate_t_spread, format_monomial, parse_monomial
from .errors import ClassificationError, ContractError, InvalidMonomialError, SpreadError
from .ideals import ft_vector, lexify, read_ideal
from .macaulay import (
    FTVector,
    binomial_expansion,
    lex_ideal_from_ft_vector,
    t_operator,
    validate_ft_vector,
)
from .sets import (
    is_lex_set,
    lex_segment,
    lex_violation,
    min_of_shadow,
    read_set,
    shadow_0,
    shadow_t,
    stability_violation,
)

log = logging.getLogger("vspread")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _context(args) -> SpreadContext:
    return SpreadContext.parse(args.n, args.t)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _set_result(L):
    return L.to_record(), L.to_text()


def cmd_enumerate(args):
    return _set_result(enumerate_t_spread(_context(args), args.deg))


def cmd_count(args):
    c = count_t_spread(_context(args), args.deg)
    return {"count": c}, f"{c}\n"


def cmd_shadow(args):
    L = read_set(_read(args.setfile), _context(args), args.deg)
    return _set_result(shadow_0(L) if args.classical else shadow_t(L))


def cmd_check_set(args):
    L = read_set(_read(args.setfile), _context(args), args.deg)
    sv = stability_violation(L)
    lv = None if L.degree > L.ctx.d else lex_violation(L)
    lex = is_lex_set(L)
    rec = {
        "strongly_stable": sv is None,
        "lex": lex,
        "stability_witness": None if sv is None else {"monomial": list(sv[0].indices), "missing": list(sv[1].indices)},
        "lex_witness": None if lv is None else list(lv.indices),
    }
    lines = [f"strongly stable: {'yes' if sv is None else 'no'}"]
    if sv is not None:
        lines.append(f"  {sv[1]} is a t-spread exchange of {sv[0]} but is missing")
    lines.append(f"lex: {'yes' if lex else 'no'}")
    if lv is not None:
        lines.append(f"  {lv} is missing")
    return rec, "\n".join(lines) + "\n"


def cmd_segment(args):
    ctx = _context(args)
    return _set_result(lex_segment(parse_monomial(args.monomial, ctx), ctx))


def cmd_segment_min_shadow(args):
    ctx = _context(args)
    m, r = min_of_shadow(parse_monomial(args.monomial, ctx), ctx)
    return {"monomial": list(m.indices), "r": r}, f"{format_monomial(m)} r={r}\n"


def cmd_expand(args):
    e = binomial_expansion(args.a, args.deg)
    return {"a": args.a, **e.to_record()}, f"{args.a} = {e}\n"


def cmd_operator(args):
    v = t_operator(args.a, _context(args), args.deg)
    return {"value": v}, f"{v}\n"


def cmd_fvector(args):
    f = ft_vector(read_ideal(_read(args.idealfile)))
    return {"f": f.to_record()}, f"{f}\n"


def cmd_validate_f(args):
    ctx = _context(args)
    report = validate_ft_vector(FTVector.parse(args.f), ctx)
    if not report:
        raise ClassificationError(report.first_violation.describe(), report)
    return report.to_record(), "valid\n"


def _ideal_result(J):
    return J.to_record(), J.to_text()


def cmd_lexify(args):
    return _ideal_result(lexify(read_ideal(_read(args.idealfile))))


def cmd_from_f(args):
    return _ideal_result(lex_ideal_from_ft_vector(FTVector.parse(args.f), _context(args)))


def cmd_betti(args):
    I = read_ideal(_read(args.idealfile))
    if not args.compare:
        T = graded_betti(I)
        return {"table": T.to_record()}, render_table(T)
    rep = dominance_check(I)
    rec = {
        "table": rep.table.to_record(),
        "lex_table": rep.lex_table.to_record(),
        "dominates": rep.holds,
        "witness": None if rep.witness is None else dict(zip(("i", "j", "beta", "beta_lex"), rep.witness)),
    }
    text = (
        "I:\n" + render_table(rep.table)
        + "\nI^lex:\n" + render_table(rep.lex_table)
        + f"\ndominance: {'holds' if rep.holds else 'FAILS at ' + str(rep.witness)}\n"
    )
    return rec, text


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record on stdout")

    ctxp = _Parser(add_help=False)
    ctxp.add_argument("--n", type=int, required=True, help="number of variables")
    ctxp.add_argument("--t", required=True, help="comma-separated t vector, e.g. 1,0,2")

    p = _Parser(prog="vspread", description="t-spread monomial ideal combinatorics")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("enumerate", cmd_enumerate, [common, ctxp], "list M_{n,l,t}")
    sp.add_argument("--deg", type=int, required=True)
    sp = add("count", cmd_count, [common, ctxp], "|M_{n,l,t}|")
    sp.add_argument("--deg", type=int, required=True)
    sp = add("shadow", cmd_shadow, [common, ctxp], "t-spread (or classical) shadow of a set")
    sp.add_argument("--classical", action="store_true")
    sp.add_argument("--deg", type=int, help="degree, needed only for an empty set")
    sp.add_argument("setfile")
    sp = add("check-set", cmd_check_set, [common, ctxp], "strongly stable / lex tests")
    sp.add_argument("--deg", type=int, help="degree, needed only for an empty set")
    sp.add_argument("setfile")
    sp = add("segment", cmd_segment, [common, ctxp], "initial lex segment of a monomial")
    sp.add_argument("monomial")
    sp = add("segment-min-shadow", cmd_segment_min_shadow, [common, ctxp], "minimum of the segment's shadow")
    sp.add_argument("monomial")
    sp = add("expand", cmd_expand, [common], "binomial expansion of a")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp = add("operator", cmd_operator, [common, ctxp], "the t-spread operator a^(n,l,t)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp = add("fvector", cmd_fvector, [common], "f_t-vector of an ideal file")
    sp.add_argument("idealfile")
    sp = add("validate-f", cmd_validate_f, [common, ctxp], "is f an f_t-vector?")
    sp.add_argument("--f", required=True, help="e.g. 1,6,11,18,0")
    sp = add("lexify", cmd_lexify, [common], "lex ideal with the same f_t-vector")
    sp.add_argument("idealfile")
    sp = add("from-f", cmd_from_f, [common, ctxp], "lex ideal realising an f_t-vector")
    sp.add_argument("--f", required=True)
    sp = add("betti", cmd_betti, [common], "graded Betti table")
    sp.add_argument("--compare", action="store_true", help="also lexify and check dominance")
    sp.add_argument("idealfile")
    return p


def _error_record(kind: str, exc: Exception) -> dict:
    rec = {"type": kind, "class": type(exc).__name__, "message": str(exc)}
    diag = getattr(exc, "diagnostics", None)
    if diag is not None and hasattr(diag, "to_record"):
        rec["diagnostics"] = diag.to_record()
    return {"error": rec}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        rec, text = args.func(args)
    except (UsageError, InvalidMonomialError, ContractError, json.JSONDecodeError) as exc:
        if want_json:
            stdout.write(json.dumps(_error_record("usage", exc)) + "\n")
        print(f"vspread: error: {exc}", file=stderr)
        return 2
    except SpreadError as exc:
        if want_json:
            stdout.write(json.dumps(_error_record("domain", exc)) + "\n")
            print(f"vspread: {exc}", file=stderr)
        else:
            stdout.write(f"{exc}\n")
        return 1
    if args.json:
        stdout.write(json.dumps({"command": args.command, "result": rec}) + "\n")
    else:
        stdout.write(text)
    return 0


def main():
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
