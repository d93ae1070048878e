"""Command-line interface.

Exit codes: 0 success (scans that find counterexamples included), 1 usage
error, 2 domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import core, jkseq, oracle, reduce, scans, sylvester
from .errors import SemigroupError

SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class CommandResult:
    command: str
    input: dict
    output: dict
    oracle_checked: bool = False
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        doc = {"schema": SCHEMA, "command": self.command, "input": self.input,
               "oracle_checked": self.oracle_checked}
        doc.update(self.output)
        if timing and self.elapsed_ms is not None:
            doc["elapsed_ms"] = self.elapsed_ms
        return doc

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing))

    @classmethod
    def from_json(cls, text: str) -> "CommandResult":
        doc = json.loads(text)
        if doc.pop("schema") != SCHEMA:
            raise ValueError("unsupported schema version")
        command = doc.pop("command")
        inp = doc.pop("input")
        checked = doc.pop("oracle_checked")
        elapsed = doc.pop("elapsed_ms", None)
        return cls(command, inp, doc, checked, elapsed)


@dataclass
class _Ctx:
    use_oracle: bool = False
    checked: bool = False
    workers: int = 1
    progress: Any = None
    notes: list = field(default_factory=list)


def parse_gens(tokens: list[str]) -> list[int]:
    out = []
    for tok in tokens:
        for piece in tok.replace(",", " ").split():
            try:
                out.append(int(piece))
            except ValueError:
                raise UsageError(f"not an integer: {piece!r}") from None
    if not out:
        raise UsageError("no generators given")
    return out


def _mismatch(what: str, ours, theirs):
    raise SemigroupError(f"oracle disagrees on {what}: core {ours!r}, oracle {theirs!r}")


# -- command bodies -----------------------------------------------------------

def cmd_analyze(args, ctx: _Ctx) -> dict:
    gens = parse_gens(args.gens)
    S = core.normalize(gens)
    gs = core.gaps(S)
    pf = core.pseudo_frobenius(S)
    wilf = core.wilf_check(S)
    if ctx.use_oracle:
        ctx.checked = True
        og, opf = oracle.oracle_gaps(S.generators), oracle.oracle_pf(S.generators)
        if og != gs:
            _mismatch("gaps", gs, og)
        if opf != pf:
            _mismatch("pseudo-Frobenius set", pf.values, opf.values)
    out = {
        "generators": gens,
        "minimal_generators": list(S.generators),
        "gcd": S.gcd,
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": gs.frobenius,
        "genus": gs.genus,
    }
    if args.with_gaps:
        out["gaps"] = list(gs.gaps)
    out["pf"] = list(pf.values)
    out["type"] = pf.type
    out["wilf"] = {"holds": wilf.holds, "n": wilf.embedding_dimension,
                   "green_count": wilf.green_count, "ratio": wilf.ratio_pair}
    return out


def cmd_frobenius(args, ctx: _Ctx) -> dict:
    S = core.normalize(parse_gens(args.gens))
    f = core.frobenius(S)
    if ctx.use_oracle:
        ctx.checked = True
        of = oracle.oracle_frobenius(S.generators)
        if of != f:
            _mismatch("Frobenius number", f, of)
    return {"frobenius": f}


def cmd_gaps(args, ctx: _Ctx) -> dict:
    S = core.normalize(parse_gens(args.gens))
    gs = core.gaps(S)
    if ctx.use_oracle:
        ctx.checked = True
        og = oracle.oracle_gaps(S.generators)
        if og != gs:
            _mismatch("gaps", gs, og)
    return {"gaps": list(gs.gaps), "genus": gs.genus, "frobenius": gs.frobenius}


def cmd_pf(args, ctx: _Ctx) -> dict:
    S = core.normalize(parse_gens(args.gens))
    pf = core.pseudo_frobenius(S)
    if ctx.use_oracle:
        ctx.checked = True
        opf = oracle.oracle_pf(S.generators)
        if opf != pf:
            _mismatch("pseudo-Frobenius set", pf.values, opf.values)
    return {"pf": list(pf.values), "type": pf.type}


def cmd_sylvester(args, ctx: _Ctx) -> dict:
    p = sylvester.pair(args.a1, args.a2)
    nc = sylvester.nc_set(p)
    cs = sylvester.c_set(p)
    dec = sylvester.pair_decomposition(p)
    f = sylvester.two_gen_frobenius(p)
    core_f = core.frobenius(p.semigroup())
    po = sylvester.proposition_po_set(p)
    nc_values = [r.x for r in nc]
    if ctx.use_oracle:
        ctx.checked = True
        og = oracle.oracle_gaps((p.a1, p.a2))
        if list(og.gaps) != nc_values:
            _mismatch("non-compound set", nc_values, og.gaps)
    green = f + 1 - len(nc)
    return {
        "a1": p.a1,
        "a2": p.a2,
        "nc": [{"x": r.x, "k": r.k, "j": r.j} for r in nc],
        "c": [{"x": r.x, "alpha": r.alpha, "beta": r.beta} for r in cs],
        "pairs": [list(c) for c in dec.couples],
        "counts": {"nc": len(nc), "c": len(cs), "formula": sylvester.nc_count(p)},
        "frobenius": f,
        "frobenius_core": core_f,
        "frobenius_agrees": f == core_f,
        "po_set_equals_nc": po == nc_values,
        "green_count": green,
        "two_green_equals_f_plus_1": 2 * green == f + 1,
    }


def cmd_ncrep(args, ctx: _Ctx) -> dict:
    p = sylvester.pair(args.a1, args.a2)
    x = args.x
    out = {"a1": p.a1, "a2": p.a2, "x": x}
    if 0 <= x < p.product and p.contains(x):
        r = sylvester.compound_representation(p, x)
        out.update(kind="member", alpha=r.alpha, beta=r.beta)
    else:
        r = sylvester.nc_representation(p, x)
        w, rr = r.wr()
        out.update(kind="gap", k=r.k, j=r.j, w=w, r=rr)
    return out


def cmd_reduce(args, ctx: _Ctx) -> dict:
    gens = parse_gens(args.gens)
    f, steps = reduce.johnson_frobenius(gens)
    S = core.normalize(gens)
    core_f = core.frobenius(S)
    if ctx.use_oracle:
        ctx.checked = True
        of = oracle.oracle_frobenius(S.generators)
        if of != f:
            _mismatch("Frobenius number", f, of)
    return {
        "frobenius": f,
        "steps": [{"original": list(s.original), "d": s.d, "reduced": list(s.reduced), "pivot": s.pivot}
                  for s in steps],
        "frobenius_core": core_f,
        "agrees": f == core_f,
        "type_preserved": reduce.type_preservation_check(gens),
    }


def cmd_bezout(args, ctx: _Ctx) -> dict:
    cert = reduce.bezout_certificate(parse_gens(args.gens), mode=args.mode)
    return {"generators": list(cert.generators), "coefficients": list(cert.coefficients),
            "target": cert.target, "valid": cert.validate(), "mode": args.mode}


def cmd_conductor(args, ctx: _Ctx) -> dict:
    gens = parse_gens(args.gens)
    b = reduce.conductor_bound(gens)
    return {"m": b.m, "alpha0": b.alpha0, "window_ok": reduce.conductor_window_ok(gens, b)}


def _chain_dict(ch: jkseq.CandidateChain) -> dict:
    return {"values": list(ch.values), "step": ch.step,
            "first_gap_index": ch.first_gap_index, "candidate": ch.candidate}


def cmd_jk(args, ctx: _Ctx) -> dict:
    c = jkseq.jk_of((args.a1, args.a2), args.a3)
    trace = jkseq.stage_trace(c, args.reading)
    holds, witness = jkseq.ert_hypothesis(c)
    up, down = jkseq.candidate_chains(c, trace)
    rep = jkseq.pf_candidates(c)
    ctx.checked = True
    return {
        "context": {"a1": c.a1, "a2": c.a2, "a3": c.a3, "k": c.k, "j": c.j},
        "origin_sequence": list(jkseq.origin_sequence(c).members),
        "stage_trace": {"reading": trace.reading, "m": trace.m,
                        "steps": [{"i": s.i, "kind": s.kind, "k": s.k, "j": s.j} for s in trace.steps]},
        "ert": {"holds": holds, "witness": witness},
        "chains": {"upgrade": _chain_dict(up), "downgrade": _chain_dict(down)},
        "proposed": list(rep.proposed),
        "candidates": list(rep.candidates),
        "rejected": list(rep.rejected),
        "notes": list(rep.notes),
        "oracle_pf": list(rep.oracle_pf),
        "verdict": rep.verdict,
    }


def cmd_family(args, ctx: _Ctx) -> dict:
    ctx.checked = True
    if args.family == "arith":
        return {"family": "arith", **jkseq.family_arith_check(args.a, args.h, args.d)}
    return {"family": "ss", **jkseq.family_ss_check(args.a, args.i)}


def cmd_scan(args, ctx: _Ctx) -> dict:
    if args.scan == "wilf":
        report = scans.wilf_scan(args.max_gen, args.max_dim)
    elif args.scan == "stage2":
        report = jkseq.stage2_scan(args.max_a2, args.max_a3, workers=args.parallel,
                                   reading=args.reading, progress=ctx.progress)
    else:
        report = scans.ert_scan(args.max_a2, args.max_a3, workers=args.parallel, progress=ctx.progress)
        ctx.checked = True
    return report.to_dict()


COMMANDS = {
    "analyze": cmd_analyze, "frobenius": cmd_frobenius, "gaps": cmd_gaps, "pf": cmd_pf,
    "sylvester": cmd_sylvester, "ncrep": cmd_ncrep, "reduce": cmd_reduce, "bezout": cmd_bezout,
    "conductor": cmd_conductor, "jk": cmd_jk, "family": cmd_family, "scan": cmd_scan,
}


# -- parser -------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p.add_argument("--oracle", action="store_true", default=argparse.SUPPRESS,
                   help="cross-check against the brute-force sieve")
    p.add_argument("--seed-free", action="store_true", default=argparse.SUPPRESS,
                   help="reserved; all computation is deterministic")
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                   help="include elapsed_ms in the output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="sgf", description="Numerical semigroups of small embedding dimension.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    for name, helptext in (("analyze", "full report"), ("frobenius", "Frobenius number"),
                           ("gaps", "gap set and genus"), ("pf", "pseudo-Frobenius numbers and type"),
                           ("reduce", "Johnson reduction trace"), ("bezout", "Bezout certificate"),
                           ("conductor", "least alpha0 with alpha*gcd in S' for all alpha >= alpha0")):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("gens", nargs="+", help="generators, comma- or space-separated")
        if name == "analyze":
            sp.add_argument("--with-gaps", action="store_true", help="include the full gap list")
        if name == "bezout":
            sp.add_argument("--mode", choices=("fold", "semigroup"), default="fold")

    sp = sub.add_parser("sylvester", help="NC/C decomposition of <a1, a2>", parents=[common])
    sp.add_argument("a1", type=int)
    sp.add_argument("a2", type=int)

    sp = sub.add_parser("ncrep", help="(k, j) or (alpha, beta) representation of x", parents=[common])
    sp.add_argument("a1", type=int)
    sp.add_argument("a2", type=int)
    sp.add_argument("x", type=int)

    sp = sub.add_parser("jk", help="third-generator analysis over <a1, a2>", parents=[common])
    sp.add_argument("a1", type=int)
    sp.add_argument("a2", type=int)
    sp.add_argument("a3", type=int)
    sp.add_argument("--reading", choices=("raw", "cumulative"), default="raw")

    fam = sub.add_parser("family", help="closed-form families", parents=[common])
    fsub = fam.add_subparsers(dest="family", parser_class=_Parser, required=True)
    fa = fsub.add_parser("arith", help="<a, h*a + d, h*a + 2d>", parents=[common])
    fa.add_argument("a", type=int)
    fa.add_argument("h", type=int)
    fa.add_argument("d", type=int)
    fs = fsub.add_parser("ss", help="<a, a + 1, i*a + 3>", parents=[common])
    fs.add_argument("a", type=int)
    fs.add_argument("i", type=int)

    scan = sub.add_parser("scan", help="exhaustive sweeps", parents=[common])
    ssub = scan.add_subparsers(dest="scan", parser_class=_Parser, required=True)
    sw = ssub.add_parser("wilf", help="Wilf inequality sweep", parents=[common])
    sw.add_argument("--max-gen", type=int, required=True)
    sw.add_argument("--max-dim", type=int, required=True)
    for name, helptext in (("stage2", "stage-2 conjecture sweep"), ("ert", "starter-candidate containment sweep")):
        sp = ssub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("--max-a2", type=int, required=True)
        sp.add_argument("--max-a3", type=int, required=True)
        sp.add_argument("--parallel", type=int, default=1, help="worker threads")
        if name == "stage2":
            sp.add_argument("--reading", choices=("raw", "cumulative"), default="raw")
    return parser


# -- rendering ------------------------------------------------------------------

def _render_text(result: CommandResult) -> str:
    out = result.output
    if result.command == "frobenius":
        return str(out["frobenius"])
    lines = []
    for key, value in out.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            for k2, v2 in value.items():
                lines.append(f"  {k2}: {_fmt(v2)}")
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, list) and v and isinstance(v[0], dict):
        return "\n    " + "\n    ".join(json.dumps(x) for x in v)
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    if v is None:
        return "-"
    return str(v)


def _progress_printer(label: str):
    last = [-1]

    def report(done: int, total: int) -> None:
        pct = (100 * done) // max(total, 1)
        if pct // 10 != last[0] // 10 or done == total:
            last[0] = pct
            print(f"[{label}] {done}/{total} units", file=sys.stderr)

    return report


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    ctx = _Ctx(use_oracle=getattr(args, "oracle", False))
    if args.command == "scan":
        ctx.progress = _progress_printer(f"scan {args.scan}")
    # worker count is an execution detail, not an input: output must not depend on it
    inp = {k: v for k, v in vars(args).items()
           if k not in ("json", "oracle", "seed_free", "timing", "command", "parallel")}
    start = time.perf_counter()
    try:
        output = COMMANDS[args.command](args, ctx)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except SemigroupError as exc:
        print(f"sgf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"sgf: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - start) * 1000.0
    result = CommandResult(args.command, inp, output, ctx.checked, round(elapsed, 3))
    timing = getattr(args, "timing", False)
    if getattr(args, "json", False):
        print(result.to_json(timing))
    else:
        print(_render_text(result))
        if timing:
            print(f"elapsed_ms: {result.elapsed_ms}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
