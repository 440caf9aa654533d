"""
Command-line front end.

Exit codes: 0 when every requested check passes, 1 on a verification failure,
2 on usage or parse errors.  ``--json`` turns the payload into a single JSON
document with keys ``command``, ``inputs``, ``results`` and ``pass``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from . import cayley, curves, qconstants, weyl
from .report import Report
from .rootsys import ConfigurationError, cominuscule_nodes


@dataclass
class CommandOutcome:
    exit_code: int
    payload: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    p = _Parser(prog="cominq", description="Cominuscule Schubert calculus toolkit.",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def space_cmd(name, help, word=False):
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.add_argument("--space", required=True, help="Gr(m,n), LG(n), OG(n), Q(n), E6 or E7")
        if word:
            sp.add_argument("--word", required=True, help="comma-separated node indices")
        return sp

    space_cmd("roots", "root counts, highest root, cominuscule nodes")
    sp = space_cmd("wp", "minimal coset representatives")
    sp.add_argument("--list", action="store_true", help="list every representative's word")
    space_cmd("dist", "degree distance of the coset of a word", word=True)
    sp = space_cmd("gamma", "iterated degree-one curve neighborhood", word=True)
    sp.add_argument("--d", type=int, required=True)
    space_cmd("chain", "chain of lines from the base point", word=True)

    sp = sub.add_parser("verify", help="verification suites", parents=[common])
    vsub = sp.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    for suite in ("dx3", "all"):
        v = vsub.add_parser(suite, parents=[common])
        v.add_argument("--space", required=True)

    sp = sub.add_parser("cancel", help="cancellation sums over degree sequences", parents=[common])
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--dmax", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)

    sp = sub.add_parser("assemble", help="oracle versus matrix-chain structure constants", parents=[common])
    sp.add_argument("--basis", type=int, required=True)
    sp.add_argument("--dmax", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("qk", help="quantum K-theory of the Cayley plane", parents=[common])
    qsub = sp.add_subparsers(dest="qk_command", required=True, parser_class=_Parser)
    m = qsub.add_parser("mult", parents=[common])
    m.add_argument("--table", default=None)
    m.add_argument("left")
    m.add_argument("right")
    v = qsub.add_parser("verify", parents=[common])
    v.add_argument("--table", default=None)
    return p


def _word(space: curves.CominSpace, text: str) -> weyl.WeylElement:
    return weyl.min_rep(weyl.from_word(space.root_system, weyl.parse_word(text)), space.node)


def _fmt(u: weyl.WeylElement) -> str:
    return weyl.format_word(weyl.reduced_word(u))


def _cmd_roots(a):
    sp = curves.parse_space(a.space)
    rs = sp.root_system
    res = {"type": rs.type_label, "rank": rs.rank, "positive_roots": len(rs.positive_roots),
           "highest_root": list(rs.highest_root), "cominuscule_nodes": sorted(cominuscule_nodes(rs)),
           "node": sp.node}
    text = [f"type {rs.type_label}{'' if rs.type_label.startswith('E') else rs.rank}",
            f"positive roots {len(rs.positive_roots)}",
            f"highest root {','.join(map(str, rs.highest_root))}",
            f"cominuscule nodes {','.join(map(str, res['cominuscule_nodes']))}"]
    return {"space": a.space}, res, True, text


def _cmd_wp(a):
    sp = curves.parse_space(a.space)
    wp = sp.wp
    res = {"size": len(wp), "dim": sp.dim, "ranks": wp.ranks()}
    text = [f"|W^P| {len(wp)}", f"dim {sp.dim}", f"ranks {' '.join(map(str, wp.ranks()))}"]
    if a.list:
        res["reps"] = [{"length": u.length, "word": weyl.format_word(w)} for u, w in zip(wp.reps, wp.words)]
        text += [f"{u.length:3d}  {weyl.format_word(w) or 'e'}" for u, w in zip(wp.reps, wp.words)]
    return {"space": a.space, "list": a.list}, res, True, text


def _cmd_dist(a):
    sp = curves.parse_space(a.space)
    u = _word(sp, a.word)
    d = curves.deg_dist(sp, u)
    return {"space": a.space, "word": a.word}, {"rep": _fmt(u), "deg_dist": d}, True, [str(d)]


def _cmd_gamma(a):
    sp = curves.parse_space(a.space)
    g = curves.gamma(sp, _word(sp, a.word), a.d)
    res = {"word": _fmt(g), "length": g.length, "full": g == sp.wp.u_max}
    return {"space": a.space, "word": a.word, "d": a.d}, res, True, [res["word"]]


def _cmd_chain(a):
    sp = curves.parse_space(a.space)
    chain = [_fmt(u) for u in curves.line_chain(sp, _word(sp, a.word))]
    return {"space": a.space, "word": a.word}, {"chain": chain}, True, [c or "e" for c in chain]


def _cmd_verify(a):
    sp = curves.parse_space(a.space)
    rep = curves.verify_dx3(sp) if a.suite == "dx3" else curves.verify_all(sp)
    return {"suite": a.suite, "space": a.space}, rep.to_json(), rep.passed, rep.lines()


def _cmd_cancel(a):
    if a.d < 1 or a.dmax < 0 or a.trials < 1:
        raise UsageError("need --d >= 1, --dmax >= 0, --trials >= 1")
    rng = random.Random(a.seed)
    sums = []
    for _ in range(a.trials):
        values = [rng.randint(-1000, 1000) for _ in range(a.dmax + 1)]
        sums.append(qconstants.cancellation_sum(a.d, a.dmax, values.__getitem__))
    expect_zero = a.d > a.dmax
    ok = all(s == 0 for s in sums) if expect_zero else True
    res = {"sums": sums, "expect_zero": expect_zero}
    text = [" ".join(map(str, sums))]
    return {"d": a.d, "dmax": a.dmax, "seed": a.seed, "trials": a.trials}, res, ok, text


def _cmd_assemble(a):
    if a.basis < 1 or a.dmax < 0:
        raise UsageError("need --basis >= 1 and --dmax >= 0")
    t = qconstants.random_tables(a.basis, a.dmax, a.seed)
    checked, mismatches = 0, []
    n = a.basis
    for u in range(n):
        for v in range(n):
            for w in range(n):
                for d in range(a.dmax + 1):
                    x = qconstants.assemble_direct(t, u, v, w, d).value
                    y = qconstants.assemble_matrix(t, u, v, w, d)
                    z = sum(s.sign * qconstants.chain_euler(t, s, u, v, w)
                            for s in qconstants.enumerate_sequences(d))
                    checked += 1
                    if not x == y == z:
                        mismatches.append({"u": u, "v": v, "w": w, "d": d,
                                           "direct": x, "matrix": y, "chain": z})
    res = {"checked": checked, "mismatches": mismatches}
    text = [f"{checked} constants, {len(mismatches)} mismatches"]
    return {"basis": a.basis, "dmax": a.dmax, "seed": a.seed}, res, not mismatches, text


def _cmd_qk(a):
    table = cayley.load_table(a.table)
    path = a.table or os.environ.get("COMINQ_TABLE") or "cominq/data/qk_e6p6.tbl"
    if a.qk_command == "mult":
        x, y = cayley.parse_expr(a.left), cayley.parse_expr(a.right)
        prod = str(cayley.multiply(table, x, y))
        return {"table": path, "left": a.left, "right": a.right}, {"product": prod}, True, [prod]
    rep = Report()
    rep.extend(cayley.verify_associativity(table))
    rep.extend(cayley.verify_degree_bound(table))
    e6 = curves.parse_space("E6")
    top = max(e.max_q_degree for e in table.entries.values())
    rep.add("degree_equals_diameter", top == curves.diameter(e6),
            f"table {top}, diameter {curves.diameter(e6)}")
    rep.extend(cayley.verify_codim_sign(table))
    rep.extend(cayley.link_labels(table, e6.wp))
    return {"table": path}, rep.to_json(), rep.passed, rep.lines()


_COMMANDS = {"roots": _cmd_roots, "wp": _cmd_wp, "dist": _cmd_dist, "gamma": _cmd_gamma,
             "chain": _cmd_chain, "verify": _cmd_verify, "cancel": _cmd_cancel,
             "assemble": _cmd_assemble, "qk": _cmd_qk}


def _command_name(a) -> str:
    if a.command == "verify":
        return f"verify {a.suite}"
    if a.command == "qk":
        return f"qk {a.qk_command}"
    return a.command


def run(argv: list[str]) -> CommandOutcome:
    parser = _build_parser()
    want_json = "--json" in argv
    try:
        args = parser.parse_args(argv)
        inputs, results, ok, text = _COMMANDS[args.command](args)
    except SystemExit as e:   # --help
        return CommandOutcome(int(e.code or 0), "")
    except UsageError as e:
        return _failure(want_json, str(e))
    except (ConfigurationError, ValueError, IndexError, OSError) as e:
        return _failure(want_json, f"cominq: error: {e}")
    if want_json:
        doc = {"command": _command_name(args), "inputs": inputs, "results": results, "pass": ok}
        return CommandOutcome(0 if ok else 1, json.dumps(doc, indent=2))
    return CommandOutcome(0 if ok else 1, "\n".join(text))


def _failure(want_json: bool, message: str) -> CommandOutcome:
    if want_json:
        doc = {"command": None, "inputs": None, "results": {"error": message}, "pass": False}
        return CommandOutcome(2, json.dumps(doc, indent=2))
    return CommandOutcome(2, message)


def main(argv: list[str] | None = None) -> int:
    out = run(sys.argv[1:] if argv is None else argv)
    if out.payload:
        stream = sys.stdout if out.exit_code != 2 or out.payload.startswith("{") else sys.stderr
        print(out.payload, file=stream)
    return out.exit_code
