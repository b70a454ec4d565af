"""Command line front end.

Subcommands: orbits, words, encode, verify, sequence.  Data goes to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 state budget exceeded.  In json and csv output every count
is a decimal string so consumers never round large values.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bridge, formulas, orbits, words
from .budget import BudgetExceeded
from .residues import GroupSpec, PairState

ENV_BUDGET = "ORBITLAB_BUDGET"


def format_state(state: PairState) -> str:
    """Rows as digit strings, row i = g_i then k_i, joined by spaces."""
    if state.spec.n == 0:
        return "-"
    sep = "" if all(d <= 10 for d in state.spec.moduli) else ":"
    return " ".join(f"{gi}{sep}{ki}" for gi, ki in state.rows())


def _row_strings(state: PairState) -> list[str]:
    sep = "" if all(d <= 10 for d in state.spec.moduli) else ":"
    return [f"{gi}{sep}{ki}" for gi, ki in state.rows()]


def _resolve_budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(ENV_BUDGET)
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {env!r}") from None


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def cmd_orbits(args) -> int:
    budget = _resolve_budget(args)
    spec = GroupSpec.uniform(args.p, args.n)
    if args.method == "formula":
        count = formulas.r_formula(args.p, args.n)
    elif args.method == "bfs":
        count = orbits.count_orbits_bfs(spec, budget).orbit_count
    elif args.method == "canonical":
        count = orbits.count_orbits_canonical(spec, budget).orbit_count
    else:
        count = orbits.count_orbits_burnside(spec).orbit_count

    if not args.list:
        if args.format == "text":
            print(count)
        elif args.format == "csv":
            _emit_csv(["p", "n", "method", "orbit_count"],
                      [[str(args.p), str(args.n), args.method, str(count)]])
        else:
            _emit_json({"p": args.p, "n": args.n, "method": args.method,
                        "orbit_count": str(count)})
        return 0

    summaries = orbits.orbit_summaries(spec, budget)
    stab = [("-" if s.stabilizer_order is None else str(s.stabilizer_order))
            for s in summaries]
    if args.format == "text":
        for s, st in zip(summaries, stab):
            print(f"{format_state(s.representative)} {s.size} {st}")
    elif args.format == "csv":
        _emit_csv(["representative", "size", "stabilizer_order"],
                  [[format_state(s.representative), str(s.size), st]
                   for s, st in zip(summaries, stab)])
    else:
        _emit_json({
            "p": args.p, "n": args.n, "method": args.method,
            "orbit_count": str(count),
            "orbits": [{"representative": format_state(s.representative),
                        "size": str(s.size), "stabilizer_order": st}
                       for s, st in zip(summaries, stab)]})
    return 0


def cmd_words(args) -> int:
    budget = _resolve_budget(args)
    if args.list:
        listed = words.enumerate_words(args.m, budget)
        if args.format == "text":
            for w in listed:
                print(w)
        elif args.format == "csv":
            _emit_csv(["word"], [[str(w)] for w in listed])
        else:
            _emit_json({"m": args.m, "count": str(len(listed)),
                        "words": [str(w) for w in listed]})
        return 0

    count = words.count_words(args.m)
    if args.format == "text":
        print(count)
    elif args.format == "csv":
        _emit_csv(["m", "count"], [[str(args.m), str(count)]])
    else:
        _emit_json({"m": args.m, "count": str(count)})
    return 0


def cmd_encode(args) -> int:
    word = words.word_from_string(args.word)
    if not word.letters:
        raise ValueError("cannot encode the empty word")
    state = bridge.encode_word(word)
    canon = orbits.canonical_form(state)
    if args.format == "text":
        print(f"rows: {format_state(state)}")
        print(f"canonical: {format_state(canon)}")
    elif args.format == "csv":
        _emit_csv(["word", "rows", "canonical"],
                  [[str(word), format_state(state), format_state(canon)]])
    else:
        _emit_json({"word": str(word), "rows": _row_strings(state),
                    "canonical": _row_strings(canon)})
    return 0


def cmd_verify(args) -> int:
    budget = _resolve_budget(args)
    if args.m_max < 1:
        raise ValueError(f"m-max must be >= 1, got {args.m_max}")
    rows = []
    all_ok = True
    for m in range(1, args.m_max + 1):
        spec = GroupSpec.uniform(2, m)
        bfs = orbits.count_orbits_bfs(spec, budget).orbit_count
        can = orbits.count_orbits_canonical(spec, budget).orbit_count
        bur = orbits.count_orbits_burnside(spec).orbit_count
        r = formulas.r_formula(2, m)
        report = bridge.verify_bridge(m, budget)

        methods_ok = bfs == can == bur
        formula_ok = bfs == r and formulas.r_p2_product(m) == r
        words_ok = words.count_words(m) == r and report.word_count == r
        bridge_ok = (report.is_injective_on_orbits
                     and report.is_surjective_on_orbits)
        ok = methods_ok and formula_ok and words_ok and bridge_ok
        all_ok = all_ok and ok
        flag = lambda b: "PASS" if b else "FAIL"
        rows.append([str(m), flag(methods_ok), flag(formula_ok),
                     flag(words_ok), flag(bridge_ok), flag(ok), str(r)])

    header = ["m", "methods", "formula", "words", "bridge", "result", "r"]
    if args.format == "text":
        print(" ".join(header))
        for row in rows:
            print(" ".join(row))
    elif args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_json([dict(zip(header, row)) for row in rows])
    return 0 if all_ok else 1


def cmd_sequence(args) -> int:
    table = formulas.sequence_table(args.p, args.n_max)
    if args.format == "text":
        for n, r in table:
            print(f"{n} {r}")
    elif args.format == "csv":
        _emit_csv(["n", "r"], [[str(n), str(r)] for n, r in table])
    else:
        _emit_json([{"n": n, "r": str(r)} for n, r in table])
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--format", choices=["text", "json", "csv"],
                     default="text", help="output format (default text)")
    sub.add_argument("--budget", type=int, default=None,
                     help=f"state budget cap (default {ENV_BUDGET} or 2^28)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitlab",
        description="Exact orbit censuses over Z_p^n, restricted growth "
                    "words, and the bit-row encoding between them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbits = sub.add_parser("orbits", help="count or list orbit classes")
    p_orbits.add_argument("--p", type=int, required=True)
    p_orbits.add_argument("--n", type=int, required=True)
    p_orbits.add_argument("--method", default="bfs",
                          choices=["bfs", "canonical", "burnside", "formula"])
    p_orbits.add_argument("--list", action="store_true",
                          help="print one orbit summary per line")
    _add_common(p_orbits)

    p_words = sub.add_parser("words", help="count or list restricted growth words")
    p_words.add_argument("--m", type=int, required=True)
    p_words.add_argument("--list", action="store_true")
    _add_common(p_words)

    p_encode = sub.add_parser("encode", help="encode a word as a bit matrix")
    p_encode.add_argument("word", help="digit string such as 234")
    _add_common(p_encode)

    p_verify = sub.add_parser("verify", help="cross-check every route for m <= m-max")
    p_verify.add_argument("--m-max", dest="m_max", type=int, required=True)
    _add_common(p_verify)

    p_seq = sub.add_parser("sequence", help="emit the orbit count table")
    p_seq.add_argument("--p", type=int, required=True)
    p_seq.add_argument("--n-max", dest="n_max", type=int, required=True)
    _add_common(p_seq)

    return parser


_HANDLERS = {
    "orbits": cmd_orbits,
    "words": cmd_words,
    "encode": cmd_encode,
    "verify": cmd_verify,
    "sequence": cmd_sequence,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
