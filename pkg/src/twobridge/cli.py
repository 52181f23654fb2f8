"""Command-line front end.

Subcommands wrap the library one to one, with no logic of their own:

    classify  P/Q        classification record as JSON
    cf        P/Q        continued-fraction expansions as JSON
    stats     P/Q        braid/diagram statistics record as JSON
    diagram   P/Q        crossing-level JSON export or an SVG schematic
    tabulate             one row per canonical representative, CSV/JSONL,
                         with summary figures next to the output file
    verify               run every exhaustive property suite

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd
from pathlib import Path

from . import braidstats, classify, contfrac, diagram, verify
from .contfrac import Rational


class UsageError(Exception):
    pass


def parse_query(args: list[str]) -> Rational:
    """Accept 'P/Q' or two integers; normalize q mod p, insist on coprimality."""
    if len(args) == 1 and "/" in args[0]:
        head, _, tail = args[0].partition("/")
        parts = [head, tail]
    else:
        parts = args
    if len(parts) != 2:
        raise UsageError(f"expected P/Q or two integers, got {args!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"could not parse integers from {args!r}") from None
    if p < 2:
        raise UsageError(f"p must be at least 2, got {p}")
    q %= p
    if q == 0:
        raise UsageError(f"q = 0 mod p does not name a two-bridge link ({p}/{q})")
    if gcd(p, q) != 1:
        raise UsageError(f"{p} and {q} are not coprime (gcd {gcd(p, q)})")
    return Rational(p, q)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(ns) -> int:
    r = parse_query(ns.query)
    _print_json(classify.classification_record(classify.TwoBridge(r)))
    return 0


def cmd_cf(ns) -> int:
    r = parse_query(ns.query)
    picked = [k for k in ("neg", "reg", "even", "dual") if getattr(ns, k)]
    wanted = picked or ["neg", "reg", "even", "dual"]
    if "even" in picked and r.q % 2 == 0:
        raise UsageError(
            f"the all-even expansion needs q odd; try the mirror {r.p}/{r.p - r.q}"
        )
    out: dict = {"p": r.p, "q": r.q}
    nc = contfrac.neg_cf(r)
    if "neg" in wanted:
        out["neg"] = nc
    if "reg" in wanted:
        out["reg_odd"] = contfrac.reg_cf_odd(r)
    if "even" in wanted:
        out["even_blocks"] = (
            contfrac.murasugi_even_cf(r) if r.q % 2 else None
        )
    if "dual" in wanted:
        out["dual"] = contfrac.riemenschneider_dual(nc)
    _print_json(out)
    return 0


def cmd_stats(ns) -> int:
    r = parse_query(ns.query)
    _print_json(braidstats.stats_record(r))
    return 0


def cmd_diagram(ns) -> int:
    r = parse_query(ns.query)
    if ns.svg:
        from . import render  # matplotlib import deferred to the path that needs it

        out = ns.out or f"twobridge_{r.p}_{r.q}.svg"
        render.save_box_layout(contfrac.reg_cf_odd(r), r.p, r.q, out)
        print(out)
        return 0
    if ns.builder == "murasugi":
        if r.q % 2 == 0:
            raise UsageError(
                f"the tangle builder needs q odd; try the mirror {r.p}/{r.p - r.q}"
            )
        d = diagram.build_murasugi(contfrac.murasugi_even_cf(r))
    else:
        d = diagram.build_standard(contfrac.reg_cf_odd(r))
    record = diagram.diagram_record(d)
    record["p"] = r.p
    record["q"] = r.q
    _print_json(record)
    return 0


def tabulation_rows(max_p: int) -> list[dict]:
    """One row per canonical isotopy representative, ordered by (p, q)."""
    rows = []
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            if pow(q, -1, p) < q:
                continue  # the inverse representative carries the row
            r = Rational(p, q)
            tb = classify.TwoBridge(r)
            cls = classify.classify(tb)
            st, t, _ = braidstats.stats_for(r)
            rows.append(
                {
                    "p": p,
                    "q": q,
                    "neg_cf": list(cls.neg_cf),
                    "even_cf": classify.is_even_cf(list(cls.neg_cf)),
                    "status": cls.status,
                    "b": st.b,
                    "e": st.e,
                    "s": st.s,
                    "w": st.w,
                    "d_plus": st.d_plus,
                    "d_minus": st.d_minus,
                    "r_plus": st.r_plus,
                    "r_minus": st.r_minus,
                    "in_O": classify.in_lisca_O(tb) is not None,
                }
            )
    return rows


CSV_COLUMNS = [
    "p", "q", "neg_cf", "even_cf", "status", "b", "e", "s", "w",
    "d_plus", "d_minus", "r_plus", "r_minus", "in_O",
]


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(row) + "\n" for row in rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        out = dict(row)
        out["neg_cf"] = json.dumps(row["neg_cf"], separators=(",", ":"))
        writer.writerow([out[col] for col in CSV_COLUMNS])
    return buf.getvalue()


def cmd_tabulate(ns) -> int:
    if ns.max_p < 2:
        raise UsageError("--max-p must be at least 2")
    rows = tabulation_rows(ns.max_p)
    text = format_rows(rows, ns.format)
    if ns.out is None:
        sys.stdout.write(text)
        return 0
    out = Path(ns.out)
    out.write_text(text)
    written = [str(out)]
    if not ns.no_figures:
        from . import render

        status_path = str(out.with_name(out.stem + "_status.png"))
        braid_path = str(out.with_name(out.stem + "_braid_index.png"))
        render.save_status_figure(rows, status_path)
        render.save_braid_index_figure(rows, braid_path)
        written += [status_path, braid_path]
    print("\n".join(written))
    return 0


def cmd_verify(ns) -> int:
    if ns.max_p < 2:
        raise UsageError("--max-p must be at least 2")
    results = verify.run_all(ns.max_p)
    failed = 0
    for res in results:
        mark = "PASS" if res.ok else "FAIL"
        line = f"{mark} {res.name}: {res.checked} cases"
        if not res.ok:
            failed += 1
            line += f", {res.failures} failures; first: {res.first_counterexample}"
        print(line)
    print(f"{len(results) - failed}/{len(results)} property suites passed (max_p={ns.max_p})")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Quasipositivity and diagram statistics of two-bridge links K(p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_query(sp):
        sp.add_argument("query", nargs="+", help="the fraction, as P/Q or as two integers")

    sp = sub.add_parser("classify", help="decide quasipositivity of K(p,q)")
    add_query(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("cf", help="continued-fraction expansions of p/q")
    add_query(sp)
    sp.add_argument("--neg", action="store_true", help="subtractive expansion, entries >= 2")
    sp.add_argument("--reg", action="store_true", help="odd-length regular expansion")
    sp.add_argument("--even", action="store_true", help="all-even blocks of p/(p-q), q odd")
    sp.add_argument("--dual", action="store_true", help="subtractive expansion of p/(p-q)")
    sp.set_defaults(fn=cmd_cf)

    sp = sub.add_parser("stats", help="braid index, exponent sum and diagram statistics")
    add_query(sp)
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("diagram", help="explicit diagram export")
    add_query(sp)
    sp.add_argument("--json", action="store_true", help="crossing-level JSON (default)")
    sp.add_argument("--svg", action="store_true", help="render the box-layout schematic")
    sp.add_argument("--out", help="output path for --svg")
    sp.add_argument(
        "--builder",
        choices=["standard", "murasugi"],
        default="standard",
        help="which construction to export with --json",
    )
    sp.set_defaults(fn=cmd_diagram)

    sp = sub.add_parser("tabulate", help="tabulate canonical representatives up to a bound")
    sp.add_argument("--max-p", type=int, required=True)
    sp.add_argument("--out", help="output file; stdout when omitted")
    sp.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    sp.add_argument("--no-figures", action="store_true", help="skip the summary figures")
    sp.set_defaults(fn=cmd_tabulate)

    sp = sub.add_parser("verify", help="run the exhaustive property suites")
    sp.add_argument("--max-p", type=int, required=True)
    sp.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return ns.fn(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
