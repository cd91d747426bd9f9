"""Command line front end.

Exit status: 0 when the command succeeded and the checked property holds,
1 when the property fails (not Euclidean, obstruction found, violations,
minimality failure), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import axes, crossing, euclid, family
from .prefcore import ProfileError, read_profile, serialize_profile

SHOW_AXES = 5


def _fmt(seq) -> str:
    return " ".join(str(x) for x in seq)


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_recognize(args) -> int:
    p = read_profile(args.profile)
    out = [f"profile: {p.n} voters, {p.m} alternatives"]

    found = axes.enumerate_axes(p, args.axis_cap)
    if found:
        more = "+" if found.truncated else ""
        noun = "axis" if len(found) == 1 and not more else "axes"
        out.append(f"single-peaked: yes ({len(found)}{more} canonical {noun}, mirror images identified)")
        for ax in found.axes[:SHOW_AXES]:
            out.append(f"  axis: {_fmt(ax)}")
        if len(found) > SHOW_AXES:
            out.append(f"  ... {len(found) - SHOW_AXES} more")
    else:
        out.append("single-peaked: no")

    order = crossing.find_sc_order(p)
    if order is None:
        out.append("single-crossing: no")
        out.append("  order: NONE")
    else:
        out.append("single-crossing: yes")
        out.append(f"  order: {_fmt(order)}")

    res = euclid.recognize_euclidean(p, args.axis_cap)
    if res.status is euclid.Status.EUCLIDEAN:
        out.append(f"euclidean: yes (axis {_fmt(res.axis)}, {res.axes_tried} axes tried)")
        out.extend("  " + line for line in euclid.serialize_embedding(res.embedding).splitlines())
    elif res.status is euclid.Status.NOT_EUCLIDEAN:
        out.append(f"euclidean: NO ({res.axes_tried} axes tried, all infeasible)")
        for c in res.certificates:
            used = sum(1 for y in c.certificate if y)
            out.append(f"  axis {_fmt(c.axis)}: infeasible, certificate combines {used} of {len(c.system)} rows")
    else:
        out.append(f"euclidean: UNKNOWN (axis cap {args.axis_cap} reached, {res.axes_tried} axes infeasible)")
    print("\n".join(out))
    return 0 if res.status is euclid.Status.EUCLIDEAN else 1


def cmd_witness(args) -> int:
    p = read_profile(args.profile)
    if args.property == "sp":
        w = axes.find_sp_obstruction(p)
        if w is None:
            print("NONE")
            return 0
        print(f"{w.kind}: voters {_fmt(w.voters)}; alternatives {_fmt(w.alternatives)}")
        return 1
    w = crossing.find_sc_obstruction(p)
    if w is None:
        print("NONE")
        return 0
    pairs = " ".join(f"({a},{b})" for a, b in w.pairs)
    print(f"{w.kind}: voters {_fmt(w.voters)}; pairs {pairs}")
    return 1


def cmd_generate(args) -> int:
    _write(serialize_profile(family.gen_profile(args.k)), args.output)
    return 0


def cmd_embed(args) -> int:
    _write(euclid.serialize_embedding(family.gen_embedding(args.k, args.s)), args.output)
    return 0


def cmd_verify(args) -> int:
    p = read_profile(args.profile)
    e = euclid.read_embedding(args.embedding)
    rep = euclid.verify_embedding(p, e, euclid.Mode(args.mode))
    if rep.ok:
        print("OK")
        return 0
    print(f"FAIL: {len(rep.violations)} violations")
    for v, a, b in rep.violations:
        print(f"  voter {v}: prefers {a} to {b}, but {a} is not strictly closer")
    return 1


def cmd_minimality(args) -> int:
    rep = family.minimality_check(args.k)
    print(f"k={rep.k}: not euclidean: {'yes' if rep.not_euclidean else 'NO'}; "
          f"certificates valid: {'yes' if rep.certificates_valid else 'NO'}")
    print("s\tclosed-form\tviolations\tlp")
    for d in rep.deletions:
        lp = "-" if d.lp_euclidean is None else ("euclidean" if d.lp_euclidean else "NOT euclidean")
        print(f"{d.s}\t{'ok' if d.closed_form_ok else 'FAIL'}\t{d.violations}\t{lp}")
    print("minimal: yes" if rep.passed else "minimal: NO")
    return 0 if rep.passed else 1


def cmd_table(args) -> int:
    k = args.k
    rows = family.distance_table(k)
    head = [f"d{i}" for i in range(2, 4 * k + 1)]
    if args.format == "tsv":
        print("\t".join(["s"] + head))
        for s, row in enumerate(rows, start=1):
            print("\t".join(map(str, [s] + list(row))))
        return 0
    labels = [f"E_{s}" for s in range(1, 2 * k + 1)]
    cells = [[""] + head] + [[lab] + [str(d) for d in row] for lab, row in zip(labels, rows)]
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    for r in cells:
        print(" ".join(c.rjust(w) if j else c.ljust(w) for j, (c, w) in enumerate(zip(r, widths))).rstrip())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefdomains",
        description="Single-peaked, single-crossing and one-dimensional Euclidean profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="recognize all three domain restrictions")
    p.add_argument("profile")
    p.add_argument("--axis-cap", type=int, default=axes.DEFAULT_AXIS_CAP)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("witness", help="print an obstruction witness")
    p.add_argument("profile")
    p.add_argument("--property", choices=["sp", "sc"], required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("generate", help="emit the profile P*_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("embed", help="emit the closed-form embedding for P*_k minus voter s")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="check an embedding against a profile")
    p.add_argument("profile")
    p.add_argument("embedding")
    p.add_argument("--mode", choices=["full", "reduced"], default="full")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minimality", help="check non-Euclideanness and minimality of P*_k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_minimality)

    p = sub.add_parser("table", help="consecutive distances of E_s for s = 1..2k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.command == "recognize" and args.axis_cap < 1:
        print("error: --axis-cap must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (OSError, ProfileError, euclid.EmbeddingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
