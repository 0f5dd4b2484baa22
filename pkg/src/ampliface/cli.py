"""Command-line front end.

Subcommands orchestrate the library modules and exit nonzero when any
embedded identity check fails.  Randomized commands require a seed
(flag or AMPLIFACE_SEED); identical (command, seed) pairs produce
byte-identical output.
"""

import argparse
import json
import os
import sys

from .cyclic import elems_of
from .posets import (
    build_face_poset,
    build_q_poset,
    closure_poset_check,
    corank_gf_closed,
    corank_gf_from_poset,
    flip_certificate,
    is_eulerian,
    is_thin,
    mobius_eulerian_check,
    rank2_label,
    upper_ideal_check,
)
from .rank2 import (
    Rank2Positroid,
    canonicalize,
    enumerate_face_poset_elements,
    enumerate_rank2_positroids,
    lift_up,
    lukowski_matroid,
    lukowski_pattern,
)
from .schur import class_of_lift, codim_from_class, residual_member, \
    residual_member_by_class
from .twistor import (
    positive_Z,
    sign_flip_report,
    sample_cell_point,
    twistor_vector,
    verify_sign_constancy,
    verify_zero_pattern,
)

SEED_ENV = "AMPLIFACE_SEED"


def _parse_cell(text, n=None):
    obj = json.loads(text)
    if n is not None and obj.get("n") not in (None, n):
        raise SystemExit(f"--cell has n={obj.get('n')}, expected {n}")
    return canonicalize(obj["n"] if n is None else obj.get("n", n),
                        obj.get("loops", ()), obj.get("intervals", ()))


def _need_seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        return int(env)
    raise SystemExit("a seed is required: pass --seed or set " + SEED_ENV)


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate(args):
    cells = enumerate_rank2_positroids(args.n)
    payload = [N.to_json() for N in cells]
    if args.csv:
        from .report import write_csv
        write_csv(args.csv, ["loops", "intervals"],
                  [[" ".join(map(str, N.loops_set())),
                    " ".join(f"{a}-{b}" for a, b in N.intervals_ab())]
                   for N in cells])
    _emit(args, payload, [json.dumps(c, sort_keys=True) for c in payload])
    return 0


def cmd_pnk(args):
    n, k = args.n, args.k
    P = build_face_poset(n, k)
    check = args.check
    detail = {}
    if check == "gf":
        got = corank_gf_from_poset(P)
        want = corank_gf_closed(n, k)
        ok = got == want
        detail = {"poset": got, "closed_form": want}
    elif check == "euler":
        hp = P.adjoin_min()
        flag, witness = is_eulerian(hp)
        flag2, witness2 = mobius_eulerian_check(hp)
        ok = flag and flag2
        detail = {"interval_balance": flag, "mobius": flag2}
    elif check == "ideal":
        ok = upper_ideal_check(n, k)
        from math import comb
        mins = P.minimal_indices()
        ok = ok and len(mins) == comb(n, k) and P.is_graded_by_ranks()
        detail = {"minimal_elements": len(mins), "graded": P.is_graded_by_ranks()}
    elif check == "thin":
        flag, witness = is_thin(P.adjoin_min())
        ok = flag
    elif check == "closure":
        ok = closure_poset_check(n, k)
    elif check == "flip":
        ok = True
        for N in P.elements:
            rec = flip_certificate(N, k)
            if not rec["balanced"]:
                ok = False
                detail = {"failing_cell": N.to_json()}
                break
    else:  # pragma: no cover
        raise SystemExit(f"unknown check {check}")
    payload = {"n": n, "k": k, "check": check, "pass": ok, **detail}
    _emit(args, payload, [f"{check} n={n} k={k}: {'PASS' if ok else 'FAIL'}"])
    return 0 if ok else 1


def cmd_gf(args):
    n, k = args.n, args.k
    P = build_face_poset(n, k)
    got = corank_gf_from_poset(P)
    want = corank_gf_closed(n, k)
    ok = got == want
    payload = {"n": n, "k": k, "poset": got, "closed_form": want, "pass": ok}
    lines = ["corank c: " + " ".join(f"{c:>6}" for c in range(len(got))),
             "faces   : " + " ".join(f"{v:>6}" for v in got),
             "formula : " + " ".join(f"{v:>6}" for v in want),
             "PASS" if ok else "FAIL"]
    if args.csv:
        from .report import write_csv
        write_csv(args.csv, ["corank", "faces", "closed_form"],
                  [[c, got[c], want[c]] for c in range(len(got))])
    if args.fig:
        from .report import fig_corank
        fig_corank(got, want, n, k, args.fig)
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_lukowski(args):
    N = _parse_cell(args.cell)
    k = args.k
    pat = lukowski_pattern(N, k)
    seed = _need_seed(args)
    M = lukowski_matroid(N, k, seed)
    lifted = lift_up(N, k)
    ok = M == lifted
    payload = {"cell": N.to_json(), "k": k,
               "pattern": pat.ascii_grid().split("\n"),
               "matroid": M.to_json(), "equals_lift": ok}
    lines = [pat.ascii_grid(),
             "matroid: " + " ".join("".join(map(str, b)) if N.n < 10 else str(b)
                                    for b in M.basis_sets()),
             "equals lift: " + ("PASS" if ok else "FAIL")]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_codim(args):
    n, k = args.n, args.k
    rows = []
    ok = True
    for N in enumerate_face_poset_elements(n, k):
        st = N.stats(k)
        cls = class_of_lift(N, k, n, truncate=True)
        codim = codim_from_class(cls, n, k, 2)
        rows.append((rank2_label(N), st.d, st.c, codim))
        ok = ok and codim == st.c
    payload = {"n": n, "k": k, "pass": ok,
               "rows": [{"cell": r[0], "d": r[1], "c": r[2], "codim": r[3]}
                        for r in rows]}
    lines = [f"{r[0]:<40} d={r[1]} c={r[2]} codim={r[3]}" for r in rows]
    lines.append("PASS" if ok else "FAIL")
    if args.csv:
        from .report import write_csv
        write_csv(args.csv, ["cell", "d", "c", "codim_from_class"], rows)
    if args.fig:
        from .report import fig_codim
        fig_codim(rows, n, k, args.fig)
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_residual(args):
    n, k = args.n, args.k
    rows = []
    ok = True
    for N in enumerate_rank2_positroids(n):
        if N.stats(k).e >= 0:
            continue
        abc = residual_member(N, n, k)
        by_class = residual_member_by_class(N, n, k)
        ok = ok and abc == by_class
        rows.append((rank2_label(N), N.stats(k).c, abc, by_class))
    payload = {"n": n, "k": k, "pass": ok,
               "rows": [{"cell": r[0], "c": r[1], "residual": r[2],
                         "by_class": r[3]} for r in rows]}
    lines = [f"{r[0]:<40} c={r[1]} residual={r[2]} class_oracle={r[3]}"
             for r in rows]
    lines.append("PASS" if ok else "FAIL")
    if args.csv:
        from .report import write_csv
        write_csv(args.csv, ["cell", "c", "residual_abc", "residual_class"],
                  rows)
    if args.fig:
        from .report import fig_residual
        fig_residual(rows, n, k, args.fig)
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_numeric_verify(args):
    n, k = args.n, args.k
    seed = _need_seed(args)
    Z = positive_Z(n, k, 2, seed)
    cells = ([_parse_cell(args.cell, n)] if args.cell
             else enumerate_face_poset_elements(n, k))
    reports = []
    ok = True
    for N in cells:
        zp = verify_zero_pattern(N, k, Z, seed=seed + 1, samples=args.samples)
        sc = verify_sign_constancy(N, k, Z, trials=args.samples,
                                   seed=seed + 2)
        C = sample_cell_point(N, k, seed + 3)
        fl = sign_flip_report(C, Z)
        cell_ok = zp["ok"] and sc["constant"]
        ok = ok and cell_ok
        reports.append({
            "cell": N.to_json(),
            "zero_pattern_ok": zp["ok"],
            "sign_vector": sc["sign_vector"],
            "sign_constant": sc["constant"],
            "flips": fl["flips"],
            "flip_zeros": fl["zeros"],
        })
    payload = {"n": n, "k": k, "samples": args.samples, "seed": seed,
               "pass": ok, "cells": reports}
    lines = []
    for r in reports:
        lines.append(
            f"{json.dumps(r['cell'], sort_keys=True)} zero_pattern="
            f"{'ok' if r['zero_pattern_ok'] else 'FAIL'} "
            f"signs={''.join('+' if s > 0 else '-' for s in r['sign_vector'])}"
            f" constant={r['sign_constant']} flips={r['flips']}")
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_dot(args):
    if args.k is not None:
        P = build_face_poset(args.n, args.k)
        label = lambda N: rank2_label(N, args.k)  # noqa: E731
        title = f"face poset n={args.n} k={args.k}"
    else:
        P = build_q_poset(args.n)
        label = rank2_label
        title = f"rank-2 positroids on [{args.n}]"
    text = P.to_dot(label=label, name="faces")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.fig:
        from .report import fig_hasse
        fig_hasse(P, args.fig, label=None, title=title)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(P.to_json(label=label), fh, sort_keys=True)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ampliface",
        description="exact combinatorics of rank-2 positroid face posets")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, needs_k=True):
        p.add_argument("--n", type=int, required=True)
        if needs_k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list all rank-2 positroids on [n]")
    add_common(p, needs_k=False)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("pnk", help="structural checks on the face poset")
    add_common(p)
    p.add_argument("--check", required=True,
                   choices=["gf", "euler", "ideal", "thin", "closure", "flip"])
    p.set_defaults(func=cmd_pnk)

    p = sub.add_parser("gf", help="corank generating function")
    add_common(p)
    p.add_argument("--csv")
    p.add_argument("--fig")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("lukowski", help="sparse pattern and its matroid")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cell", required=True,
                   help='JSON like {"n":6,"loops":[1],"intervals":[[4,5]]}')
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lukowski)

    p = sub.add_parser("codim", help="class-computed codimensions vs c(N)")
    add_common(p)
    p.add_argument("--csv")
    p.add_argument("--fig")
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("residual", help="residual arrangement classifier")
    add_common(p)
    p.add_argument("--csv")
    p.add_argument("--fig")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("numeric-verify",
                       help="zero patterns, sign constancy, flips on samples")
    add_common(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int)
    p.add_argument("--cell")
    p.set_defaults(func=cmd_numeric_verify)

    p = sub.add_parser("dot", help="Hasse diagram as DOT (and optional figure)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.add_argument("--fig")
    p.add_argument("--json-out", dest="json_out")
    p.set_defaults(func=cmd_dot)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
