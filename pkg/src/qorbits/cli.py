"""Command-line interface.

Subcommands emit one JSON record per check to stdout (or a report file), so
runs are scriptable and reproducible.  Exit codes: 0 all checks pass, 1 some
check failed, 2 usage error (argparse default)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional

from .center import cayley_hamilton_check, s_from_sigma, sigma_from_s
from .ere import ere_presentation
from .orbits import OrbitSpec, flatness_check, quotient_presentation
from .reports import (
    SuiteConfig,
    emit,
    profile_table_markdown,
    run_battery,
    run_suite,
    theta_table_markdown,
)
from .scalars import ParamFraction, ParamPoly, rat, scalar_to_str
from .theta import Composition, compositions, enumerate_characters, theta, theta_t


def _print_record(rec: dict) -> None:
    print(json.dumps(rec, indent=2, sort_keys=True))


def _parse_mode(s: str):
    if s == "symbolic":
        return "symbolic"
    return rat(s)


def _parse_comp(s: str) -> Composition:
    return Composition(tuple(int(x) for x in s.split(",")))


def _parse_mu(s: str):
    return tuple(rat(x) for x in s.split(","))


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(seed=args.seed)
    if args.what == "pbw":
        n, d = args.n, args.deg
        t_mode = 0 if args.t == "0" else "symbolic"
        pres = ere_presentation(n, d, "symbolic", t_mode)
        from math import comb

        want = [sum(comb(n * n + e - 1, e) for e in range(dd + 1)) for dd in range(d + 1)]
        prof = pres.profile()
        rec = {
            "check": "pbw",
            "n": n,
            "deg": d,
            "t": args.t,
            "ok": prof == want,
            "profile": prof,
            "classical_counts": want,
        }
        _print_record(rec)
        return 0 if rec["ok"] else 1
    if args.what == "theta-identities":
        cfg = SuiteConfig(theta_n_max=args.n, k_max=args.k, m_max=args.mmax, seed=args.seed)
        rep = run_battery("theta-identities", cfg)
        _print_record(rep.as_dict())
        return 0 if rep.ok else 1
    cfg = SuiteConfig(n_min=args.n, n_max=args.n, seed=args.seed)
    rep = run_battery(args.what, cfg)
    rec = rep.as_dict()
    rec["n"] = args.n
    _print_record(rec)
    return 0 if rep.ok else 1


def _cmd_centrality(args) -> int:
    n = args.n
    deg = args.deg if args.deg else (4 if n == 2 else 3)
    pres = ere_presentation(n, deg)
    results = []
    ok = True
    for m in range(1, args.m + 1):
        good, wit = pres.is_central(pres.s_element(m))
        ok = ok and good
        results.append({"m": m, "central": good, "witness": None if good else [wit[0], str(wit[1])]})
    _print_record({"check": "centrality", "n": n, "deg": deg, "ok": ok, "results": results})
    return 0 if ok else 1


def _cmd_newton(args) -> int:
    M = args.M
    q_mode = "symbolic"
    t_label = args.t
    syms = [None] + [ParamPoly.symbol(f"nu{i}") for i in range(1, M + 1)]
    sig = sigma_from_s(syms, M, q_mode)
    back = s_from_sigma(sig, M, q_mode)
    ok = all(back[i] == ParamFraction.from_scalar(syms[i]) for i in range(1, M + 1))
    _print_record({"check": "newton", "n": args.n, "M": M, "t": t_label, "ok": ok})
    return 0 if ok else 1


def _cmd_cayley_hamilton(args) -> int:
    n = args.n
    t_mode = 0 if args.t == "0" else "symbolic"
    q_mode = _parse_mode(args.q)
    deg = 2 * n
    pres = ere_presentation(n, deg, q_mode, t_mode)
    ok, res = cayley_hamilton_check(pres)
    residuals = [
        {"entry": [i + 1, j + 1], "value": str(res[i][j])}
        for i in range(n)
        for j in range(n)
        if not res[i][j].is_zero()
    ]
    rec = {
        "check": "cayley-hamilton",
        "n": n,
        "q": args.q,
        "t": args.t,
        "ok": ok,
        "residual_entries": residuals,
        "residual_word_count": len(residuals),
    }
    _print_record(rec)
    return 0 if ok else 1


def _cmd_theta(args) -> int:
    comp = _parse_comp(args.comp)
    if args.markdown:
        print(theta_table_markdown(comp, args.m))
        return 0
    values = {}
    for m in range(args.m + 1):
        v = theta_t(comp, m) if args.t else theta(comp, m)
        values[str(m)] = scalar_to_str(v)
    _print_record({"check": "theta", "comp": list(comp.parts), "with_t": bool(args.t), "values": values})
    return 0


def _cmd_characters(args) -> int:
    chars = enumerate_characters(args.n, args.k)
    recs = []
    for ch in chars:
        recs.append(
            {
                "multiplicities": list(ch.comp.parts),
                "s1": scalar_to_str(ch.value(1)),
            }
        )
    _print_record({"check": "characters", "n": args.n, "k": args.k, "count": len(chars), "characters": recs})
    return 0


def _cmd_orbit(args) -> int:
    comp = _parse_comp(args.comp)
    mu = _parse_mu(args.mu)
    q_mode = _parse_mode(args.q)
    t_mode = _parse_mode(args.t) if args.t != "symbolic" else "symbolic"
    spec = OrbitSpec(args.n, comp, mu, q_mode=q_mode, t_mode=t_mode)
    if q_mode == "symbolic" and t_mode == "symbolic":
        rep = flatness_check(spec, args.deg, seed=args.seed)
        out = rep.as_dict()
        ok = rep.flat
        if args.markdown:
            print(profile_table_markdown(rep))
    else:
        pres = quotient_presentation(spec, args.deg)
        out = {"spec": spec.describe(), "degree": args.deg, "profile": pres.profile()}
        ok = True
    out["check"] = "orbit"
    if args.report:
        os.makedirs(os.path.dirname(args.report) or ".", exist_ok=True)
        with open(args.report, "w") as f:
            json.dump(out, f, indent=2, sort_keys=True)
        print(f"wrote {args.report}")
    else:
        _print_record(out)
    return 0 if ok else 1


def _cmd_run_all(args) -> int:
    overrides = {"seed": args.seed, "out_dir": args.out}
    if args.config:
        cfg = SuiteConfig.from_file(args.config, **overrides)
    else:
        cfg = SuiteConfig.merged({}, **overrides)
    reports = run_suite(cfg)
    os.makedirs(cfg.out_dir, exist_ok=True)
    path = os.path.join(cfg.out_dir, "suite.json")
    with open(path, "w") as f:
        f.write(emit(reports, "json"))
    content_path = os.path.join(cfg.out_dir, "suite.content.json")
    with open(content_path, "w") as f:
        f.write(emit(reports, "json", include_timing=False))
    md_path = os.path.join(cfg.out_dir, "suite.md")
    with open(md_path, "w") as f:
        f.write(emit(reports, "markdown"))
    n_ok = sum(1 for r in reports if r.ok)
    for r in reports:
        status = "ok  " if r.ok else "FAIL"
        print(f"[{status}] {r.check:<18} {r.elapsed:8.2f}s  {r.provenance}")
    print(f"{n_ok}/{len(reports)} batteries passed; reports in {cfg.out_dir}/")
    return 0 if n_ok == len(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qorbits",
        description="Exact verification of the two-parameter reflection-equation "
        "algebra of gl(n) and its quantized coadjoint orbits.",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for rational specialization points")
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="single named identity battery")
    pv_sub = pv.add_subparsers(dest="what", required=True)
    for what in ("ybe", "hecke", "trace-norm"):
        sp = pv_sub.add_parser(what)
        sp.add_argument("--n", type=int, required=True)
    sp = pv_sub.add_parser("pbw")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--t", choices=["symbolic", "0"], default="symbolic")
    sp = pv_sub.add_parser("theta-identities")
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--mmax", type=int, default=6)
    pv.set_defaults(fn=_cmd_verify)

    pc = sub.add_parser("centrality", help="centrality of the quantum traces s_1..s_m")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--m", type=int, default=2)
    pc.add_argument("--deg", type=int, default=0)
    pc.set_defaults(fn=_cmd_centrality)

    pn = sub.add_parser("newton", help="quantum Newton identity inversion")
    pn.add_argument("--n", type=int, default=4)
    pn.add_argument("--M", type=int, default=4)
    pn.add_argument("--t", choices=["0", "symbolic"], default="symbolic")
    pn.set_defaults(fn=_cmd_newton)

    pch = sub.add_parser("cayley-hamilton", help="Cayley-Hamilton residual with Newton coefficients")
    pch.add_argument("--n", type=int, default=2)
    pch.add_argument("--t", choices=["0", "symbolic"], default="0")
    pch.add_argument("--q", default="symbolic")
    pch.set_defaults(fn=_cmd_cayley_hamilton)

    pt = sub.add_parser("theta", help="orbit trace values for one composition")
    pt.add_argument("--comp", required=True, help="comma-separated multiplicities, e.g. 2,1")
    pt.add_argument("--m", type=int, default=4)
    pt.add_argument("--t", action="store_true", help="two-parameter values")
    pt.add_argument("--markdown", action="store_true")
    pt.set_defaults(fn=_cmd_theta)

    pk = sub.add_parser("characters", help="enumerate characters for given n, k")
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--k", type=int, required=True)
    pk.set_defaults(fn=_cmd_characters)

    po = sub.add_parser("orbit", help="quantized orbit quotient and flatness report")
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--comp", required=True)
    po.add_argument("--mu", required=True)
    po.add_argument("--deg", type=int, required=True)
    po.add_argument("--q", default="symbolic")
    po.add_argument("--t", default="symbolic")
    po.add_argument("--report", default=None)
    po.add_argument("--markdown", action="store_true")
    po.set_defaults(fn=_cmd_orbit)

    pr = sub.add_parser("run-all", help="full verification suite")
    pr.add_argument("--config", default=None, help="JSON file with SuiteConfig fields")
    pr.add_argument("--out", default=None, help="output directory for reports")
    pr.set_defaults(fn=_cmd_run_all)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
