"""Verification batteries, reports, and emitters.

Each battery runs a named exact check and produces a `CheckReport`; the suite
is deterministic for a fixed seed (the seed only feeds the rational (q, t)
sample points of the flatness cross-checks).  Reports serialize to JSON
losslessly; timing fields are excluded from content comparisons."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, fields
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .center import (
    cayley_hamilton_check,
    generator_shift_scalar,
    newton_residual,
    power_traces,
    r_sequence,
    s_from_sigma,
    sigma_from_s,
)
from .ere import AlgebraElement, Presentation, ere_presentation
from .orbits import (
    OrbitSpec,
    check_commutativity_at_classical_point,
    check_structure_constants,
    flatness_check,
)
from .scalars import ParamFraction, ParamPoly, QLaurent, quantum_integer, rat, scalar_to_str
from .tensors import check_hecke, check_trace_normalization, check_ybe, hecke_symmetry, weight_matrix
from .theta import (
    Composition,
    compositions,
    enumerate_characters,
    grouped_substitution_check,
    mu_symbols,
    root_of_unity_substitution,
    theta,
    theta_multiplicity_free,
    theta_recurrence_check,
    theta_t,
    theta_via_C,
)

# -----------------------------------------------------------------------------
# report and config types
# -----------------------------------------------------------------------------


@dataclass
class CheckReport:
    check: str
    params: dict
    ok: bool
    elapsed: float
    witnesses: List[str]
    provenance: str

    def as_dict(self, include_timing: bool = True) -> dict:
        d = {
            "check": self.check,
            "params": self.params,
            "ok": self.ok,
            "witnesses": self.witnesses,
            "provenance": self.provenance,
        }
        if include_timing:
            d["elapsed"] = self.elapsed
        return d

    @staticmethod
    def from_dict(d: dict) -> "CheckReport":
        return CheckReport(
            check=d["check"],
            params=d["params"],
            ok=d["ok"],
            elapsed=d.get("elapsed", 0.0),
            witnesses=d["witnesses"],
            provenance=d["provenance"],
        )


@dataclass
class SuiteConfig:
    """Knobs of the verification suite; defaults reproduce the full
    acceptance matrix."""

    n_min: int = 2
    n_max: int = 4
    theta_n_max: int = 5
    k_max: int = 3
    m_max: int = 6
    deg_n2: int = 4
    deg_n3: int = 3
    seed: int = 0
    out_dir: str = "reports"
    batteries: Tuple[str, ...] = (
        "ybe",
        "hecke",
        "trace-norm",
        "pbw",
        "centrality",
        "newton",
        "cayley-hamilton",
        "theta-identities",
        "characters",
        "orbit-flatness",
        "kks",
    )

    @staticmethod
    def from_file(path: str, **overrides) -> "SuiteConfig":
        with open(path) as f:
            data = json.load(f)
        return SuiteConfig.merged(data, **overrides)

    @staticmethod
    def merged(data: dict, **overrides) -> "SuiteConfig":
        known = {f.name for f in fields(SuiteConfig)}
        bad = set(data) - known
        if bad:
            raise ValueError(f"unknown config keys: {sorted(bad)}")
        merged = dict(data)
        for k, v in overrides.items():
            if v is not None:
                merged[k] = v
        if "batteries" in merged:
            merged["batteries"] = tuple(merged["batteries"])
        cfg = SuiteConfig(**merged)
        if cfg.n_min < 1 or cfg.n_max > 6 or cfg.deg_n2 > 6 or cfg.deg_n3 > 4:
            raise ValueError("requested bounds exceed the engine envelope")
        return cfg

    def as_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "theta_n_max": self.theta_n_max,
            "k_max": self.k_max,
            "m_max": self.m_max,
            "deg_n2": self.deg_n2,
            "deg_n3": self.deg_n3,
            "seed": self.seed,
            "out_dir": self.out_dir,
            "batteries": list(self.batteries),
        }


# -----------------------------------------------------------------------------
# individual batteries
# -----------------------------------------------------------------------------


def _battery_ybe(cfg: SuiteConfig):
    wit = []
    ok = True
    for n in range(cfg.n_min, cfg.n_max + 1):
        good, w = check_ybe(hecke_symmetry(n))
        ok = ok and good
        if w:
            wit.append(f"n={n}: first differing entry {w}")
    return ok, {"n": list(range(cfg.n_min, cfg.n_max + 1))}, wit


def _battery_hecke(cfg: SuiteConfig):
    wit = []
    ok = True
    for n in range(cfg.n_min, cfg.n_max + 1):
        good, w = check_hecke(hecke_symmetry(n))
        ok = ok and good
        if w:
            wit.append(f"n={n}: {w}")
    return ok, {"n": list(range(cfg.n_min, cfg.n_max + 1))}, wit


def _battery_trace_norm(cfg: SuiteConfig):
    wit = []
    ok = True
    for n in range(cfg.n_min, cfg.n_max + 1):
        good, w = check_trace_normalization(n)
        ok = ok and good
        if w:
            wit.append(f"n={n}: {w}")
        d = weight_matrix(n)
        wit.append(f"n={n}: D = diag({', '.join(scalar_to_str(x) for x in d.diag)})")
    return ok, {"n": list(range(cfg.n_min, cfg.n_max + 1))}, wit


def _classical_counts(n: int, d: int) -> List[int]:
    return [sum(comb(n * n + e - 1, e) for e in range(dd + 1)) for dd in range(d + 1)]


def _battery_pbw(cfg: SuiteConfig):
    wit = []
    ok = True
    for n, d in ((2, cfg.deg_n2), (3, cfg.deg_n3)):
        prof = ere_presentation(n, d).profile()
        want = _classical_counts(n, d)
        good = prof == want
        ok = ok and good
        wit.append(f"n={n}, d<={d}: filtration dims {prof}, classical {want}")
    return ok, {"cases": [[2, cfg.deg_n2], [3, cfg.deg_n3]]}, wit


def _battery_centrality(cfg: SuiteConfig):
    wit = []
    ok = True
    for n, d in ((2, cfg.deg_n2), (3, cfg.deg_n3)):
        pres = ere_presentation(n, d)
        for m in (1, 2):
            good, w = pres.is_central(pres.s_element(m))
            ok = ok and good
            if not good:
                wit.append(f"n={n}, s_{m}: commutator with {w[0]} reduces to {w[1]}")
    wit.append("s_1, s_2 central for n=2,3 at symbolic q, t")
    return ok, {"n": [2, 3], "m": [1, 2]}, wit


def _battery_newton(cfg: SuiteConfig):
    wit = []
    ok = True
    M = min(cfg.m_max, 6)
    sig_syms = [1] + [ParamPoly.symbol(f"nu{i}") for i in range(1, M + 1)]
    s = s_from_sigma(sig_syms, M)
    back = sigma_from_s(s, M)
    round1 = all(back[i] == ParamFraction.from_scalar(sig_syms[i]) for i in range(1, M + 1))
    s_syms = [None] + [ParamPoly.symbol(f"nu{i}") for i in range(1, M + 1)]
    sig = sigma_from_s(s_syms, M)
    s_back = s_from_sigma(sig, M)
    round2 = all(s_back[i] == ParamFraction.from_scalar(s_syms[i]) for i in range(1, M + 1))
    ok = round1 and round2
    wit.append(f"triangular inversion both ways up to M={M}: {round1 and round2}")
    # classical limit: at q=1 the m-hat prefactor becomes m
    two = sigma_from_s([None, ParamPoly.symbol("nu1"), ParamPoly.symbol("nu2")], 2, q_mode=1)
    expect = ParamFraction(ParamPoly.symbol("nu1") ** 2 - ParamPoly.symbol("nu2"), ParamPoly.from_scalar(2))
    good = two[2] == expect
    ok = ok and good
    wit.append(f"classical specialization sigma_2 = (s_1^2 - s_2)/2: {good}")
    return ok, {"M": M}, wit


def _battery_cayley_hamilton(cfg: SuiteConfig):
    wit = []
    pres_t0 = ere_presentation(2, cfg.deg_n2, "symbolic", 0)
    ok_t0, _ = cayley_hamilton_check(pres_t0)
    wit.append(f"n=2, t=0, Newton coefficients: residual zero = {ok_t0}")
    pres_q1 = ere_presentation(2, cfg.deg_n2, 1, "symbolic")
    ok_q1, res_q1 = cayley_hamilton_check(pres_q1)
    wit.append(f"n=2, q=1, symbolic t, Newton coefficients: residual zero = {ok_q1}")
    if not ok_q1:
        ent = "; ".join(f"[{i+1}][{j+1}] = {res_q1[i][j]}" for i in range(2) for j in range(2) if not res_q1[i][j].is_zero())
        wit.append(f"nonzero residual entries: {ent}")
    pres = ere_presentation(2, cfg.deg_n2)
    ok_sym, _ = cayley_hamilton_check(pres)
    wit.append(f"n=2, symbolic q and t, Newton coefficients: residual zero = {ok_sym}")
    shift = -generator_shift_scalar(pres)
    ok_shift, _ = cayley_hamilton_check(pres, shift=shift)
    wit.append(
        "n=2, symbolic q and t, coefficients from the shifted matrix "
        f"L + t/(1-q^-2): residual zero = {ok_shift}"
    )
    ok = ok_t0 and ok_shift
    return ok, {"n": 2, "regimes": ["t=0", "q=1 (reported)", "symbolic (reported)", "shifted"]}, wit


def _battery_theta_identities(cfg: SuiteConfig):
    wit = []
    ok = True
    checked = 0
    for n in range(1, cfg.theta_n_max + 1):
        for k in range(1, cfg.k_max + 1):
            for comp in compositions(n, k):
                for m in range(0, cfg.m_max + 1):
                    if theta(comp, m) != theta_via_C(comp, m):
                        ok = False
                        wit.append(f"rational representation fails at {comp}, m={m}")
                    checked += 1
                if k >= 2:
                    for m in range(1, min(cfg.m_max, 5) + 1):
                        if not theta_recurrence_check(comp, m):
                            ok = False
                            wit.append(f"last-part recurrence fails at {comp}, m={m}")
    wit.append(f"rational representation and last-part recurrence: {checked} cases")
    for n in range(1, cfg.theta_n_max + 1):
        for m in range(1, cfg.m_max + 1):
            if root_of_unity_substitution(n, m) != quantum_integer(n):
                ok = False
                wit.append(f"root-of-unity substitution fails at n={n}, m={m}")
    wit.append("root-of-unity substitution returns n-hat")
    for n in range(2, min(cfg.theta_n_max, 4) + 1):
        for k in range(1, min(cfg.k_max, n) + 1):
            for comp in compositions(n, k):
                for m in range(1, min(cfg.m_max, 4) + 1):
                    if not grouped_substitution_check(comp, m):
                        ok = False
                        wit.append(f"grouped substitution fails at {comp}, m={m}")
    wit.append("grouped substitution collapses to the multiplicity case")
    # Newton compatibility of the multiplicity-free values
    from .center import elementary_symmetric_all

    for n in range(1, 5):
        lam = [ParamPoly.symbol(f"lam{i+1}") for i in range(n)]
        es = elementary_symmetric_all(lam)
        svals = [None] + [theta_multiplicity_free(n, m) for m in range(1, 5)]
        for m in range(1, 5):
            r = newton_residual(svals, es, m)
            if not r.is_zero():
                ok = False
                wit.append(f"Newton compatibility fails at n={n}, m={m}")
    wit.append("power-trace values satisfy the quantum Newton identities (n<=4, m<=4)")
    # the rank-one explicit value
    t = ParamPoly.symbol("t")
    mu1, mu2 = mu_symbols(2)
    for n in range(1, cfg.theta_n_max + 1):
        for comp in compositions(n, 2):
            nh = [ParamPoly.from_scalar(quantum_integer(p)) for p in comp.parts]
            if theta_t(comp, 1) != nh[0] * mu1 + nh[1] * mu2 + t * nh[0] * nh[1]:
                ok = False
                wit.append(f"two-part trace value fails at {comp}")
    wit.append("theta_1((n1,n2), t) = n1hat mu1 + n2hat mu2 + t n1hat n2hat, all n1+n2 <= 5")
    return ok, {"n_max": cfg.theta_n_max, "k_max": cfg.k_max, "m_max": cfg.m_max}, wit


def _battery_characters(cfg: SuiteConfig):
    wit = []
    ok = True
    for n in range(1, cfg.theta_n_max + 1):
        for k in range(1, cfg.k_max + 1):
            chars = enumerate_characters(n, k)
            want = comb(n + k - 1, k - 1)
            if len(chars) != want:
                ok = False
                wit.append(f"character count off at n={n}, k={k}: {len(chars)} != {want}")
            mus = mu_symbols(k)
            for ch in chars:
                vals = ch.values(k + 4)
                for m in range(k, k + 5):
                    r = r_sequence(vals, mus, m)
                    if not r.is_zero():
                        ok = False
                        wit.append(f"recurrence fails at {ch.comp}, m={m}")
    wit.append("all character value sequences satisfy the eigenvalue recurrence, m = k..k+4")
    wit.append("character counts match the composition counts C(n+k-1, k-1)")
    return ok, {"n_max": cfg.theta_n_max, "k_max": cfg.k_max}, wit


_ORBIT_CASES = (
    (2, (1, 1), ("0", "1"), 4),
    (2, (2,), ("0",), 4),
    (3, (2, 1), ("0", "1"), 2),
    (3, (1, 1, 1), ("0", "1", "2"), 2),
)


def _battery_orbit_flatness(cfg: SuiteConfig):
    wit = []
    ok = True
    reports = []
    for n, parts, mu, d in _ORBIT_CASES:
        if n == 2:
            d = min(d, cfg.deg_n2)
        spec = OrbitSpec(n, Composition(parts), tuple(rat(v) for v in mu))
        rep = flatness_check(spec, d, seed=cfg.seed)
        reports.append(rep)
        good = rep.flat and all(s["matches_symbolic"] for s in rep.specializations)
        ok = ok and good
        wit.append(
            f"n={n}, parts={parts}, mu={list(mu)}, d<={d}: quantum {rep.quantum_profile} "
            f"vs classical {rep.classical_profile} -> flat={rep.flat}"
        )
        if rep.witness:
            wit.append(f"first mismatch: {rep.witness}")
    return ok, {"cases": [list(c[:3]) + [c[3]] for c in _ORBIT_CASES], "seed": cfg.seed}, wit


def _battery_kks(cfg: SuiteConfig):
    wit = []
    ok = True
    for n in (2, 3):
        good, w = check_structure_constants(n)
        ok = ok and good
        wit.append(f"n={n}: commutators reduce to t times the structure constants: {good}")
        if w:
            wit.append(str(w))
    good = check_commutativity_at_classical_point(2)
    ok = ok and good
    wit.append(f"q=1, t=0 is commutative: {good}")
    v = theta_t(Composition((1, 1)), 1, mu=[rat(0), rat(1)]).eval_q1()
    expect = ParamPoly.symbol("t") + 1
    good = v == expect
    ok = ok and good
    wit.append(f"two-part trace value at q=1, mu=(0,1): {scalar_to_str(v)}")
    return ok, {"n": [2, 3]}, wit


_PROVENANCE = {
    "ybe": "braid relation of the Hecke symmetry",
    "hecke": "quadratic Hecke condition",
    "trace-norm": "quantum-trace weight normalization",
    "pbw": "flat filtration dimensions of the two-parameter algebra",
    "centrality": "quantum traces of powers generate the center",
    "newton": "quantum Newton identities",
    "cayley-hamilton": "quantum Cayley-Hamilton identity",
    "theta-identities": "orbit trace-value polynomial identities",
    "characters": "characters of the restricted invariant algebra",
    "orbit-flatness": "flatness of quantized orbit quotients",
    "kks": "q=1 specialization: invariant quantization of the Poisson-Lie bracket",
}

_BATTERIES: Dict[str, Callable] = {
    "ybe": _battery_ybe,
    "hecke": _battery_hecke,
    "trace-norm": _battery_trace_norm,
    "pbw": _battery_pbw,
    "centrality": _battery_centrality,
    "newton": _battery_newton,
    "cayley-hamilton": _battery_cayley_hamilton,
    "theta-identities": _battery_theta_identities,
    "characters": _battery_characters,
    "orbit-flatness": _battery_orbit_flatness,
    "kks": _battery_kks,
}


def run_battery(name: str, cfg: SuiteConfig) -> CheckReport:
    fn = _BATTERIES.get(name)
    if fn is None:
        raise KeyError(f"unknown battery {name!r}; known: {sorted(_BATTERIES)}")
    t0 = time.monotonic()
    try:
        ok, params, wit = fn(cfg)
    except Exception as exc:  # engine errors become failing reports, never crashes
        ok, params, wit = False, {}, [f"error: {type(exc).__name__}: {exc}"]
    params = dict(params)
    params["seed"] = cfg.seed
    return CheckReport(
        check=name,
        params=params,
        ok=bool(ok),
        elapsed=time.monotonic() - t0,
        witnesses=wit,
        provenance=_PROVENANCE[name],
    )


def run_suite(cfg: SuiteConfig) -> List[CheckReport]:
    """Run the selected batteries in declaration order."""
    return [run_battery(name, cfg) for name in cfg.batteries]


# -----------------------------------------------------------------------------
# emission
# -----------------------------------------------------------------------------


def emit(reports: Sequence[CheckReport], fmt: str = "json", include_timing: bool = True) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict(include_timing) for r in reports], indent=2, sort_keys=True)
    if fmt == "markdown":
        lines = ["| check | ok | provenance |", "| --- | --- | --- |"]
        for r in reports:
            mark = "ok" if r.ok else "FAIL"
            lines.append(f"| {r.check} | {mark} | {r.provenance} |")
        lines.append("")
        for r in reports:
            lines.append(f"### {r.check}")
            lines.append("")
            for w in r.witnesses:
                lines.append(f"- {w}")
            lines.append("")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def parse_reports(text: str) -> List[CheckReport]:
    return [CheckReport.from_dict(d) for d in json.loads(text)]


def theta_table_markdown(comp: Composition, m_max: int) -> str:
    """Markdown table of the two-parameter trace values for one composition."""
    lines = [f"ϑ values for multiplicities {comp}", "", "| m | value |", "| --- | --- |"]
    for m in range(m_max + 1):
        lines.append(f"| {m} | `{scalar_to_str(theta_t(comp, m))}` |")
    return "\n".join(lines)


def profile_table_markdown(rep) -> str:
    """Side-by-side Hilbert profile table for a flatness report."""
    lines = [
        f"orbit n={rep.spec.n}, parts={list(rep.spec.comp.parts)}, mu={[str(v) for v in rep.spec.mu]}",
        "",
        "| degree | quantum | classical | match |",
        "| --- | --- | --- | --- |",
    ]
    for e, (a, b) in enumerate(zip(rep.quantum_profile, rep.classical_profile)):
        lines.append(f"| {e} | {a} | {b} | {'Y' if a == b else 'N'} |")
    return "\n".join(lines)
