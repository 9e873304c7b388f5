"""Quantized semisimple orbits: quotients of the two-parameter algebra by the
matrix minimal-polynomial relations and the quantum-trace conditions, with
flatness certified by comparing truncated Hilbert profiles against the
independent classical oracle, plus the q=1 specialization carrying the
invariant one-parameter quantization."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .classical import classical_orbit_profile
from .ere import (
    AlgebraElement,
    Presentation,
    generator_matrix,
    identity_matrix,
    mat_mul,
)
from .scalars import ParamFraction, ParamPoly, Rat, rat, scalar_to_str
from .tensors import weight_matrix
from .theta import Composition, theta_t


@dataclass(frozen=True)
class OrbitSpec:
    """A semisimple orbit datum: eigenvalues mu (exact rationals, pairwise
    distinct) with multiplicities `comp`, and the coefficient regime."""

    n: int
    comp: Composition
    mu: Tuple["Rat", ...]
    q_mode: object = "symbolic"
    t_mode: object = "symbolic"

    def __post_init__(self):
        if self.comp.n != self.n:
            raise ValueError(f"multiplicities {self.comp} do not sum to n={self.n}")
        if len(self.mu) != self.comp.k:
            raise ValueError("need one eigenvalue per part")
        vals = [rat(v) for v in self.mu]
        if len(set(vals)) != len(vals):
            raise ValueError("eigenvalues must be pairwise distinct")
        object.__setattr__(self, "mu", tuple(vals))

    @property
    def k(self) -> int:
        return self.comp.k

    def describe(self) -> dict:
        return {
            "n": self.n,
            "multiplicities": list(self.comp.parts),
            "mu": [str(v) for v in self.mu],
            "q": str(self.q_mode),
            "t": str(self.t_mode),
            "zero_multiplicity": any(p == 0 for p in self.comp.parts),
        }


def _free_matrix_product(n: int, mu: Sequence) -> List[List[AlgebraElement]]:
    """(L - mu_1)...(L - mu_k) expanded in the free algebra."""
    prod = identity_matrix(n)
    base = generator_matrix(n)
    for val in mu:
        shifted = [[base[i][j] - AlgebraElement.unit(n, rat(val)) if i == j else base[i][j] for j in range(n)] for i in range(n)]
        prod = mat_mul(prod, shifted)
    return prod


def minimal_poly_relations(spec: OrbitSpec, pres: Optional[Presentation] = None) -> List[AlgebraElement]:
    """The n^2 entries of (L - mu_1)...(L - mu_k), row-major; reduced to
    normal form when a presentation is supplied."""
    prod = _free_matrix_product(spec.n, spec.mu)
    entries = [prod[i][j] for i in range(spec.n) for j in range(spec.n)]
    if pres is not None:
        entries = [pres.normal_form(e) for e in entries]
    return entries


def general_poly_relations(n: int, coeffs: Sequence, pres: Optional[Presentation] = None) -> List[AlgebraElement]:
    """Entries of L^m + a_{m-1} L^{m-1} + ... + a_0 for arbitrary coefficients
    (exact rationals or symbols), row-major."""
    m = len(coeffs)
    base = generator_matrix(n)
    power = identity_matrix(n)
    total = [[AlgebraElement.unit(n, coeffs[0]) if i == j else AlgebraElement.zero(n) for j in range(n)] for i in range(n)]
    for d in range(1, m + 1):
        power = mat_mul(power, base)
        c = 1 if d == m else coeffs[d]
        for i in range(n):
            for j in range(n):
                total[i][j] = total[i][j] + power[i][j] * c if not _is_zero_scalar(c) else total[i][j]
    entries = [total[i][j] for i in range(n) for j in range(n)]
    if pres is not None:
        entries = [pres.normal_form(e) for e in entries]
    return entries


def _is_zero_scalar(c) -> bool:
    if isinstance(c, (ParamPoly, ParamFraction)):
        return c.is_zero()
    return not c


def _free_trace_element(n: int, m: int) -> AlgebraElement:
    """Tr_q(L^m) in the free algebra (no reduction)."""
    d = weight_matrix(n)
    base = generator_matrix(n)
    power = identity_matrix(n)
    for _ in range(m):
        power = mat_mul(power, base)
    acc = AlgebraElement.zero(n)
    for i in range(n):
        acc = acc + power[i][i].scale(ParamPoly.from_scalar(d.diag[i]))
    return acc


def trace_relations(spec: OrbitSpec, pres: Optional[Presentation] = None) -> List[AlgebraElement]:
    """The k-1 relations Tr_q(L^m) - theta_m(parts, q^-2, mu, t) for
    m = 1..k-1, with the two-parameter polynomial value on the right."""
    out = []
    for m in range(1, spec.k - 1 + 1):
        value = theta_t(spec.comp, m, mu=list(spec.mu))
        rel = _free_trace_element(spec.n, m) - AlgebraElement.unit(spec.n, value)
        if pres is not None:
            rel = pres.normal_form(rel)
        out.append(rel)
    return out


def quotient_presentation(spec: OrbitSpec, degree: int, include_trace: bool = True) -> Presentation:
    """The defining relations plus the orbit relations, with the truncated
    normal-form engine of the combined ideal."""
    extra = minimal_poly_relations(spec)
    if include_trace:
        extra = extra + trace_relations(spec)
    return Presentation(
        spec.n,
        degree,
        q_mode=spec.q_mode,
        t_mode=spec.t_mode,
        extra_relations=extra,
    )


@dataclass
class FlatnessReport:
    spec: OrbitSpec
    degree: int
    quantum_profile: List[int]
    classical_profile: List[int]
    flat: bool
    trace_values: List[str]
    specializations: List[dict] = field(default_factory=list)
    witness: Optional[dict] = None

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.describe(),
            "degree": self.degree,
            "quantum_profile": self.quantum_profile,
            "classical_profile": self.classical_profile,
            "flat": self.flat,
            "trace_values": self.trace_values,
            "specializations": self.specializations,
            "witness": self.witness,
        }


def _random_specialization_points(seed: int, count: int) -> List[Tuple["Rat", "Rat"]]:
    """Deterministic rational (q, t) sample points; q is kept away from 0, +-1,
    and small roots of unity by using fractions with distinct small parts."""
    rng = random.Random(seed)
    qs = [rat(2), rat(3), rat(5, 2), rat(7, 3), rat(4, 3), rat(5, 3), rat(7, 2), rat(8, 5)]
    ts = [rat(1), rat(2), rat(1, 2), rat(3), rat(5, 3), rat(7, 5)]
    pts = []
    while len(pts) < count:
        p = (rng.choice(qs), rng.choice(ts))
        if p not in pts:
            pts.append(p)
    return pts


def flatness_check(spec: OrbitSpec, degree: int, seed: int = 0, specializations: int = 3) -> FlatnessReport:
    """Compare the symbolic-(q,t) Hilbert profile of the quantum quotient with
    the classical oracle, then re-check at deterministic rational (q,t) points
    to guard against coefficient-field rank drops."""
    if spec.q_mode != "symbolic" or spec.t_mode != "symbolic":
        raise ValueError("flatness certification is a symbolic-regime check")
    pres = quotient_presentation(spec, degree)
    qp = pres.profile()
    cp = classical_orbit_profile(spec.n, spec.comp.parts, spec.mu, degree)
    flat = qp == cp
    witness = None
    if not flat:
        bad = next(e for e in range(len(qp)) if qp[e] != cp[e])
        witness = {"degree": bad, "quantum": qp[bad], "classical": cp[bad]}
    values = [scalar_to_str(theta_t(spec.comp, m, mu=list(spec.mu))) for m in range(1, spec.k)]
    spots = []
    for qv, tv in _random_specialization_points(seed, specializations):
        sp = OrbitSpec(spec.n, spec.comp, spec.mu, q_mode=qv, t_mode=tv)
        p = quotient_presentation(sp, degree).profile()
        spots.append({"q": str(qv), "t": str(tv), "profile": p, "matches_symbolic": p == qp})
    return FlatnessReport(spec, degree, qp, cp, flat, values, spots, witness)


# ---------------------------------------------------------------------------
# q = 1: the invariant one-parameter quantization
# ---------------------------------------------------------------------------


def kks_presentation(spec: OrbitSpec, degree: int) -> Presentation:
    """The q=1, symbolic-t quotient."""
    sp = OrbitSpec(spec.n, spec.comp, spec.mu, q_mode=1, t_mode=spec.t_mode)
    return quotient_presentation(sp, degree)


def check_structure_constants(n: int, degree: int = 2):
    """At q=1 the commutator of two generators reduces to t times the
    gl(n) structure-constant combination:

        [L[i][j], L[k][l]] = t (delta_il L[k][j] - delta_kj L[i][l]).

    Returns (ok, witness) checked against the q=1 relations for all pairs."""
    pres = Presentation(n, degree, q_mode=1, t_mode="symbolic")
    t = ParamPoly.symbol("t")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = AlgebraElement.generator(n, i, j).commutator(AlgebraElement.generator(n, k, l))
                    rhs = AlgebraElement.zero(n)
                    if i == l:
                        rhs = rhs + AlgebraElement.generator(n, k, j)
                    if k == j:
                        rhs = rhs - AlgebraElement.generator(n, i, l)
                    diff = lhs - rhs.scale(t)
                    if not pres.reduces_to_zero(diff):
                        return False, {
                            "pair": ((i + 1, j + 1), (k + 1, l + 1)),
                            "residual": str(pres.normal_form(diff)),
                        }
    return True, None


def check_commutativity_at_classical_point(n: int, degree: int = 2) -> bool:
    """At q=1, t=0 every commutator of generators reduces to zero."""
    pres = Presentation(n, degree, q_mode=1, t_mode=0)
    for a in range(n * n):
        for b in range(a + 1, n * n):
            x = AlgebraElement(n, {(a,): 1})
            y = AlgebraElement(n, {(b,): 1})
            if not pres.reduces_to_zero(x * y - y * x):
                return False
    return True


# ---------------------------------------------------------------------------
# small dense kernel computations over the coefficient field
# ---------------------------------------------------------------------------


def centralizer_dimension(pres: Presentation, deg: int) -> int:
    """Dimension of the space of degree-<=deg elements of the truncated
    quotient commuting with every generator."""
    words = [w for w in pres.ideal.standard_words(deg)]
    table = pres.ideal.table
    n = pres.n
    unknowns = len(words)
    rows: List[List[ParamFraction]] = []
    coords: Dict[int, int] = {}

    def coord(idx: int) -> int:
        if idx not in coords:
            coords[idx] = len(coords)
        return coords[idx]

    cols: List[Dict[int, ParamFraction]] = []
    for w in words:
        elem = AlgebraElement(n, {table.word(w): 1})
        col: Dict[int, ParamFraction] = {}
        for g in range(n * n):
            gel = AlgebraElement(n, {(g,): 1})
            nf = pres.normal_form(elem * gel - gel * elem)
            for ww, c in nf.terms.items():
                key = g * table.count_le(pres.degree) + table.index(ww)
                col[coord(key)] = ParamFraction.from_scalar(c)
        cols.append(col)
    nrows = len(coords)
    dense = [[cols[j].get(i, ParamFraction.zero()) for j in range(unknowns)] for i in range(nrows)]
    return unknowns - _fraction_rank(dense)


def _fraction_rank(rows: List[List[ParamFraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if not rows[i][col].is_zero():
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        piv = rows[rank][col]
        rows[rank] = [x / piv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
