"""The extended reflection equation algebra of gl(n).

Generators sit in an n x n matrix L (entry (i, j) is the generator L[i][j],
encoded as letter i*n+j of the free algebra); the defining relations are the
n^4 entries of

    S L2 S L2 - L2 S L2 S - q t (L2 S - S L2),

with S the Hecke symmetry and L2 = 1 (x) L.  A `Presentation` couples the
relations (plus optional quotient relations) with a degree-truncated
normal-form engine and the quantum-trace data."""

from __future__ import annotations

from functools import lru_cache
from math import gcd as _igcd
from typing import Dict, List, Tuple

from .engine import Row, TruncatedIdeal
from .scalars import (
    ParamFraction,
    ParamPoly,
    PoleAtQ1Error,
    QLaurent,
    _as_parampoly,
    poly_gcd,
    rat,
    scalar_to_str,
)
from .tensors import TensorMatrix, hecke_symmetry, weight_matrix

Word = Tuple[int, ...]


def gen_letter(n: int, i: int, j: int) -> int:
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"generator index ({i},{j}) out of range for n={n}")
    return i * n + j


def letter_name(n: int, g: int) -> str:
    i, j = divmod(g, n)
    return f"L{i + 1}{j + 1}" if n < 10 else f"L[{i + 1},{j + 1}]"


class AlgebraElement:
    """Finite linear combination of words in the n^2 generators, with exact
    scalar coefficients (ParamPoly, or ParamFraction after normal forms)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[Word, object] = ()):
        self.n = n
        tt = {}
        for w, c in dict(terms).items():
            if not isinstance(c, (ParamPoly, ParamFraction)):
                c = _as_parampoly(c)
                if c is NotImplemented:
                    raise TypeError("coefficients must be scalars")
            if not c.is_zero():
                tt[tuple(w)] = c
        self.terms = tt

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "AlgebraElement":
        return AlgebraElement(n)

    @staticmethod
    def unit(n: int, coeff=1) -> "AlgebraElement":
        return AlgebraElement(n, {(): coeff})

    @staticmethod
    def generator(n: int, i: int, j: int) -> "AlgebraElement":
        return AlgebraElement(n, {(gen_letter(n, i, j),): 1})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coefficient(self, word: Word):
        return self.terms.get(tuple(word), ParamPoly.zero())

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        tt = dict(self.terms)
        for w, c in other.terms.items():
            cur = tt.get(w)
            cur = c if cur is None else cur + c
            if cur.is_zero():
                tt.pop(w, None)
            else:
                tt[w] = cur
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.terms = tt
        return out

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        out = AlgebraElement.__new__(AlgebraElement)
        out.n = self.n
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            tt: Dict[Word, object] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    cur = tt.get(w)
                    cur = c if cur is None else cur + c
                    if cur.is_zero():
                        tt.pop(w, None)
                    else:
                        tt[w] = cur
            out = AlgebraElement.__new__(AlgebraElement)
            out.n = self.n
            out.terms = tt
            return out
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, c) -> "AlgebraElement":
        if not isinstance(c, (ParamPoly, ParamFraction)):
            cc = _as_parampoly(c)
            if cc is NotImplemented:
                raise TypeError(f"cannot scale by {type(c).__name__}")
            c = cc
        if c.is_zero():
            return AlgebraElement.zero(self.n)
        return AlgebraElement(self.n, {w: c * v for w, v in self.terms.items()})

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.n == other.n and (self - other).is_zero()
        return NotImplemented

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.n != self.n:
                raise ValueError("mixed-rank algebra elements")
            return other
        return AlgebraElement.unit(self.n, other)

    # -- maps -------------------------------------------------------------------

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement(self.n, {w: fn(c) for w, c in self.terms.items()})

    def shift_generators(self, c) -> "AlgebraElement":
        """Substitute L[i][j] -> L[i][j] - c*delta_ij in every word and expand."""
        n = self.n
        shifted = {}
        out = AlgebraElement.zero(n)
        for w, coeff in self.terms.items():
            term = AlgebraElement.unit(n, coeff)
            for g in w:
                factor = shifted.get(g)
                if factor is None:
                    i, j = divmod(g, n)
                    factor = AlgebraElement(n, {(g,): 1})
                    if i == j:
                        factor = factor - AlgebraElement.unit(n, c)
                    shifted[g] = factor
                term = term * factor
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            cs = scalar_to_str(c)
            ws = "*".join(letter_name(self.n, g) for g in w) if w else "1"
            parts.append(f"({cs})*{ws}" if w else f"({cs})")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement<{self}>"


def generator_matrix(n: int) -> List[List[AlgebraElement]]:
    """The matrix L of generators: entry (i, j) is L[i][j]."""
    return [[AlgebraElement.generator(n, i, j) for j in range(n)] for i in range(n)]


def identity_matrix(n: int, coeff=1) -> List[List[AlgebraElement]]:
    z = AlgebraElement.zero(n)
    return [[AlgebraElement.unit(n, coeff) if i == j else z for j in range(n)] for i in range(n)]


def mat_mul(a, b, reduce=None):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                x = a[i][k]
                y = b[k][j]
                if x.is_zero() or y.is_zero():
                    continue
                p = x * y
                acc = p if acc is None else acc + p
            if acc is None:
                acc = AlgebraElement.zero(a[i][0].n)
            row.append(reduce(acc) if reduce is not None else acc)
        out.append(row)
    return out


# -----------------------------------------------------------------------------
# relation extraction
# -----------------------------------------------------------------------------


def _amat_from_tensor(s: TensorMatrix, n: int) -> dict:
    return {k: AlgebraElement.unit(n, ParamPoly.from_scalar(v)) for k, v in s.entries.items()}


def _amat_l2(n: int) -> dict:
    out = {}
    for i in range(n):
        for k in range(n):
            for l in range(n):
                out[(i * n + k, i * n + l)] = AlgebraElement(n, {(gen_letter(n, k, l),): 1})
    return out


def _amat_mul(a: dict, b: dict) -> dict:
    rows: Dict[int, list] = {}
    for (r, c), v in b.items():
        rows.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, k), x in a.items():
        for c, y in rows.get(k, ()):
            key = (r, c)
            p = x * y
            cur = out.get(key)
            out[key] = p if cur is None else cur + p
    return {k: v for k, v in out.items() if not v.is_zero()}


def extract_relations(s: TensorMatrix, n: int) -> List[AlgebraElement]:
    """The n^4 defining relations, one per matrix entry of

        S L2 S L2 - L2 S L2 S - q t (L2 S - S L2),

    in row-major entry order.  q and t stay symbolic; entries that vanish
    identically are kept as zeros so that exactly n^4 relations are returned."""
    qt = ParamPoly.symbol("t", coeff=QLaurent.q_power(1))
    sa = _amat_from_tensor(s, n)
    l2 = _amat_l2(n)
    sl2 = _amat_mul(sa, l2)  # S L2
    l2s = _amat_mul(l2, sa)  # L2 S
    lhs = _amat_mul(_amat_mul(sl2, sa), l2)  # ((S L2) S) L2
    rhs = _amat_mul(_amat_mul(l2s, l2), sa)  # ((L2 S) L2) S
    zero = AlgebraElement.zero(n)
    nn = n * n
    rels = []
    for r in range(nn):
        for c in range(nn):
            e = lhs.get((r, c), zero) - rhs.get((r, c), zero)
            lin = l2s.get((r, c), zero) - sl2.get((r, c), zero)
            rels.append(e - lin.scale(qt))
    return rels


# -----------------------------------------------------------------------------
# presentations: relations + truncated normal-form engine
# -----------------------------------------------------------------------------


def _specialize(coeff, q_mode, t_mode):
    """Apply the q/t specialization of a presentation to one scalar."""
    if isinstance(coeff, ParamFraction):
        num = _specialize(coeff.num, q_mode, t_mode)
        den = _specialize(coeff.den, q_mode, t_mode)
        if den.is_zero():
            raise PoleAtQ1Error(f"specialization makes a denominator vanish: {coeff}")
        return ParamFraction(num, den)
    coeff = ParamPoly.from_scalar(coeff)
    if t_mode != "symbolic":
        coeff = coeff.substitute({"t": ParamPoly.from_scalar(rat(t_mode))})
    if q_mode != "symbolic":
        coeff = coeff.subs_q(rat(q_mode))
    return coeff


def _poly_to_coeff_dict(p: ParamPoly) -> Dict[Tuple[int, int], "rat"]:
    """ParamPoly in q and t only -> {(q_exp, t_exp): Rat}."""
    out = {}
    for mono, ql in p.terms.items():
        te = 0
        for s, e in mono:
            if s != "t":
                raise ValueError(f"engine scalars must involve only q and t, got symbol {s!r}")
            te = e
        for qe, v in ql.c.items():
            out[(qe, te)] = out.get((qe, te), rat(0)) + v
    return {k: v for k, v in out.items() if v}


def _coeff_dict_to_poly(cf: Dict[Tuple[int, int], int]) -> ParamPoly:
    by_t: Dict[int, dict] = {}
    for (qe, te), v in cf.items():
        by_t.setdefault(te, {})[qe] = v
    terms = {}
    for te, qc in by_t.items():
        mono = (("t", te),) if te else ()
        terms[mono] = QLaurent(qc)
    return ParamPoly(terms)


class Presentation:
    """A truncated presentation: defining relations of the two-parameter
    algebra (plus optional quotient relations such as matrix-polynomial and
    trace conditions), with canonical normal forms up to a degree bound.

    q_mode / t_mode pick the coefficient regime: "symbolic", or an exact
    rational value (q must be nonzero; q=1 and t=0 give the classical limits).
    """

    def __init__(
        self,
        n: int,
        degree: int,
        *,
        q_mode="symbolic",
        t_mode="symbolic",
        extra_relations=(),
        include_defining=True,
    ):
        if degree < 1:
            raise ValueError("truncation degree must be at least 1")
        self.n = n
        self.degree = degree
        self.q_mode = q_mode
        self.t_mode = t_mode
        self.hecke = hecke_symmetry(n)
        self.weights = weight_matrix(n)
        rels: List[AlgebraElement] = []
        if include_defining:
            rels.extend(extract_relations(self.hecke, n))
        rels.extend(extra_relations)
        self.relations = rels
        self.ideal = TruncatedIdeal(n * n, degree)
        rows = []
        for r in rels:
            if r.degree() > degree:
                # a relation only contributes to the span from its own
                # construction degree on, so it is invisible below truncation
                continue
            row, _ = self._element_to_row(r)
            if row:
                rows.append(row)
        self.ideal.build(rows)
        self._gen_elements = [AlgebraElement(n, {(g,): 1}) for g in range(n * n)]
        self._power_cache: Dict[int, list] = {}

    # -- scalar plumbing --------------------------------------------------------

    def specialize(self, coeff):
        return _specialize(coeff, self.q_mode, self.t_mode)

    def weight_diag(self) -> List[ParamPoly]:
        return [self.specialize(ParamPoly.from_scalar(d)) for d in self.weights.diag]

    def _element_to_row(self, x: AlgebraElement) -> Tuple[Row, ParamFraction]:
        """Integer engine row plus the exact scale s with row = s * x."""
        table = self.ideal.table
        one = ParamPoly.one()
        parts = []
        den_total = one
        for w, c in x.terms.items():
            if len(w) > self.degree:
                raise ValueError(f"degree {len(w)} exceeds truncation {self.degree}")
            c = self.specialize(c)
            f = ParamFraction.from_scalar(c).simplify()
            if f.is_zero():
                continue
            parts.append((table.index(w), f))
            if f.den != one:
                shared = poly_gcd(den_total, f.den)
                extra = f.den.divexact(shared)
                assert extra is not None
                den_total = den_total * extra
        num_of: Dict[int, ParamPoly] = {}
        lcm = 1
        for idx, f in parts:
            mult = den_total.divexact(f.den)
            assert mult is not None
            p = f.num * mult
            num_of[idx] = p
            for ql in p.terms.values():
                for v in ql.c.values():
                    d = int(v.denominator)
                    lcm = lcm * d // _igcd(lcm, d)
        row: Row = {}
        for idx, p in num_of.items():
            cf = {k: int(v * lcm) for k, v in _poly_to_coeff_dict(p).items()}
            if cf:
                row[idx] = cf
        scale = ParamFraction(den_total * rat(lcm))
        return row, scale

    def _row_to_element(self, row: Row, den) -> AlgebraElement:
        table = self.ideal.table
        terms = {}
        for idx, cf in row.items():
            p = _coeff_dict_to_poly(cf)
            c = (ParamFraction.from_scalar(p) / den).simplify()
            try:
                c = c.as_poly()
            except Exception:
                pass
            terms[table.word(idx)] = c
        return AlgebraElement(self.n, terms)

    # -- normal forms -------------------------------------------------------------

    def normal_form(self, x: AlgebraElement) -> AlgebraElement:
        """Canonical representative of x modulo the truncated relation ideal.

        Linear, idempotent, and zero exactly on (the computed span of) the
        ideal; the result is supported on non-pivot words only."""
        row, scale = self._element_to_row(x)
        res, alpha = self.ideal.reduce_tracked(row)
        if not res:
            return AlgebraElement.zero(self.n)
        den = ParamFraction.from_scalar(_coeff_dict_to_poly(alpha)) * scale
        return self._row_to_element(res, den)

    def reduces_to_zero(self, x: AlgebraElement) -> bool:
        row, _ = self._element_to_row(x)
        return self.ideal.contains(row)

    def profile(self) -> List[int]:
        """Filtration dimensions dim_<=e of the truncated quotient, e = 0..degree."""
        return list(self.ideal.profile)

    # -- matrix powers, quantum traces, centrality -------------------------------

    def matrix_power(self, m: int) -> List[List[AlgebraElement]]:
        """Entries of L^m in normal form; L^0 is the identity."""
        if m < 0:
            raise ValueError("matrix powers only for m >= 0")
        if m > self.degree:
            raise ValueError(f"L^{m} exceeds truncation degree {self.degree}")
        if m in self._power_cache:
            return self._power_cache[m]
        if m == 0:
            out = identity_matrix(self.n)
        elif m == 1:
            out = generator_matrix(self.n)
        else:
            out = mat_mul(self.matrix_power(m - 1), generator_matrix(self.n), reduce=self.normal_form)
        self._power_cache[m] = out
        return out

    def s_element(self, m: int) -> AlgebraElement:
        """The invariant s_m = Tr_q(L^m) in normal form."""
        diag = self.weight_diag()
        power = self.matrix_power(m)
        acc = AlgebraElement.zero(self.n)
        for i in range(self.n):
            acc = acc + power[i][i].scale(diag[i])
        return self.normal_form(acc)

    def is_central(self, x: AlgebraElement):
        """Whether [x, L[i][j]] reduces to zero for every generator.

        Returns (ok, witness); the witness names the offending generator and
        the nonzero normal form of the commutator."""
        if x.degree() + 1 > self.degree:
            raise ValueError("centrality check needs one degree of headroom")
        for g, gel in enumerate(self._gen_elements):
            c = x * gel - gel * x
            nf = self.normal_form(c)
            if not nf.is_zero():
                return False, (letter_name(self.n, g), nf)
        return True, None


@lru_cache(maxsize=None)
def ere_presentation(n: int, degree: int, q_mode="symbolic", t_mode="symbolic") -> Presentation:
    """Cached presentation of the two-parameter algebra itself (no quotient)."""
    return Presentation(n, degree, q_mode=q_mode, t_mode=t_mode)
