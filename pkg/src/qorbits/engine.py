"""Degree-truncated spans of two-sided ideals in a free algebra, by exact
staged row reduction.

Rows are vectors over words (indexed densely in degree-then-lex order) with
coefficients in Z[q, q^-1, t], stored as {(q_exp, t_exp): int}.  The span is
taken over the fraction field Q(q, t), so rows are defined only up to scaling:
the engine keeps them integer, primitive, and shifted to valuation zero in
both q and t, and eliminates by cross-multiplication.  This is fraction-free
Gaussian elimination; no rational-function arithmetic happens in the hot path.

Stage e of the build inserts the defining relations whose construction degree
is e together with all one-letter products g*w and w*g of the pivot rows
registered at stage e-1.  By induction the echelon after stage e spans exactly
span{ a * r * b : deg(a r b) <= e }, so the running corank per degree is the
filtration dimension sequence of the truncated quotient.
"""

from __future__ import annotations

from bisect import bisect_right
from math import gcd as _igcd
from typing import Dict, Iterable, List, Optional, Tuple

Coeff = Dict[Tuple[int, int], int]
Row = Dict[int, Coeff]


def c_one() -> Coeff:
    return {(0, 0): 1}


def c_mul(a: Coeff, b: Coeff) -> Coeff:
    if len(a) == 1:
        (qa, ta), ca = next(iter(a.items()))
        if qa == 0 and ta == 0 and ca == 1:
            return dict(b)
        return {(qb + qa, tb + ta): cb * ca for (qb, tb), cb in b.items()}
    if len(b) == 1:
        return c_mul(b, a)
    out: Coeff = {}
    get = out.get
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            k = (qa + qb, ta + tb)
            v = get(k)
            v = ca * cb if v is None else v + ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def c_neg(a: Coeff) -> Coeff:
    return {k: -v for k, v in a.items()}


class WordTable:
    """Dense indexing of free-monoid words of degree <= dmax over ngen letters,
    ordered by degree first and lexicographically within a degree."""

    def __init__(self, ngen: int, dmax: int):
        self.ngen = ngen
        self.dmax = dmax
        offsets = [0]
        total = 0
        p = 1
        self.powers = [1]
        for _ in range(dmax + 1):
            total += p
            offsets.append(total)
            p *= ngen
            self.powers.append(p)
        self.offsets = offsets  # offsets[e] = first index of degree-e words

    def count_le(self, e: int) -> int:
        return self.offsets[min(e, self.dmax) + 1]

    def degree(self, idx: int) -> int:
        return bisect_right(self.offsets, idx) - 1

    def locate(self, idx: int) -> Tuple[int, int]:
        e = bisect_right(self.offsets, idx) - 1
        return e, idx - self.offsets[e]

    def index(self, word: Tuple[int, ...]) -> int:
        if len(word) > self.dmax:
            raise ValueError("word exceeds the truncation degree")
        v = 0
        for g in word:
            v = v * self.ngen + g
        return self.offsets[len(word)] + v

    def word(self, idx: int) -> Tuple[int, ...]:
        e, v = self.locate(idx)
        out = []
        for _ in range(e):
            v, r = divmod(v, self.ngen)
            out.append(r)
        return tuple(reversed(out))

    def append_letter(self, idx: int, g: int) -> int:
        e, v = self.locate(idx)
        return self.offsets[e + 1] + v * self.ngen + g

    def prepend_letter(self, idx: int, g: int) -> int:
        e, v = self.locate(idx)
        return self.offsets[e + 1] + g * self.powers[e] + v


def _row_normalize(row: Row) -> Row:
    """Scale a row canonically in place: integer-primitive, q- and t-valuation
    zero, positive leading term on the leading word."""
    if not row:
        return row
    g = 0
    qmin = tmin = None
    for cf in row.values():
        for (qe, te), v in cf.items():
            g = _igcd(g, v)
            if qmin is None:
                qmin, tmin = qe, te
            else:
                if qe < qmin:
                    qmin = qe
                if te < tmin:
                    tmin = te
    lead = row[max(row)]
    if lead[max(lead)] < 0:
        g = -g
    if g == 1 and qmin == 0 and tmin == 0:
        return row
    for w, cf in row.items():
        row[w] = {(qe - qmin, te - tmin): v // g for (qe, te), v in cf.items()}
    return row


def _row_combine(row: Row, a: Coeff, piv: Row, b: Coeff) -> Row:
    """a*row - b*piv.  Consumes `row`; never touches the dicts of `piv`."""
    b = dict(b)  # b may alias an entry of row, which is mutated below
    out: Row = {}
    if len(a) == 1 and a.get((0, 0)) == 1:
        out.update(row)
    else:
        for w, cf in row.items():
            out[w] = c_mul(a, cf)
    for w, cf in piv.items():
        d = c_mul(b, cf)
        cur = out.get(w)
        if cur is None:
            out[w] = c_neg(d)
            continue
        for k, v in d.items():
            x = cur.get(k)
            x = -v if x is None else x - v
            if x:
                cur[k] = x
            else:
                del cur[k]
        if not cur:
            del out[w]
    return out


def _normalize_pair(row: Row, alpha: Coeff) -> Tuple[Row, Coeff]:
    """Strip common content of a row and its tracked multiplier jointly, so the
    exact ratio row/alpha is preserved."""
    if not row:
        return row, c_one()
    g = 0
    qmin = tmin = None
    for cf in row.values():
        for (qe, te), v in cf.items():
            g = _igcd(g, v)
            if qmin is None:
                qmin, tmin = qe, te
            else:
                if qe < qmin:
                    qmin = qe
                if te < tmin:
                    tmin = te
    for (qe, te), v in alpha.items():
        g = _igcd(g, v)
        if qe < qmin:
            qmin = qe
        if te < tmin:
            tmin = te
    if g == 1 and qmin == 0 and tmin == 0:
        return row, alpha
    for w, cf in row.items():
        row[w] = {(qe - qmin, te - tmin): v // g for (qe, te), v in cf.items()}
    alpha = {(qe - qmin, te - tmin): v // g for (qe, te), v in alpha.items()}
    return row, alpha


class TruncatedIdeal:
    """Row-reduced basis of a degree-truncated two-sided ideal span.

    After `build`, `pivots` maps a leading word index to its row and
    `profile[e]` is the dimension of the degree-<=e filtration component of
    the quotient (the corank of the span)."""

    def __init__(self, ngen: int, dmax: int):
        self.table = WordTable(ngen, dmax)
        self.ngen = ngen
        self.dmax = dmax
        self.pivots: Dict[int, Row] = {}
        self.profile: List[int] = [1]
        self._built = False

    def build(self, relations: Iterable[Row]) -> "TruncatedIdeal":
        by_stage: Dict[int, List[Row]] = {}
        for row in relations:
            row = _row_normalize({w: dict(cf) for w, cf in row.items()})
            if not row:
                continue
            e = self.table.degree(max(row))
            if e > self.dmax:
                raise ValueError("relation exceeds the truncation degree")
            by_stage.setdefault(e, []).append(row)
        table = self.table
        gens = range(self.ngen)
        prev_new: List[int] = []
        self.profile = [1]
        for e in range(1, self.dmax + 1):
            rows = list(by_stage.get(e, ()))
            for wpiv in prev_new:
                piv = self.pivots[wpiv]
                for g in gens:
                    rows.append({table.prepend_letter(w, g): dict(cf) for w, cf in piv.items()})
                    rows.append({table.append_letter(w, g): dict(cf) for w, cf in piv.items()})
            new_pivots = []
            insert = self._insert
            for row in rows:
                w = insert(row)
                if w is not None:
                    new_pivots.append(w)
            prev_new = new_pivots
            self.profile.append(table.count_le(e) - len(self.pivots))
        if 0 in self.pivots:
            self.profile[0] = 0
        self._built = True
        return self

    def _insert(self, row: Row) -> Optional[int]:
        pivots = self.pivots
        row = _row_normalize(row)
        while row:
            w = max(row)
            piv = pivots.get(w)
            if piv is None:
                pivots[w] = row
                return w
            row = _row_combine(row, piv[w], piv, row[w])
            row = _row_normalize(row)
        return None

    # -- queries --------------------------------------------------------------

    def rank(self) -> int:
        return len(self.pivots)

    def standard_words(self, deg: Optional[int] = None) -> List[int]:
        """Word indices not occupied by pivots, up to the given degree."""
        top = self.table.count_le(self.dmax if deg is None else deg)
        return [w for w in range(top) if w not in self.pivots]

    def reduce_tracked(self, row: Row) -> Tuple[Row, Coeff]:
        """Greedy elimination of every pivot word from `row`.

        Returns (res, alpha) with res = alpha * row modulo the span; res has no
        pivot word left, so res/alpha is the canonical normal form."""
        pivots = self.pivots
        row = {w: dict(cf) for w, cf in row.items()}
        alpha = c_one()
        while True:
            w = -1
            for k in row:
                if k > w and k in pivots:
                    w = k
            if w < 0:
                break
            piv = pivots[w]
            a = piv[w]
            row = _row_combine(row, a, piv, row[w])
            alpha = c_mul(alpha, a)
            row, alpha = _normalize_pair(row, alpha)
        return row, alpha

    def contains(self, row: Row) -> bool:
        res, _ = self.reduce_tracked(row)
        return not res
