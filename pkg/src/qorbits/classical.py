"""Independent commutative oracle for orbit Hilbert profiles.

Works in the plain polynomial ring Q[X_11, ..., X_nn] with exact rational
arithmetic: the orbit ideal is generated by the entries of the matrix minimal
polynomial (X - mu_1)...(X - mu_k) and the trace conditions
Tr(X^m) = sum_i n_i mu_i^m for m < k.  Degree-truncated dimensions of the
quotient are computed by monomial-indexed Gaussian elimination.  Nothing here
touches the quantum engine; this is the classical side of the flatness
comparison."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .scalars import Rat, rat

CPoly = Dict[Tuple[int, ...], "Rat"]  # exponent tuple over the n^2 variables


def _cp_add_into(acc: CPoly, p: CPoly, c=1) -> None:
    for m, v in p.items():
        w = acc.get(m)
        w = v * c if w is None else w + v * c
        if w:
            acc[m] = w
        else:
            del acc[m]


def _cp_mul(a: CPoly, b: CPoly) -> CPoly:
    out: CPoly = {}
    for ma, va in a.items():
        for mb, vb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            w = out.get(m)
            w = va * vb if w is None else w + va * vb
            if w:
                out[m] = w
            else:
                del out[m]
    return out


def _cp_var(nvars: int, i: int) -> CPoly:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): rat(1)}


def _cp_const(nvars: int, c) -> CPoly:
    c = rat(c)
    return {(0,) * nvars: c} if c else {}


def _mono_key(m: Tuple[int, ...]):
    return (sum(m), m)


def _matrix_of_variables(n: int) -> List[List[CPoly]]:
    nv = n * n
    return [[_cp_var(nv, i * n + j) for j in range(n)] for i in range(n)]


def _mat_mul(a, b, n):
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc: CPoly = {}
            for k in range(n):
                _cp_add_into(acc, _cp_mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def orbit_ideal_generators(n: int, parts: Sequence[int], mu: Sequence) -> List[CPoly]:
    """Entries of (X - mu_1)...(X - mu_k) together with the k-1 trace
    conditions Tr(X^m) - sum n_i mu_i^m."""
    k = len(mu)
    if len(parts) != k or sum(parts) != n:
        raise ValueError("multiplicities must be a composition of n matching mu")
    mu = [rat(v) for v in mu]
    nv = n * n
    x = _matrix_of_variables(n)
    prod = [[_cp_const(nv, 1) if i == j else {} for j in range(n)] for i in range(n)]
    for val in mu:
        shifted = [[dict(x[i][j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            _cp_add_into(shifted[i][i], _cp_const(nv, -val))
        prod = _mat_mul(prod, shifted, n)
    gens = [prod[i][j] for i in range(n) for j in range(n)]
    power = [[_cp_const(nv, 1) if i == j else {} for j in range(n)] for i in range(n)]
    for m in range(1, k):
        power = _mat_mul(power, x, n)
        tr: CPoly = {}
        for i in range(n):
            _cp_add_into(tr, power[i][i])
        target = sum(rat(p) * v**m for p, v in zip(parts, mu))
        _cp_add_into(tr, _cp_const(nv, -target))
        gens.append(tr)
    return [g for g in gens if g]


def truncated_quotient_profile(nvars: int, gens: Sequence[CPoly], d: int) -> List[int]:
    """Dimensions of the degree-<=e components of Q[x_1..x_nvars]/<gens> for
    e = 0..d, by staged elimination over the monomial basis."""
    pivots: Dict[Tuple[int, ...], CPoly] = {}

    def insert(row: CPoly):
        while row:
            lead = max(row, key=_mono_key)
            piv = pivots.get(lead)
            if piv is None:
                lc = row[lead]
                pivots[lead] = {m: v / lc for m, v in row.items()}
                return lead
            c = row[lead]
            row = dict(row)
            _cp_add_into(row, piv, -c)
        return None

    by_stage: Dict[int, List[CPoly]] = {}
    for g in gens:
        e = max(sum(m) for m in g)
        if e > d:
            continue
        by_stage.setdefault(e, []).append(dict(g))
    counts = [1]
    prev_new: List[Tuple[int, ...]] = []
    # number of monomials of degree <= e in nvars variables
    from math import comb

    for e in range(1, d + 1):
        rows = list(by_stage.get(e, ()))
        for lead in prev_new:
            piv = pivots[lead]
            for i in range(nvars):
                shifted = {}
                for m, v in piv.items():
                    mm = list(m)
                    mm[i] += 1
                    shifted[tuple(mm)] = v
                rows.append(shifted)
        new = []
        for row in rows:
            lead = insert(row)
            if lead is not None:
                new.append(lead)
        prev_new = new
        total = sum(comb(nvars + j - 1, j) for j in range(e + 1))
        counts.append(total - len(pivots))
    if (0,) * nvars in pivots:
        counts[0] = 0
    return counts


def classical_orbit_profile(n: int, parts: Sequence[int], mu: Sequence, d: int) -> List[int]:
    """Hilbert profile (dim of degree-<=e functions, e = 0..d) of the classical
    orbit of matrices with eigenvalues mu of multiplicities `parts`."""
    gens = orbit_ideal_generators(n, parts, mu)
    return truncated_quotient_profile(n * n, gens, d)
