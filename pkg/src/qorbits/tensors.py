"""The standard Hecke symmetry of gl(n): R-matrix, flip, braid/quadratic
checks, and the quantum-trace weight matrix.

Operators on C^n (x) C^n are stored sparsely over exact scalars.  A composite
index I = i*n + k stands for the basis vector v_i (x) v_k (0-based)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .scalars import ParamFraction, ParamPoly, QLaurent, quantum_integer, scalar_to_str


class TensorMatrix:
    """Sparse n^2 x n^2 matrix over exact scalars, acting on C^n (x) C^n."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Dict[Tuple[int, int], object] = ()):
        self.n = n
        self.entries = {k: v for k, v in dict(entries).items() if not _is_zero(v)}

    @property
    def dim(self) -> int:
        return self.n * self.n

    @staticmethod
    def identity(n: int) -> "TensorMatrix":
        return TensorMatrix(n, {(i, i): QLaurent.one() for i in range(n * n)})

    def __getitem__(self, key):
        return self.entries.get(key, QLaurent.zero())

    def __mul__(self, other: "TensorMatrix") -> "TensorMatrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        rows: Dict[int, list] = {}
        for (r, c), v in other.entries.items():
            rows.setdefault(r, []).append((c, v))
        out: Dict[Tuple[int, int], object] = {}
        for (r, k), a in self.entries.items():
            for c, b in rows.get(k, ()):
                key = (r, c)
                w = out.get(key)
                prod = a * b
                out[key] = prod if w is None else w + prod
        return TensorMatrix(self.n, out)

    def __add__(self, other: "TensorMatrix") -> "TensorMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k)
            out[k] = v if w is None else w + v
        return TensorMatrix(self.n, out)

    def __sub__(self, other: "TensorMatrix") -> "TensorMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorMatrix":
        return TensorMatrix(self.n, {k: c * v for k, v in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, TensorMatrix) and self.n == other.n and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def first_nonzero(self):
        """Smallest-index nonzero entry, as a witness for failed identities."""
        if not self.entries:
            return None
        key = min(self.entries)
        return key, self.entries[key]

    def subs_q(self, value) -> "TensorMatrix":
        return TensorMatrix(self.n, {k: QLaurent.from_rat(v.subs_q(value)) for k, v in self.entries.items()})

    def eval_q1(self) -> "TensorMatrix":
        return TensorMatrix(self.n, {k: QLaurent.from_rat(v.eval_q1()) for k, v in self.entries.items()})


def _is_zero(v) -> bool:
    try:
        return v.is_zero()
    except AttributeError:
        return not v


def flip(n: int) -> TensorMatrix:
    """The flip operator P: v_i (x) v_k -> v_k (x) v_i; P^2 = 1."""
    one = QLaurent.one()
    return TensorMatrix(n, {(i * n + k, k * n + i): one for i in range(n) for k in range(n)})


def standard_r(n: int) -> TensorMatrix:
    """The standard gl(n) R-matrix: q on (i,i),(i,i); 1 on (i,j),(i,j) for
    i != j; and a q - q^-1 coupling at ((i,j),(j,i)) for i < j.

    Both triangular orientations satisfy the braid and quadratic conditions;
    the orientation and the leg of the partial quantum trace in the weight
    normalization are pinned jointly by requiring quantum traces of powers of
    the generator matrix to be central in the relation algebra."""
    if n < 1:
        raise ValueError("n must be positive")
    e: Dict[Tuple[int, int], QLaurent] = {}
    qq = QLaurent.q_power(1)
    one = QLaurent.one()
    hook = QLaurent({1: 1, -1: -1})  # q - q^-1
    for i in range(n):
        for j in range(n):
            idx = i * n + j
            e[(idx, idx)] = qq if i == j else one
    for i in range(n):
        for j in range(i + 1, n):
            e[(i * n + j, j * n + i)] = hook
    return TensorMatrix(n, e)


def hecke_symmetry(n: int) -> TensorMatrix:
    """S = P R, the Hecke symmetry of the vector representation of gl(n)."""
    return flip(n) * standard_r(n)


def _embed(m: TensorMatrix, legs: Tuple[int, int]) -> dict:
    """Embed an operator on legs (a, a+1) of C^n tensor-cubed, sparsely."""
    n = m.n
    out = {}
    if legs == (0, 1):
        for (r, c), v in m.entries.items():
            for k in range(n):
                out[(r * n + k, c * n + k)] = v
    elif legs == (1, 2):
        nn = n * n
        for (r, c), v in m.entries.items():
            for k in range(n):
                out[(k * nn + r, k * nn + c)] = v
    else:
        raise ValueError("legs must be (0,1) or (1,2)")
    return out


def _sparse_mul(a: dict, b: dict) -> dict:
    rows: Dict[int, list] = {}
    for (r, c), v in b.items():
        rows.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, k), x in a.items():
        for c, y in rows.get(k, ()):
            key = (r, c)
            w = out.get(key)
            prod = x * y
            out[key] = prod if w is None else w + prod
    return out


def _sparse_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        w = -v if w is None else w - v
        if _is_zero(w):
            out.pop(k, None)
        else:
            out[k] = w
    return {k: v for k, v in out.items() if not _is_zero(v)}


def check_ybe(s: TensorMatrix):
    """Exact braid identity S12 S23 S12 = S23 S12 S23 on C^n tensor-cubed.

    Returns (ok, witness); the witness is the first differing entry."""
    s12 = _embed(s, (0, 1))
    s23 = _embed(s, (1, 2))
    lhs = _sparse_mul(_sparse_mul(s12, s23), s12)
    rhs = _sparse_mul(_sparse_mul(s23, s12), s23)
    diff = _sparse_sub(lhs, rhs)
    if not diff:
        return True, None
    key = min(diff)
    return False, (key, scalar_to_str(diff[key]))


def check_hecke(s: TensorMatrix):
    """Exact quadratic condition S^2 - (q - q^-1) S = 1 (x) 1."""
    hook = QLaurent({1: 1, -1: -1})
    resid = s * s - s.scale(hook) - TensorMatrix.identity(s.n)
    if resid.is_zero():
        return True, None
    key, v = resid.first_nonzero()
    return False, (key, scalar_to_str(v))


@dataclass(frozen=True)
class WeightMatrix:
    """Diagonal weight matrix D of the quantum trace Tr_q(A) = Tr(D A)."""

    n: int
    diag: tuple

    def trace(self):
        out = QLaurent.zero()
        for d in self.diag:
            out = out + d
        return out


def partial_quantum_trace(s: TensorMatrix, diag, leg: int = 0) -> Dict[Tuple[int, int], object]:
    """Contract one tensor leg of S against a diagonal weight: the n x n
    operator {(i,j): sum_k d_k S[(k,i),(k,j)]} for leg 0, or
    {(i,j): sum_k d_k S[(i,k),(j,k)]} for leg 1."""
    n = s.n
    out: Dict[Tuple[int, int], object] = {}
    for (rr, cc), v in s.entries.items():
        a, b = divmod(rr, n)
        c, d = divmod(cc, n)
        if leg == 0:
            if a != c:
                continue
            key, w = (b, d), diag[a] * v
        else:
            if b != d:
                continue
            key, w = (a, c), diag[b] * v
        cur = out.get(key)
        out[key] = w if cur is None else cur + w
    return {k: v for k, v in out.items() if not _is_zero(v)}


def check_trace_normalization(n: int):
    """Exact check of the two weight-matrix normalizations: the leg-0 partial
    quantum trace of S is q times the identity, and Tr(D) = n-hat."""
    s = hecke_symmetry(n)
    d = weight_matrix(n)
    pt = partial_quantum_trace(s, d.diag, leg=0)
    qq = QLaurent.q_power(1)
    for i in range(n):
        v = pt.pop((i, i), QLaurent.zero())
        if v != qq:
            return False, ((i, i), scalar_to_str(v))
    if pt:
        key = min(pt)
        return False, (key, scalar_to_str(pt[key]))
    if d.trace() != quantum_integer(n):
        return False, ("trace", scalar_to_str(d.trace()))
    return True, None


def weight_matrix(n: int) -> WeightMatrix:
    """Solve the partial-trace normalization (the quantum trace of S over one
    leg equals q times the identity) for the diagonal of D, exactly.

    With the conventions of `standard_r` and the generator matrix, the
    contracted leg is the first one; this is the unique pairing that makes
    quantum traces of powers of the generator matrix central.  The system is
    n^2 conditions on n unknowns; the off-diagonal ones must vanish and the
    total Tr(D) = n-hat is asserted as a consequence."""
    s = hecke_symmetry(n)
    # condition (i,j):  sum_k d_k S[(k,i),(k,j)] = q delta_ij
    rows = []
    q = ParamPoly.from_scalar(QLaurent.q_power(1))
    zero = ParamPoly.zero()
    for i in range(n):
        for j in range(n):
            coeffs = [ParamPoly.from_scalar(s[(k * n + i, k * n + j)]) for k in range(n)]
            rhs = q if i == j else zero
            rows.append((coeffs, rhs))
    diag = _solve_dense(rows, n)
    d_ql = []
    for d in diag:
        p = d.as_poly().constant_qlaurent()
        if p is None:
            raise ArithmeticError("weight matrix entries must be Laurent in q")
        d_ql.append(p)
    dm = WeightMatrix(n, tuple(d_ql))
    if dm.trace() != quantum_integer(n):
        raise ArithmeticError("weight matrix does not satisfy Tr(D) = n-hat; wrong R orientation")
    return dm


def _solve_dense(rows, n):
    """Solve an overdetermined consistent linear system over the q-fraction
    field by Gaussian elimination; raises on inconsistency."""
    aug = [[ParamFraction.from_scalar(c) for c in coeffs] + [ParamFraction.from_scalar(r)] for coeffs, r in rows]
    pivots = []
    rank_col = 0
    ri = 0
    while ri < len(aug) and rank_col < n:
        sel = None
        for rj in range(ri, len(aug)):
            if not aug[rj][rank_col].is_zero():
                sel = rj
                break
        if sel is None:
            rank_col += 1
            continue
        aug[ri], aug[sel] = aug[sel], aug[ri]
        piv = aug[ri][rank_col]
        aug[ri] = [x / piv for x in aug[ri]]
        for rj in range(len(aug)):
            if rj != ri and not aug[rj][rank_col].is_zero():
                f = aug[rj][rank_col]
                aug[rj] = [x - f * y for x, y in zip(aug[rj], aug[ri])]
        pivots.append(rank_col)
        ri += 1
        rank_col += 1
    for rj in range(ri, len(aug)):
        if not aug[rj][n].is_zero():
            raise ArithmeticError("inconsistent trace-normalization system; flip the R orientation")
    if len(pivots) < n:
        raise ArithmeticError("underdetermined trace-normalization system")
    sol = [None] * n
    for k, col in enumerate(pivots):
        sol[col] = aug[k][n].simplify()
    return sol


def quantum_trace(d: WeightMatrix, m):
    """Tr_q(M) = Tr(D M), for M a square matrix (list of rows) over any ring
    whose elements support + and scalar *."""
    n = d.n
    if len(m) != n or any(len(row) != n for row in m):
        raise ValueError(f"matrix must be {n}x{n}")
    acc = None
    for i in range(n):
        term = d.diag[i] * m[i][i]
        acc = term if acc is None else acc + term
    return acc
