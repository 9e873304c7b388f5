"""The center of the two-parameter algebra: quantum Newton identities between
power traces s_m and characteristic coefficients sigma_m, the Cayley-Hamilton
residual, elementary symmetric values, and the linear recurrence elements that
cut out the invariant ideal of an orbit."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .ere import AlgebraElement, Presentation, generator_matrix, identity_matrix, mat_mul
from .scalars import (
    ParamFraction,
    ParamPoly,
    QLaurent,
    quantum_integer,
    rat,
)

# ---------------------------------------------------------------------------
# scalar-level Newton identities
# ---------------------------------------------------------------------------


def _mhat_fraction(m: int, q_mode="symbolic") -> ParamFraction:
    ql = quantum_integer(m)
    if q_mode != "symbolic":
        val = ql.subs_q(q_mode)
        if not val:
            raise ZeroDivisionError(f"quantum integer {m} vanishes at q={q_mode}")
        return ParamFraction(ParamPoly.one(), ParamPoly.from_scalar(QLaurent.from_rat(val)))
    return ParamFraction(ParamPoly.one(), ParamPoly.from_scalar(ql))


def _mhat_scalar(m: int, q_mode="symbolic"):
    ql = quantum_integer(m)
    if q_mode != "symbolic":
        return ParamPoly.from_scalar(QLaurent.from_rat(ql.subs_q(q_mode)))
    return ParamPoly.from_scalar(ql)


def sigma_from_s(s: Sequence, M: int, q_mode="symbolic") -> list:
    """Solve the quantum Newton identities

        m-hat sigma_m - s_1 sigma_{m-1} + s_2 sigma_{m-2} - ... + (-1)^m s_m = 0

    for sigma_1..sigma_M, given scalar power traces s (indexed from 0; s[0] is
    unused).  Returns [sigma_0 .. sigma_M] with sigma_0 = 1."""
    sigma = [ParamFraction.one()]
    for m in range(1, M + 1):
        acc = ParamFraction.zero()
        for i in range(1, m + 1):
            term = ParamFraction.from_scalar(s[i]) * ParamFraction.from_scalar(sigma[m - i])
            acc = acc + (term if i % 2 == 1 else -term)
        sigma.append((acc * _mhat_fraction(m, q_mode)).simplify())
    return sigma


def s_from_sigma(sigma: Sequence, M: int, q_mode="symbolic") -> list:
    """Invert the Newton identities: recover s_1..s_M from sigma_1..sigma_M
    (entries of `sigma` beyond its length count as zero).  Returns
    [s_0 .. s_M] with s_0 left as None (it is rank data, not determined)."""

    def sig(i):
        if i < len(sigma):
            return ParamFraction.from_scalar(sigma[i])
        return ParamFraction.zero()

    s: list = [None]
    for m in range(1, M + 1):
        acc = ParamFraction.from_scalar(_mhat_scalar(m, q_mode)) * sig(m)
        for i in range(1, m):
            term = ParamFraction.from_scalar(s[i]) * sig(m - i)
            acc = acc + (-term if i % 2 == 1 else term)
        val = acc if (m + 1) % 2 == 0 else -acc
        s.append(val.simplify())
    return s


def newton_residual(s: Sequence, sigma: Sequence, m: int, q_mode="symbolic"):
    """The left-hand side of the m-th Newton identity for given scalar
    sequences; zero iff the identity holds."""

    def sig(i):
        return ParamFraction.from_scalar(sigma[i]) if i < len(sigma) else ParamFraction.zero()

    acc = ParamFraction.from_scalar(_mhat_scalar(m, q_mode)) * sig(m)
    for i in range(1, m + 1):
        term = ParamFraction.from_scalar(s[i]) * sig(m - i)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc.simplify()


def elementary_symmetric(mu: Sequence, i: int):
    """The elementary symmetric polynomial e_i(mu); e_0 = 1."""
    k = len(mu)
    if not (0 <= i <= k):
        raise ValueError(f"elementary symmetric index {i} out of range 0..{k}")
    return elementary_symmetric_all(mu)[i]


def elementary_symmetric_all(mu: Sequence) -> list:
    """All e_0..e_k(mu), by the product recurrence."""
    es = [ParamPoly.one()]
    for x in mu:
        x = ParamPoly.from_scalar(x) if not isinstance(x, (ParamPoly, ParamFraction)) else x
        new = [ParamPoly.one()]
        for i in range(1, len(es) + 1):
            prev = es[i] if i < len(es) else None
            low = es[i - 1]
            term = low * x
            new.append(term if prev is None else prev + term)
        es = new
    return es


def r_sequence(x: Sequence, mu: Sequence, m: int):
    """The recurrence combination x_m - e_1(mu) x_{m-1} + ... + (-1)^k e_k(mu) x_{m-k}.

    `x` is indexed from 0 and must reach down to index m - k."""
    k = len(mu)
    if m < k:
        raise ValueError(f"recurrence index m={m} must be at least k={k}")
    if m >= len(x):
        raise ValueError(f"sequence too short for index m={m}")
    es = elementary_symmetric_all(mu)
    acc = None
    for i in range(k + 1):
        term = es[i] * x[m - i]
        if i % 2 == 1:
            term = -term
        acc = term if acc is None else acc + term
    return acc


# ---------------------------------------------------------------------------
# center of a presentation: traces, Newton sigmas, Cayley-Hamilton
# ---------------------------------------------------------------------------


def power_traces(pres: Presentation, M: int) -> List[AlgebraElement]:
    """[s_0, ..., s_M] as reduced elements; s_0 = n-hat times the unit."""
    return [pres.s_element(m) for m in range(M + 1)]


def newton_sigma(pres: Presentation, M: int) -> List[AlgebraElement]:
    """Central elements sigma_1..sigma_M defined by the quantum Newton
    recursion from the power traces, reduced to normal form.  Requires the
    quantum integers to be invertible in the coefficient field (true for
    symbolic q and for rational q that is not a root of the relevant 1-q^-2m)."""
    s = power_traces(pres, M)
    sigma = [AlgebraElement.unit(pres.n, 1)]
    for m in range(1, M + 1):
        acc = AlgebraElement.zero(pres.n)
        for i in range(1, m + 1):
            term = pres.normal_form(s[i] * sigma[m - i])
            acc = acc + (term if i % 2 == 1 else -term)
        sigma.append(pres.normal_form(acc.scale(_mhat_fraction(m, pres.q_mode))))
    return sigma


def cayley_hamilton_residual(pres: Presentation, shift: Optional[object] = None) -> List[List[AlgebraElement]]:
    """Normal forms of the entries of

        M^n - sigma_1 M^{n-1} + ... + (-1)^n sigma_n,

    where M = L - shift (default: M = L) and the sigma_i come from the Newton
    recursion applied to the traces Tr_q(M^m).  A zero matrix certifies the
    Cayley-Hamilton identity for that matrix within the truncation."""
    n = pres.n
    if shift is None:
        powers = [pres.matrix_power(m) for m in range(n + 1)]
    else:
        base = generator_matrix(n)
        shifted = [[base[i][j] - AlgebraElement.unit(n, shift) if i == j else base[i][j] for j in range(n)] for i in range(n)]
        powers = [identity_matrix(n)]
        for _ in range(n):
            powers.append(mat_mul(powers[-1], shifted, reduce=pres.normal_form))
    diag = pres.weight_diag()
    s = [AlgebraElement.zero(n)] * (n + 1)
    for m in range(n + 1):
        acc = AlgebraElement.zero(n)
        for i in range(n):
            acc = acc + powers[m][i][i].scale(diag[i])
        s[m] = pres.normal_form(acc)
    sigma = [AlgebraElement.unit(n, 1)]
    for m in range(1, n + 1):
        acc = AlgebraElement.zero(n)
        for i in range(1, m + 1):
            term = pres.normal_form(s[i] * sigma[m - i])
            acc = acc + (term if i % 2 == 1 else -term)
        sigma.append(pres.normal_form(acc.scale(_mhat_fraction(m, pres.q_mode))))
    total = [[powers[n][i][j] for j in range(n)] for i in range(n)]
    for i in range(1, n + 1):
        p = powers[n - i]
        sign = rat(-1) ** i
        for r in range(n):
            for c in range(n):
                total[r][c] = total[r][c] + (sigma[i] * p[r][c]).scale(sign)
    return [[pres.normal_form(total[r][c]) for c in range(n)] for r in range(n)]


def cayley_hamilton_check(pres: Presentation, shift=None) -> Tuple[bool, List[List[AlgebraElement]]]:
    """Whether the Cayley-Hamilton combination with Newton sigmas reduces to
    zero entrywise; returns (ok, residual matrix)."""
    res = cayley_hamilton_residual(pres, shift=shift)
    ok = all(res[i][j].is_zero() for i in range(pres.n) for j in range(pres.n))
    return ok, res


def generator_shift_scalar(pres: Presentation) -> ParamFraction:
    """The scalar t / (1 - q^-2) of the shift endomorphism; needs symbolic q."""
    if pres.q_mode != "symbolic":
        raise ValueError("the generator shift needs symbolic q (pole in 1 - q^-2)")
    t = ParamPoly.symbol("t") if pres.t_mode == "symbolic" else ParamPoly.from_scalar(rat(pres.t_mode))
    one_minus = ParamPoly.from_scalar(QLaurent({0: 1, -2: -1}))
    return ParamFraction(t, one_minus)
