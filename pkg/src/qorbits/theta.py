"""Polynomial values of quantum traces on quantized orbits.

For a composition (n_1, ..., n_k) of n and eigenvalue parameters mu_i, the
polynomial theta_m gives the value of the invariant s_m = Tr_q(L^m) on the
corresponding orbit.  Three routes are implemented and cross-checked: the
direct combinatorial expansion, the rational-coefficient representation
sum_j C_j mu_j^m, and substitutions from the multiplicity-free case.  The
two-parameter value theta_m(.., t) arises from the C_j route by shifting all
arguments by t / (1 - q^-2); the denominators cancel and the result is
certified to be a polynomial by exact division."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from .scalars import (
    ExactDivisionError,
    ParamFraction,
    ParamPoly,
    QLaurent,
    quantum_integer,
    rat,
)

# (1 - q^-2) as a Laurent polynomial
_ONE_MINUS_QM2 = QLaurent({0: 1, -2: -1})


@dataclass(frozen=True)
class Composition:
    """A k-tuple of non-negative integers; the parts are eigenvalue
    multiplicities, so zero parts are allowed."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts) or not self.parts:
            raise ValueError(f"composition parts must be non-negative: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def is_positive(self) -> bool:
        return all(p > 0 for p in self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def compositions(n: int, k: int) -> List[Composition]:
    """All of {n:k} (parts >= 0 summing to n), largest first part first;
    there are C(n+k-1, k-1) of them."""
    out = []

    def rec(prefix, rest, slots):
        if slots == 1:
            out.append(Composition(prefix + (rest,)))
            return
        for p in range(rest, -1, -1):
            rec(prefix + (p,), rest - p, slots - 1)

    rec((), n, k)
    assert len(out) == comb(n + k - 1, k - 1)
    return out


def positive_compositions(m: int, length: int):
    """All tuples of `length` positive integers summing to m."""
    if length == 0:
        if m == 0:
            yield ()
        return
    if m < length:
        return
    for cuts in combinations(range(1, m), length - 1):
        prev = 0
        parts = []
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(m - prev)
        yield tuple(parts)


def mu_symbols(k: int) -> List[ParamPoly]:
    return [ParamPoly.symbol(f"mu{j + 1}") for j in range(k)]


def lam_symbols(n: int) -> List[ParamPoly]:
    return [ParamPoly.symbol(f"lam{i + 1}") for i in range(n)]


def multiplicity_weights(comp: Composition, symbolic: bool = False) -> List[ParamPoly]:
    """The quantum integers n_i-hat of the parts, or opaque nu_i symbols when
    the identities are to be tested uniformly in the multiplicities."""
    if symbolic:
        return [ParamPoly.symbol(f"nu{i + 1}") for i in range(comp.k)]
    return [ParamPoly.from_scalar(quantum_integer(p)) for p in comp.parts]


def _resolve(comp, mu, nhat):
    if mu is None:
        mu = mu_symbols(comp.k)
    mu = [m if isinstance(m, (ParamPoly, ParamFraction)) else ParamPoly.from_scalar(m) for m in mu]
    if len(mu) != comp.k:
        raise ValueError("need one eigenvalue parameter per part")
    if nhat is None:
        nhat = multiplicity_weights(comp)
    elif nhat == "symbolic":
        nhat = multiplicity_weights(comp, symbolic=True)
    return mu, nhat


def theta(comp: Composition, m: int, mu=None, nhat=None) -> ParamPoly:
    """Direct expansion: for m > 0,

        sum_{l=1}^{k} (1-q^-2)^(l-1) sum_{d pos. comp. of m into l parts}
            sum_{i_1<...<i_l} nhat_{i_1}..nhat_{i_l} mu_{i_1}^{d_1}..mu_{i_l}^{d_l},

    and the quantum integer n-hat for m = 0."""
    if m < 0:
        raise ValueError("m must be non-negative")
    mu, nhat = _resolve(comp, mu, nhat)
    if m == 0:
        if any(isinstance(h, ParamPoly) and h.symbols() for h in nhat):
            raise ValueError("theta_0 needs concrete multiplicities (it equals n-hat)")
        return ParamPoly.from_scalar(quantum_integer(comp.n))
    k = comp.k
    acc = ParamPoly.zero()
    factor = ParamPoly.one()
    one_minus = ParamPoly.from_scalar(_ONE_MINUS_QM2)
    mu_pows = [[ParamPoly.one()] for _ in range(k)]
    for j in range(k):
        for _ in range(m):
            mu_pows[j].append(mu_pows[j][-1] * mu[j])
    for ell in range(1, k + 1):
        block = ParamPoly.zero()
        for d in positive_compositions(m, ell):
            for idx in combinations(range(k), ell):
                term = ParamPoly.one()
                for s, i in enumerate(idx):
                    term = term * nhat[i] * mu_pows[i][d[s]]
                block = block + term
        acc = acc + factor * block
        factor = factor * one_minus
    return acc


def theta_multiplicity_free(n: int, m: int, lam=None) -> ParamPoly:
    """The k = n, all-multiplicities-one polynomial in variables lam_i (its
    nhat weights are all 1)."""
    comp = Composition((1,) * n)
    if lam is None:
        lam = lam_symbols(n)
    return theta(comp, m, mu=lam)


def coeff_C(j: int, comp: Composition, mu=None, nhat=None, shift=None) -> ParamFraction:
    """The rational coefficient C_j of the representation theta_m = sum C_j mu_j^m:

        C_j = nhat_j (1 + sum_{l=1}^{k-1} (1-q^-2)^l
                      sum_{|S|=l, j not in S} prod_{i in S} nhat_i mu_i / (mu_j - mu_i)).

    With `shift` given, every argument mu_i in the formula is replaced by
    mu_i + shift; the denominators are unchanged since the shift is uniform."""
    mu, nhat = _resolve(comp, mu, nhat)
    k = comp.k
    if not (0 <= j < k):
        raise ValueError("index out of range")
    one_minus = ParamFraction.from_scalar(_ONE_MINUS_QM2)
    acc = ParamFraction.one()
    others = [i for i in range(k) if i != j]
    factor = one_minus
    for ell in range(1, k):
        block = ParamFraction.zero()
        for idx in combinations(others, ell):
            term = ParamFraction.one()
            for i in idx:
                den = mu[j] - mu[i]
                den_f = ParamFraction.from_scalar(den)
                if den_f.is_zero():
                    raise ZeroDivisionError("eigenvalue parameters must be pairwise distinct")
                arg = mu[i] if shift is None else ParamFraction.from_scalar(mu[i]) + shift
                term = term * (ParamFraction.from_scalar(nhat[i]) * arg / den_f)
            block = block + term
        acc = acc + factor * block
        factor = factor * one_minus
    return ParamFraction.from_scalar(nhat[j]) * acc


def theta_via_C(comp: Composition, m: int, mu=None, nhat=None) -> ParamPoly:
    """sum_j C_j mu_j^m with all denominators cleared exactly.  The exact
    division is a certification: it raises if the sum fails to be polynomial."""
    mu_r, nhat_r = _resolve(comp, mu, nhat)
    acc = ParamFraction.zero()
    for j in range(comp.k):
        cj = coeff_C(j, comp, mu=mu_r, nhat=nhat_r)
        acc = acc + cj * ParamFraction.from_scalar(mu_r[j]) ** m
    return acc.simplify().as_poly()


def shift_scalar() -> ParamFraction:
    """t / (1 - q^-2), the uniform argument shift of the two-parameter values."""
    return ParamFraction(ParamPoly.symbol("t"), ParamPoly.from_scalar(_ONE_MINUS_QM2))


def theta_t(comp: Composition, m: int, mu=None, nhat=None) -> ParamPoly:
    """The two-parameter value sum_j C_j(arguments + t/(1-q^-2)) mu_j^m,
    certified polynomial in q^-2, t, and the eigenvalue parameters."""
    mu_r, nhat_r = _resolve(comp, mu, nhat)
    sh = shift_scalar()
    acc = ParamFraction.zero()
    for j in range(comp.k):
        cj = coeff_C(j, comp, mu=mu_r, nhat=nhat_r, shift=sh)
        acc = acc + cj * ParamFraction.from_scalar(mu_r[j]) ** m
    return acc.simplify().as_poly()


def theta_recurrence_check(comp: Composition, m: int, mu=None, nhat=None) -> bool:
    """Exact check of the last-part reduction

        theta_m(n) = theta_m(n') + (1-q^-2) nhat_k sum_{i=1}^{m-1}
                     theta_{m-i}(n') mu_k^i + nhat_k mu_k^m,

    where n' drops the last part."""
    if comp.k < 2:
        raise ValueError("the reduction needs at least two parts")
    mu_r, nhat_r = _resolve(comp, mu, nhat)
    sub = Composition(comp.parts[:-1])
    mu_s, nhat_s = mu_r[:-1], nhat_r[:-1]
    lhs = theta(comp, m, mu=mu_r, nhat=nhat_r)
    rhs = theta(sub, m, mu=mu_s, nhat=nhat_s)
    one_minus = ParamPoly.from_scalar(_ONE_MINUS_QM2)
    nk = nhat_r[-1]
    muk = mu_r[-1]
    muk_pow = muk
    mid = ParamPoly.zero()
    for i in range(1, m):
        mid = mid + theta(sub, m - i, mu=mu_s, nhat=nhat_s) * muk_pow
        muk_pow = muk_pow * muk
    rhs = rhs + one_minus * nk * mid + nk * muk_pow
    return lhs == rhs


def root_of_unity_substitution(n: int, m: int) -> QLaurent:
    """Substitute lam_i = q^-2(i-1) into the multiplicity-free polynomial;
    the result is constant in the parameters and should equal n-hat."""
    p = theta_multiplicity_free(n, m)
    bindings = {f"lam{i + 1}": ParamPoly.from_scalar(QLaurent.q_power(-2 * i)) for i in range(n)}
    out = p.substitute(bindings)
    c = out.constant_qlaurent()
    if c is None:
        raise ArithmeticError("substitution should eliminate all parameters")
    return c


def grouped_substitution_check(comp: Composition, m: int) -> bool:
    """Partition the lam variables into consecutive blocks of sizes n_j and
    substitute lam_(j,i) = mu_j q^-2(i-1); the multiplicity-free polynomial
    must collapse to theta_m of the composition."""
    n = comp.n
    bindings = {}
    pos = 0
    for j, part in enumerate(comp.parts):
        muj = ParamPoly.symbol(f"mu{j + 1}")
        for i in range(part):
            bindings[f"lam{pos + 1}"] = muj * ParamPoly.from_scalar(QLaurent.q_power(-2 * i))
            pos += 1
    lhs = theta_multiplicity_free(n, m).substitute(bindings)
    rhs = theta(comp, m)
    return lhs == rhs


@dataclass(frozen=True)
class Character:
    """Evaluation rule s_m -> theta_m(parts, q^-2, mu, t) attached to a
    composition; the linear recurrence with the elementary symmetric values
    of mu annihilates the value sequence from index k on."""

    comp: Composition
    mu: tuple

    def value(self, m: int, with_t: bool = True) -> ParamPoly:
        if with_t:
            return theta_t(self.comp, m, mu=list(self.mu))
        return theta(self.comp, m, mu=list(self.mu))

    def values(self, upto: int, with_t: bool = True) -> List[ParamPoly]:
        return [self.value(m, with_t) for m in range(upto + 1)]


def character(comp: Composition, mu=None) -> Character:
    mu_r, _ = _resolve(comp, mu, None)
    return Character(comp, tuple(mu_r))


def enumerate_characters(n: int, k: int, mu=None) -> List[Character]:
    """One character per composition in {n:k}; |{n:k}| = C(n+k-1, k-1)."""
    if mu is None:
        mu = mu_symbols(k)
    return [character(c, mu) for c in compositions(n, k)]
