"""Exact scalar arithmetic: rationals, Laurent polynomials in q, multivariate
polynomials in the deformation/orbit parameters, and a fraction field on top.

The scalar tower is

    int / Rat  <  QLaurent  <  ParamPoly  <  ParamFraction

and every arithmetic operator coerces upward as needed.  All values are
immutable after construction and kept in canonical form (no zero terms,
sorted monomials), so structural equality is mathematical equality within
each level of the tower.
"""

from __future__ import annotations

import re
from math import gcd as _igcd
from typing import Iterable, Mapping, Union

try:
    from gmpy2 import mpq as _mpq

    _RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    _RAT_BACKEND = "fractions"

Rat = type(_mpq(0))


def rat(num: Union[int, str, "Rat"] = 0, den: int = 1) -> "Rat":
    """Exact rational, accepts ints, `p/q` strings, and existing rationals."""
    if den != 1:
        return _mpq(num) / _mpq(den)
    return _mpq(num)


_RAT_TYPES = (int, Rat)


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class PoleAtQ1Error(ArithmeticError):
    """Raised when a scalar cannot be evaluated at q = 1 (denominator vanishes)."""


class UnboundSymbolError(KeyError):
    """Raised when a substitution is asked to eliminate a symbol it does not bind."""


# ---------------------------------------------------------------------------
# symbols and monomials
# ---------------------------------------------------------------------------

_SYMBOL_CLASS_RANK = {"t": 0, "mu": 1, "lam": 2, "a": 3, "nu": 4}
_SYMBOL_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def symbol_key(name: str) -> tuple:
    """Global ordering key: t < mu1 < mu2 < ... < lam1 < ... < a0 < ... < nu1 < ...

    Symbols outside the reserved families sort after the reserved ones,
    alphabetically.
    """
    m = _SYMBOL_RE.match(name)
    if not m:
        raise ValueError(f"bad symbol name: {name!r}")
    stem, idx = m.group(1), m.group(2)
    if stem in _SYMBOL_CLASS_RANK and (idx or stem == "t"):
        return (_SYMBOL_CLASS_RANK[stem], int(idx or 0), "")
    return (len(_SYMBOL_CLASS_RANK), 0, name)


# A monomial is a tuple of (symbol, exponent) pairs, sorted by symbol_key,
# with all exponents > 0.  The empty tuple is the monomial 1.
Mono = tuple

_ONE_MONO: Mono = ()


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        sa, ea = a[i]
        sb, eb = b[j]
        ka, kb = symbol_key(sa), symbol_key(sb)
        if ka == kb:
            out.append((sa, ea + eb))
            i += 1
            j += 1
        elif ka < kb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_deg(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Mono, b: Mono) -> bool:
    """Whether monomial a divides b."""
    db = dict(b)
    return all(db.get(s, 0) >= e for s, e in a)


def mono_div(b: Mono, a: Mono) -> Mono:
    """b / a, assuming divisibility."""
    da = dict(a)
    out = []
    for s, e in b:
        r = e - da.get(s, 0)
        if r < 0:
            raise ExactDivisionError(f"monomial {a} does not divide {b}")
        if r:
            out.append((s, r))
    return tuple(out)


def mono_sort_key(m: Mono) -> tuple:
    """Graded lexicographic key: sorting ascending by this key lists monomials
    in descending graded-lex order (higher degree first, then earlier symbols
    with higher exponents first)."""
    return (-mono_deg(m), tuple((symbol_key(s), -e) for s, e in m))


def mono_str(m: Mono) -> str:
    return " * ".join(s if e == 1 else f"{s}^{e}" for s, e in m) if m else "1"


# ---------------------------------------------------------------------------
# QLaurent: Laurent polynomials in q with rational coefficients
# ---------------------------------------------------------------------------


class QLaurent:
    """Laurent polynomial in the quantum parameter q over the rationals."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, Union[int, "Rat"]] = ()):
        c = {}
        for e, v in dict(coeffs).items():
            v = rat(v)
            if v:
                c[int(e)] = v
        self.c = c

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "QLaurent":
        return QLaurent()

    @staticmethod
    def one() -> "QLaurent":
        return QLaurent({0: 1})

    @staticmethod
    def from_rat(v) -> "QLaurent":
        return QLaurent({0: rat(v)})

    @staticmethod
    def q_power(e: int, coeff=1) -> "QLaurent":
        return QLaurent({e: rat(coeff)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def degree(self) -> int:
        return max(self.c) if self.c else 0

    def valuation(self) -> int:
        return min(self.c) if self.c else 0

    def constant_rat(self):
        """The rational value of a constant Laurent polynomial, else None."""
        if not self.c:
            return rat(0)
        if set(self.c) == {0}:
            return self.c[0]
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_qlaurent(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        out = QLaurent.__new__(QLaurent)
        out.c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QLaurent.__new__(QLaurent)
        out.c = {e: -v for e, v in self.c.items()}
        return out

    def __sub__(self, other):
        other = _as_qlaurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_qlaurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_qlaurent(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        out = QLaurent.__new__(QLaurent)
        out.c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers only via explicit q_power monomials")
        out = QLaurent.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = _as_qlaurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    # -- evaluation and division --------------------------------------------

    def eval_q1(self):
        """Exact value at q = 1."""
        return sum(self.c.values(), rat(0))

    def subs_q(self, value):
        value = rat(value)
        if not value:
            raise ZeroDivisionError("q must be invertible")
        return sum((v * value**e for e, v in self.c.items()), rat(0))

    def divexact(self, other):
        """Exact quotient self/other in Q[q, q^-1], or None if not divisible."""
        other = _as_qlaurent(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return QLaurent.zero()
        # the quotient, if it exists, has valuation exactly val(self)-val(other)
        vq_min = self.valuation() - other.valuation()
        dd = other.degree()
        dl = other.c[dd]
        rem = dict(self.c)
        quot = {}
        while rem:
            nd = max(rem)
            e = nd - dd
            if e < vq_min:
                return None
            coef = rem[nd] / dl
            quot[e] = coef
            for e2, v2 in other.c.items():
                k = e2 + e
                w = rem.get(k, 0) - coef * v2
                if w:
                    rem[k] = w
                elif k in rem:
                    del rem[k]
        return QLaurent(quot)

    def content(self):
        """Positive rational content (gcd of the coefficients)."""
        if not self.c:
            return rat(0)
        gn = 0
        gd = 1
        for v in self.c.values():
            gn = _igcd(gn, abs(int(v.numerator)))
            d = int(v.denominator)
            gd = gd * d // _igcd(gd, d)
        return rat(gn, gd)

    def primitive(self) -> "QLaurent":
        """Canonical associate: valuation 0, content 1, positive leading coefficient."""
        if not self.c:
            return self
        v = self.valuation()
        cont = self.content()
        if self.c[self.degree()] < 0:
            cont = -cont
        return QLaurent({e - v: w / cont for e, w in self.c.items()})

    def __repr__(self):
        return f"QLaurent({scalar_to_str(self)!r})"

    def __str__(self):
        return scalar_to_str(self)


def _as_qlaurent(x):
    if isinstance(x, QLaurent):
        return x
    if isinstance(x, _RAT_TYPES):
        return QLaurent({0: x})
    return NotImplemented


def _qlaurent_polymod(a: QLaurent, b: QLaurent) -> QLaurent:
    """Remainder of a by b, both with valuation >= 0 and b nonzero."""
    r = a
    dd = b.degree()
    dl = b.c[dd]
    while not r.is_zero() and r.degree() >= dd:
        nd = r.degree()
        r = r - b * QLaurent({nd - dd: r.c[nd] / dl})
    return r


def qlaurent_gcd(a: QLaurent, b: QLaurent) -> QLaurent:
    """Canonical gcd in Q[q, q^-1] (primitive, valuation 0, positive lead)."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    while not b.is_zero():
        r = _qlaurent_polymod(a, b)
        a, b = b, r.primitive()
    return a.primitive()


def quantum_integer(m: int) -> QLaurent:
    """The quantum integer (1 - q^-2m) / (1 - q^-2), defined for any integer m.

    For m > 0 this is the geometric sum 1 + q^-2 + ... + q^-2(m-1); for
    negative m it equals -(q^2 + q^4 + ... + q^-2m)."""
    if m >= 0:
        return QLaurent({-2 * i: 1 for i in range(m)})
    return QLaurent({2 * i: -1 for i in range(1, -m + 1)})


# ---------------------------------------------------------------------------
# ParamPoly: multivariate polynomials in parameter symbols over QLaurent
# ---------------------------------------------------------------------------


class ParamPoly:
    """Polynomial in parameter symbols (t, mu_i, lam_i, a_i, nu_i) whose
    coefficients are Laurent polynomials in q."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, object] = ()):
        tt = {}
        for mono, coeff in dict(terms).items():
            if not isinstance(coeff, QLaurent):
                coeff = _as_qlaurent(coeff)
            if coeff is NotImplemented:
                raise TypeError("ParamPoly coefficients must be QLaurent-coercible")
            if not coeff.is_zero():
                tt[mono] = coeff
        self.terms = tt

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "ParamPoly":
        return ParamPoly()

    @staticmethod
    def one() -> "ParamPoly":
        return ParamPoly({_ONE_MONO: QLaurent.one()})

    @staticmethod
    def from_scalar(x) -> "ParamPoly":
        p = _as_parampoly(x)
        if p is NotImplemented:
            raise TypeError(f"cannot build ParamPoly from {type(x).__name__}")
        return p

    @staticmethod
    def symbol(name: str, exp: int = 1, coeff=1) -> "ParamPoly":
        symbol_key(name)  # validate
        if exp < 0:
            raise ValueError("parameter symbols are not invertible")
        mono = ((name, exp),) if exp else _ONE_MONO
        return ParamPoly({mono: _as_qlaurent(coeff)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((mono_deg(m) for m in self.terms), default=0)

    def symbols(self) -> set:
        out = set()
        for m in self.terms:
            out.update(s for s, _ in m)
        return out

    def constant_qlaurent(self):
        """The QLaurent value of a symbol-free polynomial, else None."""
        if not self.terms:
            return QLaurent.zero()
        if set(self.terms) == {_ONE_MONO}:
            return self.terms[_ONE_MONO]
        return None

    def leading_monomial(self) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return min(self.terms, key=mono_sort_key)

    def coefficient(self, mono: Mono) -> QLaurent:
        return self.terms.get(mono, QLaurent.zero())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_parampoly(other)
        if other is NotImplemented:
            return NotImplemented
        tt = dict(self.terms)
        for m, c in other.terms.items():
            w = tt.get(m)
            w = c if w is None else w + c
            if w.is_zero():
                tt.pop(m, None)
            else:
                tt[m] = w
        out = ParamPoly.__new__(ParamPoly)
        out.terms = tt
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ParamPoly.__new__(ParamPoly)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = _as_parampoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_parampoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, ParamFraction):
            return NotImplemented
        other = _as_parampoly(other)
        if other is NotImplemented:
            return NotImplemented
        tt = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                w = tt.get(m)
                w = c if w is None else w + c
                if w.is_zero():
                    tt.pop(m, None)
                else:
                    tt[m] = w
        out = ParamPoly.__new__(ParamPoly)
        out.terms = tt
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use ParamFraction for negative powers")
        out = ParamPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, ParamFraction):
            return ParamFraction.from_scalar(self) / other
        return ParamFraction(self, other)

    def __eq__(self, other):
        if isinstance(other, ParamFraction):
            return ParamFraction.from_scalar(self) == other
        other = _as_parampoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    # -- evaluation, substitution, division ------------------------------------

    def eval_q1(self) -> "ParamPoly":
        """Exact substitution q -> 1 (always defined on polynomials)."""
        return ParamPoly({m: QLaurent.from_rat(c.eval_q1()) for m, c in self.terms.items()})

    def subs_q(self, value) -> "ParamPoly":
        return ParamPoly({m: QLaurent.from_rat(c.subs_q(value)) for m, c in self.terms.items()})

    def substitute(self, bindings: Mapping[str, object], must_eliminate: Iterable[str] = ()):
        """Simultaneous substitution of symbols.  Values may be any scalar
        (int, rational, QLaurent, ParamPoly, ParamFraction); the result is a
        ParamPoly whenever it is polynomial, else a ParamFraction.
        """
        missing = set(must_eliminate) - set(bindings)
        if missing & self.symbols():
            raise UnboundSymbolError(f"no binding for symbols {sorted(missing)}")
        has_frac = any(isinstance(v, ParamFraction) for v in bindings.values())
        if not has_frac:
            lifted = {s: ParamPoly.from_scalar(v) for s, v in bindings.items()}
            acc = ParamPoly.zero()
            for m, c in self.terms.items():
                term = ParamPoly({_ONE_MONO: c})
                for s, e in m:
                    v = lifted.get(s)
                    term = term * (ParamPoly.symbol(s, e) if v is None else v**e)
                acc = acc + term
            return acc
        lifted_f = {s: ParamFraction.from_scalar(v) for s, v in bindings.items()}
        acc_f = ParamFraction.zero()
        for m, c in self.terms.items():
            term = ParamFraction.from_scalar(ParamPoly({_ONE_MONO: c}))
            for s, e in m:
                v = lifted_f.get(s)
                term = term * (ParamFraction.from_scalar(ParamPoly.symbol(s, e)) if v is None else v**e)
            acc_f = acc_f + term
        if acc_f.den == ParamPoly.one():
            return acc_f.num
        return acc_f

    def divexact(self, d):
        """Exact quotient self/d, or None when d does not divide self."""
        d = _as_parampoly(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ParamPoly.zero()
        lm_d = d.leading_monomial()
        lc_d = d.terms[lm_d]
        rem = ParamPoly(self.terms)
        quot = {}
        while not rem.is_zero():
            lm_r = rem.leading_monomial()
            if not mono_divides(lm_d, lm_r):
                return None
            cq = rem.terms[lm_r].divexact(lc_d)
            if cq is None:
                return None
            mq = mono_div(lm_r, lm_d)
            quot[mq] = cq
            rem = rem - d * ParamPoly({mq: cq})
        return ParamPoly(quot)

    def content(self) -> QLaurent:
        """Gcd of the QLaurent coefficients, sign-matched to the leading term."""
        if not self.terms:
            return QLaurent.zero()
        g = None
        for m in sorted(self.terms, key=mono_sort_key):
            g = self.terms[m] if g is None else qlaurent_gcd(g, self.terms[m])
        lead = self.terms[self.leading_monomial()]
        if lead.c[lead.degree()] < 0:
            g = -g
        return g

    def primitive(self) -> "ParamPoly":
        if not self.terms:
            return self
        out = self.divexact_qlaurent(self.content())
        assert out is not None
        return out

    def divexact_qlaurent(self, g: QLaurent):
        """Divide every coefficient by the Laurent polynomial g, or None."""
        tt = {}
        for m, c in self.terms.items():
            c2 = c.divexact(g)
            if c2 is None:
                return None
            tt[m] = c2
        return ParamPoly(tt)

    def mul_qlaurent(self, g: QLaurent) -> "ParamPoly":
        return ParamPoly({m: c * g for m, c in self.terms.items()})

    def __repr__(self):
        return f"ParamPoly({scalar_to_str(self)!r})"

    def __str__(self):
        return scalar_to_str(self)


def _as_parampoly(x):
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, QLaurent):
        return ParamPoly({_ONE_MONO: x})
    if isinstance(x, _RAT_TYPES):
        return ParamPoly({_ONE_MONO: QLaurent({0: x})})
    return NotImplemented


def divide_exact(p, d) -> ParamPoly:
    """Certified exact division of polynomials; raises ExactDivisionError when
    the quotient would leave the polynomial ring."""
    p = ParamPoly.from_scalar(p)
    d = ParamPoly.from_scalar(d)
    q = p.divexact(d)
    if q is None:
        raise ExactDivisionError(f"({p}) is not divisible by ({d})")
    return q


# ---------------------------------------------------------------------------
# multivariate gcd (primitive PRS, recursing symbol by symbol)
# ---------------------------------------------------------------------------


def _poly_as_univariate(p: ParamPoly, s: str) -> dict:
    """View p as a univariate polynomial in symbol s: {exp: ParamPoly}."""
    out: dict = {}
    for m, c in p.terms.items():
        e = 0
        rest = []
        for sym, ee in m:
            if sym == s:
                e = ee
            else:
                rest.append((sym, ee))
        out.setdefault(e, {})[tuple(rest)] = c
    return {e: ParamPoly(t) for e, t in out.items()}


def _univariate_as_poly(u: dict, s: str) -> ParamPoly:
    out = ParamPoly.zero()
    for e, c in u.items():
        out = out + (c * ParamPoly.symbol(s, e) if e else c)
    return out


def _content_wrt(p: ParamPoly, s: str) -> ParamPoly:
    u = _poly_as_univariate(p, s)
    g = ParamPoly.zero()
    for e in sorted(u):
        g = poly_gcd(g, u[e])
    return g


def _pseudo_rem(ua: dict, ub: dict) -> dict:
    """Pseudo-remainder of univariate views (dicts {exp: ParamPoly})."""
    db = max(ub)
    lb = ub[db]
    r = dict(ua)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        new = {}
        for e, c in r.items():
            new[e] = c * lb
        for e, c in ub.items():
            k = e + dr - db
            w = new.get(k, ParamPoly.zero()) - c * lr
            if w.is_zero():
                new.pop(k, None)
            else:
                new[k] = w
        new.pop(dr, None)
        r = {e: c for e, c in new.items() if not c.is_zero()}
    return r


def poly_gcd(a, b) -> ParamPoly:
    """Gcd in Q[q,q^-1][symbols], canonicalized (primitive, positive lead)."""
    a = ParamPoly.from_scalar(a)
    b = ParamPoly.from_scalar(b)
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    syms = a.symbols() | b.symbols()
    if not syms:
        g = qlaurent_gcd(a.constant_qlaurent(), b.constant_qlaurent())
        return ParamPoly({_ONE_MONO: g})
    s = max(syms, key=symbol_key)  # least significant symbol as main variable
    ca, cb = _content_wrt(a, s), _content_wrt(b, s)
    cg = poly_gcd(ca, cb)
    pa = a.divexact(ca)
    pb = b.divexact(cb)
    assert pa is not None and pb is not None
    ua = _poly_as_univariate(pa, s)
    ub = _poly_as_univariate(pb, s)
    if max(ua) < max(ub):
        ua, ub = ub, ua
    while True:
        if max(ub) == 0:
            return cg.primitive()
        r = _pseudo_rem(ua, ub)
        if not r:
            g = _univariate_as_poly(ub, s)
            gc = _content_wrt(g, s)
            g = g.divexact(gc)
            assert g is not None
            return (cg * g).primitive()
        rp = _univariate_as_poly(r, s)
        cr = _content_wrt(rp, s)
        rp = rp.divexact(cr)
        assert rp is not None
        ua, ub = ub, _poly_as_univariate(rp, s)


# ---------------------------------------------------------------------------
# ParamFraction: fraction field over ParamPoly
# ---------------------------------------------------------------------------


class ParamFraction:
    """Quotient num/den of parameter polynomials.

    Construction performs cheap normalization (shared coefficient content and
    an exact-division attempt); `simplify` cancels the full polynomial gcd.
    Equality is decided by cross-multiplication, so it never depends on how
    far a value has been reduced.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_parampoly(num)
        if num is NotImplemented:
            raise TypeError("bad numerator")
        if den is None:
            den = ParamPoly.one()
        else:
            den = _as_parampoly(den)
            if den is NotImplemented:
                raise TypeError("bad denominator")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = ParamPoly.zero()
            self.den = ParamPoly.one()
            return
        q = num.divexact(den)
        if q is not None:
            self.num = q
            self.den = ParamPoly.one()
            return
        # cancel the shared coefficient content, then normalize the unit
        # (sign and q-power) so the denominator is canonical
        g = qlaurent_gcd(num.content(), den.content())
        if not (len(g.c) == 1 and g.c.get(0) == 1):
            num = num.divexact_qlaurent(g)
            den = den.divexact_qlaurent(g)
        v = min(c.valuation() for c in den.terms.values())
        if v:
            shift = QLaurent.q_power(-v)
            num = num.mul_qlaurent(shift)
            den = den.mul_qlaurent(shift)
        lead = den.terms[den.leading_monomial()]
        if lead.c[lead.degree()] < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> "ParamFraction":
        return ParamFraction(ParamPoly.zero())

    @staticmethod
    def one() -> "ParamFraction":
        return ParamFraction(ParamPoly.one())

    @staticmethod
    def from_scalar(x) -> "ParamFraction":
        if isinstance(x, ParamFraction):
            return x
        return ParamFraction(_as_parampoly(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def simplify(self) -> "ParamFraction":
        """Fully reduced representative (cancels the polynomial gcd)."""
        if self.num.is_zero():
            return ParamFraction.zero()
        if self.den == ParamPoly.one():
            return self
        g = poly_gcd(self.num, self.den)
        if g == ParamPoly.one():
            return self
        n = self.num.divexact(g)
        d = self.den.divexact(g)
        assert n is not None and d is not None
        return ParamFraction(n, d)

    def as_poly(self) -> ParamPoly:
        """The polynomial value; raises ExactDivisionError if truly fractional."""
        if self.den == ParamPoly.one():
            return self.num
        q = self.num.divexact(self.den)
        if q is None:
            raise ExactDivisionError(f"({self.num}) / ({self.den}) is not a polynomial")
        return q

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = ParamFraction.from_scalar(other)
        if self.den == other.den:
            return ParamFraction(self.num + other.num, self.den)
        return ParamFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = ParamFraction.__new__(ParamFraction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        return self + (-ParamFraction.from_scalar(other))

    def __rsub__(self, other):
        return ParamFraction.from_scalar(other) + (-self)

    def __mul__(self, other):
        other = ParamFraction.from_scalar(other)
        return ParamFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ParamFraction.from_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero fraction")
        return ParamFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return ParamFraction.from_scalar(other) / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return ParamFraction(self.den, self.num) ** (-k)
        return ParamFraction(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, (ParamPoly, QLaurent, *_RAT_TYPES)):
            other = ParamFraction.from_scalar(other)
        if not isinstance(other, ParamFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        r = self.simplify()
        return hash((r.num, r.den))

    # -- evaluation and substitution ------------------------------------------

    def eval_q1(self) -> "ParamFraction":
        r = self.simplify()
        den1 = r.den.eval_q1()
        if den1.is_zero():
            raise PoleAtQ1Error(f"pole at q=1 in ({r.num}) / ({r.den})")
        return ParamFraction(r.num.eval_q1(), den1)

    def substitute(self, bindings, must_eliminate=()):
        n = ParamFraction.from_scalar(self.num.substitute(bindings, must_eliminate))
        d = ParamFraction.from_scalar(self.den.substitute(bindings, must_eliminate))
        return n / d

    def __repr__(self):
        return f"ParamFraction({scalar_to_str(self)!r})"

    def __str__(self):
        return scalar_to_str(self)


Scalar = Union[int, "Rat", QLaurent, ParamPoly, ParamFraction]


def as_fraction(x) -> ParamFraction:
    return ParamFraction.from_scalar(x)


def as_poly(x) -> ParamPoly:
    if isinstance(x, ParamFraction):
        return x.as_poly()
    return ParamPoly.from_scalar(x)


def scalar_eval_q1(x):
    """Evaluate any scalar at q = 1; polynomial result whenever possible."""
    if isinstance(x, _RAT_TYPES):
        return _as_parampoly(x)
    if isinstance(x, QLaurent):
        return ParamPoly({_ONE_MONO: QLaurent.from_rat(x.eval_q1())})
    if isinstance(x, ParamPoly):
        return x.eval_q1()
    if isinstance(x, ParamFraction):
        out = x.eval_q1()
        try:
            return out.as_poly()
        except ExactDivisionError:
            return out
    raise TypeError(f"not a scalar: {type(x).__name__}")


# ---------------------------------------------------------------------------
# textual serialization:  sums of terms `c * q^e * t^a * mu1^b ...`
# ---------------------------------------------------------------------------


def _term_strings(p: ParamPoly):
    items = []
    for mono in sorted(p.terms, key=mono_sort_key):
        ql = p.terms[mono]
        for e in sorted(ql.c, reverse=True):
            items.append((mono, e, ql.c[e]))
    out = []
    for mono, e, c in items:
        factors = [str(c)]
        if e:
            factors.append(f"q^{e}" if e != 1 else "q")
        for s, ee in mono:
            factors.append(f"{s}^{ee}" if ee != 1 else s)
        out.append(" * ".join(factors))
    return out


def scalar_to_str(x) -> str:
    """Canonical textual form; `parse_scalar` inverts it exactly."""
    if isinstance(x, _RAT_TYPES):
        return str(rat(x))
    if isinstance(x, QLaurent):
        x = ParamPoly({_ONE_MONO: x})
    if isinstance(x, ParamPoly):
        terms = _term_strings(x)
        if not terms:
            return "0"
        s = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                s += " - " + t[1:]
            else:
                s += " + " + t
        return s
    if isinstance(x, ParamFraction):
        if x.den == ParamPoly.one():
            return scalar_to_str(x.num)
        return f"({scalar_to_str(x.num)}) / ({scalar_to_str(x.den)})"
    raise TypeError(f"not a scalar: {type(x).__name__}")


_COEFF_RE = re.compile(r"^-?\d+(/\d+)?$")
_FACTOR_RE = re.compile(r"^([A-Za-z]+\d*)(?:\^(-?\d+))?$")


def _parse_poly(s: str) -> ParamPoly:
    s = s.strip()
    if not s:
        raise ValueError("empty scalar string")
    s = s.replace(" - ", " + -")
    out = ParamPoly.zero()
    for term in s.split(" + "):
        term = term.strip()
        if not term:
            raise ValueError(f"bad term in {s!r}")
        coeff = rat(1)
        qexp = 0
        mono: dict = {}
        seen_coeff = False
        for factor in (f.strip() for f in term.split("*")):
            if _COEFF_RE.match(factor):
                if seen_coeff:
                    raise ValueError(f"two coefficients in term {term!r}")
                coeff = rat(factor)
                seen_coeff = True
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            if name == "q":
                qexp += exp
            else:
                if exp < 0:
                    raise ValueError(f"negative exponent on parameter {name!r}")
                mono[name] = mono.get(name, 0) + exp
        if term.startswith("-") and not seen_coeff:
            raise ValueError(f"bad term {term!r}")
        mkey = tuple(sorted(((n, e) for n, e in mono.items() if e), key=lambda p: symbol_key(p[0])))
        out = out + ParamPoly({mkey: QLaurent({qexp: coeff})})
    return out


def parse_scalar(s: str):
    """Parse the textual form back into ParamPoly or ParamFraction."""
    s = s.strip()
    if s.startswith("(") and ") / (" in s and s.endswith(")"):
        num_s, den_s = s[1:-1].split(") / (", 1)
        return ParamFraction(_parse_poly(num_s), _parse_poly(den_s))
    return _parse_poly(s)
