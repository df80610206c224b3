"""Exact arithmetic in Q(p1, ..., pm), the field of rational functions.

Every structure constant, matrix entry and residual in this package is a
Scalar: a quotient num/den of multivariate polynomials with Fraction
coefficients, kept in a canonical form so that equality is plain structural
equality.  Canonical form: gcd(num, den) = 1 and den monic under the graded
lexicographic monomial order (variables compared by a digit-aware name key,
so a2 < a10).  Everything here is immutable and pure.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

from .errors import (
    DivisionByZero,
    SpecializedDenominatorZero,
    UnboundParameter,
    ZeroDenominator,
)

_NAME_CHUNKS = re.compile(r"(\d+)")


def name_key(name):
    """Digit-aware sort key for variable names: 'a2' sorts before 'a10'."""
    parts = _NAME_CHUNKS.split(name)
    key = []
    for i, part in enumerate(parts):
        if i % 2:
            key.append((1, int(part)))
        elif part:
            key.append((0, part))
    return tuple(key), name


@total_ordering
class Monomial:
    """A product of variable powers; exponents are strictly positive.

    Ordered by graded lex: total degree first, then variable-by-variable
    in name order (higher power of an earlier variable wins).
    """

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        items = [(v, e) for v, e in dict(exps).items() if e != 0]
        if any(e < 0 for _, e in items):
            raise ValueError("negative exponent in monomial")
        items.sort(key=lambda ve: name_key(ve[0]))
        self.exps = tuple(items)

    @classmethod
    def unit(cls):
        return cls(())

    @classmethod
    def var(cls, name, power=1):
        return cls(((name, power),))

    @property
    def degree(self):
        return sum(e for _, e in self.exps)

    def is_unit(self):
        return not self.exps

    def variables(self):
        return frozenset(v for v, _ in self.exps)

    def __mul__(self, other):
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged)

    def divides(self, other):
        d = dict(other.exps)
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def __floordiv__(self, other):
        merged = dict(self.exps)
        for v, e in other.exps:
            ne = merged.get(v, 0) - e
            if ne < 0:
                raise ValueError("monomial division is not exact")
            merged[v] = ne
        return Monomial(merged)

    def gcd(self, other):
        d = dict(other.exps)
        return Monomial({v: min(e, d[v]) for v, e in self.exps if v in d})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __lt__(self, other):
        if self.degree != other.degree:
            return self.degree < other.degree
        # lex on the merged variable list, earlier variable's higher power wins
        mine = dict(self.exps)
        theirs = dict(other.exps)
        for v in sorted(set(mine) | set(theirs), key=name_key):
            a, b = mine.get(v, 0), theirs.get(v, 0)
            if a != b:
                return a < b
        return False

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else "%s^%d" % (v, e) for v, e in self.exps)

    def __repr__(self):
        return "Monomial(%r)" % (self.exps,)


_ONE_MONO = Monomial.unit()


class Polynomial:
    """Sparse multivariate polynomial over Q: a map monomial -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, value):
        return cls({_ONE_MONO: Fraction(value)})

    @classmethod
    def var(cls, name):
        return cls({Monomial.var(name): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {_ONE_MONO: Fraction(1)}

    def is_constant(self):
        return all(m.is_unit() for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_ONE_MONO, Fraction(0))

    def variables(self):
        out = set()
        for m in self.terms:
            out |= m.variables()
        return frozenset(out)

    @property
    def degree(self):
        return max((m.degree for m in self.terms), default=0)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def __add__(self, other):
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, Fraction(0)) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return _raw(res)

    def __sub__(self, other):
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, Fraction(0)) - c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return _raw(res)

    def __neg__(self):
        return _raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = res.get(m, Fraction(0)) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return _raw(res)

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero()
        return _raw({m: c * factor for m, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda mc: mc[0].exps)))

    def evaluate(self, bindings):
        """Evaluate at a full assignment name -> Fraction."""
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for v, e in m.exps:
                if v not in bindings:
                    raise UnboundParameter("parameter %r is not bound" % v)
                val *= Fraction(bindings[v]) ** e
            total += val
        return total

    def substitute(self, bindings):
        """Partially substitute some variables by rationals; keep the rest."""
        out = Polynomial.zero()
        for m, c in self.terms.items():
            coeff = Fraction(c)
            kept = {}
            for v, e in m.exps:
                if v in bindings:
                    coeff *= Fraction(bindings[v]) ** e
                else:
                    kept[v] = e
            if coeff:
                out = out + _raw({Monomial(kept): coeff})
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            body = _term_str(m, abs(c))
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self


def _raw(terms):
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    return p


def _term_str(mono, coeff):
    if mono.is_unit():
        return str(coeff)
    if coeff == 1:
        return str(mono)
    return "%s*%s" % (coeff, mono)


# --- multivariate gcd ---------------------------------------------------------
#
# Primitive PRS in a main variable, recursing on the coefficients.  Inputs in
# this package are tiny (degree <= 6 or so), so no subresultant tricks needed.


def _as_univariate(p, x):
    """View p as a polynomial in x with Polynomial coefficients."""
    coeffs = {}
    for m, c in p.terms.items():
        d = dict(m.exps)
        e = d.pop(x, 0)
        rest = Monomial(d)
        bucket = coeffs.setdefault(e, {})
        bucket[rest] = bucket.get(rest, Fraction(0)) + c
    return {e: _raw({m: c for m, c in bucket.items() if c}) for e, bucket in coeffs.items()}


def _from_univariate(coeffs, x):
    out = Polynomial.zero()
    for e, poly in coeffs.items():
        out = out + poly * _raw({Monomial.var(x, e) if e else _ONE_MONO: Fraction(1)})
    return out


def _univ_degree(coeffs):
    return max((e for e, p in coeffs.items() if not p.is_zero()), default=-1)


def exact_div(p, d):
    """Exact multivariate division; raises ValueError if d does not divide p."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if d.is_one():
        return p
    if d.is_constant():
        return p.scale(Fraction(1) / d.constant_value())
    quo = {}
    rem = p
    dlm = d.leading_monomial()
    dlc = d.leading_coeff()
    while not rem.is_zero():
        rlm = rem.leading_monomial()
        if not dlm.divides(rlm):
            raise ValueError("division is not exact")
        qm = rlm // dlm
        qc = rem.terms[rlm] / dlc
        quo[qm] = quo.get(qm, Fraction(0)) + qc
        rem = rem - d * _raw({qm: qc})
    return _raw({m: c for m, c in quo.items() if c})


def _pseudo_rem(a, b, x):
    """Pseudo-remainder of a by b as univariate polynomials in x."""
    da, db = _univ_degree(a), _univ_degree(b)
    lb = b[db]
    r = dict(a)
    while True:
        dr = _univ_degree(r)
        if dr < db:
            break
        lr = r.get(dr, Polynomial.zero())
        # r := lb*r - lr * x^(dr-db) * b
        new = {}
        for e, p in r.items():
            new[e] = p * lb
        for e, p in b.items():
            shifted = e + dr - db
            new[shifted] = new.get(shifted, Polynomial.zero()) - p * lr
        r = {e: p for e, p in new.items() if not p.is_zero()}
    return r


def poly_content_and_primitive(p, x):
    """Content (gcd of x-coefficients) and primitive part of p wrt x."""
    coeffs = _as_univariate(p, x)
    content = Polynomial.zero()
    for _, c in sorted(coeffs.items()):
        content = poly_gcd(content, c)
    prim = {e: exact_div(c, content) for e, c in coeffs.items()}
    return content, prim


def poly_gcd(p, q):
    """Gcd of multivariate polynomials over Q, normalized monic."""
    if p.is_zero():
        return _monic(q)
    if q.is_zero():
        return _monic(p)
    if p.is_constant() or q.is_constant():
        return Polynomial.const(1)
    # single-term operands: the gcd is the largest monomial dividing everything
    if len(p.terms) == 1 or len(q.terms) == 1:
        g = None
        for poly in (p, q):
            for m in poly.terms:
                g = m if g is None else g.gcd(m)
        return _raw({g: Fraction(1)})
    # trial division catches the frequent exact-multiple case cheaply
    for small, large in ((p, q), (q, p)):
        if small.degree <= large.degree:
            try:
                exact_div(large, small)
            except ValueError:
                pass
            else:
                return _monic(small)
            break
    shared = p.variables() | q.variables()
    x = min(shared, key=name_key)
    cont_p, prim_p = poly_content_and_primitive(p, x)
    cont_q, prim_q = poly_content_and_primitive(q, x)
    cont = poly_gcd(cont_p, cont_q)

    a, b = prim_p, prim_q
    if _univ_degree(a) < _univ_degree(b):
        a, b = b, a
    while _univ_degree(b) >= 0:
        r = _pseudo_rem(a, b, x)
        if not r:
            a, b = b, {}
            break
        rp = _from_univariate(r, x)
        _, r_prim = poly_content_and_primitive(rp, x)
        a, b = b, r_prim
    g = _from_univariate(a, x)
    return _monic(g * cont)


def _monic(p):
    if p.is_zero():
        return p
    lc = p.leading_coeff()
    if lc == 1:
        return p
    return p.scale(Fraction(1) / lc)


# --- Scalar --------------------------------------------------------------------


class Scalar:
    """Canonical rational function num/den over Q.

    Invariants: den is nonzero and monic, gcd(num, den) = 1.  Equality and
    hashing are structural, which coincides with cross-multiplied equality
    because the form is canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Polynomial.const(1)
        canonical = normalize(num, den)
        self.num = canonical.num
        self.den = canonical.den

    # normalize() builds instances directly via _make to avoid recursion
    @classmethod
    def _make(cls, num, den):
        s = cls.__new__(cls)
        s.num = num
        s.den = den
        return s

    @classmethod
    def zero(cls):
        return cls._make(Polynomial.zero(), Polynomial.const(1))

    @classmethod
    def one(cls):
        return cls._make(Polynomial.const(1), Polynomial.const(1))

    @classmethod
    def from_fraction(cls, value):
        return cls._make(Polynomial.const(Fraction(value)), Polynomial.const(1))

    from_int = from_fraction

    @classmethod
    def var(cls, name):
        return cls._make(Polynomial.var(name), Polynomial.const(1))

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def variables(self):
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        other = _coerce(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar._make(self.num + other.num, self.den)
        return normalize(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar._make(self.num - other.num, self.den)
        return normalize(self.num * other.den - other.num * self.den,
                         self.den * other.den)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Scalar._make(-self.num, self.den)

    def __mul__(self, other):
        other = _coerce(other)
        if self.den.is_one() and other.den.is_one():
            return Scalar._make(self.num * other.num, self.den)
        return normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero scalar")
        return normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise DivisionByZero("zero scalar to a negative power")
            return Scalar.one() / self ** (-n)
        out = Scalar.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def specialize(self, bindings):
        """Evaluate at a full parameter assignment; returns a Fraction."""
        den = self.den.evaluate(bindings)
        if den == 0:
            raise SpecializedDenominatorZero(
                "denominator %s vanishes at %s" % (self.den, dict(bindings)))
        return self.num.evaluate(bindings) / den

    def substitute(self, bindings):
        """Partially substitute parameters by rationals; returns a Scalar."""
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise SpecializedDenominatorZero(
                "denominator %s vanishes under %s" % (self.den, dict(bindings)))
        return normalize(self.num.substitute(bindings), den)

    def nonzero_constraints(self):
        """Constraints under which this scalar is defined, as strings.

        A single-term denominator a2^2*a5 contributes 'a2 != 0', 'a5 != 0';
        a multi-term denominator is reported verbatim.
        """
        return nonzero_constraints(self.den)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "Scalar(%s)" % self


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.from_fraction(value)
    raise TypeError("cannot coerce %r to Scalar" % (value,))


def normalize(num, den):
    """Canonical Scalar for num/den; invariant under common factors."""
    if den.is_zero():
        raise ZeroDenominator("zero denominator polynomial")
    if num.is_zero():
        return Scalar._make(Polynomial.zero(), Polynomial.const(1))
    if not den.is_one():
        g = poly_gcd(num, den)
        if not g.is_one():
            num = exact_div(num, g)
            den = exact_div(den, g)
        lc = den.leading_coeff()
        if lc != 1:
            inv = Fraction(1) / lc
            num = num.scale(inv)
            den = den.scale(inv)
    return Scalar._make(num, den)


def arith(kind, x, y):
    """Field operation dispatch: kind is one of add, sub, mul, div."""
    ops = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "div": lambda: x / y,
    }
    if kind not in ops:
        raise ValueError("unknown arithmetic kind %r" % kind)
    return ops[kind]()


def specialize(x, bindings):
    return x.specialize(bindings)


def nonzero_constraints(poly):
    """Nonzero constraints implied by requiring poly != 0."""
    if poly.is_one() or poly.is_zero() or poly.is_constant():
        return ()
    if len(poly.terms) == 1:
        mono = next(iter(poly.terms))
        return tuple("%s != 0" % v for v in sorted(mono.variables(), key=name_key))
    return ("(%s) != 0" % poly,)
