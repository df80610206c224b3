"""Parsers for the scalar expression syntax and the identity language.

Scalar grammar (used in algebra files and on the command line):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' uint)?
    base   := uint | ident | '(' expr ')'        '-' allowed as unary prefix

Identity grammar:

    equation := iexpr '=' iexpr
    iexpr    := ['-'] iterm (('+'|'-') iterm)*  |  '0'
    iterm    := [rational '*'] ifactor
    ifactor  := ident
              | 'al' ['^' uint] '(' iexpr ')'
              | 'mu' '(' iexpr ',' iexpr ')'
              | '(' iexpr ')'

Identifiers other than al/mu are identity variables, collected in first-use
order.  Rational coefficients are literal p or p/q; parametric coefficients
are only available through the programmatic AST.  The parsed equation is
normalized to lhs - rhs = 0.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityError, ParseError, UndeclaredParameter
from .identities import Alpha, IdentityAST, Mu, Scale, Sum, Var
from .scalars import Scalar

_SYMBOLS = ("+", "-", "*", "/", "^", "(", ")", ",", "=")


class _Token:
    __slots__ = ("kind", "text", "offset", "line", "column")

    def __init__(self, kind, text, offset, line, column):
        self.kind = kind
        self.text = text
        self.offset = offset
        self.line = line
        self.column = column

    def __repr__(self):
        return "_Token(%s, %r)" % (self.kind, self.text)


def _tokenize(text):
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start, sline, scol = i, line, col
        if ch.isdigit():
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(_Token("int", text[start:i], start, sline, scol))
        elif ch.isalpha() or ch == "_":
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(_Token("ident", text[start:i], start, sline, scol))
        elif ch in _SYMBOLS:
            i += 1
            col += 1
            tokens.append(_Token(ch, ch, start, sline, scol))
        else:
            raise ParseError("unexpected character %r" % ch, start, sline, scol,
                             expected="token", found=ch)
    tokens.append(_Token("eof", "", n, line, col))
    return tokens


class _Cursor:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind, description=None):
        tok = self.current
        if tok.kind != kind:
            raise ParseError(
                "expected %s, found %r" % (description or kind, tok.text or "end of input"),
                tok.offset, tok.line, tok.column,
                expected=description or kind, found=tok.text)
        return self.advance()

    def fail(self, description):
        tok = self.current
        raise ParseError(
            "expected %s, found %r" % (description, tok.text or "end of input"),
            tok.offset, tok.line, tok.column,
            expected=description, found=tok.text)


# --- scalar expressions --------------------------------------------------------


def parse_scalar_expr(text, params):
    """Parse a scalar expression over the declared parameter names."""
    cur = _Cursor(text)
    declared = set(params)
    value = _scalar_expr(cur, declared)
    if cur.current.kind != "eof":
        cur.fail("end of input")
    return value


def _scalar_expr(cur, declared):
    negate = False
    while cur.current.kind in ("+", "-"):
        if cur.advance().kind == "-":
            negate = not negate
    value = _scalar_term(cur, declared)
    if negate:
        value = -value
    while cur.current.kind in ("+", "-"):
        op = cur.advance().kind
        rhs = _scalar_term(cur, declared)
        value = value + rhs if op == "+" else value - rhs
    return value


def _scalar_term(cur, declared):
    value = _scalar_factor(cur, declared)
    while cur.current.kind in ("*", "/"):
        op = cur.advance().kind
        rhs = _scalar_factor(cur, declared)
        value = value * rhs if op == "*" else value / rhs
    return value


def _scalar_factor(cur, declared):
    negate = False
    while cur.current.kind == "-":
        cur.advance()
        negate = not negate
    base = _scalar_base(cur, declared)
    if cur.current.kind == "^":
        cur.advance()
        exp = cur.expect("int", "integer exponent")
        base = base ** int(exp.text)
    return -base if negate else base


def _scalar_base(cur, declared):
    tok = cur.current
    if tok.kind == "int":
        cur.advance()
        return Scalar.from_fraction(int(tok.text))
    if tok.kind == "ident":
        if tok.text not in declared:
            raise UndeclaredParameter(
                "undeclared parameter %r" % tok.text,
                tok.offset, tok.line, tok.column,
                expected="declared parameter", found=tok.text)
        cur.advance()
        return Scalar.var(tok.text)
    if tok.kind == "(":
        cur.advance()
        value = _scalar_expr(cur, declared)
        cur.expect(")", "closing parenthesis")
        return value
    cur.fail("number, parameter or parenthesized expression")


# --- identities ------------------------------------------------------------------


def parse_identity(text):
    """Parse an equation of the identity language into an IdentityAST."""
    cur = _Cursor(text)
    lhs = _iexpr(cur)
    cur.expect("=", "'='")
    rhs = _iexpr(cur)
    if cur.current.kind != "eof":
        cur.fail("end of input")
    body = _sum_terms(_terms_of(lhs) + [(-sign, node) for sign, node in _terms_of(rhs)])
    variables = []
    _collect_vars(body, variables)
    return IdentityAST(vars=tuple(variables), body=body)


def _terms_of(node):
    if isinstance(node, Sum):
        return list(node.terms)
    return [(1, node)]


def _sum_terms(terms):
    terms = [t for t in terms if t[1] is not None]
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return Sum(tuple(terms))


def _collect_vars(node, acc):
    if isinstance(node, Var):
        if node.name not in acc:
            acc.append(node.name)
    elif isinstance(node, (Alpha, Scale)):
        _collect_vars(node.child, acc)
    elif isinstance(node, Mu):
        _collect_vars(node.left, acc)
        _collect_vars(node.right, acc)
    elif isinstance(node, Sum):
        for _, child in node.terms:
            _collect_vars(child, acc)


def _iexpr(cur):
    # literal zero: the empty sum
    if cur.current.kind == "int" and cur.current.text == "0":
        cur.advance()
        return Sum(())
    terms = []
    sign = 1
    if cur.current.kind in ("+", "-"):
        if cur.advance().kind == "-":
            sign = -1
    terms.extend(_signed_terms(_iterm(cur), sign))
    while cur.current.kind in ("+", "-"):
        op = cur.advance().kind
        terms.extend(_signed_terms(_iterm(cur), 1 if op == "+" else -1))
    return _sum_terms(terms)


def _signed_terms(node, sign):
    if isinstance(node, Sum):
        return [(sign * s, child) for s, child in node.terms]
    return [(sign, node)]


def _iterm(cur):
    if cur.current.kind == "int":
        # rational coefficient: INT ['/' INT] '*' ifactor
        num_tok = cur.advance()
        coeff = Fraction(int(num_tok.text))
        if cur.current.kind == "/":
            cur.advance()
            den_tok = cur.expect("int", "integer denominator")
            if int(den_tok.text) == 0:
                raise ParseError("zero denominator in coefficient",
                                 den_tok.offset, den_tok.line, den_tok.column,
                                 expected="nonzero integer", found=den_tok.text)
            coeff /= int(den_tok.text)
        cur.expect("*", "'*' after coefficient")
        child = _ifactor(cur)
        if coeff == 1:
            return child
        return Scale(Scalar.from_fraction(coeff), child)
    return _ifactor(cur)


def _ifactor(cur):
    tok = cur.current
    if tok.kind == "ident":
        cur.advance()
        if tok.text == "mu":
            open_tok = cur.expect("(", "'(' after mu")
            args = [_iexpr(cur)]
            while cur.current.kind == ",":
                cur.advance()
                args.append(_iexpr(cur))
            cur.expect(")", "',' or ')' in mu(...)")
            if len(args) != 2:
                raise ArityError("mu takes exactly 2 arguments, got %d" % len(args),
                                 open_tok.offset, open_tok.line, open_tok.column,
                                 expected="2 arguments", found="%d" % len(args))
            return Mu(args[0], args[1])
        if tok.text == "al":
            power = 1
            if cur.current.kind == "^":
                cur.advance()
                ptok = cur.expect("int", "integer power")
                power = int(ptok.text)
                if power < 1:
                    raise ParseError("al power must be >= 1",
                                     ptok.offset, ptok.line, ptok.column,
                                     expected="positive integer", found=ptok.text)
            open_tok = cur.expect("(", "'(' after al")
            args = [_iexpr(cur)]
            while cur.current.kind == ",":
                cur.advance()
                args.append(_iexpr(cur))
            cur.expect(")", "')' in al(...)")
            if len(args) != 1:
                raise ArityError("al takes exactly 1 argument, got %d" % len(args),
                                 open_tok.offset, open_tok.line, open_tok.column,
                                 expected="1 argument", found="%d" % len(args))
            return Alpha(power, args[0])
        return Var(tok.text)
    if tok.kind == "(":
        cur.advance()
        inner = _iexpr(cur)
        cur.expect(")", "closing parenthesis")
        return inner
    cur.fail("variable, mu(...), al(...) or parenthesized expression")
