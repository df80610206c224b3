"""Symbolic identities over an algebra, evaluated exactly.

An IdentityAST is an expression tree over variables, the product mu, powers
of the twisting map, rational coefficients and signed sums, asserted equal
to zero.  Two checking strategies:

  generic - bind every variable to a vector of fresh indeterminates and test
            that every coordinate is the identically-zero rational function.
            Sound and complete for arbitrary (also nonlinear) identities over
            the infinite coefficient field; this is the ground truth.
  basis   - evaluate on all basis tuples.  Complete only for multilinear
            identities (each product monomial uses each variable exactly
            once), where it is the cheap path.

The builtin catalog holds the twisted associativity, alternativity (plain
and linearized), flexibility, associator alternation, commutativity, Jordan
identities and their variant shapes, plus the two anticommuting-pair
consequences which are meant to be evaluated on chosen bindings rather than
universally.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import CheckReport, Vector, Witness, apply_map, compose, mul
from .errors import (
    MissingTwistMap,
    NotMultilinear,
    UnboundVariable,
    UnknownIdentity,
)
from .scalars import Scalar, name_key


# --- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Alpha:
    power: int
    child: object

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("Alpha power must be >= 1")


@dataclass(frozen=True)
class Mu:
    left: object
    right: object


@dataclass(frozen=True)
class Scale:
    coeff: Scalar
    child: object


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node) with sign +1 / -1


@dataclass(frozen=True)
class IdentityAST:
    """Expression asserted to vanish for all values of its variables."""

    vars: tuple
    body: object


def _v(name):
    return Var(name)


def _al(child, power=1):
    return Alpha(power, child)


def _mu(left, right):
    return Mu(left, right)


def _diff(a, b):
    return Sum(((1, a), (-1, b)))


def _plus(*nodes):
    terms = []
    for node in nodes:
        if isinstance(node, Sum):
            terms.extend(node.terms)
        else:
            terms.append((1, node))
    return Sum(tuple(terms))


def _associator(x, y, z):
    """mu(al(x), mu(y, z)) - mu(mu(x, y), al(z)) as an AST."""
    return _diff(_mu(_al(x), _mu(y, z)), _mu(_mu(x, y), _al(z)))


def identity_to_text(ast):
    """Surface form of an AST in the identity grammar, as 'expr = 0'."""
    return "%s = 0" % _node_text(ast.body, top=True)


def _node_text(node, top=False):
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Alpha):
        head = "al" if node.power == 1 else "al^%d" % node.power
        return "%s(%s)" % (head, _node_text(node.child, top=True))
    if isinstance(node, Mu):
        return "mu(%s, %s)" % (_node_text(node.left, top=True),
                               _node_text(node.right, top=True))
    if isinstance(node, Scale):
        coeff = node.coeff.num.constant_value()
        return "%s*%s" % (coeff, _node_text(node.child))
    if isinstance(node, Sum):
        if not node.terms:
            return "0"
        parts = []
        for sign, child in node.terms:
            text = _node_text(child)
            if not parts:
                parts.append(text if sign > 0 else "-" + text)
            else:
                parts.append((" + " if sign > 0 else " - ") + text)
        body = "".join(parts)
        return body if top else "(%s)" % body
    raise TypeError("unknown AST node %r" % (node,))


# --- evaluation --------------------------------------------------------------------


def evaluate(A, ast, bindings):
    """Evaluate the AST body over A at the given variable -> Vector bindings."""
    for v in ast.vars:
        if v not in bindings:
            raise UnboundVariable("identity variable %r is not bound" % v)
    alpha_powers = {}
    return _eval_node(A, ast.body, bindings, alpha_powers)


def _alpha_power(A, k, cache):
    if A.alpha is None:
        raise MissingTwistMap(
            "identity uses the twisting map but algebra %r has none" % A.name)
    if k not in cache:
        m = A.alpha
        for _ in range(k - 1):
            m = compose(A.alpha, m)
        cache[k] = m
    return cache[k]


def _eval_node(A, node, bindings, cache):
    if isinstance(node, Var):
        try:
            return bindings[node.name]
        except KeyError:
            raise UnboundVariable("identity variable %r is not bound"
                                  % node.name) from None
    if isinstance(node, Alpha):
        return apply_map(_alpha_power(A, node.power, cache),
                         _eval_node(A, node.child, bindings, cache))
    if isinstance(node, Mu):
        return mul(A, _eval_node(A, node.left, bindings, cache),
                   _eval_node(A, node.right, bindings, cache))
    if isinstance(node, Scale):
        return _eval_node(A, node.child, bindings, cache).scale(node.coeff)
    if isinstance(node, Sum):
        acc = Vector.zero(A.dim)
        for sign, child in node.terms:
            value = _eval_node(A, child, bindings, cache)
            acc = acc + value if sign > 0 else acc - value
        return acc
    raise TypeError("unknown AST node %r" % (node,))


def hom_associator(A, x, y, z):
    """mu(alpha(x), mu(y, z)) - mu(mu(x, y), alpha(z)); trilinear."""
    if A.alpha is None:
        raise MissingTwistMap(
            "hom_associator needs a twisting map but %r has none" % A.name)
    return (mul(A, apply_map(A.alpha, x), mul(A, y, z))
            - mul(A, mul(A, x, y), apply_map(A.alpha, z)))


# --- multilinearity ------------------------------------------------------------------


def is_multilinear(ast):
    """True iff every product monomial of the expanded body uses each
    variable exactly once."""
    target = frozenset((v, 1) for v in ast.vars)
    return all(m == target for m in _monomial_profiles(ast.body))


def _monomial_profiles(node):
    if isinstance(node, Var):
        return {frozenset(((node.name, 1),))}
    if isinstance(node, (Alpha, Scale)):
        return _monomial_profiles(node.child)
    if isinstance(node, Mu):
        out = set()
        for a in _monomial_profiles(node.left):
            for b in _monomial_profiles(node.right):
                merged = dict(a)
                for v, e in b:
                    merged[v] = merged.get(v, 0) + e
                out.add(frozenset(merged.items()))
        return out
    if isinstance(node, Sum):
        out = set()
        for _, child in node.terms:
            out |= _monomial_profiles(child)
        return out
    raise TypeError("unknown AST node %r" % (node,))


def _uses_alpha(node):
    if isinstance(node, Alpha):
        return True
    if isinstance(node, (Var,)):
        return False
    if isinstance(node, (Scale,)):
        return _uses_alpha(node.child)
    if isinstance(node, Mu):
        return _uses_alpha(node.left) or _uses_alpha(node.right)
    if isinstance(node, Sum):
        return any(_uses_alpha(child) for _, child in node.terms)
    return False


# --- generic elements -----------------------------------------------------------------


def generic_element(A, var, taken=()):
    """Vector whose coordinates are fresh indeterminates for variable var."""
    avoid = set(A.param_names()) | set(taken)
    coords = []
    for i in range(A.dim):
        name = "%s_%d" % (var, i + 1)
        while name in avoid:
            name = "g" + name
        avoid.add(name)
        coords.append(Scalar.var(name))
    return Vector(coords)


# --- checking -------------------------------------------------------------------------


def check(A, ast, strategy="generic"):
    """Verify ast = 0 over A, universally in its variables."""
    if strategy not in ("generic", "basis"):
        raise ValueError("unknown strategy %r" % strategy)
    if strategy == "basis":
        if not is_multilinear(ast):
            raise NotMultilinear(
                "basis strategy is only sound for multilinear identities")
        return _check_on_basis(A, ast)
    return _check_generic(A, ast)


def _base_assumptions(A, ast):
    sources = [A.mu_scalars()]
    if A.alpha is not None and _uses_alpha(ast.body):
        sources.append(A.alpha.scalars())
    sources.append(_scale_coeffs(ast.body))
    seen = []
    for source in sources:
        for s in source:
            for c in s.nonzero_constraints():
                if c not in seen:
                    seen.append(c)
    return tuple(sorted(seen, key=name_key))


def _scale_coeffs(node):
    if isinstance(node, Scale):
        yield node.coeff
        yield from _scale_coeffs(node.child)
    elif isinstance(node, Mu):
        yield from _scale_coeffs(node.left)
        yield from _scale_coeffs(node.right)
    elif isinstance(node, Alpha):
        yield from _scale_coeffs(node.child)
    elif isinstance(node, Sum):
        for _, child in node.terms:
            yield from _scale_coeffs(child)


def _check_on_basis(A, ast):
    assumptions = _base_assumptions(A, ast)
    k = len(ast.vars)
    indices = [0] * k
    while True:
        bindings = {v: A.basis_vector(indices[p]) for p, v in enumerate(ast.vars)}
        value = evaluate(A, ast, bindings)
        if not value.is_zero():
            coord = _first_nonzero_index(value)
            witness = Witness(
                at=tuple(A.basis[i] for i in indices),
                coordinate=A.basis[coord],
                residual=value.coords[coord],
                residual_vector=value)
            return CheckReport("fails", witness, assumptions)
        # advance the odometer
        pos = k - 1
        while pos >= 0:
            indices[pos] += 1
            if indices[pos] < A.dim:
                break
            indices[pos] = 0
            pos -= 1
        if pos < 0:
            break
    verdict = "holds-under-assumptions" if assumptions else "holds"
    return CheckReport(verdict, None, assumptions)


def _first_nonzero_index(vec):
    for k, c in enumerate(vec.coords):
        if not c.is_zero():
            return k
    raise ValueError("vector is zero")


def _check_generic(A, ast):
    assumptions = _base_assumptions(A, ast)
    bindings = {}
    taken = set()
    for v in ast.vars:
        vec = generic_element(A, v, taken)
        for c in vec.coords:
            taken |= c.variables()
        bindings[v] = vec
    value = evaluate(A, ast, bindings)
    if value.is_zero():
        verdict = "holds-under-assumptions" if assumptions else "holds"
        return CheckReport(verdict, None, assumptions)
    coord = _first_nonzero_index(value)
    residual = value.coords[coord]
    spec = _find_specialization(value, bindings, A)
    witness = Witness(at=None,
                      coordinate=A.basis[coord],
                      residual=residual,
                      residual_vector=value,
                      specialization=spec)
    return CheckReport("fails", witness, assumptions)


def _find_specialization(value, bindings, A, tries=120):
    """Small integer coordinates exhibiting a concrete counterexample.

    Substitutes the generic coordinates only; algebra parameters stay
    symbolic.  Returns {var: coordinate tuple} or None if nothing small
    works.
    """
    coord_vars = []
    for vec in bindings.values():
        for c in vec.coords:
            coord_vars.extend(c.num.variables())
    rng = random.Random(20240901)
    pool = [0, 1, -1, 2, -2, 3]
    for attempt in range(tries):
        if attempt == 0:
            point = {v: Fraction(1) for v in coord_vars}
        else:
            point = {v: Fraction(rng.choice(pool)) for v in coord_vars}
        for c in value.coords:
            if c.is_zero():
                continue
            try:
                specialized = c.num.substitute(point)
            except Exception:
                break
            if not specialized.is_zero():
                out = {}
                for var, vec in bindings.items():
                    out[var] = tuple(
                        coord.num.substitute(point).constant_value()
                        for coord in vec.coords)
                return out
    return None


# --- builtin catalog ---------------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinIdentity:
    """A named identity with its AST(s) and surface form.

    asts has a single element for plain identities; combination entries
    (noncommutative_hom_jordan) carry one AST per conjunct.  universal is
    False for identities meant to be evaluated on chosen bindings (the
    anticommuting-pair consequences) rather than over all of V.
    """

    name: str
    asts: tuple
    surfaces: tuple
    requires_commutative: bool = False
    universal: bool = True
    note: str = ""

    @property
    def ast(self):
        if len(self.asts) != 1:
            raise ValueError("%r bundles %d identities; use .asts"
                             % (self.name, len(self.asts)))
        return self.asts[0]

    @property
    def surface(self):
        if len(self.surfaces) != 1:
            raise ValueError("%r bundles %d identities; use .surfaces"
                             % (self.name, len(self.surfaces)))
        return self.surfaces[0]

    @property
    def vars(self):
        seen = []
        for ast in self.asts:
            for v in ast.vars:
                if v not in seen:
                    seen.append(v)
        return tuple(seen)


def _make_builtins():
    x, y, z = _v("x"), _v("y"), _v("z")
    entries = []

    def add(name, asts, surfaces, **kw):
        entries.append(BuiltinIdentity(name=name, asts=tuple(asts),
                                       surfaces=tuple(surfaces), **kw))

    add("hom_associative",
        [IdentityAST(("x", "y", "z"), _associator(x, y, z))],
        ["mu(al(x), mu(y, z)) = mu(mu(x, y), al(z))"],
        note="twisted associativity")

    add("left_hom_alternative",
        [IdentityAST(("x", "y"),
                     _diff(_mu(_al(x), _mu(x, y)), _mu(_mu(x, x), _al(y))))],
        ["mu(al(x), mu(x, y)) = mu(mu(x, x), al(y))"],
        note="twisted left alternativity")

    add("right_hom_alternative",
        [IdentityAST(("x", "y"),
                     _diff(_mu(_al(x), _mu(y, y)), _mu(_mu(x, y), _al(y))))],
        ["mu(al(x), mu(y, y)) = mu(mu(x, y), al(y))"],
        note="twisted right alternativity")

    add("left_hom_alternative_linearized",
        [IdentityAST(("x", "y", "z"),
                     _plus(_associator(x, y, z), _associator(y, x, z)))],
        ["mu(al(x), mu(y, z)) - mu(mu(x, y), al(z))"
         " + mu(al(y), mu(x, z)) - mu(mu(y, x), al(z)) = 0"],
        note="left alternativity with the repeated variable split")

    add("right_hom_alternative_linearized",
        [IdentityAST(("x", "y", "z"),
                     _plus(_associator(x, y, z), _associator(x, z, y)))],
        ["mu(al(x), mu(y, z)) - mu(mu(x, y), al(z))"
         " + mu(al(x), mu(z, y)) - mu(mu(x, z), al(y)) = 0"],
        note="right alternativity with the repeated variable split")

    add("hom_flexible",
        [IdentityAST(("x", "y"),
                     _diff(_mu(_al(x), _mu(y, x)), _mu(_mu(x, y), _al(x))))],
        ["mu(al(x), mu(y, x)) = mu(mu(x, y), al(x))"],
        note="twisted flexibility")

    add("associator_alternating_12",
        [IdentityAST(("x", "y", "z"),
                     _plus(_associator(x, y, z), _associator(y, x, z)))],
        ["mu(al(x), mu(y, z)) - mu(mu(x, y), al(z))"
         " + mu(al(y), mu(x, z)) - mu(mu(y, x), al(z)) = 0"],
        note="associator changes sign when the first two arguments swap")

    add("associator_alternating_23",
        [IdentityAST(("x", "y", "z"),
                     _plus(_associator(x, y, z), _associator(x, z, y)))],
        ["mu(al(x), mu(y, z)) - mu(mu(x, y), al(z))"
         " + mu(al(x), mu(z, y)) - mu(mu(x, z), al(y)) = 0"],
        note="associator changes sign when the last two arguments swap")

    add("associator_alternating_13",
        [IdentityAST(("x", "y", "z"),
                     _plus(_associator(x, y, z), _associator(z, y, x)))],
        ["mu(al(x), mu(y, z)) - mu(mu(x, y), al(z))"
         " + mu(al(z), mu(y, x)) - mu(mu(z, y), al(x)) = 0"],
        note="associator changes sign when the outer arguments swap")

    add("commutative",
        [IdentityAST(("x", "y"), _diff(_mu(x, y), _mu(y, x)))],
        ["mu(x, y) = mu(y, x)"],
        note="commutativity of the product")

    jordan_ast = IdentityAST(
        ("x", "y"),
        _diff(_mu(_al(x, 2), _mu(y, _mu(x, x))),
              _mu(_mu(_al(x), y), _al(_mu(x, x)))))
    add("hom_jordan",
        [jordan_ast],
        ["mu(al^2(x), mu(y, mu(x, x))) = mu(mu(al(x), y), al(mu(x, x)))"],
        requires_commutative=True,
        note="twisted Jordan identity, with al^2 on the leading factor")

    add("hom_jordan_variant_a",
        [IdentityAST(("x", "y"),
                     _diff(_mu(_al(x), _mu(y, _mu(x, x))),
                           _mu(_mu(x, y), _al(_mu(x, x)))))],
        ["mu(al(x), mu(y, mu(x, x))) = mu(mu(x, y), al(mu(x, x)))"],
        requires_commutative=True,
        note="naive one-al variant of the twisted Jordan identity")

    add("hom_jordan_variant_b",
        [IdentityAST(("x", "y"),
                     _diff(_mu(_al(x), _mu(y, _mu(x, x))),
                           _mu(_mu(x, y), _mu(x, _al(x)))))],
        ["mu(al(x), mu(y, mu(x, x))) = mu(mu(x, y), mu(x, al(x)))"],
        requires_commutative=True,
        note="variant with the twist pushed inside the squared factor")

    add("anticommute_left_consequence",
        [IdentityAST(("x", "y", "z"),
                     _plus(_mu(_al(x), _mu(y, z)), _mu(_al(y), _mu(x, z))))],
        ["mu(al(x), mu(y, z)) + mu(al(y), mu(x, z)) = 0"],
        universal=False,
        note="left product consequence for anticommuting x, y; evaluate on "
             "bindings with mu(x, y) = -mu(y, x)")

    add("anticommute_right_consequence",
        [IdentityAST(("z", "x", "y"),
                     _plus(_mu(_mu(z, x), _al(y)), _mu(_mu(z, y), _al(x))))],
        ["mu(mu(z, x), al(y)) + mu(mu(z, y), al(x)) = 0"],
        universal=False,
        note="right product consequence for anticommuting x, y; evaluate on "
             "bindings with mu(x, y) = -mu(y, x)")

    flexible = next(e for e in entries if e.name == "hom_flexible")
    jordan = next(e for e in entries if e.name == "hom_jordan")
    add("noncommutative_hom_jordan",
        [flexible.asts[0], jordan.asts[0]],
        [flexible.surfaces[0], jordan.surfaces[0]],
        note="flexibility together with the twisted Jordan identity, "
             "commutativity not required")

    return {e.name: e for e in entries}


_BUILTINS = _make_builtins()


def builtin(name):
    """Look up a builtin identity by name."""
    try:
        return _BUILTINS[name]
    except KeyError:
        raise UnknownIdentity("no builtin identity named %r" % name) from None


def builtin_names():
    return tuple(_BUILTINS)


def check_builtin(A, name, strategy="generic"):
    """Check a builtin (all of its conjuncts) over A."""
    b = builtin(name) if isinstance(name, str) else name
    merged_assumptions = []
    for ast in b.asts:
        report = check(A, ast, strategy)
        if not report.holds:
            return CheckReport("fails", report.witness, report.assumptions)
        for c in report.assumptions:
            if c not in merged_assumptions:
                merged_assumptions.append(c)
    verdict = "holds-under-assumptions" if merged_assumptions else "holds"
    return CheckReport(verdict, None, tuple(merged_assumptions))
