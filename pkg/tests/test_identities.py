"""Identity evaluation, the two checking strategies, multilinearity and the
builtin catalog."""

from fractions import Fraction

import pytest

from homalgebra import catalog
from homalgebra.algebra import LinMap, Vector, polarize, yau_twist
from homalgebra.errors import (
    MissingTwistMap,
    NotMultilinear,
    UnboundVariable,
    UnknownIdentity,
)
from homalgebra.identities import (
    Mu,
    Sum,
    Var,
    builtin,
    builtin_names,
    check,
    check_builtin,
    evaluate,
    generic_element,
    hom_associator,
    is_multilinear,
    IdentityAST,
)
from homalgebra.parser import parse_identity
from homalgebra.scalars import Scalar, exact_div


def S(name):
    return Scalar.var(name)


@pytest.fixture(scope="module")
def h3():
    return catalog.get("hom_assoc_3d").algebra


@pytest.fixture(scope="module")
def octonions_id():
    return catalog.get("octonions").algebra.with_identity_alpha()


class TestHomAssociator:
    def test_vanishes_with_declared_alpha(self, h3):
        e1, e3 = h3.basis_vector("e1"), h3.basis_vector("e3")
        assert hom_associator(h3, e1, e1, e3).is_zero()

    def test_untwisted_defect(self, h3):
        # with alpha = id the associator at (e1, e1, e3) is (b - a) b e3,
        # the opposite order of the defect mu(mu(e1,e1),e3) - mu(e1,mu(e1,e3))
        A = h3.with_identity_alpha()
        e1, e3 = A.basis_vector("e1"), A.basis_vector("e3")
        got = hom_associator(A, e1, e1, e3)
        assert got == e3.scale((S("b") - S("a")) * S("b"))

    def test_4dim_defect(self):
        # mu1(e2, mu1(e3, e0)) - mu1(mu1(e2, e3), e0) = mu1(e2, e3) - 0 = e1
        A = catalog.get("alt4_mu1").algebra.with_identity_alpha()
        e0, e2, e3 = (A.basis_vector(k) for k in ("e0", "e2", "e3"))
        assert hom_associator(A, e2, e3, e0) == A.basis_vector("e1")

    def test_twisted_octonions_classical_defect(self):
        # the twisted table read as an ordinary algebra is not alternative:
        # the associator at (u, u, e1) is exactly (a^2 - a) e1
        A = catalog.get("octonions_twist_diag").algebra.with_identity_alpha()
        u, e1 = A.basis_vector("u"), A.basis_vector("e1")
        got = hom_associator(A, u, u, e1)
        assert got == e1.scale(S("a") ** 2 - S("a"))

    def test_requires_alpha(self):
        A = catalog.get("alt4_mu1").algebra
        v = A.basis_vector("e0")
        with pytest.raises(MissingTwistMap):
            hom_associator(A, v, v, v)

    def test_trilinear(self, octonions_id):
        A = octonions_id
        lam = S("a")
        u = generic_element(A, "u")
        up = generic_element(A, "v", taken=[str(c.num) for c in u.coords])
        y = generic_element(A, "w")
        z = generic_element(A, "s")
        lhs = hom_associator(A, u.scale(lam) + up, y, z)
        rhs = hom_associator(A, u, y, z).scale(lam) + hom_associator(A, up, y, z)
        assert (lhs - rhs).is_zero()


class TestEvaluate:
    def test_mu_node(self):
        A = catalog.get("octonions").algebra
        ast = IdentityAST(("x", "y"), Mu(Var("x"), Var("y")))
        got = evaluate(A, ast, {"x": A.basis_vector("e3"),
                                "y": A.basis_vector("e6")})
        assert got == -A.basis_vector("e4")

    def test_cancelling_sum(self, h3):
        ast = IdentityAST(("x",), Sum(((1, Var("x")), (-1, Var("x")))))
        v = h3.basis_vector("e2")
        assert evaluate(h3, ast, {"x": v}).is_zero()

    def test_unbound_variable(self, h3):
        ast = IdentityAST(("x",), Var("x"))
        with pytest.raises(UnboundVariable):
            evaluate(h3, ast, {})

    def test_alpha_node_needs_twist_map(self):
        A = catalog.get("alt4_mu1").algebra   # no twist map
        ast = builtin("left_hom_alternative").ast
        with pytest.raises(MissingTwistMap):
            evaluate(A, ast, {"x": A.basis_vector(0), "y": A.basis_vector(1)})

    def test_jordan_on_basis_pairs_of_forced_twist(self):
        # the forced twist of the polarized table satisfies the twisted
        # Jordan identity on every basis pair, although not universally
        # (a nonlinear identity can vanish on a basis yet fail on sums)
        hj = catalog.get("hom_jordan_3d")
        plain = hj.algebra.with_alpha(None)
        forced = yau_twist(plain, hj.maps["alpha"], force=True)
        ast = builtin("hom_jordan").ast
        for i in range(3):
            for j in range(3):
                value = evaluate(forced, ast,
                                 {"x": forced.basis_vector(i),
                                  "y": forced.basis_vector(j)})
                assert value.is_zero(), (i, j)
        assert not check_builtin(forced, "hom_jordan").holds


class TestCheck:
    def test_h3_hom_associative_generic(self, h3):
        assert check_builtin(h3, "hom_associative", "generic").verdict == "holds"

    def test_h3_with_identity_alpha_fails_divisibly(self, h3):
        r = check_builtin(h3.with_identity_alpha(), "hom_associative", "generic")
        assert r.verdict == "fails"
        residual = r.witness.residual.num
        # divisible by (a - b) and by b
        q = exact_div(residual, S("a").num - S("b").num)
        exact_div(q, S("b").num)

    def test_octonions_left_alternative_generic(self, octonions_id):
        assert check_builtin(octonions_id, "left_hom_alternative").holds

    def test_basis_strategy_needs_multilinear(self, h3):
        with pytest.raises(NotMultilinear):
            check(h3, builtin("left_hom_alternative").ast, "basis")

    def test_basis_witness_is_tuple(self):
        A = catalog.get("alt4_mu1").algebra.with_identity_alpha()
        r = check_builtin(A, "hom_associative", "basis")
        assert r.verdict == "fails"
        assert len(r.witness.at) == 3
        assert not r.witness.residual.is_zero()

    def test_generic_failure_carries_specialization(self, h3):
        r = check_builtin(h3.with_identity_alpha(), "hom_associative")
        assert r.witness.specialization is not None
        assert set(r.witness.specialization) == {"x", "y", "z"}

    def test_assumptions_surface_in_verdict(self):
        A = catalog.get("alt4_mu1_twist_alpha1").algebra
        r = check_builtin(A, "left_hom_alternative")
        assert r.verdict == "holds-under-assumptions"
        assert "a2 != 0" in r.assumptions


class TestMultilinearity:
    def test_linearized_form_is_multilinear(self):
        assert is_multilinear(builtin("left_hom_alternative_linearized").ast)

    def test_repeated_variable_is_not(self):
        assert not is_multilinear(builtin("left_hom_alternative").ast)

    def test_single_var(self):
        assert is_multilinear(IdentityAST(("x",), Var("x")))

    def test_jordan_not_multilinear(self):
        assert not is_multilinear(builtin("hom_jordan").ast)


class TestBuiltins:
    def test_jordan_vars(self):
        assert builtin("hom_jordan").vars == ("x", "y")

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            builtin("nonsense")

    def test_catalog_contents(self):
        expected = {
            "hom_associative", "left_hom_alternative", "right_hom_alternative",
            "left_hom_alternative_linearized", "right_hom_alternative_linearized",
            "hom_flexible", "associator_alternating_12",
            "associator_alternating_23", "associator_alternating_13",
            "commutative", "hom_jordan", "hom_jordan_variant_a",
            "hom_jordan_variant_b", "anticommute_left_consequence",
            "anticommute_right_consequence", "noncommutative_hom_jordan",
        }
        assert set(builtin_names()) == expected

    def test_combination_entry(self):
        combo = builtin("noncommutative_hom_jordan")
        assert len(combo.asts) == 2
        with pytest.raises(ValueError):
            combo.ast

    def test_requires_commutative_flags(self):
        assert builtin("hom_jordan").requires_commutative
        assert builtin("hom_jordan_variant_a").requires_commutative
        assert not builtin("hom_associative").requires_commutative
        assert not builtin("noncommutative_hom_jordan").requires_commutative

    def test_non_universal_flags(self):
        assert not builtin("anticommute_left_consequence").universal
        assert not builtin("anticommute_right_consequence").universal
        assert builtin("hom_flexible").universal


class TestStructuralProperties:
    def test_hom_associative_implies_alternative(self, h3):
        assert check_builtin(h3, "hom_associative").holds
        assert check_builtin(h3, "left_hom_alternative").holds
        assert check_builtin(h3, "right_hom_alternative").holds

    def test_alternating_associator_on_octonions(self, octonions_id):
        for name in ("associator_alternating_12", "associator_alternating_23",
                     "associator_alternating_13", "hom_flexible"):
            assert check_builtin(octonions_id, name).holds, name

    def test_linearization_equivalence_both_ways(self):
        # holds on an alternative table, fails on a non-alternative one,
        # with matching verdicts for the plain and linearized forms
        good = catalog.get("alt4_mu1").algebra.with_identity_alpha()
        bad = catalog.get("octonions_twist_diag").algebra
        for A in (good, bad):
            left = check_builtin(A, "left_hom_alternative").holds
            left_lin = check_builtin(A, "left_hom_alternative_linearized").holds
            assert left == left_lin
            right = check_builtin(A, "right_hom_alternative").holds
            right_lin = check_builtin(A, "right_hom_alternative_linearized").holds
            assert right == right_lin

    def test_anticommuting_pair_consequences(self, octonions_id):
        A = octonions_id
        x, y = A.basis_vector("e1"), A.basis_vector("e2")
        # the pair anticommutes
        from homalgebra.algebra import mul
        assert mul(A, x, y) == -mul(A, y, x)
        z = generic_element(A, "z")
        for name in ("anticommute_left_consequence",
                     "anticommute_right_consequence"):
            ast = builtin(name).ast
            assert evaluate(A, ast, {"x": x, "y": y, "z": z}).is_zero(), name

    def test_opposite_swaps_left_and_right(self):
        from homalgebra.algebra import opposite
        A = catalog.get("alt4_mu2_twist_alpha2").algebra
        op = opposite(A)
        assert check_builtin(A, "left_hom_alternative").holds == \
            check_builtin(op, "right_hom_alternative").holds
        assert check_builtin(A, "right_hom_alternative").holds == \
            check_builtin(op, "left_hom_alternative").holds

    def test_strategy_agreement_spot(self):
        A = catalog.get("hom_assoc_3d").algebra
        for name in ("hom_associative", "commutative",
                     "left_hom_alternative_linearized"):
            g = check_builtin(A, name, "generic")
            b = check_builtin(A, name, "basis")
            assert g.holds == b.holds, name


class TestGenericElements:
    def test_names_avoid_parameters(self):
        from homalgebra.algebra import AlgebraSpec, Param
        A = AlgebraSpec("clash", 2, ["v", "w"],
                        params=[Param("x_1")], mu=[(0, 0, 0, 1)])
        g = generic_element(A, "x")
        names = {str(c.num) for c in g.coords}
        assert "x_1" not in names
