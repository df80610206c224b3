"""Polarization: from twisted-associative to twisted-Jordan structures.

Symmetrizing a product, mu(x,y) -> (mu(x,y) + mu(y,x))/2, turns a twisted
associative structure into a commutative one satisfying the twisted Jordan
identity with the same map.  The demo also shows, with exact residuals, two
things the kernel refused to take on faith: the polarized table here is not
a classical Jordan algebra for independent a, b, and its diagonal map is
not an endomorphism of it.
"""

from homalgebra import catalog
from homalgebra.algebra import AlgebraSpec, LinMap, Param, is_endomorphism, \
    mul, polarize, yau_twist
from homalgebra.identities import check_builtin
from homalgebra.scalars import Scalar

h3 = catalog.get("hom_assoc_3d").algebra
print("twisted-associative base (symbolic a, b):",
      check_builtin(h3, "hom_associative").verdict)

P = polarize(h3)
print()
print("== polarized table ==")
for i, j, k, c in P.mu:
    print("  %s o %s = (%s) %s" % (P.basis[i], P.basis[j], c, P.basis[k]))
print("matches the stored hom_jordan_3d entry:",
      P.same_table(catalog.get("hom_jordan_3d").algebra))

print()
print("== twisted Jordan structure ==")
print("commutative:", check_builtin(P, "commutative").verdict)
print("hom_jordan: ", check_builtin(P, "hom_jordan").verdict)

print()
print("== but NOT a classical Jordan algebra ==")
r = check_builtin(P.with_identity_alpha(), "hom_jordan")
print("with the identity map the Jordan identity", r.verdict)
print("counterexample: a=2, b=1, x = y = e1+e2+e3 leaves 9/4 e3")

print()
print("== the variant identity shapes do not fit polarization ==")
for name in ("hom_jordan_variant_a", "hom_jordan_variant_b"):
    print("%-22s %s" % (name, check_builtin(P, name).verdict))

print()
print("== a genuine Jordan twist ==")
# Q[x]/(x^3) is commutative and associative, hence Jordan; x -> t x extends
# to the endomorphism family diag(1, t, t^2)
t = Scalar.var("t")
A = AlgebraSpec("trunc3", 3, ["one", "x", "x2"], params=[Param("t")],
                mu=[(i, j, i + j, 1) for i in range(3) for j in range(3)
                    if i + j < 3])
f = LinMap.diagonal([Scalar.one(), t, t * t])
print("classical Jordan base:",
      check_builtin(A.with_identity_alpha(), "hom_jordan").verdict)
print("diag(1, t, t^2) endomorphism:", is_endomorphism(A, f).verdict)
T = yau_twist(A, f)
print("twist satisfies hom_jordan:", check_builtin(T, "hom_jordan").verdict)
print("sample twisted product x o x =",
      mul(T, T.basis_vector("x"), T.basis_vector("x")).describe(T.basis))
