"""Octonions: alternativity, the diagonal scaling family, and what twisting
by a non-endomorphism costs you.

The octonions are the classic example of an alternative, non-associative
algebra.  The catalog also carries a diagonal scaling family alpha with
alpha(e1) = a e1, ..., alpha(e7) = ac e7.  That family is NOT an algebra
endomorphism (alpha(e1*e1) = -u but alpha(e1)^2 = -a^2 u), and the kernel
shows exactly how the twist construction degrades without the hypothesis.
"""

from homalgebra import catalog
from homalgebra.algebra import check_unit, is_endomorphism, mul, yau_twist
from homalgebra.identities import check_builtin, hom_associator

oct_entry = catalog.get("octonions")
O = oct_entry.algebra

print("== sample products ==")
for li, lj in (("e1", "e2"), ("e2", "e1"), ("e5", "e6"), ("e3", "e6")):
    got = mul(O, O.basis_vector(li), O.basis_vector(lj))
    print("%s * %s = %s" % (li, lj, got.describe(O.basis)))

print()
print("== classical verdicts (twisting map = identity) ==")
Oc = O.with_identity_alpha()
for name in ("left_hom_alternative", "right_hom_alternative",
             "hom_flexible", "hom_associative"):
    r = check_builtin(Oc, name)
    line = "%-24s %s" % (name, r.verdict)
    if r.witness is not None and r.witness.at:
        line += "   (witness %s)" % (r.witness.at,)
    print(line)

print()
print("== the diagonal family is not an endomorphism ==")
diag = oct_entry.maps["oct_diag"]
r = is_endomorphism(O, diag)
print("certificate:", r.verdict)
print("defect at %s, coordinate %s, residual %s"
      % (r.witness.at, r.witness.coordinate, r.witness.residual))

print()
print("== forcing the twist anyway ==")
T = yau_twist(O, diag, force=True)
print("twisted table matches the stored catalog entry:",
      T.same_table(catalog.get("octonions_twist_diag").algebra))
print("left Hom-alternative: ", check_builtin(T, "left_hom_alternative").verdict)
print("right Hom-alternative:", check_builtin(T, "right_hom_alternative").verdict)

print()
print("== the twisted table read classically ==")
T_id = T.with_identity_alpha()
defect = hom_associator(T_id, T_id.basis_vector("u"), T_id.basis_vector("u"),
                        T_id.basis_vector("e1"))
print("associator at (u, u, e1) =", defect.describe(T.basis))
r = check_unit(T, T.basis_vector("u"))
print("u still a unit?", r.verdict,
      "(residual %s at %s)" % (r.witness.residual, r.witness.at))

print()
print("== sign choices a = b = c = -1 ARE endomorphisms ==")
from fractions import Fraction
signs = diag.substitute({"a": Fraction(-1), "b": Fraction(-1),
                         "c": Fraction(-1)})
print("certificate:", is_endomorphism(O, signs).verdict)
T2 = yau_twist(O, signs)
print("their twist is Hom-alternative:",
      check_builtin(T2, "left_hom_alternative").verdict, "/",
      check_builtin(T2, "right_hom_alternative").verdict)
