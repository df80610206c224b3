"""Defining an algebra by structure constants and asking questions of it.

The running example is the quaternion table (a 4-dimensional associative
algebra), built by hand here to show the API; the bigger catalog tables are
in homalgebra.catalog.
"""

from homalgebra import AlgebraSpec, check_unit, is_subalgebra, mul
from homalgebra.identities import check_builtin

# basis 1, i, j, k with the usual quaternion products
table = {
    ("one", "one"): {"one": "1"},
    ("one", "i"): {"i": "1"}, ("i", "one"): {"i": "1"},
    ("one", "j"): {"j": "1"}, ("j", "one"): {"j": "1"},
    ("one", "k"): {"k": "1"}, ("k", "one"): {"k": "1"},
    ("i", "i"): {"one": "-1"}, ("j", "j"): {"one": "-1"},
    ("k", "k"): {"one": "-1"},
    ("i", "j"): {"k": "1"}, ("j", "i"): {"k": "-1"},
    ("j", "k"): {"i": "1"}, ("k", "j"): {"i": "-1"},
    ("k", "i"): {"j": "1"}, ("i", "k"): {"j": "-1"},
}
H = AlgebraSpec.from_table("quaternions", ("one", "i", "j", "k"),
                           {key: {t: int(v) for t, v in val.items()}
                            for key, val in table.items()},
                           unit="one")

print("== products ==")
i, j = H.basis_vector("i"), H.basis_vector("j")
print("i * j =", mul(H, i, j).describe(H.basis))
print("j * i =", mul(H, j, i).describe(H.basis))

print()
print("== unit and subalgebras ==")
print("is 'one' a two-sided unit?", check_unit(H, H.basis_vector("one")).verdict)
print("span{one, i} closed?      ",
      is_subalgebra(H, [H.basis_vector("one"), i]).verdict)
r = is_subalgebra(H, [i, j])
print("span{i, j} closed?        ", r.verdict,
      "(first escape lands on %s)" % r.witness.coordinate)

print()
print("== identities, classical reading (twisting map = identity) ==")
Hc = H.with_identity_alpha()
for name in ("hom_associative", "left_hom_alternative", "commutative"):
    print("%-22s %s" % (name, check_builtin(Hc, name).verdict))
