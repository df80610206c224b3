"""Algebras as sparse structure constants, with the constructive operations.

An AlgebraSpec fixes a basis b_0..b_{n-1} and a table of structure constants
c_{ij}^k meaning mu(b_i, b_j) = sum_k c_{ij}^k b_k, all entries exact Scalars
over the declared parameters.  On top of that: bilinear products of vectors,
linear maps (apply/compose/invert), endomorphism and morphism certificates,
the twist mu -> alpha o mu by an endomorphism, its untwist, the opposite
algebra, polarization, subalgebra closure and unit checks.

Check results are CheckReports with verdict holds / holds-under-assumptions /
fails.  "Under assumptions" means some scalar involved carries a denominator,
so the statement is exact on the open set where those denominators are
nonzero; the report lists the constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    MissingTwistMap,
    NotEndomorphism,
    SingularMap,
)
from .scalars import Scalar, name_key, nonzero_constraints


def _as_scalar(value):
    if isinstance(value, Scalar):
        return value
    return Scalar.from_fraction(value)


class Vector:
    """Element of the algebra: a coordinate tuple of Scalars."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(_as_scalar(c) for c in coords)

    @classmethod
    def zero(cls, dim):
        return cls([Scalar.zero()] * dim)

    @classmethod
    def basis(cls, dim, index):
        coords = [Scalar.zero()] * dim
        coords[index] = Scalar.one()
        return cls(coords)

    @property
    def dim(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other):
        _same_dim(self, other)
        return Vector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        _same_dim(self, other)
        return Vector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Vector([-a for a in self.coords])

    def scale(self, scalar):
        scalar = _as_scalar(scalar)
        return Vector([scalar * a for a in self.coords])

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def describe(self, basis):
        """Human-readable combination like '(a-1)*e1 + e3'."""
        parts = []
        for c, label in zip(self.coords, basis):
            if c.is_zero():
                continue
            if c.is_one():
                parts.append(label)
            else:
                parts.append("(%s)*%s" % (c, label))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "Vector(%s)" % (", ".join(str(c) for c in self.coords))


def _same_dim(u, v):
    if u.dim != v.dim:
        raise DimensionMismatch("vector dimensions differ: %d vs %d" % (u.dim, v.dim))


class LinMap:
    """Square matrix of Scalars; column j is the image of basis vector j."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_as_scalar(x) for x in row) for row in rows)
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise DimensionMismatch("linear map matrix must be square")

    @classmethod
    def from_columns(cls, columns):
        n = len(columns)
        return cls([[columns[j][i] for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else Scalar.zero() for j in range(n)]
                    for i in range(n)])

    @property
    def dim(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return Vector([self.rows[i][j] for i in range(self.dim)])

    def scalars(self):
        for row in self.rows:
            yield from row

    def substitute(self, bindings):
        return LinMap([[x.substitute(bindings) for x in row] for row in self.rows])

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "LinMap(%s)" % "; ".join(
            ", ".join(str(x) for x in row) for row in self.rows)


def identity(n):
    return LinMap([[Scalar.one() if i == j else Scalar.zero() for j in range(n)]
                   for i in range(n)])


def apply_map(f, v):
    if f.dim != v.dim:
        raise DimensionMismatch("map dimension %d vs vector dimension %d"
                                % (f.dim, v.dim))
    out = []
    for i in range(f.dim):
        acc = Scalar.zero()
        for j in range(f.dim):
            e = f.rows[i][j]
            if not e.is_zero() and not v.coords[j].is_zero():
                acc = acc + e * v.coords[j]
        out.append(acc)
    return Vector(out)


def compose(f, g):
    """The map applying g first, then f."""
    if f.dim != g.dim:
        raise DimensionMismatch("composed maps must share a dimension")
    n = f.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Scalar.zero()
            for k in range(n):
                a, b = f.rows[i][k], g.rows[k][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        rows.append(row)
    return LinMap(rows)


def invert(f):
    """Exact inverse by Gauss-Jordan elimination; SingularMap if det = 0."""
    n = f.dim
    work = [list(row) for row in f.rows]
    inv = [list(row) for row in identity(n).rows]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not work[r][col].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMap("matrix is singular (no pivot in column %d)" % col)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = work[col][col]
        for c in range(n):
            work[col][c] = work[col][c] / pivot
            inv[col][c] = inv[col][c] / pivot
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if factor.is_zero():
                continue
            for c in range(n):
                work[r][c] = work[r][c] - factor * work[col][c]
                inv[r][c] = inv[r][c] - factor * inv[col][c]
    return LinMap(inv)


@dataclass(frozen=True)
class Param:
    name: str
    nonzero: bool = False


@dataclass(frozen=True)
class Witness:
    """Where a check failed and by how much."""

    at: tuple = None            # offending basis labels, e.g. ("e1", "e2")
    coordinate: str = None      # basis label of the first nonzero coordinate
    residual: Scalar = None     # that coordinate's value
    residual_vector: Vector = None
    specialization: dict = None  # var name -> tuple of Fractions (generic checks)

    def to_json(self):
        out = {}
        if self.at is not None:
            out["at"] = list(self.at)
        if self.coordinate is not None:
            out["coordinate"] = self.coordinate
        if self.residual is not None:
            out["residual"] = str(self.residual)
        if self.specialization is not None:
            out["specialization"] = {
                v: [str(c) for c in coords]
                for v, coords in self.specialization.items()
            }
        return out


@dataclass(frozen=True)
class CheckReport:
    verdict: str                      # holds | holds-under-assumptions | fails
    witness: Witness = None
    assumptions: tuple = ()

    @property
    def holds(self):
        return self.verdict != "fails"

    def to_json(self):
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "assumptions": list(self.assumptions),
        }


def _verdict(assumptions):
    return "holds-under-assumptions" if assumptions else "holds"


def _collect_constraints(*sources):
    """Union of denominator constraints over scalars from the given sources."""
    seen = []
    for source in sources:
        if source is None:
            continue
        for s in source:
            for c in s.nonzero_constraints():
                if c not in seen:
                    seen.append(c)
    return tuple(sorted(seen, key=name_key))


class AlgebraSpec:
    """Finite-dimensional algebra over Q(params), by structure constants.

    mu is a sparse mapping (i, j) -> {k: Scalar}; omitted products are zero.
    alpha, when present, is the twisting map of the Hom-structure.  unit is
    an optional basis index.
    """

    __slots__ = ("name", "dim", "basis", "params", "mu", "alpha", "unit",
                 "_table")

    def __init__(self, name, dim, basis, params=(), mu=(), alpha=None, unit=None):
        self.name = name
        self.dim = dim
        self.basis = tuple(basis)
        if len(self.basis) != dim:
            raise ValueError("expected %d basis labels, got %d" % (dim, len(self.basis)))
        if len(set(self.basis)) != dim:
            raise ValueError("basis labels must be distinct")
        norm_params = []
        for p in params:
            if isinstance(p, Param):
                norm_params.append(p)
            elif isinstance(p, str):
                norm_params.append(Param(p))
            else:
                pname, nz = p
                norm_params.append(Param(pname, bool(nz)))
        self.params = tuple(norm_params)
        if len({p.name for p in self.params}) != len(self.params):
            raise ValueError("duplicate parameter declaration")

        entries = []
        seen = set()
        declared = {p.name for p in self.params}
        for i, j, k, c in mu:
            c = _as_scalar(c)
            if c.is_zero():
                continue
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError("structure constant index out of range: %r"
                                 % ((i, j, k),))
            if (i, j, k) in seen:
                raise ValueError("duplicate structure constant at %r" % ((i, j, k),))
            seen.add((i, j, k))
            extra = c.variables() - declared
            if extra:
                raise ValueError("structure constant uses undeclared parameters %s"
                                 % sorted(extra))
            entries.append((i, j, k, c))
        entries.sort(key=lambda e: e[:3])
        self.mu = tuple(entries)

        if alpha is not None and alpha.dim != dim:
            raise DimensionMismatch("twisting map dimension %d vs algebra dimension %d"
                                    % (alpha.dim, dim))
        self.alpha = alpha
        if unit is not None and not (0 <= unit < dim):
            raise ValueError("unit index out of range")
        self.unit = unit

        table = {}
        for i, j, k, c in self.mu:
            table.setdefault((i, j), []).append((k, c))
        self._table = table

    # -- construction helpers ----------------------------------------------

    @classmethod
    def from_table(cls, name, basis, table, params=(), alpha=None, unit=None):
        """Build from a label-keyed table {(li, lj): {lk: scalar}}."""
        basis = tuple(basis)
        index = {label: i for i, label in enumerate(basis)}
        mu = []
        for (li, lj), value in table.items():
            for lk, c in value.items():
                mu.append((index[li], index[lj], index[lk], c))
        unit_index = index[unit] if isinstance(unit, str) else unit
        return cls(name, len(basis), basis, params=params, mu=mu,
                   alpha=alpha, unit=unit_index)

    def label_index(self, label):
        try:
            return self.basis.index(label)
        except ValueError:
            raise ValueError("unknown basis label %r" % label) from None

    def basis_vector(self, i):
        if isinstance(i, str):
            i = self.label_index(i)
        return Vector.basis(self.dim, i)

    def product_on_basis(self, i, j):
        coords = [Scalar.zero()] * self.dim
        for k, c in self._table.get((i, j), ()):
            coords[k] = c
        return Vector(coords)

    def mu_scalars(self):
        for _, _, _, c in self.mu:
            yield c

    def param_names(self):
        return tuple(p.name for p in self.params)

    def with_alpha(self, alpha):
        return AlgebraSpec(self.name, self.dim, self.basis, self.params,
                           self.mu, alpha, self.unit)

    def with_identity_alpha(self):
        return self.with_alpha(identity(self.dim))

    def with_name(self, name):
        return AlgebraSpec(name, self.dim, self.basis, self.params,
                           self.mu, self.alpha, self.unit)

    def substitute(self, bindings):
        """Specialize some parameters to rationals, keeping the rest."""
        remaining = tuple(p for p in self.params if p.name not in bindings)
        mu = [(i, j, k, c.substitute(bindings)) for i, j, k, c in self.mu]
        alpha = self.alpha.substitute(bindings) if self.alpha else None
        return AlgebraSpec(self.name, self.dim, self.basis, remaining, mu,
                           alpha, self.unit)

    def __eq__(self, other):
        return (isinstance(other, AlgebraSpec)
                and self.name == other.name
                and self.dim == other.dim
                and self.basis == other.basis
                and self.params == other.params
                and self.mu == other.mu
                and self.alpha == other.alpha
                and self.unit == other.unit)

    def same_table(self, other):
        """Structure constants agree entry by entry (names etc. ignored)."""
        return self.dim == other.dim and self.mu == other.mu

    def __repr__(self):
        return "AlgebraSpec(%r, dim=%d, %d products%s)" % (
            self.name, self.dim, len(self.mu),
            ", twisted" if self.alpha else "")


# --- operations -------------------------------------------------------------------


def mul(A, u, v):
    """Bilinear product of two vectors via the structure constants."""
    if u.dim != A.dim or v.dim != A.dim:
        raise DimensionMismatch("vector dimensions do not match the algebra")
    coords = [Scalar.zero()] * A.dim
    for (i, j), ks in A._table.items():
        ui = u.coords[i]
        if ui.is_zero():
            continue
        vj = v.coords[j]
        if vj.is_zero():
            continue
        uv = ui * vj
        for k, c in ks:
            coords[k] = coords[k] + c * uv
    return Vector(coords)


def is_endomorphism(A, f):
    """Does f(mu(bi, bj)) = mu(f bi, f bj) hold for all basis pairs?"""
    if f.dim != A.dim:
        raise DimensionMismatch("map dimension %d vs algebra dimension %d"
                                % (f.dim, A.dim))
    assumptions = _collect_constraints(A.mu_scalars(), f.scalars())
    images = [apply_map(f, A.basis_vector(j)) for j in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = apply_map(f, A.product_on_basis(i, j))
            rhs = mul(A, images[i], images[j])
            diff = lhs - rhs
            if not diff.is_zero():
                k = _first_nonzero(diff)
                witness = Witness(at=(A.basis[i], A.basis[j]),
                                  coordinate=A.basis[k],
                                  residual=diff.coords[k],
                                  residual_vector=diff)
                return CheckReport("fails", witness, assumptions)
    return CheckReport(_verdict(assumptions), None, assumptions)


def _first_nonzero(vec):
    for k, c in enumerate(vec.coords):
        if not c.is_zero():
            return k
    raise ValueError("vector is zero")


def yau_twist(A, f, force=False, name=None):
    """Twisted algebra with product f o mu and twisting map f.

    Refuses maps that are not endomorphisms of A unless force=True.
    """
    if f.dim != A.dim:
        raise DimensionMismatch("map dimension %d vs algebra dimension %d"
                                % (f.dim, A.dim))
    if not force:
        report = is_endomorphism(A, f)
        if not report.holds:
            raise NotEndomorphism(
                "map is not an endomorphism of %r (defect at %s)"
                % (A.name, report.witness.at), report)
    mu_entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.product_on_basis(i, j)
            if prod.is_zero():
                continue
            image = apply_map(f, prod)
            for k, c in enumerate(image.coords):
                if not c.is_zero():
                    mu_entries.append((i, j, k, c))
    return AlgebraSpec(name or A.name + "_twist", A.dim, A.basis, A.params,
                       mu_entries, alpha=f, unit=A.unit)


def untwist(A, name=None):
    """Recover the untwisted product alpha^{-1} o mu; clears the twist map."""
    if A.alpha is None:
        raise MissingTwistMap("algebra %r has no twisting map" % A.name)
    inv = invert(A.alpha)
    mu_entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            prod = A.product_on_basis(i, j)
            if prod.is_zero():
                continue
            image = apply_map(inv, prod)
            for k, c in enumerate(image.coords):
                if not c.is_zero():
                    mu_entries.append((i, j, k, c))
    return AlgebraSpec(name or A.name + "_untwist", A.dim, A.basis, A.params,
                       mu_entries, alpha=None, unit=A.unit)


def opposite(A, name=None):
    """Same space with the arguments of the product swapped."""
    mu_entries = [(j, i, k, c) for i, j, k, c in A.mu]
    return AlgebraSpec(name or A.name + "_op", A.dim, A.basis, A.params,
                       mu_entries, alpha=A.alpha, unit=A.unit)


def polarize(A, name=None):
    """Symmetrized product (mu(x,y) + mu(y,x)) / 2; twist map carried over."""
    half = Scalar.from_fraction(Fraction(1, 2))
    acc = {}
    for i, j, k, c in A.mu:
        acc[(i, j, k)] = acc.get((i, j, k), Scalar.zero()) + half * c
        acc[(j, i, k)] = acc.get((j, i, k), Scalar.zero()) + half * c
    mu_entries = [(i, j, k, c) for (i, j, k), c in acc.items() if not c.is_zero()]
    return AlgebraSpec(name or A.name + "_polarized", A.dim, A.basis, A.params,
                       mu_entries, alpha=A.alpha, unit=A.unit)


def is_morphism(A, B, f):
    """f o mu_A = mu_B o (f x f) on basis pairs, and f o alpha_A = alpha_B o f
    when both twist maps are present."""
    if A.dim != B.dim or f.dim != A.dim:
        raise DimensionMismatch("morphism check needs equal dimensions")
    assumptions = _collect_constraints(A.mu_scalars(), B.mu_scalars(), f.scalars())
    images = [apply_map(f, A.basis_vector(j)) for j in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = apply_map(f, A.product_on_basis(i, j))
            rhs = mul(B, images[i], images[j])
            diff = lhs - rhs
            if not diff.is_zero():
                k = _first_nonzero(diff)
                witness = Witness(at=(A.basis[i], A.basis[j]),
                                  coordinate=B.basis[k],
                                  residual=diff.coords[k],
                                  residual_vector=diff)
                return CheckReport("fails", witness, assumptions)
    if A.alpha is not None and B.alpha is not None:
        assumptions = _collect_constraints(
            A.mu_scalars(), B.mu_scalars(), f.scalars(),
            A.alpha.scalars(), B.alpha.scalars())
        for j in range(A.dim):
            lhs = apply_map(f, apply_map(A.alpha, A.basis_vector(j)))
            rhs = apply_map(B.alpha, images[j])
            diff = lhs - rhs
            if not diff.is_zero():
                k = _first_nonzero(diff)
                witness = Witness(at=(A.basis[j],),
                                  coordinate=B.basis[k],
                                  residual=diff.coords[k],
                                  residual_vector=diff)
                return CheckReport("fails", witness, assumptions)
    return CheckReport(_verdict(assumptions), None, assumptions)


def check_unit(A, u):
    """Is u a two-sided unit: mul(u, bj) = bj = mul(bj, u) for all j?"""
    if u.dim != A.dim:
        raise DimensionMismatch("vector dimension does not match the algebra")
    assumptions = _collect_constraints(A.mu_scalars(), u.coords)
    for j in range(A.dim):
        bj = A.basis_vector(j)
        for left in (True, False):
            prod = mul(A, u, bj) if left else mul(A, bj, u)
            diff = prod - bj
            if not diff.is_zero():
                k = _first_nonzero(diff)
                witness = Witness(at=(A.basis[j],),
                                  coordinate=A.basis[k],
                                  residual=diff.coords[k],
                                  residual_vector=diff)
                return CheckReport("fails", witness, assumptions)
    return CheckReport(_verdict(assumptions), None, assumptions)


# --- subalgebra closure -------------------------------------------------------


class _Echelon:
    """Row echelon basis over Scalars, fraction-free, first-nonzero pivoting."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []          # list of (pivot_col, Vector)
        self.pivot_constraints = []

    def reduce(self, v):
        """Residue of v modulo the span; fraction-free cross-multiplication."""
        for pivot_col, row in self.rows:
            c = v.coords[pivot_col]
            if c.is_zero():
                continue
            p = row.coords[pivot_col]
            v = v.scale(p) - row.scale(c)
        return v

    def insert(self, v):
        """Reduce v and add it to the basis if independent; True if added."""
        v = self.reduce(v)
        if v.is_zero():
            return False
        pivot_col = _first_nonzero(v)
        pivot = v.coords[pivot_col]
        if not (pivot.num.is_constant() and pivot.den.is_one()):
            for c in nonzero_constraints(pivot.num):
                if c not in self.pivot_constraints:
                    self.pivot_constraints.append(c)
        self.rows.append((pivot_col, v))
        self.rows.sort(key=lambda pr: pr[0])
        return True

    def contains(self, v):
        return self.reduce(v).is_zero()

    def vectors(self):
        return [row for _, row in self.rows]


def is_subalgebra(A, gens):
    """Span of gens closed under the product (and under alpha, if present)?"""
    ech = _Echelon(A.dim)
    for g in gens:
        if g.dim != A.dim:
            raise DimensionMismatch("generator dimension does not match the algebra")
        ech.insert(g)
    span = ech.vectors()
    assumptions = _collect_constraints(
        A.mu_scalars(),
        (c for g in gens for c in g.coords),
        A.alpha.scalars() if A.alpha is not None else None,
    )

    def finish(verdict, witness=None):
        extra = tuple(c for c in ech.pivot_constraints)
        merged = tuple(sorted(set(assumptions) | set(extra), key=name_key))
        if verdict != "fails" and merged:
            verdict = "holds-under-assumptions"
        return CheckReport(verdict, witness, merged)

    for a, u in enumerate(span):
        for b, v in enumerate(span):
            prod = mul(A, u, v)
            residue = ech.reduce(prod)
            if not residue.is_zero():
                witness = Witness(at=("span#%d" % a, "span#%d" % b),
                                  coordinate=A.basis[_first_nonzero(residue)],
                                  residual=residue.coords[_first_nonzero(residue)],
                                  residual_vector=prod)
                return finish("fails", witness)
    if A.alpha is not None:
        for a, u in enumerate(span):
            image = apply_map(A.alpha, u)
            residue = ech.reduce(image)
            if not residue.is_zero():
                witness = Witness(at=("span#%d" % a,),
                                  coordinate=A.basis[_first_nonzero(residue)],
                                  residual=residue.coords[_first_nonzero(residue)],
                                  residual_vector=image)
                return finish("fails", witness)
    return finish("holds")
