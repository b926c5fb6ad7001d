"""Finite-dimensional (possibly noncommutative) algebras given by structure
constants, the one-parameter triangular family, and exhaustive automorphism
enumeration over small finite fields.

The triangular family T(t) has basis (1, e2, e3) with e2^2 = t^2,
e3^2 = 0, e2*e3 = t*e3, e3*e2 = -t*e3.  At t = 1 this is the algebra of
upper-triangular 2x2 matrices; at t = 0 it is commutative.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, FieldElement, FieldError, parse_field_spec
from .linalg import Matrix
from .poly import FunctionField, Pole


class StructureConstAlgebra:
    """Algebra defined by an n x n table of product coordinate vectors.

    table[i][j] is the coordinate vector of (basis_i * basis_j); the unit is
    given by its coordinate vector.  Construction verifies the unit axiom
    and full associativity.
    """

    def __init__(self, field: Field, table, unit, basis_names=None):
        self.field = field
        self.table = tuple(
            tuple(tuple(field.coerce(c) for c in cell) for cell in row) for row in table
        )
        n = len(self.table)
        if any(len(row) != n for row in self.table) or any(
            len(cell) != n for row in self.table for cell in row
        ):
            raise ValueError("table must be n x n cells of n coordinates")
        self.dim = n
        self.unit = tuple(field.coerce(c) for c in unit)
        if len(self.unit) != n:
            raise ValueError("unit vector length must equal the dimension")
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"e{i + 1}" for i in range(n)
        )
        self._verify()

    def _verify(self):
        one = self.element(self.unit)
        for i in range(self.dim):
            b = self.basis(i)
            if one * b != b or b * one != b:
                raise ValueError(f"unit axiom fails on basis vector {i + 1}")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    left = (self.basis(i) * self.basis(j)) * self.basis(k)
                    right = self.basis(i) * (self.basis(j) * self.basis(k))
                    if left != right:
                        raise ValueError(
                            f"associativity fails on basis triple ({i + 1}, {j + 1}, {k + 1})"
                        )

    def element(self, coeffs) -> "StructElement":
        return StructElement(self, coeffs)

    def basis(self, i: int) -> "StructElement":
        cs = [self.field.zero] * self.dim
        cs[i] = self.field.one
        return self.element(cs)

    def one(self) -> "StructElement":
        return self.element(self.unit)

    def zero(self) -> "StructElement":
        return self.element([0] * self.dim)

    def is_commutative(self) -> bool:
        return all(
            self.basis(i) * self.basis(j) == self.basis(j) * self.basis(i)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def __eq__(self, other):
        if not isinstance(other, StructureConstAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and all(
                a == b
                for ra, rb in zip(self.table, other.table)
                for ca, cb in zip(ra, rb)
                for a, b in zip(ca, cb)
            )
            and all(a == b for a, b in zip(self.unit, other.unit))
        )

    def __hash__(self):  # pragma: no cover
        raise TypeError("StructureConstAlgebra is not hashable")

    def __repr__(self):
        return f"<{self.dim}-dim algebra over {self.field}>"


class StructElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: StructureConstAlgebra, coeffs):
        cs = [algebra.field.coerce(c) for c in coeffs]
        if len(cs) != algebra.dim:
            raise ValueError("coordinate vector length must equal the dimension")
        self.algebra = algebra
        self.coeffs = tuple(cs)

    def _check(self, other):
        if isinstance(other, StructElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        try:
            c = self.algebra.field.coerce(other)
        except TypeError:
            return None
        return StructElement(
            self.algebra, [u * c for u in self.algebra.unit]
        )

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return StructElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return StructElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, o.coeffs)]
        )

    def __neg__(self):
        return StructElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, StructElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            n = self.algebra.dim
            out = [self.algebra.field.zero] * n
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    if b.is_zero():
                        continue
                    ab = a * b
                    cell = self.algebra.table[i][j]
                    for k in range(n):
                        if not cell[k].is_zero():
                            out[k] = out[k] + ab * cell[k]
            return StructElement(self.algebra, out)
        try:
            c = self.algebra.field.coerce(other)
        except TypeError:
            return NotImplemented
        return StructElement(self.algebra, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(
            (id(self.algebra), tuple(self.algebra.field._hash_key(c.value) for c in self.coeffs))
        )

    def __str__(self):
        parts = []
        for name, c in zip(self.algebra.basis_names, self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            if any(ch in cs for ch in "+/ ") or "-" in cs[1:]:
                cs = f"({cs})"
            if cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append(f"-{name}")
            else:
                parts.append(f"{cs}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return self.__str__()


class LinearAlgebraMap:
    """Linear map between equal-dimensional algebras over one field,
    columns of `matrix` being the images of the source basis vectors."""

    def __init__(self, source: StructureConstAlgebra, target: StructureConstAlgebra, matrix: Matrix):
        if source.field != target.field:
            raise FieldError("source and target over different fields")
        if source.dim != target.dim:
            raise ValueError("source and target dimensions differ")
        if matrix.nrows != source.dim or matrix.ncols != source.dim:
            raise ValueError("matrix shape does not match the dimension")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def from_images(cls, source, target, images):
        cols = [im.coeffs if isinstance(im, StructElement) else im for im in images]
        rows = list(map(list, zip(*cols)))
        return cls(source, target, Matrix(source.field, rows))

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, Matrix.identity(algebra.field, algebra.dim))

    def __call__(self, u: StructElement) -> StructElement:
        if u.algebra != self.source:
            raise ValueError("element of a different algebra")
        return self.target.element(self.matrix.mul_vec(list(u.coeffs)))

    def image_of_basis(self, i: int) -> StructElement:
        return self(self.source.basis(i))

    def compose(self, inner: "LinearAlgebraMap") -> "LinearAlgebraMap":
        """self after inner."""
        if inner.target != self.source:
            raise ValueError("maps do not chain")
        return LinearAlgebraMap(inner.source, self.target, self.matrix * inner.matrix)

    def is_algebra_morphism(self) -> bool:
        """phi(1) = 1 and phi(b_i b_j) = phi(b_i) phi(b_j) for all pairs."""
        if self(self.source.one()) != self.target.one():
            return False
        images = [self.image_of_basis(i) for i in range(self.source.dim)]
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                prod = self.source.basis(i) * self.source.basis(j)
                if self(prod) != images[i] * images[j]:
                    return False
        return True

    def is_invertible(self) -> bool:
        return self.matrix.is_invertible()

    def is_automorphism(self) -> bool:
        return self.source == self.target and self.is_algebra_morphism() and self.is_invertible()

    def __eq__(self, other):
        if not isinstance(other, LinearAlgebraMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):  # pragma: no cover
        raise TypeError("LinearAlgebraMap is not hashable")

    def __str__(self):
        pieces = [
            f"{self.source.basis_names[i]} -> {self.image_of_basis(i)}"
            for i in range(self.source.dim)
        ]
        return "; ".join(pieces)

    def __repr__(self):
        return self.__str__()


def build_T(t, field: Field = None) -> StructureConstAlgebra:
    """The triangular family member T(t); t may be any field element,
    including a function-field element for symbolic checks."""
    if isinstance(t, FieldElement):
        field = t.field
    elif field is None:
        raise ValueError("a field is required when t is not a field element")
    t = field.coerce(t)
    zero, one = field.zero, field.one
    z3 = [zero, zero, zero]
    table = [
        [[one, zero, zero], [zero, one, zero], [zero, zero, one]],
        [[zero, one, zero], [t * t, zero, zero], [zero, zero, t]],
        [[zero, zero, one], [zero, zero, -t], z3],
    ]
    return StructureConstAlgebra(field, table, [one, zero, zero], ("1", "e2", "e3"))


def _self_span_profile(algebra: StructureConstAlgebra, i: int):
    """(alpha, beta) with basis_i^2 = alpha*1 + beta*basis_i, or None."""
    prod = (algebra.basis(i) * algebra.basis(i)).coeffs
    u = algebra.unit
    alpha = None
    for k in range(algebra.dim):
        if k == i or u[k].is_zero():
            continue
        a = prod[k] / u[k]
        if alpha is None:
            alpha = a
        elif alpha != a:
            return None
    if alpha is None:
        return None
    beta = prod[i] - alpha * u[i]
    for k in range(algebra.dim):
        expect = alpha * u[k]
        if k == i:
            expect = expect + beta
        if prod[k] != expect:
            return None
    return alpha, beta


def brute_force_automorphisms(algebra: StructureConstAlgebra) -> list[LinearAlgebraMap]:
    """All unital algebra automorphisms over a finite field.

    When some basis vector equals the unit its image is pinned, so only the
    remaining columns are enumerated.  Per column, candidates failing the
    necessary condition phi(b_i)^2 = phi(b_i^2) are discarded up front
    whenever b_i^2 lies in the span of 1 and b_i; the final morphism and
    invertibility check stays complete.
    """
    field = algebra.field
    q = field.size()
    if q is None:
        raise FieldError("brute force needs a finite field")
    n = algebra.dim
    unit_idx = next(
        (i for i in range(n) if algebra.basis(i) == algebra.one()), None
    )
    free = [i for i in range(n) if i != unit_idx]
    if q ** (n * len(free)) > 10**8:
        raise ValueError("enumeration budget exceeded")
    elems = list(field.elements())
    all_vectors = [
        algebra.element(list(tup)) for tup in itertools.product(elems, repeat=n)
    ]
    candidates = {}
    for i in free:
        prof = _self_span_profile(algebra, i)
        if prof is None:
            candidates[i] = all_vectors
        else:
            alpha, beta = prof
            one = algebra.one()
            candidates[i] = [
                v for v in all_vectors if v * v == alpha * one + beta * v
            ]
    unit_col = list(algebra.unit)
    out = []
    for combo in itertools.product(*(candidates[i] for i in free)):
        col_map = {i: list(v.coeffs) for i, v in zip(free, combo)}
        if unit_idx is not None:
            col_map[unit_idx] = unit_col
        rows = [[col_map[j][i] for j in range(n)] for i in range(n)]
        phi = LinearAlgebraMap(algebra, algebra, Matrix(field, rows))
        if phi.is_algebra_morphism() and phi.is_invertible():
            out.append(phi)
    out.sort(
        key=lambda m: tuple(
            m.matrix[i, j].sort_key() for j in range(n) for i in range(n)
        )
    )
    return out


@dataclass(frozen=True)
class AutPair:
    """Automorphism of T(1) as the pair (b, b'): e2 -> e2 + b e3,
    e3 -> b' e3 with b' nonzero."""

    b: FieldElement
    bp: FieldElement

    def __post_init__(self):
        if self.bp.is_zero():
            raise ValueError("b' must be nonzero")


def compose_pair(p2: AutPair, p1: AutPair) -> AutPair:
    """Composite 'p1 first, then p2': (b2 + b1*b2', b1'*b2')."""
    return AutPair(p2.b + p1.b * p2.bp, p1.bp * p2.bp)


def pair_to_map(algebra: StructureConstAlgebra, pair: AutPair) -> LinearAlgebraMap:
    """The (b, b') automorphism on T(1) (or the matching transported map on
    any T(t) via transport_aut)."""
    field = algebra.field
    one = algebra.one()
    e2 = algebra.basis(1)
    e3 = algebra.basis(2)
    return LinearAlgebraMap.from_images(
        algebra, algebra, [one, e2 + pair.b * e3, pair.bp * e3]
    )


def transport_aut(t, pair: AutPair, algebra: StructureConstAlgebra = None) -> LinearAlgebraMap:
    """The automorphism of T(t), t != 0, matching (b, b') on T(1) through
    the change of basis e2' = t*e2, e3' = e3: e2' -> e2' + t*b*e3',
    e3' -> b'*e3'."""
    field = pair.b.field
    t = field.coerce(t)
    if t.is_zero():
        raise ValueError("transport requires t != 0")
    if algebra is None:
        algebra = build_T(t)
    one = algebra.one()
    e2 = algebra.basis(1)
    e3 = algebra.basis(2)
    return LinearAlgebraMap.from_images(
        algebra, algebra, [one, e2 + (t * pair.b) * e3, pair.bp * e3]
    )


def algebra_from_json(text: str) -> StructureConstAlgebra:
    """Build an algebra from a JSON document of the form

        {"dimension": n, "field": "Fp(5)",
         "table": n x n cells of n constants, "unit": n constants}

    Constants may be integers or rational strings like "3/2".  The usual
    construction checks (unit axiom, associativity) apply.
    """
    doc = json.loads(text)
    for key in ("dimension", "field", "table", "unit"):
        if key not in doc:
            raise ValueError(f"missing key {key!r} in the algebra document")
    field = parse_field_spec(doc["field"])
    n = doc["dimension"]

    def const(v):
        return field.coerce(Fraction(v) if isinstance(v, str) else Fraction(v))

    table = doc["table"]
    if len(table) != n or any(
        len(row) != n or any(len(cell) != n for cell in row) for row in table
    ):
        raise ValueError("table must be n x n cells of n constants")
    rows = [[[const(v) for v in cell] for cell in row] for row in table]
    unit = [const(v) for v in doc["unit"]]
    return StructureConstAlgebra(field, rows, unit)


def limit_map_at_zero(phi: LinearAlgebraMap, param: str = "t") -> Matrix:
    """Coefficientwise limit at param -> 0 of a map over a function field.

    Returns a matrix over the base field when no other symbols remain, else
    over the function field in the remaining symbols; raises ValueError when
    some entry has a pole.
    """
    field = phi.source.field
    if not isinstance(field, FunctionField):
        raise ValueError("limit requires a function-field matrix")
    base = field.base
    rest = tuple(s for s in field.symbols if s != param)
    target: Field = FunctionField(base, rest) if rest else base
    rows = []
    for i in range(phi.matrix.nrows):
        row = []
        for j in range(phi.matrix.ncols):
            entry = phi.matrix[i, j].value
            if entry.is_zero():
                row.append(target.zero)
                continue
            lim = entry.limit_at(param, base.zero)
            if isinstance(lim, Pole):
                raise ValueError(f"entry ({i}, {j}) has a pole at {param} = 0")
            row.append(target.coerce(lim) if rest else lim.as_constant())
        rows.append(row)
    return Matrix(target, rows)
