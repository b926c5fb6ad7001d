"""Quotient algebras k[X]/(f): arithmetic, substitution maps, idempotent
bases, Vandermonde transitions, and the per-multiplicity decomposition of a
split modulus with its automorphism-group description.

A substitution map is determined by the image polynomial of X.  Composition
is polynomial composition of the images: compose(outer, inner) has image
outer_image(inner_image(X)) mod f, so it reproduces the classical closed
composition law on X -> aX + bX^2 maps coefficient for coefficient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .fields import Field, FieldError
from .linalg import Matrix
from .poly import UniPoly


class MonogenicAlgebra:
    """k[X]/(f) for a monic modulus f of degree >= 1."""

    def __init__(self, field: Field, modulus: UniPoly):
        if modulus.field != field:
            raise FieldError("modulus is over a different field")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree at least 1")
        if not modulus.is_monic():
            raise ValueError("modulus must be monic")
        self.field = field
        self.modulus = modulus

    @classmethod
    def from_roots(cls, field, roots):
        return cls(field, UniPoly.from_roots(field, roots))

    @property
    def dim(self) -> int:
        return self.modulus.degree

    def element(self, coeffs) -> "AlgebraElement":
        if isinstance(coeffs, UniPoly):
            return self.from_poly(coeffs)
        return self.from_poly(UniPoly(self.field, coeffs))

    def from_poly(self, p: UniPoly) -> "AlgebraElement":
        p = p % self.modulus
        cs = [p.coeff(i) for i in range(self.dim)]
        return AlgebraElement(self, cs)

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def gen(self):
        """The class of X."""
        return self.element([0, 1])

    def __eq__(self, other):
        if not isinstance(other, MonogenicAlgebra):
            return NotImplemented
        return self.field == other.field and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.field, self.modulus))

    def __repr__(self):
        return f"{self.field}[X]/({self.modulus})"


class AlgebraElement:
    """Element in the basis 1, X, ..., X^(n-1) of its algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: MonogenicAlgebra, coeffs):
        cs = [algebra.field.coerce(c) for c in coeffs]
        if len(cs) != algebra.dim:
            raise ValueError("coefficient vector length must equal the dimension")
        self.algebra = algebra
        self.coeffs = tuple(cs)

    def _check(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        try:
            c = self.algebra.field.coerce(other)
        except TypeError:
            return None
        return self.algebra.element([c])

    def as_poly(self) -> UniPoly:
        return UniPoly(self.algebra.field, self.coeffs)

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.algebra, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.algebra, [a - b for a, b in zip(self.coeffs, o.coeffs)]
        )

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return self.algebra.from_poly(self.as_poly() * other.as_poly())
        try:
            c = self.algebra.field.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement(self.algebra, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        acc = self.algebra.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(
            (self.algebra, tuple(self.algebra.field._hash_key(c.value) for c in self.coeffs))
        )

    def __str__(self):
        return self.as_poly().to_str(ascending=True)

    def __repr__(self):
        return self.__str__()


class AlgebraHom:
    """Unital algebra map source -> target sending X to `image`.

    Whether the assignment actually is a homomorphism is a property
    (is_homomorphism), not a construction invariant, because testing the
    failure case is part of the point.
    """

    def __init__(self, source: MonogenicAlgebra, target: MonogenicAlgebra, image: UniPoly):
        if source.field != target.field:
            raise FieldError("source and target over different fields")
        if image.field != source.field:
            raise FieldError("image polynomial over a different field")
        self.source = source
        self.target = target
        self.image = image % target.modulus

    def is_homomorphism(self) -> bool:
        """True iff f_source(image(X)) == 0 in the target."""
        reduced = self.source.modulus.compose_mod(self.image, self.target.modulus)
        return reduced.is_zero()

    def apply(self, u: AlgebraElement) -> AlgebraElement:
        if u.algebra != self.source:
            raise ValueError("element of a different algebra")
        return self.target.from_poly(
            u.as_poly().compose_mod(self.image, self.target.modulus)
        )

    def matrix(self) -> Matrix:
        """Induced linear map, columns = coordinates of images of X^k."""
        field = self.source.field
        n = self.source.dim
        if self.target.dim != n:
            raise ValueError("matrix of a map between different dimensions")
        cols = []
        acc = UniPoly.constant(field, 1)
        for _ in range(n):
            cols.append([acc.coeff(i) for i in range(n)])
            acc = (acc * self.image) % self.target.modulus
        return Matrix(field, list(map(list, zip(*cols))))

    def is_isomorphism(self) -> bool:
        return (
            self.source.dim == self.target.dim
            and self.is_homomorphism()
            and self.matrix().is_invertible()
        )

    def inverse_image(self) -> UniPoly:
        """Image of X under the inverse map (target -> source)."""
        if not self.is_isomorphism():
            raise ValueError("map is not an isomorphism")
        x_coords = list(self.target.gen().coeffs)
        sol = self.matrix().solve(x_coords)
        return UniPoly(self.source.field, sol)

    def inverse_hom(self) -> "AlgebraHom":
        return AlgebraHom(self.target, self.source, self.inverse_image())


class SubstitutionMap(AlgebraHom):
    """Endomorphism of one algebra, given by the image polynomial of X."""

    def __init__(self, algebra: MonogenicAlgebra, image):
        if not isinstance(image, UniPoly):
            image = UniPoly(algebra.field, image)
        super().__init__(algebra, algebra, image)

    @property
    def algebra(self):
        return self.source

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, UniPoly.x(algebra.field))

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        return self.apply(u)

    def is_endomorphism(self) -> bool:
        return self.is_homomorphism()

    def is_automorphism(self) -> bool:
        return self.is_endomorphism() and self.matrix().is_invertible()

    def compose(self, inner: "SubstitutionMap") -> "SubstitutionMap":
        """Map with image self.image(inner.image(X)) mod f."""
        if inner.algebra != self.algebra:
            raise ValueError("maps on different algebras")
        return SubstitutionMap(
            self.algebra, self.image.compose_mod(inner.image, self.algebra.modulus)
        )

    def inverse(self) -> "SubstitutionMap":
        if not self.is_automorphism():
            raise ValueError("map is not an automorphism")
        return SubstitutionMap(self.algebra, self.inverse_image())

    def is_identity(self) -> bool:
        return self.image == UniPoly.x(self.algebra.field) % self.algebra.modulus

    def order(self, max_order: int = 64):
        """Smallest k <= max_order with the k-fold composite equal to the
        identity, or None."""
        if not self.is_automorphism():
            raise ValueError("order of a non-automorphism")
        acc = self
        for k in range(1, max_order + 1):
            if acc.is_identity():
                return k
            acc = self.compose(acc)
        return None

    def __eq__(self, other):
        if not isinstance(other, SubstitutionMap):
            return NotImplemented
        return self.algebra == other.algebra and self.image == other.image

    def __hash__(self):
        return hash((self.algebra, self.image))

    def __str__(self):
        return f"X -> {self.image.to_str(ascending=True)}"

    def __repr__(self):
        return self.__str__()


def idempotents(algebra: MonogenicAlgebra, roots) -> list[AlgebraElement]:
    """Lagrange idempotents prod_{j != i} (X - z_j)/(z_i - z_j) for a
    multiplicity-free split modulus with the given roots."""
    field = algebra.field
    zs = [field.coerce(z) for z in roots]
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if zs[i] == zs[j]:
                raise ValueError("roots must be pairwise distinct")
    if UniPoly.from_roots(field, zs) != algebra.modulus:
        raise ValueError("roots do not multiply out to the modulus")
    out = []
    for i, zi in enumerate(zs):
        num = UniPoly.constant(field, 1)
        den = field.one
        for j, zj in enumerate(zs):
            if j == i:
                continue
            num = num * UniPoly(field, [-zj, field.one])
            den = den * (zi - zj)
        out.append(algebra.from_poly(num * den.inverse()))
    return out


def vandermonde_pair(field: Field, roots) -> tuple[Matrix, Matrix]:
    """Vandermonde matrix with rows (1, z_i, ..., z_i^(n-1)) and its exact
    inverse; raises ValueError on repeated roots."""
    zs = [field.coerce(z) for z in roots]
    n = len(zs)
    rows = []
    for z in zs:
        row = [field.one]
        for _ in range(n - 1):
            row.append(row[-1] * z)
        rows.append(row)
    m = Matrix(field, rows)
    try:
        m_inv = m.inverse()
    except ValueError:
        raise ValueError("repeated roots make the Vandermonde matrix singular") from None
    return m, m_inv


@dataclass(frozen=True)
class FpaDecomposition:
    """Multiplicity profile of a split modulus: ((m_1, r_1), ..., (m_s, r_s))
    with distinct multiplicities m_i, each occurring for r_i roots."""

    parts: tuple
    degree: int

    def __str__(self):
        body = ", ".join(f"(m={m}, count={r})" for m, r in self.parts)
        return f"{{{body}}}"


def fpa_decompose(root_multiplicities) -> FpaDecomposition:
    """Group explicit (root, multiplicity) data by multiplicity."""
    seen = []
    counts: dict[int, int] = {}
    total = 0
    for root, mult in root_multiplicities:
        if mult < 1:
            raise ValueError("multiplicities must be >= 1")
        for other in seen:
            if other == root:
                raise ValueError("repeated root in multiplicity data")
        seen.append(root)
        counts[mult] = counts.get(mult, 0) + 1
        total += mult
    parts = tuple(sorted(counts.items()))
    return FpaDecomposition(parts=parts, degree=total)


@dataclass(frozen=True)
class AutFactor:
    multiplicity: int
    count: int
    connected: str
    connected_dim: int


@dataclass(frozen=True)
class AutDescription:
    """Automorphism group of a product of one-root local algebras: a
    permutation part S_{r_1} x ... x S_{r_s} and, per local factor, the
    connected group of that factor."""

    factors: tuple
    permutation_part: str
    finite_order: int | None

    def __str__(self):
        lines = [f"permutation part: {self.permutation_part}"]
        for f in self.factors:
            lines.append(
                f"multiplicity {f.multiplicity} (x{f.count}): {f.connected}"
            )
        if self.finite_order is not None:
            lines.append(f"finite group of order {self.finite_order}")
        return "\n".join(lines)


def _connected_description(m: int) -> tuple[str, int]:
    if m == 1:
        return "trivial", 0
    if m == 2:
        return "multiplicative group (X -> bX, b != 0)", 1
    times = f"{m - 2} time" + ("s" if m != 3 else "")
    return (
        f"multiplicative group extended {times} by the additive group",
        m - 1,
    )


def aut_description(dec: FpaDecomposition) -> AutDescription:
    factors = []
    finite = True
    order = 1
    for m, r in dec.parts:
        label, dim = _connected_description(m)
        factors.append(AutFactor(m, r, label, dim))
        order *= math.factorial(r)
        if m > 1:
            finite = False
    perm = " x ".join(f"S{r}" for _, r in dec.parts) or "S0"
    return AutDescription(
        factors=tuple(factors),
        permutation_part=perm,
        finite_order=order if finite else None,
    )


def brute_force_automorphisms(algebra: MonogenicAlgebra) -> list[SubstitutionMap]:
    """All substitution automorphisms of a quotient algebra over a finite
    field, by exhaustive enumeration of image polynomials of degree < n."""
    field = algebra.field
    q = field.size()
    if q is None:
        raise FieldError("brute force needs a finite field")
    n = algebra.dim
    if q**n > 10**8:
        raise ValueError("enumeration budget exceeded")
    elems = list(field.elements())
    out = []
    for coeffs in itertools.product(elems, repeat=n):
        g = SubstitutionMap(algebra, UniPoly(field, list(coeffs)))
        if g.is_automorphism():
            out.append(g)
    out.sort(key=lambda g: tuple(g.image.coeff(i).sort_key() for i in range(n)))
    return out


def split_roots(algebra: MonogenicAlgebra):
    """Roots with multiplicities of the modulus over a finite field, found by
    exhaustive root extraction; None when the modulus does not split."""
    field = algebra.field
    if field.size() is None:
        raise FieldError("root extraction needs a finite field")
    rem = algebra.modulus
    found = []
    for z in field.elements():
        mult = 0
        while rem.degree >= 1 and rem(z).is_zero():
            rem = rem // UniPoly(field, [-z, field.one])
            mult += 1
        if mult:
            found.append((z, mult))
    if rem.degree > 0:
        return None
    return found
