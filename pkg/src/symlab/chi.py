"""The automorphism group of k[X]/(X^3) in closed form.

Elements are the maps chi(a, b): X -> aX + bX^2 with a != 0.  Composition
follows chi(a,b) o chi(a',b') = chi(a*a', a*b' + a'^2*b), which matches
substitution composition of the image polynomials, and powers have the
closed form a^n X + (a^(n-1) + ... + a^(2n-2)) b X^2.

The classification of order-2 and order-3 elements depends only on the
characteristic and on whether the field has a primitive cube root of unity;
order_class selects the right case and, for finite fields, materializes the
element lists so they can be checked against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, FieldElement, FieldError, primitive_cube_root
from .poly import UniPoly
from .quotient import MonogenicAlgebra, SubstitutionMap


@dataclass(frozen=True)
class Chi:
    """X -> aX + bX^2 with a != 0."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.field != self.b.field:
            raise FieldError("coefficients from different fields")
        if self.a.is_zero():
            raise ValueError("a must be nonzero")

    @property
    def field(self):
        return self.a.field

    @classmethod
    def identity(cls, field: Field) -> "Chi":
        return cls(field.one, field.zero)

    def compose(self, other: "Chi") -> "Chi":
        """self o other, i.e. substitute other's image into self's image."""
        if other.field != self.field:
            raise FieldError("maps over different fields")
        a, b = self.a, self.b
        ap, bp = other.a, other.b
        return Chi(a * ap, a * bp + ap * ap * b)

    def power(self, n: int) -> "Chi":
        """Closed-form n-th power, n >= 1."""
        if n < 1:
            raise ValueError("n must be >= 1")
        a, b = self.a, self.b
        s = self.field.zero
        acc = a ** (n - 1)
        for _ in range(n - 1, 2 * n - 1):
            s = s + acc
            acc = acc * a
        return Chi(a**n, s * b)

    def inverse(self) -> "Chi":
        ai = self.a.inverse()
        return Chi(ai, -(ai**3) * self.b)

    def is_identity(self) -> bool:
        return self.a == self.field.one and self.b.is_zero()

    def order(self, max_order: int = 100):
        """Smallest k with self^k = id (by iterated composition), or None."""
        acc = self
        for k in range(1, max_order + 1):
            if acc.is_identity():
                return k
            acc = acc.compose(self)
        return None

    def as_substitution(self) -> SubstitutionMap:
        """The same map on field[X]/(X^3)."""
        field = self.field
        algebra = MonogenicAlgebra(field, UniPoly(field, [0, 0, 0, 1]))
        return SubstitutionMap(algebra, [field.zero, self.a, self.b])

    def __str__(self):
        return f"chi({self.a}, {self.b})"


def chi_compose(f: Chi, g: Chi) -> Chi:
    return f.compose(g)


def chi_power(f: Chi, n: int) -> Chi:
    return f.power(n)


def all_chis(field: Field):
    """All group elements over a finite field, in canonical order."""
    if field.size() is None:
        raise FieldError("enumeration needs a finite field")
    for a in field.elements():
        if a.is_zero():
            continue
        for b in field.elements():
            yield Chi(a, b)


@dataclass(frozen=True)
class OrderClassReport:
    """Case analysis of the order-2 and order-3 elements over one field."""

    field: Field
    case_label: str
    order2_description: str
    order3_description: str
    order2_elements: tuple | None
    order3_elements: tuple | None
    notes: tuple


def order_class(field: Field) -> OrderClassReport:
    """Classify the elements of exact order 2 and 3 (identity excluded)."""
    char = field.characteristic()
    zeta = primitive_cube_root(field)
    notes = []

    if char == 2:
        order2 = "all chi(1, b) with b != 0"
        if zeta is None:
            label = "char2-no-zeta3"
            order3 = "empty"
        else:
            label = "char2-with-zeta3"
            order3 = "all chi(a, b) with a in {zeta3, zeta3^2}, b arbitrary"
    elif char == 3:
        # A primitive cube root cannot exist in characteristic 3, where
        # X^3 - 1 = (X - 1)^3; the with-zeta3 case is vacuous.
        label = "char3-no-zeta3"
        order2 = "all chi(-1, b), b arbitrary"
        order3 = "all chi(1, b) with b != 0"
        notes.append(
            "characteristic 3 admits no primitive cube root of unity; "
            "the char3-with-zeta3 case is unreachable"
        )
    else:
        order2 = "all chi(-1, b), b arbitrary"
        if zeta is None:
            label = "char-other-no-zeta3"
            order3 = "empty"
        else:
            label = "char-other-with-zeta3"
            order3 = "all chi(a, b) with a in {zeta3, zeta3^2}, b arbitrary"

    order2_elements = order3_elements = None
    if field.size() is not None:
        g2 = []
        g3 = []
        one = field.one
        for b in field.elements():
            if char == 2:
                if not b.is_zero():
                    g2.append(Chi(one, b))
            else:
                g2.append(Chi(-one, b))
            if char == 3:
                if not b.is_zero():
                    g3.append(Chi(one, b))
            elif zeta is not None:
                g3.append(Chi(zeta, b))
                g3.append(Chi(zeta * zeta, b))
        key = lambda c: (c.a.sort_key(), c.b.sort_key())
        order2_elements = tuple(sorted(g2, key=key))
        order3_elements = tuple(sorted(g3, key=key))

    return OrderClassReport(
        field=field,
        case_label=label,
        order2_description=order2,
        order3_description=order3,
        order2_elements=order2_elements,
        order3_elements=order3_elements,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class NoS3Report:
    """Exhaustive check that no two distinct order-2 elements multiply to an
    order-3 element.  When it holds, S3 cannot embed in the group; it fails
    exactly in characteristic 3 (where chi(1,b) has order 3, and the group
    over F_3 is S3 itself), in which case a witness pair is returned."""

    field: Field
    ok: bool
    pairs_checked: int
    counterexample: tuple | None


def no_s3_check(field: Field) -> NoS3Report:
    if field.size() is None or field.size() > 49:
        raise FieldError("exhaustive check requires a finite field of size <= 49")
    involutions = [c for c in all_chis(field) if c.order(4) == 2]
    pairs = 0
    for u in involutions:
        for v in involutions:
            if u == v:
                continue
            pairs += 1
            if u.compose(v).order(6) == 3:
                return NoS3Report(field, False, pairs, (u, v))
    return NoS3Report(field, True, pairs, None)
