"""Exact scalar arithmetic: rationals, prime fields, and small extension fields.

A field object is a descriptor; two descriptors built from the same data
compare equal, so elements of independently constructed copies of F_7
interoperate.  Elements are immutable wrappers around a canonical raw value
(a reduced Fraction, a residue in [0, p), or a reduced coefficient tuple for
extensions), which makes structural equality agree with mathematical
equality.

Supported extensions are quotients base[Y]/(m(Y)) with m monic of degree 2
or 3.  Over a finite base, irreducibility is certified by the absence of
roots (sufficient up to degree 3).  Over the rationals only the cyclotomic
modulus Y^2 + Y + 1 is accepted; anything else is rejected.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class FieldError(ValueError):
    """Invalid field construction, or arithmetic across different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldElement:
    """Immutable scalar; arithmetic delegates to the owning field."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    def _coerced(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields: {self.field} and {other.field}")
            return other
        try:
            return self.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(o.value, self.value))

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return FieldElement(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.field._eq(self.value, o.value)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.field, self.field._hash_key(self.value)))

    def sort_key(self):
        """Deterministic ordering key within one field (not for function fields)."""
        return self.field._sort_key(self.value)

    def __str__(self):
        return self.field._fmt(self.value)

    def __repr__(self):
        return self.field._fmt(self.value)


class Field:
    """Base descriptor. Subclasses implement the raw-value protocol."""

    def coerce(self, x) -> FieldElement:
        raise NotImplementedError

    @property
    def zero(self) -> FieldElement:
        return self.coerce(0)

    @property
    def one(self) -> FieldElement:
        return self.coerce(1)

    def characteristic(self) -> int:
        raise NotImplementedError

    def size(self):
        """Number of elements, or None when infinite."""
        return None

    def elements(self):
        """Iterate all elements in a fixed canonical order (finite fields only)."""
        raise FieldError(f"{self} is not finite")

    # raw-value protocol
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _eq(self, a, b) -> bool:
        raise NotImplementedError

    def _hash_key(self, a):
        return a

    def _sort_key(self, a):
        raise NotImplementedError

    def _fmt(self, a) -> str:
        return str(a)


class RationalField(Field):
    """The rational numbers, with Fraction raw values."""

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError(f"mixed fields: {self} and {x.field}")
            return x
        if isinstance(x, (int, Fraction)):
            return FieldElement(self, Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def characteristic(self):
        return 0

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _eq(self, a, b):
        return a == b

    def _sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """F_p for a prime p; raw values are residues in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldError(f"mixed fields: {self} and {x.field}")
            return x
        if isinstance(x, int):
            return FieldElement(self, x % self.p)
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(f"{x} has no image in {self}")
            return FieldElement(self, num * pow(den, -1, self.p) % self.p)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def characteristic(self):
        return self.p

    def size(self):
        return self.p

    def elements(self):
        for v in range(self.p):
            yield FieldElement(self, v)

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _eq(self, a, b):
        return a == b

    def _sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


# -- dense polynomial helpers on lists of raw base values (used internally
#    by ExtensionField; coefficient index = degree) --


def _ptrim(cs, base):
    while cs and base._is_zero(cs[-1]):
        cs.pop()
    return cs


def _padd(a, b, base):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else None
        y = b[i] if i < len(b) else None
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(base._add(x, y))
    return _ptrim(out, base)


def _pmul(a, b, base):
    if not a or not b:
        return []
    zero = base.coerce(0).value
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = base._add(out[i + j], base._mul(x, y))
    return _ptrim(out, base)


def _pdivmod(a, b, base):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [base.coerce(0).value] * max(len(a) - len(b) + 1, 0)
    inv_lead = base._inv(b[-1])
    while len(rem) >= len(b):
        c = base._mul(rem[-1], inv_lead)
        k = len(rem) - len(b)
        quo[k] = c
        for i, bc in enumerate(b):
            rem[k + i] = base._sub(rem[k + i], base._mul(c, bc))
        _ptrim(rem, base)
        if not rem:
            break
    return _ptrim(quo, base), rem


def _pxgcd(a, b, base):
    """Return (g, u, v) with u*a + v*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [base.coerce(1).value], []
    t0, t1 = [], [base.coerce(1).value]
    while r1:
        q, r = _pdivmod(r0, r1, base)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, [base._neg(c) for c in _pmul(q, s1, base)], base)
        t0, t1 = t1, _padd(t0, [base._neg(c) for c in _pmul(q, t1, base)], base)
    return r0, s0, t0


class ExtensionField(Field):
    """base[Y]/(m(Y)) with m monic irreducible of degree 2 or 3.

    Raw values are tuples of base raw values of length deg(m), lowest
    degree first.
    """

    def __init__(self, base: Field, modulus, generator_name: str = "Y"):
        self.base = base
        coeffs = [base.coerce(c).value for c in modulus]
        while coeffs and base._is_zero(coeffs[-1]):
            coeffs.pop()
        deg = len(coeffs) - 1
        if deg < 2:
            raise FieldError("extension modulus must have degree at least 2")
        if not base._eq(coeffs[-1], base.coerce(1).value):
            raise FieldError("extension modulus must be monic")
        self.modulus = tuple(coeffs)
        self.degree = deg
        self.generator_name = generator_name
        self._check_irreducible()

    def _check_irreducible(self):
        if self.base.size() is not None:
            if self.degree > 3:
                raise FieldError("extensions of degree > 3 are not supported")
            for x in self.base.elements():
                acc = self.base.coerce(0).value
                for c in reversed(self.modulus):
                    acc = self.base._add(self.base._mul(acc, x.value), c)
                if self.base._is_zero(acc):
                    raise FieldError(
                        f"modulus has root {x} over {self.base}: not irreducible"
                    )
            return
        one = Fraction(1)
        if isinstance(self.base, RationalField) and self.modulus == (one, one, one):
            return
        raise FieldError(
            "over the rationals only the modulus Y^2 + Y + 1 is supported"
        )

    def generator(self) -> FieldElement:
        zero = self.base.coerce(0).value
        one = self.base.coerce(1).value
        cs = [zero] * self.degree
        cs[1] = one
        return FieldElement(self, tuple(cs))

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            if x.field == self.base:
                return self._from_list([x.value])
            raise FieldError(f"mixed fields: {self} and {x.field}")
        if isinstance(x, (int, Fraction)):
            return self._from_list([self.base.coerce(x).value])
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def _from_list(self, cs):
        cs = list(cs)
        if len(cs) >= len(self.modulus):
            _, cs = _pdivmod(cs, list(self.modulus), self.base)
        zero = self.base.coerce(0).value
        cs = cs + [zero] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs[: self.degree]))

    def characteristic(self):
        return self.base.characteristic()

    def size(self):
        b = self.base.size()
        return None if b is None else b**self.degree

    def elements(self):
        base_vals = [e.value for e in self.base.elements()]
        for tup in itertools.product(base_vals, repeat=self.degree):
            yield FieldElement(self, tup)

    def _trimmed(self, a):
        cs = list(a)
        return _ptrim(cs, self.base)

    def _add(self, a, b):
        return self._from_list(_padd(self._trimmed(a), self._trimmed(b), self.base)).value

    def _sub(self, a, b):
        nb = [self.base._neg(c) for c in b]
        return self._add(a, tuple(nb))

    def _mul(self, a, b):
        prod = _pmul(self._trimmed(a), self._trimmed(b), self.base)
        return self._from_list(prod).value

    def _neg(self, a):
        return tuple(self.base._neg(c) for c in a)

    def _inv(self, a):
        g, u, _ = _pxgcd(self._trimmed(a), list(self.modulus), self.base)
        if len(g) != 1:
            raise FieldError("modulus is not irreducible")  # unreachable after check
        scale = self.base._inv(g[0])
        return self._from_list([self.base._mul(c, scale) for c in u]).value

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    def _eq(self, a, b):
        return all(self.base._eq(x, y) for x, y in zip(a, b))

    def _hash_key(self, a):
        return tuple(self.base._hash_key(c) for c in a)

    def _sort_key(self, a):
        return tuple(self.base._sort_key(c) for c in a)

    def _fmt(self, a):
        name = self.generator_name
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if self.base._is_zero(c):
                continue
            cs = self.base._fmt(c)
            if i == 0:
                parts.append(cs)
            else:
                head = name if i == 1 else f"{name}^{i}"
                if cs == "1":
                    parts.append(head)
                elif cs == "-1":
                    parts.append(f"-{head}")
                else:
                    parts.append(f"{cs}*{head}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def __repr__(self):
        mon = []
        for i in range(self.degree, -1, -1):
            c = self.modulus[i] if i < len(self.modulus) else None
            if c is None or self.base._is_zero(c):
                continue
            s = self.base._fmt(c)
            head = "" if i == 0 else (self.generator_name if i == 1 else f"{self.generator_name}^{i}")
            mon.append(head if (s == "1" and head) else (s if not head else f"{s}*{head}"))
        return f"{self.base}[{self.generator_name}]/({' + '.join(mon)})"


QQ = RationalField()


def GF(p: int, k: int = 1, generator_name: str = "Y") -> Field:
    """F_p for k = 1, else F_{p^k} via the lexicographically smallest
    monic irreducible modulus of degree k over F_p (k in {2, 3})."""
    base = PrimeField(p)
    if k == 1:
        return base
    if k not in (2, 3):
        raise FieldError("only extension degrees 2 and 3 are supported")
    for tail in itertools.product(range(p), repeat=k):
        coeffs = list(tail) + [1]
        try:
            return ExtensionField(base, coeffs, generator_name)
        except FieldError:
            continue
    raise FieldError(f"no irreducible modulus of degree {k} over F_{p}")  # unreachable


def rationals_with_cube_root(generator_name: str = "zeta3") -> ExtensionField:
    """Q extended by a primitive cube root of unity: Q[z]/(z^2 + z + 1)."""
    return ExtensionField(QQ, [1, 1, 1], generator_name)


def primitive_cube_root(field: Field) -> FieldElement | None:
    """A deterministic primitive cube root of unity in `field`, if one exists.

    Finite fields are searched exhaustively in canonical element order; for
    the supported rational extension the generator itself is tested.
    """
    one = field.one
    if field.size() is not None:
        for x in field.elements():
            if x != one and x * x * x == one:
                return x
        return None
    if isinstance(field, ExtensionField):
        g = field.generator()
        if g != one and g * g * g == one:
            return g
        return None
    return None


def parse_field_spec(spec: str) -> Field:
    """Parse the CLI field mini-syntax: Q, Fp(7), F(2,2), Qzeta3."""
    s = spec.strip()
    if s == "Q":
        return QQ
    if s == "Qzeta3":
        return rationals_with_cube_root()
    if s.startswith("Fp(") and s.endswith(")"):
        try:
            p = int(s[3:-1])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    if s.startswith("F(") and s.endswith(")"):
        body = s[2:-1].split(",")
        if len(body) != 2:
            raise FieldError(f"bad field spec {spec!r}")
        try:
            p, k = int(body[0]), int(body[1])
        except ValueError:
            raise FieldError(f"bad field spec {spec!r}") from None
        return GF(p, k)
    raise FieldError(f"unknown field spec {spec!r} (expected Q, Fp(p), F(p,k), Qzeta3)")
