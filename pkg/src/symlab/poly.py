"""Exact polynomial and rational-function arithmetic.

Univariate polynomials live over any fields.Field (including the function
fields defined at the bottom of this module).  Multivariate polynomials
carry a fixed, ordered symbol tuple; rational functions are unreduced
numerator/denominator pairs whose equality is decided by cross
multiplication, so no multivariate gcd is ever needed.  Construction does
strip shared monomial content, shared integer content over Q, and makes the
denominator's leading coefficient canonical, which keeps printed output
stable and fraction growth tame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, FieldElement, FieldError, RationalField


class UniPoly:
    """Dense univariate polynomial over a field, lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, [0] * k + [c])

    @classmethod
    def from_roots(cls, field, roots):
        p = cls.constant(field, 1)
        for r in roots:
            p = p * cls(field, [-field.coerce(r), field.one])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def _same_field(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldError("polynomials over different fields")
            return other
        try:
            return UniPoly.constant(self.field, self.field.coerce(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._same_field(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(
            self.field, [self.coeff(i) + o.coeff(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._same_field(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(
            self.field, [self.coeff(i) - o.coeff(i) for i in range(n)]
        )

    def __rsub__(self, other):
        o = self._same_field(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, (int, Fraction)):
            c = self.field.coerce(other)
            return UniPoly(self.field, [a * c for a in self.coeffs])
        o = self._same_field(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = UniPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __divmod__(self, other):
        o = self._same_field(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [self.field.zero] * max(len(rem) - len(o.coeffs) + 1, 0)
        inv_lead = o.coeffs[-1].inverse()
        while len(rem) >= len(o.coeffs):
            c = rem[-1] * inv_lead
            k = len(rem) - len(o.coeffs)
            quo[k] = c
            for i, bc in enumerate(o.coeffs):
                rem[k + i] = rem[k + i] - c * bc
            while rem and rem[-1].is_zero():
                rem.pop()
            if not rem:
                break
        return UniPoly(self.field, quo), UniPoly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_mod(self, g: "UniPoly", modulus: "UniPoly") -> "UniPoly":
        """self(g(X)) reduced mod `modulus` (Horner, reducing each step)."""
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = (acc * g + UniPoly.constant(self.field, c)) % modulus
        return acc

    def __eq__(self, other):
        o = self._same_field(other) if not isinstance(other, UniPoly) else other
        if o is None or not isinstance(o, UniPoly):
            return NotImplemented
        if o.field != self.field:
            return False
        return len(self.coeffs) == len(o.coeffs) and all(
            a == b for a, b in zip(self.coeffs, o.coeffs)
        )

    def __hash__(self):
        return hash((self.field, tuple(self.field._hash_key(c.value) for c in self.coeffs)))

    def to_str(self, var: str = "X", ascending: bool = False) -> str:
        if self.is_zero():
            return "0"
        parts = []
        rng = range(len(self.coeffs)) if ascending else range(len(self.coeffs) - 1, -1, -1)
        for i in rng:
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            wrap = any(ch in cs for ch in "+/ ") or ("-" in cs[1:])
            if wrap:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                head = var if i == 1 else f"{var}^{i}"
                if cs == "1":
                    parts.append(head)
                elif cs == "-1":
                    parts.append(f"-{head}")
                else:
                    parts.append(f"{cs}*{head}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return self.to_str()


class MultiPoly:
    """Multivariate polynomial over a field in a fixed ordered symbol tuple.

    Terms map exponent tuples to nonzero coefficients; no zero coefficient
    is ever stored.
    """

    __slots__ = ("field", "symbols", "terms")

    def __init__(self, field: Field, symbols, terms):
        self.field = field
        self.symbols = tuple(symbols)
        clean = {}
        for exps, c in terms.items():
            c = field.coerce(c)
            if len(exps) != len(self.symbols):
                raise ValueError("exponent vector does not match symbol list")
            if not c.is_zero():
                e = tuple(exps)
                if e in clean:
                    s = clean[e] + c
                    if s.is_zero():
                        del clean[e]
                    else:
                        clean[e] = s
                else:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, symbols):
        return cls(field, symbols, {})

    @classmethod
    def constant(cls, field, symbols, c):
        c = field.coerce(c)
        symbols = tuple(symbols)
        if c.is_zero():
            return cls(field, symbols, {})
        return cls(field, symbols, {(0,) * len(symbols): c})

    @classmethod
    def symbol(cls, field, symbols, name):
        symbols = tuple(symbols)
        if name not in symbols:
            raise ValueError(f"unknown symbol {name!r} (have {symbols})")
        e = [0] * len(symbols)
        e[symbols.index(name)] = 1
        return cls(field, symbols, {tuple(e): field.one})

    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.field != self.field or other.symbols != self.symbols:
                raise ValueError("polynomials in different contexts")
            return other
        try:
            return MultiPoly.constant(self.field, self.symbols, other)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly(self.field, self.symbols, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.field, self.symbols, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            c = self.field.coerce(other)
            if c.is_zero():
                return MultiPoly.zero(self.field, self.symbols)
            return MultiPoly(
                self.field, self.symbols, {e: k * c for e, k in self.terms.items()}
            )
        o = self._check(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    s = out[e] + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not c.is_zero():
                    out[e] = c
        return MultiPoly(self.field, self.symbols, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = MultiPoly.constant(self.field, self.symbols, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):  # pragma: no cover - not used as dict keys
        raise TypeError("MultiPoly is not hashable")

    def total_degree(self) -> int:
        if self.is_zero():
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def _idx(self, name):
        if name not in self.symbols:
            raise ValueError(f"unknown symbol {name!r} (have {self.symbols})")
        return self.symbols.index(name)

    def degree_in(self, name) -> int:
        i = self._idx(name)
        if self.is_zero():
            raise ValueError("degree of the zero polynomial")
        return max(e[i] for e in self.terms)

    def order_in(self, name) -> int:
        """Lowest exponent of `name` across nonzero terms."""
        i = self._idx(name)
        if self.is_zero():
            raise ValueError("the zero polynomial has no order")
        return min(e[i] for e in self.terms)

    def coeff_of_power(self, name, k: int) -> "MultiPoly":
        """Coefficient of name^k, as a polynomial in the remaining symbols."""
        i = self._idx(name)
        rest = self.symbols[:i] + self.symbols[i + 1 :]
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + e[i + 1 :]] = c
        return MultiPoly(self.field, rest, out)

    def substitute(self, name, value) -> "MultiPoly":
        """Evaluate `name` at a field element; result drops that symbol."""
        i = self._idx(name)
        value = self.field.coerce(value)
        rest = self.symbols[:i] + self.symbols[i + 1 :]
        out = MultiPoly.zero(self.field, rest)
        powers = {0: self.field.one}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value**k
            out = out + MultiPoly(self.field, rest, {e[:i] + e[i + 1 :]: c * powers[k]})
        return out

    def shift(self, name, value) -> "MultiPoly":
        """Substitute name -> name + value, keeping the symbol list."""
        i = self._idx(name)
        value = self.field.coerce(value)
        if value.is_zero():
            return self
        out = MultiPoly.zero(self.field, self.symbols)
        for e, c in self.terms.items():
            k = e[i]
            # binomial expansion of (name + value)^k
            for j in range(k + 1):
                coef = c * self.field.coerce(math.comb(k, j)) * value ** (k - j)
                if coef.is_zero():
                    continue
                ne = list(e)
                ne[i] = j
                out = out + MultiPoly(self.field, self.symbols, {tuple(ne): coef})
        return out

    def eval_all(self, values: dict) -> FieldElement:
        """Evaluate at a full assignment of symbols to field elements."""
        missing = [s for s in self.symbols if s not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        acc = self.field.zero
        for e, c in self.terms.items():
            term = c
            for i, s in enumerate(self.symbols):
                if e[i]:
                    term = term * self.field.coerce(values[s]) ** e[i]
            acc = acc + term
        return acc

    def as_constant(self) -> FieldElement:
        if self.is_zero():
            return self.field.zero
        if len(self.terms) == 1:
            e, c = next(iter(self.terms.items()))
            if all(x == 0 for x in e):
                return c
        raise ValueError("polynomial is not constant")

    def is_constant(self) -> bool:
        return self.is_zero() or (
            len(self.terms) == 1 and all(x == 0 for x in next(iter(self.terms)))
        )

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            mon = "*".join(
                (s if k == 1 else f"{s}^{k}")
                for s, k in zip(self.symbols, e)
                if k > 0
            )
            cs = str(c)
            wrap = any(ch in cs for ch in "+/ ") or ("-" in cs[1:])
            if wrap:
                cs = f"({cs})"
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append(f"-{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return self.__str__()


@dataclass(frozen=True)
class Pole:
    """Marker returned by limits that do not exist; order >= 1."""

    order: int


def _poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a * a.coeffs[-1].inverse()


def _reduce_univariate(num: MultiPoly, den: MultiPoly):
    """Cancel the univariate gcd when the context has a single symbol."""
    field = num.field
    sym = num.symbols[0]
    a = UniPoly(field, [num.terms.get((k,), field.zero) for k in range(num.degree_in(sym) + 1)])
    b = UniPoly(field, [den.terms.get((k,), field.zero) for k in range(den.degree_in(sym) + 1)])
    g = _poly_gcd(a, b)
    if g.degree < 1:
        return num, den

    def back(p):
        return MultiPoly(field, num.symbols, {(k,): c for k, c in enumerate(p.coeffs)})

    return back(a // g), back(b // g)


def _strip_monomial_content(num: MultiPoly, den: MultiPoly):
    """Divide both by the largest monomial dividing every term of both."""
    if num.is_zero():
        mins = [min(e[i] for e in den.terms) for i in range(len(den.symbols))]
    else:
        mins = [
            min(min(e[i] for e in num.terms), min(e[i] for e in den.terms))
            for i in range(len(num.symbols))
        ]
    if not any(mins):
        return num, den

    def shift_down(p):
        return MultiPoly(
            p.field,
            p.symbols,
            {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms.items()},
        )

    return shift_down(num), shift_down(den)


class RationalFunction:
    """Fraction of multivariate polynomials; compared by cross multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if den.field != num.field or den.symbols != num.symbols:
            raise ValueError("numerator and denominator in different contexts")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = MultiPoly.constant(den.field, den.symbols, 1)
        else:
            num, den = _strip_monomial_content(num, den)
            if len(num.symbols) == 1:
                num, den = _reduce_univariate(num, den)
        num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num, den):
        field = num.field
        if isinstance(field, RationalField):
            vals = [c.value for c in num.terms.values()] + [c.value for c in den.terms.values()]
            lcm_den = math.lcm(*(v.denominator for v in vals))
            gcd_num = math.gcd(*(abs(v.numerator) for v in vals))
            scale = Fraction(lcm_den, gcd_num) if gcd_num else Fraction(lcm_den)
            lead = den._sorted_terms()[0][1].value * scale
            if lead < 0:
                scale = -scale
            if scale != 1:
                s = field.coerce(scale)
                num = num * s
                den = den * s
            return num, den
        lead = den._sorted_terms()[0][1]
        if lead != field.one:
            inv = lead.inverse()
            num = num * inv
            den = den * inv
        return num, den

    @classmethod
    def from_poly(cls, p: MultiPoly):
        return cls(p, MultiPoly.constant(p.field, p.symbols, 1))

    @classmethod
    def constant(cls, field, symbols, c):
        return cls.from_poly(MultiPoly.constant(field, symbols, c))

    @classmethod
    def symbol(cls, field, symbols, name):
        return cls.from_poly(MultiPoly.symbol(field, symbols, name))

    @property
    def field(self):
        return self.num.field

    @property
    def symbols(self):
        return self.num.symbols

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _check(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field or other.symbols != self.symbols:
                raise ValueError("rational functions in different contexts")
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction.from_poly(other)
        try:
            return RationalFunction.constant(self.field, self.symbols, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (RationalFunction(self.den, self.num)) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):  # pragma: no cover
        raise TypeError("RationalFunction has no canonical form; not hashable")

    def order_in(self, name) -> int:
        """Order at `name` = 0: ord(num) - ord(den), coefficients being
        polynomials in the remaining symbols."""
        if self.is_zero():
            raise ValueError("the zero rational function has no order")
        return self.num.order_in(name) - self.den.order_in(name)

    def limit_at(self, name, value):
        """Exact limit as `name` -> value.

        Returns a RationalFunction in the remaining symbols when the limit
        exists (removable singularities included), else a Pole with the
        negative of the order.
        """
        value = self.field.coerce(value)
        num = self.num if value.is_zero() else self.num.shift(name, value)
        den = self.den if value.is_zero() else self.den.shift(name, value)
        rest = tuple(s for s in self.symbols if s != name)
        if num.is_zero():
            return RationalFunction.constant(self.field, rest, 0)
        a = num.order_in(name)
        b = den.order_in(name)
        if a < b:
            return Pole(b - a)
        if a > b:
            return RationalFunction.constant(self.field, rest, 0)
        return RationalFunction(num.coeff_of_power(name, a), den.coeff_of_power(name, b))

    def as_constant(self) -> FieldElement:
        return self.num.as_constant() / self.den.as_constant()

    def is_constant(self) -> bool:
        try:
            self.as_constant()
            return True
        except (ValueError, ZeroDivisionError):
            return False

    def __str__(self):
        if self.den == MultiPoly.constant(self.field, self.symbols, 1):
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if not _is_wrapped(ns) and (any(ch in ns for ch in "+ ") or "-" in ns[1:]):
            ns = f"({ns})"
        if not _is_wrapped(ds) and (
            any(ch in ds for ch in "+* ") or "-" in ds[1:] or "^" in ds
        ):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return self.__str__()


def _is_wrapped(s: str) -> bool:
    """True when s is one balanced (...) group, so wrapping again is noise."""
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(s) - 1:
                return False
    return depth == 0


def ratfunc_equal(r1: RationalFunction, r2) -> bool:
    """Cross-multiplication equality (p1*q2 == p2*q1)."""
    return r1 == r2


class FunctionField(Field):
    """Field of rational functions over a base field in fixed symbols.

    Raw values are RationalFunction instances.  No canonical form exists,
    so elements are not hashable; equality is cross multiplication.
    """

    def __init__(self, base: Field, symbols):
        self.base = base
        self.symbols = tuple(symbols)

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            if x.field == self.base:
                return FieldElement(
                    self, RationalFunction.constant(self.base, self.symbols, x)
                )
            raise FieldError(f"mixed fields: {self} and {x.field}")
        if isinstance(x, RationalFunction):
            if x.field != self.base or x.symbols != self.symbols:
                raise FieldError("rational function from a different context")
            return FieldElement(self, x)
        if isinstance(x, MultiPoly):
            return self.coerce(RationalFunction.from_poly(x))
        if isinstance(x, (int, Fraction)):
            return FieldElement(
                self, RationalFunction.constant(self.base, self.symbols, x)
            )
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def symbol(self, name) -> FieldElement:
        return FieldElement(
            self, RationalFunction.symbol(self.base, self.symbols, name)
        )

    def characteristic(self):
        return self.base.characteristic()

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return a.inverse()

    def _is_zero(self, a):
        return a.is_zero()

    def _eq(self, a, b):
        return a == b

    def _hash_key(self, a):
        raise TypeError("function-field elements are not hashable")

    def _sort_key(self, a):
        raise TypeError("function-field elements have no canonical order")

    def __eq__(self, other):
        return (
            isinstance(other, FunctionField)
            and other.base == self.base
            and other.symbols == self.symbols
        )

    def __hash__(self):
        return hash(("funcfield", self.base, self.symbols))

    def __repr__(self):
        return f"{self.base}({', '.join(self.symbols)})"
