"""Parametrized root families and what happens to their symmetries at
critical parameter values.

A family is a list of pairwise-distinct rational functions r_i(t) defining
the algebras A_t = k[X]/(prod (X - r_i(t))).  Away from critical values the
automorphisms permute the Lagrange idempotents, so each permutation yields
a substitution map whose coefficients are rational functions of t; taking
exact limits of those coefficients decides which permutations survive at a
critical value, collapse (pole), or degenerate.

Permutation convention: a permutation sigma acts on the coordinate vector
of X in the idempotent basis by (v_1, ..., v_n) -> (v_{sigma(1)}, ...,
v_{sigma(n)}).  Permutations are 0-indexed tuples with sigma[i] = image of
position i; compose_perm(p, q)[i] = p[q[i]].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, FieldElement, RationalField
from .linalg import laplace_det
from .poly import FunctionField, MultiPoly, Pole, RationalFunction, UniPoly
from .quotient import AlgebraHom, MonogenicAlgebra, SubstitutionMap, vandermonde_pair


class InternalInconsistencyError(RuntimeError):
    """A finite limit map failed its mandatory automorphism verification."""


def identity_perm(n: int) -> tuple:
    return tuple(range(n))

def compose_perm(p: tuple, q: tuple) -> tuple:
    """Apply q, then p."""
    return tuple(p[q[i]] for i in range(len(p)))

def invert_perm(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)

def all_perms(n: int):
    return [tuple(p) for p in itertools.permutations(range(n))]

def perm_to_cycles(p: tuple) -> str:
    """One-line cycle notation on 1-based positions, 'id' for the identity."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) if out else "id"

def is_perm_group(perms: set) -> bool:
    if not perms:
        return False
    n = len(next(iter(perms)))
    if identity_perm(n) not in perms:
        return False
    for p in perms:
        if invert_perm(p) not in perms:
            return False
    return all(compose_perm(p, q) in perms for p in perms for q in perms)


class RootFamily:
    """Pairwise-distinct rational-function roots over (field, symbols)."""

    def __init__(self, field: Field, symbols, roots, param: str = "t"):
        self.field = field
        self.symbols = tuple(symbols)
        if param not in self.symbols:
            raise ValueError(f"parameter {param!r} must be one of the symbols")
        self.param = param
        rs = []
        for r in roots:
            if isinstance(r, RationalFunction):
                if r.field != field or r.symbols != self.symbols:
                    raise ValueError("root from a different context")
                rs.append(r)
            else:
                rs.append(RationalFunction.constant(field, self.symbols, r))
        for i in range(len(rs)):
            for j in range(i + 1, len(rs)):
                if rs[i] == rs[j]:
                    raise ValueError(
                        f"roots {i + 1} and {j + 1} coincide as rational functions"
                    )
        self.roots = tuple(rs)

    @property
    def n(self) -> int:
        return len(self.roots)

    def function_field(self) -> FunctionField:
        return FunctionField(self.field, self.symbols)

    def roots_at(self, t0) -> list[FieldElement]:
        """Exact root values at the parameter value t0 (other symbols must
        already be specialized away)."""
        if self.symbols != (self.param,):
            raise ValueError("family still carries symbols besides the parameter")
        t0 = self.field.coerce(t0)
        out = []
        for r in self.roots:
            lim = r.limit_at(self.param, t0)
            if isinstance(lim, Pole):
                raise ValueError(f"root has a pole at {self.param} = {t0}")
            out.append(lim.as_constant())
        return out

    def algebra_at(self, t0) -> MonogenicAlgebra:
        return MonogenicAlgebra.from_roots(self.field, self.roots_at(t0))

    def critical_values(self) -> list[FieldElement]:
        """Parameter values where two roots collide: roots of the numerator
        of prod_{i<j} (r_i - r_j).

        Exhaustive over finite fields; over Q (and rational-coefficient
        extensions) found by the rational root theorem plus the monomial
        factor t^k.  Values outside those searches are not reported.
        """
        if self.symbols != (self.param,):
            raise ValueError("family still carries symbols besides the parameter")
        num = MultiPoly.constant(self.field, self.symbols, 1)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                num = num * (self.roots[i] - self.roots[j]).num
        found = []
        if self.field.size() is not None:
            for z in self.field.elements():
                if num.eval_all({self.param: z}).is_zero():
                    found.append(z)
            return found
        if num.eval_all({self.param: self.field.zero}).is_zero():
            found.append(self.field.zero)
        for cand in self._rational_root_candidates(num):
            if cand.is_zero() or any(cand == f for f in found):
                continue
            if num.eval_all({self.param: cand}).is_zero():
                found.append(cand)
        return found

    def _rational_root_candidates(self, num: MultiPoly):
        coeffs = {e[0]: c for e, c in num.terms.items()}
        lo = min(coeffs)
        hi = max(coeffs)
        if lo == hi:
            return []
        vals = []
        for c in coeffs.values():
            if not isinstance(c.value, Fraction):
                return []  # non-rational coefficients: no candidate search
            vals.append(c.value)
        # clear denominators so that root numerators divide the constant
        # term and root denominators divide the leading term
        scale = math.lcm(*(v.denominator for v in vals))
        a0 = abs(int(coeffs[lo].value * scale))
        an = abs(int(coeffs[hi].value * scale))
        seen = set()
        out = []
        for a in _divisors(a0):
            for b in _divisors(an):
                for s in (1, -1):
                    q = Fraction(s * a, b)
                    if q not in seen:
                        seen.add(q)
                        out.append(self.field.coerce(q))
        return out


def _divisors(n: int):
    n = abs(n)
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


@dataclass(frozen=True)
class PermAutomorphism:
    """A permutation of the root slots with the coefficient vector of the
    induced map's image of X, as rational functions of the parameters."""

    sigma: tuple
    coeffs: tuple  # RationalFunction entries, index k = coefficient of X^k

    def __str__(self):
        return f"{perm_to_cycles(self.sigma)}: ({', '.join(str(c) for c in self.coeffs)})"


def perm_coeff_vector(fam: RootFamily, sigma: tuple) -> PermAutomorphism:
    """Solve M c = (r_{sigma(1)}, ..., r_{sigma(n)}) for the Vandermonde M
    of the roots; entry k of c is the coefficient of X^k."""
    if sorted(sigma) != list(range(fam.n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{fam.n - 1}")
    ff = fam.function_field()
    roots = [ff.coerce(r) for r in fam.roots]
    _, m_inv = vandermonde_pair(ff, roots)
    permuted = [roots[sigma[i]] for i in range(fam.n)]
    coeffs = m_inv.mul_vec(permuted)
    return PermAutomorphism(sigma=tuple(sigma), coeffs=tuple(c.value for c in coeffs))


@dataclass(frozen=True)
class Survives:
    limit_map: SubstitutionMap
    verified: bool = True  # analyze_at only builds verified survivals

@dataclass(frozen=True)
class PoleAt:
    coeff_index: int
    order: int


def analyze_at(fam: RootFamily, sigma: tuple, t0):
    """Limit the permutation's coefficient vector at t = t0.

    Returns Survives(map) with the limit substitution verified as an
    automorphism of the specialized algebra, or PoleAt(index, order) for the
    first coefficient without a limit.  A finite limit that fails the
    automorphism check raises InternalInconsistencyError.
    """
    t0 = fam.field.coerce(t0)
    pa = perm_coeff_vector(fam, sigma)
    limits = []
    for k, c in enumerate(pa.coeffs):
        if c.is_zero():
            limits.append(fam.field.zero)
            continue
        lim = c.limit_at(fam.param, t0)
        if isinstance(lim, Pole):
            return PoleAt(coeff_index=k, order=lim.order)
        limits.append(lim.as_constant())
    algebra = fam.algebra_at(t0)
    limit_map = SubstitutionMap(algebra, UniPoly(fam.field, limits))
    if not limit_map.is_automorphism():
        raise InternalInconsistencyError(
            f"finite limit of {perm_to_cycles(sigma)} at {fam.param}={t0} "
            f"is not an automorphism of {algebra}"
        )
    return Survives(limit_map=limit_map)


@dataclass(frozen=True)
class SurvivalReport:
    """Per-permutation survival at one critical value, plus the surviving
    subgroup (verified closed under composition and inverses)."""

    t0: FieldElement
    statuses: tuple  # pairs (sigma, Survives | PoleAt), lexicographic in sigma
    surviving: tuple  # the surviving permutations

    def status_of(self, sigma):
        for s, st in self.statuses:
            if s == tuple(sigma):
                return st
        raise KeyError(sigma)


def surviving_subgroup(fam: RootFamily, t0) -> SurvivalReport:
    """Analyze every permutation (n <= 5) and assert subgroup closure of the
    surviving set."""
    if fam.n > 5:
        raise ValueError("exhaustive analysis is limited to n <= 5")
    t0 = fam.field.coerce(t0)
    statuses = []
    surviving = []
    for sigma in all_perms(fam.n):
        st = analyze_at(fam, sigma, t0)
        statuses.append((sigma, st))
        if isinstance(st, Survives):
            surviving.append(sigma)
    if not is_perm_group(set(surviving)):
        raise InternalInconsistencyError(
            f"surviving set at {fam.param}={t0} is not a subgroup: "
            + ", ".join(perm_to_cycles(s) for s in surviving)
        )
    return SurvivalReport(t0=t0, statuses=tuple(statuses), surviving=tuple(surviving))


# -- symbolic three-root families r_i = t * x_i -----------------------------

SCALED_SYMBOLS = ("x1", "x2", "x3", "t")


def scaled_family(field: Field = None) -> RootFamily:
    """The symbolic family with roots (t*x1, t*x2, t*x3)."""
    if field is None:
        field = RationalField()
    t = MultiPoly.symbol(field, SCALED_SYMBOLS, "t")
    roots = [
        RationalFunction.from_poly(t * MultiPoly.symbol(field, SCALED_SYMBOLS, f"x{i}"))
        for i in (1, 2, 3)
    ]
    return RootFamily(field, SCALED_SYMBOLS, roots)


def specialize_scaled(field: Field, xs) -> RootFamily:
    """The family with roots (t*x_1, t*x_2, t*x_3) at concrete x values."""
    xs = [field.coerce(x) for x in xs]
    t = MultiPoly.symbol(field, ("t",), "t")
    roots = [RationalFunction.from_poly(t * x) for x in xs]
    return RootFamily(field, ("t",), roots)


def normalize_scaled_triple(xs) -> list:
    """Translate and rescale a distinct triple to (0, 1, x3'); the survival
    conditions are invariant under this affine normalization."""
    if len(xs) != 3:
        raise ValueError("expected three values")
    x1, x2, x3 = xs
    if x2 == x1:
        raise ValueError("x1 and x2 must differ to normalize")
    scale = (x2 - x1).inverse()
    field = x1.field
    return [field.zero, field.one, (x3 - x1) * scale]


@dataclass(frozen=True)
class SurvivalCondition:
    """For a permutation of the scaled family: the polynomial in x1..x3
    whose vanishing (with the x_i pairwise distinct) makes the permutation
    survive at t = 0, and the X-coefficient of the limit map on that locus.

    `denominator` is the product of root differences paired with
    `condition`: the full X^2 coefficient is condition/(denominator * t).
    """

    sigma: tuple
    condition: MultiPoly  # in (x1, x2, x3)
    denominator: MultiPoly  # in (x1, x2, x3)
    limit_linear_coeff: RationalFunction  # in (x1, x2, x3)

    def holds_at(self, xs) -> bool:
        field = self.condition.field
        vals = {f"x{i + 1}": field.coerce(x) for i, x in enumerate(xs)}
        return self.condition.eval_all(vals).is_zero()


def survival_condition(sigma: tuple, field: Field = None) -> SurvivalCondition:
    """Survival condition of a permutation of the scaled three-root family.

    Works with the exact adjugate of the symbolic Vandermonde matrix, so the
    condition polynomial comes out with no spurious factors: the coefficient
    of X^2 is t^(-1) * R(x)/D(x) with D = prod of root differences, and R is
    the returned condition; the coefficient of X is limit_linear_coeff,
    independent of t.
    """
    if field is None:
        field = RationalField()
    if sorted(sigma) != [0, 1, 2]:
        raise ValueError("sigma must be a permutation of three slots")
    full = SCALED_SYMBOLS

    def sym(name):
        return MultiPoly.symbol(field, full, name)

    t = sym("t")
    xs = [sym("x1"), sym("x2"), sym("x3")]
    rows = []
    for x in xs:
        z = t * x
        rows.append([MultiPoly.constant(field, full, 1), z, z * z])
    det = laplace_det(rows)

    def cofactor(i, j):
        minor = [r[:j] + r[j + 1 :] for k, r in enumerate(rows) if k != i]
        d = laplace_det(minor)
        return -d if (i + j) % 2 else d

    # adjugate rows: adj[k][i] = cofactor(i, k)
    permuted = [t * xs[sigma[i]] for i in range(3)]
    c1_num = MultiPoly.zero(field, full)
    c2_num = MultiPoly.zero(field, full)
    for i in range(3):
        c1_num = c1_num + cofactor(i, 1) * permuted[i]
        c2_num = c2_num + cofactor(i, 2) * permuted[i]

    # det = t^3 * D(x); c2_num * t = t^3 * R(x); c1_num = t^3 * L(x),
    # so taking the t^3 coefficient leaves polynomials in x1, x2, x3 only
    dpoly = det.coeff_of_power("t", 3)
    condition = (c2_num * t).coeff_of_power("t", 3)
    linear = c1_num.coeff_of_power("t", 3)
    return SurvivalCondition(
        sigma=tuple(sigma),
        condition=condition,
        denominator=dpoly,
        limit_linear_coeff=RationalFunction(linear, dpoly),
    )


def conjugate_through_iso(
    source: MonogenicAlgebra,
    target: MonogenicAlgebra,
    iso_image: UniPoly,
    aut_image: UniPoly,
) -> SubstitutionMap:
    """Pull an automorphism of `target` back to `source` through the
    isomorphism source -> target with the given image of X."""
    iso = AlgebraHom(source, target, iso_image)
    if not iso.is_isomorphism():
        raise ValueError("the given map is not an isomorphism")
    alpha = SubstitutionMap(target, aut_image)
    if not alpha.is_automorphism():
        raise ValueError("the given map is not an automorphism of the target")
    back = iso.inverse_image()  # image of X under target -> source
    # X -> iso -> alpha -> iso^(-1), at the level of image polynomials
    step = iso.image.compose_mod(alpha.image, target.modulus)
    result = step.compose_mod(back, source.modulus)
    return SubstitutionMap(source, result)
