"""Exact rational functions whose denominators are products of linear factors ``x_i - x_j``.

Numerators are sparse polynomials ``{exponent tuple: coefficient}`` over the
rationals (coefficients stay Python ``int`` whenever possible and become
``Fraction`` only after scaling by a non-integer).  Denominators are sorted
tuples of :class:`LinearFactor` with ``i < j``; a reversed factor folds its sign
into the numerator.  Reduced form, where no denominator factor divides the
numerator, is unique because the denominator factors are irreducible and
sign-fixed, so structural equality of reduced forms is exact equality.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InvariantViolation

DEFAULT_PRIME = (1 << 61) - 1
POLE = "pole"
_default_seed = 0


def set_default_seed(seed: int) -> None:
    """Seed used by :func:`rf_equal` when no generator is passed."""
    global _default_seed
    _default_seed = seed


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class SparsePolynomial:
    """Polynomial in ``x_1..x_n``; treat instances as immutable."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"variable count must be a nonnegative integer, got {n!r}")
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(not isinstance(k, int) or k < 0 for k in e):
                raise InputError(f"bad exponent vector {e} for {n} variables")
            if not isinstance(c, (int, Fraction)):
                raise InputError(f"coefficient {c!r} is not an exact rational")
            if c:
                clean[e] = _clean(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SparsePolynomial":
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, n: int, c=1) -> "SparsePolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "SparsePolynomial":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def linear(cls, n: int, i: int, j: int) -> "SparsePolynomial":
        """``x_i - x_j``."""
        return poly_add(cls.variable(n, i), poly_scale(cls.variable(n, j), -1))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.n}, {poly_to_string(self)})"

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in graded-lex order: higher total degree first, then larger exponent vector."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def substitute_equal(self, i: int, j: int) -> "SparsePolynomial":
        """``p`` with ``x_i`` replaced by ``x_j``."""
        out: dict = defaultdict(int)
        for e, c in self.terms.items():
            f = list(e)
            f[j - 1] += f[i - 1]
            f[i - 1] = 0
            out[tuple(f)] += c
        return SparsePolynomial._raw(self.n, {e: _clean(c) for e, c in out.items() if c})


def _same_n(p: SparsePolynomial, q: SparsePolynomial) -> None:
    if p.n != q.n:
        raise InputError(f"variable counts differ: {p.n} vs {q.n}")


def poly_add(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    _same_n(p, q)
    out = dict(p.terms)
    for e, c in q.terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = _clean(s)
        else:
            out.pop(e, None)
    return SparsePolynomial._raw(p.n, out)


def poly_neg(p: SparsePolynomial) -> SparsePolynomial:
    return SparsePolynomial._raw(p.n, {e: -c for e, c in p.terms.items()})


def poly_sub(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return poly_add(p, poly_neg(q))


def poly_scale(p: SparsePolynomial, c) -> SparsePolynomial:
    if not isinstance(c, (int, Fraction)):
        raise InputError(f"scalar {c!r} is not an exact rational")
    if not c:
        return SparsePolynomial._raw(p.n, {})
    return SparsePolynomial._raw(p.n, {e: _clean(a * c) for e, a in p.terms.items()})


def poly_mul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    _same_n(p, q)
    if len(p.terms) < len(q.terms):
        p, q = q, p
    out: dict = defaultdict(int)
    for e2, c2 in q.terms.items():
        for e1, c1 in p.terms.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return SparsePolynomial._raw(p.n, {e: _clean(c) for e, c in out.items() if c})


def _mul_linear(p: SparsePolynomial, i: int, j: int) -> SparsePolynomial:
    """``p * (x_i - x_j)`` without building the factor."""
    a, b = i - 1, j - 1
    out: dict = defaultdict(int)
    for e, c in p.terms.items():
        f = list(e)
        f[a] += 1
        out[tuple(f)] += c
        f[a] -= 1
        f[b] += 1
        out[tuple(f)] -= c
    return SparsePolynomial._raw(p.n, {e: c for e, c in out.items() if c})


@dataclass(frozen=True, order=True)
class LinearFactor:
    """The polynomial ``x_i - x_j`` with ``i < j``."""

    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)) or not 1 <= self.i < self.j:
            raise InputError(f"linear factor needs 1 <= i < j, got ({self.i}, {self.j})")

    def __str__(self) -> str:
        return f"(x{self.i}-x{self.j})"


def poly_div_linear(p: SparsePolynomial, f: LinearFactor) -> SparsePolynomial | None:
    """The exact quotient ``p / (x_i - x_j)``, or ``None`` if it does not divide.

    Grouping terms by the exponents of the other variables and the combined
    degree ``d`` in ``x_i, x_j`` turns each group into a binary form
    ``sum a_k x_i^k x_j^(d-k)``.  Such a form is divisible iff its coefficients
    sum to zero, and the quotient coefficients are the suffix sums of ``a``.
    """
    if f.j > p.n:
        raise InputError(f"factor {f} uses a variable beyond x{p.n}")
    a, b = f.i - 1, f.j - 1
    groups: dict = defaultdict(dict)
    for e, c in p.terms.items():
        rest = list(e)
        k, m = rest[a], rest[b]
        rest[a] = rest[b] = 0
        groups[(tuple(rest), k + m)][k] = c
    out = {}
    for (rest, d), coeffs in groups.items():
        if sum(coeffs.values()):
            return None
        acc = 0
        base = list(rest)
        for k in range(d, 0, -1):
            acc += coeffs.get(k, 0)
            if acc:
                base[a], base[b] = k - 1, d - k
                out[tuple(base)] = _clean(acc)
    return SparsePolynomial._raw(p.n, out)


def _factor(i: int, j: int) -> tuple[LinearFactor, int]:
    if i == j:
        raise InputError(f"degenerate factor x{i}-x{i}")
    return (LinearFactor(i, j), 1) if i < j else (LinearFactor(j, i), -1)


class RationalFunction:
    """Reduced ``numerator / prod(denominator)``; zero is ``(0, ())``."""

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: SparsePolynomial, denominator: Iterable = (), reduce: bool = True):
        n = numerator.n
        sign = 1
        factors = []
        for f in denominator:
            if isinstance(f, LinearFactor):
                factors.append(f)
            else:
                lf, s = _factor(*f)
                factors.append(lf)
                sign *= s
        for f in factors:
            if f.j > n:
                raise InputError(f"factor {f} uses a variable beyond x{n}")
        num = numerator if sign == 1 else poly_neg(numerator)
        if reduce:
            num, factors = _cancel(num, Counter(factors))
        self.numerator = num
        self.denominator = tuple(sorted(factors))
        self._hash = None

    @property
    def n(self) -> int:
        return self.numerator.n

    @classmethod
    def zero(cls, n: int) -> "RationalFunction":
        return cls(SparsePolynomial._raw(n, {}), ())

    @classmethod
    def constant(cls, n: int, c=1) -> "RationalFunction":
        return cls(SparsePolynomial.constant(n, c), ())

    @classmethod
    def reciprocal_product(cls, n: int, pairs: Iterable[tuple[int, int]], c=1) -> "RationalFunction":
        """``c / prod (x_a - x_b)`` over the given ordered pairs."""
        return cls(SparsePolynomial.constant(n, c), list(pairs))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def denominator_counts(self) -> Counter:
        return Counter(self.denominator)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalFunction({rf_to_string(self)})"

    def __str__(self) -> str:
        return rf_to_string(self)


def _cancel(num: SparsePolynomial, den: Counter) -> tuple[SparsePolynomial, list]:
    if num.is_zero():
        return num, []
    out = []
    for f in sorted(den):
        for _ in range(den[f]):
            q = poly_div_linear(num, f)
            if q is None:
                out.append(f)
            else:
                num = q
    return num, out


def _from_reduced(num: SparsePolynomial, den: Counter) -> RationalFunction:
    r = object.__new__(RationalFunction)
    num, factors = _cancel(num, den)
    r.numerator = num
    r.denominator = tuple(sorted(factors))
    r._hash = None
    return r


def _same_vars(r1: RationalFunction, r2: RationalFunction) -> None:
    if r1.n != r2.n:
        raise InputError(f"variable counts differ: {r1.n} vs {r2.n}")


def _times_factors(p: SparsePolynomial, factors: Counter) -> SparsePolynomial:
    for f, k in sorted(factors.items()):
        for _ in range(k):
            p = _mul_linear(p, f.i, f.j)
    return p


def rf_add(r1: RationalFunction, r2: RationalFunction) -> RationalFunction:
    """Sum over the common multiple of the denominators, then cancel."""
    _same_vars(r1, r2)
    if r1.is_zero():
        return r2
    if r2.is_zero():
        return r1
    d1, d2 = Counter(r1.denominator), Counter(r2.denominator)
    common = d1 | d2
    num = poly_add(_times_factors(r1.numerator, common - d1), _times_factors(r2.numerator, common - d2))
    return _from_reduced(num, common)


def rf_neg(r: RationalFunction) -> RationalFunction:
    out = object.__new__(RationalFunction)
    out.numerator = poly_neg(r.numerator)
    out.denominator = r.denominator
    out._hash = None
    return out


def rf_sub(r1: RationalFunction, r2: RationalFunction) -> RationalFunction:
    return rf_add(r1, rf_neg(r2))


def rf_mul(r1: RationalFunction, r2: RationalFunction) -> RationalFunction:
    _same_vars(r1, r2)
    if r1.is_zero() or r2.is_zero():
        return RationalFunction.zero(r1.n)
    num = poly_mul(r1.numerator, r2.numerator)
    return _from_reduced(num, Counter(r1.denominator) + Counter(r2.denominator))


def rf_scale(r: RationalFunction, c) -> RationalFunction:
    return _from_reduced(poly_scale(r.numerator, c), Counter(r.denominator))


def rf_sum(terms: Iterable[RationalFunction], n: int | None = None) -> RationalFunction:
    """Pairwise (tree) summation, which keeps intermediate denominators small."""
    layer = list(terms)
    if not layer:
        if n is None:
            raise InputError("empty sum needs an explicit variable count")
        return RationalFunction.zero(n)
    while len(layer) > 1:
        nxt = [rf_add(layer[k], layer[k + 1]) for k in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _mod(c, prime: int) -> int:
    if isinstance(c, Fraction):
        return c.numerator % prime * pow(c.denominator % prime, -1, prime) % prime
    return c % prime


def poly_eval_mod(p: SparsePolynomial, point: Sequence[int], prime: int = DEFAULT_PRIME) -> int:
    if len(point) != p.n:
        raise InputError(f"point has {len(point)} coordinates, expected {p.n}")
    pt = [x % prime for x in point]
    total = 0
    for e, c in p.terms.items():
        t = _mod(c, prime)
        for x, k in zip(pt, e):
            if k:
                t = t * pow(x, k, prime) % prime
        total += t
    return total % prime


def rf_eval_mod(r: RationalFunction, point: Sequence[int], prime: int = DEFAULT_PRIME):
    """Value of ``r`` at ``point`` in the field of ``prime`` elements, or :data:`POLE`."""
    if len(point) != r.n:
        raise InputError(f"point has {len(point)} coordinates, expected {r.n}")
    den = 1
    for f in r.denominator:
        den = den * ((point[f.i - 1] - point[f.j - 1]) % prime) % prime
    if den == 0:
        return POLE
    return poly_eval_mod(r.numerator, point, prime) * pow(den, -1, prime) % prime


def rf_equal(
    r1: RationalFunction,
    r2: RationalFunction,
    k: int = 8,
    rng: random.Random | None = None,
    prime: int = DEFAULT_PRIME,
) -> bool:
    """Exact equality of reduced forms, cross-checked by ``k`` random evaluations mod ``prime``."""
    _same_vars(r1, r2)
    exact = r1 == r2
    rng = rng if rng is not None else random.Random(_default_seed)
    agree = True
    done = 0
    while done < k:
        pt = [rng.randrange(prime) for _ in range(r1.n)]
        v1, v2 = rf_eval_mod(r1, pt, prime), rf_eval_mod(r2, pt, prime)
        if v1 == POLE or v2 == POLE:
            continue
        done += 1
        if v1 != v2:
            agree = False
            break
    if agree != exact:
        raise InvariantViolation(f"modular check says {agree} but exact comparison says {exact}: {r1} vs {r2}")
    return exact


def _coeff_text(c, first: bool, has_monomial: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if has_monomial and a == 1:
        return sign
    return sign + str(a) + ("*" if has_monomial else "")


def _monomial_text(e: tuple) -> str:
    parts = []
    for idx, k in enumerate(e, start=1):
        if k == 1:
            parts.append(f"x{idx}")
        elif k > 1:
            parts.append(f"x{idx}^{k}")
    return "*".join(parts)


def poly_to_string(p: SparsePolynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for t, (e, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(e)
        out.append(_coeff_text(c, t == 0, bool(mono)) + mono)
    return "".join(out)


def integer_normalized(p: SparsePolynomial) -> tuple[SparsePolynomial, int]:
    """``(L * p, L)`` with ``L`` the least positive integer clearing all coefficient denominators."""
    scale = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            scale = lcm(scale, c.denominator)
    return (p if scale == 1 else poly_scale(p, scale)), scale


def rf_to_string(r: RationalFunction) -> str:
    """Render as ``numerator / (factors)``; ``"0"`` for zero.

    Fractional numerator coefficients are cleared and the clearing integer is
    written in front of the denominator factors.
    """
    if r.is_zero():
        return "0"
    num, scale = integer_normalized(r.numerator)
    text = poly_to_string(num)
    if len(num.terms) > 1 and (r.denominator or scale != 1):
        text = f"({text})"
    if not r.denominator and scale == 1:
        return text
    counts = Counter(r.denominator)
    den = "".join(str(f) + (f"^{counts[f]}" if counts[f] > 1 else "") for f in sorted(counts))
    prefix = str(scale) if scale != 1 else ""
    return f"{text} / ({prefix}{den})"


def rf_to_json(r: RationalFunction) -> dict:
    num, scale = integer_normalized(r.numerator)
    return {
        "n": r.n,
        "numerator": [{"exponents": list(e), "coefficient": c} for e, c in num.sorted_terms()],
        "scale": scale,
        "denominator": [[f.i, f.j] for f in r.denominator],
        "text": rf_to_string(r),
    }


__all__ = [
    "DEFAULT_PRIME", "LinearFactor", "POLE", "RationalFunction", "SparsePolynomial", "integer_normalized",
    "poly_add", "poly_div_linear", "poly_eval_mod", "poly_mul", "poly_neg", "poly_scale", "poly_sub",
    "poly_to_string", "rf_add", "rf_equal", "rf_eval_mod", "rf_mul", "rf_neg", "rf_scale", "rf_sub", "rf_sum",
    "rf_to_json", "rf_to_string", "set_default_seed",
]
