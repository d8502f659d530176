"""Exact sparse bivariate polynomials over the rationals, graded by weights.

Every coefficient is a ``fractions.Fraction``; truncation orders are always
quasidegrees, never total degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple, Union

from errors import (
    ConstantTermError,
    NegativeExponentError,
    NonUnitError,
    PolySyntaxError,
    WeightsError,
    ZeroPolynomialError,
)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Weights:
    """The weights (w1, w2) of x and y; the Euler field is w1*x*Dx + w2*y*Dy."""

    w1: int
    w2: int

    def __post_init__(self):
        for value in (self.w1, self.w2):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise WeightsError(f"weights must be positive integers, got ({self.w1!r}, {self.w2!r})")

    @classmethod
    def parse(cls, text: str) -> "Weights":
        """Parse ``"w1,w2"``."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 2 or not all(part.isascii() and part.isdigit() for part in parts):
            raise WeightsError(f"expected weights as 'w1,w2', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def top(self) -> int:
        """max(w1, w2): minus the lowest degree a vector field can have."""
        return max(self.w1, self.w2)

    @property
    def total(self) -> int:
        return self.w1 + self.w2

    def degree(self, i: int, j: int) -> int:
        return i * self.w1 + j * self.w2

    def __str__(self) -> str:
        return f"{self.w1},{self.w2}"


class Monomial(NamedTuple):
    """x^i * y^j."""

    i: int
    j: int

    def degree(self, w: Weights) -> int:
        return w.degree(self.i, self.j)

    def to_text(self) -> str:
        parts = []
        for name, power in (("x", self.i), ("y", self.j)):
            if power == 1:
                parts.append(name)
            elif power > 1:
                parts.append(f"{name}^{power}")
        return "*".join(parts)


class Axis(Enum):
    X = 0
    Y = 1


def _sort_key(m: Monomial, w: Optional[Weights]) -> Tuple[int, int]:
    if w is None:
        return (m.i + m.j, m.i)
    return (m.degree(w), m.i)


class Poly:
    """Immutable sparse polynomial in x, y: a map Monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial ({i}, {j})")
            value = Fraction(coeff)
            if value:
                key = Monomial(i, j)
                clean[key] = clean.get(key, 0) + value
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> "Poly":
        # terms must already be free of zero coefficients
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Scalar = 1) -> "Poly":
        return cls({(i, j): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self, w: Optional[Weights] = None) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: ascending (quasidegree, x-exponent)."""
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0], w))

    def monomials(self, w: Optional[Weights] = None) -> List[Monomial]:
        return [m for m, _ in self.items(w)]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get(Monomial(i, j), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    # ------------------------------------------------------------------ algebra

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            value = terms.get(m, 0) + c
            if value:
                terms[m] = value
            else:
                terms.pop(m, None)
        return Poly._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _product(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a natural number, got {n!r}")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return ZERO
        return Poly._wrap({m: v * c for m, v in self._terms.items()})

    # ------------------------------------------------------------------ grading

    def degrees(self, w: Weights) -> List[int]:
        return sorted({m.degree(w) for m in self._terms})

    def order(self, w: Weights) -> Optional[int]:
        """Lowest quasidegree present; None for the zero polynomial."""
        if not self._terms:
            return None
        return min(m.degree(w) for m in self._terms)

    def top_degree(self, w: Weights) -> Optional[int]:
        if not self._terms:
            return None
        return max(m.degree(w) for m in self._terms)

    def truncate(self, w: Weights, n: int) -> "Poly":
        """Drop every term of quasidegree > n."""
        return Poly._wrap({m: c for m, c in self._terms.items() if m.degree(w) <= n})

    def component(self, w: Weights, k: int) -> "Poly":
        return Poly._wrap({m: c for m, c in self._terms.items() if m.degree(w) == k})

    # ------------------------------------------------------------------ text

    def to_text(self, w: Optional[Weights] = None) -> str:
        """Grammar-compatible text; parse_poly(g.to_text()) == g."""
        if not self._terms:
            return "0"
        parts = []
        for index, (m, c) in enumerate(self.items(w)):
            magnitude = abs(c)
            mono = m.to_text()
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if index == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


def _coerce(value) -> Union[Poly, type(NotImplemented)]:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


ZERO = Poly()
ONE = Poly.constant(1)
X = Poly.monomial(1, 0)
Y = Poly.monomial(0, 1)


def _product(a: Poly, b: Poly, w: Optional[Weights] = None, n: Optional[int] = None) -> Poly:
    if not a or not b:
        return ZERO
    if w is None:
        right = [(m.i, m.j, c) for m, c in b._terms.items()]
        left = [(m.i, m.j, c) for m, c in a._terms.items()]
        limit = None
    else:
        right = [(m.i, m.j, c, m.degree(w)) for m, c in b._terms.items() if m.degree(w) <= n]
        left = [(m.i, m.j, c, m.degree(w)) for m, c in a._terms.items() if m.degree(w) <= n]
        limit = n
    terms: Dict[Monomial, Fraction] = {}
    for left_term in left:
        i1, j1, c1 = left_term[0], left_term[1], left_term[2]
        for right_term in right:
            if limit is not None and left_term[3] + right_term[3] > limit:
                continue
            key = Monomial(i1 + right_term[0], j1 + right_term[1])
            terms[key] = terms.get(key, 0) + c1 * right_term[2]
    return Poly._wrap({m: c for m, c in terms.items() if c})


def mul_trunc(a: Poly, b: Poly, w: Weights, n: int) -> Poly:
    """a*b with every term of quasidegree > n dropped."""
    return _product(a, b, w, n)


# ---------------------------------------------------------------------- parser

_DIGITS = "0123456789"


class _Parser:
    """Recursive descent over the polynomial grammar (positions are 1-based)."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Poly:
        if self._peek() is None:
            raise PolySyntaxError(self.pos + 1, "empty expression")
        result = self._expr()
        char = self._peek()
        if char is not None:
            raise PolySyntaxError(self.pos + 1, f"unexpected {char!r}")
        return result

    def _peek(self) -> Optional[str]:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def _expr(self) -> Poly:
        negate = False
        if self._peek() in ("+", "-"):
            negate = self.text[self.pos] == "-"
            self.pos += 1
        result = self._term()
        if negate:
            result = -result
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> Poly:
        result = self._factor()
        while self._peek() == "*":
            self.pos += 1
            result = result * self._factor()
        return result

    def _factor(self) -> Poly:
        base = self._base()
        if self._peek() == "^":
            self.pos += 1
            char = self._peek()
            if char == "-":
                raise NegativeExponentError(self.pos + 1)
            if char is None or char not in _DIGITS:
                raise PolySyntaxError(self.pos + 1, "expected a natural exponent after '^'")
            return base ** self._natural()
        return base

    def _base(self) -> Poly:
        char = self._peek()
        if char == "x":
            self.pos += 1
            return X
        if char == "y":
            self.pos += 1
            return Y
        if char == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                found = self._peek()
                raise PolySyntaxError(self.pos + 1, f"expected ')' but found {found!r}" if found else "missing ')'")
            self.pos += 1
            return inner
        if char is not None and char in _DIGITS:
            return Poly.constant(self._rational())
        if char is None:
            raise PolySyntaxError(self.pos + 1, "unexpected end of input")
        raise PolySyntaxError(self.pos + 1, f"expected x, y, a number or '(' but found {char!r}")

    def _natural(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        return int(self.text[start:self.pos])

    def _rational(self) -> Fraction:
        numerator = self._natural()
        if self._peek() == "/":
            self.pos += 1
            char = self._peek()
            if char is None or char not in _DIGITS:
                raise PolySyntaxError(self.pos + 1, "expected a positive denominator after '/'")
            at = self.pos + 1
            denominator = self._natural()
            if denominator == 0:
                raise PolySyntaxError(at, "zero denominator")
            return Fraction(numerator, denominator)
        return Fraction(numerator)


def parse_poly(text: str) -> Poly:
    """Parse polynomial text (x, y, rationals, + - * ^ and parentheses)."""
    return _Parser(text).parse()


# ------------------------------------------------------------------ calculus

def derive(g: Poly, axis: Axis) -> Poly:
    terms: Dict[Monomial, Fraction] = {}
    for (i, j), c in g._terms.items():
        if axis is Axis.X and i:
            terms[Monomial(i - 1, j)] = c * i
        elif axis is Axis.Y and j:
            terms[Monomial(i, j - 1)] = c * j
    return Poly._wrap(terms)


def apply_field(a: Poly, b: Poly, g: Poly) -> Poly:
    """The derivative of g along a*Dx + b*Dy."""
    return a * derive(g, Axis.X) + b * derive(g, Axis.Y)


def integrate(g: Poly, axis: Axis) -> Poly:
    """Antiderivative along one axis, vanishing on the other axis."""
    terms: Dict[Monomial, Fraction] = {}
    for (i, j), c in g._terms.items():
        if axis is Axis.X:
            terms[Monomial(i + 1, j)] = c / (i + 1)
        else:
            terms[Monomial(i, j + 1)] = c / (j + 1)
    return Poly._wrap(terms)


def divide_by_monomial(g: Poly, i: int, j: int) -> Poly:
    terms: Dict[Monomial, Fraction] = {}
    for m, c in g._terms.items():
        if m.i < i or m.j < j:
            raise ValueError(f"{g} is not divisible by {Monomial(i, j).to_text()}")
        terms[Monomial(m.i - i, m.j - j)] = c
    return Poly._wrap(terms)


# ------------------------------------------------------------------ grading

def graded_components(g: Poly, w: Weights) -> Dict[int, Poly]:
    """Quasihomogeneous pieces of g keyed by quasidegree (ascending)."""
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in g._terms.items():
        buckets.setdefault(m.degree(w), {})[m] = c
    return {k: Poly._wrap(buckets[k]) for k in sorted(buckets)}


def is_quasihomogeneous(g: Poly, w: Weights) -> Optional[int]:
    if not g:
        raise ZeroPolynomialError("the zero polynomial has no quasidegree")
    degrees = g.degrees(w)
    return degrees[0] if len(degrees) == 1 else None


def monomials_of_degree(w: Weights, k: int) -> List[Monomial]:
    if k < 0:
        return []
    result = []
    for i in range(k // w.w1 + 1):
        rest = k - i * w.w1
        if rest % w.w2 == 0:
            result.append(Monomial(i, rest // w.w2))
    return result


def monomials_up_to(w: Weights, n: int) -> List[Monomial]:
    """Every monomial of quasidegree <= n, canonical order."""
    result = []
    for k in range(0, n + 1):
        result.extend(monomials_of_degree(w, k))
    return result


def quasidegrees_up_to(w: Weights, n: int) -> List[int]:
    return [k for k in range(0, n + 1) if monomials_of_degree(w, k)]


def derive_weights(f: Poly) -> Weights:
    """Primitive weights making f quasihomogeneous (f needs two monomials)."""
    monos = f.monomials()
    if len(monos) < 2:
        raise WeightsError(f"cannot derive weights from {f}: need at least two monomials")
    (a, b), (c, e) = monos[0], monos[1]
    # a*w1 + b*w2 == c*w1 + e*w2
    dx, dy = a - c, e - b
    if dx == 0 or dy == 0 or (dx > 0) != (dy > 0):
        raise WeightsError(f"no positive weights make {f} quasihomogeneous")
    common = gcd(abs(dx), abs(dy))
    w = Weights(abs(dy) // common, abs(dx) // common)
    if is_quasihomogeneous(f, w) is None:
        raise WeightsError(f"no positive weights make {f} quasihomogeneous")
    return w


# ------------------------------------------------------------------ series

def unit_divide(g: Poly, u: Poly, w: Weights, n: int) -> Poly:
    """q with q*u == g modulo quasidegree > n; u must be a unit."""
    c = u.constant_term()
    if not c:
        raise NonUnitError(f"cannot divide by {u}: zero constant term")
    inverse = 1 / c
    g_parts = graded_components(g.truncate(w, n), w)
    u_parts = [(k, part) for k, part in graded_components(u.truncate(w, n), w).items() if k > 0]
    q_parts: Dict[int, Poly] = {}
    for k in quasidegrees_up_to(w, n):
        acc = g_parts.get(k, ZERO)
        for j, u_j in u_parts:
            if j > k:
                break
            q_prev = q_parts.get(k - j)
            if q_prev:
                acc = acc - q_prev * u_j
        if acc:
            q_parts[k] = acc.scale(inverse)
    result: Dict[Monomial, Fraction] = {}
    for part in q_parts.values():
        result.update(part._terms)
    return Poly._wrap(result)


def exp_unit(nu: Poly, w: Weights, n: int) -> Poly:
    """exp(nu) truncated beyond quasidegree n; nu must vanish at the origin."""
    if nu.constant_term():
        raise ConstantTermError(f"exp_unit needs nu(0,0) = 0, got {nu.constant_term()}")
    result = ONE
    term = ONE
    k = 1
    while True:
        term = mul_trunc(term, nu, w, n).scale(Fraction(1, k))
        if not term:
            return result
        result = result + term
        k += 1


def compose(g: Poly, p: Poly, q: Poly, w: Weights, n: int) -> Poly:
    """g(p, q) truncated beyond quasidegree n."""
    if not g:
        return ZERO
    by_x: Dict[int, Dict[int, Fraction]] = {}
    for (i, j), c in g._terms.items():
        by_x.setdefault(i, {})[j] = c
    max_j = max(j for row in by_x.values() for j in row)
    q_powers = [ONE]
    for _ in range(max_j):
        q_powers.append(mul_trunc(q_powers[-1], q, w, n))
    result = ZERO
    p_power = ONE
    for i in range(max(by_x) + 1):
        if i:
            p_power = mul_trunc(p_power, p, w, n)
        row = by_x.get(i)
        if not row:
            continue
        inner = ZERO
        for j, c in row.items():
            inner = inner + q_powers[j].scale(c)
        result = result + mul_trunc(p_power, inner, w, n)
    return result
