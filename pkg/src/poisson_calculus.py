"""The Poisson cochain complex of F*Dx^Dy in the plane, and jets of diffeomorphisms.

Grading: a term m of the Dx coefficient of a vector field has degree
deg(m) - w1, of the Dy coefficient deg(m) - w2; a term of a bivector
coefficient has degree deg(m) - w1 - w2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from errors import GermError, JetError, SingularLinearPartError, ZeroPolynomialError
from qpoly import (
    ONE,
    ZERO,
    Axis,
    Monomial,
    Poly,
    Weights,
    apply_field,
    compose,
    derive,
    integrate,
    is_quasihomogeneous,
    monomials_of_degree,
    mul_trunc,
)
from utils import logger


class VectorField:
    """a*Dx + b*Dy with polynomial coefficients."""

    __slots__ = ("a", "b", "weights")

    def __init__(self, a: Poly, b: Poly, weights: Weights):
        self.a = a
        self.b = b
        self.weights = weights

    @classmethod
    def zero(cls, w: Weights) -> "VectorField":
        return cls(ZERO, ZERO, w)

    @classmethod
    def euler(cls, w: Weights) -> "VectorField":
        """W = w1*x*Dx + w2*y*Dy."""
        return cls(Poly.monomial(1, 0, w.w1), Poly.monomial(0, 1, w.w2), w)

    def _check(self, other: "VectorField"):
        if not isinstance(other, VectorField):
            return NotImplemented
        if other.weights != self.weights:
            raise ValueError(f"weights differ: {self.weights} vs {other.weights}")
        return other

    def __add__(self, other: "VectorField") -> "VectorField":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return VectorField(self.a + other.a, self.b + other.b, self.weights)

    def __sub__(self, other: "VectorField") -> "VectorField":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return VectorField(self.a - other.a, self.b - other.b, self.weights)

    def __neg__(self) -> "VectorField":
        return VectorField(-self.a, -self.b, self.weights)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.weights == other.weights and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.weights))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def scale(self, c) -> "VectorField":
        return VectorField(self.a.scale(c), self.b.scale(c), self.weights)

    def multiply(self, p: Poly, order: Optional[int] = None) -> "VectorField":
        """p*X, optionally truncated beyond degree ``order``."""
        if order is None:
            return VectorField(p * self.a, p * self.b, self.weights)
        w = self.weights
        return VectorField(
            mul_trunc(p, self.a, w, order + w.w1),
            mul_trunc(p, self.b, w, order + w.w2),
            w,
        )

    def apply(self, g: Poly) -> Poly:
        """The derivative X.g."""
        return apply_field(self.a, self.b, g)

    def apply_trunc(self, g: Poly, n: int) -> Poly:
        """X.g with every term of quasidegree > n dropped."""
        w = self.weights
        return mul_trunc(self.a, derive(g, Axis.X), w, n) + mul_trunc(self.b, derive(g, Axis.Y), w, n)

    def components(self) -> Dict[int, "VectorField"]:
        w = self.weights
        degrees = sorted({m.degree(w) - w.w1 for m in self.a.terms} | {m.degree(w) - w.w2 for m in self.b.terms})
        return {k: self.component(k) for k in degrees}

    def component(self, k: int) -> "VectorField":
        w = self.weights
        return VectorField(self.a.component(w, k + w.w1), self.b.component(w, k + w.w2), w)

    def order(self) -> Optional[int]:
        w = self.weights
        candidates = []
        if self.a:
            candidates.append(self.a.order(w) - w.w1)
        if self.b:
            candidates.append(self.b.order(w) - w.w2)
        return min(candidates) if candidates else None

    def degree(self) -> Optional[int]:
        """The degree when quasihomogeneous, else None."""
        keys = list(self.components())
        return keys[0] if len(keys) == 1 else None

    def truncate(self, n: int) -> "VectorField":
        w = self.weights
        return VectorField(self.a.truncate(w, n + w.w1), self.b.truncate(w, n + w.w2), w)

    def to_text(self) -> str:
        return f"({self.a.to_text(self.weights)})*Dx + ({self.b.to_text(self.weights)})*Dy"

    def __repr__(self) -> str:
        return f"VectorField({self.to_text()!r})"


class Bivector:
    """g*Dx^Dy."""

    __slots__ = ("g", "weights")

    def __init__(self, g: Poly, weights: Weights):
        self.g = g
        self.weights = weights

    def __add__(self, other: "Bivector") -> "Bivector":
        if not isinstance(other, Bivector):
            return NotImplemented
        return Bivector(self.g + other.g, self.weights)

    def __sub__(self, other: "Bivector") -> "Bivector":
        if not isinstance(other, Bivector):
            return NotImplemented
        return Bivector(self.g - other.g, self.weights)

    def __neg__(self) -> "Bivector":
        return Bivector(-self.g, self.weights)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bivector):
            return NotImplemented
        return self.weights == other.weights and self.g == other.g

    def __hash__(self) -> int:
        return hash((self.g, self.weights))

    def __bool__(self) -> bool:
        return bool(self.g)

    def scale(self, c) -> "Bivector":
        return Bivector(self.g.scale(c), self.weights)

    @property
    def shift(self) -> int:
        return self.weights.total

    def components(self) -> Dict[int, "Bivector"]:
        w = self.weights
        return {k - self.shift: Bivector(part, w) for k, part in _components(self.g, w).items()}

    def component(self, k: int) -> "Bivector":
        return Bivector(self.g.component(self.weights, k + self.shift), self.weights)

    def order(self) -> Optional[int]:
        if not self.g:
            return None
        return self.g.order(self.weights) - self.shift

    def degree(self) -> Optional[int]:
        keys = list(self.components())
        return keys[0] if len(keys) == 1 else None

    def truncate(self, n: int) -> "Bivector":
        return Bivector(self.g.truncate(self.weights, n + self.shift), self.weights)

    def to_text(self) -> str:
        return f"({self.g.to_text(self.weights)})*Dx^Dy"

    def __repr__(self) -> str:
        return f"Bivector({self.to_text()!r})"


def _components(g: Poly, w: Weights) -> Dict[int, Poly]:
    degrees = g.degrees(w)
    return {k: g.component(w, k) for k in degrees}


@dataclass(frozen=True)
class PoissonGerm:
    """Pi = f*(1+h)*Dx^Dy; h = 0 is the quasihomogeneous structure Pi0."""

    f: Poly
    h: Poly
    weights: Weights
    d: int = field(init=False)

    def __post_init__(self):
        if not self.f:
            raise GermError("f must be a nonzero polynomial")
        if self.f.constant_term():
            raise GermError(f"f must vanish at the origin, got f(0,0) = {self.f.constant_term()}")
        d = is_quasihomogeneous(self.f, self.weights)
        if d is None:
            raise GermError(f"f = {self.f} is not quasihomogeneous for weights ({self.weights})")
        object.__setattr__(self, "d", d)
        if self.h:
            s = self.s
            if s < 0:
                raise GermError(f"h must be 0 when d - w1 - w2 = {s} is negative")
            try:
                degree = is_quasihomogeneous(self.h, self.weights)
            except ZeroPolynomialError:
                degree = None
            if degree != s:
                raise GermError(f"h = {self.h} must be quasihomogeneous of degree {s}")
            if self.h.constant_term() == -1:
                raise GermError("1 + h vanishes at the origin")

    @classmethod
    def create(cls, f: Poly, weights: Weights, h: Optional[Poly] = None) -> "PoissonGerm":
        return cls(f, h if h is not None else ZERO, weights)

    @property
    def s(self) -> int:
        """The resonant degree d - w1 - w2."""
        return self.d - self.weights.total

    @property
    def unit(self) -> Poly:
        return ONE + self.h

    @property
    def F(self) -> Poly:
        return self.f * self.unit

    @property
    def is_quasihomogeneous_structure(self) -> bool:
        return not self.h

    def without_multiplier(self) -> "PoissonGerm":
        return PoissonGerm(self.f, ZERO, self.weights)


# ---------------------------------------------------------------------------
# The complex

def hamiltonian_field(g: Poly, w: Weights) -> VectorField:
    """H_g = g_y*Dx - g_x*Dy."""
    return VectorField(derive(g, Axis.Y), -derive(g, Axis.X), w)


def divergence(X: VectorField) -> Poly:
    return derive(X.a, Axis.X) + derive(X.b, Axis.Y)


def delta1(germ: PoissonGerm, g: Poly, order: Optional[int] = None) -> VectorField:
    """F*H_g; with ``order`` the result is truncated beyond that field degree."""
    return hamiltonian_field(g, germ.weights).multiply(germ.F, order)


def delta2(germ: PoissonGerm, X: VectorField, order: Optional[int] = None) -> Bivector:
    """(X.F - div(X)*F)*Dx^Dy; with ``order`` truncated beyond that bivector degree."""
    return coboundary2(germ.F, X, order)


def coboundary2(F: Poly, X: VectorField, order: Optional[int] = None) -> Bivector:
    """[X, F*Dx^Dy] for an arbitrary coefficient F."""
    w = X.weights
    if order is None:
        return Bivector(X.apply(F) - divergence(X) * F, w)
    n = order + w.total
    return Bivector(X.apply_trunc(F, n) - mul_trunc(divergence(X), F, w, n), w)


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X, Y] computed on coordinates."""
    return VectorField(X.apply(Y.a) - Y.apply(X.a), X.apply(Y.b) - Y.apply(X.b), X.weights)


def hamiltonian_potential(X: VectorField) -> Poly:
    """g with H_g = X and g(0,0) = 0, for a divergence-free X."""
    if divergence(X):
        raise ValueError(f"{X.to_text()} is not divergence-free")
    a_on_axis = Poly({m: c for m, c in X.a.terms.items() if m.i == 0})
    return integrate(a_on_axis, Axis.Y) - integrate(X.b, Axis.X)


# ---------------------------------------------------------------------------
# Graded cochain bases

FieldSlot = Tuple[Axis, Monomial]


def function_basis(w: Weights, k: int) -> List[Monomial]:
    return monomials_of_degree(w, k)


def field_basis(w: Weights, k: int) -> List[FieldSlot]:
    """Monomial slots of fields of degree k: Dx slots first, then Dy slots."""
    return [(Axis.X, m) for m in monomials_of_degree(w, k + w.w1)] + [
        (Axis.Y, m) for m in monomials_of_degree(w, k + w.w2)
    ]


def bivector_basis(w: Weights, k: int) -> List[Monomial]:
    return monomials_of_degree(w, k + w.total)


def function_basis_up_to(w: Weights, n: int) -> List[Monomial]:
    return [m for k in range(0, n + 1) for m in function_basis(w, k)]


def field_basis_up_to(w: Weights, n: int) -> List[FieldSlot]:
    return [slot for k in range(-w.top, n + 1) for slot in field_basis(w, k)]


def bivector_basis_up_to(w: Weights, n: int) -> List[Monomial]:
    return [m for k in range(-w.total, n + 1) for m in bivector_basis(w, k)]


def field_from_slot(slot: FieldSlot, w: Weights, coeff=1) -> VectorField:
    axis, m = slot
    p = Poly.monomial(m.i, m.j, coeff)
    return VectorField(p, ZERO, w) if axis is Axis.X else VectorField(ZERO, p, w)


def poly_coordinates(g: Poly, monomials: Sequence[Monomial]) -> List[Fraction]:
    return [g.coefficient(m.i, m.j) for m in monomials]


def field_coordinates(X: VectorField, slots: Sequence[FieldSlot]) -> List[Fraction]:
    return [(X.a if axis is Axis.X else X.b).coefficient(m.i, m.j) for axis, m in slots]


# ---------------------------------------------------------------------------
# Jets of diffeomorphisms

class JetDiffeo:
    """A jet (phi1, phi2) of a diffeomorphism fixing the origin.

    Components are kept through quasidegree ``order + max(w1, w2)``; phi1 has
    order >= w1 and phi2 order >= w2, so truncation commutes with composition.
    """

    __slots__ = ("phi1", "phi2", "weights", "order")

    def __init__(self, phi1: Poly, phi2: Poly, weights: Weights, order: int):
        if order < 0:
            raise JetError(f"jet order must be a natural number, got {order}")
        self.weights = weights
        self.order = order
        self.phi1 = phi1.truncate(weights, self.limit)
        self.phi2 = phi2.truncate(weights, self.limit)
        if self.phi1.constant_term() or self.phi2.constant_term():
            raise JetError("a jet of diffeomorphism must fix the origin")
        if (self.phi1 and self.phi1.order(weights) < weights.w1) or (
            self.phi2 and self.phi2.order(weights) < weights.w2
        ):
            raise JetError(f"({self.phi1}, {self.phi2}) does not preserve the quasidegree filtration")
        if self.determinant() == 0:
            raise SingularLinearPartError(f"linear part of ({self.phi1}, {self.phi2}) is singular")

    @classmethod
    def identity(cls, w: Weights, order: int) -> "JetDiffeo":
        return cls(Poly.monomial(1, 0), Poly.monomial(0, 1), w, order)

    @property
    def limit(self) -> int:
        return self.order + self.weights.top

    def linear_part(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        return (
            (self.phi1.coefficient(1, 0), self.phi1.coefficient(0, 1)),
            (self.phi2.coefficient(1, 0), self.phi2.coefficient(0, 1)),
        )

    def determinant(self) -> Fraction:
        (a, b), (c, e) = self.linear_part()
        return a * e - b * c

    def apply(self, g: Poly, n: Optional[int] = None) -> Poly:
        """g composed with this jet, truncated beyond ``n`` (default: the jet limit)."""
        return compose(g, self.phi1, self.phi2, self.weights, self.limit if n is None else n)

    def is_identity(self, n: Optional[int] = None) -> bool:
        n = self.limit if n is None else n
        w = self.weights
        return self.phi1.truncate(w, n) == Poly.monomial(1, 0) and self.phi2.truncate(w, n) == Poly.monomial(0, 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, JetDiffeo):
            return NotImplemented
        return (self.phi1, self.phi2, self.weights, self.order) == (
            other.phi1,
            other.phi2,
            other.weights,
            other.order,
        )

    def __hash__(self) -> int:
        return hash((self.phi1, self.phi2, self.weights, self.order))

    def to_text(self) -> str:
        w = self.weights
        return f"({self.phi1.to_text(w)}, {self.phi2.to_text(w)})"

    def __repr__(self) -> str:
        return f"JetDiffeo({self.to_text()!r}, order={self.order})"


def compose_diffeo(phi: JetDiffeo, psi: JetDiffeo) -> JetDiffeo:
    """phi o psi, kept through the smaller of the two orders."""
    if phi.weights != psi.weights:
        raise ValueError(f"weights differ: {phi.weights} vs {psi.weights}")
    order = min(phi.order, psi.order)
    n = order + phi.weights.top
    return JetDiffeo(psi.apply(phi.phi1, n), psi.apply(phi.phi2, n), phi.weights, order)


def invert_diffeo(phi: JetDiffeo) -> JetDiffeo:
    """The formal inverse of phi through its order."""
    w = phi.weights
    n = phi.limit
    (a, b), (c, e) = phi.linear_part()
    det = a * e - b * c
    if det == 0:
        raise SingularLinearPartError(f"linear part of {phi.to_text()} is singular")
    x, y = Poly.monomial(1, 0), Poly.monomial(0, 1)
    inv1 = x.scale(e / det) + y.scale(-b / det)
    inv2 = x.scale(-c / det) + y.scale(a / det)
    # psi = L^-1 o phi = id + P
    psi1 = phi.phi1.scale(e / det) + phi.phi2.scale(-b / det)
    psi2 = phi.phi1.scale(-c / det) + phi.phi2.scale(a / det)
    p1, p2 = psi1 - x, psi2 - y
    chi1, chi2 = x, y
    for step in range(4 * (n + 2)):
        next1 = x - compose(p1, chi1, chi2, w, n)
        next2 = y - compose(p2, chi1, chi2, w, n)
        if next1 == chi1 and next2 == chi2:
            logger.debug(f"inverse of {phi.to_text()} converged after {step} steps")
            break
        chi1, chi2 = next1, next2
    else:
        raise RuntimeError(f"inversion of {phi.to_text()} did not converge")
    return JetDiffeo(compose(chi1, inv1, inv2, w, n), compose(chi2, inv1, inv2, w, n), w, phi.order)


def jacobian(phi: JetDiffeo) -> Poly:
    """det of the Jacobian matrix, through the jet limit."""
    w = phi.weights
    n = phi.limit
    return mul_trunc(derive(phi.phi1, Axis.X), derive(phi.phi2, Axis.Y), w, n) - mul_trunc(
        derive(phi.phi1, Axis.Y), derive(phi.phi2, Axis.X), w, n
    )


def pushforward(phi: JetDiffeo, P: Bivector) -> Bivector:
    """The bivector g_out*Dx^Dy with g_out o phi = (Jac phi)*g_in through the jet limit."""
    w = phi.weights
    n = phi.limit
    transported = mul_trunc(jacobian(phi), P.g, w, n)
    return Bivector(invert_diffeo(phi).apply(transported, n), w)


def flow_diffeo(X: VectorField, order: int) -> JetDiffeo:
    """Time-one flow of a field of positive order, as the Lie series of the coordinates."""
    w = X.weights
    lowest = X.order()
    if lowest is None:
        return JetDiffeo.identity(w, order)
    if lowest < 1:
        raise ValueError(f"flow_diffeo needs a field of positive order, got order {lowest}")
    n = order + w.top
    components = []
    for coordinate in (Poly.monomial(1, 0), Poly.monomial(0, 1)):
        total = coordinate
        term = coordinate
        k = 1
        while True:
            term = X.apply_trunc(term, n).scale(Fraction(1, k))
            if not term:
                break
            total = total + term
            k += 1
        components.append(total)
    return JetDiffeo(components[0], components[1], w, order)
