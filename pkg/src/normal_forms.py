"""Simple-germ catalog, homological equations for the Euler field, and the jet normalizer.

A germ F = f*(1+u) with f quasihomogeneous is carried to c0*f*(1+h), h of
degree s = d - w1 - w2, by a sweep over the degrees of the multiplier: every
component of degree m != s is killed by the time-one flow of alpha*W with
alpha = component/(s - m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from errors import ConstantTermError, InvalidLabelError, NonUnitError, ResonanceError
from milnor_algebra import quasidegree, require_finite
from poisson_calculus import JetDiffeo, PoissonGerm, VectorField, compose_diffeo, flow_diffeo, jacobian
from qpoly import (
    ONE,
    ZERO,
    Poly,
    Weights,
    compose,
    derive_weights,
    divide_by_monomial,
    graded_components,
    mul_trunc,
    quasidegrees_up_to,
    unit_divide,
)
from utils import logger

FAMILIES = ("A", "D", "E")


@dataclass(frozen=True)
class AdeLabel:
    """A simple germ: family, index, real sign and modulus."""

    family: str
    k: int
    sign: int = 1
    lam: Fraction = Fraction(0)
    field: str = "R"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidLabelError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.field not in ("R", "C"):
            raise InvalidLabelError(f"field must be R or C, got {self.field!r}")
        if self.sign not in (1, -1):
            raise InvalidLabelError(f"sign must be + or -, got {self.sign!r}")
        if self.family == "A" and self.k < 1:
            raise InvalidLabelError(f"A_k needs k >= 1, got {self.k}")
        if self.family == "D" and self.k < 4:
            raise InvalidLabelError(f"D_k needs k >= 4, got {self.k}")
        if self.family == "E" and self.k not in (6, 7, 8):
            raise InvalidLabelError(f"E_k needs k in 6, 7, 8, got {self.k}")
        if self.sign == -1 and not self.has_sign:
            raise InvalidLabelError(f"{self.family}{self.k} has no real sign variants")
        if self.field == "C":
            # over C the two real forms coincide
            object.__setattr__(self, "sign", 1)
        object.__setattr__(self, "lam", Fraction(self.lam))

    @classmethod
    def parse(cls, text: str, lam=0, field: str = "R") -> "AdeLabel":
        """Parse ``FAMILY:INDEX[:SIGN]``, e.g. ``D:5`` or ``A:3:-``."""
        parts = text.strip().split(":")
        if len(parts) not in (2, 3) or not (parts[1].isascii() and parts[1].isdigit()):
            raise InvalidLabelError(f"expected FAMILY:INDEX[:SIGN], got {text!r}")
        sign = 1
        if len(parts) == 3:
            if parts[2] not in ("+", "-"):
                raise InvalidLabelError(f"sign must be + or -, got {parts[2]!r}")
            sign = 1 if parts[2] == "+" else -1
        return cls(parts[0].upper(), int(parts[1]), sign, Fraction(lam), field)

    @property
    def has_sign(self) -> bool:
        return (self.family == "A" and self.k % 2 == 1) or (self.family == "D" and self.k % 2 == 0)

    def __str__(self) -> str:
        suffix = ("+" if self.sign > 0 else "-") if self.has_sign else ""
        return f"{self.family}{self.k}{suffix}"


@dataclass(frozen=True)
class PushforwardCheck:
    residual_order: Optional[int]
    passed: bool
    checked_through: int


@dataclass(frozen=True)
class NormalizationResult:
    h_out: Poly
    phi: JetDiffeo
    constant: Fraction
    order: int
    steps: int = 0


# ---------------------------------------------------------------------------
# Catalog

def _y(power: int) -> Poly:
    return Poly.monomial(0, power)


def _build(f: Poly, h: Poly) -> PoissonGerm:
    w = derive_weights(f)
    germ = PoissonGerm.create(f, w)
    if h and (germ.s < 0 or any(m.degree(w) != germ.s for m in h.terms)):
        logger.debug(f"multiplier {h} dropped for {f}: degree {germ.s} carries no modulus")
        h = ZERO
    return PoissonGerm.create(f, w, h)


def is_as_printed(label: AdeLabel) -> bool:
    """D_{2p} in the classification table repeats the A_{2p-1} formula."""
    return label.family == "D" and label.k % 2 == 0


def catalog(label: AdeLabel) -> PoissonGerm:
    """The normal form of the table, as printed."""
    sign = label.sign
    lam = label.lam
    x2 = Poly.monomial(2, 0)
    if label.family == "A":
        if label.k % 2 == 0:
            p = label.k // 2
            return _build(x2 + _y(2 * p + 1), ZERO)
        p = (label.k + 1) // 2
        h = _y(p - 1).scale(lam) if p > 1 else ZERO
        return _build(x2 + _y(2 * p).scale(sign), h)
    if label.family == "D":
        if label.k % 2 == 1:
            p = (label.k - 1) // 2
            return _build(Poly.monomial(2, 1) + _y(2 * p), Poly.monomial(1, 0, lam))
        p = label.k // 2
        logger.warning(f"{label} is built as printed: (x^2 {'+' if sign > 0 else '-'} y^{2 * p})(1 + lambda*y^{p - 1})")
        return _build(x2 + _y(2 * p).scale(sign), _y(p - 1).scale(lam))
    if label.k == 6:
        return _build(Poly.monomial(3, 0) + _y(4), ZERO)
    if label.k == 7:
        return _build(Poly.monomial(3, 0) + Poly.monomial(1, 3), _y(2).scale(lam))
    return _build(Poly.monomial(3, 0) + _y(5), ZERO)


def catalog_d_form(label: AdeLabel) -> PoissonGerm:
    """D^{+-}_{2p} with a D-type polynomial: (x^2*y +- y^{2p-1})(1 + lambda*y^{p-1})."""
    if not is_as_printed(label):
        raise InvalidLabelError(f"the D-form constructor applies to D_(2p) only, got {label}")
    p = label.k // 2
    return _build(Poly.monomial(2, 1) + _y(2 * p - 1).scale(label.sign), _y(p - 1).scale(label.lam))


def catalog_germ(label: AdeLabel, d_form: bool = False) -> PoissonGerm:
    if d_form and is_as_printed(label):
        return catalog_d_form(label)
    return catalog(label)


def catalog_labels(lam=1) -> List[AdeLabel]:
    """A_1..A_6, D_5, D_6, E_6, E_7, E_8 with both real signs where they exist."""
    labels = []
    for k in range(1, 7):
        signs = (1, -1) if k % 2 == 1 else (1,)
        labels.extend(AdeLabel("A", k, sign, Fraction(lam)) for sign in signs)
    labels.append(AdeLabel("D", 5, 1, Fraction(lam)))
    labels.extend(AdeLabel("D", 6, sign, Fraction(lam)) for sign in (1, -1))
    labels.extend(AdeLabel("E", k, 1, Fraction(lam)) for k in (6, 7, 8))
    return labels


def printed_cohomology(label: AdeLabel) -> Optional[Tuple[int, int, int]]:
    """Dimensions stated for the worked examples, where there are any."""
    if label.family == "A" and label.k == 1:
        return (1, 2, 2)
    if label.family == "D" and label.k % 2 == 1:
        p = (label.k - 1) // 2
        return (1, 2, 2 * p + 3)
    return None


# ---------------------------------------------------------------------------
# Homological equations for the Euler field

def solve_W(T: Poly, w: Weights) -> Poly:
    """nu with W.nu = T, for T vanishing at the origin."""
    if T.constant_term():
        raise ConstantTermError(f"W.nu = T needs T(0,0) = 0, got {T.constant_term()}")
    nu = ZERO
    for i, part in graded_components(T, w).items():
        nu = nu + part.scale(Fraction(1, i))
    return nu


def solve_homological(T: Poly, lambda0: int, w: Weights) -> Poly:
    """gamma with W.gamma - lambda0*gamma = T; resonant when T has a degree-lambda0 part."""
    gamma = ZERO
    for i, part in graded_components(T, w).items():
        if i == lambda0:
            raise ResonanceError(lambda0)
        gamma = gamma + part.scale(Fraction(1, i - lambda0))
    return gamma


# ---------------------------------------------------------------------------
# Normalizer

def default_order(f: Poly, w: Weights) -> int:
    return 2 * quasidegree(f, w) + w.top


def check_pushforward(phi: JetDiffeo, F_src: Poly, g_dst: Poly, N: int) -> PushforwardCheck:
    """Residual of g_dst o phi = (Jac phi)*F_src through quasidegree N."""
    w = phi.weights
    residual = phi.apply(g_dst, N) - mul_trunc(jacobian(phi), F_src, w, N)
    order = residual.order(w)
    logger.debug(f"pushforward residual through {N}: order {order}")
    return PushforwardCheck(order, order is None, N)


def _multiplier_factor(f: Poly, psi: JetDiffeo) -> Poly:
    """T with f o psi = T*f, for psi = (x*A, y*B) moving along Euler orbits."""
    i0, j0 = f.monomials()[0]
    w = psi.weights
    n = psi.limit
    A = divide_by_monomial(psi.phi1, 1, 0)
    B = divide_by_monomial(psi.phi2, 0, 1)
    return mul_trunc(A ** i0 if i0 else ONE, B ** j0 if j0 else ONE, w, n)


def normalize(f: Poly, u: Poly, w: Weights, N: Optional[int] = None) -> NormalizationResult:
    """Carry f*(1+u) to constant*f*(1+h_out) through the multiplier degree N."""
    require_finite(f, w)
    d = quasidegree(f, w)
    N = default_order(f, w) if N is None else N
    s = d - w.total
    c0 = 1 + u.constant_term()
    if c0 == 0:
        raise NonUnitError(f"1 + u vanishes at the origin for u = {u}")
    v = (u - u.constant_term()).scale(1 / c0).truncate(w, N)
    phi = JetDiffeo.identity(w, N)
    euler = VectorField.euler(w)
    steps = 0
    for m in quasidegrees_up_to(w, N):
        if m == 0 or m == s:
            continue
        component = v.component(w, m)
        if not component:
            continue
        alpha = component.scale(Fraction(1, s - m))
        X = euler.multiply(alpha)
        psi = flow_diffeo(X, N)
        psi_inverse = flow_diffeo(-X, N)
        numerator = mul_trunc(jacobian(psi), ONE + v, w, N)
        q = unit_divide(numerator, _multiplier_factor(f, psi), w, N)
        v = compose(q, psi_inverse.phi1, psi_inverse.phi2, w, N) - ONE
        phi = compose_diffeo(psi, phi)
        steps += 1
        logger.debug(f"normalize: removed degree {m} with alpha = {alpha}")
    h_out = v.component(w, s) if s > 0 else ZERO
    logger.info(f"normalized {f}*(1 + {u}) to {c0}*{f}*(1 + {h_out}) in {steps} steps")
    return NormalizationResult(h_out=h_out, phi=phi, constant=Fraction(c0), order=N, steps=steps)


def verify_normalization(f: Poly, u: Poly, result: NormalizationResult) -> PushforwardCheck:
    """Replay the defining relation of a normalization through N + d."""
    w = result.phi.weights
    d = quasidegree(f, w)
    target = (f * (ONE + result.h_out)).scale(result.constant)
    return check_pushforward(result.phi, f * (ONE + u), target, result.order + d)
