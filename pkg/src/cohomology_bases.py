"""Explicit bases of H^0, H^1, H^2 and constructive reduction of cocycles.

H^1 is spanned by (1+h)*H_f and (1+h)*e_i*W, H^2 by e_i*f and u_j, where
e_1..e_r are the monomials of degree s = d - w1 - w2 and u_1..u_c a
monomial basis of the Milnor algebra of f.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from errors import NotACocycleError
from linalg import fraction_matrix, solve
from milnor_algebra import reduce_mod_ideal, require_finite, resonant_monomials
from poisson_calculus import (
    Bivector,
    PoissonGerm,
    VectorField,
    coboundary2,
    delta1,
    delta2,
    divergence,
    field_basis,
    field_coordinates,
    function_basis,
    hamiltonian_field,
)
from qpoly import ONE, ZERO, Poly, unit_divide
from utils import logger


class Provenance(Enum):
    THEOREM = "THEOREM"
    ORACLE = "ORACLE"


@dataclass(frozen=True)
class CohomologyFragment:
    """Dimension and representatives of one cohomology space."""

    degree: int
    dim: int
    basis: tuple


@dataclass(frozen=True)
class CohomologyReport:
    h0_dim: int
    h1_dim: int
    h2_dim: int
    h1_basis: Tuple[VectorField, ...]
    h2_basis: Tuple[Bivector, ...]
    r: int
    c: int
    provenance: Provenance

    @property
    def totals(self) -> Tuple[int, int, int]:
        return (self.h0_dim, self.h1_dim, self.h2_dim)


@dataclass(frozen=True)
class CocycleReduction:
    """input = sum(coords[i] * basis[i]) + delta(witness) + terms of order > residual_order."""

    coords: Tuple[Fraction, ...]
    witness: Union[Poly, VectorField]
    residual_order: int


def h0(germ: PoissonGerm) -> CohomologyFragment:
    """Casimirs: F*H_g = 0 forces g to be constant."""
    require_finite(germ.f, germ.weights)
    return CohomologyFragment(0, 1, (ONE,))


def h1_basis(germ: PoissonGerm) -> CohomologyFragment:
    w = germ.weights
    require_finite(germ.f, w)
    unit = germ.unit
    euler = VectorField.euler(w)
    representatives = [hamiltonian_field(germ.f, w).multiply(unit)]
    for e in resonant_monomials(w, germ.d):
        representatives.append(euler.multiply(Poly.monomial(e.i, e.j) * unit))
    return CohomologyFragment(1, len(representatives), tuple(representatives))


def h2_basis(germ: PoissonGerm) -> CohomologyFragment:
    """e_i*f then u_j; the same family serves Pi0 and Pi."""
    w = germ.weights
    data = require_finite(germ.f, w)
    representatives = [Bivector(Poly.monomial(e.i, e.j) * germ.f, w) for e in resonant_monomials(w, germ.d)]
    representatives.extend(Bivector(Poly.monomial(u.i, u.j), w) for u in data.basis)
    return CohomologyFragment(2, len(representatives), tuple(representatives))


def cohomology_report(germ: PoissonGerm) -> CohomologyReport:
    data = require_finite(germ.f, germ.weights)
    r = len(resonant_monomials(germ.weights, germ.d))
    zeroth, first, second = h0(germ), h1_basis(germ), h2_basis(germ)
    logger.info(f"cohomology of {germ.F}: ({zeroth.dim}, {first.dim}, {second.dim}) with r={r}, c={data.c}")
    return CohomologyReport(
        h0_dim=zeroth.dim,
        h1_dim=first.dim,
        h2_dim=second.dim,
        h1_basis=first.basis,
        h2_basis=second.basis,
        r=r,
        c=data.c,
        provenance=Provenance.THEOREM,
    )


# ---------------------------------------------------------------------------
# H^1

def _reduce_h1_graded(germ: PoissonGerm, X: VectorField, N: int) -> CocycleReduction:
    w = germ.weights
    s = germ.s
    quasi = germ.without_multiplier()
    euler = VectorField.euler(w)
    resonant = [euler.multiply(Poly.monomial(e.i, e.j)) for e in resonant_monomials(w, germ.d)]
    classes = [hamiltonian_field(germ.f, w)] + resonant
    coords = [Fraction(0)] * len(classes)
    witness = ZERO
    truncated = X.truncate(N)
    for k, part in truncated.components().items():
        if delta2(quasi, part):
            raise NotACocycleError(k)
    for k, part in truncated.components().items():
        slots = field_basis(w, k)
        functions = function_basis(w, k - s)
        columns = [delta1(quasi, Poly.monomial(m.i, m.j)) for m in functions]
        if k == s:
            columns = classes + columns
        if not columns:
            raise RuntimeError(f"cocycle component of degree {k} has nothing to reduce against")
        matrix = fraction_matrix([field_coordinates(column, slots) for column in columns]).T
        solution = solve(matrix, field_coordinates(part, slots))
        if solution is None:
            raise RuntimeError(f"cocycle component of degree {k} is not a coboundary")
        if k == s:
            coords = solution[: len(classes)]
            solution = solution[len(classes):]
        for m, value in zip(functions, solution):
            if value:
                witness = witness + Poly.monomial(m.i, m.j, value)
        logger.debug(f"h1 reduction: degree {k} solved with {len(columns)} unknowns")
    return CocycleReduction(tuple(coords), witness, N)


def reduce_cocycle_h1(germ: PoissonGerm, X: VectorField, N: int) -> CocycleReduction:
    """Coordinates of [X] on the H^1 basis and g with X - sum - delta1(g) of order > N."""
    w = germ.weights
    require_finite(germ.f, w)
    if germ.is_quasihomogeneous_structure:
        return _reduce_h1_graded(germ, X, N)
    # delta2 of (1+h)Y is (1+h)^2 times the Pi0 coboundary of Y, delta1 scales by (1+h)
    unit = germ.unit
    transported = VectorField(
        unit_divide(X.a, unit, w, N + w.w1),
        unit_divide(X.b, unit, w, N + w.w2),
        w,
    )
    return _reduce_h1_graded(germ, transported, N)


def h1_residual(germ: PoissonGerm, X: VectorField, reduction: CocycleReduction) -> VectorField:
    residual = X - delta1(germ, reduction.witness)
    for coeff, representative in zip(reduction.coords, h1_basis(germ).basis):
        residual = residual - representative.scale(coeff)
    return residual


# ---------------------------------------------------------------------------
# H^2

def _reduce_h2_graded(germ: PoissonGerm, g: Poly, N: int) -> Tuple[List[Fraction], VectorField]:
    """g = sum(coords * basis) + delta2_Pi0(Y) through bivector degree N."""
    w = germ.weights
    s = germ.s
    data = require_finite(germ.f, w)
    resonant = resonant_monomials(w, germ.d)
    normal_form, witness = reduce_mod_ideal(g.truncate(w, N + w.total), germ.f, w)
    X = VectorField(witness.p, witness.q, w)
    euler = VectorField.euler(w)
    Y = VectorField.zero(w)
    mu = [Fraction(0)] * len(resonant)
    for m, part in X.components().items():
        div = divergence(part)
        if m == s:
            for index, e in enumerate(resonant):
                mu[index] = div.coefficient(e.i, e.j)
            Y = Y + part - euler.multiply(div).scale(Fraction(1, germ.d))
        else:
            Y = Y + part + euler.multiply(div).scale(Fraction(1, s - m))
    coords = mu + [normal_form.coefficient(u.i, u.j) for u in data.basis]
    return coords, Y


def reduce_cocycle_h2(germ: PoissonGerm, P: Bivector, N: int) -> CocycleReduction:
    """Coordinates on {e_i*f, u_j} and Y with P - sum - delta2(Y) of order > N."""
    w = germ.weights
    require_finite(germ.f, w)
    if germ.is_quasihomogeneous_structure:
        coords, Y = _reduce_h2_graded(germ, P.g, N)
        return CocycleReduction(tuple(coords), Y, N)
    s = germ.s
    if s == 0:
        # h is a constant c: delta2_Pi = (1+c) * delta2_Pi0
        unit = germ.unit.constant_term()
        coords, Y = _reduce_h2_graded(germ, P.g.scale(1 / unit), N)
        return CocycleReduction(tuple(value * unit for value in coords), Y, N)
    fh = germ.f * germ.h
    remainder = P.g.truncate(w, N + w.total)
    total: Optional[List[Fraction]] = None
    Y = VectorField.zero(w)
    steps = 0
    while remainder:
        coords, Y_k = _reduce_h2_graded(germ, remainder, N)
        total = coords if total is None else [a + b for a, b in zip(total, coords)]
        Y = Y + Y_k
        # the remainder gains s in order at every step
        remainder = -coboundary2(fh, Y_k, N).g
        steps += 1
    logger.debug(f"h2 reduction under Pi converged after {steps} absorption steps")
    if total is None:
        total = [Fraction(0)] * h2_basis(germ).dim
    return CocycleReduction(tuple(total), Y, N)


def h2_residual(germ: PoissonGerm, P: Bivector, reduction: CocycleReduction) -> Bivector:
    residual = P - delta2(germ, reduction.witness)
    for coeff, representative in zip(reduction.coords, h2_basis(germ).basis):
        residual = residual - representative.scale(coeff)
    return residual
