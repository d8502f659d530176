"""Graded computations in the Jacobian ideal I_f = (f_x, f_y) and its quotient Q_f."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from errors import GermError, InfiniteCodimensionError, ZeroPolynomialError
from linalg import EchelonSpan, fraction_matrix, solve
from qpoly import ZERO, Axis, Monomial, Poly, Weights, derive, graded_components, is_quasihomogeneous, monomials_of_degree
from utils import logger


@dataclass(frozen=True)
class MilnorData:
    """Monomial basis u_1..u_c of Q_f; ``c is None`` means infinite codimension."""

    c: Optional[int]
    basis: Tuple[Monomial, ...]
    bound: int
    checked_through: int

    @property
    def is_finite(self) -> bool:
        return self.c is not None

    def codimension_text(self) -> str:
        return "infinite" if self.c is None else str(self.c)


@dataclass(frozen=True)
class IdealWitness:
    """Cofactors with g - normal_form = p*f_x + q*f_y."""

    p: Poly
    q: Poly

    def expand(self, f: Poly) -> Poly:
        return self.p * derive(f, Axis.X) + self.q * derive(f, Axis.Y)


def quasidegree(f: Poly, w: Weights) -> int:
    try:
        d = is_quasihomogeneous(f, w)
    except ZeroPolynomialError:
        d = None
    if d is None:
        raise GermError(f"{f} is not quasihomogeneous for weights ({w})")
    return d


def _generators(f: Poly, w: Weights, k: int) -> Tuple[List[Tuple[Axis, Monomial]], List[Poly]]:
    d = quasidegree(f, w)
    fx, fy = derive(f, Axis.X), derive(f, Axis.Y)
    slots = []
    polys = []
    for axis, partial, shift in ((Axis.X, fx, w.w1), (Axis.Y, fy, w.w2)):
        if not partial:
            continue
        for m in monomials_of_degree(w, k - (d - shift)):
            slots.append((axis, m))
            polys.append(Poly.monomial(m.i, m.j) * partial)
    return slots, polys


def graded_ideal_piece(f: Poly, w: Weights, k: int) -> List[Poly]:
    """Spanning set of the quasidegree-k part of I_f: m*f_x and m*f_y of that degree."""
    return _generators(f, w, k)[1]


@lru_cache(maxsize=256)
def milnor_data(f: Poly, w: Weights) -> MilnorData:
    """Greedy monomial complement of I_f, degree by degree up to max(bound, 0) + max(w)."""
    d = quasidegree(f, w)
    if d <= 0 or f.constant_term():
        raise GermError(f"milnor_data needs f(0,0) = 0 and positive quasidegree, got {f}")
    bound = 2 * (d - w.total)
    top = max(bound, 0) + w.top
    basis: List[Monomial] = []
    for k in range(0, top + 1):
        monomials = monomials_of_degree(w, k)
        if not monomials:
            continue
        span = EchelonSpan(len(monomials))
        for generator in graded_ideal_piece(f, w, k):
            span.add([generator.coefficient(m.i, m.j) for m in monomials])
        ideal_rank = len(span)
        for index, m in enumerate(monomials):
            unit = [0] * len(monomials)
            unit[index] = 1
            if span.add(unit):
                if k > bound:
                    logger.info(f"Q_f of {f} is infinite-dimensional: {m.to_text() or '1'} survives at degree {k}")
                    return MilnorData(None, tuple(basis), bound, k)
                basis.append(m)
        logger.debug(f"milnor degree {k}: {len(monomials)} monomials, ideal rank {ideal_rank}")
    logger.info(f"Q_f of {f} has codimension {len(basis)}")
    return MilnorData(len(basis), tuple(basis), bound, top)


def require_finite(f: Poly, w: Weights) -> MilnorData:
    data = milnor_data(f, w)
    if not data.is_finite:
        raise InfiniteCodimensionError(f"{f} has infinite codimension (checked through degree {data.checked_through})")
    return data


def reduce_mod_ideal(g: Poly, f: Poly, w: Weights) -> Tuple[Poly, IdealWitness]:
    """Write g = normal_form + p*f_x + q*f_y with normal_form in span(u_1..u_c)."""
    data = require_finite(f, w)
    normal_form = ZERO
    p_terms = {}
    q_terms = {}
    for k, part in graded_components(g, w).items():
        rows = monomials_of_degree(w, k)
        slots, generators = _generators(f, w, k)
        residues = [u for u in data.basis if u.degree(w) == k]
        columns = generators + [Poly.monomial(u.i, u.j) for u in residues]
        if not columns:
            raise RuntimeError(f"degree {k} of {g} has no ideal generators and no basis monomials")
        matrix = fraction_matrix([[column.coefficient(m.i, m.j) for column in columns] for m in rows])
        solution = solve(matrix, [part.coefficient(m.i, m.j) for m in rows])
        if solution is None:
            raise RuntimeError(f"degree {k} of {g} is not spanned by I_f and the monomial basis")
        for (axis, m), value in zip(slots, solution):
            if value:
                target = p_terms if axis is Axis.X else q_terms
                target[m] = target.get(m, Fraction(0)) + value
        for u, value in zip(residues, solution[len(slots):]):
            if value:
                normal_form = normal_form + Poly.monomial(u.i, u.j, value)
    return normal_form, IdealWitness(Poly(p_terms), Poly(q_terms))


def resonant_monomials(w: Weights, d: int) -> List[Monomial]:
    """Monomials e_1..e_r of quasidegree d - w1 - w2."""
    return monomials_of_degree(w, d - w.total)
