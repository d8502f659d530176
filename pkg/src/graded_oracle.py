"""Brute-force cohomology of the Poisson complex by exact ranks.

For Pi0 the complex splits into graded rows; for Pi = f(1+h)Dx^Dy it is only
filtered, so the truncated quotient complex is used instead and totals are
compared at two cutoffs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from cohomology_bases import CohomologyReport, cohomology_report
from linalg import fraction_matrix, rank
from milnor_algebra import require_finite, resonant_monomials
from normal_forms import AdeLabel, printed_cohomology
from poisson_calculus import (
    PoissonGerm,
    bivector_basis,
    bivector_basis_up_to,
    delta1,
    delta2,
    field_basis,
    field_basis_up_to,
    field_coordinates,
    field_from_slot,
    function_basis,
    function_basis_up_to,
    poly_coordinates,
)
from qpoly import Poly, Weights
from utils import logger


@dataclass(frozen=True)
class GradedDimsRow:
    """Dimensions and ranks around the degree-k pieces F_k, X_k, V_k of the Pi0 complex.

    rank_d1: F_{k-s} -> X_k, rank_d2: X_k -> V_{k+s},
    rank_d1_out: F_k -> X_{k+s}, rank_d2_in: X_{k-s} -> V_k.
    """

    k: int
    dimF: int
    dimX: int
    dimV: int
    rank_d1: int
    rank_d2: int
    rank_d1_out: int
    rank_d2_in: int
    h0: int
    h1: int
    h2: int


@dataclass(frozen=True)
class OracleReport:
    rows: Tuple[GradedDimsRow, ...]
    cutoff: int
    totals: Tuple[int, int, int]
    stabilized: bool
    graded: bool = True
    margin: int = 0


@dataclass(frozen=True)
class CrosscheckRecord:
    theorem: Tuple[int, int, int]
    oracle: Tuple[int, int, int]
    agree: Tuple[bool, bool, bool]
    mismatch_degree: Optional[int]
    stabilized: bool
    notes: Tuple[str, ...] = field(default_factory=tuple)
    theorem_report: Optional[CohomologyReport] = field(default=None, compare=False, repr=False)
    oracle_report: Optional[OracleReport] = field(default=None, compare=False, repr=False)

    @property
    def agreed(self) -> bool:
        return all(self.agree)


def default_cutoff(germ: PoissonGerm) -> int:
    return 2 * germ.d + germ.weights.top


def _rank_of_images(images: Sequence[Sequence]) -> int:
    if not images:
        return 0
    return rank(fraction_matrix([list(image) for image in images]))


def _d1_rank(germ: PoissonGerm, k: int) -> int:
    """rank of delta1: F_k -> X_{k+s} for Pi0."""
    w = germ.weights
    slots = field_basis(w, k + germ.s)
    images = [field_coordinates(delta1(germ, Poly.monomial(m.i, m.j)), slots) for m in function_basis(w, k)]
    return _rank_of_images(images)


def _d2_rank(germ: PoissonGerm, k: int) -> int:
    """rank of delta2: X_k -> V_{k+s} for Pi0."""
    w = germ.weights
    targets = bivector_basis(w, k + germ.s)
    images = [poly_coordinates(delta2(germ, field_from_slot(slot, w)).g, targets) for slot in field_basis(w, k)]
    return _rank_of_images(images)


def graded_cochain_dims(f: Poly, w: Weights, k: int) -> GradedDimsRow:
    """Row k of the graded complex of Pi0 = f*Dx^Dy."""
    germ = PoissonGerm.create(f, w)
    s = germ.s
    dimF = len(function_basis(w, k))
    dimX = len(field_basis(w, k))
    dimV = len(bivector_basis(w, k))
    rank_d1 = _d1_rank(germ, k - s)
    rank_d2 = _d2_rank(germ, k)
    rank_d1_out = _d1_rank(germ, k)
    rank_d2_in = _d2_rank(germ, k - s)
    row = GradedDimsRow(
        k=k,
        dimF=dimF,
        dimX=dimX,
        dimV=dimV,
        rank_d1=rank_d1,
        rank_d2=rank_d2,
        rank_d1_out=rank_d1_out,
        rank_d2_in=rank_d2_in,
        h0=dimF - rank_d1_out,
        h1=dimX - rank_d2 - rank_d1,
        h2=dimV - rank_d2_in,
    )
    logger.debug(f"oracle row {k}: {row}")
    return row


def _graded_rows(germ: PoissonGerm, degrees: List[int], jobs: int) -> List[GradedDimsRow]:
    f, w = germ.f, germ.weights
    if jobs > 1 and len(degrees) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(lambda k: graded_cochain_dims(f, w, k), degrees))
    return [graded_cochain_dims(f, w, k) for k in degrees]


def _truncated_totals(germ: PoissonGerm, cutoff: int) -> Tuple[int, int, int]:
    """Cohomology of F^{<=K} -> X^{<=K+s} -> V^{<=K+2s} for the filtered complex of Pi."""
    w = germ.weights
    s = germ.s
    functions = function_basis_up_to(w, cutoff)
    slots = field_basis_up_to(w, cutoff + s)
    targets = bivector_basis_up_to(w, cutoff + 2 * s)
    d1_images = [
        field_coordinates(delta1(germ, Poly.monomial(m.i, m.j), cutoff + s), slots) for m in functions
    ]
    d2_images = [
        poly_coordinates(delta2(germ, field_from_slot(slot, w), cutoff + 2 * s).g, targets) for slot in slots
    ]
    rank_d1 = _rank_of_images(d1_images)
    rank_d2 = _rank_of_images(d2_images)
    totals = (len(functions) - rank_d1, len(slots) - rank_d2 - rank_d1, len(targets) - rank_d2)
    logger.debug(f"truncated complex at cutoff {cutoff}: ranks ({rank_d1}, {rank_d2}), totals {totals}")
    return totals


def oracle_report(
    germ: PoissonGerm,
    cutoff: Optional[int] = None,
    margin: Optional[int] = None,
    jobs: int = 1,
) -> OracleReport:
    """Oracle cohomology dimensions of the germ's complex up to ``cutoff``."""
    w = germ.weights
    cutoff = default_cutoff(germ) if cutoff is None else cutoff
    margin = w.top if margin is None else margin
    s = germ.s
    if germ.is_quasihomogeneous_structure:
        degrees = list(range(-w.total, cutoff + margin + 1))
        all_rows = _graded_rows(germ, degrees, jobs)
        rows = tuple(row for row in all_rows if row.k <= cutoff)
        totals = (sum(r.h0 for r in rows), sum(r.h1 for r in rows), sum(r.h2 for r in rows))
        stabilized = all(
            (row.k <= cutoff or (row.h0, row.h1, row.h2) == (0, 0, 0))
            and (row.k <= s or row.h1 == 0)
            and (row.k <= 2 * s or row.h2 == 0)
            for row in all_rows
        )
        report = OracleReport(rows, cutoff, totals, stabilized, graded=True, margin=margin)
    else:
        totals = _truncated_totals(germ, cutoff)
        stabilized = _truncated_totals(germ, cutoff + margin) == totals
        report = OracleReport((), cutoff, totals, stabilized, graded=False, margin=margin)
    logger.info(f"oracle totals for {germ.F} at cutoff {cutoff}: {report.totals} (stabilized: {report.stabilized})")
    return report


def predicted_rows(germ: PoissonGerm) -> dict:
    """Where the theorem puts each class: {k: [h0, h1, h2]}."""
    w = germ.weights
    data = require_finite(germ.f, w)
    r = len(resonant_monomials(w, germ.d))
    predicted: dict = {}

    def bump(k: int, space: int, amount: int = 1):
        predicted.setdefault(k, [0, 0, 0])[space] += amount

    bump(0, 0)
    bump(germ.s, 1, r + 1)
    if r:
        bump(2 * germ.s, 2, r)
    for u in data.basis:
        bump(u.degree(w) - w.total, 2)
    return predicted


def crosscheck(
    germ: PoissonGerm,
    cutoff: Optional[int] = None,
    label: Optional[AdeLabel] = None,
    jobs: int = 1,
    margin: Optional[int] = None,
) -> CrosscheckRecord:
    """Compare the theorem-level dimensions with the oracle; disagreement is data."""
    theorem = cohomology_report(germ)
    oracle = oracle_report(germ, cutoff, margin=margin, jobs=jobs)
    agree = tuple(a == b for a, b in zip(theorem.totals, oracle.totals))
    mismatch_degree = None
    if oracle.graded:
        predicted = predicted_rows(germ)
        for row in oracle.rows:
            if [row.h0, row.h1, row.h2] != predicted.get(row.k, [0, 0, 0]):
                mismatch_degree = row.k
                break
    notes: List[str] = []
    if label is not None:
        claim = printed_cohomology(label)
        if claim is not None and claim != oracle.totals:
            notes.append(
                f"printed dimensions {claim} for {label} differ from computed {oracle.totals}"
            )
            logger.warning(notes[-1])
    if not all(agree):
        logger.warning(f"theorem {theorem.totals} and oracle {oracle.totals} disagree for {germ.F}")
    return CrosscheckRecord(
        theorem=theorem.totals,
        oracle=oracle.totals,
        agree=agree,
        mismatch_degree=mismatch_degree,
        stabilized=oracle.stabilized,
        notes=tuple(notes),
        theorem_report=theorem,
        oracle_report=oracle,
    )
