import unittest
import sys
import os
from fractions import Fraction

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from hypothesis import given

from errors import GermError, InfiniteCodimensionError
from linalg import EchelonSpan
from milnor_algebra import (
    graded_ideal_piece,
    milnor_data,
    reduce_mod_ideal,
    require_finite,
    resonant_monomials,
)
from poisson_calculus import PoissonGerm, VectorField, delta2
from qpoly import Monomial, Poly, Weights, monomials_of_degree, parse_poly
from strategies import PROPERTY, polys, quasihomogeneous_functions

P = parse_poly


def monomials(*pairs):
    return tuple(Monomial(i, j) for i, j in pairs)


def span_of(polys_, w, k):
    basis = monomials_of_degree(w, k)
    span = EchelonSpan(len(basis))
    for g in polys_:
        span.add([g.coefficient(m.i, m.j) for m in basis])
    return span, basis


class TestIdealPiece(unittest.TestCase):

    def test_whole_degree_one_for_morse(self):
        span, basis = span_of(graded_ideal_piece(P("x^2 + y^2"), Weights(1, 1), 1), Weights(1, 1), 1)
        self.assertEqual(len(span), len(basis))

    def test_empty_below_partials(self):
        self.assertEqual(graded_ideal_piece(P("x^3 + y^4"), Weights(4, 3), 0), [])

    def test_y4_in_d5_ideal(self):
        w = Weights(3, 2)
        span, basis = span_of(graded_ideal_piece(P("x^2*y + y^4"), w, 8), w, 8)
        self.assertIn([1 if m == Monomial(0, 4) else 0 for m in basis], span)


class TestMilnorData(unittest.TestCase):

    def test_morse(self):
        data = milnor_data(P("x^2 + y^2"), Weights(1, 1))
        self.assertEqual(data.c, 1)
        self.assertEqual(data.basis, monomials((0, 0)))

    def test_regular(self):
        data = milnor_data(P("x"), Weights(1, 1))
        self.assertEqual(data.c, 0)
        self.assertEqual(data.basis, ())

    def test_e6(self):
        data = milnor_data(P("x^3 + y^4"), Weights(4, 3))
        self.assertEqual(data.c, 6)
        self.assertEqual(data.basis, monomials((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (1, 2)))

    def test_d5_drops_top_power(self):
        data = milnor_data(P("x^2*y + y^4"), Weights(3, 2))
        self.assertEqual(data.c, 5)
        self.assertNotIn(Monomial(0, 4), data.basis)
        self.assertEqual(data.basis, monomials((0, 0), (0, 1), (1, 0), (0, 2), (0, 3)))

    def test_infinite(self):
        data = milnor_data(P("x^2"), Weights(1, 1))
        self.assertIsNone(data.c)
        self.assertFalse(data.is_finite)
        self.assertEqual(data.codimension_text(), "infinite")
        with self.assertRaises(InfiniteCodimensionError):
            require_finite(P("x^2"), Weights(1, 1))

    def test_requires_singular_germ(self):
        with self.assertRaises(GermError):
            milnor_data(P("x^2 + y^3"), Weights(1, 1))
        with self.assertRaises(GermError):
            milnor_data(P("1 + x"), Weights(1, 1))

    def test_milnor_numbers(self):
        cases = [
            ("x^2 + y^3", (3, 2), 2),
            ("x^2 - y^4", (2, 1), 3),
            ("x^2 + y^7", (7, 2), 6),
            ("x^2*y - y^5", (2, 1), 6),
            ("x^3 + x*y^3", (3, 2), 7),
            ("x^3 + y^5", (5, 3), 8),
        ]
        for text, (w1, w2), mu in cases:
            with self.subTest(f=text):
                self.assertEqual(milnor_data(P(text), Weights(w1, w2)).c, mu)


class TestReduceModIdeal(unittest.TestCase):

    def test_constant_is_reduced(self):
        nf, witness = reduce_mod_ideal(P("1"), P("x^2 + y^2"), Weights(1, 1))
        self.assertEqual(nf, P("1"))
        self.assertEqual((witness.p, witness.q), (Poly(), Poly()))

    def test_y4_witness(self):
        f = P("x^2*y + y^4")
        nf, witness = reduce_mod_ideal(P("y^4"), f, Weights(3, 2))
        self.assertEqual(nf, Poly())
        self.assertEqual(witness.p, P("x").scale(Fraction(-1, 8)))
        self.assertEqual(witness.q, P("1/4*y"))
        self.assertEqual(witness.expand(f), P("y^4"))

    def test_x2_witness(self):
        nf, witness = reduce_mod_ideal(P("x^2"), P("x^2 + y^2"), Weights(1, 1))
        self.assertEqual(nf, Poly())
        self.assertEqual((witness.p, witness.q), (P("1/2*x"), Poly()))

    def test_infinite_codimension(self):
        with self.assertRaises(InfiniteCodimensionError):
            reduce_mod_ideal(P("y"), P("x^2"), Weights(1, 1))


class TestResonantMonomials(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(resonant_monomials(Weights(1, 1), 2), [Monomial(0, 0)])
        self.assertEqual(resonant_monomials(Weights(3, 2), 6), [])
        self.assertEqual(resonant_monomials(Weights(3, 2), 9), [Monomial(0, 2)])
        self.assertEqual(resonant_monomials(Weights(1, 1), 1), [])


class TestMilnorProperties(unittest.TestCase):

    @PROPERTY
    @given(pair=quasihomogeneous_functions(), g=polys(max_exponent=4, max_terms=5))
    def test_witness_re_expands(self, pair, g):
        f, w = pair
        data = milnor_data(f, w)
        nf, witness = reduce_mod_ideal(g, f, w)
        self.assertEqual(nf + witness.expand(f), g)
        self.assertTrue(set(nf.monomials()) <= set(data.basis))

    @PROPERTY
    @given(pair=quasihomogeneous_functions(), g=polys(max_exponent=4, max_terms=5))
    def test_normal_form_is_fixed(self, pair, g):
        f, w = pair
        nf, _ = reduce_mod_ideal(g, f, w)
        again, witness = reduce_mod_ideal(nf, f, w)
        self.assertEqual(again, nf)
        self.assertEqual((witness.p, witness.q), (Poly(), Poly()))

    @PROPERTY
    @given(pair=quasihomogeneous_functions())
    def test_codimension_counts_graded_quotients(self, pair):
        f, w = pair
        data = milnor_data(f, w)
        total = 0
        for k in range(0, data.checked_through + w.top + 1):
            monomials = monomials_of_degree(w, k)
            if not monomials:
                continue
            span = EchelonSpan(len(monomials))
            for generator in graded_ideal_piece(f, w, k):
                span.add([generator.coefficient(m.i, m.j) for m in monomials])
            total += len(monomials) - len(span)
        self.assertEqual(total, data.c)

    @PROPERTY
    @given(pair=quasihomogeneous_functions(), a=polys(), b=polys())
    def test_coboundaries_lie_in_ideal(self, pair, a, b):
        f, w = pair
        g = delta2(PoissonGerm.create(f, w), VectorField(a, b, w)).g
        nf, witness = reduce_mod_ideal(g, f, w)
        self.assertEqual(nf, Poly())
        self.assertEqual(witness.expand(f), g)


if __name__ == '__main__':
    unittest.main()
