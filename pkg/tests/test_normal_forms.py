import unittest
import sys
import os
import random
from fractions import Fraction

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from hypothesis import given
from hypothesis import strategies as st

from errors import ConstantTermError, InvalidLabelError, NonUnitError, ResonanceError
from milnor_algebra import milnor_data, resonant_monomials
from normal_forms import (
    AdeLabel,
    catalog,
    catalog_d_form,
    catalog_germ,
    catalog_labels,
    check_pushforward,
    default_order,
    is_as_printed,
    normalize,
    printed_cohomology,
    solve_W,
    solve_homological,
    verify_normalization,
)
from poisson_calculus import JetDiffeo, VectorField
from qpoly import Poly, Weights, is_quasihomogeneous, monomials_of_degree, parse_poly
from strategies import PROPERTY, polys, weights

P = parse_poly
W11 = Weights(1, 1)
W32 = Weights(3, 2)


class TestLabels(unittest.TestCase):

    def test_parse(self):
        label = AdeLabel.parse("D:5", lam=1)
        self.assertEqual((label.family, label.k, label.sign, label.lam), ("D", 5, 1, Fraction(1)))
        self.assertEqual(str(label), "D5")
        self.assertEqual(AdeLabel.parse("A:3:-").sign, -1)
        self.assertEqual(str(AdeLabel.parse("a:3:-")), "A3-")

    def test_invalid(self):
        for text in ("E:9", "A:0", "D:3", "B:2", "A:2:-", "D:5:-", "A:3:x", "A"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidLabelError):
                    AdeLabel.parse(text)

    def test_complex_field_drops_sign(self):
        self.assertEqual(AdeLabel.parse("A:3:-", field="C").sign, 1)

    def test_catalog_labels(self):
        names = [str(label) for label in catalog_labels()]
        self.assertEqual(
            names,
            ["A1+", "A1-", "A2", "A3+", "A3-", "A4", "A5+", "A5-", "A6", "D5", "D6+", "D6-", "E6", "E7", "E8"],
        )


class TestCatalog(unittest.TestCase):

    def test_e6(self):
        germ = catalog(AdeLabel("E", 6))
        self.assertEqual((germ.f, germ.h, germ.weights, germ.d), (P("x^3 + y^4"), Poly(), Weights(4, 3), 12))

    def test_d5(self):
        germ = catalog(AdeLabel("D", 5, lam=1))
        self.assertEqual((germ.f, germ.h, germ.weights, germ.d), (P("x^2*y + y^4"), P("x"), W32, 8))

    def test_a1_absorbs_modulus(self):
        germ = catalog(AdeLabel("A", 1, lam=5))
        self.assertEqual((germ.f, germ.h, germ.weights, germ.d), (P("x^2 + y^2"), Poly(), W11, 2))

    def test_modulus_positions(self):
        self.assertEqual(catalog(AdeLabel("A", 3, -1, 2)).h, P("2*y"))
        self.assertEqual(catalog(AdeLabel("E", 7, lam=3)).h, P("3*y^2"))
        self.assertEqual(catalog(AdeLabel("D", 5, lam=0)).h, Poly())

    def test_d_even_forms(self):
        label = AdeLabel("D", 6, -1, 1)
        self.assertTrue(is_as_printed(label))
        with self.assertLogs("Poisson2", level="WARNING"):
            printed = catalog(label)
        self.assertEqual(printed.f, P("x^2 - y^6"))
        d_form = catalog_d_form(label)
        self.assertEqual((d_form.f, d_form.h, d_form.weights), (P("x^2*y - y^5"), P("y^2"), Weights(2, 1)))
        self.assertEqual(catalog_germ(label, d_form=True), d_form)
        with self.assertRaises(InvalidLabelError):
            catalog_d_form(AdeLabel("D", 5))

    def test_consistency(self):
        for label in catalog_labels(lam=1):
            germ = catalog_germ(label, d_form=True)
            with self.subTest(label=str(label)):
                self.assertEqual(is_quasihomogeneous(germ.f, germ.weights), germ.d)
                if germ.h:
                    self.assertEqual(is_quasihomogeneous(germ.h, germ.weights), germ.s)
                if (label.family == "A" and label.k % 2 == 0) or label.k in (6, 8) and label.family == "E":
                    self.assertEqual(resonant_monomials(germ.weights, germ.d), [])
                self.assertEqual(milnor_data(germ.f, germ.weights).c, label.k)

    def test_printed_cohomology(self):
        self.assertEqual(printed_cohomology(AdeLabel("A", 1)), (1, 2, 2))
        self.assertEqual(printed_cohomology(AdeLabel("D", 7)), (1, 2, 9))
        self.assertIsNone(printed_cohomology(AdeLabel("E", 8)))


class TestHomologicalEquations(unittest.TestCase):

    def test_solve_W(self):
        self.assertEqual(solve_W(P("x"), W11), P("x"))
        self.assertEqual(solve_W(P("x^2*y"), W11), P("1/3*x^2*y"))
        self.assertEqual(solve_W(P("3*x + 2*x*y^2"), Weights(2, 1)), P("3/2*x + 1/2*x*y^2"))
        with self.assertRaises(ConstantTermError):
            solve_W(P("1 + x"), W11)

    def test_solve_homological(self):
        self.assertEqual(solve_homological(P("x^3"), 2, W11), P("x^3"))
        self.assertEqual(solve_homological(P("y"), -1, Weights(2, 1)), P("1/2*y"))
        with self.assertRaises(ResonanceError) as ctx:
            solve_homological(P("x"), 1, W11)
        self.assertEqual(ctx.exception.degree, 1)
        with self.assertRaises(ResonanceError):
            solve_homological(P("y"), 1, Weights(2, 1))


class TestHomologicalProperties(unittest.TestCase):

    @PROPERTY
    @given(T=polys(), w=weights)
    def test_solve_W_residual(self, T, w):
        T = T - T.constant_term()
        W = VectorField.euler(w)
        self.assertEqual(W.apply(solve_W(T, w)), T)

    @PROPERTY
    @given(T=polys(), w=weights, lambda0=st.integers(min_value=-3, max_value=6))
    def test_solve_homological_residual(self, T, w, lambda0):
        W = VectorField.euler(w)
        if T.component(w, lambda0):
            with self.assertRaises(ResonanceError):
                solve_homological(T, lambda0, w)
        else:
            gamma = solve_homological(T, lambda0, w)
            self.assertEqual(W.apply(gamma) - gamma.scale(lambda0), T)


class TestNormalizer(unittest.TestCase):

    def test_already_normal(self):
        f = P("x^2*y + y^4")
        result = normalize(f, P("x"), W32, 12)
        self.assertEqual(result.h_out, P("x"))
        self.assertTrue(result.phi.is_identity())
        self.assertEqual(result.constant, 1)
        self.assertEqual(result.steps, 0)

    def test_morse_cubic(self):
        f = P("x^2 + y^2")
        result = normalize(f, P("y^3"), W11, 8)
        self.assertEqual(result.h_out, Poly())
        self.assertGreaterEqual(result.steps, 1)
        # first step flows along alpha*W with alpha = -y^3/3
        self.assertEqual(result.phi.phi1.truncate(W11, 4), P("x - 1/3*x*y^3"))
        self.assertTrue(verify_normalization(f, P("y^3"), result).passed)

    def test_d5(self):
        f = P("x^2*y + y^4")
        u = P("x + y^3")
        result = normalize(f, u, W32)
        self.assertEqual(result.order, default_order(f, W32))
        self.assertEqual(result.h_out, P("x"))
        check = verify_normalization(f, u, result)
        self.assertTrue(check.passed)
        self.assertEqual(check.checked_through, result.order + 8)

    def test_constant_is_reported(self):
        f = P("x^2 + y^2")
        result = normalize(f, P("2 + x^2"), W11, 6)
        self.assertEqual(result.constant, 3)
        self.assertTrue(verify_normalization(f, P("2 + x^2"), result).passed)

    def test_idempotent(self):
        f = P("x^3 + x*y^3")
        w = W32
        first = normalize(f, P("y^2 + x^2 - x*y"), w, 14)
        second = normalize(f, first.h_out, w, 14)
        self.assertEqual(second.h_out, first.h_out)
        self.assertTrue(second.phi.is_identity())

    def test_non_unit(self):
        with self.assertRaises(NonUnitError):
            normalize(P("x^2 + y^2"), P("-1 + x"), W11, 4)

    def test_check_pushforward(self):
        identity = JetDiffeo.identity(W11, 4)
        f = P("x^2 + y^2")
        self.assertTrue(check_pushforward(identity, f, f, 6).passed)
        scaling = JetDiffeo(P("2*x"), P("y"), W11, 4)
        check = check_pushforward(scaling, P("x"), P("x"), 5)
        self.assertTrue(check.passed)
        self.assertIsNone(check.residual_order)
        failing = check_pushforward(identity, f, f + P("x^3"), 6)
        self.assertFalse(failing.passed)
        self.assertEqual(failing.residual_order, 3)

    def test_random_perturbations_of_catalog(self):
        rng = random.Random(20260118)
        for label in catalog_labels(lam=1):
            germ = catalog_germ(label, d_form=True)
            w, s = germ.weights, germ.s
            N = germ.d + w.top
            higher = [m for k in range(max(s, 0) + 1, N + 1) for m in monomials_of_degree(w, k)]
            for trial in range(20):
                chosen = rng.sample(higher, min(3, len(higher)))
                R = Poly({m: rng.randint(-2, 2) for m in chosen})
                u = germ.h + R
                with self.subTest(label=str(label), trial=trial, u=str(u)):
                    result = normalize(germ.f, u, w, N)
                    self.assertEqual(result.h_out, germ.h)
                    self.assertTrue(verify_normalization(germ.f, u, result).passed)


if __name__ == '__main__':
    unittest.main()
