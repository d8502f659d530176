import unittest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from hypothesis import given
from hypothesis import strategies as st

from graded_oracle import crosscheck, default_cutoff, graded_cochain_dims, oracle_report, predicted_rows
from linalg import fraction_matrix, nullspace
from normal_forms import AdeLabel, catalog_germ, catalog_labels
from poisson_calculus import PoissonGerm, bivector_basis, delta2, field_basis, field_from_slot, poly_coordinates
from qpoly import Weights, parse_poly
from strategies import PROPERTY, quasihomogeneous_functions

P = parse_poly
W11 = Weights(1, 1)


class TestRows(unittest.TestCase):

    def test_morse_degree_zero(self):
        row = graded_cochain_dims(P("x^2 + y^2"), W11, 0)
        self.assertEqual(row.dimX, 4)
        self.assertEqual(row.rank_d2, 2)
        self.assertEqual(row.rank_d1, 0)
        self.assertEqual(row.h1, 2)

    def test_morse_lowest_bivector(self):
        row = graded_cochain_dims(P("x^2 + y^2"), W11, -2)
        self.assertEqual(row.dimV, 1)
        self.assertEqual(row.rank_d2_in, 0)
        self.assertEqual(row.h2, 1)

    def test_regular_lowest_field(self):
        row = graded_cochain_dims(P("x"), W11, -1)
        self.assertEqual(row.dimX, 2)
        self.assertEqual(row.h1, 1)


class TestOracleReport(unittest.TestCase):

    def test_regular(self):
        report = oracle_report(PoissonGerm.create(P("x"), W11), cutoff=6)
        self.assertEqual(report.totals, (1, 1, 0))
        self.assertTrue(report.stabilized)
        self.assertTrue(report.graded)

    def test_morse(self):
        report = oracle_report(PoissonGerm.create(P("x^2 + y^2"), W11), cutoff=8)
        self.assertEqual(report.totals, (1, 2, 2))
        self.assertTrue(report.stabilized)
        self.assertEqual(report.rows[0].k, -2)
        self.assertEqual(report.rows[-1].k, 8)

    def test_e8(self):
        germ = PoissonGerm.create(P("x^3 + y^5"), Weights(5, 3))
        report = oracle_report(germ, cutoff=30)
        self.assertEqual(report.totals, (1, 1, 8))

    def test_default_cutoff(self):
        self.assertEqual(default_cutoff(PoissonGerm.create(P("x^2*y + y^4"), Weights(3, 2))), 19)

    def test_threads_match_serial(self):
        germ = PoissonGerm.create(P("x^3 + y^4"), Weights(4, 3))
        self.assertEqual(oracle_report(germ, jobs=1), oracle_report(germ, jobs=3))

    def test_filtered_complex(self):
        germ = PoissonGerm.create(P("x^2*y + y^4"), Weights(3, 2), P("x"))
        report = oracle_report(germ)
        self.assertFalse(report.graded)
        self.assertEqual(report.rows, ())
        self.assertEqual(report.totals, (1, 2, 6))
        self.assertTrue(report.stabilized)

    def test_predicted_rows(self):
        predicted = predicted_rows(PoissonGerm.create(P("x^2 + y^2"), W11))
        self.assertEqual(predicted, {0: [1, 2, 1], -2: [0, 0, 1]})


class TestCrosscheck(unittest.TestCase):

    def test_morse(self):
        record = crosscheck(PoissonGerm.create(P("x^2 + y^2"), W11))
        self.assertEqual(record.theorem, (1, 2, 2))
        self.assertEqual(record.oracle, (1, 2, 2))
        self.assertTrue(record.agreed)
        self.assertIsNone(record.mismatch_degree)

    def test_a2(self):
        record = crosscheck(PoissonGerm.create(P("x^2 + y^3"), Weights(3, 2)))
        self.assertEqual(record.oracle, (1, 1, 2))
        self.assertTrue(record.agreed)

    def test_d5_discrepancy_note(self):
        label = AdeLabel.parse("D:5", lam=1)
        record = crosscheck(catalog_germ(label), label=label)
        self.assertTrue(record.agreed)
        self.assertEqual(record.oracle, (1, 2, 6))
        self.assertEqual(len(record.notes), 1)
        self.assertIn("(1, 2, 7)", record.notes[0])

    def test_catalog_sweep(self):
        for label in catalog_labels(lam=1):
            with self.subTest(label=str(label)):
                germ = catalog_germ(label, d_form=True)
                record = crosscheck(germ, label=label)
                report = record.theorem_report
                self.assertEqual(record.theorem, (1, report.r + 1, report.r + report.c))
                self.assertTrue(record.agreed, f"{label}: theorem {record.theorem} vs oracle {record.oracle}")
                self.assertTrue(record.stabilized)

    def test_multiplier_does_not_change_dimensions(self):
        for label in catalog_labels(lam=1):
            germ = catalog_germ(label, d_form=True)
            if not germ.h:
                continue
            with self.subTest(label=str(label)):
                cutoff = 2 * germ.d
                with_h = oracle_report(germ, cutoff).totals
                without_h = oracle_report(germ.without_multiplier(), cutoff).totals
                self.assertEqual(with_h, without_h)


def d2_kernel_dim(germ, k):
    """dim ker(delta2: X_k -> V_{k+s}) from an explicit nullspace."""
    w = germ.weights
    slots = field_basis(w, k)
    if not slots:
        return 0
    targets = bivector_basis(w, k + germ.s)
    columns = [poly_coordinates(delta2(germ, field_from_slot(slot, w)).g, targets) for slot in slots]
    matrix = fraction_matrix([[column[r] for column in columns] for r in range(len(targets))], len(slots))
    return len(nullspace(matrix))


class TestOracleProperties(unittest.TestCase):

    @PROPERTY
    @given(pair=quasihomogeneous_functions())
    def test_rank_nullity_per_row(self, pair):
        f, w = pair
        germ = PoissonGerm.create(f, w)
        for row in oracle_report(germ, cutoff=2 * germ.d).rows:
            with self.subTest(k=row.k):
                kernel = d2_kernel_dim(germ, row.k)
                self.assertEqual(kernel + row.rank_d2, row.dimX)
                self.assertLessEqual(row.rank_d1, kernel)
                self.assertEqual(row.h1, kernel - row.rank_d1)
                self.assertEqual(row.h0 + row.rank_d1_out, row.dimF)
                self.assertEqual(row.h2 + row.rank_d2_in, row.dimV)
                self.assertGreaterEqual(min(row.h0, row.h1, row.h2), 0)

    @PROPERTY
    @given(pair=quasihomogeneous_functions())
    def test_cohomology_concentrates(self, pair):
        f, w = pair
        germ = PoissonGerm.create(f, w)
        s = germ.s
        for row in oracle_report(germ).rows:
            if row.k != s:
                self.assertEqual(row.h1, 0, f"h1 at degree {row.k}")
            if row.k > 2 * s:
                self.assertEqual(row.h2, 0, f"h2 at degree {row.k}")

    @PROPERTY
    @given(pair=quasihomogeneous_functions(), extra=st.integers(min_value=1, max_value=3))
    def test_totals_stable_beyond_twice_degree(self, pair, extra):
        f, w = pair
        germ = PoissonGerm.create(f, w)
        cutoff = 2 * germ.d
        self.assertEqual(oracle_report(germ, cutoff).totals, oracle_report(germ, cutoff + extra).totals)


if __name__ == '__main__':
    unittest.main()
