import itertools
import unittest
from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from balance import determinant_rows, even_m_witness, is_balanced, is_uniform
from canonical import LinearMap2, apply_map
from common.errors import NotBalanced, OddM
from geometry import Configuration, roots_of_unity
from search import perturb, random_invertible

SQUARE = Configuration.of([(1, 0), (0, 1), (-1, 0), (0, -1)])
TRIANGLE = Configuration.of([(1, 0), (0, 1), (-1, -1)])

nonzero = st.tuples(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3)).filter(lambda p: p != (0, 0))
points = st.lists(nonzero, min_size=1, max_size=6)


class TestBalanced(unittest.TestCase):
    def test_roots_of_unity_are_balanced_and_uniform(self):
        for m in (3, 5, 7, 9, 11):
            u = roots_of_unity(m)
            self.assertTrue(is_balanced(u).balanced, m)
            self.assertTrue(is_uniform(u).uniform, m)

    def test_square_is_balanced_but_not_uniform(self):
        report = is_balanced(SQUARE)
        self.assertTrue(report.balanced)
        self.assertIsNone(report.witness)
        uniform = is_uniform(SQUARE)
        self.assertFalse(uniform.uniform)
        self.assertEqual(uniform.witness, (0, 2))

    def test_exact_rows(self):
        rows = determinant_rows(SQUARE)
        self.assertEqual(rows[0], (1, 0, -1))
        self.assertEqual(rows[1], (-1, 1, 0))

    def test_exact_witness(self):
        report = is_balanced(Configuration.of([(1, 0), (0, 1), (1, 1)]))
        self.assertFalse(report.balanced)
        self.assertEqual(report.witness, (0, Fraction(1)))

    def test_exact_triangle(self):
        self.assertTrue(is_balanced(TRIANGLE).balanced)
        self.assertTrue(is_uniform(TRIANGLE).uniform)

    def test_single_vector_is_trivially_balanced(self):
        self.assertTrue(is_balanced(Configuration.of([(1, 2)])).balanced)

    def test_float_witness_names_the_unmatched_value(self):
        c = Configuration.of([(1.0, 0.0), (0.0, 1.0), (0.0, -2.0)])
        report = is_balanced(c)
        self.assertFalse(report.balanced)
        i, x = report.witness
        self.assertEqual(i, 0)
        self.assertAlmostEqual(abs(x), 1.0)

    def test_perturbation_below_tolerance_keeps_balance(self):
        self.assertTrue(is_balanced(perturb(roots_of_unity(5), 1e-15, seed=3)).balanced)

    def test_perturbation_breaks_balance(self):
        for seed in range(100):
            self.assertFalse(is_balanced(perturb(roots_of_unity(5), 0.05, seed), tol=1e-9).balanced, seed)

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1), m=st.sampled_from([3, 5, 7, 9]))
    def test_balance_is_invariant_under_linear_maps(self, seed, m):
        image = apply_map(random_invertible(seed), roots_of_unity(m))
        self.assertTrue(is_balanced(image).balanced)
        self.assertTrue(is_uniform(image).uniform)

    def test_verdict_ignores_the_order(self):
        for order in itertools.permutations(range(4)):
            self.assertTrue(is_balanced(SQUARE.permuted(order)).balanced, order)

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_verdict_is_invariant_under_permutations(self, data):
        c = Configuration.of(data.draw(points))
        order = data.draw(st.permutations(range(c.m)))
        self.assertEqual(is_balanced(c.permuted(order)).balanced, is_balanced(c).balanced)

    @settings(max_examples=100, deadline=None)
    @given(c=points.map(Configuration.of), entries=st.tuples(*[st.integers(min_value=-5, max_value=5)] * 4))
    def test_exact_verdict_is_invariant_under_linear_maps(self, c, entries):
        g = LinearMap2(*entries)
        assume(g.determinant() != 0)
        self.assertEqual(is_balanced(apply_map(g, c)).balanced, is_balanced(c).balanced)


class TestEvenM(unittest.TestCase):
    def test_square_witness(self):
        self.assertEqual(even_m_witness(SQUARE), 2)

    def test_float_even_polygon(self):
        j = even_m_witness(roots_of_unity(6))
        self.assertEqual(j, 3)

    def test_odd_m(self):
        with self.assertRaises(OddM):
            even_m_witness(TRIANGLE)

    def test_not_balanced(self):
        with self.assertRaises(NotBalanced):
            even_m_witness(Configuration.of([(1, 0), (0, 1), (1, 1), (2, 1)]))
