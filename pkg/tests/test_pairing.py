import unittest
from fractions import Fraction

from balance import (
    build_pairing,
    half_plane_counts,
    predicted_pairing,
    step_constants,
    verify_antisymmetry,
    verify_pairing_formula,
)
from canonical import apply_map
from common.errors import InconsistentConstants, NotBalanced, NotUniform, UsageError
from geometry import Configuration, label_by_increasing_arguments, roots_of_unity
from search import perturb, random_invertible


def labeled(c):
    return label_by_increasing_arguments(c)


class TestPairingMap(unittest.TestCase):
    def test_roots_of_unity(self):
        for m in range(3, 32, 2):
            n = (m - 1) // 2
            pairing = build_pairing(roots_of_unity(m))
            # every index owns n pairs, and the pairs cover each 2-subset once
            self.assertEqual(len(pairing.phi), m * (m - 1) // 2)
            self.assertEqual(sum(len(pairs) for pairs in pairing.pairs.values()), n * m)
            for i, pairs in pairing.pairs.items():
                self.assertEqual(len(pairs), n)
                members = sorted(j for pair in pairs for j in pair)
                self.assertEqual(members, [j for j in range(m) if j != i])
            self.assertEqual(pairing(0, 1), n + 1, m)

    def test_midpoint_rule_on_roots_of_unity(self):
        m = 9
        pairing = build_pairing(roots_of_unity(m))
        for k in range(m):
            for l in range(k + 1, m):
                self.assertEqual((2 * pairing(k, l)) % m, (k + l) % m)

    def test_cyclic_arguments(self):
        pairing = build_pairing(roots_of_unity(5))
        self.assertEqual(pairing(5, 6), pairing(0, 1))
        self.assertEqual(pairing(1, 0), pairing(0, 1))

    def test_linear_image_keeps_the_pairing(self):
        base = build_pairing(roots_of_unity(7))
        image = build_pairing(labeled(apply_map(random_invertible(11), roots_of_unity(7))))
        self.assertEqual(image(0, 1), 4)
        self.assertEqual(len(image.phi), len(base.phi))

    def test_exact_triangle(self):
        pairing = build_pairing(labeled(Configuration.of([(1, 0), (0, 1), (-1, -1)])))
        self.assertEqual(pairing(0, 1), 2)
        self.assertEqual(pairing(0, 2), 1)
        self.assertEqual(pairing(1, 2), 0)

    def test_rejections(self):
        with self.assertRaises(NotUniform):
            build_pairing(labeled(Configuration.of([(1, 0), (0, 1), (-2, 0)])))
        with self.assertRaises(NotBalanced):
            build_pairing(labeled(Configuration.of([(1, 0), (0, 1), (-1, -2)])))
        with self.assertRaises(UsageError):
            build_pairing(roots_of_unity(4))

    def test_closed_form(self):
        self.assertEqual(predicted_pairing(2), {frozenset((0, 1)): 3, frozenset((0, 2)): 1, frozenset((0, 3)): 4, frozenset((0, 4)): 2})
        for m in range(3, 32, 2):
            self.assertTrue(verify_pairing_formula(build_pairing(roots_of_unity(m))).passed, m)

    def test_half_plane_counts(self):
        for m in (3, 5, 7, 11):
            self.assertEqual(half_plane_counts(roots_of_unity(m)), ((m - 1) // 2,) * m)


class TestAntisymmetry(unittest.TestCase):
    def test_roots_of_unity(self):
        for m in range(3, 102, 2):
            self.assertTrue(verify_antisymmetry(roots_of_unity(m)).passed, m)

    def test_antisymmetry_and_midpoint_pairing_agree(self):
        for m in range(3, 32, 2):
            c = roots_of_unity(m)
            self.assertTrue(verify_antisymmetry(c).passed, m)
            pairing = build_pairing(c)
            for k in range(m):
                for a in range(1, c.n + 1):
                    self.assertEqual(pairing(k - a, k + a), k, (m, k, a))

    def test_perturbed(self):
        for seed in range(100):
            c = labeled(perturb(roots_of_unity(7), 0.05, seed))
            verdict = verify_antisymmetry(c)
            self.assertFalse(verdict.passed, seed)
            k, a = verdict.witness
            self.assertTrue(0 <= k < 7 and 1 <= a <= 3)


class TestStepConstants(unittest.TestCase):
    def test_roots_of_unity(self):
        for m in range(3, 102, 2):
            constants = step_constants(roots_of_unity(m))
            self.assertGreater(constants.A1, 0)
            self.assertGreater(constants.An, 0)

    def test_exact_triangle(self):
        constants = step_constants(labeled(Configuration.of([(1, 0), (0, 1), (-1, -1)])))
        self.assertEqual(constants.A1, Fraction(1))
        self.assertEqual(constants.An, Fraction(1))

    def test_perturbed(self):
        for seed in range(100):
            with self.assertRaises(InconsistentConstants):
                step_constants(labeled(perturb(roots_of_unity(7), 0.05, seed)))

    def test_requires_uniform(self):
        with self.assertRaises(NotUniform):
            step_constants(labeled(Configuration.of([(1, 0), (0, 1), (-1, 0)])))
