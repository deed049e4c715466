import math
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from canonical import LinearMap2
from common.errors import DuplicateArgument, MixedMode, ZeroVector
from geometry import (
    ArithmeticMode,
    Configuration,
    LabeledConfiguration,
    PlaneVector,
    argument,
    as_scalar,
    cyclic_index,
    det2,
    label_by_increasing_arguments,
    roots_of_unity,
)

small_vectors = st.builds(PlaneVector, st.integers(min_value=-20, max_value=20), st.integers(min_value=-20, max_value=20))

# eight exact vectors on distinct rays
OCTAGON = Configuration.of([(1, 0), (2, 1), (1, 1), (0, 1), (-1, 2), (-1, 0), (-1, -1), (1, -3)])


class TestScalars(unittest.TestCase):
    def test_integers_become_fractions(self):
        self.assertEqual(as_scalar(3), Fraction(3))
        self.assertIsInstance(as_scalar(3), Fraction)
        self.assertIsInstance(as_scalar(0.5), float)

    def test_bool_is_rejected(self):
        with self.assertRaises(TypeError):
            as_scalar(True)

    def test_vector_cannot_mix_modes(self):
        with self.assertRaises(MixedMode):
            PlaneVector(Fraction(1, 2), 0.5)

    def test_det2_rejects_mixed_operands(self):
        with self.assertRaises(MixedMode):
            det2(PlaneVector(1, 0), PlaneVector(0.0, 1.0))


class TestDeterminant(unittest.TestCase):
    def test_exact_values(self):
        self.assertEqual(det2(PlaneVector(1, 0), PlaneVector(0, 1)), 1)
        self.assertEqual(det2(PlaneVector(0, 1), PlaneVector(1, 0)), -1)
        self.assertEqual(det2(PlaneVector(2, 4), PlaneVector(1, 2)), 0)

    def test_rationals_stay_exact(self):
        d = det2(PlaneVector(Fraction(1, 3), Fraction(1, 2)), PlaneVector(Fraction(2, 5), Fraction(1, 7)))
        self.assertEqual(d, Fraction(1, 21) - Fraction(1, 5))

    @settings(max_examples=200, deadline=None)
    @given(a=small_vectors, b=small_vectors, entries=st.tuples(*[st.integers(min_value=-9, max_value=9)] * 4))
    def test_linear_maps_scale_by_their_determinant(self, a, b, entries):
        g = LinearMap2(*entries)
        self.assertEqual(det2(g.apply(a), g.apply(b)), g.determinant() * det2(a, b))


class TestArgument(unittest.TestCase):
    def test_range(self):
        self.assertEqual(argument(PlaneVector(1, 0)), 0.0)
        self.assertAlmostEqual(argument(PlaneVector(0, 1)), math.pi / 2)
        self.assertAlmostEqual(argument(PlaneVector(-1, 0)), math.pi)
        self.assertAlmostEqual(argument(PlaneVector(0, -1)), 3 * math.pi / 2)

    def test_just_below_the_axis_stays_below_two_pi(self):
        theta = argument(PlaneVector(1.0, -1e-300))
        self.assertGreaterEqual(theta, 0.0)
        self.assertLess(theta, 2 * math.pi)

    def test_zero_vector(self):
        with self.assertRaises(ZeroVector):
            argument(PlaneVector(0, 0))


class TestConfiguration(unittest.TestCase):
    def test_cyclic_index(self):
        self.assertEqual(cyclic_index(7, 5), 2)
        self.assertEqual(cyclic_index(-1, 5), 4)
        with self.assertRaises(ValueError):
            cyclic_index(1, 0)

    def test_zero_vector_is_rejected(self):
        with self.assertRaises(ZeroVector) as ctx:
            Configuration.of([(1, 0), (0, 0)])
        self.assertEqual(ctx.exception.certificate, {"index": 1})

    def test_mixed_configuration_is_rejected(self):
        with self.assertRaises(MixedMode):
            Configuration((PlaneVector(1, 0), PlaneVector(0.0, 1.0)), ArithmeticMode.EXACT)

    def test_cyclic_access_and_odd_n(self):
        c = Configuration.of([(1, 0), (0, 1), (-1, -1)])
        self.assertEqual(c.m, 3)
        self.assertEqual(c.n, 1)
        self.assertEqual(c.at(3), c[0])
        self.assertEqual(c.at(-1), c[2])
        self.assertIsNone(Configuration.of([(1, 0), (0, 1)]).n)


class TestLabeling(unittest.TestCase):
    def test_sorts_by_argument_and_records_permutation(self):
        c = Configuration.of([(0, -1), (1, 0), (-1, 0), (0, 1)])
        labeled = label_by_increasing_arguments(c)
        self.assertIsInstance(labeled, LabeledConfiguration)
        self.assertEqual(labeled.permutation, (1, 3, 2, 0))
        self.assertEqual(labeled.vectors, (PlaneVector(1, 0), PlaneVector(0, 1), PlaneVector(-1, 0), PlaneVector(0, -1)))

    def test_same_ray_is_a_duplicate_argument(self):
        c = Configuration.of([(1, 1), (2, 2), (0, 1)])
        with self.assertRaises(DuplicateArgument) as ctx:
            label_by_increasing_arguments(c)
        self.assertEqual(sorted(ctx.exception.certificate["indices"]), [0, 1])

    def test_opposite_vectors_are_fine(self):
        labeled = label_by_increasing_arguments(Configuration.of([(-1, 0), (1, 0)]))
        self.assertEqual(labeled.permutation, (1, 0))

    def test_permutation_must_be_a_bijection(self):
        with self.assertRaises(ValueError):
            LabeledConfiguration((PlaneVector(1, 0), PlaneVector(0, 1)), ArithmeticMode.EXACT, (0, 0))

    @settings(max_examples=100, deadline=None)
    @given(order=st.permutations(range(8)))
    def test_labeling_forgets_the_input_order(self, order):
        scrambled = OCTAGON.permuted(order)
        labeled = label_by_increasing_arguments(scrambled)
        self.assertEqual(labeled.vectors, label_by_increasing_arguments(OCTAGON).vectors)
        for slot, index in enumerate(labeled.permutation):
            self.assertEqual(labeled[slot], scrambled[index])
        self.assertEqual(label_by_increasing_arguments(labeled).permutation, tuple(range(8)))


class TestRootsOfUnity(unittest.TestCase):
    def test_unit_length_and_increasing_arguments(self):
        for m in (1, 2, 3, 5, 8, 13):
            u = roots_of_unity(m)
            self.assertEqual(u.m, m)
            self.assertEqual(u.mode, ArithmeticMode.FLOAT)
            for v in u:
                self.assertAlmostEqual(v.norm(), 1.0, places=12)
            args = [argument(v) for v in u]
            self.assertEqual(args, sorted(args))

    def test_relabeling_is_identity(self):
        self.assertEqual(label_by_increasing_arguments(roots_of_unity(7)).permutation, tuple(range(7)))

    def test_invalid_m(self):
        with self.assertRaises(ValueError):
            roots_of_unity(0)
