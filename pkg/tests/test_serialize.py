import json
import math
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from common.serialize import dumps, format_float


class TestFormatFloat(unittest.TestCase):
    def test_integral_floats_stay_floats(self):
        self.assertEqual(format_float(1.0), "1.0")
        self.assertEqual(format_float(-1.0), "-1.0")
        self.assertEqual(format_float(100.0), "100.0")
        self.assertEqual(format_float(1e16), "1e+16")
        self.assertIsInstance(json.loads(format_float(3.0)), float)

    def test_negative_zero_keeps_its_sign(self):
        self.assertEqual(format_float(-0.0), "-0.0")
        value = json.loads(dumps({"x": -0.0}))["x"]
        self.assertEqual(math.copysign(1.0, value), -1.0)

    def test_seventeen_digits(self):
        self.assertEqual(format_float(0.1), "0.10000000000000001")
        self.assertEqual(format_float(4.4408920985006262e-16), "4.4408920985006262e-16")

    def test_non_finite(self):
        for x in (math.inf, -math.inf, math.nan):
            with self.assertRaises(ValueError):
                format_float(x)

    @settings(max_examples=200, deadline=None)
    @given(x=st.floats(allow_nan=False, allow_infinity=False))
    def test_reads_back_as_the_same_float(self, x):
        again = json.loads(format_float(x))
        self.assertIsInstance(again, float)
        self.assertEqual(again, x)
        self.assertEqual(math.copysign(1.0, again), math.copysign(1.0, x))


class TestDumps(unittest.TestCase):
    def test_layout(self):
        self.assertEqual(dumps({"b": [1, 2.0], "a": Fraction(-1, 2)}), '{\n  "a": "-1/2",\n  "b": [\n    1,\n    2.0\n  ]\n}\n')
        self.assertEqual(dumps([]), "[]\n")
