import os
import tempfile
import unittest
from fractions import Fraction

from common.config_file import load_configuration, parse_configuration, serialize_configuration
from common.errors import ConfigFileError
from geometry import ArithmeticMode, Configuration, PlaneVector, roots_of_unity


class TestParse(unittest.TestCase):
    def test_exact(self):
        c = parse_configuration('{"mode": "exact", "vectors": [["1", "0"], ["-1/2", "3/4"]]}')
        self.assertEqual(c.mode, ArithmeticMode.EXACT)
        self.assertEqual(c[1], PlaneVector(Fraction(-1, 2), Fraction(3, 4)))

    def test_float(self):
        c = parse_configuration('{"mode": "float", "vectors": [[1.0, 0], [-0.5, 0.866]]}')
        self.assertEqual(c.mode, ArithmeticMode.FLOAT)
        self.assertEqual(c[0], PlaneVector(1.0, 0.0))
        self.assertIsInstance(c[0].y, float)

    def test_order_is_kept(self):
        c = parse_configuration('{"mode": "exact", "vectors": [["0", "1"], ["1", "0"]]}')
        self.assertEqual([(v.x, v.y) for v in c], [(0, 1), (1, 0)])


class TestErrors(unittest.TestCase):
    def assertFileError(self, text) -> ConfigFileError:
        with self.assertRaises(ConfigFileError) as ctx:
            parse_configuration(text, "case.json")
        self.assertEqual(ctx.exception.code, "ConfigFileError")
        self.assertTrue(ctx.exception.message.startswith("case.json"))
        return ctx.exception

    def test_malformed_json_reports_the_position(self):
        e = self.assertFileError("not json")
        self.assertEqual(e.certificate, {"line": 1, "column": 1})
        e = self.assertFileError('{\n"mode": "exact",,\n}')
        self.assertEqual(e.certificate["line"], 2)

    def test_number_in_exact_mode(self):
        e = self.assertFileError('{"mode": "exact", "vectors": [[1, "0"]]}')
        self.assertEqual(e.certificate["fields"][0][0], "vectors")

    def test_string_in_float_mode(self):
        self.assertFileError('{"mode": "float", "vectors": [["1.0", 0.0]]}')

    def test_bad_rational(self):
        self.assertFileError('{"mode": "exact", "vectors": [["1/0", "1"]]}')
        self.assertFileError('{"mode": "exact", "vectors": [["one", "1"]]}')

    def test_zero_vector(self):
        self.assertFileError('{"mode": "float", "vectors": [[1.0, 0.0], [0.0, 0.0]]}')
        self.assertFileError('{"mode": "exact", "vectors": [["0", "0/3"]]}')

    def test_empty_vectors(self):
        self.assertFileError('{"mode": "exact", "vectors": []}')

    def test_unknown_key(self):
        e = self.assertFileError('{"mode": "exact", "vectors": [["1", "0"]], "extra": 1}')
        self.assertIn(["extra"], e.certificate["fields"])

    def test_unknown_mode(self):
        e = self.assertFileError('{"mode": "complex", "vectors": [["1", "0"]]}')
        self.assertEqual(e.certificate["fields"], [["mode"]])

    def test_wrong_arity(self):
        self.assertFileError('{"mode": "float", "vectors": [[1.0, 0.0, 2.0]]}')


class TestRoundTrip(unittest.TestCase):
    def test_exact(self):
        c = Configuration.of([(1, 0), (Fraction(-1, 2), Fraction(3, 4)), (-1, -1)])
        text = serialize_configuration(c)
        self.assertIn('"-1/2"', text)
        self.assertEqual(parse_configuration(text), c)

    def test_float(self):
        c = roots_of_unity(7).to_float()
        again = parse_configuration(serialize_configuration(c))
        self.assertEqual(again.vectors, c.vectors)

    def test_load_from_disk(self):
        c = Configuration.of([(1, 0), (0, 1), (-1, -1)])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "triangle.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write(serialize_configuration(c))
            self.assertEqual(load_configuration(path), c)
            with self.assertRaises(ConfigFileError) as ctx:
                load_configuration(os.path.join(tmp, "missing.json"))
            self.assertEqual(ctx.exception.certificate, {"path": "missing.json"})
