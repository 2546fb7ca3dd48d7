#!/usr/bin/env python3
"""Runs the cayley binary end to end: exit codes, schema, determinism."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = SCHEMA_PATH = DATA = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CAYLEY_ORACLE_BUDGET", None)
    if env:
        full_env.update(env)
    return subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env,
                          timeout=300)


def data(name):
    return os.path.join(DATA, name)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA_PATH) as f:
            cls.schema = json.load(f)
        jsonschema.Draft7Validator.check_schema(cls.schema)
        cls.validator = jsonschema.Draft7Validator(cls.schema)

    def report(self, *args, code=0, env=None):
        p = run(*args, "--json", env=env)
        self.assertEqual(p.returncode, code, p.stdout + p.stderr)
        doc = json.loads(p.stdout)
        self.validator.validate(doc)
        self.assertEqual(doc["exit_code"], code)
        return doc

    def test_classify_worked_example(self):
        doc = self.report("classify", "-m", "9 21; 1 4")
        self.assertEqual(doc["result"]["chi"], 3)
        self.assertIn("classify", doc["timings"])
        self.assertEqual(self.report("classify", "-f", data("worked_example.txt"))["result"],
                         doc["result"])

    def test_verify_pins_worked_example(self):
        doc = self.report("verify", "-m", "9 21; 1 4", "--r-max", "3", "--n-max", "6")
        self.assertEqual(doc["status"], "PINNED")
        self.assertEqual(doc["oracle"]["lower"], 3)
        self.assertEqual(doc["oracle"]["upper"], 3)

    def test_json_matrix_file(self):
        doc = self.report("classify", "-f", data("tri_triangle.json"))
        self.assertEqual(doc["result"]["chi"], 4)
        self.assertEqual(doc["result"]["certificate"]["type"], "TriTriangle")

    def test_loops(self):
        doc = self.report("classify", "-f", data("looped.txt"))
        self.assertEqual(doc["result"]["outcome"], "HasLoops")
        self.assertIsNone(doc["result"]["chi"])

    def test_parse_error_exit_code(self):
        doc = self.report("classify", "-f", data("ragged.txt"), code=2)
        self.assertEqual(doc["error"]["kind"], "ParseError")
        self.assertEqual(run("classify", "--r-max", "3").returncode, 2)
        self.assertEqual(run("classify").returncode, 2)

    def test_unsupported_exit_code(self):
        doc = self.report("classify", "-f", data("five_rows.txt"), code=3)
        self.assertEqual(doc["status"], "UNSUPPORTED")
        self.assertEqual(doc["error"]["kind"], "UnsupportedShape")

    def test_budget_exit_code(self):
        doc = self.report("verify", "-f", data("tri_triangle.json"), code=5,
                          env={"CAYLEY_ORACLE_BUDGET": "3"})
        self.assertTrue(doc["oracle"]["partial"])

    def test_planar(self):
        doc = self.report("planar", data("triangular.vec"))
        self.assertEqual(doc["result"]["chi"], 3)
        self.assertEqual(doc["relations"]["rows"], [[1], [1], [1]])
        doc = self.report("planar", data("pythagorean.json"))
        self.assertLessEqual(doc["result"]["chi"], 3)
        self.report("planar", data("not_unit.vec"), code=2)

    def test_planar_stdin(self):
        with open(data("triangular.vec")) as f:
            p = subprocess.run([BINARY, "planar", "--json", "--no-timings"], stdin=f,
                               capture_output=True, text=True, timeout=60)
        self.assertEqual(p.returncode, 0)
        self.assertEqual(json.loads(p.stdout)["result"]["chi"], 3)

    def test_no_timings_is_byte_identical(self):
        for args in (["classify", "-m", "9 21; 1 4"],
                     ["verify", "-f", data("tri_triangle.json")],
                     ["planar", data("pythagorean.json")],
                     ["sweep", "--shape", "3x1", "--bound", "2", "--oracle"]):
            a = run(*args, "--json", "--no-timings")
            b = run(*args, "--json", "--no-timings")
            self.assertEqual(a.returncode, 0)
            self.assertEqual(a.stdout, b.stdout)
            self.assertNotIn("timings", json.loads(a.stdout))

    def test_sweep(self):
        doc = self.report("sweep", "--shape", "tri", "--bound", "2", "--no-timings")
        self.assertEqual(doc["enumerated"], 125)
        self.assertEqual(doc["violations"], [])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "reports.jsonl")
            doc = self.report("sweep", "--shape", "3x2", "--bound", "1", "--oracle",
                              "--no-timings", "--reports", path)
            self.assertEqual(doc["statuses"].get("VIOLATION", 0), 0)
            with open(path) as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), doc["classified"])
            for line in lines:
                self.validator.validate(json.loads(line))

    def test_text_output(self):
        p = run("classify", "-m", "5")
        self.assertEqual(p.returncode, 0)
        self.assertIn("3", p.stdout)
        p = run("classify", "-m", "1 x")
        self.assertEqual(p.returncode, 2)
        self.assertIn("ParseError", p.stderr)

    def test_schema_rejects_malformed(self):
        doc = json.loads(run("classify", "-m", "5", "--json").stdout)
        doc["exit_code"] = 7
        with self.assertRaises(jsonschema.ValidationError):
            self.validator.validate(doc)


if __name__ == "__main__":
    BINARY, SCHEMA_PATH, DATA = sys.argv[1:4]
    unittest.main(argv=sys.argv[:1], verbosity=2)
