# Copyright 2026 The torfix Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#      http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the torfix command line."""

import json
import pathlib
import re
import subprocess
import sys
import unittest

import jsonschema

BINARY = None
SCHEMAS = None


def run(*args, stdin=None):
    proc = subprocess.run([BINARY, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args):
    code, out, err = run(*args, "--json")
    if code != 0:
        raise AssertionError(f"{args} exited {code}: {err}")
    return json.loads(out)


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


ROTATION = ("--analytic", "1,0;-1,0;1,0;0,0", "--field", "1")
CLASSIFY_INPUTS = [
    ROTATION,
    ("--analytic", "0,1;0,0;0,0;0,2", "--field", "-1"),
    ("--charpoly", "4,0,5,0,1"),
    ("--charpoly", "1,1,0,0,1"),
    ("--charpoly", "1,1,12,0,1"),
    ("--charpoly", "16,-32,24,-8,1"),
    ("--charpoly", "1,-4,6,-4,1"),
    ("--matrix", "2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2"),
    ("--matrix", "0,-2,0,0;2,0,0,0;0,0,0,-1;0,0,1,0"),
    ("--doc", '{"kind":"quaternion","alpha":"3","beta":"2","coeffs":["0","1","1","1"]}'),
    ("--doc", '{"kind":"algebra","element":{"kind":"cm","g":"1,1,1,1,1","coords":["0","1","0","0"]}}'),
    ("--doc", '{"kind":"real_quad","d":5,"a":1,"b":1}'),
]


class SpecExamples(unittest.TestCase):
    def test_rotation_json(self):
        report = run_json("classify", *ROTATION)
        self.assertEqual(report["verdict"], "B2")
        self.assertEqual(report["period"], 6)
        self.assertEqual(report["cycle"], [1, 9, 16, 9, 1, 0])

    def test_sequence_text(self):
        code, out, _ = run("sequence", "--charpoly", "16,-32,24,-8,1", "-n", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "[1, 81, 2401]")

    def test_cm_table(self):
        rows = run_json("table", "--kind", "cm")
        self.assertEqual(len(rows), 9)
        self.assertEqual(sorted(r["order"] for r in rows), [1, 2, 3, 4, 5, 6, 8, 10, 12])
        quat = run_json("table", "--kind", "quaternion")
        self.assertEqual(quat, [r for r in rows if r["degree"] <= 2])

    def test_parse_examples(self):
        gaussian = run_json("classify", "--doc", '{"kind":"char_poly","poly":"4,0,5,0,1"}')
        self.assertEqual((gaussian["verdict"], gaussian["r"]), ("B3", 4))
        mult2 = run_json("sequence", "-n", "2", "--doc",
                         '{"kind":"rational_rep","matrix":[[2,0,0,0],[0,2,0,0],[0,0,2,0],[0,0,0,2]]}')
        self.assertEqual(mult2["fix"], [1, 81])
        f1 = run_json("algebra", "quat", "classify", "--doc",
                      '{"kind":"quaternion","alpha":"3","beta":"2","coeffs":["0","1","1","1"]}')
        self.assertEqual(f1["char_poly"], "1,0,2,0,1")

    def test_search_small(self):
        self.assertEqual(run_json("search-small", "--eps", "3/10")["a"], 12)
        self.assertEqual(run_json("search-small", "--eps", "1")["a"], 0)


class ExitCodes(unittest.TestCase):
    def expect(self, code, name, *args):
        got, _, err = run(*args)
        self.assertEqual(got, code, err)
        if name:
            self.assertIn(name, err)

    def test_validation_errors(self):
        self.expect(2, "InvalidStructure", "classify", "--charpoly", "1,-1,-1,-1,1")
        self.expect(2, "InvalidStructure", "classify", "--analytic", "1,1;0,0;0,0;1,0", "--field", "4")
        self.expect(2, "NonIntegral", "classify", "--analytic", "1/2,0;0,0;0,0;1,0", "--field", "-1")
        self.expect(2, "NotDivisionAlgebra", "algebra", "quat", "classify",
                    "--alpha", "1", "--beta", "2", "--coeffs", "0,1,0,0")
        self.expect(2, "ZeroEndomorphism", "classify", "--charpoly", "0,0,0,0,1")

    def test_malformed_input(self):
        self.expect(1, None, "classify", "--doc", '{"kind":"char_poly"')
        self.expect(1, None, "classify", "--doc", '{"kind":"char_poly","poly":"1,x"}')
        self.expect(1, None, "classify", "--doc", '{"kind":"char_poly","poly":"1,0,0,0,1","extra":1}')
        self.expect(1, None, "classify", "--doc", '{"kind":"rational_rep","matrix":[[1,2],[3,4]]}')
        self.expect(1, None, "classify", "--matrix", "1,2,3;4")
        self.expect(1, None, "classify")
        self.expect(1, None, "classify", "--charpoly", "1,0,0,0,1", "--matrix", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1")
        self.expect(1, None, "nosuchcommand")
        self.expect(1, None, "examples", "nosuchexample")

    def test_large_n_guard(self):
        self.expect(1, "--force", "sequence", "--charpoly", "1,0,0,0,1", "-n", "1000001")
        self.expect(1, None, "sequence", "--charpoly", "1,0,0,0,1", "-n", "0")


class Reports(unittest.TestCase):
    def test_reports_match_schema(self):
        report_schema = schema("report.schema.json")
        for args in CLASSIFY_INPUTS:
            with self.subTest(args=args):
                jsonschema.validate(run_json("classify", *args), report_schema)
        for name in [e["name"] for e in run_json("examples")]:
            with self.subTest(example=name):
                jsonschema.validate(run_json("examples", name), report_schema)

    def test_sequence_schema_and_big_integers(self):
        out = run_json("sequence", "--matrix", "2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2", "-n", "20")
        jsonschema.validate(out, schema("sequence.schema.json"))
        self.assertEqual(out["fix"][19], str((2**20 - 1) ** 4))
        self.assertTrue(all(int(v) == (2**n - 1) ** 4 for n, v in enumerate(out["fix"], start=1)))

    def test_text_and_json_agree(self):
        for args in CLASSIFY_INPUTS:
            with self.subTest(args=args):
                report = run_json("classify", *args)
                code, text, _ = run("classify", *args)
                self.assertEqual(code, 0)
                fields = dict(line.split(": ", 1) for line in text.strip().splitlines() if ": " in line)
                self.assertEqual(fields["verdict"], report["verdict"])
                if "period" in report:
                    self.assertEqual(int(fields["period"]), report["period"])
                    self.assertEqual([int(v) for v in fields["cycle"].split()], [int(v) for v in report["cycle"]])
                if "growth_base" in report:
                    self.assertTrue(fields["growth base"].startswith(report["growth_base"]))
                if "r" in report:
                    self.assertEqual(int(re.match(r"\d+", fields["r"]).group()), report["r"])

    def test_round_trip_examples(self):
        for entry in run_json("examples"):
            with self.subTest(example=entry["name"]):
                direct = run_json("examples", entry["name"])
                reparsed = run_json("classify", "--doc", json.dumps(entry["input"]))
                self.assertEqual(direct, reparsed)

    def test_stdin_input(self):
        code, out, _ = run("classify", "--input", "-", "--json", stdin='{"kind":"char_poly","poly":"1,-1,2,-1,1"}')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["verdict"], "B2")

    def test_algebra_fix(self):
        out = run_json("algebra", "rm", "fix", "--d", "2", "--a", "-1", "--b", "1", "-n", "4")
        seq = run_json("sequence", "--doc", '{"kind":"real_quad","d":2,"a":-1,"b":1}', "-n", "4")
        self.assertEqual(out["fix"], seq["fix"])
        cm = run_json("algebra", "cm", "fix", "--g", "1,1,1,1,1", "--coords", "0,1,0,0", "-n", "10")
        self.assertEqual(cm["fix"], [5, 5, 5, 5, 0] * 2)


if __name__ == "__main__":
    BINARY = sys.argv.pop(1)
    SCHEMAS = pathlib.Path(sys.argv.pop(1))
    unittest.main(verbosity=2)
