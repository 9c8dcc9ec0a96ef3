# Copyright 2026 The majorana-gates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Runs the CLI and validates every JSON document against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

resources = {}
for path in SCHEMAS.glob("*.schema.json"):
    resources[path.name] = Resource.from_contents(json.loads(path.read_text()))
registry = Registry().with_resources(resources.items())


def validator(name):
    schema = resources[name].contents
    return jsonschema.Draft202012Validator(schema, registry=registry,
                                           format_checker=jsonschema.FormatChecker())


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def check(schema, doc, label):
    errors = list(validator(schema).iter_errors(doc))
    if errors:
        raise SystemExit(f"{label}: {errors[0].message}")
    print(f"ok {label}")


verify_lines = run("verify", "all").splitlines()
for line in verify_lines:
    errors = list(validator("verify_report.schema.json").iter_errors(json.loads(line)))
    if errors:
        raise SystemExit(f"verify line: {errors[0].message}")
print(f"ok verify ({len(verify_lines)} lines)")
check("catalog.schema.json", json.loads(run("catalog")), "catalog")
check("enumeration.schema.json", json.loads(run("enumerate", "--majoranas", "4", "--exact")), "enumerate")
check("enumeration.schema.json",
      json.loads(run("enumerate", "--majoranas", "8", "--cap", "500", expect=3)), "partial enumerate")
check("search_result.schema.json",
      json.loads(run("search", "--target", "H", "--logical", "1", "--depth", "3")), "search hit")
check("search_result.schema.json",
      json.loads(run("search", "--target", "T", "--logical", "1", "--depth", "20", expect=3)),
      "search miss")
check("orbit.schema.json", json.loads(run("orbit", "--logical", "1", "--state", "0", "--list")), "orbit")
check("certificate.schema.json",
      json.loads(run("certify", "--logical", "3", "--target", "CCZ")), "certificate")
for gate in ["CZ", "MS", "H2"]:
    check("matrix.schema.json", json.loads(run("dump", gate)), f"dump {gate}")

with tempfile.TemporaryDirectory() as tmp:
    prog = pathlib.Path(tmp) / "ccz.json"
    run("synth", "cnz", "--n", "2", "--out", str(prog))
    doc = json.loads(prog.read_text())
    check("program.schema.json", doc, "synth program")
    first = run("dump", "--program", str(prog), "--basis", "physical")
    # Rewrite through the parser-independent path and compare bit for bit.
    again = pathlib.Path(tmp) / "again.json"
    again.write_text(json.dumps(doc))
    second = run("dump", "--program", str(again), "--basis", "physical")
    if first != second:
        raise SystemExit("program round trip changed the realized matrix")
    print("ok round trip")
    lines = run("synth", "diag", "--phases", "0,0,0,0.5", "--check").strip().splitlines()
    check("synth_check.schema.json", json.loads(lines[-1]), "synth check")
