#!/usr/bin/env python3
"""End-to-end CLI tests: exit codes, report contents, determinism, and JSON
schema validation for every subcommand."""

import argparse
import json
import pathlib
import subprocess
import sys
import warnings

import jsonschema

# RefResolver still works on every jsonschema 4.x; the replacement API only
# exists on newer releases.
warnings.filterwarnings("ignore", category=DeprecationWarning)

FAILURES = []


def check(name, condition, detail=""):
    status = "ok" if condition else "FAIL"
    print(f"[{status}] {name}" + (f" ({detail})" if detail and not condition else ""))
    if not condition:
        FAILURES.append(name)


def run(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def load_validator(schemas, name):
    path = (schemas / f"{name}.schema.json").resolve()
    schema = json.loads(path.read_text())
    resolver = jsonschema.RefResolver(base_uri=f"{path.parent.as_uri()}/", referrer=schema)
    return jsonschema.Draft7Validator(schema, resolver=resolver)


def validate(schemas, name, doc):
    try:
        load_validator(schemas, name).validate(doc)
        return True, ""
    except jsonschema.ValidationError as e:
        return False, str(e).splitlines()[0]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    opts = ap.parse_args()

    e = str(opts.fixtures / "square_diag.json")
    weights = str(opts.fixtures / "square_diag_weights.json")
    gp = str(opts.fixtures / "general_position.json")
    gpw = str(opts.fixtures / "gp_weights.json")

    # Every subcommand validates against its published schema.
    plain = ["lattice", "circuits", "nbc", "betanbc", "charpoly", "folkman", "betti", "os-dims"]
    weighted = ["aomoto", "basis", "monomial-check", "nonresonance", "verify"]
    for cmd in plain:
        code, out = run(opts.cli, cmd, e)
        check(f"{cmd}: exit 0", code == 0, f"exit={code}")
        ok, msg = validate(opts.schemas, cmd, json.loads(out))
        check(f"{cmd}: schema", ok, msg)
    for cmd in weighted:
        code, out = run(opts.cli, cmd, e, "--weights", weights)
        check(f"{cmd}: exit 0", code == 0, f"exit={code}")
        ok, msg = validate(opts.schemas, cmd, json.loads(out))
        check(f"{cmd}: schema", ok, msg)
    code, out = run(opts.cli, "dense", e, "--with-infinity")
    check("dense: exit 0", code == 0)
    ok, msg = validate(opts.schemas, "dense", json.loads(out))
    check("dense: schema", ok, msg)
    check("dense: has at_infinity", "at_infinity" in json.loads(out))
    code, out = run(opts.cli, "transition", gp, "--order", "3,2,1", "--weights", gpw,
                    "--samples", "3", "--seed", "5")
    check("transition: exit 0", code == 0, f"exit={code}")
    ok, msg = validate(opts.schemas, "transition", json.loads(out))
    check("transition: schema", ok, msg)

    # Documented report contents.
    _, out = run(opts.cli, "betanbc", e)
    check("betanbc value", json.loads(out) == [[2, 4], [2, 5]])
    _, out = run(opts.cli, "betanbc", e, "--method", "recursive")
    check("betanbc recursive value", json.loads(out) == [[2, 4], [2, 5]])
    _, out = run(opts.cli, "betanbc", e, "--method", "shelling")
    check("betanbc shelling value", json.loads(out) == [[2, 4], [2, 5]])

    bad_weights = opts.fixtures / "_tmp_bad_weights.json"
    bad_weights.write_text('["2", "1/3", "1/5", "1/7", "1/11"]')
    code, out = run(opts.cli, "nonresonance", e, "--weights", str(bad_weights))
    doc = json.loads(out)
    check("nonresonance violation exit 0", code == 0)
    check("nonresonance reports ok=false", doc["ok"] is False)
    check("nonresonance violation support [1]",
          any(v["support"] == [1] for v in doc["violations"]))
    bad_weights.unlink()

    code, out = run(opts.cli, "nonresonance", e, "--weights", weights,
                    "--paper-example-compat")
    check("compat gives nine conditions", len(json.loads(out)["conditions"]) == 9)

    code, out = run(opts.cli, "verify", e, "--weights", weights)
    doc = json.loads(out)
    check("verify all pass", code == 0 and doc["ok"]
          and all(c["status"] == "pass" for c in doc["checks"]))

    # Exit codes: usage and parse errors give 1 with a JSON diagnostic.
    code, out = run(opts.cli, "lattice", str(opts.fixtures / "missing.json"))
    check("missing file: exit 1", code == 1)
    ok, msg = validate(opts.schemas, "error", json.loads(out))
    check("missing file: error schema", ok, msg)

    code, out = run(opts.cli, "aomoto", e)  # --weights required
    check("missing weights: exit 1", code == 1)

    code, out = run(opts.cli, "basis", e, "--weights", gpw)  # wrong length
    check("wrong weight length: exit 1", code == 1)

    bad = opts.fixtures / "_tmp_bad.json"
    bad.write_text(json.dumps({
        "dimension": 1,
        "hyperplanes": [{"coeffs": ["1"], "constant": "1"},
                        {"coeffs": ["2"], "constant": "2"}]}))
    code, out = run(opts.cli, "lattice", str(bad))
    check("duplicate hyperplane: exit 1", code == 1)
    check("duplicate hyperplane: parse kind", json.loads(out)["error"]["kind"] == "parse")
    bad.unlink()

    # Byte-identical output for identical invocations.
    _, out1 = run(opts.cli, "transition", e, "--order", "5,4,3,2,1", "--weights", weights,
                  "--samples", "3", "--seed", "9")
    _, out2 = run(opts.cli, "transition", e, "--order", "5,4,3,2,1", "--weights", weights,
                  "--samples", "3", "--seed", "9")
    check("deterministic transition output", out1 == out2)

    # A different seed draws different samples but the same matrix.
    _, out3 = run(opts.cli, "transition", e, "--order", "5,4,3,2,1", "--weights", weights,
                  "--samples", "3", "--seed", "123")
    check("transition matrix is seed-independent",
          json.loads(out1)["matrix"] == json.loads(out3)["matrix"])
    _, v1 = run(opts.cli, "verify", e, "--weights", weights)
    _, v2 = run(opts.cli, "verify", e, "--weights", weights)
    check("deterministic verify output", v1 == v2)

    # --output writes the same report to a file.
    out_path = opts.fixtures / "_tmp_report.json"
    run(opts.cli, "charpoly", e, "--output", str(out_path))
    _, direct = run(opts.cli, "charpoly", e)
    check("--output matches stdout", out_path.read_text() == direct)
    out_path.unlink()

    if FAILURES:
        print(f"{len(FAILURES)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
