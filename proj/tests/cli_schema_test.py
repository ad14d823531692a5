"""Runs the CLI, validates every JSON output against schemas/, and compares
with the golden outputs in golden/cli. Pass --regenerate to rewrite them."""
import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

HERE = pathlib.Path(__file__).resolve().parent
SCHEMAS = HERE.parent / "schemas"
GOLDEN = HERE / "golden" / "cli"

# (golden name, schema, expected exit code, args)
CASES = [
    ("invariants_g29", "invariants", 0, ["invariants", "--group", "29"]),
    ("invariants_g34_f6", "invariants", 0, ["invariants", "--group", "34", "--degree", "6", "--check", "invariance"]),
    ("integrality_g29_verify", "integrality", 0, ["integrality", "--group", "29", "--verify"]),
    ("integrality_g31_derive_f8", "integrality", 0, ["integrality", "--group", "31", "--derive", "--line", "8"]),
    ("adams_g29_k5", "adams", 0, ["adams", "--group", "29", "--k", "5"]),
    ("adams_g31_symbolic", "adams", 0, ["adams", "--group", "31", "--symbolic"]),
    ("adams_g34_basis", "adams", 0, ["adams", "--group", "34", "--basis"]),
    ("v1pi_g29_t7", "v1pi", 0, ["v1pi", "--group", "29", "--t", "7"]),
    ("v1pi_g34_t5", "v1pi", 0, ["v1pi", "--group", "34", "--t", "5"]),
    ("v1pi_g29_closed_form", "v1pi", 0, ["v1pi", "--group", "29", "--closed-form"]),
    ("v1pi_g31_closed_form", "v1pi", 0, ["v1pi", "--group", "31", "--closed-form"]),
    ("v1pi_g34_closed_form", "v1pi", 0, ["v1pi", "--group", "34", "--closed-form"]),
    ("v1pi_g29_residuals", "v1pi", 0, ["v1pi", "--group", "29", "--residuals"]),
    ("v1pi_bspace_13", "v1pi", 0, ["v1pi", "--bspace", "11,35,59,83", "--p", "13", "--t", "5"]),
    ("catalog_32_7", "catalog", 0, ["catalog", "--case", "32", "--prime", "7"]),
    ("catalog_list", "catalog", 0, ["catalog", "--list"]),
    ("verify_all_fast", "verify-all", 0, ["verify-all", "--only", "4,8,12", "--format", "json"]),
    ("error_not_found", "error", 1, ["catalog", "--case", "99", "--prime", "7"]),
]


def run(binary, args, threads):
    return subprocess.run([binary, "--threads", str(threads), *args], capture_output=True, text=True, check=False)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("binary")
    ap.add_argument("--regenerate", action="store_true")
    opts = ap.parse_args()
    GOLDEN.mkdir(parents=True, exist_ok=True)
    failures = []
    for name, schema_name, code, args in CASES:
        first = run(opts.binary, args, 1)
        second = run(opts.binary, args, 3)
        label = " ".join(args)
        if first.returncode != code:
            failures.append(f"{label}: exit {first.returncode}, expected {code}\n{first.stderr}")
            continue
        if first.stdout != second.stdout:
            failures.append(f"{label}: output changes with the thread count")
        schema = json.loads((SCHEMAS / f"{schema_name}.schema.json").read_text())
        try:
            jsonschema.validate(json.loads(first.stdout), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{label}: {e}")
            continue
        path = GOLDEN / f"{name}.json"
        if opts.regenerate:
            path.write_text(first.stdout)
        elif not path.exists():
            failures.append(f"{label}: missing golden {path.name}")
        elif path.read_text() != first.stdout:
            failures.append(f"{label}: differs from golden {path.name}")
    for f in failures:
        print("FAIL", f)
    print(f"{len(CASES) - len(failures)}/{len(CASES)} CLI cases ok")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
