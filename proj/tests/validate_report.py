"""Validate `divlink report` output against the JSON schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    divlink, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    inputs = ["xshape", "p0", "p1", "p2", "p3", "nonprime_sum", "chain5", "chain7"]
    out = subprocess.run([divlink, "report", *inputs], capture_output=True, text=True, check=False)
    if out.returncode != 0:
        print(out.stdout, out.stderr)
        return 1
    reports = json.loads(out.stdout)
    hatted = subprocess.run([divlink, "report", "--hatted", "p1"], capture_output=True, text=True, check=True)
    reports.append(json.loads(hatted.stdout))
    failures = 0
    for r in reports:
        for err in validator.iter_errors(r):
            failures += 1
            print(f"{r.get('source')}: {err.json_path}: {err.message}")
    print(f"{len(reports)} reports checked, {failures} schema errors")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
