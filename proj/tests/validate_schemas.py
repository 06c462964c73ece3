"""Validate the JSON emitted by each subcommand against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("series.schema.json", ["series", "--variable", "beta", "--order", "8"]),
    ("series.schema.json", ["series", "--variable", "field", "--order", "0"]),
    ("spectrum.schema.json", ["spectrum", "--nmax", "5"]),
    ("spectrum.schema.json", ["spectrum", "--nmax", "4", "--k", "3", "--vectors"]),
    ("green.schema.json", ["green"]),
    ("basis-check.schema.json", ["basis-check", "--nmax", "8"]),
]


def main(exe, schema_dir):
    failures = 0
    for schema_name, args in CASES:
        schema = json.loads((pathlib.Path(schema_dir) / schema_name).read_text())
        out = subprocess.run([exe, *args], check=True, capture_output=True, text=True).stdout
        try:
            jsonschema.validate(json.loads(out), schema)
            print("ok  ", " ".join(args))
        except jsonschema.ValidationError as e:
            failures += 1
            print("FAIL", " ".join(args), "--", e.message)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
