#!/usr/bin/env python3
"""Validate CLI outputs against the published schemas.

Usage: check_schemas.py <path-to-schubert-lab> <schemas-dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    cli = sys.argv[1]
    schema_dir = pathlib.Path(sys.argv[2])

    resources = {}
    for path in schema_dir.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources[path.name] = schema
    registry = Registry().with_resources(
        (name, Resource.from_contents(schema)) for name, schema in resources.items()
    )

    def run(*args, stdin=None):
        proc = subprocess.run([cli, *args], input=stdin, capture_output=True, text=True)
        if proc.returncode != 0:
            raise SystemExit(f"command failed: {args}\n{proc.stderr}")
        return proc.stdout

    def validate(instance, schema_name):
        jsonschema.validate(
            instance, resources[schema_name], registry=registry,
            format_checker=jsonschema.FormatChecker(),
        )

    # enumeration lines
    for line in run("enumerate", "-n", "3", "--lambda", "1,1,0").splitlines():
        validate(json.loads(line), "enumeration.schema.json")

    # descent result
    validate(
        json.loads(run("descend", "--alcove", "[[0,1],[1,1]]", "--lambda", "1,0", "--t", "1")),
        "descend.schema.json",
    )

    # witness
    validate(
        json.loads(run("witness", "--alcove", "[[1,0],[1,1]]", "--lambda", "1,0", "--k", "1")),
        "witness.schema.json",
    )

    # degeneration family, via stdin input
    validate(
        json.loads(
            run("degenerate", "--emit-latex",
                stdin='{"alcove": [[0,1,0],[1,1,0],[1,1,1]], "t": 1}')
        ),
        "degeneration.schema.json",
    )

    # chain certificate
    validate(json.loads(run("chain", "-n", "2", "--lambda", "2,0")), "certificate.schema.json")

    # verification reports, one per suite family
    for suite, args in [
        ("dominance", ["-n", "3", "--max-entry", "2"]),
        ("alcove", ["-n", "2"]),
        ("order", ["-n", "2"]),
        ("lattice", ["-n", "2"]),
        ("minuscule", ["-n", "2"]),
        ("convolution", ["-n", "2"]),
        ("main", ["-n", "2"]),
    ]:
        validate(json.loads(run("verify", suite, *args)), "report.schema.json")

    print("all emitted documents conform to the published schemas")
    return 0


if __name__ == "__main__":
    sys.exit(main())
