"""Validate the JSON trace of a run against the trace schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    st, schema_path, proof, *rules = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    for extra in ([], ["--no-timing"]):
        run = subprocess.run([st, "run", proof, "--rules", *rules, "--trace", "json", *extra],
                             capture_output=True, text=True, check=True)
        jsonschema.validate(json.loads(run.stdout), schema)
    print("trace conforms to schema")


if __name__ == "__main__":
    main()
