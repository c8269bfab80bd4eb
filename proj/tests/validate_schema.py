"""Validate every JSON report of the CLI against schema/report.json."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)

runs = [
    ["strings", "--n", "3"],
    ["indecomposables", "--n", "3"],
    ["stability", "--n", "2"],
    ["stability", "--n", "2", "--class", "0,2,-1", "--order", "paper-descending"],
    ["stability", "--n", "3", "--module", "R1"],
    ["walls", "--n", "3", "--emit-rays"],
    ["chambers", "--n", "2", "--detail"],
    ["chambers", "--n", "1"],
    ["verify", "--n", "2"],
]
for args in runs:
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    if json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n" != out:
        sys.exit(f"{' '.join(args)}: output is not canonical")
    print("ok", " ".join(args))
