"""Runs the predkit CLI and validates every --format json artifact and JSONL instance
against the schemas in tools/schemas. Usage: test_schemas.py <predkit binary> <schema dir>"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BINARY = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

registry = Registry()
schemas = {}
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    schemas[path.name.removesuffix(".schema.json")] = doc

failures = []


def validate(kind, value, label):
    validator = jsonschema.Draft202012Validator(schemas[kind], registry=registry)
    errors = sorted(validator.iter_errors(value), key=lambda e: list(e.path))
    if errors:
        failures.append(f"{label}: {errors[0].message} at {list(errors[0].path)}")


def run(args, expect, out_path=None):
    cmd = [BINARY, *args]
    if out_path is not None:
        cmd += ["--out", str(out_path)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}: {proc.stderr.strip()}")
    return proc


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    def report(name, kind, args, expect):
        out = tmp / f"{name}.json"
        run([*args, "--format", "json"], expect, out)
        if out.exists():
            validate(kind, json.loads(out.read_text()), name)

    report("certify-pass", "certify",
           ["certify", "--alg", "ftp", "--problem", "asg", "--t", "3", "--claim", "1,2,1", "--strict",
            "--exhaustive-n", "6"], 0)
    report("certify-fail", "certify",
           ["certify", "--alg", "always-zero", "--problem", "asg", "--t", "3", "--claim", "2,0,0", "--strict",
            "--adversary", "purely-online", "--n", "100"], 1)
    report("certify-inf", "certify",
           ["certify", "--alg", "ftp", "--problem", "asg", "--t", "inf", "--claim", "1,inf,1", "--strict",
            "--exhaustive-n", "4"], 0)
    report("certify-vc", "certify",
           ["certify", "--alg", "safe-ftp", "--problem", "vc", "--t", "3", "--claim", "1,inf,1", "--strict",
            "--samples", "30"], 0)
    report("reduction-pass", "check-reduction",
           ["check-reduction", "--id", "asg-to-bdvc", "--t", "3", "--samples", "1000"], 0)
    report("reduction-broken", "check-reduction",
           ["check-reduction", "--id", "asg-to-bdvc-broken", "--samples", "300"], 1)
    report("reduction-dom-strict", "check-reduction",
           ["check-reduction", "--id", "vc-to-dom", "--variant", "strict", "--samples", "100"], 0)
    report("adversary-run", "adversary",
           ["adversary", "--adversary", "all-ones-pred", "--alg", "ftp", "--t", "3", "--n", "20"], 0)
    report("slack-curve", "slack-curve",
           ["adversary", "--adversary", "purely-online", "--alg", "always-zero", "--t", "3", "--n", "10,100,1000",
            "--claim", "2,0,0", "--strict"], 1)
    report("pareto", "pareto", ["pareto", "--t", "3"], 0)
    report("paging-fbb", "paging-bench",
           ["paging-bench", "--policy", "fbb", "--t", "5", "--n", "300", "--samples", "50"], 0)
    report("paging-fwz", "certify",
           ["paging-bench", "--policy", "fwz", "--t", "3", "--n", "200", "--samples", "50"], 0)

    for problem in ["asg", "vc", "ir", "spill", "sat2", "dom", "paging"]:
        jsonl = tmp / f"{problem}.jsonl"
        run(["gen", "--problem", problem, "--count", "20", "--seed", "9"], 0, jsonl)
        for number, line in enumerate(jsonl.read_text().splitlines(), 1):
            validate("instance", json.loads(line), f"gen {problem} line {number}")
        report(f"verify-{problem}", "verify-instances", ["verify-instances", "--in", str(jsonl)], 0)

    bad = tmp / "bad.jsonl"
    bad.write_text('{"problem":"vc","t_or_k":null,"x":"11","xhat":"11","requests":[[],[0]]}\n')
    report("verify-bad", "verify-instances", ["verify-instances", "--in", str(bad)], 1)

    # Exit codes for usage and configuration errors.
    for args in (["certify", "--alg", "nope", "--claim", "1,0,0"],
                 ["check-reduction", "--id", "nope"],
                 ["gen", "--problem", "chess"],
                 ["gen", "--problem", "asg", "--format", "csv"],
                 ["certify", "--alg", "ftp", "--claim", "1,1,1", "--strict", "--kappa", "1"],
                 ["verify-instances", "--in", str(tmp / "missing.jsonl")],
                 ["no-such-command"]):
        run(args, 2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print(f"validated CLI artifacts against {len(schemas)} schemas")
