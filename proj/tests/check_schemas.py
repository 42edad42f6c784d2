"""Runs ramsey-lab in every mode and validates its JSON output against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

cli, schema_dir, work = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
work.mkdir(parents=True, exist_ok=True)


def schema(name):
    return json.loads((schema_dir / f"{name}.schema.json").read_text())


def validator(name):
    s = schema(name)
    jsonschema.Draft202012Validator.check_schema(s)
    return jsonschema.Draft202012Validator(s)


report = validator("report")
artifacts = {"graph": validator("graph"), "hypergraph": validator("hypergraph"), "coloring": validator("coloring")}

graph = ["--k", "3", "--m", "6", "--p", "0.5", "--seed", "3"]
runs = [
    ("generate", graph, "graph"),
    ("enumerate", graph, "hypergraph"),
    ("color", graph + ["--coloring", "vertex-cut"], "coloring"),
    ("greedy", graph + ["--n", "5"], None),
    ("greedy", ["--k", "3", "--m", "6", "--p", "0.3", "--seed", "2", "--n", "8"], None),
    ("verify", graph + ["--n", "2", "--trials", "4", "--emit-trials"], None),
    ("concentration", graph + ["--trials", "4", "--statistic", "X_v", "--emit-trials"], None),
    ("oracle", ["--k", "3", "--m", "2", "--p", "1", "--n", "4", "--timestamp"], None),
    ("generate", ["--paper", "3", "2", "4", "--c", "1"], "graph"),
]

failures = 0
for i, (mode, args, kind) in enumerate(runs):
    rep_path, out_path = work / f"report{i}.json", work / f"artifact{i}.json"
    cmd = [cli, mode, *args, "--report", str(rep_path)]
    if kind:
        cmd += ["--out", str(out_path)]
    rc = subprocess.run(cmd).returncode
    if rc not in (0, 2):
        print(f"{mode}: exit {rc}")
        failures += 1
        continue
    docs = [(report, rep_path)] + ([(artifacts[kind], out_path)] if kind else [])
    for v, path in docs:
        errors = list(v.iter_errors(json.loads(path.read_text())))
        for e in errors:
            print(f"{mode} {path.name}: {e.message} at {list(e.absolute_path)}")
        failures += len(errors)

# A malformed report must be rejected.
bad = json.loads((work / "report0.json").read_text())
bad["schema_version"] = 2
if report.is_valid(bad):
    print("schema accepted a wrong schema_version")
    failures += 1

print(f"{len(runs)} runs validated, {failures} problems")
sys.exit(1 if failures else 0)
