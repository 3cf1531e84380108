"""CLI checks: JSON output against docs/result.schema.json, exit codes,
byte-identical repeated runs, and round trip of emitted generators."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import yaml

CLI = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
SCHEMA = json.loads((ROOT / "docs" / "result.schema.json").read_text())
PROBLEMS = ROOT / "problems"

failures = []


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def write_problem(doc):
    tmp = tempfile.NamedTemporaryFile("w", suffix=".prob", delete=False)
    yaml.safe_dump(doc, tmp)
    tmp.close()
    return tmp.name


# fast problems for every command; ex4's integration takes minutes and is left to acceptance
cases = [
    ("ann-fs", "cusp"), ("bfun", "cusp"), ("funceq", "gaussian"), ("laurent", "cusp"),
    ("laurent", "ex5"), ("zeta-diff", "gamma"), ("zeta-diff", "ex3"), ("zeta-diff", "gaussian"),
    ("verify", "gamma"), ("verify", "ex3"), ("verify", "cusp"), ("bfun", "ex4"),
]
for cmd, name in cases:
    prob = PROBLEMS / f"{name}.prob"
    r = run(cmd, prob, "--json")
    check(r.returncode == 0, f"{cmd} {name}: exit 0 (got {r.returncode}: {r.stderr.strip()})")
    try:
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, SCHEMA)
        check(True, f"{cmd} {name}: schema")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(False, f"{cmd} {name}: schema ({str(e).splitlines()[0]})")
        continue
    check(run(cmd, prob, "--json").stdout == r.stdout, f"{cmd} {name}: identical output on rerun")
    check("timings" not in doc, f"{cmd} {name}: no timings without --timings")

# timings are opt-in and still schema-valid
r = run("bfun", PROBLEMS / "cusp.prob", "--json", "--timings")
doc = json.loads(r.stdout)
jsonschema.validate(doc, SCHEMA)
check("timings" in doc, "bfun --timings: timings present")

# round trip: emitted generators, used as input, parse and print back unchanged
for name in ("cusp", "ex5"):
    out = json.loads(run("laurent", PROBLEMS / f"{name}.prob", "--json").stdout)
    gens = out["results"]["laurent"]["generators"]
    doc = yaml.safe_load((PROBLEMS / f"{name}.prob").read_text())
    doc["annihilator"] = gens
    for key in ("lambda0", "k"):
        doc.pop(key, None)
    r = run("ann-fs", write_problem(doc), "--json")
    echoed = json.loads(r.stdout)["problem"]["annihilator"] if r.returncode == 0 else None
    check(echoed == gens, f"laurent {name}: generators round-trip through a problem file")

# exit codes
r = run("bfun", ROOT / "problems" / "missing.prob")
check(r.returncode == 3, f"missing file: exit 3 (got {r.returncode})")
bad = write_problem({"vars": ["x"], "f": "x +* 1", "annihilator": ["dx"]})
r = run("bfun", bad, "--json")
check(r.returncode == 3, f"parse error: exit 3 (got {r.returncode})")
doc = json.loads(r.stdout)
jsonschema.validate(doc, SCHEMA)
check(doc["status"] == "input-error", "parse error: status input-error")
bad = write_problem({"vars": ["x"], "f": "x", "annihilator": ["dx"], "colour": "red"})
check(run("bfun", bad).returncode == 3, "unknown key: exit 3")
r = run("laurent", PROBLEMS / "cusp.prob", "--k=-3", "--json")
check(r.returncode == 3, f"k below the pole order: exit 3 (got {r.returncode})")
r = run("zeta-diff", PROBLEMS / "ex4.prob", "--timeout=0.5", "--json")
check(r.returncode == 2, f"timeout: exit 2 (got {r.returncode})")
doc = json.loads(r.stdout)
jsonschema.validate(doc, SCHEMA)
check(doc["status"] == "timeout" and doc.get("stage"), "timeout: status and stage reported")
r = run("--version")
check(r.returncode == 0 and r.stdout.startswith("holozeta "), "--version")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
