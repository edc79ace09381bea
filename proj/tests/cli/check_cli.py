"""End-to-end checks of the oddrobin executable: exit codes, schema, determinism, CSV/JSON agreement."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
from decimal import Decimal

import jsonschema

BINARY = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
failures = []


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def expect(condition, message):
    print(("ok   " if condition else "FAIL ") + message)
    if not condition:
        failures.append(message)


def validated(text, label):
    try:
        doc = json.loads(text)
        jsonschema.validate(doc, SCHEMA)
    except (ValueError, jsonschema.ValidationError) as err:
        expect(False, f"{label}: schema ({str(err).splitlines()[0]})")
        return None
    expect(True, f"{label}: schema")
    return doc


def verdicts(doc):
    for stage in doc["stages"]:
        for v in stage["verdicts"]:
            yield stage["name"], v


code, first, _ = run("verify", "all")
expect(code == 0, f"verify all exits 0 (got {code})")
doc = validated(first, "verify all")
if doc:
    expect(doc["overall"] == "holds", "verify all overall holds")
    expect(all(v["outcome"] != "undecided" for _, v in verdicts(doc)), "verify all has no undecided verdict")
    expect("warning" not in doc, "verify all carries no warning")
    names = [s["name"] for s in doc["stages"]]
    expect(names[-1] == "coverage_audit", "coverage audit is the last stage")
    c = next(k for k in doc["constants"] if k["name"] == "C")
    expect(Decimal(c["lo"]) < Decimal("0.73981") < Decimal("1"), "C enclosure reported")

code, second, _ = run("verify", "all")
expect(second == first, "verify all is byte-identical across runs")

code, par, _ = run("--parallel", "verify", "all")
expect(code == 0, "parallel verify all exits 0")
par_doc, seq_doc = json.loads(par), json.loads(first)
par_doc["config"]["parallel"] = False
expect(par_doc == seq_doc, "parallel report equals sequential report")

code, out, err = run("--debug-constant-c", "0.6", "verify", "all")
expect(code == 1, f"debug constant 0.6 exits 1 (got {code})")
expect("UNSOUND" in err, "debug run warns on stderr")
bad = validated(out, "debug verify all")
if bad:
    expect("warning" in bad and bad["overall"] == "fails", "debug report flagged and failing")

for args in (["--precision", "100", "constants"], ["frobnicate"], [], ["scan", "--from", "2"],
             ["lemma", "--name", "2.4", "--prime", "19997"], ["lemma", "--name", "3.7"],
             ["--sieve-limit", "1000", "verify", "all"], ["ca", "list", "--count", "0"],
             ["--debug-constant-c", "abc", "constants"]):
    code, _, _ = run(*args)
    expect(code == 64, f"{' '.join(args) or '(no args)'} exits 64 (got {code})")

code, out, _ = run("--precision", "64", "--no-ladder", "verify", "all")
expect(code in (0, 2), f"64-bit run without ladder exits 0 or 2 (got {code})")
validated(out, "64-bit verify all")

code, _, _ = run("--help")
expect(code == 0, "--help exits 0")

for args in (["scan", "--from", "3", "--to", "2001"], ["ca", "list", "--count", "30"],
             ["primorial-sweep", "--from", "54", "--to", "300"], ["lemma", "--name", "2.2", "--prime", "10007"],
             ["lemma", "--name", "2.4", "--prime", "20011"], ["lemma", "--name", "thm3.1"], ["constants"],
             ["--precision", "512", "--no-ladder", "scan", "--to", "999"], ["--precision", "64", "constants"]):
    code, out, _ = run(*args)
    expect(code == 0, f"{' '.join(args)} exits 0 (got {code})")
    validated(out, " ".join(args))

code, out, _ = run("primorial-sweep", "--from", "3", "--to", "60")
expect(code == 1, "sweep including k < 52 exits 1")

for args in (["scan", "--to", "2001"], ["constants"], ["ca", "list", "--count", "12"]):
    _, js, _ = run(*args)
    _, cs, _ = run("--format", "csv", *args)
    rows = list(csv.DictReader(io.StringIO(cs)))
    pairs = list(verdicts(json.loads(js)))
    same = len(rows) == len(pairs)
    for row, (stage, v) in zip(rows, pairs):
        same = same and row["stage"] == stage and row["subject"] == v["subject"] and row["outcome"] == v["outcome"]
        for side in ("lhs", "rhs"):
            same = same and Decimal(row[f"{side}_lo"]) == Decimal(v[side]["lo"])
            same = same and Decimal(row[f"{side}_hi"]) == Decimal(v[side]["hi"])
            same = same and (row[f"{side}_exact"] or None) == v[side]["exact"]
    expect(same, f"CSV and JSON agree numerically for {' '.join(args)}")

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "report.json")
    code, out, _ = run("--out", path, "constants")
    expect(code == 0 and out == "", "--out writes nothing to stdout")
    _, direct, _ = run("constants")
    written = json.load(open(path))
    written["config"]["out"] = None
    expect(written == json.loads(direct), "--out file matches stdout report")

code, out, _ = run("--format", "text", "verify", "all")
expect(code == 0 and "overall: holds" in out, "text report ends with overall: holds")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
