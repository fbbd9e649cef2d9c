#!/usr/bin/env python3
"""End-to-end checks of the nsd command line tool. One case per invocation."""

import argparse
import json
import os
import subprocess
import sys
import tempfile

SKIP = 77


def run(nsd, *args, env=None):
    return subprocess.run([nsd, *args], capture_output=True, text=True, env=env)


def expect(cond, message):
    if not cond:
        print("FAIL:", message)
        sys.exit(1)


def case_check_json(nsd, data):
    r = run(nsd, "check", f"{data}/mn/2_6.nsd", "--format", "json")
    expect(r.returncode == 0, f"exit {r.returncode}")
    report = json.loads(r.stdout)
    expect(report["s_alternating"] is True, "2_6 should be S-alternating")
    expect(report["surface"]["name"] == "Klein bottle", "surface")


def case_chunk_dot(nsd, data):
    try:
        import pydot
    except ImportError:
        print("pydot not installed")
        return SKIP
    r = run(nsd, "chunk", f"{data}/mn/2_6.nsd", "--format", "dot")
    expect(r.returncode == 0, f"exit {r.returncode}")
    graphs = pydot.graph_from_dot_data(r.stdout)
    expect(graphs is not None and len(graphs) == 2, "two DOT graphs")
    names = sorted(g.get_name() for g in graphs)
    expect(names == ["edge_classes", "face_pairing"], f"graph names {names}")


def case_verdict_prism(nsd, data):
    r = run(nsd, "verdict", f"{data}/mn/2_6.nsd", "--ambient", "prism:3,1",
            "--marking", f"{data}/mn/2_6.marking", "--strict", "--format", "json")
    expect(r.returncode == 0, f"exit {r.returncode}: {r.stderr}")
    v = json.loads(r.stdout)
    expect(v["outcome"] == "hyperbolic", v["outcome"])


def case_strict_negative(nsd, data):
    r = run(nsd, "check", f"{data}/mn/1_1.nsd", "--strict")
    expect(r.returncode == 1, f"exit {r.returncode}")
    r = run(nsd, "check", f"{data}/mn/1_1.nsd")
    expect(r.returncode == 0, f"non-strict exit {r.returncode}")


def case_errors(nsd, data):
    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.nsd")
        with open(bad, "w") as f:
            f.write("crossings: 1\nedge: (0,0) (0,zz) +1\n")
        r = run(nsd, "info", bad)
        expect(r.returncode == 2, f"bad file exit {r.returncode}")
        expect("bad.nsd:2" in r.stderr, f"file and line in {r.stderr!r}")
    r = run(nsd, "verdict", f"{data}/mn/2_6.nsd", "--ambient", "prism:3,1")
    expect(r.returncode == 2, f"missing marking exit {r.returncode}")
    expect("MissingMarking" in r.stderr, r.stderr)
    r = run(nsd, "representativity", f"{data}/mn/2_6.nsd", "--slope", "2,4",
            "--marking", f"{data}/mn/2_6.marking")
    expect(r.returncode == 2, f"non-coprime exit {r.returncode}")
    r = run(nsd, "census", "--max-crossings", "9")
    expect(r.returncode == 2, f"census bound exit {r.returncode}")
    r = run(nsd, "no-such-command")
    expect(r.returncode == 2, f"unknown subcommand exit {r.returncode}")


def case_cover_roundtrip(nsd, data):
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "cover.nsd")
        r = run(nsd, "cover", f"{data}/mn/fig1_link.nsd")
        expect(r.returncode == 0, f"exit {r.returncode}")
        with open(path, "w") as f:
            f.write(r.stdout)
        first = run(nsd, "check", path, "--format", "json")
        expect(first.returncode == 0, first.stderr)
        report = json.loads(first.stdout)
        expect(report["surface"]["orientable"], "cover surface orientable")
        expect(report["crossings"] == 8, "cover crossings")
        # Strip comments and reorder the edge lines; the report must not move.
        lines = [l for l in r.stdout.splitlines() if l and not l.startswith("#")]
        edges = [l for l in lines if l.startswith("edge:")]
        rest = [l for l in lines if not l.startswith("edge:")]
        again = os.path.join(tmp, "again.nsd")
        with open(again, "w") as f:
            f.write("\n".join(rest[:1] + edges[::-1] + rest[1:]) + "\n")
        second = run(nsd, "check", again, "--format", "json")
        expect(second.returncode == 0, second.stderr)
        expect(first.stdout == second.stdout, "reports differ after re-ingest")


def case_determinism(nsd, data):
    commands = [
        ["check", f"{data}/mn/3_16.nsd", "--format", "json"],
        ["chunk", f"{data}/mn/2_6.nsd", "--format", "json"],
        ["exceptional-slopes", f"{data}/mn/2_6.nsd", "--marking", f"{data}/mn/2_6.marking",
         "--bound", "8", "--format", "json"],
        ["census", "--max-crossings", "3", "--format", "json"],
    ]
    for cmd in commands:
        outputs = set()
        for threads in ("1", "4", "1"):
            env = dict(os.environ, NSD_THREADS=threads)
            r = run(nsd, *cmd, env=env)
            expect(r.returncode == 0, f"{cmd[0]} exit {r.returncode}")
            outputs.add(r.stdout)
        expect(len(outputs) == 1, f"{cmd[0]} output varies")
    census = json.loads(run(nsd, "census", "--max-crossings", "3", "--format", "json").stdout)
    expect(census["count"] == 17, "census count")


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--nsd", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("case", choices=sorted(CASES))
    args = parser.parse_args()
    result = CASES[args.case](args.nsd, args.data)
    sys.exit(result or 0)


if __name__ == "__main__":
    main()
