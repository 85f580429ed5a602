"""
The command line
================

Each subcommand prints one JSON report on standard output and a one-line
summary on standard error.  Graph files number vertices from 1, JSON from 0.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def uklc(*args):
    proc = subprocess.run([sys.executable, "-m", "uklc", *map(str, args)],
                          capture_output=True, text=True)
    print("$ uklc", *args, f"  (exit {proc.returncode})")
    print("  " + proc.stderr.strip())
    return proc


out = Path(tempfile.mkdtemp()) / "gadget"
uklc("gen", "gadget", "-k", 2, "-n", 2, "-o", out)
print(sorted(p.name for p in out.iterdir()))

report = json.loads(uklc("unique", out / "graph.col", out / "lists.json").stdout)
print(report["verdict"], report["coloring"])

uklc("direct", out / "graph.col", out / "lists.json", out / "coloring.json")
uklc("certify", "-k", 3, out / "graph.col")
uklc("search", "witness", "-k", 2, "-t", 3, "--nodes", "1e7", out / "graph.col")
uklc("search", "witness", "-k", 2, "--nodes", 5, out / "graph.col")
uklc("solve", "missing.col", "lists.json")
print(sorted(json.loads(uklc("--schema").stdout)))
