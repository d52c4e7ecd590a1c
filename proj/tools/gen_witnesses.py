#!/usr/bin/env python3
"""Regenerates data/witnesses_7_7.json with the SAT solver: one A set per n in [12, 33].

Usage: tools/gen_witnesses.py path/to/cysp > data/witnesses_7_7.json
"""
import json
import subprocess
import sys

cli = sys.argv[1] if len(sys.argv) > 1 else "build/tools/cysp"
rows = []
for n in range(12, 34):
    run = subprocess.run([cli, "--json", "solve", "7_7", str(n)],
                         capture_output=True, text=True, check=True)
    rows.append(f'  "{n}": {json.dumps(json.loads(run.stdout)["coloring"]["A"])}')
print("{\n" + ",\n".join(rows) + "\n}")
