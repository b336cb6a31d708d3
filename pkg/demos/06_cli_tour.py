"""Walkthrough: the command-line surface, end to end.

Run with: python3 demos/06_cli_tour.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

def ipkit(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "ipkit", *args],
        capture_output=True,
        text=True,
    )
    print(f"$ ipkit {' '.join(args)}")
    out = proc.stdout.strip() or proc.stderr.strip()
    for line in out.splitlines():
        print("  " + line)
    print(f"  (exit {proc.returncode})\n")
    return proc

# value-set listings straight from a generated sequence
ipkit("fs", "--seq", "nat:4")
ipkit("fp", "--seq", "pow:2:4")

work = Path(tempfile.mkdtemp())

# a search that succeeds writes a certificate; exit 0 means found
cert = work / "cert.json"
ipkit("search", "--seq", "nat:64", "--spec", "mod(6,0)", "--depth", "3", "--json", str(cert))

# the verifier rechecks the file from scratch; exit 0 means it holds up
ipkit("verify", "--cert", str(cert))

# tamper with the claimed block sums and the verifier objects (exit 1)
doc = json.loads(cert.read_text())
doc["ys"] = ["6", "7", "6"]
cert.write_text(json.dumps(doc))
ipkit("verify", "--cert", str(cert))

# an unsatisfiable target exhausts the space: exit 1, nothing found
ipkit("search", "--seq", "nat:8", "--spec", "none", "--depth", "1")

# refutation at a finite depth: exit 0 with a witness, exit 1 without one
ipkit("refute", "--spec", "mod(6,0)", "--depth", "3", "--bound", "10")
ipkit("refute", "--spec", "mod(6,0)", "--depth", "6", "--bound", "60")

# colorings live in plain text files: one "value color" pair per line
coloring = work / "parity.txt"
coloring.write_text("".join(f"{v} {v % 2}\n" for v in range(1, 13)))
ipkit("hindman", "--coloring", str(coloring), "--depth", "2")

# semigroup reports from a table file: first line the order, then the rows
table = work / "mod6.txt"
rows = [[(a * b) % 6 for b in range(6)] for a in range(6)]
table.write_text("6\n" + "\n".join(" ".join(map(str, r)) for r in rows))
ipkit("semigroup", "--table", str(table), "--report", "full")

# dilation preimages straight from the rewriter
ipkit("dilate", "--spec", "mod(6,0)", "--n", "2")

# malformed input is exit 2 with a one-line error
ipkit("search", "--seq", "nat:8", "--spec", "mod(0,0)", "--depth", "1")
