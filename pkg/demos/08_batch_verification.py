"""Batch verification: run the criteria suite programmatically and through the CLI."""
import subprocess
import sys
import tempfile
from pathlib import Path

from hecke_rea import Config, export, run_suite
from hecke_rea.suite import CRITERIA

# A Config names the symmetry and the generic sample points; run_suite returns one report
# whose checks are prefixed by criterion number.
cfg = Config(("superflip", 1, 1))
rep = run_suite(cfg, only=[1, 2, 3, 14])
for k, status in rep.values["summary"].items():
    print(f"[{k}] {CRITERIA[int(k)][0]}: {status}")
print("skips:", [c.name for c in rep.checks if c.status == "skip"])

# Reports export as canonical JSON, byte-identical across runs
out = Path(tempfile.mkdtemp()) / "report.json"
export(rep, str(out))
print("exported", out.stat().st_size, "bytes")

# The same through the command line; exit code 0 means every check passed
cmd = [sys.executable, "-m", "hecke_rea", "rdims", "--standard", "3", "--shape", "2,1", "--eval", "q=2"]
res = subprocess.run(cmd, capture_output=True, text=True)
print("$ hecke-rea rdims --standard 3 --shape 2,1 --eval q=2   (exit", res.returncode, ")")
print(res.stdout)
