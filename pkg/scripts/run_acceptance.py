"""Run the acceptance suite and print one PASS/FAIL line per criterion."""
import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parents[1]
proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-m", "acceptance", "-p", "no:cacheprovider",
                       str(root / "tests" / "test_acceptance.py")], capture_output=True, text=True, cwd=root)
lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("PASS C", "FAIL C"))]
# the terminal summary repeats each line once; keep the final block
seen = {}
for ln in lines:
    seen[ln.split()[1]] = ln
for key in sorted(seen, key=lambda k: int(k[1:].rstrip(":"))):
    print(seen[key])
sys.exit(proc.returncode)
