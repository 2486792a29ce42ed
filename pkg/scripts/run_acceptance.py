"""Run the exit-criteria suite and print one PASS/FAIL line per criterion.

    python scripts/run_acceptance.py [extra pytest args]
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def main(argv):
    cmd = [sys.executable, "-m", "pytest", "-q", "-m", "acceptance", str(ROOT / "tests" / "test_acceptance.py"), *argv]
    proc = subprocess.run(cmd, cwd=ROOT, capture_output=True, text=True)
    lines = [line for line in proc.stdout.splitlines() if line.startswith("criterion ")]
    print("\n".join(lines))
    if proc.returncode != 0 and not lines:
        print(proc.stdout[-4000:], proc.stderr[-4000:], sep="\n")
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
