"""Rewrite the CLI snapshot files from the current implementation.

Review the diff before committing: the snapshots are only worth something
if each one was checked by hand once.

    python scripts/update_goldens.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from cli_golden import cases, golden_path, render, run_case  # noqa: E402


def main():
    for case in cases():
        text = render(case, *run_case(case))
        golden_path(case).write_text(text)
        print(f"wrote {golden_path(case).name}")


if __name__ == "__main__":
    main()
