"""Rewrite tests/golden/*.txt from the current CLI output.

CLI: python scripts/regenerate_golden.py

Review the diff before committing: golden files are the CLI contract.
"""

import io
import json
import sys
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from main import run_cli  # noqa: E402

GOLDEN_DIR = Path(__file__).parent.parent / "tests" / "golden"


def main() -> int:
    """Regenerate every golden file listed in cases.json."""
    cases: dict[str, list[str]] = json.loads(
        (GOLDEN_DIR / "cases.json").read_text(encoding="utf-8")
    )
    failed = 0
    for name, argv in cases.items():
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            exit_code = run_cli(argv)
        if exit_code != 0:
            print(f"{name}: exit code {exit_code}, not written", file=sys.stderr)
            failed += 1
            continue
        (GOLDEN_DIR / f"{name}.txt").write_text(buffer.getvalue(), encoding="utf-8")
        print(f"{name}: ok")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
