#!/usr/bin/env python3
"""Regenerate the golden JSON files for the CLI end-to-end tests.

Run from the repository root after an intentional output change:

    python3 scripts/regen_golden.py
"""

import io
import os
import sys
from contextlib import redirect_stdout

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from test_cli import CASES, GOLDEN  # noqa: E402

from diffalg import cli  # noqa: E402


def main():
    for golden, argv, expected_code in CASES:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(argv)
        if code != expected_code:
            raise SystemExit(
                f"{golden}: exit code {code}, expected {expected_code}")
        path = os.path.join(GOLDEN, golden)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
        print("wrote", path)


if __name__ == "__main__":
    main()
