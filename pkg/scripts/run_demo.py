#!/usr/bin/env python3
"""Run the full report pipeline on the bundled demo corpus and seed dictionary.

Usage: python scripts/run_demo.py [out_dir]
"""

from __future__ import annotations

import sys

from algoscope.cli import main as cli_main
from algoscope.resources import demo_corpus_path, seed_dictionary_path


def main() -> int:
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "demo_out"
    rc = cli_main(
        [
            "report",
            "--corpus",
            str(demo_corpus_path()),
            "--dictionary",
            str(seed_dictionary_path()),
            "--end-year",
            "2015",
            "--out-dir",
            out_dir,
        ]
    )
    if rc == 0:
        print(f"report written to {out_dir}/")
    return rc


if __name__ == "__main__":
    sys.exit(main())
