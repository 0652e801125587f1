"""Regenerate the CLI golden files under tests/golden/.

Run after an intentional change to output formatting or numerics, then
review the diff before committing.
"""

import contextlib
import io
from pathlib import Path

from typreal.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = {
    "compute_n6.json": ["compute", "--n", "6"],
    "compute_n7.json": ["compute", "--n", "7"],
    "compute_n7.csv": ["compute", "--n", "7", "--format", "csv"],
    "certify_n6.json": ["certify", "--n", "6"],
    "certify_n7.json": ["certify", "--n", "7"],
    "curve_n7_s3.csv": ["curve", "--n", "7", "--samples", "3"],
    "curve_n6_s64.csv": ["curve", "--n", "6", "--samples", "64"],
    "sweep_6_7.csv": ["sweep", "--from", "6", "--to", "7", "--format", "csv"],
    "sweep_6_7.json": ["sweep", "--from", "6", "--to", "7"],
    "spectrum_n6.json": ["spectrum", "--n", "6"],
    "spectrum_n7.csv": ["spectrum", "--n", "7", "--format", "csv"],
}


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        code, text = run(argv)
        assert code == 0, (name, code)
        (GOLDEN / name).write_text(text, newline="\n")
        print(f"wrote {name}")
