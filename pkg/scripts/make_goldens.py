"""Regenerate the byte-frozen CLI outputs under tests/golden/.

Run from the repository root after any intentional output change:

    python3 scripts/make_goldens.py

then review the diff before committing.  The determinism gate compares
fresh CLI output against these files byte for byte.
"""

from __future__ import annotations

import io
import os
import sys
from contextlib import redirect_stdout
from pathlib import Path

from beloch.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

STDOUT_CASES = [
    ("solve.json", ["solve", "--a", "0", "--b", "0", "--c", "-6", "--json"]),
    ("analyze.json", ["analyze", "--p", "2", "--q", "1", "--json"]),
    ("surface.json", ["surface", "--p", "1", "--q", "1", "--json"]),
    ("general.json", ["classify-general", "--coeffs", "1,1,4,-2,1", "--json"]),
]


def run() -> None:
    os.environ["BELOCH_SEED"] = "0"
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in STDOUT_CASES:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        if code != 0:
            raise SystemExit(f"{argv} exited {code}")
        (GOLDEN / name).write_text(buf.getvalue())
        print(f"wrote {name} ({len(buf.getvalue())} bytes)")
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(
            ["plot", "--p", "2", "--q", "1", "--out", str(GOLDEN / "plot.svg")]
        )
    if code != 0:
        raise SystemExit(f"plot exited {code}")
    print(f"wrote plot.svg ({(GOLDEN / 'plot.svg').stat().st_size} bytes)")
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(
            [
                "orbit-csv",
                "--p", "2",
                "--q", "1",
                "--range", "-1,2",
                "--n", "16",
                "--out", str(GOLDEN / "orbit.csv"),
            ]
        )
    if code != 0:
        raise SystemExit(f"orbit-csv exited {code}")
    print(f"wrote orbit.csv ({(GOLDEN / 'orbit.csv').stat().st_size} bytes)")


if __name__ == "__main__":
    sys.exit(run())
