"""Rewrite tests/golden/ from the current CLI output.

    python scripts/regen_golden.py
"""

import io
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from golden_cases import CASES, GOLDEN, materialize, writes_svg  # noqa: E402

from elamite.cli import run  # noqa: E402


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        for name, argv in CASES.items():
            svg = Path(tmp) / f"{name}.svg"
            out, err = io.StringIO(), io.StringIO()
            code = run(materialize(argv, svg), stdout=out, stderr=err)
            if code != 0:
                raise SystemExit(f"{name}: exit {code}: {err.getvalue()}")
            (GOLDEN / f"{name}.out").write_text(out.getvalue(), encoding="utf-8")
            if writes_svg(argv):
                (GOLDEN / f"{name}.svg").write_bytes(svg.read_bytes())
            print(name)


if __name__ == "__main__":
    main()
