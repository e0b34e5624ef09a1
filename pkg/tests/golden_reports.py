"""Build the table conformance golden files.

Run ``python3 tests/golden_reports.py`` from the repository root to rewrite
tests/golden/; the test suite regenerates them in memory and compares bytes.
"""

from pathlib import Path

from leibniz_bider.catalog import make_algebra
from leibniz_bider.io import dumps
from leibniz_bider.report import table_payload

GOLDEN_DIR = Path(__file__).parent / "golden"
GOLDEN_TAGS = ("F1", "F2", "R_NF", "R_F1", "L1", "L2")
GOLDEN_N = range(4, 9)


def render(tag: str) -> str:
    return dumps({str(n): table_payload(make_algebra((tag, n)), (tag, n)) for n in GOLDEN_N})


def path_for(tag: str) -> Path:
    return GOLDEN_DIR / f"table_{tag}.json"


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for tag in GOLDEN_TAGS:
        path_for(tag).write_text(render(tag), encoding="utf-8")
        print("wrote", path_for(tag))
