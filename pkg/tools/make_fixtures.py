"""Regenerate the JSON fixtures bundled in hopfcross/data.

Run from the repository root:  python3 tools/make_fixtures.py
The test suite checks that the shipped files equal what this script writes.
"""

from __future__ import annotations

import sys
from pathlib import Path

from hopfcross.fixtures import build_fixture_documents
from hopfcross.serial import dump_json

OUT = Path(__file__).resolve().parent.parent / "src" / "hopfcross" / "data"


def main() -> int:
    docs = build_fixture_documents()
    for rel, doc in sorted(docs.items()):
        path = OUT / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dump_json(doc))
    print(f"wrote {len(docs)} documents under {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
