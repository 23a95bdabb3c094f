"""Regenerate the golden transcripts for the bundled config corpus.

Run from the repository root after an intentional format or algorithm
change, then review the diff:

    python3 tools/make_goldens.py
"""

from __future__ import annotations

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "tests"))

from corpus import GOLDEN_DIR, build_transcript, corpus_paths  # noqa: E402


def main() -> None:
    GOLDEN_DIR.mkdir(exist_ok=True)
    for path in corpus_paths():
        golden = GOLDEN_DIR / (path.stem + ".transcript")
        code, _, err = build_transcript(path, golden)
        if code != 0:
            raise SystemExit(f"{path.name}: exit {code}: {err}")
        print(f"wrote {golden.relative_to(REPO)}")


if __name__ == "__main__":
    main()
