"""Canonical text forms shared by configs, transcripts, and the CLI.

Everything rendered here must be byte-stable: fixed key order, no
insignificant whitespace, ascending sets.  Transcript hashes and golden
files depend on it.
"""

from __future__ import annotations

import hashlib
import json


def canonical_json(obj) -> str:
    """Serialize with sorted keys and no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def roster_hash(configs: list[dict]) -> str:
    """SHA-256 of the canonical JSON of a list of dense-set configs."""
    return hashlib.sha256(canonical_json(configs).encode("ascii")).hexdigest()


def render_seq(xs) -> str:
    """Render a sequence of naturals as ``[a,b,c]`` with no spaces."""
    return "[" + ",".join(str(x) for x in xs) + "]"


def parse_seq(text: str) -> tuple[int, ...]:
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a sequence literal: {text!r}")
    body = text[1:-1]
    if not body:
        return ()
    out = []
    for part in body.split(","):
        if not part or not part.isdigit():
            raise ValueError(f"bad sequence entry {part!r} in {text!r}")
        out.append(int(part))
    return tuple(out)


def render_bits(bits) -> str:
    """Render a 0/1 sequence as a compact string; ``-`` when empty."""
    if not bits:
        return "-"
    return "".join(str(b) for b in bits)


def parse_bits(text: str) -> tuple[int, ...]:
    if text == "-":
        return ()
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"bad bit string {text!r}")
    return tuple(int(c) for c in text)
