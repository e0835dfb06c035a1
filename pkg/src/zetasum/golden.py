"""Frozen envelope constants and certified values.

A golden file stores the constant produced by the first certified run of a
claim together with a hash of the grid and configuration that produced it.
Later runs with the same grid/config must reproduce it (the pipeline is
deterministic); a changed grid invalidates the constant and refreezes.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Optional

ENV_VAR = "ZETASUM_GOLDEN_DIR"


def golden_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, Path.cwd() / "golden"))


def _path(claim_id: str) -> Path:
    safe = claim_id.replace("/", "_")
    return golden_dir() / f"{safe}.json"


def context_hash(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, default=repr).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def load(claim_id: str) -> Optional[dict]:
    p = _path(claim_id)
    if not p.exists():
        return None
    return json.loads(p.read_text())


def freeze(claim_id: str, constant: float, context: dict) -> dict:
    """Return the frozen record, writing it on first certified run.

    If a record exists but its context hash differs (new grid or config),
    the record is replaced rather than silently compared across contexts.
    """
    record = {"claim_id": claim_id, "constant": constant,
              "context_hash": context_hash(context)}
    existing = load(claim_id)
    if existing is not None and existing.get("context_hash") == record["context_hash"]:
        return existing
    golden_dir().mkdir(parents=True, exist_ok=True)
    _path(claim_id).write_text(json.dumps(record, indent=2) + "\n")
    return record
