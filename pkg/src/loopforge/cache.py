"""Persistent oracle cache: one JSON file per canonical key.

Entries are written atomically (temp file + rename), so concurrent writers
can only ever replace a whole entry.  Keys embed the model version; bumping
:data:`MODEL_VERSION` invalidates old entries.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from pathlib import Path

MODEL_VERSION = "1"

_SAFE = re.compile(r"[^A-Za-z0-9._-]+")


def default_cache_dir() -> Path:
    env = os.environ.get("LOOPFORGE_CACHE")
    if env:
        return Path(env)
    return Path.cwd() / ".loopforge-cache"


class CacheStore:
    def __init__(self, directory: Path | str):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        digest = hashlib.sha256(f"{MODEL_VERSION}|{key}".encode()).hexdigest()[:16]
        stem = _SAFE.sub("_", key)[:80].strip("_") or "entry"
        return self.directory / f"{stem}-{digest}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return None
        if entry.get("version") != MODEL_VERSION or entry.get("key") != key:
            return None
        return entry

    def put(self, key: str, fields: dict) -> None:
        entry = dict(fields)
        entry["key"] = key
        entry["version"] = MODEL_VERSION
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def merge(self, key: str, fields: dict) -> dict:
        """Merge `fields` into the existing entry, keeping the strongest facts."""
        entry = self.get(key) or {}
        merged = dict(entry)
        for name, value in fields.items():
            if name == "at_least":
                merged[name] = max(value, merged.get(name, 0))
            else:
                merged[name] = value
        self.put(key, merged)
        return merged
