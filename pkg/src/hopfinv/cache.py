"""File cache for CLI results: one JSON document per key hash.

Writes go to a temporary file in the same directory followed by an
atomic rename, so concurrent workers never observe partial entries.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile

ENV_VAR = "CHA_CACHE_DIR"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, directory: str | None, engine_version: str):
        self.directory = directory
        self.engine_version = engine_version

    @classmethod
    def from_env(cls, engine_version: str, override: str | None = None, disabled: bool = False):
        directory = None if disabled else (override or os.environ.get(ENV_VAR))
        return cls(directory, engine_version)

    @property
    def enabled(self) -> bool:
        return bool(self.directory)

    def _path(self, key) -> str:
        digest = hashlib.sha256(dumps([self.engine_version, key]).encode()).hexdigest()
        return os.path.join(self.directory, digest[:2], digest + ".json")

    def get(self, key):
        if not self.enabled:
            return None
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, ValueError):
            return None
        if entry.get("key") != key or entry.get("engine_version") != self.engine_version:
            return None
        return entry["value"]

    def put(self, key, value) -> None:
        if not self.enabled:
            return
        path = self._path(key)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        entry = {"key": key, "engine_version": self.engine_version, "value": value}
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(dumps(entry))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, key, compute):
        hit = self.get(key)
        if hit is not None:
            return hit
        value = json.loads(dumps(compute()))
        self.put(key, value)
        return value
