"""On-disk cache of expensive pipeline polynomials.

Entries are plain text for auditability: a small header followed by the
canonical serialization of the polynomial.  The key is (kind, parameters,
engine version); anything that fails to parse, or whose header disagrees
with the expected key, counts as a miss and is recomputed.  Writes go
through a temporary file and an atomic rename, so concurrent processes may
share a cache directory.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .algebra import LaurentPoly, VarContext
from .version import ENGINE_VERSION

ENV_CACHE_DIR = "HIGGSBETTI_CACHE_DIR"
_MAGIC = "higgsbetti-cache 1"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "higgsbetti"


@dataclass(frozen=True)
class CacheConfig:
    directory: Path
    enabled: bool = True

    @classmethod
    def resolve(cls, directory: Optional[str] = None, enabled: bool = True) -> "CacheConfig":
        return cls(Path(directory) if directory else default_cache_dir(), enabled)


def entry_filename(kind: str, params: Dict[str, int]) -> str:
    fields = "_".join(f"{k}{v}" for k, v in sorted(params.items()))
    return f"{kind}_{fields}_v{ENGINE_VERSION}.txt"


def write_entry(
    path: Path, kind: str, params: Dict[str, int], poly: LaurentPoly
) -> None:
    """Serialize atomically: write to a temp file, then rename into place."""
    lines = [
        _MAGIC,
        f"kind {kind}",
        f"engine {ENGINE_VERSION}",
        f"created {datetime.now(timezone.utc).isoformat(timespec='seconds')}",
    ]
    lines.extend(f"param {k} {v}" for k, v in sorted(params.items()))
    lines.append("vars " + " ".join(poly.ctx.names))
    body = poly.to_lines()
    lines.append(f"terms {len(body)}")
    lines.extend(body)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_entry(
    path: Path, kind: str, params: Dict[str, int]
) -> Optional[LaurentPoly]:
    """Parse an entry; any mismatch or corruption is a miss (returns None)."""
    try:
        text = path.read_text()
    except OSError:
        return None
    try:
        lines = text.splitlines()
        if not lines or lines[0] != _MAGIC:
            return None
        header: Dict[str, str] = {}
        got_params: Dict[str, int] = {}
        idx = 1
        while idx < len(lines):
            line = lines[idx]
            idx += 1
            key, _, rest = line.partition(" ")
            if key == "param":
                name, _, value = rest.partition(" ")
                got_params[name] = int(value)
            elif key == "terms":
                break
            else:
                header[key] = rest
        if header.get("kind") != kind or header.get("engine") != ENGINE_VERSION:
            return None
        if got_params != params:
            return None
        count = int(line.partition(" ")[2])
        body = lines[idx:]
        if len(body) != count:
            return None
        ctx = VarContext(tuple(header["vars"].split()))
        return LaurentPoly.from_lines(ctx, body)
    except (ValueError, KeyError, IndexError):
        return None


def get_or_compute(
    kind: str,
    params: Dict[str, int],
    compute: Callable[[], LaurentPoly],
    config: Optional[CacheConfig] = None,
) -> LaurentPoly:
    """Look up an entry, computing and populating the cache on a miss."""
    if config is None or not config.enabled:
        return compute()
    path = config.directory / entry_filename(kind, params)
    hit = read_entry(path, kind, params)
    if hit is not None:
        return hit
    value = compute()
    write_entry(path, kind, params, value)
    return value


def generic_a(g: int, r: int, config: Optional[CacheConfig] = None) -> LaurentPoly:
    """Cached A_{g,r} with g separate alpha variables."""
    from .plethystic import a_poly_for, generic_layout

    return get_or_compute(
        "apoly", {"g": g, "r": r}, lambda: a_poly_for(generic_layout(g), r), config
    )


def collapsed_real_a(
    g: int, b: int, r: int, config: Optional[CacheConfig] = None
) -> LaurentPoly:
    """Cached z=1 polynomial of the alpha-collapsed (fast) real pipeline."""
    from .plethystic import a_poly_for, collapsed_real_layout

    return get_or_compute(
        "apoly-fast",
        {"b": b, "g": g, "r": r},
        lambda: a_poly_for(collapsed_real_layout(g, b), r),
        config,
    )


def list_entries(config: CacheConfig) -> List[Tuple[str, int]]:
    """(filename, size in bytes) for every entry, sorted by name."""
    if not config.directory.is_dir():
        return []
    out = []
    for p in sorted(config.directory.glob("*.txt")):
        out.append((p.name, p.stat().st_size))
    return out


def clear(config: CacheConfig) -> int:
    """Delete all entries; returns how many files went away."""
    count = 0
    if config.directory.is_dir():
        for p in config.directory.glob("*.txt"):
            p.unlink()
            count += 1
    return count
