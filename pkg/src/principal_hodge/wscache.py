"""Canonical text/JSON forms of weight systems and an on-disk cache.

Text format (one file per module)::

    # weight-system <type> mu=<d1,...,dr> dim=<N>
    d1 d2 ... dr : mult
    ...

Weight lines hold Dynkin labels and are sorted as integer tuples.  Files are
written to a temporary name and moved into place with :func:`os.replace`, so
concurrent readers never see a partial file; one writer per key is assumed.
"""
from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from pathlib import Path

from .rootsys import ConfigurationError, RootSystem, Weight, build_root_system, parse_lie_type
from .weightsys import DEFAULT_DIM_CEILING, WeightSystem, weight_system

__all__ = ["render_text", "parse_text", "to_json", "dumps_json", "loads_json", "WeightCache"]

_HEADER = re.compile(r"^# weight-system (?P<t>[A-G]\d+) mu=(?P<mu>-?\d+(?:,-?\d+)*) dim=(?P<dim>\d+)$")


def render_text(ws: WeightSystem) -> str:
    mu = ",".join(map(str, ws.highest_weight.dynkin))
    lines = [f"# weight-system {ws.rs.lie_type} mu={mu} dim={ws.dim}"]
    for w in ws.sorted_weights():
        lines.append(" ".join(map(str, w.dynkin)) + f" : {ws.entries[w]}")
    return "\n".join(lines) + "\n"


def _rebuild(rs: RootSystem, mu: tuple[int, ...], rows: list[tuple[tuple[int, ...], int]],
             dim: int | None = None) -> WeightSystem:
    entries = {rs.weight(d): m for d, m in rows}
    if len(entries) != len(rows):
        raise ConfigurationError("duplicate weight in weight-system data")
    ws = WeightSystem(rs, rs.weight(mu), entries)
    if dim is not None and ws.dim != dim:
        raise ConfigurationError(f"weight-system data sums to {ws.dim}, header says {dim}")
    return ws


def parse_text(text: str) -> WeightSystem:
    lines = text.splitlines()
    if not lines or not (h := _HEADER.match(lines[0])):
        raise ConfigurationError("missing or malformed weight-system header")
    t = parse_lie_type(h["t"][0], int(h["t"][1:]))
    rs = build_root_system(t, rank_ceiling=t.rank)
    mu = tuple(int(x) for x in h["mu"].split(","))
    rows = []
    for ln in lines[1:]:
        if not ln.strip():
            continue
        left, _, right = ln.partition(":")
        rows.append((tuple(int(x) for x in left.split()), int(right)))
    return _rebuild(rs, mu, rows, int(h["dim"]))


def to_json(ws: WeightSystem) -> dict:
    return {
        "type": str(ws.rs.lie_type),
        "mu": list(ws.highest_weight.dynkin),
        "dim": ws.dim,
        "weights": [{"dynkin": list(w.dynkin), "lowering": list(ws.lowering(w)), "mult": ws.entries[w]}
                    for w in ws.sorted_weights()],
    }


def dumps_json(ws: WeightSystem) -> str:
    return json.dumps(to_json(ws), sort_keys=True, separators=(",", ":")) + "\n"


def loads_json(s: str | dict) -> WeightSystem:
    d = json.loads(s) if isinstance(s, str) else s
    t = parse_lie_type(d["type"][0], int(d["type"][1:]))
    rs = build_root_system(t, rank_ceiling=t.rank)
    rows = [(tuple(w["dynkin"]), int(w["mult"])) for w in d["weights"]]
    return _rebuild(rs, tuple(d["mu"]), rows, int(d["dim"]))


class WeightCache:
    """Disk-backed weight systems keyed by (family, rank, highest weight)."""

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)
        self._lock = threading.Lock()

    def path_for(self, rs: RootSystem, mu: Weight) -> Path:
        return self.dir / f"{rs.lie_type}_{'_'.join(map(str, mu.dynkin))}.txt"

    def get(self, rs: RootSystem, mu: Weight, dim_ceiling: int = DEFAULT_DIM_CEILING) -> WeightSystem:
        p = self.path_for(rs, mu)
        if p.exists():
            return parse_text(p.read_text())
        ws = weight_system(rs, mu, dim_ceiling)
        self._write(p, render_text(ws))
        return ws

    def _write(self, p: Path, text: str):
        with self._lock:
            self.dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.dir, prefix=".tmp-", suffix=".txt")
            try:
                with os.fdopen(fd, "w") as f:
                    f.write(text)
                os.replace(tmp, p)
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise

    def entries(self) -> list[tuple[str, int]]:
        """(file name, size in bytes) for every cached module, sorted."""
        if not self.dir.is_dir():
            return []
        return sorted((p.name, p.stat().st_size) for p in self.dir.glob("*.txt") if not p.name.startswith("."))

    def clear(self) -> int:
        n = 0
        if self.dir.is_dir():
            for p in self.dir.glob("*.txt"):
                p.unlink()
                n += 1
        return n
