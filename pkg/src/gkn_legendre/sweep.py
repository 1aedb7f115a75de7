"""Conjecture sweep driver with an append-only JSON-lines ledger.

Each record captures one candidate selection: its exact rank, whether the
matrix had full rank, and the exact determinant of the P-vs-Q block.  Records
are keyed by the canonical selection string, so re-running a finished sweep
appends nothing and interrupted sweeps resume cleanly.  A rank-deficient
parity-balanced selection would be a counterexample to the open conjecture;
it is persisted and surfaced, never raised.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import combinations

from . import __version__
from .exactnum import rational_str
from .matrices import IndexSelection, b_block, build_matrix, det_exact, rank_exact

__all__ = ["RunConfig", "SweepRecord", "enumerate_selections", "evaluate_selection", "run_sweep"]

LEDGER_ENV_VAR = "GKN_LEDGER"


@dataclass(frozen=True)
class SweepRecord:
    selection: IndexSelection
    rank: int
    full_rank: bool
    det_b: str
    timestamp: str
    engine_version: str

    def key(self) -> str:
        return self.selection.key()

    def to_json(self) -> dict:
        return {
            "selection": {
                "p_indices": list(self.selection.p_indices),
                "q_indices": list(self.selection.q_indices),
            },
            "n": self.selection.power,
            "key": self.key(),
            "rank": self.rank,
            "full_rank": self.full_rank,
            "det_B": self.det_b,
            "timestamp": self.timestamp,
            "engine_version": self.engine_version,
        }


@dataclass
class RunConfig:
    power: int
    pool_bound: int
    parity_filter: bool = True
    workers: int = 1
    output_format: str = "json"  # json | csv | pretty
    ledger_path: str = field(default_factory=lambda: os.environ.get(LEDGER_ENV_VAR, "gkn_sweep.jsonl"))

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("power must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def enumerate_selections(n: int, pool_bound: int, parity_filter: bool = True):
    """All r = s = n selections from indices [0..pool_bound], sorted by key.

    With the parity filter on, only selections whose index census is (n, n)
    are yielded: these are the candidates the conjecture speaks about.
    """
    if pool_bound < 0 or pool_bound + 1 < n:
        return
    pool = range(pool_bound + 1)
    for p in combinations(pool, n):
        p_evens = sum(1 for i in p if i % 2 == 0)
        for q in combinations(pool, n):
            if parity_filter:
                q_evens = sum(1 for i in q if i % 2 == 0)
                # complementary parity: as many even Q's as odd P's
                if q_evens != n - p_evens:
                    continue
            yield IndexSelection(p, q, n)


def evaluate_selection(sel: IndexSelection) -> tuple[str, int, bool, str]:
    m = build_matrix(sel)
    rank = rank_exact(m.entries)
    det_b = det_exact(b_block(sel))
    return sel.key(), rank, rank == m.size, rational_str(det_b)


def _load_ledger_keys(path: str) -> set[str]:
    keys = set()
    if not os.path.exists(path):
        return keys
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                keys.add(json.loads(line)["key"])
    return keys


def read_ledger(path: str) -> list[dict]:
    records = []
    if not os.path.exists(path):
        return records
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def run_sweep(config: RunConfig) -> list[SweepRecord]:
    """Evaluate all missing selections and append them to the ledger.

    Returns the newly appended records, in deterministic (key-sorted) order
    regardless of worker count.
    """
    done = _load_ledger_keys(config.ledger_path)
    todo = [
        sel
        for sel in enumerate_selections(config.power, config.pool_bound, config.parity_filter)
        if sel.key() not in done
    ]
    todo.sort(key=lambda s: s.key())
    if not todo:
        return []

    if config.workers == 1:
        results = [evaluate_selection(sel) for sel in todo]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunk = max(1, len(todo) // (config.workers * 8))
            results = list(pool.map(evaluate_selection, todo, chunksize=chunk))

    stamp = datetime.now(timezone.utc).isoformat()
    records = [
        SweepRecord(sel, rank, full, det_b, stamp, __version__)
        for sel, (_, rank, full, det_b) in zip(todo, results)
    ]
    records.sort(key=lambda r: r.key())

    directory = os.path.dirname(config.ledger_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(config.ledger_path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    return records
