"""Report assembly: JSON document and plain-text summary."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .checks import FAIL, PASS

__all__ = ["Report", "run_suites", "worker_count"]


class Report:
    def __init__(self, seed: int, suites: list):
        self.seed = seed
        self.suites = suites

    @property
    def status(self) -> str:
        return PASS if all(s.status == PASS for s in self.suites) else FAIL

    def to_json(self) -> dict:
        return {"version": __version__, "seed": self.seed,
                "suites": [s.to_json() for s in self.suites], "status": self.status}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = []
        for suite in self.suites:
            lines.append(f"== {suite.name}: {suite.status.upper()}")
            for c in suite.checks:
                extra = f" {c.info}" if c.info else ""
                lines.append(f"  [{c.status:4}] {c.name} ({c.ms:.1f} ms){extra}")
                if c.status == FAIL and c.witness:
                    residual = c.witness.get("residual")
                    if residual:
                        lines.append(f"         residual: {residual[:300]}")
        passed = sum(c.status == PASS for s in self.suites for c in s.checks)
        total = sum(c.status != "skip" for s in self.suites for c in s.checks)
        lines.append(f"overall: {self.status.upper()} ({passed}/{total} checks, seed {self.seed})")
        return "\n".join(lines) + "\n"


def worker_count(n_jobs: int) -> int:
    env = os.environ.get("HEAVENLY_THREADS")
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            cap = 1
    else:
        cap = os.cpu_count() or 1
    return max(1, min(cap, n_jobs))


def _run_one(args):
    from .plebanski.suites import verify_suite
    name, seed, points = args
    return verify_suite(name, seed, points)


def run_suites(names: list, seed: int = 0, points: int = 20) -> Report:
    """Run suites (concurrently when allowed); results keep the order of ``names``."""
    jobs = [(n, seed, points) for n in names]
    workers = worker_count(len(jobs))
    if workers == 1:
        results = [_run_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    return Report(seed, results)
