"""In-memory job table with a bounded worker pool and cooperative
cancellation.  No persistence: every result is re-derivable from its seed."""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field


@dataclass
class Job:
    id: str
    kind: str
    status: str = "queued"  # queued | running | done | failed
    progress: float = 0.0
    reason: str | None = None
    total_cells: int = 0
    rows: list = field(default_factory=list)
    result_csv: str | None = None
    payload: dict | None = None
    cancel_requested: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    def handle(self) -> dict:
        with self.lock:
            return {
                "id": self.id,
                "kind": self.kind,
                "status": self.status,
                "progress": round(self.progress, 6),
                "reason": self.reason,
            }


class JobTable:
    def __init__(self, workers: int = 2):
        self._jobs: dict[str, Job] = {}
        self._lock = threading.Lock()
        self._ids = itertools.count(1)
        self._pool = ThreadPoolExecutor(max_workers=workers)

    def create(self, kind: str, total_cells: int) -> Job:
        with self._lock:
            job = Job(id=f"{kind}-{next(self._ids)}", kind=kind,
                      total_cells=total_cells)
            self._jobs[job.id] = job
        return job

    def get(self, job_id: str) -> Job | None:
        with self._lock:
            return self._jobs.get(job_id)

    def submit(self, job: Job, fn):
        def wrapper():
            with job.lock:
                if job.cancel_requested:
                    job.status = "failed"
                    job.reason = "cancelled"
                    return
                job.status = "running"
            try:
                fn(job)
            except RuntimeError as exc:
                with job.lock:
                    job.status = "failed"
                    job.reason = str(exc) or "cancelled"
            except Exception as exc:  # surfaced via the status endpoint
                with job.lock:
                    job.status = "failed"
                    job.reason = f"{type(exc).__name__}: {exc}"
            else:
                with job.lock:
                    if job.status == "running":
                        job.status = "done"
                        job.progress = 1.0

        self._pool.submit(wrapper)

    def cancel(self, job: Job):
        with job.lock:
            job.cancel_requested = True
            if job.status == "queued":
                job.status = "failed"
                job.reason = "cancelled"
