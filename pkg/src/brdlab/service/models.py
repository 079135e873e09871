"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class InlineGraph(BaseModel):
    n: int
    edges: list[tuple[int, int]]


class SimulateRequest(BaseModel):
    graph: str | InlineGraph
    delta: float = Field(ge=0.0, le=1.0)
    seed: int = 0
    epsilon: float = Field(default=1e-4, gt=0.0)
    epsilon_reshuffle: float | None = Field(default=None, gt=0.0)
    max_rounds: int = Field(default=10_000, ge=1)
    initial: str | list[float] = "uniform"
    graph_seed: int = 0


class DeltaGrid(BaseModel):
    start: float = Field(ge=0.0, le=1.0)
    end: float = Field(ge=0.0, le=1.0)
    step: float = Field(gt=0.0)

    @model_validator(mode="after")
    def _ordered(self):
        if self.start > self.end:
            raise ValueError("start must not exceed end")
        return self


class SweepRequest(BaseModel):
    graph: str | InlineGraph | None = None
    preset: str | None = None
    delta_grid: DeltaGrid | list[float] | None = None
    trials: int = Field(default=10, ge=1)
    base_seed: int = 0
    epsilon: float = Field(default=1e-4, gt=0.0)
    epsilon_reshuffle: float | None = Field(default=None, gt=0.0)
    max_rounds: int = Field(default=10_000, ge=1)
    record_level: str = "summary"

    @model_validator(mode="after")
    def _graph_or_preset(self):
        if (self.preset is None) == (self.graph is None):
            raise ValueError("provide exactly one of graph or preset")
        if self.preset is None and self.delta_grid is None:
            raise ValueError("delta_grid is required without a preset")
        return self


class JobHandle(BaseModel):
    id: str
    kind: str
    status: str
    progress: float = 0.0
    reason: str | None = None
