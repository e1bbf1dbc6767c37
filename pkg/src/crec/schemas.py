"""Request/response models for the HTTP service.

Big integers always cross the wire as decimal strings; the models translate
between the JSON layer and the core value objects.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from . import representation
from .recurrence import Recurrence

Kind = Literal["divmod", "modmod", "shifted", "auto"]
StrategyName = Literal["naive", "fast"]
RenderFormat = Literal["text", "latex", "json"]


class RecurrenceModel(BaseModel):
    coeffs: list[str] = Field(min_length=1)
    initial: list[str] = Field(min_length=1)

    @field_validator("coeffs", "initial", mode="before")
    @classmethod
    def _stringify(cls, value):
        return [str(v) for v in value]

    def to_core(self) -> Recurrence:
        return Recurrence((int(c) for c in self.coeffs), (int(t) for t in self.initial))

    @classmethod
    def from_core(cls, rec: Recurrence) -> "RecurrenceModel":
        return cls(**rec.to_json_dict())


class PolyModel(BaseModel):
    coeffs: list[str]


class RepresentationModel(BaseModel):
    kind: Literal["divmod", "modmod", "shifted", "zero"]
    base: str | None = None
    mode: Literal["certified", "asserted"] | None = None
    g: str | None = None
    cutoff: int | None = None
    root_bound: str | None = None
    atilde: PolyModel | None = None
    btilde: PolyModel | None = None
    alpha_d: str | None = None
    offset: int | None = None
    divisor: str | None = None
    shift_h: str | None = None

    def to_core(self) -> representation.Representation:
        return representation.from_json_dict(self.model_dump(exclude_none=False))

    @classmethod
    def from_core(cls, rep: representation.Representation) -> "RepresentationModel":
        return cls(**representation.to_json_dict(rep))


class DeriveRequest(BaseModel):
    fixture: str | None = None
    recurrence: RecurrenceModel | None = None
    kind: Kind = "auto"
    base: str | None = None
    shift_h: str | None = None
    force: bool = False


class DeriveResponse(BaseModel):
    representation: RepresentationModel
    note: str


class EvalRequest(BaseModel):
    fixture: str | None = None
    recurrence: RecurrenceModel | None = None
    representation: RepresentationModel | None = None
    kind: Kind = "auto"
    base: str | None = None
    shift_h: str | None = None
    n: int | None = None
    n_lo: int | None = None
    n_hi: int | None = None
    strategy: StrategyName = "fast"


class TermValue(BaseModel):
    n: int
    value: str


class EvalResponse(BaseModel):
    values: list[TermValue]


class VerifyRequest(BaseModel):
    fixture: str | None = None
    recurrence: RecurrenceModel | None = None
    kind: Kind = "auto"
    base: str | None = None
    shift_h: str | None = None
    n_lo: int = 1
    n_hi: int = 20
    strategy: StrategyName = "fast"
    exhaustive: bool = False


class MismatchModel(BaseModel):
    n: int
    expected: str
    got: str | None


class VerifyReportModel(BaseModel):
    lo: int
    hi: int
    status: Literal["ok", "mismatch"]
    checked: int
    first_mismatch: MismatchModel | None = None
    diagnostic: dict[str, str] | None = None


class PipelineCheckRequest(BaseModel):
    """Seeded random-recurrence pipeline sweep (certified bases end to end)."""

    count: int = Field(default=25, ge=1, le=1000)
    seed: int = 0
    d_max: int = Field(default=4, ge=1, le=8)
    coeff_max: int = Field(default=5, ge=1)
    init_max: int = Field(default=9, ge=0)
    n_lo: int = 1
    n_hi: int = 20


class PipelineCheckResponse(BaseModel):
    count: int
    status: Literal["ok", "mismatch"]
    failures: list[str]


class RenderRequest(BaseModel):
    fixture: str | None = None
    recurrence: RecurrenceModel | None = None
    representation: RepresentationModel | None = None
    kind: Kind = "auto"
    base: str | None = None
    shift_h: str | None = None
    format: RenderFormat = "text"


class RenderResponse(BaseModel):
    formula: str


class FixtureModel(BaseModel):
    name: str
    oeis_id: str
    recurrence: RecurrenceModel
    kind: Literal["modmod", "shifted"]
    base: str
    shift_h: str | None
    prefix: list[str]


class BenchRequest(BaseModel):
    fixture: str
    ns: list[int] = Field(min_length=1)
    strategies: list[Literal["divmod", "modmod_naive", "modmod_fast"]] = Field(
        default=["divmod", "modmod_fast"], min_length=1
    )
    reps: int = Field(default=5, ge=1, le=1000)


class BenchRowModel(BaseModel):
    fixture: str
    n: int
    strategy: str
    operand_bits: int
    wall_ns: int
    reps: int


class BenchResponse(BaseModel):
    rows: list[BenchRowModel]


class ErrorBody(BaseModel):
    kind: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
