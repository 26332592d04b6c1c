from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Scalar = int | str | dict[str, int | str]
Name = str | int


# ---------------------------------------------------------------------------
# data files
# ---------------------------------------------------------------------------


class LabelSpec(BaseModel):
    name: str = Field(min_length=1, max_length=40)
    degree: Name
    dual: str
    action: dict[str, str] = Field(default_factory=dict)

    @field_validator("name", "dual")
    @classmethod
    def validate_name(cls, value: str) -> str:
        cleaned = value.strip()
        if not cleaned:
            raise ValueError("label names must not be blank")
        return cleaned


class CategoryFile(BaseModel):
    name: str = Field(default="category", max_length=80)
    description: str | None = None
    group: dict[str, Any]
    conductor: int = Field(default=1, gt=0)
    unit: str | None = None
    labels: list[LabelSpec] = Field(min_length=1)
    fusion: list[list[str | int]] = Field(default_factory=list)
    F: dict[str, Scalar] = Field(default_factory=dict)
    R: dict[str, Scalar] = Field(default_factory=dict)
    U: dict[str, Scalar] = Field(default_factory=dict)
    theta: dict[str, Scalar] = Field(default_factory=dict)

    @field_validator("fusion")
    @classmethod
    def validate_fusion_rows(cls, rows: list[list[str | int]]) -> list[list[str | int]]:
        for row in rows:
            if len(row) not in (3, 4):
                raise ValueError(f"fusion entries are [a, b, c] or [a, b, c, multiplicity], got {row}")
        return rows


class BlockSpec(BaseModel):
    g: list[Name]
    h: list[Name] | None = None

    @model_validator(mode="after")
    def validate_lengths(self) -> BlockSpec:
        if self.h is not None and len(self.h) != len(self.g):
            raise ValueError("block 'g' and 'h' must have the same length")
        return self


class CutSpec(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    from_: tuple[int, int] = Field(alias="from")
    to: tuple[int, int]
    label: Name | None = None


class CoverFile(BaseModel):
    name: str | None = None
    blocks: list[BlockSpec] = Field(default_factory=list)
    cuts: list[CutSpec] = Field(default_factory=list)
    free: list[tuple[int, int]] | None = None


class LabelingFile(BaseModel):
    boundary_labels: dict[int, str] = Field(default_factory=dict)


class MoveSpec(BaseModel):
    kind: Literal["Z", "B", "F", "P", "T"]
    block: int | None = Field(default=None, ge=0)
    cut: int | None = Field(default=None, ge=0)
    x: Name | None = None
    z: Name | None = None


class MoveScript(BaseModel):
    moves: list[MoveSpec] = Field(default_factory=list)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


class CheckFailure(BaseModel):
    witness: list[str]
    detail: str
    matrices: dict[str, list[list[str]]] | None = None


class AxiomReport(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    instances_checked: int = Field(ge=0)
    failures: list[CheckFailure] = Field(default_factory=list)

    @classmethod
    def build(cls, name: str, checked: int, failures: list[CheckFailure]) -> AxiomReport:
        return cls(
            name=name,
            status="fail" if failures else "pass",
            instances_checked=checked,
            failures=failures,
        )


class CheckReport(BaseModel):
    subject: str
    interpretation_notes: list[str] = Field(default_factory=list)
    axioms: list[AxiomReport] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a.status == "pass" for a in self.axioms)

    def axiom(self, name: str) -> AxiomReport:
        for a in self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)

    def to_payload(self) -> dict[str, Any]:
        payload = self.model_dump()
        payload["passed"] = self.passed
        return payload


# ---------------------------------------------------------------------------
# HTTP payloads
# ---------------------------------------------------------------------------


class CatalogEntry(BaseModel):
    name: str
    description: str | None
    conductor: int
    group_order: int
    label_count: int
    labels: list[str]


class CategoryRequest(BaseModel):
    catalog: str | None = None
    document: CategoryFile | None = None
    bound: int | None = Field(default=None, gt=0, le=8)

    @model_validator(mode="after")
    def validate_source(self) -> CategoryRequest:
        if (self.catalog is None) == (self.document is None):
            raise ValueError("give exactly one of 'catalog' or 'document'")
        return self


class CoverRequest(CategoryRequest):
    cover: CoverFile
    labeling: LabelingFile = Field(default_factory=LabelingFile)
    target: CoverFile | None = None
    moves: list[MoveSpec] = Field(default_factory=list)
    depth: int | None = Field(default=None, ge=0, le=8)


class DimResponse(BaseModel):
    dim: int
    factorization: list[dict[str, Any]] = Field(default_factory=list)


class MapResponse(BaseModel):
    source_dim: int
    target_dim: int
    matrix: list[list[str]]
    target: dict[str, Any]
