"""Pydantic response models for the HTTP API (the wire contract the UI consumes)."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class ThresholdsModel(BaseModel):
    fieldMatch: int
    normMatch: float


class SourceScoreModel(BaseModel):
    sourceId: str
    fieldMatchCount: int
    rawScore: float
    normScore: float


class PlanModel(BaseModel):
    hasAnalyticalIntent: bool
    hasDSMatch: bool
    invokeQA: bool
    thresholds: ThresholdsModel
    rankedSources: list[SourceScoreModel]


class EncodingModel(BaseModel):
    field: str
    type: str
    aggregate: str | None = None


class GeoModel(BaseModel):
    field: str
    geometrySet: str | None = None


class ChartSpecModel(BaseModel):
    version: int
    mark: str
    encodings: dict[str, EncodingModel]
    data: list[dict]
    title: str
    units: dict[str, str] = Field(default_factory=dict)
    geo: GeoModel | None = None


class SourceRankEntry(BaseModel):
    sourceId: str
    sourceName: str
    percentage: float
    fieldMatchCount: int


class QaModel(BaseModel):
    sourceId: str
    sourceName: str
    sourceRanking: list[SourceRankEntry]
    chartSpec: ChartSpecModel | None = None
    summaryText: str | None = None
    summaryWarning: str | None = None
    suggestions: list[str] | None = None
    error: str | None = None


class VizHitModel(BaseModel):
    model_config = ConfigDict(extra="allow")

    id: str
    title: str
    authorName: str
    createdDate: str
    chartTypes: list[str]
    sourceUrl: str
    thumbnailRef: str
    score: float
    normScore: float


class FacetsModel(BaseModel):
    authorCounts: dict[str, int]
    chartTypeCounts: dict[str, int]
    dateHistogram: dict[str, int]


class GeneralModel(BaseModel):
    results: list[VizHitModel]
    facets: FacetsModel


class SearchResponse(BaseModel):
    plan: PlanModel
    general: GeneralModel
    qa: QaModel | None = None
    timings: dict[str, float]


class AttributeSummaryModel(BaseModel):
    name: str
    dataType: str
    role: str


class DataSourceSummaryModel(BaseModel):
    id: str
    name: str
    description: str
    rowCount: int
    attributes: list[AttributeSummaryModel]


class AttributeDetailModel(BaseModel):
    name: str
    dataType: str
    role: str
    synonyms: list[str]
    relatedTerms: list[str]
    taxonomyNode: str | None = None
    unitSemantics: str | None = None


class DataSourceDetailModel(BaseModel):
    id: str
    name: str
    description: str
    defaultAggregate: str
    rowCount: int
    attributes: list[AttributeDetailModel]
    sampleValues: dict[str, list[str]]
    suggestedQuery: str | None = None


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
