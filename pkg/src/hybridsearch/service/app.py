"""FastAPI front door: hybrid search, data-source metadata, and liveness.

Requests are handled concurrently over an immutable engine snapshot; handlers
are sync functions so the framework runs them in its worker pool and a slow
summary-client call never serializes unrelated requests.
"""

from __future__ import annotations

import calendar
import json
import logging
from datetime import date, datetime
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..corpus import bundled_data_path
from ..engine import SearchEngine
from ..vizsearch import FacetState
from .models import (DataSourceDetailModel, DataSourceSummaryModel,
                     ErrorResponse, SearchResponse)

logger = logging.getLogger(__name__)


def _bad_request(code: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": code, "message": message})


def _parse_day(value: str, end: bool) -> date:
    """Accept YYYY, YYYY-MM, or YYYY-MM-DD; round toward the period edge."""
    parts = value.strip().split("-")
    try:
        if len(parts) == 1:
            year = int(parts[0])
            return date(year, 12, 31) if end else date(year, 1, 1)
        if len(parts) == 2:
            year, month = int(parts[0]), int(parts[1])
            last = calendar.monthrange(year, month)[1]
            return date(year, month, last) if end else date(year, month, 1)
        return datetime.strptime(value, "%Y-%m-%d").date()
    except ValueError as exc:
        raise _bad_request("invalid_parameter",
                           f"cannot parse date {value!r}") from exc


def _split_multi(values: list[str] | None) -> set[str]:
    out: set[str] = set()
    for value in values or ():
        out.update(part.strip() for part in value.split(",") if part.strip())
    return out


def create_app(engine: SearchEngine, static_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="hybridsearch", version="0.1.0",
                  docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=engine.config.cors_origins,
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(HTTPException)
    def handle_http_error(request: Request, exc: HTTPException):
        detail = exc.detail if isinstance(exc.detail, dict) else {
            "code": "error", "message": str(exc.detail)}
        return JSONResponse(status_code=exc.status_code, content={"error": detail})

    @app.exception_handler(Exception)
    def handle_internal_error(request: Request, exc: Exception):
        logger.exception("unhandled error for %s", request.url)
        return JSONResponse(status_code=500, content={
            "error": {"code": "internal_error", "message": "internal server error"}})

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok",
                "datasources": engine.ds_index.doc_cnt,
                "visualizations": engine.viz_index.doc_cnt}

    @app.get("/api/search", response_model=SearchResponse,
             response_model_exclude_none=True,
             responses={400: {"model": ErrorResponse}})
    def search(
        q: str | None = Query(None, description="search query"),
        authors: list[str] | None = Query(None),
        chartTypes: list[str] | None = Query(None),
        from_: str | None = Query(None, alias="from"),
        to: str | None = Query(None),
        limit: int | None = Query(None, ge=1, le=500),
        source: str | None = Query(None, description="pin Q&A to this data source"),
        llm: bool = Query(True, description="allow the configured summary client"),
    ):
        if q is None:
            raise _bad_request("missing_query", "query parameter 'q' is required")
        date_range = None
        if from_ or to:
            date_range = (_parse_day(from_, end=False) if from_ else None,
                          _parse_day(to, end=True) if to else None)
        facet_state = FacetState(
            selected_authors=_split_multi(authors),
            selected_chart_types=_split_multi(chartTypes),
            date_range=date_range,
        )
        try:
            result = engine.search(q, facet_state=facet_state, limit=limit,
                                   source_id=source, use_summary_client=llm)
        except KeyError:
            raise HTTPException(status_code=404, detail={
                "code": "unknown_datasource", "message": f"no data source {source!r}"})
        return SearchResponse.model_validate(result.to_dict())

    @app.get("/api/datasources", response_model=list[DataSourceSummaryModel])
    def datasources():
        return engine.datasource_summaries()

    @app.get("/api/datasources/{source_id}", response_model=DataSourceDetailModel,
             response_model_exclude_none=True,
             responses={404: {"model": ErrorResponse}})
    def datasource_detail(source_id: str):
        try:
            return engine.datasource_detail(source_id)
        except KeyError:
            raise HTTPException(status_code=404, detail={
                "code": "unknown_datasource", "message": f"no data source {source_id!r}"})

    @app.get("/api/viz/sample")
    def viz_sample(n: int = Query(12, ge=1, le=100)):
        return engine.viz_sample(n)

    @app.get("/api/suggest")
    def suggest(q: str = Query(""), k: int = Query(8, ge=1, le=50)):
        return engine.suggestions(q, k)

    @app.get("/api/geometry/{set_id}", responses={404: {"model": ErrorResponse}})
    def geometry(set_id: str):
        if set_id != "us-states":
            raise HTTPException(status_code=404, detail={
                "code": "unknown_geometry", "message": f"no geometry set {set_id!r}"})
        return json.loads((bundled_data_path() / "us_states_geometry.json").read_text())

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
