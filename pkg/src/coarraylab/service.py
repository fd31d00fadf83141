"""JSON-over-HTTP API: analysis, comparison, catalog, plus static UI hosting.

Stateless by construction: every request is a pure function of its body, so
any request sequence behaves like each request issued alone. Analysis bodies
are byte-identical to the CLI's --json output for the same input.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from .catalog import UnknownEntryError, get_entry, list_entries
from .core import ResourceLimitError, SensorArray, analyze, compare
from .parsing import ParseError, parse_array
from .serialize import (
    analysis_document,
    analysis_json,
    catalog_entry_document,
    comparison_json,
    error_document,
    to_json,
)

MAX_BODY_BYTES = 64 * 1024

INPUT_FORMATS = ("positions", "ies", "catalog-id")


class ApiFault(Exception):
    """Carries an HTTP status plus the ApiError document fields."""

    def __init__(self, status_code: int, code: str, message: str,
                 position: int | None = None):
        super().__init__(message)
        self.status_code = status_code
        self.code = code
        self.message = message
        self.position = position


def _json_response(document: dict, status_code: int = 200) -> Response:
    return Response(
        content=to_json(document),
        status_code=status_code,
        media_type="application/json",
    )


async def _read_json_object(request: Request) -> dict:
    body = await request.body()
    if len(body) > MAX_BODY_BYTES:
        raise ApiFault(413, "limit-exceeded",
                       f"request body exceeds {MAX_BODY_BYTES} bytes")
    try:
        parsed = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ApiFault(400, "bad-token", f"request body is not valid JSON: {exc}")
    if not isinstance(parsed, dict):
        raise ApiFault(400, "bad-token", "request body must be a JSON object")
    return parsed


def _resolve_request(req, side: str | None = None) -> SensorArray:
    prefix = f"array '{side}': " if side else ""
    if not isinstance(req, dict):
        raise ApiFault(400, "bad-token", prefix + "request must be a JSON object")
    text = req.get("input")
    fmt = req.get("format")
    if not isinstance(text, str):
        raise ApiFault(400, "bad-token", prefix + "'input' must be a string")
    if fmt not in INPUT_FORMATS:
        raise ApiFault(
            400, "bad-token",
            prefix + f"'format' must be one of {', '.join(INPUT_FORMATS)}",
        )
    try:
        if fmt == "catalog-id":
            return get_entry(text.strip()).sensor_array()
        return parse_array(text, fmt)
    except ParseError as exc:
        status = 413 if exc.kind == "resource-limit" else 400
        raise ApiFault(status, exc.kind, prefix + exc.message, exc.position)
    except UnknownEntryError as exc:
        raise ApiFault(404, "not-found", prefix + str(exc))
    except ResourceLimitError as exc:
        raise ApiFault(413, "resource-limit", prefix + str(exc))


def create_app(ui_dir: str | None = None, cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="coarraylab", docs_url=None, redoc_url=None, openapi_url=None)

    if cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(ApiFault)
    async def _fault_handler(request: Request, exc: ApiFault) -> Response:
        return _json_response(
            error_document(exc.code, exc.message, exc.position),
            status_code=exc.status_code,
        )

    @app.middleware("http")
    async def _body_limit(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and length.isdigit() and int(length) > MAX_BODY_BYTES:
            return _json_response(
                error_document(
                    "limit-exceeded",
                    f"request body exceeds {MAX_BODY_BYTES} bytes",
                ),
                status_code=413,
            )
        return await call_next(request)

    @app.post("/api/analyze")
    async def _analyze(request: Request) -> Response:
        body = await _read_json_object(request)
        array = _resolve_request(body)
        return Response(content=analysis_json(analyze(array)),
                        media_type="application/json")

    @app.post("/api/compare")
    async def _compare(request: Request) -> Response:
        body = await _read_json_object(request)
        array_a = _resolve_request(body.get("a"), side="a")
        array_b = _resolve_request(body.get("b"), side="b")
        return Response(content=comparison_json(compare(array_a, array_b)),
                        media_type="application/json")

    @app.get("/api/catalog")
    async def _catalog_list() -> Response:
        entries = [catalog_entry_document(entry) for entry in list_entries()]
        return _json_response({"entries": entries})

    @app.get("/api/catalog/{entry_id}")
    async def _catalog_item(entry_id: str) -> Response:
        try:
            entry = get_entry(entry_id)
        except UnknownEntryError as exc:
            raise ApiFault(404, "not-found", str(exc))
        analysis = analyze(entry.sensor_array())
        return _json_response(
            {
                "entry": catalog_entry_document(entry),
                "analysis": analysis_document(analysis),
            }
        )

    if ui_dir:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
