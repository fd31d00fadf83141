"""JSON documents shared by the CLI and the HTTP service.

Both front ends emit the exact same bytes for the same analysis, so golden
files cut against one apply to the other. Keep every document built here.
"""

from __future__ import annotations

import json

from .catalog import CatalogEntry
from .core import CoarrayAnalysis, ComparisonReport

SCHEMA_VERSION = 1


def analysis_document(analysis: CoarrayAnalysis) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "source_positions": list(analysis.source.positions),
        "normalized_positions": list(analysis.normalized.positions),
        "sensor_count": analysis.source.count,
        "aperture": analysis.aperture,
        "dca": list(analysis.dca),
        "holes": list(analysis.holes),
        "hole_free": analysis.hole_free,
        "status": analysis.status,
        "primary_weights": list(analysis.primary_weights),
        "weight_function": [
            {"lag": lag, "weight": weight}
            for lag, weight in analysis.weight_function.pairs()
        ],
    }


def comparison_document(report: ComparisonReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "a": analysis_document(report.a),
        "b": analysis_document(report.b),
        "deltas": {
            "aperture": report.aperture_delta,
            "sensor_count": report.sensor_count_delta,
            "primary_weights": list(report.primary_weight_delta),
            "hole_symmetric_difference": list(report.hole_set_delta),
        },
    }


def catalog_entry_document(entry: CatalogEntry) -> dict:
    return {
        "id": entry.id,
        "name": entry.name,
        "family": entry.family,
        "definition": {
            "format": entry.definition_format,
            "text": entry.definition_text,
        },
        "expected": {
            key: {"value": claim.value, "source": claim.source}
            for key, claim in entry.expected.items()
        },
    }


def error_document(code: str, message: str, position: int | None = None) -> dict:
    doc = {"code": code, "message": message}
    if position is not None:
        doc["position"] = position
    return doc


def to_json(document: dict) -> str:
    """Canonical serialization: 2-space indent, trailing newline."""
    return json.dumps(document, indent=2) + "\n"


def analysis_json(analysis: CoarrayAnalysis) -> str:
    return to_json(analysis_document(analysis))


def comparison_json(report: ComparisonReport) -> str:
    return to_json(comparison_document(report))
