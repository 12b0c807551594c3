"""JSON payload shapes shared by the HTTP service and the CLI.

Both surfaces must emit byte-identical JSON for identical inputs, so the
dict construction and serialization settings live here.
"""

from __future__ import annotations

import json

from .policy import PolicyResult
from .recommend import RecommendResult, Recommendation
from .strength import StrengthReport, feedback_text


def dumps(payload: dict) -> str:
    """Compact serialization matching starlette's JSONResponse bytes."""
    return json.dumps(payload, ensure_ascii=False, allow_nan=False,
                      indent=None, separators=(",", ":"))


def analyze_payload(policy: PolicyResult, report: StrengthReport) -> dict:
    return {
        "valid": policy.valid,
        "violations": list(policy.violations),
        "PS": report.strength_bits,
        "category": report.category,
        "crack_seconds": report.crack_seconds,
        "crack_human": report.crack_human,
        "feedback_text": feedback_text(report),
    }


def violation_payload(policy: PolicyResult) -> dict:
    return {"valid": False, "violations": list(policy.violations)}


def button_payload(button_id: int, rec: Recommendation, variant: str) -> dict:
    return {
        "id": button_id,
        "label": rec.labels[variant],
        "password": rec.password,
        "PS": rec.strength_bits,
        "crack_human": rec.labels["hack_time"],
        "ld": rec.distance,
        "mask_preview": rec.mask_preview,
    }


def recommend_payload(policy: PolicyResult, result: RecommendResult,
                      variant: str) -> dict:
    payload = analyze_payload(policy, result.report)
    if variant == "feedback_only":
        buttons = []
    else:
        buttons = [button_payload(i + 1, rec, variant)
                   for i, rec in enumerate(result.buttons)]
    payload["buttons"] = buttons
    payload["seed"] = result.seed
    payload["rng"] = result.rng
    return payload
