"""HTTP facade over a loaded model: analyze, recommend, health.

The model is immutable once loaded and shared across requests; handlers
are pure functions of (model, request). Plaintext passwords live only in
request bodies and successful recommendation responses; they are never
logged, persisted, or echoed in error bodies.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import payloads
from .decompose import decompose
from .l33t import L33tTable
from .model import Model, load_model
from .policy import validate_policy
from .recommend import RecommenderConfig, VARIANTS, recommend
from .strength import RankEstimator, StrengthReport, categorize, crack_time, password_log2p

MODEL_PATH_ENV = "DPAR_MODEL_PATH"


@dataclass
class ServiceConfig:
    model_path: Optional[str] = None
    host: str = "127.0.0.1"
    port: int = 8000
    variant: str = "asterisks"
    l33t_path: Optional[str] = None
    recommender: RecommenderConfig = field(default_factory=RecommenderConfig)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant: {self.variant}")

    @classmethod
    def from_file(cls, path: Optional[str] = None) -> "ServiceConfig":
        """Flat key=value config file; DPAR_MODEL_PATH overrides model_path."""
        values: dict[str, str] = {}
        if path is not None:
            with open(path, "r", encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    key, sep, value = line.partition("=")
                    if not sep:
                        raise ValueError(f"{path}:{lineno}: expected key=value")
                    values[key.strip()] = value.strip()
        rec_kwargs = {}
        if "repeat_count" in values:
            rec_kwargs["repeat_count"] = int(values["repeat_count"])
        if "min_strength" in values:
            rec_kwargs["min_strength"] = float(values["min_strength"])
        if "dimension_priority" in values:
            rec_kwargs["dimension_priority"] = tuple(
                values["dimension_priority"].split(","))
        if "crack_rate" in values:
            rec_kwargs["crack_rate"] = float(values["crack_rate"])
        config = cls(
            model_path=values.get("model_path"),
            host=values.get("host", "127.0.0.1"),
            port=int(values.get("port", 8000)),
            variant=values.get("variant", "asterisks"),
            l33t_path=values.get("l33t_path"),
            recommender=RecommenderConfig(**rec_kwargs),
        )
        env_path = os.environ.get(MODEL_PATH_ENV)
        if env_path:
            config.model_path = env_path
        return config


class AnalyzeRequest(BaseModel):
    password: str


class RecommendRequest(BaseModel):
    password: str
    variant: Optional[str] = None
    seed: Optional[int] = Field(default=None, ge=0, lt=2 ** 63)


def load_service_model(config: ServiceConfig) -> Model:
    if not config.model_path:
        raise ValueError("no model path configured (set model_path or "
                         f"{MODEL_PATH_ENV})")
    table = L33tTable.load(config.l33t_path) if config.l33t_path else None
    return load_model(config.model_path, table)


def create_app(model: Optional[Model] = None,
               config: Optional[ServiceConfig] = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="dpar", docs_url=None, redoc_url=None)
    # The browser front end is served from its own origin.
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["POST", "GET"], allow_headers=["*"])
    app.state.config = config
    app.state.model = model
    app.state.estimator = RankEstimator.from_model(model) if model else None

    @app.exception_handler(RequestValidationError)
    async def malformed_request(_request: Request, _exc: RequestValidationError):
        # Deliberately generic: validation errors must not echo body content.
        return JSONResponse(status_code=400,
                            content={"detail": "malformed request body"})

    def _ready() -> bool:
        return app.state.model is not None

    @app.get("/v1/health")
    def health():
        if not _ready():
            return JSONResponse(status_code=503, content={"status": "loading"})
        return JSONResponse(content={"status": "ok",
                                     "model_meta": dict(app.state.model.meta)})

    @app.post("/v1/analyze")
    def analyze(body: AnalyzeRequest):
        if not _ready():
            return JSONResponse(status_code=503, content={"status": "loading"})
        policy = validate_policy(body.password)
        if not policy.valid:
            return JSONResponse(status_code=422,
                                content=payloads.violation_payload(policy))
        payload = analyze_password(app.state.model, app.state.estimator,
                                   body.password, config.recommender)
        return JSONResponse(content=payload)

    @app.post("/v1/recommend")
    def recommend_endpoint(body: RecommendRequest):
        if not _ready():
            return JSONResponse(status_code=503, content={"status": "loading"})
        variant = body.variant if body.variant is not None else config.variant
        if variant not in VARIANTS:
            return JSONResponse(status_code=400,
                                content={"detail": "unknown variant"})
        policy = validate_policy(body.password)
        if not policy.valid:
            return JSONResponse(status_code=422,
                                content=payloads.violation_payload(policy))
        rec_config = config.recommender
        if body.seed is not None:
            rec_config = replace(rec_config, seed=body.seed)
        result = recommend(app.state.model, body.password, rec_config,
                           app.state.estimator)
        return JSONResponse(content=payloads.recommend_payload(
            policy, result, variant))

    return app


def analyze_password(model: Model, estimator: RankEstimator, password: str,
                     rec_config: RecommenderConfig) -> dict:
    """The /v1/analyze payload; shared verbatim by the CLI."""
    policy = validate_policy(password)
    parts = decompose(password, model.l33t_table, model)
    log2p = password_log2p(model, parts)
    bits = estimator.rank_bits(log2p)
    seconds, human = crack_time(bits, rec_config.crack_rate)
    report = StrengthReport(
        log2p=log2p, strength_bits=bits,
        category=categorize(bits, rec_config.weak_max_bits,
                            rec_config.fair_max_bits),
        crack_seconds=seconds, crack_human=human)
    return payloads.analyze_payload(policy, report)
