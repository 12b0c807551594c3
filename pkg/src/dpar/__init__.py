"""Data-driven password strength estimation and tweak recommendations."""

from ._kernels import backend, levenshtein, levenshtein_batch
from .decompose import (InvariantError, PasswordParts, cap_key, decompose,
                        dimension_keys, l33t_key, recompose)
from .l33t import L33tTable, L33tTableError
from .model import (DIMENSIONS, DimensionTable, EmptyCorpusError, Model,
                    ModelFormatError, dim_log2p, load_model, save_model, train)
from .policy import PolicyError, PolicyResult, validate_policy
from .recommend import (Recommendation, RecommenderConfig, RecommendResult,
                        generate_candidates, generate_capitalization,
                        generate_l33t, generate_prefix_suffix, mask_preview,
                        recommend, select_recommendations)
from .strength import (RankEstimator, StrengthReport, categorize, crack_time,
                       estimate_rank_bits, exact_rank_bits, password_log2p)

__version__ = "0.1.0"

__all__ = [
    "DIMENSIONS",
    "DimensionTable",
    "EmptyCorpusError",
    "InvariantError",
    "L33tTable",
    "L33tTableError",
    "Model",
    "ModelFormatError",
    "PasswordParts",
    "PolicyError",
    "PolicyResult",
    "RankEstimator",
    "Recommendation",
    "RecommenderConfig",
    "RecommendResult",
    "StrengthReport",
    "backend",
    "cap_key",
    "categorize",
    "crack_time",
    "decompose",
    "dim_log2p",
    "dimension_keys",
    "estimate_rank_bits",
    "exact_rank_bits",
    "generate_candidates",
    "generate_capitalization",
    "generate_l33t",
    "generate_prefix_suffix",
    "l33t_key",
    "levenshtein",
    "levenshtein_batch",
    "load_model",
    "mask_preview",
    "password_log2p",
    "recompose",
    "recommend",
    "save_model",
    "select_recommendations",
    "train",
    "validate_policy",
]
