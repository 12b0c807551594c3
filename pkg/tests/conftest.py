"""Shared fixtures: small trained models and a deterministic toy model."""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dpar import L33tTable, Model, train
from dpar.model import DimensionTable

WORKED_EXAMPLE = "!1P@ssw0rD2#"

SMALL_CORPUS = [
    "password1", "password1", "password123", "123456", "12345678",
    "qwerty7", "1qaz1qaz", "hello123", "dragon1", "sunshine9",
    "abc12345", "!1P@ssw0rD2#", "monkey12", "letmein1", "shadow99",
    "football7", "baseball2", "superman3", "trustno1", "master12",
]


def make_model(counts_by_dim: dict[str, dict[str, int]],
               table: L33tTable | None = None) -> Model:
    """Build a model straight from per-dimension count dicts."""
    table = table or L33tTable.default()
    tables = {dim: DimensionTable(dim, dict(counts))
              for dim, counts in counts_by_dim.items()}
    return Model(tables=tables,
                 meta={"corpus_lines": tables["base"].total,
                       "l33t_hash": table.table_hash()},
                 l33t_table=table)


@pytest.fixture(scope="session")
def default_table():
    return L33tTable.default()


@pytest.fixture(scope="session")
def small_model():
    return train(SMALL_CORPUS * 5)


def build_toy_model_180k(seed: int = 99) -> Model:
    """50 bases x 20 prefixes x 20 suffixes x 3 l33t x 3 cap observed keys."""
    rng = np.random.default_rng(seed)

    def counts(prefix: str, n: int) -> dict[str, int]:
        return {f"{prefix}{i}": int(rng.integers(1, 5000)) for i in range(n)}

    return make_model({
        "base": counts("base", 50),
        "prefix": counts("p", 20),
        "suffix": counts("s", 20),
        "l33t": counts("l", 3),
        "cap": counts("c", 3),
    })


@pytest.fixture(scope="session")
def toy_model_180k():
    return build_toy_model_180k()
