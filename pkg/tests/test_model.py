import io
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import make_model
from corpusgen import generate_corpus
from dpar import (DIMENSIONS, EmptyCorpusError, L33tTable, ModelFormatError,
                  decompose, dim_log2p, load_model, save_model, train)
from dpar.decompose import dimension_keys
from dpar.model import DimensionTable, _escape_key, _unescape_key, bin_index


def test_worked_example_tables():
    model = train(["!1P@ssw0rD2#"])
    assert model.tables["prefix"].counts == {"!1": 1}
    assert model.tables["suffix"].counts == {"2#": 1}
    assert model.tables["base"].counts == {"password": 1}
    assert model.tables["l33t"].counts == {"@,0": 1}
    assert model.tables["cap"].counts == {"0,-1": 1}


def test_duplicate_counting():
    model = train(["password1", "password1"])
    assert model.tables["base"].counts == {"password": 2}
    assert model.tables["suffix"].counts == {"1": 2}
    assert model.tables["prefix"].counts == {"": 2}
    assert model.tables["l33t"].counts == {"": 2}
    assert model.tables["cap"].counts == {"": 2}


def test_totals_match_independent_recount():
    corpus = generate_corpus(1000, seed=5)
    model = train(corpus)

    # Independent one-pass recount: every parsed line contributes one
    # observation to each dimension.
    expected_lines = sum(
        1 for line in corpus
        if line and all(33 <= ord(c) <= 126 for c in line)
    )
    assert expected_lines == 1000
    for dim in DIMENSIONS:
        assert model.tables[dim].total == expected_lines
    assert model.meta["corpus_lines"] == expected_lines

    # Spot-check one dimension against a from-scratch counter.
    table = L33tTable.default()
    suffix_counts = {}
    for line in corpus:
        key = dimension_keys(decompose(line, table), table)["suffix"]
        suffix_counts[key] = suffix_counts.get(key, 0) + 1
    assert model.tables["suffix"].counts == suffix_counts


def test_multiplicity_lines():
    model = train(["password1\t3", "welcome2"])
    assert model.tables["base"].counts["password"] == 3
    assert model.meta["corpus_lines"] == 4


def test_unreadable_lines_skipped():
    model = train(["password1", "", "p\xe4ss1", "ok123456", "bad\tcount\tiness",
                   "tabbed\tnope"])
    assert model.meta["corpus_lines"] == 2
    assert model.skipped_lines == 4


def test_empty_corpus_rejected():
    with pytest.raises(EmptyCorpusError):
        train([])
    with pytest.raises(EmptyCorpusError):
        train(["", "\n", "p\xe4ss"])


def test_min_count_prunes_base_only():
    corpus = ["password1"] * 3 + ["zebra1234"]
    model = train(corpus, min_count=2)
    assert "zebra" not in model.tables["base"].counts
    assert model.tables["base"].total == 3
    # Other dimensions keep their full totals.
    assert model.tables["suffix"].total == 4


def test_training_is_order_independent():
    corpus = generate_corpus(500, seed=8)
    rng = np.random.default_rng(0)
    shuffled = list(corpus)
    rng.shuffle(shuffled)
    assert train(corpus) == train(shuffled)


# --- probabilities ----------------------------------------------------------

def test_dim_log2p_analytic():
    model = make_model({
        "prefix": {"1": 50, "": 50}, "suffix": {"": 1}, "base": {"x": 1},
        "l33t": {"": 1}, "cap": {"": 1},
    })
    assert dim_log2p(model, "prefix", "1") == -1.0
    assert dim_log2p(model, "prefix", "") == -1.0


def test_floor_for_unseen_key():
    model = make_model({
        "prefix": {f"p{i}": 1 for i in range(100)}, "suffix": {"": 1},
        "base": {"x": 1}, "l33t": {"": 1}, "cap": {"": 1},
    })
    floor = dim_log2p(model, "prefix", "never-seen")
    assert floor == pytest.approx(math.log2(1 / 200), abs=1e-12)
    assert floor == model.tables["prefix"].floor_log2p


def test_floor_below_every_observed_probability():
    model = train(generate_corpus(2000, seed=3))
    for dim in DIMENSIONS:
        table = model.tables[dim]
        assert table.floor_log2p < min(table.log2p(k) for k in table.counts)


def test_observed_probabilities_sum_to_one_exactly():
    model = train(generate_corpus(1500, seed=4))
    for dim in DIMENSIONS:
        table = model.tables[dim]
        assert sum(Fraction(c, table.total) for c in table.counts.values()) == 1
        float_sum = math.fsum(2 ** table.log2p(k) for k in table.counts)
        assert float_sum == pytest.approx(1.0, abs=1e-9)


def test_log2p_monotone_in_count():
    model = train(generate_corpus(1500, seed=6))
    table = model.tables["base"]
    items = sorted(table.counts.items(), key=lambda kv: kv[1])
    for (_k1, c1), (_k2, c2) in zip(items, items[1:]):
        if c1 < c2:
            assert table.log2p(_k1) < table.log2p(_k2)


def test_trained_key_matches_recount(small_model):
    table = small_model.tables["base"]
    expected = math.log2(table.counts["password"]) - math.log2(table.total)
    assert dim_log2p(small_model, "base", "password") == expected


def test_histograms_rebuild_identically():
    model = train(generate_corpus(1000, seed=9))
    rebuilt = model.build_histograms()
    for dim in DIMENSIONS:
        np.testing.assert_array_equal(model.histograms[dim], rebuilt[dim])
        # Mass = observed keys + the floor pseudo-key.
        assert model.histograms[dim].sum() == len(model.tables[dim].counts) + 1


def test_bin_index_rounding():
    assert bin_index(0.0, 0.05) == 0
    assert bin_index(-1.0, 0.05) == 20
    assert bin_index(-1.024, 0.05) == 20
    assert bin_index(-1.026, 0.05) == 21


# --- persistence ------------------------------------------------------------

def test_save_load_round_trip(tmp_path):
    model = train(["!1P@ssw0rD2#"])
    path = tmp_path / "model.txt"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    assert loaded.meta == model.meta
    for dim in DIMENSIONS:
        assert loaded.tables[dim].counts == model.tables[dim].counts
        assert loaded.tables[dim].total == model.tables[dim].total


def test_save_is_byte_deterministic(tmp_path):
    corpus = generate_corpus(300, seed=10)
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    save_model(train(corpus), a)
    save_model(train(corpus), b)
    assert a.read_bytes() == b.read_bytes()


def test_header_format():
    buf = io.StringIO()
    save_model(train(["password1"]), buf)
    lines = buf.getvalue().split("\n")
    assert lines[0] == "DPAR-MODEL 1"
    assert lines[1].startswith("meta\tcorpus_lines=1\tl33t_hash=")
    assert lines[2] == "[prefix] 1 1"
    assert lines[3] == "\\e\t1"


def test_keys_sorted_by_bytes():
    buf = io.StringIO()
    save_model(train(["za1", "ab1", "mm1"]), buf)
    text = buf.getvalue()
    base_section = text.split("[base] 3 3\n")[1].split("[l33t]")[0]
    assert base_section.splitlines() == ["ab\t1", "mm\t1", "za\t1"]


def test_truncated_file_rejected(tmp_path):
    model = train(["password1", "hello123"])
    path = tmp_path / "model.txt"
    save_model(model, path)
    full = path.read_text()
    for cut in (10, len(full) // 2, len(full) - 3):
        (tmp_path / "cut.txt").write_text(full[:cut])
        with pytest.raises(ModelFormatError):
            load_model(tmp_path / "cut.txt")


def test_bad_magic_rejected(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("DPAR-MODEL 2\nmeta\tcorpus_lines=1\tl33t_hash=00\n")
    with pytest.raises(ModelFormatError):
        load_model(path)
    path.write_text("garbage\n")
    with pytest.raises(ModelFormatError):
        load_model(path)


def test_total_mismatch_rejected(tmp_path):
    model = train(["password1"])
    path = tmp_path / "model.txt"
    save_model(model, path)
    text = path.read_text().replace("[base] 1 1", "[base] 1 2")
    path.write_text(text)
    with pytest.raises(ModelFormatError):
        load_model(path)


def test_trailing_garbage_rejected(tmp_path):
    model = train(["password1"])
    path = tmp_path / "model.txt"
    save_model(model, path)
    path.write_text(path.read_text() + "extra\t1\n")
    with pytest.raises(ModelFormatError):
        load_model(path)


def test_l33t_hash_mismatch_rejected(tmp_path):
    custom = L33tTable([("a", "@")])
    model = train(["password1"], custom)
    path = tmp_path / "model.txt"
    save_model(model, path)
    with pytest.raises(ModelFormatError):
        load_model(path)  # default table has a different hash
    assert load_model(path, custom) == model


def test_key_escaping_round_trip():
    tricky = ["", "\\", "\\e", "a\\b", "\\\\", "a|b", "~!@#"]
    for key in tricky:
        assert _unescape_key(_escape_key(key)) == key
    # Totals may differ across dimensions in a hand-built model.
    buf = io.StringIO()
    from dpar.model import Model
    tables = {
        "prefix": DimensionTable("prefix", {"\\": 1, "\\\\": 2, "": 3}),
        "suffix": DimensionTable("suffix", {"~": 1, "\\e": 5}),
        "base": DimensionTable("base", {"x": 6}),
        "l33t": DimensionTable("l33t", {"": 6}),
        "cap": DimensionTable("cap", {"": 6}),
    }
    model = Model(tables=tables,
                  meta={"corpus_lines": 6,
                        "l33t_hash": L33tTable.default().table_hash()},
                  l33t_table=L33tTable.default())
    save_model(model, buf)
    loaded = load_model(io.StringIO(buf.getvalue()))
    assert loaded.tables["prefix"].counts == {"\\": 1, "\\\\": 2, "": 3}
    assert loaded.tables["suffix"].counts == {"~": 1, "\\e": 5}


def test_large_model_trains_and_loads_fast(tmp_path):
    corpus = generate_corpus(100_000, seed=77)
    start = time.perf_counter()
    model = train(corpus)
    train_elapsed = time.perf_counter() - start
    assert train_elapsed < 60.0
    path = tmp_path / "big.txt"
    save_model(model, path)
    start = time.perf_counter()
    loaded = load_model(path)
    load_elapsed = time.perf_counter() - start
    assert loaded == model
    assert load_elapsed < 2.0
