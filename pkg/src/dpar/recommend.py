"""Candidate generation and selection for password recommendations.

Per call the four mutable dimensions (prefix, suffix, l33t,
capitalization) each get a small option list: 13 prefix/suffix options
(the original plus four rounds of three tweaks), and at most one extra
l33t substitution and one extra capitalization. Their cross product,
minus the unchanged combination, yields up to 675 candidates. Candidates
weaker than the original are dropped, the strongest candidate per edit
distance is kept, and three buttons are drawn from the distance buckets
in pairs. The base word is never modified.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._kernels import levenshtein, levenshtein_batch
from .charset import DIGITS_AND_SYMBOLS, LETTER_SET, LOWERCASE
from .decompose import PasswordParts, decompose, dims_mutable, with_changes
from .l33t import L33tTable
from .model import Model
from .policy import require_valid, validate_policy
from .strength import (DEFAULT_CRACK_RATE, FAIR_MAX_BITS, RankEstimator,
                       StrengthReport, WEAK_MAX_BITS, categorize, crack_time,
                       dims_log2p)

RNG_ALGORITHM = "pcg64"  # numpy default_rng bit generator

VARIANTS = ("asterisks", "num_changes", "hack_time", "feedback_only")


@dataclass(frozen=True)
class RecommenderConfig:
    repeat_count: int = 4
    min_strength: Optional[float] = None
    dimension_priority: tuple[str, ...] = ("prefix", "suffix", "l33t", "cap")
    crack_rate: float = DEFAULT_CRACK_RATE
    weak_max_bits: float = WEAK_MAX_BITS
    fair_max_bits: float = FAIR_MAX_BITS
    seed: Optional[int] = None

    def __post_init__(self):
        if self.repeat_count < 1:
            raise ValueError("repeat_count must be at least 1")
        if sorted(self.dimension_priority) != sorted(dims_mutable()):
            raise ValueError("dimension_priority must be a permutation of "
                             f"{dims_mutable()}")


@dataclass(frozen=True)
class Recommendation:
    password: str
    parts: PasswordParts
    strength_bits: float
    distance: int
    mask_preview: str
    labels: dict[str, str] = field(compare=False)


@dataclass
class RecommendResult:
    report: StrengthReport
    buttons: tuple[Recommendation, ...]
    cand: dict[int, Recommendation]
    seed: int
    rng: str = RNG_ALGORITHM


@dataclass(frozen=True)
class _Scored:
    parts: PasswordParts
    password: str
    strength_bits: float
    distance: int
    dim_log2p: dict[str, float]


def mask_preview(original: str, candidate: str) -> str:
    """Render one minimal edit script: kept characters become ``*``,
    substituted or inserted characters show literally, deletions vanish.

    Ties between minimal scripts prefer matches, then substitutions over
    insertions, applied leftmost-first.
    """
    n, m = len(original), len(candidate)
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][0] = i
    for j in range(1, m + 1):
        dist[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if original[i - 1] == candidate[j - 1] else 1
            dist[i][j] = min(dist[i - 1][j] + 1, dist[i][j - 1] + 1,
                             dist[i - 1][j - 1] + cost)
    out = []
    i, j = n, m
    while i > 0 or j > 0:
        here = dist[i][j]
        if i > 0 and j > 0 and original[i - 1] == candidate[j - 1] \
                and here == dist[i - 1][j - 1]:
            out.append("*")
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and here == dist[i - 1][j - 1] + 1:
            out.append(candidate[j - 1])
            i, j = i - 1, j - 1
        elif j > 0 and here == dist[i][j - 1] + 1:
            out.append(candidate[j - 1])
            j -= 1
        else:
            i -= 1
    return "".join(reversed(out))


def _random_string(rng, length: int) -> str:
    return "".join(DIGITS_AND_SYMBOLS[int(rng.integers(len(DIGITS_AND_SYMBOLS)))]
                   for _ in range(length))


def _replace_at(text: str, pos: int, rng) -> str:
    pool = [ch for ch in DIGITS_AND_SYMBOLS if ch != text[pos]]
    ch = pool[int(rng.integers(len(pool)))]
    return text[:pos] + ch + text[pos + 1:]


def generate_prefix_suffix(text: str, rng) -> list[str]:
    """Three tweaked variants of a digit/symbol prefix or suffix.

    Empty input yields random strings of lengths 1, 2 and 3; short inputs
    are replaced in place and extended; inputs of three or more
    characters get three single-character replacements.
    """
    if any(ch in LETTER_SET for ch in text):
        raise ValueError(f"prefix/suffix must not contain letters: {text!r}")
    if text == "":
        return [_random_string(rng, 1), _random_string(rng, 2), _random_string(rng, 3)]
    if len(text) == 1:
        return [_replace_at(text, 0, rng),
                text + _random_string(rng, 1),
                text + _random_string(rng, 2)]
    if len(text) == 2:
        return [_replace_at(text, 0, rng),
                _replace_at(text, 1, rng),
                text + _random_string(rng, 1)]
    out = []
    for _ in range(3):
        pos = int(rng.integers(len(text)))
        out.append(_replace_at(text, pos, rng))
    return out


def generate_l33t(base: str, l33t_subs, cap_positions, table: L33tTable,
                  rng) -> Optional[tuple[int, str, str]]:
    """One extra substitution at a random still-plain letter, or None."""
    taken = {pos for pos, _s, _l in l33t_subs} | set(cap_positions)
    eligible = [i for i, ch in enumerate(base)
                if ch in table.letters and i not in taken]
    if not eligible:
        return None
    pos = eligible[int(rng.integers(len(eligible)))]
    symbols = table.symbols_for(base[pos])
    symbol = symbols[int(rng.integers(len(symbols)))]
    return (pos, symbol, base[pos])


def generate_capitalization(base: str, cap_positions, blocked_positions,
                            rng) -> Optional[int]:
    """One extra position to capitalize, or None when all are taken."""
    taken = set(cap_positions) | set(blocked_positions)
    eligible = [i for i, ch in enumerate(base)
                if ch in LOWERCASE and i not in taken]
    if not eligible:
        return None
    return eligible[int(rng.integers(len(eligible)))]


def generate_candidates(parts: PasswordParts, table: L33tTable,
                        config: RecommenderConfig, rng) -> list[PasswordParts]:
    """The cross product of per-dimension options, minus the unchanged one."""
    prefix_opts = [parts.prefix]
    suffix_opts = [parts.suffix]
    for _ in range(config.repeat_count):
        prefix_opts.extend(generate_prefix_suffix(parts.prefix, rng))
        suffix_opts.extend(generate_prefix_suffix(parts.suffix, rng))

    l33t_opts = [parts.l33t_subs]
    new_sub = generate_l33t(parts.base_word, parts.l33t_subs,
                            parts.cap_positions, table, rng)
    if new_sub is not None:
        l33t_opts.append(tuple(sorted(parts.l33t_subs + (new_sub,))))

    # The extra capitalization must not collide with the extra substitution,
    # otherwise one combination of the cross product would be unbuildable.
    blocked = {pos for pos, _s, _l in parts.l33t_subs}
    if new_sub is not None:
        blocked.add(new_sub[0])
    cap_opts = [parts.cap_positions]
    new_cap = generate_capitalization(parts.base_word, parts.cap_positions,
                                      blocked, rng)
    if new_cap is not None:
        cap_opts.append(tuple(sorted(parts.cap_positions + (new_cap,))))

    candidates = []
    for pi, prefix in enumerate(prefix_opts):
        for si, suffix in enumerate(suffix_opts):
            for li, subs in enumerate(l33t_opts):
                for ci, caps in enumerate(cap_opts):
                    if pi == 0 and si == 0 and li == 0 and ci == 0:
                        continue
                    candidates.append(with_changes(
                        parts, prefix=prefix, suffix=suffix,
                        l33t_subs=subs, cap_positions=caps))
    return candidates


def _score_candidates(model: Model, estimator: RankEstimator,
                      original: PasswordParts,
                      candidates: list[PasswordParts]) -> list[_Scored]:
    distances = levenshtein_batch(original.raw, [c.raw for c in candidates])
    per_dim = [dims_log2p(model, c) for c in candidates]
    totals = np.array([sum(d.values()) for d in per_dim], dtype=np.float64)
    bits = estimator.rank_bits_batch(totals)
    return [
        _Scored(parts=c, password=c.raw, strength_bits=float(bits[k]),
                distance=int(distances[k]), dim_log2p=per_dim[k])
        for k, c in enumerate(candidates)
    ]


def _bucket_winner(members: list[_Scored], orig_dims: dict[str, float],
                   priority: tuple[str, ...]) -> _Scored:
    def sort_key(cand: _Scored):
        gains = tuple(orig_dims[d] - cand.dim_log2p[d] for d in priority)
        return (-cand.strength_bits,) + tuple(-g for g in gains) \
            + (cand.password.encode("utf-8"),)
    return min(members, key=sort_key)


def _pair_group(distance: int) -> int:
    # Distances 1-2 feed the first button, 3-4 the second, 5-6 the third;
    # sparser tables shift later pairs forward.
    return (distance + 1) // 2


def select_recommendations(scored: list[_Scored], original_bits: float,
                           orig_dims: dict[str, float],
                           config: RecommenderConfig, rng
                           ) -> tuple[dict[int, _Scored], list[_Scored]]:
    """Strongest candidate per edit distance, then three button picks."""
    kept = [
        c for c in scored
        if c.distance >= 1
        and c.strength_bits >= original_bits
        and (config.min_strength is None or c.strength_bits >= config.min_strength)
        and validate_policy(c.password).valid
    ]
    buckets: dict[int, list[_Scored]] = {}
    for cand in kept:
        buckets.setdefault(cand.distance, []).append(cand)
    cand_table = {
        distance: _bucket_winner(members, orig_dims, config.dimension_priority)
        for distance, members in buckets.items()
    }

    groups: dict[int, list[_Scored]] = {}
    for distance in sorted(cand_table):
        groups.setdefault(_pair_group(distance), []).append(cand_table[distance])
    buttons: list[_Scored] = []
    seen = set()
    for group_index in sorted(groups)[:3]:
        members = groups[group_index]
        pick = members[int(rng.integers(len(members)))]
        if pick.password not in seen:
            seen.add(pick.password)
            buttons.append(pick)
    return cand_table, buttons


def _as_recommendation(cand: _Scored, original: str,
                       config: RecommenderConfig) -> Recommendation:
    mask = mask_preview(original, cand.password)
    _seconds, human = crack_time(cand.strength_bits, config.crack_rate)
    changes = "1 change" if cand.distance == 1 else f"{cand.distance} changes"
    return Recommendation(
        password=cand.password, parts=cand.parts,
        strength_bits=cand.strength_bits, distance=cand.distance,
        mask_preview=mask,
        labels={"asterisks": mask, "num_changes": changes, "hack_time": human},
    )


def recommend(model: Model, password: str,
              config: Optional[RecommenderConfig] = None,
              estimator: Optional[RankEstimator] = None) -> RecommendResult:
    """Strength report plus up to three tweak recommendations."""
    config = config or RecommenderConfig()
    require_valid(password)
    if estimator is None:
        estimator = RankEstimator.from_model(model)

    parts = decompose(password, model.l33t_table, model)
    orig_dims = dims_log2p(model, parts)
    log2p = sum(orig_dims.values())
    bits = estimator.rank_bits(log2p)
    seconds, human = crack_time(bits, config.crack_rate)
    report = StrengthReport(
        log2p=log2p, strength_bits=bits,
        category=categorize(bits, config.weak_max_bits, config.fair_max_bits),
        crack_seconds=seconds, crack_human=human)

    seed = config.seed if config.seed is not None else secrets.randbits(63)
    rng = np.random.default_rng(seed)
    candidates = generate_candidates(parts, model.l33t_table, config, rng)
    scored = _score_candidates(model, estimator, parts, candidates)
    cand_table, picks = select_recommendations(scored, bits, orig_dims,
                                               config, rng)
    buttons = tuple(_as_recommendation(c, password, config) for c in picks)
    cand = {d: _as_recommendation(c, password, config)
            for d, c in cand_table.items()}
    return RecommendResult(report=report, buttons=buttons, cand=cand,
                           seed=seed, rng=RNG_ALGORITHM)
