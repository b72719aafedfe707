"""Random typing source: i.i.d. letters and spaces, split into words."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

_CHUNK_CHARS = 1 << 18
_MAX_ENUMERATION = 10_000_000
_ASCII_LETTERS = 26


def _letter(index: int) -> str:
    # Alphabets beyond a-z continue into a large contiguous Unicode block,
    # keeping every letter a single distinct character.
    if index < _ASCII_LETTERS:
        return chr(ord("a") + index)
    return chr(0x4E00 + index - _ASCII_LETTERS)


@dataclass(frozen=True)
class MonkeyConfig:
    """Typing parameters: alphabet size, space probability, output length."""

    alphabet_size: int
    space_probability: float
    token_count: int
    seed: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError(f"alphabet_size must be >= 1, got {self.alphabet_size}")
        if not 0.0 < self.space_probability < 1.0:
            raise ValueError(
                f"space_probability must lie in (0, 1), got {self.space_probability}"
            )
        if self.token_count < 0:
            raise ValueError(f"token_count must be >= 0, got {self.token_count}")


def _chunk_text(u: np.ndarray, m: int, q: float) -> str:
    """Map uniform draws to characters: space below q, else a uniform letter."""
    scaled = np.maximum(u - q, 0.0) / (1.0 - q) * m
    idx = np.minimum(scaled.astype(np.int64), m - 1)
    if m <= _ASCII_LETTERS:
        codes = np.where(u < q, np.uint8(32), (idx + ord("a")).astype(np.uint8))
        return codes.tobytes().decode("ascii")
    alphabet = np.array([_letter(i) for i in range(m)])
    chars = np.where(u < q, " ", alphabet[idx])
    return "".join(chars.tolist())


def generate(config: MonkeyConfig) -> list[str]:
    """Exactly ``token_count`` words, deterministic for a fixed seed.

    Characters are drawn until enough complete words exist; runs of
    spaces produce no empty words.
    """
    rng = np.random.default_rng(config.seed)
    words: list[str] = []
    tail = ""
    while len(words) < config.token_count:
        u = rng.random(_CHUNK_CHARS)
        text = tail + _chunk_text(u, config.alphabet_size, config.space_probability)
        parts = text.split()
        tail = parts.pop() if parts and not text.endswith(" ") else ""
        words.extend(parts)
    return words[: config.token_count]


@dataclass(frozen=True)
class WordProbabilityTable:
    """Every possible word up to a length cut, ranked by exact probability.

    Probabilities are renormalized over the enumerated set; ties (words of
    equal length) keep lexicographic order, so ranks are deterministic.
    """

    entries: tuple[tuple[str, float], ...]

    def probabilities(self) -> np.ndarray:
        return np.array([p for _, p in self.entries], dtype=np.float64)


def theoretical_table(config: MonkeyConfig, max_word_length: int) -> WordProbabilityTable:
    """Exact word distribution truncated at ``max_word_length``.

    A specific word of length L has weight q * ((1-q)/M)**L, strictly
    decreasing in L, so ordering by length then alphabetically yields the
    ranking directly.  Refuses enumerations beyond 1e7 entries.
    """
    if max_word_length < 1:
        raise ValueError(f"max_word_length must be >= 1, got {max_word_length}")
    m, q = config.alphabet_size, config.space_probability
    sizes = [m**length for length in range(1, max_word_length + 1)]
    if sum(sizes) > _MAX_ENUMERATION:
        raise ValueError(
            f"enumeration would hold {sum(sizes)} words; limit is {_MAX_ENUMERATION}"
        )
    per_letter = (1.0 - q) / m
    weights = [q * per_letter**length for length in range(1, max_word_length + 1)]
    normalizer = math.fsum(size * w for size, w in zip(sizes, weights))
    alphabet = [_letter(i) for i in range(m)]
    entries: list[tuple[str, float]] = []
    for length, weight in enumerate(weights, start=1):
        p = weight / normalizer
        entries.extend(
            ("".join(letters), p) for letters in itertools.product(alphabet, repeat=length)
        )
    return WordProbabilityTable(entries=tuple(entries))
