"""Deterministic synthetic dictionaries and sentences for randomized tests."""

from __future__ import annotations

import random

from algoscope.corpus import Sentence
from algoscope.dictionary import AlgorithmDictionary, build_dictionary, make_entry

FIRST = [
    "adaptive", "annealed", "bounded", "cascaded", "dual", "entropic", "factored",
    "gated", "hybrid", "inverse", "joint", "kernel", "lazy", "marginal", "nested",
    "ordinal", "pivoted", "quantized", "ranked", "spectral",
]
SECOND = [
    "alignment", "bandit", "chaining", "descent", "expansion", "folding", "graph",
    "hashing", "kernelization", "lattice", "merging", "normalization", "pruning",
    "quantizer", "routing", "sampler",
]
FILLER = (
    "the model improves results on held out data while training remains stable "
    "and we report accuracy across domains with further analysis in section two "
    "naïve straße weiß über "
    "moreover systems deliver consistent gains despite noisy labels"
).split()


def synthetic_dictionary(n_entries: int = 120, seed: int = 7) -> AlgorithmDictionary:
    rng = random.Random(seed)
    combos = [(a, b) for a in FIRST for b in SECOND]
    rng.shuffle(combos)
    entries = []
    for first, second in combos[:n_entries]:
        canonical = f"{first} {second}"
        initials = first[0] + second[0]
        aliases = [f"{first}-{second}", f"{canonical}s", initials]
        abbreviations = [initials]
        if rng.random() < 0.3:
            aliases.append(initials + "s")
            abbreviations.append(initials + "s")
        entries.append(make_entry(canonical, aliases, abbreviations))
    return build_dictionary(entries)


def _mutate_surface(alias: str, rng: random.Random) -> str:
    surface = alias
    roll = rng.random()
    if roll < 0.25:
        surface = surface.upper()
    elif roll < 0.45:
        surface = surface.title()
    if rng.random() < 0.3:
        surface = surface.replace(" ", "-") if rng.random() < 0.5 else surface.replace("-", " ")
    return surface


def synthetic_sentences(
    dictionary: AlgorithmDictionary, n: int = 1000, seed: int = 13
) -> list[Sentence]:
    """Random filler text with 0-4 alias insertions per sentence, including
    case/hyphen mutations, punctuation wrapping, and boundary-violating jams."""
    rng = random.Random(seed)
    aliases = sorted({alias for entry in dictionary.entries for alias in entry.aliases})
    sentences = []
    for i in range(n):
        tokens = [rng.choice(FILLER) for _ in range(rng.randint(3, 12))]
        for _ in range(rng.randint(0, 4)):
            surface = _mutate_surface(rng.choice(aliases), rng)
            style = rng.random()
            if style < 0.15:
                surface = f"({surface})"
            elif style < 0.25:
                surface = surface + ","
            elif style < 0.35:
                # jammed against a word: must fail the boundary rule
                surface = rng.choice(FILLER) + surface
            tokens.insert(rng.randint(0, len(tokens)), surface)
        text = " ".join(tokens) + rng.choice([".", "!", "?", "", " "])
        sentences.append(Sentence(i, "body", text))
    return sentences
