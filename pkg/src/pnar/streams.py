"""Named, reproducible random number streams.

Every stochastic routine in the package takes either an integer seed or a
``numpy.random.Generator``.  Workflows that need several independent sources
of randomness (network generation, copula draws, replication r of a Monte
Carlo study, ...) derive them from a single master seed via :func:`substream`,
so results do not depend on the order in which the streams are consumed.
"""

import hashlib

import numpy as np

__all__ = ["substream", "as_generator"]


def _name_words(name) -> list[int]:
    # Stable 2x32-bit digest of the stream name; str(name) so ints/strings mix.
    digest = hashlib.sha256(str(name).encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in (0, 4)]


def substream(seed: int, *names) -> np.random.Generator:
    """Return a generator for the sub-stream ``names`` of master ``seed``.

    Distinct name tuples yield statistically independent streams; the same
    (seed, names) pair always yields the same stream.  Names may be strings
    or integers, e.g. ``substream(7, "rep", 12)``.
    """
    entropy = [int(seed) & 0xFFFFFFFF, (int(seed) >> 32) & 0xFFFFFFFF]
    for name in names:
        entropy.extend(_name_words(name))
    return np.random.default_rng(np.random.SeedSequence(entropy))


def as_generator(seed) -> np.random.Generator:
    """Coerce ``seed`` (int, SeedSequence, Generator, or None) to a Generator."""
    return np.random.default_rng(seed)
