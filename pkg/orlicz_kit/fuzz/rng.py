"""
Counter-based random streams for campaigns.

Every (seed, check, case) triple owns an independent Philox4x64 stream:
the key holds the seed and the check index, the two high counter words
hold the case index. Cases can therefore run in any order, on any number
of threads, and draw the same numbers.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import InvalidDescriptorError

ALGORITHM_ID = "philox4x64/orlicz-kit-1"

_WORD = 1 << 64


def validate_seed(seed: int) -> int:
    if (
        isinstance(seed, bool)
        or not isinstance(seed, int)
        or not 0 <= seed < _WORD
    ):
        raise InvalidDescriptorError(
            "seed", f"must be an unsigned 64-bit integer, got {seed!r}"
        )
    return seed


def case_rng(
    seed: int, check_index: int, case_index: int
) -> np.random.Generator:
    validate_seed(seed)
    if check_index < 0 or case_index < 0:
        raise ValueError("indices must be nonnegative")
    key = seed | (check_index << 64)
    counter = case_index << 128
    return np.random.Generator(
        np.random.Philox(counter=counter, key=key)
    )


def sub_seed(rng: np.random.Generator) -> int:
    """A 63-bit seed for code that builds its own stream."""
    return int(rng.integers(0, 1 << 63))
