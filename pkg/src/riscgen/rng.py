"""Keyed derivation of independent random streams.

Every stochastic site in the package draws from a stream derived by hashing a
master seed together with string/int labels. Streams are therefore
independent of call order and of each other: adding a new sampling site, or
generating contracts in parallel, never perturbs existing draws.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(*keys: object) -> int:
    """Hash the key tuple into a 128-bit integer seed.

    ``repr`` keeps 1 and "1" distinct; a field separator keeps ("ab", "c")
    distinct from ("a", "bc").
    """
    h = hashlib.blake2b(digest_size=16)
    for key in keys:
        h.update(repr(key).encode("utf-8"))
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big")


def substream(*keys: object) -> np.random.Generator:
    """Return a fresh PCG64 generator keyed to the given labels."""
    return np.random.default_rng(derive_seed(*keys))
