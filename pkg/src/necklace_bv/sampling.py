"""Seeded random generation of closed paths and necklaces."""

from __future__ import annotations

import random

from .necklace import Necklace, canonicalize, constant
from .quiver import DoubledQuiver


def random_closed_word(dq: DoubledQuiver, length: int, rng: random.Random,
                       attempts: int = 200):
    """A random closed word of exactly ``length`` arrows, or None."""
    for _ in range(attempts):
        start = rng.randrange(dq.n_vertices)
        if length == 0:
            return (), start
        word, cur = [], start
        ok = True
        for _ in range(length - 1):
            out = dq.outgoing(cur)
            if not out:
                ok = False
                break
            c = rng.choice(out)
            word.append(c)
            cur = dq.target[c]
        if not ok:
            continue
        last = [c for c in dq.outgoing(cur) if dq.target[c] == start]
        if not last:
            continue
        word.append(rng.choice(last))
        return tuple(word), start
    return None


def random_necklace(dq: DoubledQuiver, rng: random.Random, max_len: int = 6,
                    min_len: int = 0, allow_constant: bool = True) -> Necklace:
    """A random nonzero necklace with length in [min_len, max_len]."""
    if not allow_constant:
        min_len = max(min_len, 1)
    for _ in range(1000):
        length = rng.randint(min_len, max_len)
        if length == 0:
            return constant(rng.randrange(dq.n_vertices))
        got = random_closed_word(dq, length, rng)
        if got is None:
            continue
        res = canonicalize(dq, got[0])
        if res is not None:
            return res[0]
    raise ValueError("could not sample a nonzero necklace with these bounds")


def random_rotation(word, rng: random.Random) -> int:
    return rng.randrange(len(word)) if word else 0
