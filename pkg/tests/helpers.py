from necklace_bv.sampling import random_closed_word


def sample_word(dq, rng, max_len=5, min_len=1):
    """A random closed word of length in [min_len, max_len]."""
    for _ in range(1000):
        got = random_closed_word(dq, rng.randint(min_len, max_len), rng)
        if got is not None and got[0]:
            return got[0]
    raise RuntimeError("no closed word found")


def sample_path(dq, rng, length):
    """A random composable (not necessarily closed) path."""
    v = rng.randrange(dq.n_vertices)
    out = []
    for _ in range(length):
        c = rng.choice(dq.outgoing(v))
        out.append(c)
        v = dq.target[c]
    return tuple(out)
