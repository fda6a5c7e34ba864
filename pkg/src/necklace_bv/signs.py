"""Koszul sign helpers for Z/2-graded reorderings."""

from __future__ import annotations


def koszul_sign(degrees, perm) -> int:
    """Sign of reordering items with ``degrees`` into the order ``perm``.

    ``perm[k]`` is the index of the item that ends up in position k.
    """
    s = 0
    for a in range(len(perm)):
        da = degrees[perm[a]]
        if not da:
            continue
        for b in range(a + 1, len(perm)):
            if perm[b] < perm[a] and degrees[perm[b]]:
                s ^= 1
    return -1 if s else 1


def cyclic_symmetrizer(n: int, degrees):
    """Terms of the cyclic symmetriser on n graded slots.

    Returns ``[(perm, sign), ...]`` with one entry per cyclic rotation; the
    identity comes first and the rotation by r sends (x_0, ..., x_{n-1}) to
    (x_r, ..., x_{n-1}, x_0, ..., x_{r-1}).
    """
    if len(degrees) != n:
        raise ValueError("need one degree per slot")
    out = []
    for r in range(n):
        perm = tuple(range(r, n)) + tuple(range(r))
        head = sum(degrees[:r]) & 1
        tail = sum(degrees[r:]) & 1
        out.append((perm, -1 if head & tail else 1))
    return out
