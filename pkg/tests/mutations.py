"""Seeded single-constant corruptions of serialized structures."""

import copy
import random
from fractions import Fraction


def scalar_sites(node, path=()):
    """Paths to every sparse-tensor row ``[idx..., "c"]`` in a document."""
    if isinstance(node, dict):
        for k in sorted(node):
            yield from scalar_sites(node[k], path + (k,))
    elif isinstance(node, list):
        if len(node) >= 2 and isinstance(node[-1], str) and all(isinstance(t, int) for t in node[:-1]):
            yield path
        else:
            for i, v in enumerate(node):
                yield from scalar_sites(v, path + (i,))


def mutate(doc: dict, path) -> dict:
    out = copy.deepcopy(doc)
    node = out
    for k in path:
        node = node[k]
    node[-1] = str(Fraction(node[-1]) + 1)
    return out


def seeded_mutations(doc: dict, n: int, seed: int, skip=("source",)):
    """n distinct corruptions; the embedded source algebra is left alone."""
    sites = [p for p in scalar_sites(doc) if p[0] not in skip]
    rng = random.Random(seed)
    for path in rng.sample(sites, n):
        yield path, mutate(doc, path)
