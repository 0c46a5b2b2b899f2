"""Signature generators shared by the test modules."""
import random


def compositions(total):
    """All ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def signatures_up_to(max_sum, min_sum=2):
    """Every signature (t >= 2) with entry sum in [min_sum, max_sum]."""
    out = []
    for total in range(min_sum, max_sum + 1):
        out.extend(c for c in compositions(total) if len(c) >= 2)
    return out


def random_signatures(count, max_sum, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        total = rng.randint(2, max_sum)
        cuts = sorted(rng.sample(range(1, total), rng.randint(1, total - 1)))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        out.append(tuple(parts))
    return out
