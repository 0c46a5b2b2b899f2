"""Geometric realizability of the direction-critical sequence with a given signature.

Positive verdicts name a witness family whose sweep is checked against the
combinatorial construction; negative verdicts name the cyclic pattern of the
signature that rules out a realization.
"""
from dataclasses import dataclass

from .constructor import dc_closed_form
from .core import as_signature, equivalent
from .errors import NotRealizable
from .geometry import Bipencil, ExpCross, Polygon, Tricolumnar, Z5_12, sweep

# positive tags
ALL_ONES = "all ones"
TWO_CROSSINGS = "two crossings"
ONE_BIG_TWO_ONES = "(d,1,1)"
GOLDEN_TRIPLE = "(2,2,2)"

# blocking patterns, in the order they are tried
BIG_AND_MEDIUM = "(>=3,>=2)"
RUN_OF_TWOS = "(2,2,2) run"
BIG_THEN_TWO_ONES = "(>=2,1,1)"
TWO_ONE_TWO = "(2,1,2)"


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    witness: object  # family spec or None
    tag: str

    def __str__(self):
        if self.realizable:
            return f"realizable by {self.witness} ({self.tag})"
        return f"not realizable (Theorem: {self.tag} pattern)"

    def as_dict(self):
        return {
            "realizable": self.realizable,
            "witness": None if self.witness is None else str(self.witness),
            "tag": self.tag,
        }


def _cyclic_windows(d, width):
    """Every window of ``width`` consecutive entries, read both ways round."""
    t = len(d)
    for seq in (d, d[::-1]):
        for i in range(t):
            yield tuple(seq[(i + j) % t] for j in range(width))


def has_pattern(d, tests):
    """True if some cyclic window of ``d`` satisfies the per-entry predicates."""
    return any(all(f(x) for f, x in zip(tests, w)) for w in _cyclic_windows(tuple(d), len(tests)))


def _blocking_tag(d):
    d = tuple(d)
    t = len(d)
    # two distinct crossings, one of size >= 3 and another of size >= 2
    for i in range(t):
        for j in range(t):
            if i != j and d[i] >= 3 and d[j] >= 2:
                return BIG_AND_MEDIUM
    if t >= 4 and has_pattern(d, [lambda x: x == 2] * 3):
        return RUN_OF_TWOS
    if t >= 4 and has_pattern(d, [lambda x: x >= 2, lambda x: x == 1, lambda x: x == 1]):
        return BIG_THEN_TWO_ONES
    if has_pattern(d, [lambda x: x == 2, lambda x: x == 1, lambda x: x == 2]):
        return TWO_ONE_TWO
    return None


def classify(d):
    """Decide realizability of the sequence with signature ``d``."""
    d = as_signature(d)
    e = d.entries
    if all(x == 1 for x in e):
        return Verdict(True, Polygon(2 * d.t), ALL_ONES)
    if d.t == 2:
        if min(e) >= 2:
            return Verdict(True, ExpCross(2, e[0] - 1, e[1] - 1), TWO_CROSSINGS)
        return Verdict(True, Bipencil(max(e)), TWO_CROSSINGS)
    if d.t == 3 and e.count(1) == 2:
        return Verdict(True, Tricolumnar(max(e)), ONE_BIG_TWO_ONES)
    if d.cyclic_class() == (2, 2, 2):
        return Verdict(True, Z5_12(), GOLDEN_TRIPLE)
    tag = _blocking_tag(e)
    if tag is None:  # pragma: no cover - the patterns above are exhaustive
        raise NotRealizable(f"no blocking pattern found for {d}")
    return Verdict(False, None, tag)


def witness_sequence(d):
    """Sweep of the witness configuration for a realizable signature."""
    verdict = classify(d)
    if not verdict.realizable:
        raise NotRealizable(f"{as_signature(d)} is not realizable ({verdict.tag})")
    return sweep(verdict.witness)


def verify_witness(d):
    """Return the equivalence witness between the witness sweep and the
    constructed sequence, or None if they differ."""
    seq = witness_sequence(d)
    target = dc_closed_form(d)
    if seq.n_points != target.n_points:
        return None
    return equivalent(seq, target)
