"""Structural facts every DC(d) must satisfy, phrased as checks.

Each function returns a list of human-readable failures (empty when the
property holds) so callers can aggregate them across many sequences.
"""
from itertools import combinations

from .constructor import dc_closed_form, substring_labels
from .core import (
    as_signature,
    canonical,
    central_signature,
    conjugation,
    crossing_moves,
    equivalent,
    induce,
    point_path,
    rotate,
)


def pair_switch_count(seq):
    """Every unordered pair switches exactly once per halfperiod."""
    counts = {}
    for m, blocks in enumerate(seq.moves):
        prev = seq.perms[m]
        for s, e in blocks:
            for a, b in combinations(prev[s:e + 1], 2):
                key = (min(a, b), max(a, b))
                counts[key] = counts.get(key, 0) + 1
    labels = sorted(seq.labels)
    fails = [f"pair {p} switched {counts.get(p, 0)} times"
             for p in combinations(labels, 2) if counts.get(p, 0) != 1]
    return fails


def conjugate_position_sums(seq):
    """Positions (1-based) of p and its conjugate add up to N + 1 in every row."""
    conj = conjugation(seq)
    N = seq.n_points
    fails = []
    for m, pos in enumerate(seq.positions):
        for p, q in conj.items():
            if pos[p] + pos[q] + 2 != N + 1:
                fails.append(f"row {m}: {p} and {q} at {pos[p] + 1}, {pos[q] + 1}")
    return fails


def path_letter_counts(seq, d):
    """Letter counts of each crossing point's path.

    Over the stored halfperiod a point of the ``i``-th crossing substring has
    one C, ``2 d_i - 1`` P and ``2 (n - d_i)`` R or L.  Read from the
    halfperiod starting at its own crossing move, R and L each appear
    ``n - d_i`` times.
    """
    sig = as_signature(d)
    n = sig.n
    labels = substring_labels(seq, sig)
    fails = []
    for (i, k), lab in labels.items():
        di = sig.entries[i - 1]
        w = point_path(seq, lab)
        if (w.count("C"), w.count("P"), w.count("R") + w.count("L")) != (1, 2 * di - 1, 2 * (n - di)):
            fails.append(f"s_{i}({k}): {w}")
        local = point_path(rotate(seq, sig.offsets[i - 1]), lab)
        if not local.startswith("C") or local.count("R") != n - di or local.count("L") != n - di:
            fails.append(f"s_{i}({k}) from its crossing: {local}")
    return fails


def extreme_positions(seq, d):
    """The ends of each crossing substring reach the first and last position.

    ``s_i(1)`` is last and its conjugate first in row ``delta_i + n`` of the
    periodic sequence.
    """
    sig = as_signature(d)
    n = sig.n
    labels = substring_labels(seq, sig)
    fails = []
    for i, delta in enumerate(sig.offsets, start=1):
        lab = labels[(i, 1)]
        row = seq.perm(delta + n)
        if row[-1] != lab or row[0] != -lab:
            fails.append(f"s_{i}(1) = {lab} not extreme in row {delta + n}: {row}")
    return fails


def induced_pair_criticality(seq, d):
    """Restricting to two cyclically consecutive crossing substrings gives the
    two-entry critical sequence of their sizes."""
    sig = as_signature(d)
    labels = substring_labels(seq, sig)
    fails = []
    t = sig.t
    for i in range(1, t + 1):
        j = i % t + 1
        keep = set()
        for (a, _), lab in labels.items():
            if a in (i, j):
                keep.update((lab, -lab))
        sub = induce(seq, keep)
        want = dc_closed_form((sig.entries[i - 1], sig.entries[j - 1]))
        if sub.n_points != want.n_points or equivalent(sub, want) is None:
            fails.append(f"substrings {i},{j}: induced h={sub.h} not equivalent to DC({want.n_points // 2})")
    return fails


def normalize(seq):
    """Rotate to the first crossing move and relabel canonically.

    Returns the normalized sequence and its signature, so sweeps of witness
    configurations can be fed to the checks above.
    """
    first = crossing_moves(seq)[0][0]
    out = canonical(rotate(seq, first))
    return out, central_signature(out)


def all_invariants(seq, d):
    """Concatenated failures of every check in this module."""
    return (pair_switch_count(seq) + conjugate_position_sums(seq) + path_letter_counts(seq, d)
            + extreme_positions(seq, d) + induced_pair_criticality(seq, d))
