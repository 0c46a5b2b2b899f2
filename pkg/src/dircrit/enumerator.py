"""Exhaustive search for centrally symmetric even-near-critical sequences.

Starting from ``pi_0 = (1..n, -n..-1)`` the search tries every move that is
a mirror-symmetric set of disjoint adjacent transpositions, optionally
together with one centered block whose half-size is the next unused entry of
the signature.  The first move must contain the first crossing switch.  A
pair counts as switched exactly when it is inverted relative to ``pi_0``,
so no pair can switch twice.  A branch is cut as soon as some point has
more unswitched partners than the remaining moves can still reach.

Found sequences are grouped into combinatorial equivalence classes, both
under the full group and under relabeling plus shift only.
"""
from dataclasses import dataclass, field

from .core import (
    as_signature,
    central_signature,
    conjugation,
    equivalent,
    is_even_near_critical,
    is_noncentral_general_position,
    validate,
)
from .errors import BudgetExceeded, InternalInconsistency

DEFAULT_NODE_LIMIT = 10 ** 7


@dataclass
class EnumerationResult:
    signature: object
    sequences: list            # every sequence found, in traversal order
    classes: list              # one representative per full-group class
    shift_classes: list        # one representative per shift-only class
    nodes: int = 0
    stats: dict = field(default_factory=dict)

    def summary(self):
        return (f"signature {self.signature}: {len(self.sequences)} sequences, "
                f"{len(self.classes)} classes (full group), "
                f"{len(self.shift_classes)} classes (shift only), {self.nodes} nodes")


def _transposition_sets(cands):
    """All subsets of pairwise disjoint adjacent transpositions (by left index)."""
    out = [()]

    def rec(i, chosen):
        for j in range(i, len(cands)):
            c = cands[j]
            if chosen and c <= chosen[-1] + 1:
                continue
            nxt = chosen + (c,)
            out.append(nxt)
            rec(j + 1, nxt)

    rec(0, ())
    return out


def _dedupe(seqs, group):
    reps = []
    for s in seqs:
        if not any(equivalent(s, r, group=group) is not None for r in reps):
            reps.append(s)
    return reps


def enumerate_dc(d, node_limit=DEFAULT_NODE_LIMIT):
    """Every even-near-critical centrally symmetric sequence in noncentral
    general position whose crossings occur in the order of ``d`` from move 0."""
    d = as_signature(d)
    n = d.n
    N = 2 * n
    H = N
    sizes = d.entries
    start = tuple(range(1, n + 1)) + tuple(-k for k in range(n, 0, -1))
    rank = {lab: i for i, lab in enumerate(start)}

    def switched(a, b):
        # a sits left of b in the current permutation
        return rank[a] > rank[b]

    found = []
    dead = set()
    nodes = 0

    def unswitched_counts(perm):
        counts = {}
        for i in range(N):
            a = perm[i]
            c = 0
            for j in range(N):
                if i == j:
                    continue
                b = perm[j]
                left, right = (a, b) if i < j else (b, a)
                if not switched(left, right):
                    c += 1
            counts[a] = c
        return counts

    def feasible(perm, crossed, used, remaining):
        if remaining < len(sizes) - used:
            return False
        big = max(sizes[used:], default=0)
        for p, u in unswitched_counts(perm).items():
            if p in crossed:
                if u > remaining:
                    return False
            elif u > (remaining - 1) + (2 * big - 1) or remaining == 0:
                return False
        return True

    def apply(perm, blocks):
        out = list(perm)
        for s, e in blocks:
            out[s:e + 1] = out[s:e + 1][::-1]
        return tuple(out)

    def moves(perm, used, depth):
        # candidate non-central transpositions, by left index in the left half
        left = [i for i in range(n - 1) if not switched(perm[i], perm[i + 1])]
        central = []
        if used < len(sizes):
            k = sizes[used]
            s, e = n - k, n + k - 1
            block = perm[s:e + 1]
            if all(not switched(block[x], block[y])
                   for x in range(len(block)) for y in range(x + 1, len(block))):
                central.append((s, e))
        options = []
        for cb in ([None] + central if depth > 0 else central):
            lo = cb[0] if cb else n
            cands = [i for i in left if i + 1 < lo]
            for ts in _transposition_sets(cands):
                if not ts and cb is None:
                    continue
                blocks = []
                for i in ts:
                    blocks.append((i, i + 1))
                    blocks.append((N - 2 - i, N - 1 - i))
                if cb:
                    blocks.append(cb)
                options.append((tuple(sorted(blocks)), cb is not None))
        options.sort()
        return options

    def dfs(rows, crossed, used):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"more than {node_limit} search nodes for {d}")
        perm = rows[-1]
        depth = len(rows) - 1
        remaining = H - depth
        if remaining == 0:
            if used == len(sizes) and perm == start[::-1]:
                found.append(tuple(rows))
                return True
            return False
        key = (perm, used, depth)
        if key in dead:
            return False
        if not feasible(perm, crossed, used, remaining):
            dead.add(key)
            return False
        any_found = False
        for blocks, is_cross in moves(perm, used, depth):
            nxt = apply(perm, blocks)
            new_crossed = crossed
            if is_cross:
                s, e = blocks[[b[0] + b[1] for b in blocks].index(N - 1)]
                new_crossed = crossed | frozenset(perm[s:e + 1])
            rows.append(nxt)
            if dfs(rows, new_crossed, used + (1 if is_cross else 0)):
                any_found = True
            rows.pop()
        if not any_found:
            dead.add(key)
        return any_found

    dfs([start], frozenset(), 0)

    seqs = []
    for rows in found:
        seq = validate(rows)
        conjugation(seq)
        if not (is_even_near_critical(seq) and is_noncentral_general_position(seq)
                and central_signature(seq) == d):
            raise InternalInconsistency(f"search emitted an invalid sequence for {d}")
        seqs.append(seq)
    return EnumerationResult(
        signature=d,
        sequences=seqs,
        classes=_dedupe(seqs, "full"),
        shift_classes=_dedupe(seqs, "shift"),
        nodes=nodes,
    )
