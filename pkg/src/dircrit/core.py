"""Allowable sequences: validation, central symmetry, signatures, point paths,
induced subsequences and combinatorial equivalence.

A halfperiod is stored as its permutations ``pi_0 .. pi_h``; everything
outside that window follows from ``pi_{m+h} = reversed(pi_m)``.  Labels are
nonzero integers, and for centrally symmetric sequences the conjugate of
``p`` is written ``-p``.

Move blocks are 0-based inclusive position intervals ``(start, end)`` of the
predecessor permutation.  Move ``m`` (0-based) turns ``pi_m`` into
``pi_{m+1}``.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    DegenerateSignature,
    FormatError,
    InvalidSignature,
    LastNotReversalOfFirst,
    NoCrossingSwitch,
    NonPermutationRow,
    NotBlockReversal,
    NotCentrallySymmetric,
    OddPointCount,
    OffsetMismatch,
    PairSwitchedTwice,
    SizeMismatch,
    TooFewLabels,
    UnknownLabel,
)


def _pair(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class HalfPeriod:
    """A validated halfperiod.  Build it with :func:`validate`."""

    perms: tuple
    moves: tuple

    @property
    def n_points(self):
        return len(self.perms[0])

    @property
    def h(self):
        return len(self.perms) - 1

    @property
    def labels(self):
        return frozenset(self.perms[0])

    @cached_property
    def positions(self):
        """``positions[m][label]`` is the 0-based position of label in pi_m."""
        return tuple({lab: i for i, lab in enumerate(p)} for p in self.perms)

    @cached_property
    def switch_move(self):
        """Map each unordered pair (sorted tuple) to the 0-based move switching it."""
        out = {}
        for m, blocks in enumerate(self.moves):
            prev = self.perms[m]
            for s, e in blocks:
                for a, b in combinations(prev[s:e + 1], 2):
                    out[_pair(a, b)] = m
        return out

    def perm(self, m):
        """Permutation ``pi_m`` for any integer ``m``, by periodicity."""
        q, r = divmod(m, self.h)
        p = self.perms[r]
        return p[::-1] if q % 2 else p

    def is_crossing_block(self, block):
        s, e = block
        return s + e == self.n_points - 1

    def __str__(self):
        return format_halfperiod(self)


def _blocks(prev, cur, move):
    """Decompose ``prev -> cur`` into disjoint reversed blocks.

    The block starting at the leftmost changed position ``a`` must end where
    ``cur[a]`` sat in ``prev``, so the decomposition is forced.
    """
    where = {lab: i for i, lab in enumerate(prev)}
    blocks = []
    a = 0
    n = len(prev)
    while a < n:
        if cur[a] == prev[a]:
            a += 1
            continue
        b = where[cur[a]]
        if b <= a or cur[a:b + 1] != prev[a:b + 1][::-1]:
            raise NotBlockReversal(
                f"move {move}: positions from {a + 1} are not a reversed block", move=move)
        blocks.append((a, b))
        a = b + 1
    if not blocks:
        raise NotBlockReversal(f"move {move}: permutation repeated (empty move)", move=move)
    return tuple(blocks)


def validate(rows):
    """Check the allowable-sequence axioms on a halfperiod given as rows.

    Raises the :class:`~dircrit.errors.ValidationError` subclass naming the
    first violated axiom; moves are scanned in order so the earliest bad
    move is reported.

    >>> validate([(1, 2), (2, 1)]).h
    1
    """
    rows = [tuple(r) for r in rows]
    if len(rows) < 2:
        raise NonPermutationRow("a halfperiod needs at least two permutations")
    first = rows[0]
    labels = set(first)
    if len(first) < 2 or len(labels) != len(first):
        raise NonPermutationRow("row 0 is not a permutation of at least two labels", move=0)
    for i, r in enumerate(rows):
        if len(r) != len(first) or set(r) != labels:
            raise NonPermutationRow(f"row {i} is not a permutation of the row-0 labels", move=i)

    switched = set()
    moves = []
    for i in range(1, len(rows)):
        prev = rows[i - 1]
        blocks = _blocks(prev, rows[i], i)
        for s, e in blocks:
            for a, b in combinations(prev[s:e + 1], 2):
                key = _pair(a, b)
                if key in switched:
                    raise PairSwitchedTwice(f"move {i}: pair {key} switched twice", move=i, pair=key)
                switched.add(key)
        moves.append(blocks)

    if rows[-1] != first[::-1]:
        raise LastNotReversalOfFirst("last permutation is not the reversal of the first")
    return HalfPeriod(perms=tuple(rows), moves=tuple(moves))


def relabel(seq, mapping):
    return validate([tuple(mapping[x] for x in p) for p in seq.perms])


def rotate(seq, start):
    """Halfperiod beginning at ``pi_start`` of the doubly infinite sequence."""
    return validate([seq.perm(start + j) for j in range(seq.h + 1)])


# -- central symmetry ---------------------------------------------------------

def is_centrally_symmetric(seq):
    """Return the conjugation map ``p -> pbar`` or None.

    Raises OddPointCount for an odd number of points.
    """
    N = seq.n_points
    if N % 2:
        raise OddPointCount(f"{N} points")
    p0 = seq.perms[0]
    conj = {}
    for i in range(N):
        conj[p0[i]] = p0[N - 1 - i]
    for p in seq.perms[1:]:
        for i in range(N // 2):
            if conj[p[i]] != p[N - 1 - i]:
                return None
    return conj


def conjugation(seq):
    conj = is_centrally_symmetric(seq)
    if conj is None:
        raise NotCentrallySymmetric("positions of some pair do not sum to N+1")
    return conj


def canonical(seq):
    """Relabel so pi_0 = (1..n, -n..-1) when centrally symmetric, else (1..N)."""
    p0 = seq.perms[0]
    N = seq.n_points
    symmetric = N % 2 == 0 and is_centrally_symmetric(seq) is not None
    if symmetric:
        n = N // 2
        mapping = {}
        for i in range(n):
            mapping[p0[i]] = i + 1
            mapping[p0[N - 1 - i]] = -(i + 1)
    else:
        mapping = {lab: i + 1 for i, lab in enumerate(p0)}
    return relabel(seq, mapping)


# -- signatures ---------------------------------------------------------------

@dataclass(frozen=True)
class CentralSignature:
    """Cyclic list of crossing half-sizes ``(d_1, ..., d_t)``."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(x < 1 for x in entries):
            raise InvalidSignature(f"entries must be positive: {entries}")
        if len(entries) == 1:
            raise DegenerateSignature(f"a signature needs t >= 2 entries: {entries}")
        if len(entries) < 2:
            raise InvalidSignature("empty signature")

    @property
    def t(self):
        return len(self.entries)

    @property
    def n(self):
        return sum(self.entries)

    @property
    def offsets(self):
        """Move index at which each crossing substring is reversed."""
        d = self.entries
        out = [0]
        for i in range(1, len(d)):
            out.append(out[-1] + d[i - 1] + d[i])
        return tuple(out)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def rotated(self, j):
        d = self.entries
        return CentralSignature(d[j:] + d[:j])

    def reflected(self):
        return CentralSignature(self.entries[::-1])

    def cyclic_class(self):
        """Lexicographically least rotation or reflection."""
        d = self.entries
        cands = []
        for seq in (d, d[::-1]):
            for j in range(len(seq)):
                cands.append(seq[j:] + seq[:j])
        return min(cands)

    def __str__(self):
        return ",".join(map(str, self.entries))


def as_signature(d):
    if isinstance(d, CentralSignature):
        return d
    if isinstance(d, str):
        try:
            d = [int(x) for x in d.replace(" ", "").split(",") if x]
        except ValueError as exc:
            raise InvalidSignature(f"cannot parse signature {d!r}") from exc
    return CentralSignature(tuple(d))


def crossing_moves(seq):
    """List of ``(move_index, block)`` for every crossing switch, in move order."""
    out = []
    for m, blocks in enumerate(seq.moves):
        for b in blocks:
            if seq.is_crossing_block(b):
                out.append((m, b))
    return out


def central_signature(seq):
    """Central signature read from the first crossing switch onward.

    For even-near-critical sequences the crossing moves are also checked
    against the offsets implied by the signature.
    """
    conjugation(seq)
    cross = crossing_moves(seq)
    if not cross:
        raise NoCrossingSwitch("no move reverses a centered block")
    entries = tuple((e - s + 1) // 2 for _, (s, e) in cross)
    sig = CentralSignature(entries)
    if is_even_near_critical(seq):
        first = cross[0][0]
        actual = tuple(m - first for m, _ in cross)
        if actual != sig.offsets:
            raise OffsetMismatch(f"crossing moves {actual} but signature predicts {sig.offsets}")
    return sig


def is_noncentral_general_position(seq):
    for blocks in seq.moves:
        for b in blocks:
            if not seq.is_crossing_block(b) and b[1] - b[0] != 1:
                return False
    return True


def is_even_near_critical(seq):
    return seq.h == 2 * (seq.n_points // 2)


# -- paths --------------------------------------------------------------------

def point_path(seq, p):
    """Word over C/P/R/L tracking label ``p`` across the halfperiod."""
    if p not in seq.labels:
        raise UnknownLabel(f"label {p} not in sequence")
    pos = seq.positions
    word = []
    for m, blocks in enumerate(seq.moves):
        x = pos[m][p]
        block = next((b for b in blocks if b[0] <= x <= b[1]), None)
        y = pos[m + 1][p]
        if block is not None and seq.is_crossing_block(block):
            word.append("C")
        elif y > x:
            word.append("R")
        elif y < x:
            word.append("L")
        else:
            word.append("P")
    return "".join(word)


def swap_rl(word):
    return word.translate(str.maketrans("RL", "LR"))


# -- induced subsequences -----------------------------------------------------

def induce(seq, keep):
    """Subsequence on the labels in ``keep``, repeated permutations removed."""
    keep = set(keep)
    unknown = keep - seq.labels
    if unknown:
        raise UnknownLabel(f"labels not in sequence: {sorted(unknown)}")
    if len(keep) < 2:
        raise TooFewLabels("need at least two labels")
    rows = []
    for p in seq.perms:
        r = tuple(x for x in p if x in keep)
        if not rows or rows[-1] != r:
            rows.append(r)
    return validate(rows)


# -- equivalence --------------------------------------------------------------

@dataclass(frozen=True)
class EquivWitness:
    """Relabeling plus period transformation carrying one sequence to another.

    Row ``m`` of the image is ``relabel(mirror(pi_{shift +/- m}))`` with the
    sign chosen by ``time_reversed``.
    """

    relabel: tuple  # sorted (source, target) pairs
    shift: int
    time_reversed: bool
    mirrored: bool

    def mapping(self):
        return dict(self.relabel)

    def __str__(self):
        pairs = " ".join(f"{a}->{b}" for a, b in self.relabel)
        return (f"shift={self.shift} time_reversed={int(self.time_reversed)} "
                f"mirrored={int(self.mirrored)} relabel: {pairs}")


def _transformed(seq, shift, time_reversed, mirrored, m):
    p = seq.perm(shift - m if time_reversed else shift + m)
    return p[::-1] if mirrored else p


def apply_witness(w, seq):
    """Rows ``0..h`` of ``seq`` after applying the witness transformation."""
    f = w.mapping()
    return tuple(
        tuple(f[x] for x in _transformed(seq, w.shift, w.time_reversed, w.mirrored, m))
        for m in range(seq.h + 1))


def equivalent(a, b, group="full"):
    """Find an :class:`EquivWitness` mapping ``a`` onto ``b``, or None.

    ``group="full"`` allows relabeling, cyclic shift, time reversal and
    mirroring; ``group="shift"`` restricts to relabeling and shift.
    """
    if a.n_points != b.n_points:
        raise SizeMismatch(f"{a.n_points} vs {b.n_points} points")
    if a.h != b.h:
        return None
    flags = [(False, False), (False, True), (True, False), (True, True)]
    if group == "shift":
        flags = flags[:1]
    for tr, mir in flags:
        for shift in range(2 * a.h):
            first = _transformed(a, shift, tr, mir, 0)
            f = dict(zip(first, b.perms[0]))
            if all(tuple(f[x] for x in _transformed(a, shift, tr, mir, m)) == b.perms[m]
                   for m in range(1, b.h + 1)):
                return EquivWitness(tuple(sorted(f.items())), shift, tr, mir)
    return None


# -- text format --------------------------------------------------------------

def format_halfperiod(seq, comments=()):
    lines = [f"# {c}" for c in comments]
    lines.append(f"N={seq.n_points} H={seq.h}")
    lines.extend(" ".join(str(x) for x in p) for p in seq.perms)
    return "\n".join(lines) + "\n"


def parse_halfperiod(text):
    """Parse the ``N=<int> H=<int>`` text format and validate it."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty halfperiod file")
    header = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    try:
        N, H = int(header["N"]), int(header["H"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    try:
        rows = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError("non-integer label") from exc
    if len(rows) != H + 1:
        raise FormatError(f"header says H={H} but found {len(rows)} rows")
    if any(len(r) != N for r in rows):
        raise FormatError(f"every row must have N={N} labels")
    return validate(rows)
