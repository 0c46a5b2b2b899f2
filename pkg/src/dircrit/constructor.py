"""Two independent builders for DC(d) and the verifiers that cross-check them.

``dc_closed_form`` places every point directly from the piecewise position
formula.  ``dc_inductive`` grows the sequence one conjugate pair at a time,
starting from the regular-polygon sequence.  Both return the canonical
labeling, with pi_0 = (1..n, -n..-1) and the first crossing switch in move 0.
"""
from dataclasses import dataclass, field

from .core import (
    as_signature,
    canonical,
    conjugation,
    crossing_moves,
    is_even_near_critical,
    is_noncentral_general_position,
    point_path,
    rotate,
    validate,
)
from .errors import (
    DirCritError,
    InternalInconsistency,
    PreconditionViolated,
    ValidationError,
)

CORRECTED = "corrected"
PRINTED = "printed"


def _descent_level(n, d, k, variant):
    # position of s_i(k) on the left-moving stretch, as a function of j
    if variant == PRINTED:
        return lambda j: 3 * n - 2 * k + d + 2
    return lambda j: 3 * n + d - 2 * k + 2 - j


def crossing_frame_position(n, d, k, j, variant=CORRECTED, strict=True):
    """1-based position of ``s_i(k)`` in ``pi_{delta_i + j}`` for ``0 <= j <= 2n``.

    ``d`` is the half-size of the point's crossing substring.  The six cases
    overlap at their endpoints; with ``strict`` every applicable case must
    agree, otherwise InternalInconsistency is raised; without it the first
    applicable case wins.  ``variant="printed"``
    uses a constant on the left-moving stretch instead of the descending
    expression and is kept only to show that it breaks the construction.
    """
    descent = _descent_level(n, d, k, variant)
    cases = [
        (j == 0, lambda: n - d + k),
        (1 <= j <= k, lambda: n + d - k + 1),
        (k + 1 <= j <= k + n - d, lambda: n + d - 2 * k + j + 1),
        (k + n - d <= j <= n + d - k + 1, lambda: 2 * n - k + 1),
        (n + d - k + 1 <= j <= 2 * n - k + 1, lambda: descent(j)),
        (2 * n - k + 1 <= j <= 2 * n, lambda: n + d - k + 1),
    ]
    values = [f() for ok, f in cases if ok]
    if not values:
        raise InternalInconsistency(f"j={j} outside [0, {2 * n}]")
    if strict and len(set(values)) > 1:
        raise InternalInconsistency(
            f"position cases disagree for d={d}, k={k}, j={j}: {sorted(set(values))}")
    return values[0]


def position_table(d, variant=CORRECTED, strict=True):
    """Positions of every ``s_i(k)`` in ``pi_0 .. pi_2n``.

    Returns ``{(i, k): [pos_0, ..., pos_2n]}`` with 1-based i, k and positions.
    Before ``delta_i`` the position comes from the previous halfperiod,
    mirrored.
    """
    sig = as_signature(d)
    n = sig.n
    table = {}
    for i, (di, delta) in enumerate(zip(sig.entries, sig.offsets), start=1):
        for k in range(1, di + 1):
            row = []
            for m in range(2 * n + 1):
                if m >= delta:
                    row.append(crossing_frame_position(n, di, k, m - delta, variant, strict))
                else:
                    j = m + 2 * n - delta
                    row.append(2 * n + 1 - crossing_frame_position(n, di, k, j, variant, strict))
            table[(i, k)] = row
    return table


def crossing_labels(d):
    """Canonical label of each ``s_i(k)``: its position in pi_0, negated on the right half."""
    sig = as_signature(d)
    return _labels_from_table(position_table(sig), sig.n)


def _labels_from_table(table, n):
    return {key: (row[0] if row[0] <= n else -(2 * n + 1 - row[0]))
            for key, row in table.items()}


def dc_closed_form(d, variant=CORRECTED):
    """Assemble DC(d) from the closed-form positions."""
    sig = as_signature(d)
    n = sig.n
    table = position_table(sig, variant)
    labels = _labels_from_table(table, n)
    rows = []
    for m in range(2 * n + 1):
        perm = [None] * (2 * n)
        for key, row in table.items():
            p = row[m]
            for label, slot in ((labels[key], p), (-labels[key], 2 * n + 1 - p)):
                if not 1 <= slot <= 2 * n or perm[slot - 1] is not None:
                    raise InternalInconsistency(f"row {m}: slot {slot} clash for label {label}")
                perm[slot - 1] = label
        rows.append(tuple(perm))
    try:
        seq = validate(rows)
    except ValidationError as exc:
        raise InternalInconsistency(f"assembled rows are not allowable: {exc}") from exc
    if rows[0] != tuple(range(1, n + 1)) + tuple(range(-n, 0)):
        raise InternalInconsistency("pi_0 is not canonical")
    return seq


# -- inductive construction ---------------------------------------------------

def polygon_base(t):
    """DC(1,...,1) with t ones: odd-even transposition on 2t points.

    Moves alternate between the two perfect matchings of adjacent positions,
    starting with the one containing the central pair.
    """
    N = 2 * t
    perm = list(range(1, t + 1)) + list(range(-t, 0))
    rows = [tuple(perm)]
    for m in range(N):
        start = (t - 1) % 2 if m % 2 == 0 else t % 2
        for a in range(start, N - 1, 2):
            perm[a], perm[a + 1] = perm[a + 1], perm[a]
        rows.append(tuple(perm))
    return validate(rows)


def _insert_point(prev, d1):
    """Add one conjugate pair to the first crossing substring of ``prev``.

    ``prev`` is canonical DC with first entry ``d1``; the result has first
    entry ``d1 + 1``.  Rows follow the piecewise insertion rule: the new
    point's conjugate trails the conjugate of ``p = s_1(1)`` by one move on
    the way left and leads it on the way back.
    """
    n = prev.n_points // 2
    P = prev.perms
    pos = prev.positions
    p = n - d1 + 1
    pb = -p
    new, nb = n + 1, -(n + 1)

    def at(i, label):
        return pos[i][label] + 1

    halves = []
    for i in range(2 * n + 3):
        if i == 0:
            L = P[0][:p] + (new,) + P[0][p:n]
        elif i in (1, 2):
            L = P[i][:p] + (nb,) + P[i][p:n]
        elif 3 <= i <= p:
            L = P[i][:at(i, pb) + 1] + (nb,) + P[i - 1][at(i - 1, pb):n]
        elif p + 1 <= i <= p + 2 * d1:
            L = (pb, nb) + P[i - 1][1:n]
        elif p + 2 * d1 + 1 <= i <= 2 * n + 1:
            L = P[i - 2][:at(i - 2, pb) + 1] + (nb,) + P[i - 1][at(i - 1, pb):n]
        else:
            L = P[2 * n][:p] + (nb,) + P[2 * n][p:n]
        halves.append(L)
    rows = [L + tuple(-x for x in reversed(L)) for L in halves]
    try:
        return canonical(validate(rows))
    except ValidationError as exc:
        raise InternalInconsistency(f"insertion step produced an invalid sequence: {exc}") from exc


def _rotate_to_crossing(seq, index):
    """Rotate a canonical DC so its ``index``-th crossing (0-based) comes first."""
    m = crossing_moves(seq)[index][0]
    return canonical(rotate(seq, m))


def dc_inductive(d):
    """Build DC(d) by repeated point insertion from the all-ones base case."""
    sig = as_signature(d)
    entries = sig.entries
    if all(x == 1 for x in entries):
        return polygon_base(sig.t)
    if entries[0] == 1:
        j = next(i for i, x in enumerate(entries) if x >= 2)
        rotated = dc_inductive(entries[j:] + entries[:j])
        # entry 0 of the original sits at index t - j of the rotated signature
        return _rotate_to_crossing(rotated, sig.t - j)
    smaller = dc_inductive((entries[0] - 1,) + entries[1:])
    return _insert_point(smaller, entries[0] - 1)


# -- verifiers ----------------------------------------------------------------

@dataclass
class Report:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def __str__(self):
        head = f"{self.checked} checks, {len(self.mismatches)} mismatches"
        return "\n".join([head] + [f"  {m}" for m in self.mismatches[:20]])


def _runs(*parts):
    return "".join(letter * count for letter, count in parts)


def expected_path(n, d, delta, k, first=False):
    """Path of ``s_i(k)`` predicted from the crossing half-size ``d`` and offset ``delta``.

    ``first`` selects the form valid for the substring crossed in move 0;
    the three general cases assume the point is already at least ``k - 1``
    moves into its approach when the halfperiod starts.
    """
    if first:
        return _runs(("C", 1), ("P", k - 1), ("R", n - d), ("P", 2 * (d - k) + 1),
                     ("L", n - d), ("P", k - 1))
    if d - k < n - delta:
        parts = [("R", delta - k + 1), ("P", k - 1), ("C", 1), ("P", k - 1), ("R", n - d),
                 ("P", 2 * (d - k) + 1), ("L", n - d - delta + k - 1)]
    elif d - k >= abs(delta - n):
        parts = [("P", d - k + delta - n + 1), ("R", n - d), ("P", k - 1), ("C", 1),
                 ("P", k - 1), ("R", n - d), ("P", d - k - delta + n)]
    else:
        parts = [("L", delta - n - d + k), ("P", 2 * (d - k) + 1), ("R", n - d), ("P", k - 1),
                 ("C", 1), ("P", k - 1), ("R", 2 * n - delta - k)]
    if any(c < 0 for _, c in parts):
        raise PreconditionViolated(f"no path form applies to n={n} d={d} delta={delta} k={k}")
    return _runs(*parts)


def _check_preconditions(seq, d):
    sig = as_signature(d)
    try:
        conjugation(seq)
    except DirCritError as exc:
        raise PreconditionViolated(str(exc)) from exc
    if not is_even_near_critical(seq):
        raise PreconditionViolated(f"halfperiod {seq.h} is not 2n for {seq.n_points} points")
    if not is_noncentral_general_position(seq):
        raise PreconditionViolated("a non-crossing switch is not a transposition")
    if seq.n_points != 2 * sig.n:
        raise PreconditionViolated(f"{seq.n_points} points but signature sums to {sig.n}")
    cross = crossing_moves(seq)
    if not cross or cross[0][0] != 0:
        raise PreconditionViolated("the first move has no crossing switch")
    sizes = tuple((e - s + 1) // 2 for _, (s, e) in cross)
    if sizes != sig.entries:
        raise PreconditionViolated(f"sequence signature {sizes} differs from {sig.entries}")
    return sig, cross


def substring_labels(seq, d):
    """``{(i, k): label}`` read off the centered block of each crossing move."""
    sig, cross = _check_preconditions(seq, d)
    n = sig.n
    out = {}
    for i, (di, (m, _)) in enumerate(zip(sig.entries, cross), start=1):
        for k in range(1, di + 1):
            out[(i, k)] = seq.perms[m][n - di + k - 1]
    return out


def verify_paths(seq, d):
    """Compare every point path with the predicted letter pattern."""
    sig, _ = _check_preconditions(seq, d)
    labels = substring_labels(seq, sig)
    n = sig.n
    report = Report()
    for (i, k), label in labels.items():
        di, delta = sig.entries[i - 1], sig.offsets[i - 1]
        want = expected_path(n, di, delta, k, first=(i == 1))
        got = point_path(seq, label)
        report.checked += 1
        if got != want:
            report.mismatches.append(f"s_{i}({k}) = {label}: path {got}, expected {want}")
    return report


def table_path_mismatches(d, variant):
    """Path check run on a raw position table, no assembly required.

    Lets the printed variant of the descent case be checked even though it
    cannot be assembled into permutations.
    """
    sig = as_signature(d)
    n = sig.n
    table = position_table(sig, variant, strict=False)
    report = Report()
    for (i, k), row in table.items():
        di, delta = sig.entries[i - 1], sig.offsets[i - 1]
        word = []
        for m in range(2 * n):
            if m == delta:
                word.append("C")
            elif row[m + 1] - row[m] == 1:
                word.append("R")
            elif row[m + 1] - row[m] == -1:
                word.append("L")
            elif row[m + 1] == row[m]:
                word.append("P")
            else:
                word.append("?")
        got = "".join(word)
        want = expected_path(n, di, delta, k, first=(i == 1))
        report.checked += 1
        if got != want:
            report.mismatches.append(f"s_{i}({k}): path {got}, expected {want}")
    return report


def verify_move_coincidences(seq, d):
    """Check where crossing switches and cross-substring transpositions occur."""
    sig, cross = _check_preconditions(seq, d)
    labels = substring_labels(seq, sig)
    n = sig.n
    dd = sig.entries
    offsets = sig.offsets
    when = seq.switch_move
    report = Report()

    for i, (m, _) in enumerate(cross):
        report.checked += 1
        if m != offsets[i]:
            report.mismatches.append(f"crossing of s_{i + 1} at move {m}, expected {offsets[i]}")

    def check(a, b, expected, what):
        key = (a, b) if a < b else (b, a)
        report.checked += 1
        got = when.get(key)
        if got != expected:
            report.mismatches.append(f"{what} {key}: move {got}, expected {expected}")

    t = sig.t
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            for k in range(1, dd[i - 1] + 1):
                for l in range(1, dd[j - 1] + 1):
                    a, b = labels[(i, k)], labels[(j, l)]
                    mixed = (offsets[i - 1] + sum(dd[i:j]) + k - l) % (2 * n)
                    check(a, -b, mixed, f"s_{i}({k}) with conj s_{j}({l})")
                    check(-a, b, mixed, f"conj s_{i}({k}) with s_{j}({l})")
                    same = (n + offsets[i - 1] + sum(dd[i - 1:j - 1]) + l - k) % (2 * n)
                    check(a, b, same, f"s_{i}({k}) with s_{j}({l})")
                    check(-a, -b, same, f"conj s_{i}({k}) with conj s_{j}({l})")
    return report
