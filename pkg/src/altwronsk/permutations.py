"""Permutations in one-line notation and the contributing-set generators.

A permutation of N symbols is a tuple of the integers 0..N-1: entry i is the
0-based value at position i+1. Text I/O uses the 1-based one-line convention,
e.g. "(1,3,2,4)" for the tuple (0, 2, 1, 3); see ``parse_permutation`` and
``format_permutation``. In operator work the 0-based value at a position is
exactly the degree of the monomial weight placed there, which is why the
0-based form is the internal one.

For even N = 2p, the "contributing" permutations are those whose weighted
derivative-operator term survives: sigma(1) = 1 and every suffix partial sum
T_k = sum over the last k entries of (value - p) stays non-negative (the
running exponent of x never dips below zero during the right-to-left operator
applications). ``enumerate_filtered`` realises the definition by filtering
all of S_N; ``enumerate_backtracking`` builds the same set incrementally,
pruning any branch whose running sum would go negative.
"""

from __future__ import annotations

import itertools
import math
import os
from typing import Iterator, Sequence

# enumerate_filtered walks all N! permutations; beyond this N it refuses.
DEFAULT_FILTER_CAP = 16
FILTER_CAP_ENV = "ALTWRONSK_V1_MAX_N"

# count_late_growing brute-forces n!; beyond this n it refuses.
LATE_GROWING_CAP = 10


def is_permutation(word: Sequence[int]) -> bool:
    """True iff word is a permutation of 0..len(word)-1."""
    return sorted(word) == list(range(len(word)))


def sign(perm: Sequence[int]) -> int:
    """The sign (-1)**inversions of a permutation; +1 or -1.

    O(n^2) inversion count, fine for the small n used here. Agrees with the
    parity of any decomposition into transpositions.
    """
    n = len(perm)
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
    )
    return -1 if inversions & 1 else 1


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse 1-based one-line text like "(1,3,2,4)" (parentheses optional)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        values = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation text: {text!r}") from None
    perm = tuple(v - 1 for v in values)
    if not is_permutation(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {text!r}")
    return perm


def format_permutation(perm: Sequence[int]) -> str:
    """Render in the 1-based one-line convention, e.g. "(1,3,2,4)"."""
    return "(" + ",".join(str(v + 1) for v in perm) + ")"


def _require_length(perm: Sequence[int], p: int) -> int:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    n = 2 * p
    if len(perm) != n:
        raise ValueError(f"permutation has length {len(perm)}, expected 2p = {n}")
    return n


def suffix_partial_sums(perm: Sequence[int], p: int) -> tuple[int, ...]:
    """The running sums (T_1, ..., T_{N-1}) over the reversed suffix.

    T_k adds up (value - p) over the last k entries; the term of a
    permutation survives iff sigma(1) = 1 and every T_k >= 0. Returned in
    full (no short-circuit) so it doubles as a debugging aid;
    ``is_contributing`` is the short-circuiting check.
    """
    _require_length(perm, p)
    sums = []
    acc = 0
    for v in perm[:0:-1]:  # last entry first, down to position 2
        acc += v - p
        sums.append(acc)
    return tuple(sums)


def is_contributing(perm: Sequence[int], p: int) -> bool:
    """True iff the permutation's operator term survives (is in Phi_p)."""
    _require_length(perm, p)
    if perm[0] != 0:
        return False
    acc = 0
    for v in perm[:0:-1]:
        acc += v - p
        if acc < 0:
            return False
    return True


def enumerate_filtered(p: int, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """All contributing permutations for N = 2p by filtering S_N.

    Reference path: walks every one of the N! permutations in lexicographic
    order and keeps the contributing ones. Refuses N beyond ``max_n``
    (default from the environment variable ALTWRONSK_V1_MAX_N, else 16);
    the backtracking generator has no such cap.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    n = 2 * p
    if max_n is None:
        max_n = int(os.environ.get(FILTER_CAP_ENV, DEFAULT_FILTER_CAP))
    if n > max_n:
        raise ValueError(
            f"N = {n} exceeds the exhaustive-filter cap {max_n} "
            f"({math.factorial(n)} permutations); use enumerate_backtracking"
        )
    for perm in itertools.permutations(range(n)):
        if is_contributing(perm, p):
            yield perm


def enumerate_backtracking_signed(
    p: int, counter: list[int] | None = None
) -> Iterator[tuple[tuple[int, ...], int]]:
    """(permutation, sign) pairs for the contributing set, built by pruning.

    Position 1 is pinned to the smallest value; the remaining positions are
    filled right to left, trying candidates in increasing order, and a
    branch is abandoned as soon as the running sum of (value - p) over the
    placed suffix would go negative. The sign is accumulated incrementally:
    placing value v with rank ``idx`` among the remaining candidates creates
    exactly (v - 1 - idx) inversions with the already-placed suffix.

    ``counter``, when given, has its first element incremented once per
    candidate placement attempted (pruned or not) - instrumentation for
    benchmarking.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    n = 2 * p
    pool = list(range(1, n))
    chosen: list[int] = []  # rightmost position first

    def walk(t: int, parity: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if not pool:
            yield (0, *reversed(chosen)), (-1 if parity else 1)
            return
        for idx in range(len(pool)):
            v = pool[idx]
            if counter is not None:
                counter[0] += 1
            t2 = t + v - p
            if t2 < 0:
                continue
            pool.pop(idx)
            chosen.append(v)
            yield from walk(t2, parity ^ ((v - 1 - idx) & 1))
            chosen.pop()
            pool.insert(idx, v)

    yield from walk(0, 0)


def enumerate_backtracking(p: int) -> Iterator[tuple[int, ...]]:
    """The contributing set for N = 2p, streamed without touching all of S_N.

    Emits the same set as ``enumerate_filtered`` (in a different, but
    deterministic, order) and has no size cap.
    """
    for perm, _ in enumerate_backtracking_signed(p):
        yield perm


def is_late_growing(perm: Sequence[int]) -> bool:
    """True iff every proper-prefix mean of the 1-based values is <= n/2.

    Compared in integers: 2 * prefix_sum <= k * n for every prefix length
    k < n (the full prefix always exceeds the bound, so it is excluded).
    For even n these permutations are the reverse-complement images of the
    contributing ones, which is why the counts agree.
    """
    n = len(perm)
    acc = 0
    for k in range(1, n):
        acc += perm[k - 1] + 1  # 1-based value
        if 2 * acc > k * n:
            return False
    return True


def count_late_growing(n: int, max_n: int = LATE_GROWING_CAP) -> int:
    """Number of late-growing permutations of n symbols, by brute force."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ValueError(
            f"n = {n} needs {math.factorial(n)} permutations; cap is {max_n}"
        )
    return sum(
        1 for perm in itertools.permutations(range(n)) if is_late_growing(perm)
    )
