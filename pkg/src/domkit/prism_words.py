"""Cyclic column words for prism dominating sets.

Column ``i`` of the prism holds ``t_i`` (top) and ``b_i`` (bottom); a vertex
set is recorded as one letter per column:

    C = 00 (empty), A = 10 (top only), B = 01 (bottom only), D = 11 (both)

Words are plain strings over ``"CABD"``, index 0 first, read cyclically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph_core import VertexSet

Word = str

LETTERS = "CABD"  # enumeration order C < A < B < D


class Letter(enum.Enum):
    C = (0, 0)
    A = (1, 0)
    B = (0, 1)
    D = (1, 1)

    @property
    def top(self) -> int:
        return self.value[0]

    @property
    def bottom(self) -> int:
        return self.value[1]

    @property
    def weight(self) -> int:
        return self.top + self.bottom


_TOP = {ch: Letter[ch].top for ch in LETTERS}
_BOT = {ch: Letter[ch].bottom for ch in LETTERS}
_WT = {ch: Letter[ch].weight for ch in LETTERS}
_FROM_BITS = {(Letter[ch].top, Letter[ch].bottom): ch for ch in LETTERS}


def _check_word(w: Word) -> None:
    if len(w) < 3:
        raise ValueError(f"words need length >= 3, got {len(w)}")
    bad = set(w) - set(LETTERS)
    if bad:
        raise ValueError(f"invalid letters {sorted(bad)} in word {w!r}")


def encode(s: VertexSet, n: int) -> Word:
    """Word for the vertex set ``s`` of ``prism:n`` (``t_i -> i``, ``b_i -> n+i``)."""
    if n < 3:
        raise ValueError("prism parameter must be >= 3")
    if s >> (2 * n):
        raise ValueError(f"vertex set has vertices outside prism:{n}")
    return "".join(_FROM_BITS[(s >> i) & 1, (s >> (n + i)) & 1] for i in range(n))


def decode(w: Word) -> VertexSet:
    _check_word(w)
    n = len(w)
    s = 0
    for i, ch in enumerate(w):
        if _TOP[ch]:
            s |= 1 << i
        if _BOT[ch]:
            s |= 1 << (n + i)
    return s


def weight(w: Word) -> int:
    return w.count("A") + w.count("B") + 2 * w.count("D")


def _local_ok(prev: str, cur: str, nxt: str) -> bool:
    if _TOP[cur] or _BOT[cur]:
        return True
    return bool(_TOP[prev] or _TOP[nxt]) and bool(_BOT[prev] or _BOT[nxt])


# _OK[(prev, cur, nxt)]: both row constraints hold at the middle column
_OK = {
    (a, b, c): _local_ok(a, b, c) for a in LETTERS for b in LETTERS for c in LETTERS
}


def satisfies_constraints(w: Word) -> bool:
    """Check the top-row and bottom-row domination constraints at every index.

    At index ``i`` the top vertex needs a selected vertex among ``t_i``,
    ``b_i``, ``t_{i-1}``, ``t_{i+1}``, and symmetrically for the bottom row.
    """
    _check_word(w)
    n = len(w)
    return all(_OK[w[i - 1], w[i], w[(i + 1) % n]] for i in range(n))


def rotate(w: Word, k: int) -> Word:
    """Cyclic shift with ``rotate(w, k)[i] == w[(i + k) % n]``."""
    k %= len(w)
    return w[k:] + w[:k]


# ---------------------------------------------------------------------------
# Minimum-weight words by dynamic programming over adjacent-letter pairs.

_PAIRS = [(a, b) for a in LETTERS for b in LETTERS]


def _forward(root: tuple[str, str], n: int) -> dict[tuple[str, str], tuple[int, int]]:
    """Min weight and its multiplicity for each final pair, rooted at ``root``.

    State after placing ``w_0..w_i`` is ``(w_{i-1}, w_i)``; appending ``w_{i+1}``
    checks the constraint at ``i``.  Only the minimum weight per state is kept:
    heavier prefixes reaching the same state extend identically and can never
    end at the global minimum.
    """
    a, b = root
    states = {root: (_WT[a] + _WT[b], 1)}
    for _ in range(n - 2):
        nxt: dict[tuple[str, str], tuple[int, int]] = {}
        for (p, q), (wt, cnt) in states.items():
            for r in LETTERS:
                if not _OK[p, q, r]:
                    continue
                key = (q, r)
                cand = wt + _WT[r]
                old = nxt.get(key)
                if old is None or cand < old[0]:
                    nxt[key] = (cand, cnt)
                elif cand == old[0]:
                    nxt[key] = (cand, old[1] + cnt)
        states = nxt
    return states


def _closes(root: tuple[str, str], last: tuple[str, str]) -> bool:
    w0, w1 = root
    y, z = last  # w_{n-2}, w_{n-1}
    return _OK[y, z, w0] and _OK[z, w0, w1]


def count_min_words(n: int) -> tuple[int, int]:
    """Return ``(gamma, zeta)`` of ``prism:n`` from the word model."""
    if n < 3:
        raise ValueError("prism parameter must be >= 3")
    best: Optional[int] = None
    total = 0
    for root in _PAIRS:
        for last, (wt, cnt) in _forward(root, n).items():
            if not _closes(root, last):
                continue
            if best is None or wt < best:
                best, total = wt, cnt
            elif wt == best:
                total += cnt
    assert best is not None
    return best, total


def _completion_costs(root: tuple[str, str], n: int) -> list[dict[tuple[str, str], int]]:
    """``cost[i][(w_{i-1}, w_i)]``: least weight of ``w_{i+1}..w_{n-1}`` closing the cycle."""
    inf = float("inf")
    cost: list[dict[tuple[str, str], int]] = [dict() for _ in range(n)]
    cost[n - 1] = {pair: (0 if _closes(root, pair) else inf) for pair in _PAIRS}
    for i in range(n - 2, 0, -1):
        later = cost[i + 1]
        cur = {}
        for p, q in _PAIRS:
            best = inf
            for r in LETTERS:
                if _OK[p, q, r]:
                    c = _WT[r] + later[q, r]
                    if c < best:
                        best = c
            cur[p, q] = best
        cost[i] = cur
    return cost


def enumerate_min_words(n: int) -> list[Word]:
    """All minimum-weight dominating words of length ``n``, lexicographic in C<A<B<D."""
    gamma, _ = count_min_words(n)
    out: list[Word] = []
    for root in _PAIRS:
        base = _WT[root[0]] + _WT[root[1]]
        cost = _completion_costs(root, n)
        if base + cost[1][root] != gamma:
            continue
        prefix = list(root)

        def walk(i: int, acc: int) -> None:
            # prefix holds w_0..w_i
            if i == n - 1:
                out.append("".join(prefix))
                return
            p, q = prefix[i - 1], prefix[i]
            for r in LETTERS:
                if not _OK[p, q, r]:
                    continue
                nacc = acc + _WT[r]
                if nacc + cost[i + 1][q, r] == gamma:
                    prefix.append(r)
                    walk(i + 1, nacc)
                    prefix.pop()

        walk(1, base)
    return out


# ---------------------------------------------------------------------------
# Gap structure of D-free words.


@dataclass(frozen=True)
class GapProfile:
    c_positions: tuple[int, ...]
    gap_sizes: tuple[int, ...]
    # gap_letters[k] is the run of singletons following c_positions[k]
    gap_letters: tuple[str, ...]


def gap_profile(w: Word) -> GapProfile:
    _check_word(w)
    if "D" in w:
        raise ValueError("gap profile is only defined for D-free words")
    cs = tuple(i for i, ch in enumerate(w) if ch == "C")
    if not cs:
        raise ValueError("gap profile needs at least one C")
    n = len(w)
    runs = []
    for k, c in enumerate(cs):
        nxt = cs[(k + 1) % len(cs)]
        length = (nxt - c - 1) % n if len(cs) > 1 else n - 1
        runs.append("".join(w[(c + 1 + d) % n] for d in range(length)))
    return GapProfile(cs, tuple(len(r) for r in runs), tuple(runs))


def end_set(w: Word) -> frozenset[int]:
    """Indices ``j`` with ``(w[j-4], w[j-3], w[j-2], w[j-1]) == (C, e, e, C)``, ``e`` in {A, B}."""
    _check_word(w)
    n = len(w)
    ends = set()
    for j in range(n):
        window = "".join(w[(j - d) % n] for d in (4, 3, 2, 1))
        if window in ("CAAC", "CBBC"):
            ends.add(j)
    return frozenset(ends)


def _swap_ab(w: Word) -> Word:
    return w.translate(str.maketrans("AB", "BA"))


def _stabilizer_trivial(w: Word) -> bool:
    return all(rotate(w, k) != w for k in range(1, len(w)))


# ---------------------------------------------------------------------------
# Structural rule validation.


@dataclass
class StructureReport:
    n: int
    zeta: int
    # check name -> True (pass), False (fail) or None (not applicable)
    checks: dict[str, Optional[bool]] = field(default_factory=dict)
    counterexamples: dict[str, str] = field(default_factory=dict)
    anchored_count: Optional[int] = None
    # size-2 gap letter pairs seen across all D-free minimum words
    gap_pair_counts: dict[str, int] = field(default_factory=dict)
    d_word_count: int = 0

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]

    def record(self, name: str, applicable: bool, words: Iterable[Word], predicate) -> None:
        if not applicable:
            self.checks[name] = None
            return
        for w in words:
            if not predicate(w):
                self.checks[name] = False
                self.counterexamples[name] = w
                return
        self.checks[name] = True

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "zeta": self.zeta,
            "passed": self.passed,
            "checks": dict(self.checks),
            "counterexamples": dict(self.counterexamples),
            "anchored_count": self.anchored_count,
            "d_word_count": self.d_word_count,
            "gap_pair_counts": dict(sorted(self.gap_pair_counts.items())),
        }


def cc_forces_doubles(w: Word) -> bool:
    """Every ``CC`` factor sits between two ``D`` letters."""
    n = len(w)
    for i in range(n):
        if w[i] == "C" and w[(i + 1) % n] == "C":
            if w[i - 1] != "D" or w[(i + 2) % n] != "D":
                return False
    return True


def c_neighbors_complementary(w: Word) -> bool:
    """Each ``C`` has neighbours covering both rows, and they are ``{A, B}`` unless one is ``D``."""
    n = len(w)
    for i in range(n):
        if w[i] != "C":
            continue
        p, q = w[i - 1], w[(i + 1) % n]
        if not (_TOP[p] or _TOP[q]) or not (_BOT[p] or _BOT[q]):
            return False
        if "D" not in (p, q) and {p, q} != {"A", "B"}:
            return False
    return True


def _size2_runs(w: Word) -> Optional[list[str]]:
    if "D" in w or "C" not in w:
        return None
    return [r for r in gap_profile(w).gap_letters if len(r) == 2]


def _only_small_gaps(w: Word) -> bool:
    return all(len(r) in (1, 2) for r in gap_profile(w).gap_letters)


def _odd_shape(w: Word) -> bool:
    twos = _size2_runs(w)
    return (
        twos is not None
        and len(twos) == 1
        and twos[0] in ("AA", "BB")
        and _only_small_gaps(w)
    )


def _mod2_gaps(w: Word) -> bool:
    twos = _size2_runs(w)
    return (
        twos is not None
        and len(twos) == 2
        and all(r in ("AA", "BB") for r in twos)
        and _only_small_gaps(w)
    )


def _backbone_after_gaps(w: Word) -> bool:
    # The segment starts at the closing C of each (C, e, e, C) window and
    # must read (CACB)^t or its row swap.
    n = len(w)
    t = (n - 2) // 4
    backbones = {"CACB" * t, "CBCA" * t}
    ends = end_set(w)
    if not ends:
        return False
    for j in ends:
        seg = "".join(w[(j - 1 + d) % n] for d in range(4 * t))
        if seg not in backbones:
            return False
    return True


def _stabilizer_trivial(w: Word) -> bool:
    return all(rotate(w, k) != w for k in range(1, len(w)))


def _orbit_ok(w: Word, pool: set[Word]) -> bool:
    orbit = {rotate(w, k) for k in range(len(w))}
    anchored = sum(1 for x in orbit if 0 in end_set(x))
    return len(orbit) == len(w) and orbit <= pool and anchored == 2


def mod0_words(n: int) -> set[Word]:
    """Rotations of ``(BCAC)^k`` and ``(ACBC)^k`` for ``n = 4k``."""
    k = n // 4
    return {rotate(base * k, r) for base in ("BCAC", "ACBC") for r in range(4)}


def check_structure(n: int, words: Optional[list[Word]] = None) -> StructureReport:
    """Validate the forcing and classification rules over all minimum words of length ``n``.

    Failures are recorded with a concrete counterexample, never raised.
    """
    if n < 3:
        raise ValueError("prism parameter must be >= 3")
    if words is None:
        words = enumerate_min_words(n)
    rep = StructureReport(n=n, zeta=len(words))
    rep.d_word_count = sum(1 for w in words if "D" in w)
    for w in words:
        for r in _size2_runs(w) or ():
            rep.gap_pair_counts[r] = rep.gap_pair_counts.get(r, 0) + 1

    odd = n % 2 == 1
    mod2 = n % 4 == 2 and n >= 10

    # n = 6 is one of the two exceptional sizes settled by enumeration alone
    rep.record("no_d", n >= 4 and n != 6, words, lambda w: "D" not in w)
    rep.record("cc_forces_d", True, words, cc_forces_doubles)
    rep.record("c_complementary_neighbors", n >= 4, words, c_neighbors_complementary)

    if n % 4 == 0:
        expected = mod0_words(n)
        stray = [w for w in words if w not in expected]
        missing = sorted(expected - set(words))
        ok = not stray and not missing and len(words) == 4
        rep.checks["mod0_classification"] = ok
        if not ok:
            rep.counterexamples["mod0_classification"] = (stray or missing)[0]
    else:
        rep.checks["mod0_classification"] = None

    rep.record("odd_single_mono_gap", odd and n >= 5, words, _odd_shape)
    rep.record("mod2_two_mono_gaps", mod2, words, _mod2_gaps)
    rep.record("mod2_end_size", mod2, words, lambda w: len(end_set(w)) == 2)
    rep.record("mod2_backbone", mod2, words, _backbone_after_gaps)
    rep.record("mod2_trivial_stabilizer", mod2, words, _stabilizer_trivial)
    if mod2:
        pool = set(words)
        rep.record("mod2_orbits", True, words, lambda w: _orbit_ok(w, pool))
        rep.anchored_count = sum(1 for w in words if 0 in end_set(w))
        ok = rep.anchored_count == 2 * (n + 2)
        rep.checks["mod2_anchored_count"] = ok
        if not ok:
            rep.counterexamples["mod2_anchored_count"] = (
                f"anchored_count={rep.anchored_count}, expected {2 * (n + 2)}"
            )
    else:
        rep.checks["mod2_orbits"] = None
        rep.checks["mod2_anchored_count"] = None
    return rep
