"""Sign matrices, their triple-product two-graphs, and relabeling orbits.

Indices are 1-based throughout.  A sign matrix stores the strictly upper
pairs whose coefficient is -1; everything else (including the diagonal)
is +1.  The derived invariant is the set of "bad" triples {i,j,k} whose
cyclic sign product is -1; such a triple set always forms a two-graph
(every 4-subset contains an even number of members).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

CANONICAL_N_LIMIT = 8


def _norm_pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SignMatrix:
    """Symmetric +/-1 coefficient table on n variables (diagonal fixed to +1)."""

    n: int
    neg_pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        for i, j in self.neg_pairs:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"pair ({i},{j}) out of range for n={self.n}")

    @classmethod
    def from_neg_pairs(cls, n: int, pairs) -> SignMatrix:
        return cls(n, frozenset(_norm_pair(i, j) for i, j in pairs))

    @classmethod
    def all_plus(cls, n: int) -> SignMatrix:
        return cls(n, frozenset())

    def eps(self, i: int, j: int) -> int:
        """Coefficient attached to the (i, j) pair; eps(i, i) = +1."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"index out of range for n={self.n}")
        if i == j:
            return 1
        return -1 if _norm_pair(i, j) in self.neg_pairs else 1

    def sorted_neg_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.neg_pairs))


def all_triples(n: int) -> list[tuple[int, int, int]]:
    """All 3-subsets of {1..n} in colexicographic order of sorted triples."""
    return sorted(combinations(range(1, n + 1), 3), key=lambda t: (t[2], t[1], t[0]))


def triple_rank(i: int, j: int, k: int) -> int:
    """Colex rank of the sorted triple i < j < k (0-based)."""
    return comb(k - 1, 3) + comb(j - 1, 2) + comb(i - 1, 1)


@dataclass(frozen=True)
class TripleSet:
    """A set of 3-subsets of {1..n}, normally the bad triples of a sign matrix."""

    n: int
    bad: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        for t in self.bad:
            if len(set(t)) != 3 or not all(1 <= x <= self.n for x in t):
                raise ValueError(f"invalid triple {t} for n={self.n}")
            if tuple(sorted(t)) != t:
                raise ValueError(f"triple {t} is not sorted")

    @classmethod
    def from_triples(cls, n: int, triples) -> TripleSet:
        return cls(n, frozenset(tuple(sorted(t)) for t in triples))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> TripleSet:
        trips = all_triples(n)
        return cls(n, frozenset(trips[r] for r in range(len(trips)) if (mask >> r) & 1))

    def mask(self) -> int:
        """Bitmask encoding: bit r set iff the colex-rank-r triple is bad."""
        out = 0
        for t in self.bad:
            out |= 1 << triple_rank(*t)
        return out

    def triples_sorted(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(self.bad, key=lambda t: triple_rank(*t)))

    def is_two_graph(self) -> bool:
        """Every 4-subset of {1..n} must contain an even number of bad triples."""
        for quad in combinations(range(1, self.n + 1), 4):
            inside = sum(1 for t in combinations(quad, 3) if t in self.bad)
            if inside % 2:
                return False
        return True


@dataclass(frozen=True)
class Permutation:
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"images {self.images} are not a bijection on 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(n, tuple(images))

    @classmethod
    def from_images(cls, n: int, images) -> Permutation:
        return cls(n, tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]


def bad_triples(s: SignMatrix) -> TripleSet:
    """Triples {i,j,k} with eps(i,j)*eps(j,k)*eps(k,i) = -1."""
    bad = frozenset(
        t
        for t in combinations(range(1, s.n + 1), 3)
        if s.eps(t[0], t[1]) * s.eps(t[1], t[2]) * s.eps(t[2], t[0]) == -1
    )
    return TripleSet(s.n, bad)


def realize_sign_matrix(t: TripleSet) -> SignMatrix:
    """Canonical sign matrix with the given bad triples.

    Gauge: eps(i, n) = +1 for all i < n, and eps(i, j) = -1 exactly when
    {i, j, n} is bad.  The two-graph parity forces every remaining triple
    to come out right; inputs violating parity are rejected.
    """
    if not t.is_two_graph():
        raise ValueError("triple set violates two-graph parity; not realizable")
    n = t.n
    neg = frozenset(
        (i, j)
        for i, j in combinations(range(1, n), 2)
        if tuple(sorted((i, j, n))) in t.bad
    )
    return SignMatrix(n, neg)


def apply_permutation(t: TripleSet, p: Permutation) -> TripleSet:
    """Relabel every triple through p."""
    if t.n != p.n:
        raise ValueError(f"dimension mismatch: triple set n={t.n}, permutation n={p.n}")
    return TripleSet(t.n, frozenset(tuple(sorted((p(a), p(b), p(c)))) for a, b, c in t.bad))


def canonical_form(t: TripleSet) -> TripleSet:
    """Orbit representative: least bitmask encoding over all relabelings.

    Exhaustive search over the full symmetric group; guarded because the
    cost is factorial in n.
    """
    if t.n > CANONICAL_N_LIMIT:
        raise ValueError(f"canonical_form supports n <= {CANONICAL_N_LIMIT}, got n={t.n}")
    best = None
    for images in permutations(range(1, t.n + 1)):
        mask = 0
        for a, b, c in t.bad:
            mask |= 1 << triple_rank(*sorted((images[a - 1], images[b - 1], images[c - 1])))
        if best is None or mask < best:
            best = mask
    return TripleSet.from_mask(t.n, best if best is not None else 0)


def canonical_set_system(n: int, sets) -> tuple[tuple[int, ...], ...]:
    """Least relabeling of a family of subsets of {1..n}, as sorted tuples.

    Used to compare component hypergraphs of point schemes up to relabeling.
    """
    if n > CANONICAL_N_LIMIT:
        raise ValueError(f"canonical_set_system supports n <= {CANONICAL_N_LIMIT}, got n={n}")
    family = [tuple(sorted(s)) for s in sets]
    best = None
    for images in permutations(range(1, n + 1)):
        relabeled = tuple(sorted(tuple(sorted(images[x - 1] for x in s)) for s in family))
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()
