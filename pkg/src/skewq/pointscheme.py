"""Irreducible decomposition of the vanishing locus cut out by bad triples.

The locus is an intersection of coordinate cubics, so its irreducible
components are coordinate subspaces: a component is recorded as the set
of allowed (possibly nonzero) indices, and the allowed sets are exactly
the complements of the minimal transversals of the bad-triple hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .signs import TripleSet, canonical_set_system

TRANSVERSAL_N_LIMIT = 16


@dataclass(frozen=True)
class PointScheme:
    """Antichain of allowed-index subsets of {1..n}, one per component."""

    n: int
    components: frozenset[frozenset[int]]

    def sorted_components(self) -> tuple[tuple[int, ...], ...]:
        """Components ordered by descending size, then lexicographically."""
        return tuple(
            sorted((tuple(sorted(c)) for c in self.components), key=lambda c: (-len(c), c))
        )

    def is_projective_space(self) -> bool:
        return self.components == frozenset({frozenset(range(1, self.n + 1))})


def minimal_transversals(t: TripleSet) -> frozenset[frozenset[int]]:
    """Inclusion-minimal subsets of {1..n} meeting every bad triple.

    Ascending-size exhaustive search over bitmasks; minimality of a hit
    set S is witnessed elementwise by a triple meeting S only in that
    element.  Returns {frozenset()} when there is nothing to hit.
    """
    n = t.n
    if n > TRANSVERSAL_N_LIMIT:
        raise ValueError(f"transversal search supports n <= {TRANSVERSAL_N_LIMIT}, got n={n}")
    edges = [sum(1 << (x - 1) for x in tr) for tr in t.triples_sorted()]
    if not edges:
        return frozenset({frozenset()})
    found: list[int] = []
    subsets_by_size: dict[int, list[int]] = {k: [] for k in range(n + 1)}
    for mask in range(1 << n):
        subsets_by_size[mask.bit_count()].append(mask)
    for size in range(n + 1):
        for mask in subsets_by_size[size]:
            if any(not (mask & e) for e in edges):
                continue
            # every element must be the sole hit of some triple
            if all(any((e & mask) == (1 << b) for e in edges) for b in range(n) if (mask >> b) & 1):
                found.append(mask)
    return frozenset(
        frozenset(b + 1 for b in range(n) if (mask >> b) & 1) for mask in found
    )


def point_scheme(t: TripleSet) -> PointScheme:
    """Components are the complements of the minimal transversals."""
    everything = frozenset(range(1, t.n + 1))
    comps = frozenset(everything - s for s in minimal_transversals(t))
    return PointScheme(t.n, comps)


def count_p1(ps: PointScheme) -> int:
    """Number of components that are lines, i.e. allowed sets of size 2."""
    return sum(1 for c in ps.components if len(c) == 2)


def count_p1_closed(t: TripleSet) -> int:
    """Line count straight from the triples, without building the scheme.

    {i,j} is a component exactly when every triple {i,j,k} is bad; the
    condition is vacuous at n = 2, where the whole space is the one line.
    """
    if t.n < 2:
        return 0
    count = 0
    for i, j in combinations(range(1, t.n + 1), 2):
        others = (k for k in range(1, t.n + 1) if k != i and k != j)
        if all(tuple(sorted((i, j, k))) in t.bad for k in others):
            count += 1
    return count


# Published catalogs of schemes arising in 4 and 5 variables, keyed by tag.
CATALOG_N4: dict[str, tuple[tuple[int, ...], ...]] = {
    "(4a)": ((1, 2, 3, 4),),
    "(4b)": ((1, 2, 4), (1, 2, 3), (3, 4)),
    "(4c)": ((3, 4), (2, 4), (2, 3), (1, 4), (1, 3), (1, 2)),
}

# Listed as a possible 4-variable scheme in general, but never realized by
# +/-1 coefficients; sweeps assert its absence.
UNREALIZED_N4: tuple[tuple[int, ...], ...] = ((2, 3, 4), (1, 4), (1, 3), (1, 2))

CATALOG_N5: dict[str, tuple[tuple[int, ...], ...]] = {
    "(5a)": ((1, 2, 3, 4, 5),),
    "(5b)": ((1, 2, 3, 5), (1, 2, 3, 4), (4, 5)),
    "(5c)": ((1, 2, 3, 4), (3, 4, 5), (1, 2, 5)),
    "(5d)": ((3, 4, 5), (1, 4, 5), (1, 2, 5), (1, 2, 3), (2, 3, 4)),
    "(5e)": ((1, 3, 5), (1, 3, 4), (1, 2, 5), (1, 2, 4), (4, 5), (2, 3)),
    "(5f)": ((1, 2, 5), (1, 2, 4), (1, 2, 3), (4, 5), (3, 5), (3, 4)),
    "(5g)": (
        (4, 5), (3, 5), (3, 4), (2, 5), (2, 4),
        (2, 3), (1, 5), (1, 4), (1, 3), (1, 2),
    ),
}

_CANONICAL_CATALOG_CACHE: dict[int, dict[tuple, str]] = {}


def _canonical_catalog(n: int) -> dict[tuple, str]:
    if n not in _CANONICAL_CATALOG_CACHE:
        source = CATALOG_N4 if n == 4 else CATALOG_N5
        _CANONICAL_CATALOG_CACHE[n] = {
            canonical_set_system(n, comps): tag for tag, comps in source.items()
        }
    return _CANONICAL_CATALOG_CACHE[n]


def scheme_label(ps: PointScheme) -> str:
    """Catalog tag of the scheme at n in {4, 5}; otherwise a size signature.

    Matching is up to relabeling of the indices; the catalogs have
    pairwise non-isomorphic entries, so a match is unique.
    """
    if ps.n in (4, 5):
        key = canonical_set_system(ps.n, ps.components)
        tag = _canonical_catalog(ps.n).get(key)
        if tag is not None:
            return tag
    sizes = sorted((len(c) for c in ps.components), reverse=True)
    return "+".join(str(s) for s in sizes) if sizes else "empty"
