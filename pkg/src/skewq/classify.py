"""Sweeps: histogram every sign pattern, certify, and label stable categories.

A sweep walks the 2^C(n-1,2) gauge-fixed commutation patterns (one per
two-graph on {1..n}), computes the line count of the vanishing locus and
the certified block count N of the algebra, and records the Morita label
"derived category of k^N modules".  Classification is up to relabeling:
orbits under the symmetric group are folded with a union-find over the
transposition action, whose class minima coincide with canonical_form.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .clifford import (
    CommutationMatrix,
    anticommutation_form,
    explicit_representation,
    gf2_rank,
    mu_matrix,
    wedderburn_type,
)
from .oracle import certify_wedderburn, structure_constants
from .pointscheme import (
    UNREALIZED_N4,
    count_p1,
    count_p1_closed,
    point_scheme,
    scheme_label,
)
from .signs import (
    Permutation,
    SignMatrix,
    TripleSet,
    all_triples,
    bad_triples,
    canonical_set_system,
    realize_sign_matrix,
)

SWEEP_N_LIMIT = 7
CATALOG_N_LIMIT = 6
WITNESS_CAP = 32


@dataclass(frozen=True)
class CategoryLabel:
    """Morita label: derived category of modules over N copies of the field."""

    copies: int

    def render(self) -> str:
        return "Db(mod k)" if self.copies == 1 else f"Db(mod k^{self.copies})"


def stable_category(s: SignMatrix) -> CategoryLabel:
    """Block count of the certifiable decomposition, as a category label."""
    w = wedderburn_type(anticommutation_form(mu_matrix(s)))
    return CategoryLabel(w.c)


def expected_from_ell(n: int, ell: int) -> CategoryLabel:
    """Label predicted from the line count alone.

    The intervals (C(2m-1,2), C(2m+1,2)] for odd n and (C(2m,2),
    C(2m+2,2)] for even n tile the nonnegative integers, with the lowest
    interval absorbing ell = 0 (and ell = 1 when n is even).
    """
    if not 0 <= ell <= comb(n, 2):
        raise ValueError(f"ell={ell} out of range 0..{comb(n, 2)} for n={n}")
    m = 0
    if n % 2:
        while ell > comb(2 * m + 1, 2):
            m += 1
        return CategoryLabel(1 << (2 * m))
    while ell > comb(2 * m + 2, 2):
        m += 1
    return CategoryLabel(1 << (2 * m + 1))


@dataclass(frozen=True)
class OrbitSummary:
    triples: tuple[tuple[int, int, int], ...]
    count: int
    ell: int
    N: int
    d: int
    c: int
    label: str | None = None


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    triples: tuple[tuple[int, int, int], ...]
    components: tuple[tuple[int, ...], ...]
    ell: int
    d: int
    c: int
    N: int


@dataclass
class SweepReport:
    n: int
    total_configs: int
    histogram: dict[tuple[int, int], int]
    orbits: tuple[OrbitSummary, ...]
    verdict: str
    counterexamples: tuple[tuple[tuple[int, int, int], ...], ...]
    certified_checked: int
    certified_total: int
    certification_failures: tuple[tuple[tuple[tuple[int, int, int], ...], tuple[str, ...]], ...] = ()
    converse_witnesses: tuple[tuple[tuple[int, int, int], ...], ...] = ()
    converse_witness_count: int = 0


class TheoremViolation(Exception):
    """A sweep assertion failed; carries the offending triple set."""

    def __init__(self, message: str, triples: tuple[tuple[int, int, int], ...]):
        super().__init__(f"{message} (triples: {list(map(list, triples))})")
        self.triples = triples


# ---------------------------------------------------------------------------
# Fast per-pattern evaluation over gauge-fixed edge masks


class _SweepContext:
    """Precomputed bit tables for one value of n."""

    def __init__(self, n: int):
        self.n = n
        self.m = n - 1
        self.triples = all_triples(n)
        self.edge_pairs = list(combinations(range(1, n), 2))
        edge_index = {pair: k for k, pair in enumerate(self.edge_pairs)}
        self.triple_edge_masks = []
        for i, j, k in self.triples:
            if k == n:
                bits = 1 << edge_index[(i, j)]
            else:
                bits = (
                    (1 << edge_index[(i, j)])
                    | (1 << edge_index[(i, k)])
                    | (1 << edge_index[(j, k)])
                )
            self.triple_edge_masks.append(bits)
        self.pair_req = []
        for i, j in combinations(range(1, n + 1), 2):
            req = 0
            for r, t in enumerate(self.triples):
                if i in t and j in t:
                    req |= 1 << r
            self.pair_req.append(req)

    def triple_mask(self, emask: int) -> int:
        """Two-graph of the gauge graph: a triple is bad iff it sees an odd edge count."""
        out = 0
        for r, bits in enumerate(self.triple_edge_masks):
            if (emask & bits).bit_count() & 1:
                out |= 1 << r
        return out

    def ell_of(self, tmask: int) -> int:
        return sum(1 for req in self.pair_req if (tmask & req) == req)

    def rank_of(self, emask: int) -> int:
        """GF(2) rank of the anticommutation form (complement of the gauge graph)."""
        rows = [0] * self.m
        for k, (i, j) in enumerate(self.edge_pairs):
            if not (emask >> k) & 1:
                rows[i - 1] |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
        return gf2_rank(rows, self.m)

    def decode(self, tmask: int) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            self.triples[r] for r in range(len(self.triples)) if (tmask >> r) & 1
        )

    def generator_rank_perms(self) -> list[list[int]]:
        """Action of adjacent transpositions on colex triple ranks."""
        perms = []
        rank_of = {t: r for r, t in enumerate(self.triples)}
        for a in range(1, self.n):
            p = Permutation.transposition(self.n, a, a + 1)
            perms.append(
                [rank_of[tuple(sorted((p(i), p(j), p(k))))] for i, j, k in self.triples]
            )
        return perms


def _sweep_chunk(args: tuple[int, int, int]) -> list[tuple[int, int, int, int]]:
    n, start, stop = args
    ctx = _SweepContext(n)
    out = []
    for emask in range(start, stop):
        tmask = ctx.triple_mask(emask)
        out.append((emask, tmask, ctx.ell_of(tmask), ctx.rank_of(emask)))
    return out


def _sweep_patterns(n: int, jobs: int) -> list[tuple[int, int, int, int]]:
    total = 1 << comb(n - 1, 2)
    if jobs <= 1 or total < 1 << 8:
        return _sweep_chunk((n, 0, total))
    chunk = max(1, total // (jobs * 4))
    bounds = list(range(0, total, chunk)) + [total]
    tasks = [(n, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    results: list[tuple[int, int, int, int]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_sweep_chunk, tasks):
            results.extend(part)
    return results


def _orbit_minima(n: int, tmasks: list[int]) -> dict[int, int]:
    """Map each two-graph mask to the least mask in its relabeling orbit.

    Union-find over the adjacent-transposition action; transpositions
    generate the full symmetric group, so the class minimum agrees with
    the exhaustive canonical form.
    """
    perms = _SweepContext(n).generator_rank_perms()
    parent = {t: t for t in tmasks}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for t in tmasks:
        for perm in perms:
            img = 0
            rest = t
            while rest:
                low = rest & -rest
                img |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            ra, rb = find(t), find(img)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return {t: find(t) for t in tmasks}


def _certify_edge_mask(n: int, emask: int):
    """Run the full oracle certification for one gauge pattern."""
    ctx = _SweepContext(n)
    edges = frozenset(
        pair for k, pair in enumerate(ctx.edge_pairs) if (emask >> k) & 1
    )
    mu = CommutationMatrix(n - 1, edges)
    form = anticommutation_form(mu)
    w = wedderburn_type(form)
    rep = explicit_representation(mu)
    tab = structure_constants(mu)
    return certify_wedderburn(tab, w, rep), w


def _default_certify_percent(n: int) -> int:
    return 100 if n <= 5 else 1


def _certify_sample(n: int, total: int, percent: int) -> list[int]:
    if percent <= 0:
        return []
    if percent >= 100:
        return list(range(total))
    k = max(1, -(-total * percent // 100))  # ceiling, at least one
    rng = random.Random(f"skewq-certify-{n}-{percent}")
    return sorted(rng.sample(range(total), k))


def _build_orbit_summaries(
    n: int,
    rows: list[tuple[int, int, int, int]],
    attach_labels: bool,
) -> tuple[OrbitSummary, ...]:
    minima = _orbit_minima(n, [tmask for _, tmask, _, _ in rows])
    ctx = _SweepContext(n)
    grouped: dict[int, list[tuple[int, int, int, int]]] = {}
    for row in rows:
        grouped.setdefault(minima[row[1]], []).append(row)
    summaries = []
    for canon in sorted(grouped):
        members = grouped[canon]
        ells = {ell for _, _, ell, _ in members}
        ranks = {rank for _, _, _, rank in members}
        if len(ells) != 1 or len(ranks) != 1:
            raise TheoremViolation(
                "orbit members disagree on invariants", ctx.decode(canon)
            )
        ell, rank = ells.pop(), ranks.pop()
        label = None
        if attach_labels:
            label = scheme_label(point_scheme(TripleSet.from_mask(n, canon)))
        summaries.append(
            OrbitSummary(
                triples=ctx.decode(canon),
                count=len(members),
                ell=ell,
                N=1 << (n - 1 - rank),
                d=1 << (rank // 2),
                c=1 << (n - 1 - rank),
                label=label,
            )
        )
    return tuple(summaries)


def _assemble_report(
    n: int,
    rows: list[tuple[int, int, int, int]],
    orbits: tuple[OrbitSummary, ...],
    certify_percent: int,
) -> SweepReport:
    ctx = _SweepContext(n)
    m = n - 1
    histogram: Counter = Counter()
    counterexamples = []
    witnesses = []
    base_copies = 1 if n % 2 else 2
    expected_cache: dict[int, int] = {}
    for _, tmask, ell, rank in rows:
        copies = 1 << (m - rank)
        histogram[(ell, copies)] += 1
        if ell not in expected_cache:
            expected_cache[ell] = expected_from_ell(n, ell).copies
        if copies != expected_cache[ell]:
            counterexamples.append(tmask)
        if copies == base_copies and tmask:
            witnesses.append(tmask)
    sample = _certify_sample(n, len(rows), certify_percent)
    cert_failures = []
    for idx in sample:
        emask, tmask, _, rank = rows[idx]
        cert, w = _certify_edge_mask(n, emask)
        if w.c != 1 << (m - rank):
            cert_failures.append((ctx.decode(tmask), ("sweep block count mismatch",)))
        elif not cert.passed:
            cert_failures.append((ctx.decode(tmask), cert.failures))
    counterexamples.sort()
    witnesses.sort()
    return SweepReport(
        n=n,
        total_configs=len(rows),
        histogram=dict(sorted(histogram.items())),
        orbits=orbits,
        verdict="holds" if not counterexamples else "counterexamples",
        counterexamples=tuple(ctx.decode(t) for t in counterexamples),
        certified_checked=len(sample),
        certified_total=len(rows),
        certification_failures=tuple(cert_failures),
        converse_witnesses=tuple(ctx.decode(t) for t in witnesses[:WITNESS_CAP]),
        converse_witness_count=len(witnesses),
    )


def verify_conjecture(
    n: int,
    jobs: int = 1,
    sample_certify: int | None = None,
    guard_max: int | None = None,
) -> SweepReport:
    """Sweep every pattern and compare the certified N with the prediction.

    Counterexamples are reported, never asserted away.  Certification runs
    on every pattern for n <= 5 and on a deterministic sample otherwise.
    """
    limit = SWEEP_N_LIMIT if guard_max is None else guard_max
    if not 1 <= n <= limit:
        raise ValueError(f"sweep guard: n must be in 1..{limit}, got {n}")
    percent = _default_certify_percent(n) if sample_certify is None else sample_certify
    rows = _sweep_patterns(n, jobs)
    orbits = _build_orbit_summaries(n, rows, attach_labels=n <= 5)
    return _assemble_report(n, rows, orbits, percent)


def verify_theorems(n: int) -> SweepReport:
    """Exhaustive re-derivation of the small-n classification.

    Every pattern runs through the full honest pipeline (scheme, label,
    block type, oracle certificate) and the published biconditionals are
    asserted; any failure raises TheoremViolation with the offending
    triple set.
    """
    if n not in (3, 4, 5):
        raise ValueError(f"verify_theorems supports n in {{3, 4, 5}}, got {n}")
    ctx = _SweepContext(n)
    rows = []
    unrealized_canon = canonical_set_system(4, UNREALIZED_N4) if n == 4 else None
    for emask in range(1 << comb(n - 1, 2)):
        edges = frozenset(
            pair for k, pair in enumerate(ctx.edge_pairs) if (emask >> k) & 1
        )
        sign = SignMatrix(n, edges)
        t = bad_triples(sign)
        ps = point_scheme(t)
        ell = count_p1(ps)
        label = scheme_label(ps)
        mu = mu_matrix(sign)
        form = anticommutation_form(mu)
        w = wedderburn_type(form)
        cert = certify_wedderburn(structure_constants(mu), w, explicit_representation(mu))
        triples = t.triples_sorted()
        if not cert.passed:
            raise TheoremViolation(f"uncertified instance: {cert.failures}", triples)
        if ell != count_p1_closed(t):
            raise TheoremViolation("closed-form line count disagrees", triples)
        copies = w.c

        if n == 3:
            if ps.is_projective_space() != (copies == 1):
                raise TheoremViolation("n=3: plane case fails", triples)
            is_triangle = ps.components == frozenset(
                frozenset(p) for p in combinations(range(1, 4), 2)
            )
            if is_triangle != (copies == 4):
                raise TheoremViolation("n=3: triangle case fails", triples)
            if not (ps.is_projective_space() or is_triangle):
                raise TheoremViolation("n=3: unknown scheme", triples)
        elif n == 4:
            if label not in ("(4a)", "(4b)", "(4c)"):
                raise TheoremViolation(f"n=4: scheme outside catalog: {label}", triples)
            if (label in ("(4a)", "(4b)")) != (copies == 2):
                raise TheoremViolation("n=4: small-N case fails", triples)
            if (label == "(4c)") != (copies == 8):
                raise TheoremViolation("n=4: large-N case fails", triples)
            if (0 <= ell <= 1) != (copies == 2) or (1 < ell <= 6) != (copies == 8):
                raise TheoremViolation("n=4: line-count ranges fail", triples)
            if canonical_set_system(4, ps.components) == unrealized_canon:
                raise TheoremViolation("n=4: unrealizable scheme appeared", triples)
        else:
            if label not in ("(5a)", "(5b)", "(5c)", "(5d)", "(5e)", "(5f)", "(5g)"):
                raise TheoremViolation(f"n=5: scheme outside catalog: {label}", triples)
            if (ell == 0) != (copies == 1) or (ell == 0) != (label in ("(5a)", "(5c)", "(5d)")):
                raise TheoremViolation("n=5: N=1 range fails", triples)
            if (0 < ell <= 3) != (copies == 4) or (0 < ell <= 3) != (
                label in ("(5b)", "(5e)", "(5f)")
            ):
                raise TheoremViolation("n=5: N=4 range fails", triples)
            if (3 < ell <= 10) != (copies == 16) or (3 < ell <= 10) != (label == "(5g)"):
                raise TheoremViolation("n=5: N=16 range fails", triples)

        # endpoints: trivial two-graph and full two-graph
        if not t.bad and copies != (1 if n % 2 else 2):
            raise TheoremViolation("all-good pattern has wrong N", triples)
        if copies == 1 << (n - 1) and len(t.bad) != comb(n, 3):
            raise TheoremViolation("maximal N away from the all-bad pattern", triples)
        if len(t.bad) == comb(n, 3) and copies != 1 << (n - 1):
            raise TheoremViolation("all-bad pattern has wrong N", triples)

        rank = (n - 1) - (copies.bit_length() - 1)  # N = 2^(m - rank)
        rows.append((emask, t.mask(), ell, rank))

    orbits = _build_orbit_summaries(n, rows, attach_labels=True)
    expected_orbits = {3: 2, 4: 3, 5: 7}[n]
    if len(orbits) != expected_orbits:
        raise TheoremViolation(
            f"n={n}: expected {expected_orbits} orbit classes, found {len(orbits)}", ()
        )
    return _assemble_report(n, rows, orbits, certify_percent=100)


def catalog(n: int) -> tuple[CatalogEntry, ...]:
    """One entry per relabeling orbit with its scheme and algebra data."""
    if not 1 <= n <= CATALOG_N_LIMIT:
        raise ValueError(f"catalog supports n <= {CATALOG_N_LIMIT}, got {n}")
    rows = _sweep_patterns(n, jobs=1)
    minima = _orbit_minima(n, [tmask for _, tmask, _, _ in rows])
    counts = Counter(minima[tmask] for _, tmask, _, _ in rows)
    entries = []
    for canon in sorted(counts):
        t = TripleSet.from_mask(n, canon)
        sign = realize_sign_matrix(t)
        ps = point_scheme(t)
        w = wedderburn_type(anticommutation_form(mu_matrix(sign)))
        entries.append(
            CatalogEntry(
                tag=scheme_label(ps),
                triples=t.triples_sorted(),
                components=ps.sorted_components(),
                ell=count_p1(ps),
                d=w.d,
                c=w.c,
                N=w.c,
            )
        )
    if n == 4 and len(entries) != 3:
        raise TheoremViolation("n=4 catalog must have 3 orbits", ())
    if n == 5 and len(entries) != 7:
        raise TheoremViolation("n=5 catalog must have 7 orbits", ())
    return tuple(entries)
