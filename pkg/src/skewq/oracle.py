"""Brute-force ground truth for the generator-and-relations algebra.

The algebra on m involutive generators is modeled exactly as a twisted
group algebra: basis monomials are indexed by bit vectors a (bit i set
means generator i+1 appears, factors in increasing index order) and the
product law is t^a * t^b = sigma(a, b) * t^(a XOR b), where sigma counts
the signed transpositions needed to re-sort the concatenation.  All
arithmetic is exact (ints and Fractions); nothing here consults the
closed-form decomposition it is used to certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import (
    CommutationMatrix,
    Representation,
    WedderburnType,
    anticommutation_form,
    representation_failures,
)

ORACLE_M_LIMIT = 8

Element = dict[int, Fraction]


class AlgebraTable:
    """Structure constants of the twisted group algebra on 2^m monomials."""

    def __init__(self, mu: CommutationMatrix):
        if mu.m > ORACLE_M_LIMIT:
            raise ValueError(f"oracle supports m <= {ORACLE_M_LIMIT}, got m={mu.m}")
        self.mu = mu
        self.m = mu.m
        self.dim = 1 << mu.m
        self._sigma_cache: dict[tuple[int, int], int] = {}

    def sigma(self, a: int, b: int) -> int:
        """Sign picked up sorting t^a t^b into the ordered monomial t^(a^b).

        One factor -mu_ij for every transposition of a generator i from a
        past a lower-index generator j from b; squares collapse silently
        because each generator is an involution.
        """
        key = (a, b)
        cached = self._sigma_cache.get(key)
        if cached is not None:
            return cached
        sign = 1
        i = a
        while i:
            low_i = i & -i
            gen_i = low_i.bit_length()  # 1-based generator index
            j = b & (low_i - 1)
            while j:
                low_j = j & -j
                sign *= -self.mu.mu(low_j.bit_length(), gen_i)
                j ^= low_j
            i ^= low_i
        self._sigma_cache[key] = sign
        return sign

    def basis_product(self, a: int, b: int) -> tuple[int, int]:
        """(sign, index) with t^a t^b = sign * t^index."""
        return self.sigma(a, b), a ^ b

    def mul(self, u: Element, v: Element) -> Element:
        out: Element = {}
        for a, ca in u.items():
            if not ca:
                continue
            for b, cb in v.items():
                if not cb:
                    continue
                g = a ^ b
                out[g] = out.get(g, Fraction(0)) + ca * cb * self.sigma(a, b)
        return {g: c for g, c in out.items() if c}

    def identity(self) -> Element:
        return {0: Fraction(1)}


def structure_constants(c: CommutationMatrix) -> AlgebraTable:
    return AlgebraTable(c)


def as_element(coeffs) -> Element:
    """Normalize a mapping of basis index -> rational into an Element."""
    return {int(g): Fraction(v) for g, v in dict(coeffs).items() if Fraction(v)}


def center_dimension(tab: AlgebraTable) -> int:
    """Dimension of the subspace commuting with every generator.

    The commutator equations are diagonal in the monomial basis: the
    coefficient of t^(a^e_i) in [z, t_i] is c_a (sigma(a,e_i) -
    sigma(e_i,a)), so exact elimination reduces to counting the monomials
    whose equations all vanish.
    """
    dim = 0
    for a in range(tab.dim):
        if all(
            tab.sigma(a, 1 << i) == tab.sigma(1 << i, a) for i in range(tab.m)
        ):
            dim += 1
    return dim


def _left_mult_trace(tab: AlgebraTable, sign: int, index: int) -> int:
    """Trace of x -> sign * t^index * x in the monomial basis."""
    total = 0
    for x in range(tab.dim):
        if index ^ x == x:
            total += sign * tab.sigma(index, x)
    return total


def _nonsingular(matrix: list[list[int]]) -> bool:
    """Exact rational test that a square integer matrix is invertible."""
    size = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        prow = rows[col]
        inv = Fraction(1) / prow[col]
        for r in range(col + 1, size):
            factor = rows[r][col]
            if factor:
                scaled = factor * inv
                rows[r] = [x - scaled * y for x, y in zip(rows[r], prow)]
    return True


def semisimplicity_check(tab: AlgebraTable) -> bool:
    """Nondegeneracy of the trace form of the regular representation."""
    gram = []
    for a in range(tab.dim):
        row = []
        for b in range(tab.dim):
            sign, index = tab.basis_product(a, b)
            row.append(_left_mult_trace(tab, sign, index))
        gram.append(row)
    return _nonsingular(gram)


def idempotent_check(tab: AlgebraTable, elements) -> bool:
    """True exactly for a complete set of orthogonal idempotents."""
    elems = [as_element(e) for e in elements]
    for i, e in enumerate(elems):
        if tab.mul(e, e) != e:
            return False
        for j, f in enumerate(elems):
            if i != j and (tab.mul(e, f) or tab.mul(f, e)):
                return False
    total: Element = {}
    for e in elems:
        for g, c in e.items():
            total[g] = total.get(g, Fraction(0)) + c
    total = {g: c for g, c in total.items() if c}
    return total == tab.identity()


@dataclass(frozen=True)
class WedderburnCertificate:
    passed: bool
    failures: tuple[str, ...]
    center_dim: int
    semisimple: bool
    block_size: int
    block_count: int
    rescaled: bool


def certify_wedderburn(
    tab: AlgebraTable, w: WedderburnType, rep: Representation
) -> WedderburnCertificate:
    """Certify the claimed block decomposition against the exact table.

    Four independent facts are checked: the center has dimension equal to
    the claimed block count, the trace form is nondegenerate, the block
    images satisfy their relation and span checks at the claimed sizes,
    and the dimensions add up.  `rescaled` records whether any generator
    image squares to -1, in which case the matrices model the square-root
    rescaled presentation (same block structure over a closed field).
    """
    failures: list[str] = []
    cdim = center_dimension(tab)
    if cdim != w.c:
        failures.append(f"center dimension {cdim} != block count {w.c}")
    semisimple = semisimplicity_check(tab)
    if not semisimple:
        failures.append("trace form is singular")
    if rep.m != tab.m:
        failures.append(f"representation m={rep.m} mismatches table m={tab.m}")
    if rep.d != w.d:
        failures.append(f"representation block size {rep.d} != {w.d}")
    if len(rep.blocks) != w.c:
        failures.append(f"representation block count {len(rep.blocks)} != {w.c}")
    rep_fails = representation_failures(rep, anticommutation_form(tab.mu))
    failures.extend(rep_fails)
    if w.c * w.d * w.d != tab.dim:
        failures.append(f"c*d^2 = {w.c * w.d * w.d} != algebra dimension {tab.dim}")
    return WedderburnCertificate(
        passed=not failures,
        failures=tuple(failures),
        center_dim=cdim,
        semisimple=semisimple,
        block_size=w.d,
        block_count=w.c,
        rescaled=any(q == -1 for q in rep.square_signs),
    )
