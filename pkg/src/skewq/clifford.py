"""Commutation data of the quotient algebra and its matrix decomposition.

The algebra attached to an n-variable sign matrix has n-1 involutive
generators t_i with t_i t_j = -mu_ij t_j t_i.  Linearizing the signs over
GF(2) (b_ij = 1 when t_i and t_j anticommute) gives an alternating form
whose rank determines the decomposition into c = 2^(m-2r) blocks of
d x d matrices with d = 2^r.  That closed form is certified per instance
by the brute-force table in the oracle module; it is never trusted bare
in sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .signs import SignMatrix

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CommutationMatrix:
    """Signs mu_ij of the relations t_i t_j + mu_ij t_j t_i = 0, i < j <= m."""

    m: int
    neg_pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        for i, j in self.neg_pairs:
            if not (1 <= i < j <= self.m):
                raise ValueError(f"pair ({i},{j}) out of range for m={self.m}")

    @classmethod
    def from_neg_pairs(cls, m: int, pairs) -> CommutationMatrix:
        return cls(m, frozenset(tuple(sorted(p)) for p in pairs))

    def mu(self, i: int, j: int) -> int:
        if i == j or not (1 <= i <= self.m and 1 <= j <= self.m):
            raise ValueError(f"mu defined off-diagonal in 1..{self.m}, got ({i},{j})")
        return -1 if tuple(sorted((i, j))) in self.neg_pairs else 1


def mu_matrix(s: SignMatrix) -> CommutationMatrix:
    """mu_ij = eps(n,i) * eps(i,j) * eps(j,n) on the first n-1 indices."""
    n = s.n
    neg = frozenset(
        (i, j)
        for i, j in combinations(range(1, n), 2)
        if s.eps(n, i) * s.eps(i, j) * s.eps(j, n) == -1
    )
    return CommutationMatrix(n - 1, neg)


@dataclass(frozen=True)
class F2Form:
    """Symmetric zero-diagonal matrix over GF(2), rows as bitmasks."""

    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.m:
            raise ValueError("row count must equal m")
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                raise ValueError("diagonal must be zero")
            if row >> self.m:
                raise ValueError("row has bits beyond m")
        for i in range(self.m):
            for j in range(self.m):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError("matrix must be symmetric")

    def b(self, i: int, j: int) -> int:
        return (self.rows[i - 1] >> (j - 1)) & 1

    def pair_value(self, x: int, y: int) -> int:
        """Evaluate the bilinear form on bitmask vectors x, y."""
        yrow = 0
        for i in range(self.m):
            if (y >> i) & 1:
                yrow ^= self.rows[i]
        return (x & yrow).bit_count() & 1


def anticommutation_form(c: CommutationMatrix) -> F2Form:
    """b_ij = 1 exactly when mu_ij = +1 (generators i and j anticommute)."""
    rows = [0] * c.m
    for i, j in combinations(range(1, c.m + 1), 2):
        if c.mu(i, j) == 1:
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
    return F2Form(c.m, tuple(rows))


def gf2_rank(rows: list[int], n_cols: int) -> int:
    """Rank over GF(2) via Gaussian elimination on int bitsets."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def f2_rank(f: F2Form) -> int:
    """Rank of the form over GF(2); always even for alternating forms."""
    rank = gf2_rank(list(f.rows), f.m)
    assert rank % 2 == 0, "alternating form has odd rank"
    return rank


@dataclass(frozen=True)
class SymplecticBasis:
    """Hyperbolic pairs plus radical vectors, all as GF(2) bitmasks."""

    m: int
    hyperbolic_pairs: tuple[tuple[int, int], ...]
    radical: tuple[int, ...]

    def vectors(self) -> tuple[int, ...]:
        out = []
        for u, v in self.hyperbolic_pairs:
            out.extend((u, v))
        out.extend(self.radical)
        return tuple(out)


def symplectic_basis(f: F2Form) -> SymplecticBasis:
    """Symplectic Gram-Schmidt with lowest-index pivots (deterministic).

    Produces r hyperbolic pairs (u_s, v_s) with B(u_s, v_s) = 1, all other
    pairings zero, and m - 2r radical vectors orthogonal to everything.
    """

    work = [1 << i for i in range(f.m)]
    pairs: list[tuple[int, int]] = []
    radical: list[int] = []
    while work:
        u = work.pop(0)
        partner = None
        for idx, v in enumerate(work):
            if f.pair_value(u, v):
                partner = idx
                break
        if partner is None:
            radical.append(u)
            continue
        v = work.pop(partner)
        reduced = []
        for w in work:
            if f.pair_value(w, v):
                w ^= u
            if f.pair_value(w, u):
                w ^= v
            reduced.append(w)
        work = reduced
        pairs.append((u, v))
    return SymplecticBasis(f.m, tuple(pairs), tuple(radical))


@dataclass(frozen=True)
class WedderburnType:
    """c blocks of d x d matrices with c * d^2 equal to the total dimension."""

    d: int
    c: int

    def algebra_str(self) -> str:
        if self.d == 1:
            return "k" if self.c == 1 else f"k^{self.c}"
        base = f"M_{self.d}(k)"
        return base if self.c == 1 else f"{base}^{self.c}"


def wedderburn_type(f: F2Form) -> WedderburnType:
    """d = 2^(rank/2) and c = 2^(m - rank); certified per use by the oracle."""
    rank = f2_rank(f)
    return WedderburnType(d=1 << (rank // 2), c=1 << (f.m - rank))


# ---------------------------------------------------------------------------
# Explicit block representations


_X: Matrix = ((0, 1), (1, 0))
_Z: Matrix = ((1, 0), (0, -1))
_I2: Matrix = ((1, 0), (0, 1))


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_scale(s: int, a: Matrix) -> Matrix:
    return tuple(tuple(s * x for x in row) for row in a)


def mat_kron(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for arow in a:
        for brow in b:
            out.append(tuple(x * y for x in arow for y in brow))
    return tuple(out)


def _solve_gf2(basis: list[int], target: int, m: int) -> int:
    """Coordinates of target in the span of basis vectors (bitmask result)."""
    rows = [(vec, 1 << k) for k, vec in enumerate(basis)]
    coords = 0
    for col in range(m):
        pivot = None
        for idx, (vec, _) in enumerate(rows):
            if (vec >> col) & 1:
                pivot = idx
                break
        if pivot is None:
            continue
        pvec, ptag = rows.pop(pivot)
        if (target >> col) & 1:
            target ^= pvec
            coords ^= ptag
        rows = [(v ^ pvec, t ^ ptag) if (v >> col) & 1 else (v, t) for v, t in rows]
    if target:
        raise ValueError("target not in span")
    return coords


@dataclass(frozen=True)
class Representation:
    """Generator images per block, entries in {0, +1, -1}.

    Images in each block are signed tensor words in X and Z along the
    hyperbolic pairs; radical coordinates contribute the block's scalar
    signs.  square_signs[i] is the sign q_i with image_i^2 = q_i * I.
    A block is an honest matrix model of the defining relations exactly
    when all q_i are +1; otherwise it models the presentation rescaled by
    square roots of the q_i, which has the same block decomposition over
    an algebraically closed coefficient field.
    """

    m: int
    d: int
    blocks: tuple[tuple[Matrix, ...], ...]
    radical_signs: tuple[tuple[int, ...], ...]
    square_signs: tuple[int, ...]


def explicit_representation(c: CommutationMatrix) -> Representation:
    """Build the block images of the generators and verify them internally."""
    form = anticommutation_form(c)
    basis = symplectic_basis(form)
    m = c.m
    r = len(basis.hyperbolic_pairs)
    d = 1 << r
    n_rad = len(basis.radical)
    pairing = form.pair_value

    # coordinates of each standard generator in the symplectic basis
    alphas: list[tuple[int, ...]] = []
    betas: list[tuple[int, ...]] = []
    gammas: list[int] = []
    words: list[Matrix] = []
    square_signs: list[int] = []
    for i in range(m):
        e = 1 << i
        alpha = tuple(pairing(e, v) for _, v in basis.hyperbolic_pairs)
        beta = tuple(pairing(e, u) for u, _ in basis.hyperbolic_pairs)
        residue = e
        for (u, v), a, b in zip(basis.hyperbolic_pairs, alpha, beta):
            if a:
                residue ^= u
            if b:
                residue ^= v
        gamma = _solve_gf2(list(basis.radical), residue, m) if n_rad else 0
        word = ((1,),)
        for a, b in zip(alpha, beta):
            factor = _I2
            if a and b:
                factor = mat_mul(_X, _Z)
            elif a:
                factor = _X
            elif b:
                factor = _Z
            word = mat_kron(word, factor)
        alphas.append(alpha)
        betas.append(beta)
        gammas.append(gamma)
        words.append(word)
        square_signs.append(-1 if (sum(a & b for a, b in zip(alpha, beta)) & 1) else 1)

    blocks: list[tuple[Matrix, ...]] = []
    radical_signs: list[tuple[int, ...]] = []
    for block_index in range(1 << n_rad):
        signs = tuple(-1 if (block_index >> l) & 1 else 1 for l in range(n_rad))
        images = []
        for i in range(m):
            scalar = 1
            for l in range(n_rad):
                if (gammas[i] >> l) & 1:
                    scalar *= signs[l]
            images.append(mat_scale(scalar, words[i]))
        blocks.append(tuple(images))
        radical_signs.append(signs)

    rep = Representation(
        m=m,
        d=d,
        blocks=tuple(blocks),
        radical_signs=tuple(radical_signs),
        square_signs=tuple(square_signs),
    )
    failures = representation_failures(rep, form)
    if failures:
        raise AssertionError(f"representation checks failed: {failures}")
    return rep


def _span_dimension(mats: list[Matrix]) -> int:
    """Rank over the rationals of the flattened matrices (fraction-free)."""
    rows = [list(x for row in mat for x in row) for mat in mats]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for rr in range(row_idx, len(rows)):
            if rows[rr][col]:
                pivot = rr
                break
        if pivot is None:
            continue
        rows[row_idx], rows[pivot] = rows[pivot], rows[row_idx]
        prow = rows[row_idx]
        for rr in range(len(rows)):
            if rr != row_idx and rows[rr][col]:
                lead = rows[rr][col]
                rows[rr] = [x * prow[col] - lead * y for x, y in zip(rows[rr], prow)]
        rank += 1
        row_idx += 1
        if row_idx == len(rows):
            break
    return rank


def representation_failures(rep: Representation, form: F2Form) -> tuple[str, ...]:
    """Relation, span, and block-separation checks; empty tuple means pass."""
    fails: list[str] = []
    m, d = rep.m, rep.d
    ident = mat_identity(d)
    for b_idx, images in enumerate(rep.blocks):
        for i, img in enumerate(images):
            if mat_mul(img, img) != mat_scale(rep.square_signs[i], ident):
                fails.append(f"block {b_idx}: image {i + 1} square differs from its sign")
        for i in range(m):
            for j in range(i + 1, m):
                lhs = mat_mul(images[i], images[j])
                rhs = mat_mul(images[j], images[i])
                anti = form.b(i + 1, j + 1)
                if anti and lhs != mat_scale(-1, rhs):
                    fails.append(f"block {b_idx}: images {i + 1},{j + 1} fail to anticommute")
                if not anti and lhs != rhs:
                    fails.append(f"block {b_idx}: images {i + 1},{j + 1} fail to commute")
        products = []
        for subset in range(1 << m):
            prod = ident
            for i in range(m):
                if (subset >> i) & 1:
                    prod = mat_mul(prod, images[i])
            products.append(prod)
        if _span_dimension(products) != d * d:
            fails.append(f"block {b_idx}: products span less than d^2")
    if len(set(rep.radical_signs)) != len(rep.radical_signs):
        fails.append("radical sign vectors are not pairwise distinct")
    if len(set(rep.blocks)) != len(rep.blocks):
        fails.append("two blocks have identical generator images")
    return tuple(fails)
