"""Canonical subspaces of GF(p)^n, subspace metrics, counting, and the
anticode-optimal constant-dimension codes built from lifted matrix codes.

Every subspace is held as its unique reduced-row-echelon basis, so subspace
equality is plain matrix equality.  Minimum distances are never taken on
faith: every construction here recomputes them by a full pairwise scan and
refuses to return an object whose parameters disagree with the scan.
"""

from __future__ import annotations

import itertools

import numpy as np

from .gf import require_construction_prime
from .matfp import MatrixFp, batch_rank, hstack, zero_identity
from .codes import PAIR_GUARD, RankMetricCode, build_image_code

ENUMERATION_GUARD = 1 << 20


class Subspace:
    """A k-dimensional subspace of GF(p)^n, stored as its RREF basis.

    The basis must already be canonical (reduced row echelon form with k
    nonzero rows); use :func:`span` to canonicalize arbitrary generators.
    """

    __slots__ = ("n", "p", "basis")

    def __init__(self, basis: MatrixFp):
        if basis.rank() != basis.nrows or basis.rref() != basis:
            raise ValueError("basis is not a canonical RREF basis; use span()")
        self.basis = basis
        self.n = basis.ncols
        self.p = basis.p

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> set[tuple[int, ...]]:
        """All p^dim vectors of the subspace (desk-scale only)."""
        out = set()
        b = self.basis.array
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            v = (np.asarray(coeffs, dtype=np.int64) @ b) % self.p if self.dim else np.zeros(self.n, dtype=np.int64)
            out.add(tuple(int(x) for x in v))
        return out

    def to_lists(self) -> list[list[int]]:
        return self.basis.to_lists()

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n}, p={self.p}, basis={self.to_lists()})"


def span(rows: MatrixFp) -> Subspace:
    """Row space of an arbitrary generator matrix, canonicalized."""
    reduced = rows.rref()
    nonzero = reduced.array[np.any(reduced.array != 0, axis=1)]
    return Subspace(MatrixFp(nonzero.reshape(-1, rows.ncols), rows.p))


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.n != b.n or a.p != b.p:
        raise ValueError(
            f"ambient mismatch: GF({a.p})^{a.n} vs GF({b.p})^{b.n}"
        )


def intersection_dim(a: Subspace, b: Subspace) -> int:
    """dim(A) + dim(B) - rank of the stacked bases."""
    _check_same_ambient(a, b)
    stacked = np.vstack([a.basis.array, b.basis.array])
    return a.dim + b.dim - MatrixFp(stacked, a.p).rank()


def subspace_distance(a: Subspace, b: Subspace) -> int:
    """dim(A) + dim(B) - 2 dim(A n B)."""
    return a.dim + b.dim - 2 * intersection_dim(a, b)


def injection_distance(a: Subspace, b: Subspace) -> int:
    """max(dim A, dim B) - dim(A n B)."""
    return max(a.dim, b.dim) - intersection_dim(a, b)


def dual_subspace(a: Subspace) -> Subspace:
    """Orthogonal complement under the standard inner product."""
    return span(a.basis.null_space())


def gaussian_coefficient(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over a
    q-element field, as an exact integer."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    num = den = 1
    for i in range(k):
        num *= q**n - q**i
        den *= q**k - q**i
    if num % den:
        raise ArithmeticError("Gaussian coefficient did not divide exactly")
    return num // den


def enumerate_grassmannian(n: int, k: int, p: int,
                           guard: int = ENUMERATION_GUARD) -> list[Subspace]:
    """All k-dimensional subspaces of GF(p)^n, one canonical basis each.

    Iterates RREF cells directly: a pivot-column choice plus all fillings of
    the free positions, so the output is duplicate-free by construction.
    """
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if p**n > guard:
        raise ValueError(f"p^n = {p**n} exceeds the enumeration guard ({guard})")
    out = []
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        base = np.zeros((k, n), dtype=np.int64)
        for i, c in enumerate(pivots):
            base[i, c] = 1
        for values in itertools.product(range(p), repeat=len(free)):
            mat = base.copy()
            for (i, j), val in zip(free, values):
                mat[i, j] = val
            out.append(Subspace(MatrixFp(mat, p)))
    return out


def anticode_bound(n: int, d: int, k: int, q: int, metric: str = "subspace") -> int:
    """Upper bound on the size of a constant-dimension code, as a quotient
    of Gaussian coefficients (checked to divide exactly).

    For the subspace metric d must be even, d = 2*delta + 2 with
    0 <= delta < k; for the injection metric 1 <= d <= k.
    """
    if metric == "subspace":
        if d < 2 or d % 2:
            raise ValueError(f"subspace-metric bound needs even d >= 2, got d={d}")
        delta = (d - 2) // 2
        if delta >= k:
            raise ValueError(f"d={d} too large for k={k} in the subspace metric")
        t = k - delta
    elif metric == "injection":
        if not 1 <= d <= k:
            raise ValueError(f"injection-metric bound needs 1 <= d <= k, got d={d}")
        t = k - d + 1
    else:
        raise ValueError(f"metric must be 'subspace' or 'injection', got {metric!r}")
    num = gaussian_coefficient(n, t, q)
    den = gaussian_coefficient(k, t, q)
    if num % den:
        raise ArithmeticError("anticode bound quotient is not an integer")
    return num // den


class GrassmannianCode:
    """A constant-dimension code: distinct k-dimensional subspaces of GF(p)^n.

    ``d`` caches the minimum subspace distance when it has been computed;
    codes loaded from files carry d=None until a scan recomputes it.
    ``provenance`` is a free-form descriptor of how the code was built,
    including the parameters it claims.
    """

    def __init__(self, words, provenance: dict | None = None,
                 min_distance: int | None = None):
        words = tuple(words)
        if not words:
            raise ValueError("a code needs at least one word")
        n, k, p = words[0].n, words[0].dim, words[0].p
        for w in words:
            if not isinstance(w, Subspace):
                raise TypeError("words must be Subspace instances")
            if w.n != n or w.p != p:
                raise ValueError("all words must share one ambient space")
            if w.dim != k:
                raise ValueError("constant-dimension codes only: mixed dimensions")
        if len(set(words)) != len(words):
            raise ValueError("duplicate words")
        self.words = words
        self.n = n
        self.k = k
        self.p = p
        self.d = min_distance
        self.provenance = dict(provenance or {})

    @property
    def M(self) -> int:
        return len(self.words)

    def word_set(self) -> frozenset[Subspace]:
        return frozenset(self.words)

    def summary(self) -> str:
        d = self.d if self.d is not None else "?"
        return f"n={self.n} M={self.M} d={d} k={self.k} q={self.p}"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "provenance": self.provenance,
            "words": [w.to_lists() for w in self.words],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GrassmannianCode":
        p = data["p"]
        words = []
        for basis in data["words"]:
            w = Subspace(MatrixFp(basis, p))
            if w.n != data["n"] or w.dim != data["k"]:
                raise ValueError("word does not match the declared (n, k)")
            words.append(w)
        return cls(words, provenance=data.get("provenance"))

    def __repr__(self):
        return f"GrassmannianCode({self.summary()})"


def pairwise_intersection_dims(words, pair_guard: int = PAIR_GUARD,
                               chunk: int = 1 << 15) -> np.ndarray:
    """Intersection dimensions over all unordered word pairs (flat array in
    triu order).  Equal-dimension words only; batched over GF(p)."""
    m = len(words)
    npairs = m * (m - 1) // 2
    if npairs > pair_guard:
        raise ValueError(
            f"{npairs} pairs exceed the guard ({pair_guard}); raise it to force the scan"
        )
    k = words[0].dim
    p = words[0].p
    bases = np.stack([w.basis.array for w in words])
    ii, jj = np.triu_indices(m, 1)
    out = np.empty(npairs, dtype=np.int64)
    for s in range(0, npairs, chunk):
        stacked = np.concatenate([bases[ii[s:s + chunk]], bases[jj[s:s + chunk]]], axis=1)
        out[s:s + chunk] = 2 * k - batch_rank(stacked, p)
    return out


def min_subspace_distance(code: GrassmannianCode,
                          pair_guard: int = PAIR_GUARD) -> int:
    """Minimum subspace distance by full pairwise scan; caches code.d."""
    if code.M < 2:
        raise ValueError("minimum distance needs at least two words")
    inters = pairwise_intersection_dims(code.words, pair_guard)
    d = 2 * (code.k - int(inters.max()))
    code.d = d
    return d


def code_params(code: GrassmannianCode,
                pair_guard: int = PAIR_GUARD) -> tuple[int, int, int, int]:
    """(n, M, d, k) with M and d recomputed from scratch.

    Raises if a cached minimum distance disagrees with the recomputation.
    """
    if code.M < 2:
        raise ValueError("parameters need at least two words")
    m = len(set(code.words))
    cached = code.d
    inters = pairwise_intersection_dims(code.words, pair_guard)
    d = 2 * (code.k - int(inters.max()))
    if cached is not None and cached != d:
        raise ValueError(f"cached minimum distance {cached} != recomputed {d}")
    code.d = d
    return (code.n, m, d, code.k)


def lift_code(code: RankMetricCode, pair_guard: int = PAIR_GUARD) -> GrassmannianCode:
    """Row spaces of the lifted words (I_k | A), as a Grassmannian code.

    For a linear [k x l, rho, delta] input the result is a
    (k + l, p^rho, 2*delta, k) code; both the size and the minimum distance
    are verified by direct pairwise computation before returning.
    """
    if not code.linear:
        raise ValueError("lifting is defined here for linear rank-metric codes")
    delta = code.delta if len(code.words) > 1 else None
    words = [span(w.lift()) for w in code.words]
    n = code.nrows + code.ncols
    claimed = {
        "n": n,
        "M": code.p**code.rho,
        "d": None if delta is None else 2 * delta,
        "k": code.nrows,
    }
    lifted = GrassmannianCode(
        words,
        provenance={"construction": "lifted_rank_metric_code", "claimed": claimed},
    )
    if lifted.M != claimed["M"]:
        raise RuntimeError(f"lift produced {lifted.M} words, expected {claimed['M']}")
    if delta is not None:
        d = min_subspace_distance(lifted, pair_guard)
        if d != claimed["d"]:
            raise RuntimeError(f"lifted code distance {d} != 2*delta = {claimed['d']}")
    return lifted


def optimal_code_size(p: int, r: int) -> int:
    """(p^(2r+2) - 1) / (p^2 - 1), the anticode bound at d=4, k=2."""
    return (p ** (2 * r + 2) - 1) // (p**2 - 1)


def anticode_optimal_code(p: int, r: int, variant: str = "O",
                          pair_guard: int = PAIR_GUARD) -> GrassmannianCode:
    """The (2r+2, (p^(2r+2)-1)/(p^2-1), 4, 2) code over GF(p).

    Words are the lifted variant images of (GF(p^2))^i for i = 1..r, each
    generator prepended with 2(r-i) zero columns to reach length 2r+2, plus
    the single subspace spanned by (0 | I_2).  Requires a prime p with
    p % 5 in {2, 3}.  Size, minimum distance 4, and pairwise-trivial
    intersections are all verified by direct computation before returning.
    """
    require_construction_prime(p)
    if r < 1:
        raise ValueError("r must be >= 1")
    n = 2 * r + 2
    m_claim = optimal_code_size(p, r)
    npairs = m_claim * (m_claim - 1) // 2
    if npairs > pair_guard:
        raise ValueError(
            f"M={m_claim} means {npairs} verification pairs, over the guard "
            f"({pair_guard}); raise the guard to force the construction"
        )
    words: list[Subspace] = []
    for i in range(1, r + 1):
        image = build_image_code(p, i, variant)
        pad = MatrixFp.zeros(2, 2 * (r - i), p)
        eye = MatrixFp.identity(2, p)
        for a in image.words:
            words.append(span(hstack([pad, eye, a])))
    words.append(span(zero_identity(2, r, p)))
    code = GrassmannianCode(
        words,
        provenance={
            "construction": "anticode_optimal_union",
            "p": p,
            "r": r,
            "variant": variant,
            "claimed": {"n": n, "M": m_claim, "d": 4, "k": 2},
        },
    )
    if code.M != m_claim:
        raise RuntimeError(f"built {code.M} words, expected {m_claim}")
    inters = pairwise_intersection_dims(code.words, pair_guard)
    if int(inters.max()) != 0:
        raise RuntimeError("some pair of words has a nontrivial intersection")
    code.d = 2 * (code.k - int(inters.max()))
    if code.d != 4:
        raise RuntimeError(f"minimum distance {code.d} != 4")
    return code


def dual_code(code: GrassmannianCode, pair_guard: int = PAIR_GUARD) -> GrassmannianCode:
    """Orthogonal complements of every word, distance recomputed pairwise.

    Size is preserved and dimension becomes n - k; the minimum distance is
    verified to match the original whenever the original carries one.
    """
    words = [dual_subspace(w) for w in code.words]
    claimed = {
        "n": code.n,
        "M": code.M,
        "d": code.d,
        "k": code.n - code.k,
    }
    out = GrassmannianCode(
        words,
        provenance={
            "construction": "dual",
            "of": code.provenance.get("construction"),
            "claimed": claimed,
        },
    )
    if out.M != code.M:
        raise RuntimeError("duals collided; size not preserved")
    if out.M >= 2:
        d = min_subspace_distance(out, pair_guard)
        if code.d is not None and d != code.d:
            raise RuntimeError(f"dual distance {d} != original {code.d}")
    return out


def compare_variant_codes(p: int, r: int,
                          pair_guard: int = PAIR_GUARD) -> dict:
    """Set relationship between the two variant constructions at (p, r).

    Reports only; neither equality nor difference is asserted anywhere.
    """
    code_o = anticode_optimal_code(p, r, "O", pair_guard)
    code_e = anticode_optimal_code(p, r, "E", pair_guard)
    set_o, set_e = code_o.word_set(), code_e.word_set()
    return {
        "identical": set_o == set_e,
        "only_O": sorted(repr(w) for w in set_o - set_e),
        "only_E": sorted(repr(w) for w in set_e - set_o),
    }
