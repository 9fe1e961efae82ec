"""PSD completion of graph-patterned partial matrices, with certificates of failure.

A partial symmetric matrix specifies the diagonal and one value per edge of a
pattern graph. Chordal patterns complete constructively whenever every clique
block is PSD, with completion rank bounded by the clique number. Non-chordal
patterns go through a feasibility search; failures are certified, when
possible, by a cycle extreme ray pairing negatively with the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import NotChordal, NotPartiallyPositive, PatternMismatch
from .graphs import (
    Graph,
    clique_tree,
    edge_key,
    induced_cycles_of_length,
    is_chordal,
    maximal_cliques,
    rooted_clique_order,
    shortest_induced_cycle,
)
from .linalg import (
    DEFAULT_TOL,
    GRAM_TOL,
    affine_psd_feasibility,
    align_gram,
    gram_factor,
    numeric_rank,
    psd_min_eig,
)
from .rays import ExtremeRayCertificate, cycle_extreme_ray, embed_certificate, pair

__all__ = [
    "PartialSymmetricMatrix",
    "CompletionReport",
    "PDExistenceVerdict",
    "partially_positive",
    "completion_residual",
    "chordal_complete",
    "complete_or_certify",
    "pd_completion_exists",
]


@dataclass(frozen=True)
class PartialSymmetricMatrix:
    """Diagonal plus one value per edge of a pattern graph; all entries finite."""

    n: int
    diag: np.ndarray
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float).reshape(-1)
        if diag.shape != (self.n,):
            raise PatternMismatch(f"diagonal length {diag.shape[0]} != n={self.n}")
        if not np.all(np.isfinite(diag)):
            raise PatternMismatch("diagonal entries must be finite")
        canon = {}
        for (i, j), a in self.entries.items():
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise PatternMismatch(f"entry index ({i},{j}) invalid for n={self.n}")
            a = float(a)
            if not np.isfinite(a):
                raise PatternMismatch(f"entry ({i},{j}) must be finite")
            key = edge_key(i, j)
            if key in canon and canon[key] != a:
                raise PatternMismatch(f"conflicting values for entry {key}")
            canon[key] = a
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "entries", canon)

    @classmethod
    def from_full(cls, g: Graph, a) -> "PartialSymmetricMatrix":
        """Project a full symmetric matrix onto the pattern of g."""
        a = np.asarray(a, dtype=float)
        if a.shape != (g.n, g.n):
            raise PatternMismatch(f"matrix shape {a.shape} != ({g.n},{g.n})")
        entries = {(i, j): float(a[i, j]) for i, j in g.sorted_edges()}
        return cls(g.n, np.diagonal(a).copy(), entries)

    def validate_against(self, g: Graph) -> None:
        """Require entry keys to coincide exactly with the pattern's edge set."""
        if self.n != g.n:
            raise PatternMismatch(f"partial matrix n={self.n} != pattern n={g.n}")
        keys = set(self.entries)
        if keys != g.edges:
            extra = sorted(keys - g.edges)
            missing = sorted(g.edges - keys)
            raise PatternMismatch(
                f"entries do not match pattern edges (extra={extra[:4]}, missing={missing[:4]})"
            )

    def scatter(self, fill: float = 0.0) -> np.ndarray:
        """Dense symmetric matrix with unspecified slots set to fill."""
        a = np.full((self.n, self.n), float(fill))
        np.fill_diagonal(a, self.diag)
        for (i, j), v in self.entries.items():
            a[i, j] = a[j, i] = v
        return a

    def mask(self) -> np.ndarray:
        """Boolean matrix marking the specified slots."""
        m = np.zeros((self.n, self.n), dtype=bool)
        np.fill_diagonal(m, True)
        for i, j in self.entries:
            m[i, j] = m[j, i] = True
        return m

    def block(self, vertices) -> np.ndarray:
        """Fully specified principal submatrix on a clique's vertices."""
        vs = list(vertices)
        k = len(vs)
        b = np.empty((k, k))
        for s, i in enumerate(vs):
            b[s, s] = self.diag[i]
            for t in range(s + 1, k):
                key = edge_key(i, vs[t])
                if key not in self.entries:
                    raise PatternMismatch(f"block pair {key} is unspecified")
                b[s, t] = b[t, s] = self.entries[key]
        return b

    def max_abs(self) -> float:
        vals = [abs(float(v)) for v in self.entries.values()]
        vals.append(float(np.max(np.abs(self.diag))) if self.n else 0.0)
        return max(vals)

    def with_diag(self, diag) -> "PartialSymmetricMatrix":
        return PartialSymmetricMatrix(self.n, np.asarray(diag, dtype=float),
                                      dict(self.entries))


@dataclass(frozen=True)
class CompletionReport:
    """Outcome of complete_or_certify.

    verdict is "completed", "infeasible" or "undetermined". Infeasible
    reports carry either an extreme-ray certificate with its (negative)
    pairing value, or the violating clique of a non-PSD block together with
    that block's smallest eigenvalue as the separating value.
    """

    verdict: str
    completion: Optional[np.ndarray] = None
    rank: Optional[int] = None
    certificate: Optional[ExtremeRayCertificate] = None
    separating_value: Optional[float] = None
    violating_clique: Optional[tuple] = None


@dataclass(frozen=True)
class PDExistenceVerdict:
    """Outcome of pd_completion_exists: answer "yes", "no" or "undetermined".

    Yes carries a positive definite witness. No carries the failed condition:
    "clique_block" (a fully specified block is not PD) or "rank_bound" (no
    PSD completion exists at all, certified by a negative pairing).
    """

    answer: str
    witness: Optional[np.ndarray] = None
    failed_condition: Optional[str] = None


def completion_residual(partial: PartialSymmetricMatrix, a) -> float:
    """Largest absolute deviation of a matrix from the specified data."""
    a = np.asarray(a, dtype=float)
    dev = float(np.max(np.abs(np.diagonal(a) - partial.diag)))
    for (i, j), v in partial.entries.items():
        dev = max(dev, abs(float(a[i, j]) - v))
    return dev


def _clique_block_scan(g: Graph, partial: PartialSymmetricMatrix, strict: bool,
                       tol: float):
    """Smallest-eigenvalue scan over maximal clique blocks.

    Returns (ok, clique, min_eig) where clique/min_eig describe the first
    violating block (or the globally smallest eigenvalue when ok).
    """
    worst_clique = None
    worst = np.inf
    for K in maximal_cliques(g):
        b = partial.block(K)
        lam = psd_min_eig(b)
        scale = 1.0 + float(np.max(np.abs(b)))
        bad = lam <= tol * scale if strict else lam < -tol * scale
        if bad:
            return False, K, lam
        if lam < worst:
            worst = lam
            worst_clique = K
    return True, worst_clique, worst


def partially_positive(g: Graph, partial: PartialSymmetricMatrix,
                       strict: bool = False, tol: float = DEFAULT_TOL) -> bool:
    """True iff every fully specified clique block is PSD (strict: PD)."""
    partial.validate_against(g)
    ok, _, _ = _clique_block_scan(g, partial, strict, tol)
    return ok


def chordal_complete(g: Graph, partial: PartialSymmetricMatrix,
                     tol: float = DEFAULT_TOL):
    """PSD completion of a partially positive matrix on a chordal pattern.

    Walks the clique tree from the largest clique outward, keeping one Gram
    vector per completed vertex. Each new clique block is factored and its
    separator vectors rotated onto the committed ones (the Gram matrices
    agree, so the alignment is exact); unspecified entries become inner
    products. The result is PSD with rank at most the clique number.

    Returns (completion, rank).
    """
    partial.validate_against(g)
    chordal, _ = is_chordal(g)
    if not chordal:
        raise NotChordal("pattern must be chordal for direct completion")
    ok, clique, lam = _clique_block_scan(g, partial, strict=False, tol=tol)
    if not ok:
        raise NotPartiallyPositive(
            f"clique block {clique} has eigenvalue {lam:.3e}", clique=clique, min_eig=lam
        )

    tree = clique_tree(g)
    order, _ = rooted_clique_order(tree)
    vecs = {}
    r = 0
    for idx in order:
        K = tree.cliques[idx]
        fac = gram_factor(partial.block(K), tol)
        r_new = max(r, fac.rank)
        if r_new > r:
            for v in vecs:
                vecs[v] = np.append(vecs[v], np.zeros(r_new - r))
            r = r_new
        q = fac.padded(r)
        sep = [t for t, v in enumerate(K) if v in vecs]
        new = [t for t, v in enumerate(K) if v not in vecs]
        p_sep = np.array([vecs[K[t]] for t in sep]).reshape(len(sep), r)
        rot = align_gram(p_sep, q[sep], tol=GRAM_TOL)
        for t in new:
            vecs[K[t]] = rot @ q[t]
    basis = np.array([vecs[v] for v in range(g.n)]).reshape(g.n, r)
    a = basis @ basis.T
    a = 0.5 * (a + a.T)
    return a, numeric_rank(a, tol)


def _cycle_certificate_scan(g: Graph, partial: PartialSymmetricMatrix,
                            cycle_limit: int = 64):
    """Most negative pairing over embedded shortest-cycle certificates.

    Tries every rotation and reflection of each enumerated shortest chordless
    cycle. Returns (best_value, best_certificate) or (None, None) when the
    graph is chordal.
    """
    cyc = shortest_induced_cycle(g)
    if cyc is None:
        return None, None
    m = len(cyc)
    base = cycle_extreme_ray(m)
    best_val, best_cert = np.inf, None
    for cycle in induced_cycles_of_length(g, m, limit=cycle_limit):
        vs = list(cycle.vertices)
        layouts = [vs[i:] + vs[:i] for i in range(m)]
        layouts += [list(reversed(lay)) for lay in layouts]
        for lay in layouts:
            cert = embed_certificate(base, lay, g.n)
            val = pair(cert, g, partial)
            if val < best_val:
                best_val, best_cert = val, cert
    return best_val, best_cert


def complete_or_certify(g: Graph, partial: PartialSymmetricMatrix,
                        tol: float = DEFAULT_TOL, max_iter: int = 10000,
                        cycle_limit: int = 64) -> CompletionReport:
    """Complete the data to a PSD matrix or certify that no completion exists.

    Chordal patterns complete constructively. Otherwise an alternating
    projection search runs first; if it fails, shortest-cycle extreme rays
    are paired with the data and a strictly negative pairing certifies
    infeasibility. With neither a witness nor a certificate the verdict is
    "undetermined" (the search is allowed to give up).
    """
    partial.validate_against(g)
    ok, clique, lam = _clique_block_scan(g, partial, strict=False, tol=tol)
    if not ok:
        return CompletionReport(
            verdict="infeasible",
            separating_value=lam,
            violating_clique=tuple(clique),
        )
    chordal, _ = is_chordal(g)
    if chordal:
        a, rank = chordal_complete(g, partial, tol)
        return CompletionReport(verdict="completed", completion=a, rank=rank)

    witness = affine_psd_feasibility(g, partial, shift=0.0, max_iter=max_iter)
    if witness is not None:
        return CompletionReport(
            verdict="completed", completion=witness, rank=numeric_rank(witness, tol)
        )

    best_val, best_cert = _cycle_certificate_scan(g, partial, cycle_limit)
    if best_val is not None and best_val < -tol * (1.0 + partial.max_abs()):
        return CompletionReport(
            verdict="infeasible", certificate=best_cert, separating_value=best_val
        )
    return CompletionReport(verdict="undetermined")


def pd_completion_exists(g: Graph, partial: PartialSymmetricMatrix,
                         tol: float = DEFAULT_TOL, max_iter: int = 10000) -> PDExistenceVerdict:
    """Decide whether the data admits a positive definite completion.

    A PD completion exists iff (a) every fully specified block is PD and
    (b) some PSD completion has rank above n - m + 2, where m is the length
    of a shortest chordless cycle; (b) is vacuous on chordal patterns.
    Chordal patterns get a constructed witness. Non-chordal patterns are
    probed by bisection on the eigenvalue floor; a negative certificate
    pairing proves "no", and an inconclusive search answers "undetermined".
    """
    partial.validate_against(g)
    ok, clique, lam = _clique_block_scan(g, partial, strict=True, tol=tol)
    if not ok:
        return PDExistenceVerdict(answer="no", failed_condition="clique_block")

    chordal, _ = is_chordal(g)
    if chordal:
        # Shift the diagonal down by half the worst block margin, complete,
        # then shift back up: a PD witness with margin s.
        s = 0.5 * lam
        shifted = partial.with_diag(partial.diag - s)
        a, _ = chordal_complete(g, shifted, tol)
        witness = a + s * np.eye(g.n)
        return PDExistenceVerdict(answer="yes", witness=witness)

    best_val, _ = _cycle_certificate_scan(g, partial)
    if best_val is not None and best_val < -tol * (1.0 + partial.max_abs()):
        return PDExistenceVerdict(answer="no", failed_condition="rank_bound")

    m = len(shortest_induced_cycle(g))
    lo, hi = 0.0, float(np.max(partial.diag))
    witness = None
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        cand = affine_psd_feasibility(g, partial, shift=mid, max_iter=max_iter)
        if cand is not None:
            witness = cand
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * (1.0 + hi):
            break
    if witness is not None and psd_min_eig(witness) > 0.0 and \
            numeric_rank(witness, tol) > g.n - m + 2:
        return PDExistenceVerdict(answer="yes", witness=witness)
    return PDExistenceVerdict(answer="undetermined")
