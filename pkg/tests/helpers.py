"""Shared test machinery: the exact quiver-representation oracle and corpora.

The oracle knows nothing about the closed-form Hom/Ext counts.  It builds
each uniserial as an explicit representation of the linear/cyclic quiver
(basis vector t of M(i;l) sits at vertex i+t, the arrow u -> u-1 sends t to
t-1), sets up the commutation linear system for Hom(M, N) over the
rationals and reads dimensions off exact Gaussian elimination.  Ext^1 is
the cokernel of restriction Hom(P0, N) -> Hom(Omega M, N) along the
inclusion of the syzygy.

Hom spaces over the bound quiver algebra equal those over the path algebra
of the same shape (the relations already act by zero on both modules), so
results are cached per (shape, n, module data) and shared across Kupisch
series.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from taufp.nakayama import (
    NakayamaAlgebra,
    Uniserial,
    make_algebra,
    module,
    projective_module,
    is_projective,
    top_vertex,
)


def _vertex(shape: str, n: int, v: int) -> int:
    return (v - 1) % n + 1 if shape == "cyclic" else v


def _basis_vertices(shape: str, n: int, socle: int, length: int) -> list[int]:
    return [_vertex(shape, n, socle + t) for t in range(length)]


def _arrows(shape: str, n: int) -> list[tuple[int, int]]:
    """Arrows (source, target) of the shape quiver: u -> u-1, wrapping if cyclic."""
    arrows = [(u, u - 1) for u in range(2, n + 1)]
    if shape == "cyclic":
        arrows.append((1, n) if n > 1 else (1, 1))
    return arrows


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _nullspace_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    if not rows:
        rows = [[Fraction(0)] * ncols]
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


@lru_cache(maxsize=None)
def _hom_solution_basis(shape, n, a, k, b, l):
    """Basis of Hom(M(a;k), M(b;l)) as coefficient vectors x[(s, t)]."""
    mverts = _basis_vertices(shape, n, a, k)
    nverts = _basis_vertices(shape, n, b, l)
    unknowns = [
        (s, t) for s in range(k) for t in range(l) if mverts[s] == nverts[t]
    ]
    col = {st: c for c, st in enumerate(unknowns)}
    eqs: list[list[Fraction]] = []
    for (u, v) in _arrows(shape, n):
        # commutation f_v(M_arrow(s)) = N_arrow(f_u(s)) for s at vertex u,
        # matched against each basis vector r of N at vertex v
        for s in range(k):
            if mverts[s] != u:
                continue
            for r in range(l):
                if nverts[r] != v:
                    continue
                row = [Fraction(0)] * len(unknowns)
                nonzero = False
                if s >= 1 and mverts[s - 1] == v and (s - 1, r) in col:
                    row[col[(s - 1, r)]] += 1
                    nonzero = True
                if r + 1 < l and nverts[r + 1] == u and (s, r + 1) in col:
                    row[col[(s, r + 1)]] -= 1
                    nonzero = True
                if nonzero:
                    eqs.append(row)
    basis = _nullspace_basis(eqs, len(unknowns))
    return tuple(tuple(v) for v in basis), tuple(unknowns)


def hom_oracle(a: NakayamaAlgebra, m: Uniserial, n_: Uniserial) -> int:
    basis, _ = _hom_solution_basis(a.shape, a.n, m.socle, m.length, n_.socle, n_.length)
    return len(basis)


def _matrix_rank(vectors: list[list[Fraction]]) -> int:
    if not vectors:
        return 0
    _, pivots = _rref([list(v) for v in vectors])
    return len(pivots)


@lru_cache(maxsize=None)
def _ext_oracle_cached(shape, n, a, k, p0_socle, p0_len, b, l):
    homs_p0, unknowns_p0 = _hom_solution_basis(shape, n, p0_socle, p0_len, b, l)
    omega_len = p0_len - k
    homs_omega, unknowns_omega = _hom_solution_basis(shape, n, p0_socle, omega_len, b, l)
    col_omega = {st: c for c, st in enumerate(unknowns_omega)}
    restricted = []
    for g in homs_p0:
        v = [Fraction(0)] * len(unknowns_omega)
        for (s, t), val in zip(unknowns_p0, g):
            if s < omega_len:
                v[col_omega[(s, t)]] = val
        restricted.append(v)
    return len(homs_omega) - _matrix_rank(restricted)


def ext_oracle(a: NakayamaAlgebra, m: Uniserial, n_: Uniserial) -> int:
    """dim Ext^1(M, N) = dim coker(Hom(P0, N) -> Hom(Omega M, N))."""
    if is_projective(a, m):
        return 0
    p0 = projective_module(a, top_vertex(a, m))
    return _ext_oracle_cached(
        a.shape, a.n, m.socle, m.length, p0.socle, p0.length, n_.socle, n_.length
    )


# ---------------------------------------------------------------------------
# corpora


def linear_series(n_max: int = 4):
    """All valid linear Kupisch series with at most n_max vertices."""
    out = []

    def extend(series):
        out.append(tuple(series))
        if len(series) == n_max:
            return
        i = len(series) + 1
        for l in range(2, min(series[-1] + 1, i) + 1):
            extend(series + [l])

    extend([1])
    return out


def cyclic_series(n_max: int = 4, l_max: int = 8):
    """All valid cyclic Kupisch series: l_i >= 2, l_i <= l_{i-1} + 1 cyclically."""
    out = []
    for n in range(1, n_max + 1):
        for ls in itertools.product(range(2, l_max + 1), repeat=n):
            if all(ls[i] <= ls[i - 1] + 1 for i in range(n)):
                out.append(ls)
    return out


def nakayama_corpus(n_max: int = 4, l_max: int = 8):
    """Every connected Nakayama algebra with n <= n_max and l_i <= l_max."""
    algebras = [make_algebra("linear", s) for s in linear_series(n_max)]
    algebras += [make_algebra("cyclic", s) for s in cyclic_series(n_max, l_max)]
    return algebras


def random_quiver(rng, max_vertices=6, max_mult=2, loops=True):
    """Random small quiver for the spectral property suites."""
    import numpy as np
    from taufp.quiver import Quiver

    n = rng.integers(0, max_vertices + 1)
    density = rng.uniform(0.1, 0.6)
    adj = (rng.random((n, n)) < density) * rng.integers(1, max_mult + 1, size=(n, n))
    if not loops and n:
        np.fill_diagonal(adj, 0)
    return Quiver([f"v{i}" for i in range(n)], adj.astype(np.int64))
