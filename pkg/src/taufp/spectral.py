"""Spectral radii of quivers and exact integer linear algebra around them.

Everything here is deterministic: spectral radii come from shifted power
iteration with Collatz-Wielandt bracketing on strongly connected blocks,
characteristic polynomials are computed exactly over Python integers, and
definiteness of integer Gram matrices is decided by exact congruence
elimination over rationals (the positive-semidefinite-but-singular cases
are knife edges that floating point gets wrong).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConsistencyError
from .quiver import Quiver

__all__ = [
    "IntPolynomial",
    "SymIntMatrix",
    "Definiteness",
    "char_poly",
    "largest_real_root",
    "spectral_radius",
    "dynkin_rho",
    "bn_family_char_polys",
    "gram_matrix",
    "definiteness",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial(
            tuple((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(m))
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                body = x if mag == 1 else f"{mag}{x}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms)


ONE = IntPolynomial((1,))
X_MINUS_1 = IntPolynomial((-1, 1))


def char_poly(q: Quiver) -> IntPolynomial:
    """det(xI - M(Q)) over exact integers via Faddeev-LeVerrier.

    The empty quiver gives the constant polynomial 1.
    """
    n = q.n
    if n == 0:
        return ONE
    a = [[int(x) for x in row] for row in q.adj.tolist()]
    m = [row[:] for row in a]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    c = 1
    for k in range(1, n + 1):
        if k > 1:
            # m <- a @ (m + c I)
            for i in range(n):
                m[i][i] += c
            m = [
                [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
        tr = sum(m[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ConsistencyError("Faddeev-LeVerrier trace not divisible, nonintegral input?")
        coeffs[n - k] = c
    return IntPolynomial(tuple(coeffs))


def _poly_derivative(p: list[Fraction]) -> list[Fraction]:
    return [p[i] * i for i in range(1, len(p))]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, cb in enumerate(b):
            a[shift + i] -= f * cb
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b and any(b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a and a[-1] != 1:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _square_free(p: IntPolynomial) -> list[Fraction]:
    fr = [Fraction(c) for c in p.coeffs]
    der = _poly_derivative(fr)
    if not der:
        return fr
    g = _poly_gcd(fr, der)
    if len(g) <= 1:
        return fr
    q, r = _poly_divmod(fr, g)
    if any(r):
        raise ConsistencyError("square-free division left a remainder")
    return q


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _poly_derivative(p)]
    while chain[-1] and any(chain[-1]):
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-c for c in r])
    return chain


def _eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def largest_real_root(p: IntPolynomial, tol: float = 1e-12) -> float:
    """Largest real root of an integer polynomial, isolated by Sturm bisection.

    Exact rational arithmetic throughout; requires at least one real root.
    """
    if p.degree <= 0:
        raise ValueError("constant polynomial has no roots")
    sf = _square_free(p)
    chain = _sturm_chain(sf)
    bound = Fraction(1) + max(abs(Fraction(c, p.coeffs[-1])) for c in p.coeffs[:-1])
    lo, hi = -bound, bound
    if _sign_variations(chain, lo) - _sign_variations(chain, hi) < 1:
        raise ValueError("polynomial has no real roots")
    # shrink to the largest root: keep at least one root in (lo, hi]
    while hi - lo > Fraction(tol).limit_denominator(10**18) / 2:
        mid = (lo + hi) / 2
        if _sign_variations(chain, mid) - _sign_variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _tarjan_scc(adj: np.ndarray) -> list[list[int]]:
    """Strongly connected components, iterative Tarjan."""
    n = adj.shape[0]
    succ = [np.nonzero(adj[i])[0].tolist() for i in range(n)]
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                onstack[v] = True
            advanced = False
            for k in range(pi, len(succ[v])):
                w = succ[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if onstack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _power_radius(block: np.ndarray, tol: float, max_iter: int = 200000) -> float:
    """rho of a strongly connected nonnegative integer block.

    Iterates B = block + I (primitive: positive diagonal) from the all-ones
    vector; min_i (Bx)_i/x_i and max_i (Bx)_i/x_i bracket rho(B), and the
    bracket tightens to below tol for primitive B.
    """
    b = block.astype(np.float64) + np.eye(block.shape[0])
    x = np.ones(block.shape[0], dtype=np.float64)
    for _ in range(max_iter):
        y = b @ x
        ratios = y / x
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo < tol:
            return (lo + hi) / 2.0 - 1.0
        x = y / y.max()
    raise ConsistencyError("power iteration failed to converge")


def spectral_radius(q: Quiver, tol: float = 1e-12, verify: bool = False) -> float:
    """Largest absolute eigenvalue of the adjacency matrix, within tol.

    The matrix is split into strongly connected components; acyclic parts
    contribute 0 and each nontrivial component is handled by shifted power
    iteration.  With verify=True the result is recomputed independently via
    exact characteristic-polynomial root isolation and the two must agree
    within 10*tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if q.n == 0:
        return 0.0
    rho = 0.0
    for comp in _tarjan_scc(q.adj):
        if len(comp) == 1:
            v = comp[0]
            rho = max(rho, float(q.adj[v, v]))
            continue
        block = q.adj[np.ix_(comp, comp)]
        rho = max(rho, _power_radius(block, tol))
    if verify:
        exact = largest_real_root(char_poly(q), tol=min(tol, 1e-13))
        exact = max(exact, 0.0)  # Perron root of a nonnegative matrix
        if abs(exact - rho) > 10 * tol:
            raise ConsistencyError(
                f"spectral radius mismatch: power iteration {rho!r} vs root isolation {exact!r}"
            )
    return rho


_E_COXETER = {6: 12, 7: 18, 8: 30}


def _check_type_rank(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family)
    if not ok:
        raise ValueError(f"invalid Dynkin type {family}{rank}")


def dynkin_rho(family: str, rank: int, minimal: bool = True) -> float:
    """Closed-form spectral radius of the Gabriel quiver of Pi(C, D).

    minimal=True is the c = 1 symmetrizer column; otherwise every vertex
    carries a loop and the radius shifts accordingly.
    """
    _check_type_rank(family, rank)
    n = rank
    if minimal:
        if family == "A":
            return 2 * math.cos(math.pi / (n + 1))
        if family == "B":
            return 1 + 2 * math.cos(2 * math.pi / (2 * n + 1))
        if family == "C":
            return 2 * math.cos(math.pi / (2 * n + 1))
        if family == "D":
            return 2 * math.cos(math.pi / (2 * (n - 1)))
        if family == "E":
            return 2 * math.cos(math.pi / _E_COXETER[n])
        if family == "F":
            return (1 + math.sqrt(13)) / 2
        return (1 + math.sqrt(5)) / 2  # G2
    if family == "D":
        return 1 + 2 * math.cos(math.pi / (2 * (n - 1)))
    if family == "E":
        return 1 + 2 * math.cos(math.pi / _E_COXETER[n])
    # A, B, C, F4, G2 all collapse onto the A_n shape plus loops
    return 1 + 2 * math.cos(math.pi / (n + 1))


def _bn_quiver(n: int) -> Quiver:
    """Double path on n vertices with loops at 1..n-1 (none for n = 1)."""
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        adj[i, i + 1] = adj[i + 1, i] = 1
        adj[i, i] = 1
    return Quiver([str(i + 1) for i in range(n)], adj)


def bn_family_char_polys(n_max: int, tol: float = 1e-9) -> list[IntPolynomial]:
    """Characteristic polynomials f_1..f_{n_max} of the B-type quiver family.

    Checks the three-term recurrence f_{n+1} = (x-1) f_n - f_{n-1} exactly
    (anchored at f_0 = 1) and that the real roots of f_n are
    1 + 2 cos(2k pi / (2n+1)), k = 1..n, within tol.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    polys = [char_poly(_bn_quiver(n)) for n in range(1, n_max + 1)]
    prev = ONE
    for n in range(1, n_max):
        expected = X_MINUS_1 * polys[n - 1] - prev
        if expected != polys[n]:
            raise ConsistencyError(f"B-type recurrence fails at n = {n + 1}")
        prev = polys[n - 1]
    for n, f in enumerate(polys, start=1):
        roots = np.roots(list(reversed(f.coeffs)))
        if np.abs(roots.imag).max() > tol:
            raise ConsistencyError(f"nonreal root in f_{n}")
        got = np.sort(roots.real)
        want = np.sort([1 + 2 * math.cos(2 * k * math.pi / (2 * n + 1)) for k in range(1, n + 1)])
        if np.abs(got - want).max() > tol:
            raise ConsistencyError(f"root set of f_{n} differs from closed form")
    return polys


@dataclass(frozen=True)
class SymIntMatrix:
    """Symmetric matrix of exact integers (tuple of row tuples)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, vec) -> list:
        """Exact matrix-vector product (accepts ints or Fractions)."""
        if len(vec) != self.n:
            raise ValueError("dimension mismatch")
        return [sum(self.rows[i][j] * vec[j] for j in range(self.n)) for i in range(self.n)]


@dataclass(frozen=True)
class Definiteness:
    """Outcome of exact definiteness classification.

    tag is one of "positive_definite", "psd_singular", "indefinite";
    kernel_basis is nonempty exactly in the psd_singular case and its
    vectors satisfy G v = 0 exactly.
    """

    tag: str
    kernel_basis: tuple[tuple[Fraction, ...], ...] = ()

    @property
    def is_positive_definite(self) -> bool:
        return self.tag == "positive_definite"

    @property
    def is_psd_singular(self) -> bool:
        return self.tag == "psd_singular"

    @property
    def is_indefinite(self) -> bool:
        return self.tag == "indefinite"


def gram_matrix(delta: Quiver) -> SymIntMatrix:
    """Gram matrix on sink coordinates of the bipartite form of a quiver.

    For a bipartite quiver (every vertex a pure source or a pure sink) the
    quadratic form 4 sum_j x_j^2 - sum_i (sum_j a_ij x_j)^2 on the sinks has
    Gram matrix 4I - A^T A, where A is the sources-by-sinks arrow count
    matrix.  Vertices with no outgoing arrows count as sinks, so an isolated
    vertex contributes a diagonal 4.
    """
    n = delta.n
    indeg = delta.adj.sum(axis=0)
    outdeg = delta.adj.sum(axis=1)
    bad = [delta.labels[i] for i in range(n) if indeg[i] > 0 and outdeg[i] > 0]
    if bad:
        raise ValueError(f"quiver is not bipartite, mixed vertices: {bad}")
    sinks = [i for i in range(n) if outdeg[i] == 0]
    sources = [i for i in range(n) if outdeg[i] > 0]
    a = delta.adj[np.ix_(sources, sinks)].astype(object)
    g = 4 * np.eye(len(sinks), dtype=object) - a.T @ a
    return SymIntMatrix(tuple(tuple(int(x) for x in row) for row in g))


def _nullspace(g: SymIntMatrix) -> tuple[tuple[Fraction, ...], ...]:
    n = g.n
    rows = [[Fraction(x) for x in r] for r in g.rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def definiteness(g: SymIntMatrix) -> Definiteness:
    """Exact classification by fraction-free symmetric (congruence) elimination.

    Sylvester's law of inertia justifies reading the signature off the
    pivots; a zero diagonal with a nonzero off-diagonal entry in the same
    row witnesses indefiniteness via a 2x2 principal minor.
    """
    n = g.n
    m = [[Fraction(x) for x in row] for row in g.rows]
    active = list(range(n))
    zero_rows = 0
    while active:
        piv = next((i for i in active if m[i][i] > 0), None)
        if piv is None:
            if any(m[i][i] < 0 for i in active):
                return Definiteness("indefinite")
            # all remaining diagonals are zero
            for i in active:
                if any(m[i][j] != 0 for j in active if j != i):
                    return Definiteness("indefinite")
            zero_rows += len(active)
            break
        active.remove(piv)
        d = m[piv][piv]
        for i in active:
            f = m[i][piv] / d
            if f == 0:
                continue
            # Schur complement on the active block; the pivot row/column are
            # never read again once piv leaves the active set
            for j in active:
                m[i][j] -= f * m[piv][j]
    if zero_rows == 0:
        return Definiteness("positive_definite")
    kernel = _nullspace(g)
    if len(kernel) != zero_rows:
        raise ConsistencyError("kernel dimension disagrees with elimination")
    for v in kernel:
        if any(x != 0 for x in g.apply(v)):
            raise ConsistencyError("kernel vector fails G v = 0")
    return Definiteness("psd_singular", kernel)
