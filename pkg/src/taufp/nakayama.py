"""Combinatorial module calculus of connected Nakayama algebras.

A connected Nakayama algebra is determined by its shape (linear or cyclic
Gabriel quiver, arrows j+1 -> j) and its Kupisch series, the lengths of the
indecomposable projectives P(i) = the projective with top S(i).  Every
indecomposable module is uniserial and written M(i; l) by socle vertex i
and length l, with top i + l - 1 (mod n when cyclic).  The AR translate
acts by a socle shift: tau M(i; l) = M(i-1; l) for non-projective M.

Hom dimensions come from the uniserial image count

    dim Hom(M(a;k), M(b;l)) = #{ j in [1, min(k,l)] : j = a + k - b },

congruence mod n in the cyclic case; Ext^1 comes from the projective
presentation 0 -> K -> P(top M) -> M -> 0.  Both closed forms are gated by
an exact linear-algebra oracle in the test suite before anything else here
is trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetError, ConsistencyError
from .lattice import FiniteLattice, from_covers
from .quiver import Quiver
from .spectral import spectral_radius

__all__ = [
    "NakayamaAlgebra",
    "Uniserial",
    "TauPair",
    "make_algebra",
    "projective_module",
    "indecomposables",
    "tau",
    "hom_dim",
    "ext_dim",
    "is_brick",
    "bricks",
    "is_tau_rigid_module",
    "is_tau_rigid_pair",
    "tau_tilting_pairs",
    "tau_tiltp_lattice",
    "semibricks",
    "ext_quiver",
    "fpdim_nakayama",
    "bongartz_completion",
    "self_ext_bound",
    "canonical_form",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 5


@dataclass(frozen=True)
class Uniserial:
    """Uniserial module M(socle; len); existence depends on the algebra."""

    socle: int
    length: int

    def __str__(self):
        return f"M({self.socle};{self.length})"


@dataclass(frozen=True)
class NakayamaAlgebra:
    """Connected Nakayama algebra given by shape and Kupisch series."""

    shape: str  # "linear" or "cyclic"
    kupisch: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.kupisch)

    @property
    def cyclic(self) -> bool:
        return self.shape == "cyclic"

    def vertex(self, v: int) -> int:
        """Normalize a vertex index to 1..n (cyclic identification)."""
        if self.cyclic:
            return (v - 1) % self.n + 1
        return v

    def proj_len(self, k: int) -> int:
        return self.kupisch[self.vertex(k) - 1]

    def __str__(self):
        return f"{self.shape}[{','.join(map(str, self.kupisch))}]"


def make_algebra(shape: str, kupisch) -> NakayamaAlgebra:
    """Validate a Kupisch series and build the algebra.

    linear: l_1 = 1 and 2 <= l_i <= min(l_{i-1} + 1, i) for i >= 2;
    cyclic: l_i >= 2 and l_i <= l_{i-1} + 1 for all i mod n.
    """
    if shape not in ("linear", "cyclic"):
        raise ValueError(f"shape must be 'linear' or 'cyclic', got {shape!r}")
    ls = tuple(int(x) for x in kupisch)
    if not ls:
        raise ValueError("Kupisch series is empty")
    n = len(ls)
    if shape == "linear":
        if ls[0] != 1:
            raise ValueError("linear Kupisch series must start with l_1 = 1")
        for i in range(1, n):
            if not 2 <= ls[i] <= ls[i - 1] + 1:
                raise ValueError(f"Kupisch violation at index {i + 1}: l = {ls[i]}")
            if ls[i] > i + 1:
                raise ValueError(f"Kupisch violation at index {i + 1}: l = {ls[i]} > {i + 1}")
    else:
        for i in range(n):
            if ls[i] < 2:
                raise ValueError(f"Kupisch violation at index {i + 1}: cyclic needs l >= 2")
            if ls[i] > ls[i - 1] + 1:  # i - 1 wraps to the end for i = 0
                raise ValueError(f"Kupisch violation at index {i + 1}: l = {ls[i]}")
    return NakayamaAlgebra(shape, ls)


def top_vertex(a: NakayamaAlgebra, m: Uniserial) -> int:
    return a.vertex(m.socle + m.length - 1)


def module_exists(a: NakayamaAlgebra, m: Uniserial) -> bool:
    if m.length < 1:
        return False
    if a.cyclic:
        return m.socle == a.vertex(m.socle) and m.length <= a.proj_len(top_vertex(a, m))
    top = m.socle + m.length - 1
    return 1 <= m.socle and top <= a.n and m.length <= a.kupisch[top - 1]


def module(a: NakayamaAlgebra, socle: int, length: int) -> Uniserial:
    """Normalized, existence-checked M(socle; length)."""
    m = Uniserial(a.vertex(socle), length)
    if not module_exists(a, m):
        raise ValueError(f"{m} does not exist over {a}")
    return m


def projective_module(a: NakayamaAlgebra, k: int) -> Uniserial:
    """P(k): the projective with top S(k), via the Kupisch series."""
    k = a.vertex(k)
    if not 1 <= k <= a.n:
        raise ValueError(f"vertex {k} out of range")
    return module(a, k - a.proj_len(k) + 1, a.proj_len(k))


def is_projective(a: NakayamaAlgebra, m: Uniserial) -> bool:
    return m.length == a.proj_len(top_vertex(a, m))


def indecomposables(a: NakayamaAlgebra) -> list[Uniserial]:
    """All uniserials, sorted by (socle, length); count is sum of the series."""
    out = []
    for t in range(1, a.n + 1):
        for l in range(1, a.kupisch[t - 1] + 1):
            out.append(module(a, t - l + 1, l))
    out.sort(key=lambda m: (m.socle, m.length))
    return out


def tau(a: NakayamaAlgebra, m: Uniserial) -> Uniserial | None:
    """AR translate: socle shift M(i;l) -> M(i-1;l); None on projectives."""
    _require(a, m)
    if is_projective(a, m):
        return None
    return module(a, m.socle - 1, m.length)


def _require(a: NakayamaAlgebra, m: Uniserial) -> None:
    if not module_exists(a, m):
        raise ValueError(f"{m} does not exist over {a}")


def hom_dim(a: NakayamaAlgebra, m: Uniserial, n_: Uniserial) -> int:
    """dim Hom(M, N): the number of admissible common image lengths."""
    _require(a, m)
    _require(a, n_)
    bound = min(m.length, n_.length)
    shift = m.socle + m.length - n_.socle
    if not a.cyclic:
        return 1 if 1 <= shift <= bound else 0
    n = a.n
    first = shift % n
    if first == 0:
        first = n
    if first > bound:
        return 0
    return (bound - first) // n + 1


def ext_dim(a: NakayamaAlgebra, m: Uniserial, n_: Uniserial) -> int:
    """dim Ext^1(M, N) via 0 -> K -> P(top M) -> M -> 0.

    Ext^1(M,N) = hom(K,N) - hom(P0,N) + hom(M,N); a negative value would
    mean the Hom formula is broken and raises.
    """
    _require(a, m)
    _require(a, n_)
    if is_projective(a, m):
        return 0
    t = top_vertex(a, m)
    p0 = projective_module(a, t)
    k = module(a, p0.socle, p0.length - m.length)
    val = hom_dim(a, k, n_) - hom_dim(a, p0, n_) + hom_dim(a, m, n_)
    if val < 0:
        raise ConsistencyError(f"Ext formula went negative on ({m}, {n_}) over {a}")
    return val


def is_brick(a: NakayamaAlgebra, m: Uniserial) -> bool:
    """Length criterion l <= n, cross-checked against End = k."""
    _require(a, m)
    flag = m.length <= a.n
    if flag != (hom_dim(a, m, m) == 1):
        raise ConsistencyError(f"brick criterion disagrees with End dimension on {m}")
    return flag


def bricks(a: NakayamaAlgebra) -> list[Uniserial]:
    return [m for m in indecomposables(a) if is_brick(a, m)]


def is_tau_rigid_module(a: NakayamaAlgebra, m: Uniserial) -> bool:
    """Projective or l < n, cross-checked against Hom(M, tau M) = 0."""
    _require(a, m)
    flag = is_projective(a, m) or m.length < a.n
    t = tau(a, m)
    if flag != ((0 if t is None else hom_dim(a, m, t)) == 0):
        raise ConsistencyError(f"tau-rigidity criterion disagrees on {m}")
    return flag


@dataclass(frozen=True)
class TauPair:
    """Basic pair (M, P): module summands plus projective vertices P(k)."""

    mods: frozenset[Uniserial]
    projs: frozenset[int]

    def name(self) -> str:
        ms = "+".join(str(m) for m in sorted(self.mods, key=lambda m: (m.socle, m.length)))
        ps = "+".join(f"P({k})" for k in sorted(self.projs))
        return f"{ms or '0'}|{ps or '0'}"

    def __str__(self):
        return self.name()


def is_tau_rigid_pair(a: NakayamaAlgebra, pair: TauPair) -> bool:
    """Hom(M, tau M) = 0 over all summand pairs and Hom(P(k), M) = 0."""
    for m in pair.mods:
        _require(a, m)
    for k in pair.projs:
        if a.vertex(k) != k or not 1 <= k <= a.n:
            raise ValueError(f"projective vertex {k} out of range")
    taus = {m: tau(a, m) for m in pair.mods}
    for m in pair.mods:
        for m2 in pair.mods:
            t = taus[m2]
            if t is not None and hom_dim(a, m, t) != 0:
                return False
    for k in pair.projs:
        pk = projective_module(a, k)
        for m in pair.mods:
            if hom_dim(a, pk, m) != 0:
                return False
    return True


def _check_budget(a: NakayamaAlgebra, max_n: int) -> None:
    if a.n > max_n:
        raise BudgetError(f"{a} has n = {a.n} > enumeration bound {max_n}")
    len_cap = max(2 * a.n, 8)
    if max(a.kupisch) > len_cap:
        raise BudgetError(f"{a} has a projective longer than the length cap {len_cap}")


@lru_cache(maxsize=None)
def _enumerate_pairs(a: NakayamaAlgebra) -> tuple[TauPair, ...]:
    n = a.n
    cands = [m for m in indecomposables(a) if is_tau_rigid_module(a, m)]
    c = len(cands)
    taus = [tau(a, m) for m in cands]
    compat = [[False] * c for _ in range(c)]
    for i in range(c):
        for j in range(c):
            ti, tj = taus[i], taus[j]
            ok = (tj is None or hom_dim(a, cands[i], tj) == 0) and (
                ti is None or hom_dim(a, cands[j], ti) == 0
            )
            compat[i][j] = ok
    projs_of = []  # per candidate: vertices k with Hom(P(k), M) = 0
    for m in cands:
        mask = 0
        for k in range(1, n + 1):
            if hom_dim(a, projective_module(a, k), m) == 0:
                mask |= 1 << k
        projs_of.append(mask)

    all_vertices = ((1 << (n + 1)) - 2)  # bits 1..n
    pairs: list[TauPair] = []

    def emit(chosen: list[int], vmask: int) -> None:
        need = n - len(chosen)
        verts = [k for k in range(1, n + 1) if (vmask >> k) & 1]
        if len(verts) < need:
            return
        mods = frozenset(cands[i] for i in chosen)
        for t in itertools.combinations(verts, need):
            pairs.append(TauPair(mods, frozenset(t)))

    def dfs(start: int, chosen: list[int], vmask: int) -> None:
        emit(chosen, vmask)
        if len(chosen) == n:
            return
        for i in range(start, c):
            if all(compat[i][j] for j in chosen):
                chosen.append(i)
                dfs(i + 1, chosen, vmask & projs_of[i])
                chosen.pop()

    dfs(0, [], all_vertices)
    pairs.sort(key=lambda p: p.name())
    return tuple(pairs)


def tau_tilting_pairs(a: NakayamaAlgebra, max_n: int = DEFAULT_MAX_N) -> list[TauPair]:
    """All basic tau-tilting pairs: tau-rigid pairs with |M| + |P| = n."""
    _check_budget(a, max_n)
    return list(_enumerate_pairs(a))


def _pair_geq(a: NakayamaAlgebra, x: TauPair, y: TauPair) -> bool:
    """x >= y iff Hom(M_y, tau M_x) = 0 and projs_x is a subset of projs_y."""
    if not x.projs <= y.projs:
        return False
    for m in x.mods:
        t = tau(a, m)
        if t is None:
            continue
        for m2 in y.mods:
            if hom_dim(a, m2, t) != 0:
                return False
    return True


@lru_cache(maxsize=None)
def _pair_lattice(a: NakayamaAlgebra) -> FiniteLattice:
    pairs = _enumerate_pairs(a)
    p = len(pairs)
    lower = [0] * p  # strict down-sets as bitmasks
    upper = [0] * p
    for i in range(p):
        for j in range(p):
            if i != j and _pair_geq(a, pairs[i], pairs[j]):
                lower[i] |= 1 << j
                upper[j] |= 1 << i
    for i in range(p):
        if lower[i] & upper[i]:
            raise ConsistencyError(f"tau-tilting order not antisymmetric over {a}")
    covers = []
    names = [pr.name() for pr in pairs]
    for i in range(p):
        down = lower[i]
        j = 0
        while down >> j:
            if (down >> j) & 1 and not (lower[i] & upper[j]):
                covers.append((names[i], names[j]))
            j += 1
    lat = from_covers(names, covers)
    top = TauPair(frozenset(projective_module(a, k) for k in range(1, a.n + 1)), frozenset())
    bot = TauPair(frozenset(), frozenset(range(1, a.n + 1)))
    if lat.maximum != top.name() or lat.minimum != bot.name():
        raise ConsistencyError(f"tau-tilting lattice extremes are wrong over {a}")
    return lat


def tau_tiltp_lattice(a: NakayamaAlgebra, max_n: int = DEFAULT_MAX_N) -> FiniteLattice:
    """The lattice of tau-tilting pairs; maximum (A,0), minimum (0,A)."""
    _check_budget(a, max_n)
    return _pair_lattice(a)


@lru_cache(maxsize=None)
def _enumerate_semibricks(a: NakayamaAlgebra) -> tuple[frozenset[Uniserial], ...]:
    bs = bricks(a)
    c = len(bs)
    orth = [[False] * c for _ in range(c)]
    for i in range(c):
        for j in range(i + 1, c):
            ok = hom_dim(a, bs[i], bs[j]) == 0 and hom_dim(a, bs[j], bs[i]) == 0
            orth[i][j] = orth[j][i] = ok
    out: list[frozenset[Uniserial]] = []

    def dfs(start: int, chosen: list[int]) -> None:
        out.append(frozenset(bs[i] for i in chosen))
        for i in range(start, c):
            if all(orth[i][j] for j in chosen):
                chosen.append(i)
                dfs(i + 1, chosen)
                chosen.pop()

    dfs(0, [])
    return tuple(out)


def semibricks(a: NakayamaAlgebra, max_n: int = DEFAULT_MAX_N) -> list[frozenset[Uniserial]]:
    """All semibricks: Hom-orthogonal sets of bricks, the empty set included."""
    _check_budget(a, max_n)
    return list(_enumerate_semibricks(a))


def ext_quiver(a: NakayamaAlgebra, mods) -> Quiver:
    """Quiver on a module set with dim Ext^1(S, S') arrows S -> S'."""
    ms = sorted(set(mods), key=lambda m: (m.socle, m.length))
    for m in ms:
        _require(a, m)
    size = len(ms)
    adj = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            adj[i, j] = ext_dim(a, ms[i], ms[j])
    return Quiver([str(m) for m in ms], adj)


def fpdim_nakayama(
    a: NakayamaAlgebra, tol: float = 1e-12, max_n: int = DEFAULT_MAX_N
) -> float:
    """Brute-force FP dimension: sup of rho over all semibrick Ext-quivers."""
    _check_budget(a, max_n)
    best = 0.0
    for sb in _enumerate_semibricks(a):
        if not sb:
            continue
        best = max(best, spectral_radius(ext_quiver(a, sb), tol=tol))
    return best


def self_ext_bound(a: NakayamaAlgebra) -> int:
    """Largest self-extension dimension over all bricks (the d_b bound)."""
    return max((ext_dim(a, s, s) for s in bricks(a)), default=0)


def bongartz_completion(a: NakayamaAlgebra, m: Uniserial, max_n: int = DEFAULT_MAX_N) -> TauPair:
    """Maximum tau-tilting pair containing M as a summand.

    For a non-projective tau-rigid M over a cyclic algebra this is the
    explicit completion M + sum_{j<l} M(i;j) + sum_{l<=k<n} P(i-1+k) with
    no projective slot; the result is verified maximal against the full
    enumeration.  Projective or linear inputs fall back to the search.
    """
    _require(a, m)
    if not is_tau_rigid_module(a, m):
        raise ValueError(f"{m} is not tau-rigid over {a}")
    _check_budget(a, max_n)
    pairs = [p for p in _enumerate_pairs(a) if m in p.mods]
    if not pairs:
        raise ConsistencyError(f"no tau-tilting pair contains {m} over {a}")
    maxima = [p for p in pairs if all(p == q or _pair_geq(a, p, q) for q in pairs)]
    if len(maxima) != 1:
        raise ConsistencyError(f"Bongartz completion of {m} is not unique over {a}")
    found = maxima[0]
    if a.cyclic and not is_projective(a, m):
        mods = {m}
        mods.update(module(a, m.socle, j) for j in range(1, m.length))
        mods.update(
            projective_module(a, m.socle - 1 + k) for k in range(m.length, a.n)
        )
        formula = TauPair(frozenset(mods), frozenset())
        if formula != found:
            raise ConsistencyError(
                f"completion formula {formula} disagrees with enumeration {found}"
            )
    return found


def canonical_form(q: Quiver) -> tuple:
    """Isomorphism-invariant form of a small quiver: the lexicographically
    least adjacency matrix over all vertex permutations (n <= 6 only)."""
    n = q.n
    if n > 6:
        raise ValueError("canonical_form is intended for quivers with at most 6 vertices")
    adj = q.adj
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(tuple(int(adj[perm[i], perm[j]]) for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()
