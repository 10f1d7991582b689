"""Cartan matrices, finite Weyl groups and the right weak order.

Groups are realized through the integer reflection representation on
simple-root coordinates: the generator s_i sends alpha_j to
alpha_j - c_{ji} alpha_i.  Elements are deduplicated by their matrix, so
identities are exact.  The right weak order is generated by breadth-first
search from the identity along ascents and returned as a FiniteLattice
whose element names are lex-minimal reduced words.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError
from .lattice import FiniteLattice, from_covers
from .spectral import _check_type_rank

__all__ = [
    "CartanData",
    "WeylElement",
    "WeakOrder",
    "cartan_matrix",
    "symmetrizer",
    "coxeter_exponent",
    "weyl_order",
    "identity_element",
    "apply_generator",
    "multiply",
    "inverse",
    "is_ascent",
    "weak_order",
    "longest_element",
    "parabolic_longest",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 60000

_SYMMETRIZER_PATTERN = {
    "A": lambda n: [1] * n,
    "D": lambda n: [1] * n,
    "E": lambda n: [1] * n,
    "B": lambda n: [2] * (n - 1) + [1],
    "C": lambda n: [1] * (n - 1) + [2],
    "F": lambda n: [2, 2, 1, 1],
    "G": lambda n: [3, 1],
}


@dataclass(frozen=True, eq=False)
class CartanData:
    """Dynkin type, Cartan matrix and a symmetrizer D = c * pattern."""

    family: str
    rank: int
    cartan: np.ndarray
    symmetrizer_diag: tuple[int, ...]
    multiplier: int = 1

    def __post_init__(self):
        # reflection matrices of the generators, cached once per instance:
        # column j of S_i is the image alpha_j - c_{ji} alpha_i
        gens = []
        for i in range(self.rank):
            m = np.eye(self.rank, dtype=np.int64)
            for j in range(self.rank):
                m[i, j] -= int(self.cartan[j, i])
            m.flags.writeable = False
            gens.append(m)
        object.__setattr__(self, "_gens", tuple(gens))

    @property
    def minimal(self) -> bool:
        return self.multiplier == 1

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def edges(self) -> list[tuple[int, int]]:
        """Dynkin diagram edges {i, j} as 1-based pairs with i < j."""
        c = self.cartan
        return [
            (i + 1, j + 1)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if c[i, j] != 0
        ]


def _diagram_edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """(i, j, c_ij, c_ji) per edge of the diagram, vertices 1-based."""
    n = rank
    single = lambda i, j: (i, j, -1, -1)
    if family == "A":
        return [single(i, i + 1) for i in range(1, n)]
    if family == "B":
        # double edge n-1 => n
        return [single(i, i + 1) for i in range(1, n - 1)] + [(n - 1, n, -1, -2)]
    if family == "C":
        # double edge n => n-1
        return [single(i, i + 1) for i in range(1, n - 1)] + [(n, n - 1, -1, -2)]
    if family == "D":
        return [single(i, i + 1) for i in range(1, n - 2)] + [
            single(n - 2, n - 1),
            single(n - 2, n),
        ]
    if family == "E":
        # 1-2-3-5-6(-7)(-8) with the branch 3-4
        chain = [1, 2, 3] + list(range(5, n + 1))
        return [single(a, b) for a, b in zip(chain, chain[1:])] + [single(3, 4)]
    if family == "F":
        return [single(1, 2), (2, 3, -1, -2), single(3, 4)]
    # G2: triple edge 1 => 2
    return [(1, 2, -1, -3)]


def cartan_matrix(family: str, rank: int, multiplier: int = 1) -> CartanData:
    """Cartan matrix of the Dynkin diagram with its symmetrizer.

    multiplier=1 gives the minimal symmetrizer.
    """
    _check_type_rank(family, rank)
    if multiplier < 1:
        raise ValueError("symmetrizer multiplier must be >= 1")
    c = 2 * np.eye(rank, dtype=np.int64)
    for i, j, cij, cji in _diagram_edges(family, rank):
        c[i - 1, j - 1] = cij
        c[j - 1, i - 1] = cji
    diag = tuple(multiplier * d for d in _SYMMETRIZER_PATTERN[family](rank))
    dmat = np.diag(np.array(diag, dtype=np.int64))
    if not np.array_equal(dmat @ c, (dmat @ c).T):
        raise AssertionError(f"symmetrizer failed for {family}{rank}")
    c.flags.writeable = False
    return CartanData(family, rank, c, diag, multiplier)


def symmetrizer(family: str, rank: int, multiplier: int = 1) -> np.ndarray:
    """The diagonal symmetrizer matrix c * pattern for the given type."""
    return np.diag(
        np.array(cartan_matrix(family, rank, multiplier).symmetrizer_diag, dtype=np.int64)
    )


def coxeter_exponent(cartan: CartanData, i: int, j: int) -> int:
    """Order m_ij of s_i s_j, read off the Cartan entries."""
    if i == j:
        return 1
    prod = int(cartan.cartan[i - 1, j - 1]) * int(cartan.cartan[j - 1, i - 1])
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def weyl_order(family: str, rank: int) -> int:
    """Order of the Weyl group, by the classical product formulas."""
    _check_type_rank(family, rank)
    n = rank
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    if family == "A":
        return fact * (n + 1)
    if family in ("B", "C"):
        return (2**n) * fact
    if family == "D":
        return (2 ** (n - 1)) * fact
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if family == "F":
        return 1152
    return 12  # G2


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Group element as an integer matrix on simple-root coordinates.

    word is one reduced word (1-based generator indices); length equals
    both len(word) and the number of positive roots sent negative.
    """

    mat: np.ndarray
    word: tuple[int, ...] = ()

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=np.int64)
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    @property
    def length(self) -> int:
        return len(self.word)

    def key(self) -> bytes:
        return self.mat.tobytes()

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return np.array_equal(self.mat, other.mat)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"WeylElement(word={''.join(map(str, self.word)) or 'e'})"


def _generator_matrices(cartan: CartanData) -> tuple[np.ndarray, ...]:
    """Matrices of the generators s_i acting on simple-root coordinates."""
    return cartan._gens


def identity_element(cartan: CartanData) -> WeylElement:
    return WeylElement(np.eye(cartan.rank, dtype=np.int64), ())


def is_ascent(w: WeylElement, i: int) -> bool:
    """True iff l(w s_i) = l(w) + 1, i.e. w(alpha_i) is a positive root."""
    col = w.mat[:, i - 1]
    return bool((col >= 0).all())


def _word_matrix(gens: list[np.ndarray], word, n: int) -> np.ndarray:
    m = np.eye(n, dtype=np.int64)
    for i in word:
        m = m @ gens[i - 1]
    return m


def _reduced_word_after_descent(cartan: CartanData, w: WeylElement, i: int, target: np.ndarray):
    """Exchange property: drop one letter of w's word to get a word for w s_i."""
    gens = _generator_matrices(cartan)
    word = w.word
    k = len(word)
    n = cartan.rank
    prefixes = [np.eye(n, dtype=np.int64)]
    for letter in word:
        prefixes.append(prefixes[-1] @ gens[letter - 1])
    suffixes = [np.eye(n, dtype=np.int64)]
    for letter in reversed(word):
        suffixes.append(gens[letter - 1] @ suffixes[-1])
    suffixes.reverse()
    for j in range(k):
        cand = prefixes[j] @ suffixes[j + 1]
        if np.array_equal(cand, target):
            return word[:j] + word[j + 1 :]
    raise AssertionError("exchange property failed to produce a word")


def apply_generator(cartan: CartanData, w: WeylElement, i: int) -> WeylElement:
    """Right multiplication w * s_i; the length moves by exactly one."""
    if not 1 <= i <= cartan.rank:
        raise ValueError(f"generator index {i} out of range")
    gens = _generator_matrices(cartan)
    mat = w.mat @ gens[i - 1]
    if is_ascent(w, i):
        return WeylElement(mat, w.word + (i,))
    return WeylElement(mat, _reduced_word_after_descent(cartan, w, i, mat))


def multiply(cartan: CartanData, a: WeylElement, b: WeylElement) -> WeylElement:
    """Group product a * b with a valid reduced word on the result."""
    out = a
    for i in b.word:
        out = apply_generator(cartan, out, i)
    return out


def inverse(cartan: CartanData, w: WeylElement) -> WeylElement:
    """Inverse; the reversed word is reduced since generators are involutions."""
    gens = _generator_matrices(cartan)
    word = tuple(reversed(w.word))
    return WeylElement(_word_matrix(gens, word, cartan.rank), word)


def _word_name(word) -> str:
    return "".join(str(i) for i in word) if word else "e"


@dataclass
class WeakOrder:
    """Right weak order of a Weyl group, as a lattice plus element lookup."""

    cartan: CartanData
    lattice: FiniteLattice
    elements: dict[str, WeylElement] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.lattice)

    def element(self, name: str) -> WeylElement:
        return self.elements[name]


def weak_order(cartan: CartanData, budget: int = DEFAULT_BUDGET) -> WeakOrder:
    """BFS generation of (W, <=_R) as a FiniteLattice.

    Elements are deduplicated by matrix; covers are (w s_i, w) for each
    ascent i, so upper means longer.  Raises BudgetError up front when the
    group order exceeds the budget.
    """
    total = weyl_order(cartan.family, cartan.rank)
    if total > budget:
        raise BudgetError(
            f"weak order of {cartan.name} needs {total} elements, budget is {budget}"
        )
    gens = _generator_matrices(cartan)
    ident = identity_element(cartan)
    names: dict[bytes, str] = {ident.key(): "e"}
    elements: dict[str, WeylElement] = {"e": ident}
    declaration = ["e"]
    covers: list[tuple[str, str]] = []
    level = [ident]
    while level:
        nxt: list[WeylElement] = []
        for w in level:  # level is in lex order of words
            wname = names[w.key()]
            for i in range(1, cartan.rank + 1):
                if not is_ascent(w, i):
                    continue
                mat = w.mat @ gens[i - 1]
                key = mat.tobytes()
                if key not in names:
                    elem = WeylElement(mat, w.word + (i,))
                    nm = _word_name(elem.word)
                    names[key] = nm
                    elements[nm] = elem
                    declaration.append(nm)
                    nxt.append(elem)
                covers.append((names[key], wname))
        level = nxt
    if len(elements) != total:
        raise AssertionError(
            f"BFS found {len(elements)} elements of {cartan.name}, expected {total}"
        )
    lat = from_covers(declaration, covers)
    return WeakOrder(cartan, lat, elements)


def longest_element(order: WeakOrder) -> WeylElement:
    """The maximum of the weak order."""
    return order.element(order.lattice.maximum)


def parabolic_longest(order: WeakOrder, js) -> WeylElement:
    """w0(J): the join of the generators s_j, j in J."""
    js = sorted(set(int(j) for j in js))
    if not js:
        raise ValueError("J must be nonempty")
    for j in js:
        if not 1 <= j <= order.cartan.rank:
            raise ValueError(f"generator index {j} out of range")
    name = order.lattice.join_all([str(j) for j in js])
    return order.element(name)
