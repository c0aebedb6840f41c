"""Vertex-set generators for the four polytope families.

Every generator returns a canonical VertexSet (deduplicated, lexicographically
sorted), so outputs are reproducible byte for byte.  Enumeration budgets are
plain keyword arguments with package-wide defaults, not hard-coded limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations
from math import factorial

from .core import (
    CoordLayout,
    VertexSet,
    lop_pair_bits,
    lop_word_from_positions,
    pair_index,
    pairs,
)
from .errors import CapacityError, InvalidParameterError, ParseError

#: Largest number of linear orders enumerated by default (8 elements).
DEFAULT_MAX_PERMS = 40320

#: Largest ground-set size accepted by the brute-force linear-order oracle
#: (2^C(6,2) = 32768 candidate vectors).
DEFAULT_ORACLE_MAX_M = 6

#: Column budget for the backtracking double-covering enumerator.
DEFAULT_MAX_DCP_COLS = 40

#: Column budget for the naive double-covering cross-check (2^n filtering).
DEFAULT_MAX_NAIVE_DCP_COLS = 20


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex set [n], edges as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"graph needs n >= 1, got {self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise InvalidParameterError(f"bad edge ({i}, {j}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        normalized = set()
        for a, b in edges:
            if a == b:
                raise InvalidParameterError(f"loop edge ({a}, {b}) not allowed")
            normalized.add((min(a, b), max(a, b)))
        return cls(n, frozenset(normalized))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, pairs(n))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def render(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{i} {j}" for i, j in self.sorted_edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Graph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("n "):
            raise ParseError("graph file must start with a line 'n <count>'")
        try:
            n = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise ParseError(f"bad graph header: {lines[0]!r}") from None
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ParseError(f"bad edge line: {ln!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError(f"bad edge line: {ln!r}") from None
        try:
            return cls.from_edges(n, edges)
        except InvalidParameterError as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class FourOnesMatrix:
    """0/1 matrix given by rows of exactly four distinct column indices (1-based)."""

    n: int
    rows: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"matrix needs >= 1 column, got {self.n}")
        for row in self.rows:
            if len(row) != 4 or len(set(row)) != 4:
                raise InvalidParameterError(
                    f"every row must have exactly four distinct columns, got {row!r}"
                )
            for c in row:
                if not 1 <= c <= self.n:
                    raise InvalidParameterError(
                        f"column {c} out of range [1, {self.n}] in row {row!r}"
                    )

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, n: int, rows) -> "FourOnesMatrix":
        normalized = tuple(tuple(sorted(row)) for row in rows)
        return cls(n, normalized)

    def render(self) -> str:
        lines = [f"cols {self.n}"]
        lines.extend(" ".join(str(c) for c in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "FourOnesMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("cols "):
            raise ParseError("matrix file must start with a line 'cols <n>'")
        try:
            n = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise ParseError(f"bad matrix header: {lines[0]!r}") from None
        rows = []
        for ln in lines[1:]:
            try:
                rows.append(tuple(int(t) for t in ln.split()))
            except ValueError:
                raise ParseError(f"bad row line: {ln!r}") from None
        try:
            return cls.from_rows(n, rows)
        except InvalidParameterError as exc:
            raise ParseError(str(exc)) from exc


def bqp_vertices(n: int) -> VertexSet:
    """All 0/1 vectors whose off-diagonal coordinates multiply the diagonal.

    The 2^n vertices are indexed by their diagonal assignments; coordinate
    (i, j), i < j, is forced to the product of coordinates (i, i) and (j, j).
    """
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    layout = CoordLayout.bqp(n)
    off = pairs(n)
    words = []
    for d in range(1 << n):
        diag = [(d >> (n - 1 - i)) & 1 for i in range(n)]
        word = d
        for i, j in off:
            word = (word << 1) | (diag[i - 1] & diag[j - 1])
        words.append(word)
    return VertexSet.from_words(layout, words)


def lop_vertices(m: int, max_perms: int = DEFAULT_MAX_PERMS) -> VertexSet:
    """Characteristic vectors of all m! linear orders on [m]."""
    if m < 1:
        raise InvalidParameterError(f"need m >= 1, got {m}")
    if factorial(m) > max_perms:
        raise CapacityError(
            f"enumerating {m}! = {factorial(m)} linear orders exceeds the budget "
            f"of {max_perms}; raise max_perms to allow it"
        )
    layout = CoordLayout.lop(m)
    pair_bits = lop_pair_bits(m)
    words = []
    positions = [0] * m
    for seq in iter_permutations(range(1, m + 1)):
        for pos, element in enumerate(seq, start=1):
            positions[element - 1] = pos
        words.append(lop_word_from_positions(positions, pair_bits))
    return VertexSet.from_words(layout, words)


def lop_vertices_oracle(m: int, max_m: int = DEFAULT_ORACLE_MAX_M) -> VertexSet:
    """Brute-force route to the same set: filter {0,1}^C(m,2) by the
    three-cycle inequalities 0 <= y_ij + y_jk - y_ik <= 1.

    Kept independent of the permutation enumerator on purpose; the two routes
    are compared in tests.
    """
    if m < 1:
        raise InvalidParameterError(f"need m >= 1, got {m}")
    if m > max_m:
        raise CapacityError(
            f"oracle over 2^C({m},2) candidates exceeds the cap m <= {max_m}"
        )
    layout = CoordLayout.lop(m)
    dim = layout.dim
    checks = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                bij = 1 << (dim - 1 - pair_index(i, j, m))
                bjk = 1 << (dim - 1 - pair_index(j, k, m))
                bik = 1 << (dim - 1 - pair_index(i, k, m))
                checks.append((bij, bjk, bik))
    words = []
    for w in range(1 << dim):
        ok = True
        for bij, bjk, bik in checks:
            val = ((w & bij) != 0) + ((w & bjk) != 0) - ((w & bik) != 0)
            if val < 0 or val > 1:
                ok = False
                break
        if ok:
            words.append(w)
    return VertexSet.from_words(layout, words)


def stable_vertices(g: Graph) -> VertexSet:
    """All 0/1 vectors with at most one endpoint of every edge set to 1."""
    n = g.n
    layout = CoordLayout.stable(n)
    edge_masks = [
        (1 << (n - i)) | (1 << (n - j)) for i, j in g.sorted_edges()
    ]
    words = []
    for w in range(1 << n):
        for mask in edge_masks:
            if w & mask == mask:
                break
        else:
            words.append(w)
    return VertexSet.from_words(layout, words)


def dcp_vertices(
    b: FourOnesMatrix,
    max_cols: int = DEFAULT_MAX_DCP_COLS,
    layout: CoordLayout | None = None,
) -> VertexSet:
    """All 0/1 vectors whose sum over every row's four columns is exactly 2.

    Backtracks over columns in ascending order with unit propagation: a row
    holding two ones forces its unassigned columns to 0, a row holding two
    zeros forces them to 1.  An empty result is a valid answer.
    """
    n = b.n
    if n > max_cols:
        raise CapacityError(f"{n} columns exceed the backtracking cap of {max_cols}")
    if layout is None:
        layout = CoordLayout.dcp(n)
    elif layout.dim != n:
        raise InvalidParameterError(
            f"layout of dimension {layout.dim} for a {n}-column matrix"
        )
    row_cols = [tuple(c - 1 for c in row) for row in b.rows]
    rows_of: list[list[int]] = [[] for _ in range(n)]
    for ri, cols in enumerate(row_cols):
        for c in cols:
            rows_of[c].append(ri)
    assign = [-1] * n
    ones = [0] * len(row_cols)
    zeros = [0] * len(row_cols)
    words: list[int] = []

    def place(col: int, val: int, trail: list[int]) -> bool:
        stack = [(col, val)]
        while stack:
            c, v = stack.pop()
            cur = assign[c]
            if cur != -1:
                if cur != v:
                    return False
                continue
            assign[c] = v
            trail.append(c)
            for ri in rows_of[c]:
                if v:
                    ones[ri] += 1
                else:
                    zeros[ri] += 1
            for ri in rows_of[c]:
                if ones[ri] > 2 or zeros[ri] > 2:
                    return False
                if ones[ri] == 2 or zeros[ri] == 2:
                    forced = 0 if ones[ri] == 2 else 1
                    for cc in row_cols[ri]:
                        if assign[cc] == -1:
                            stack.append((cc, forced))
        return True

    def undo(trail: list[int]) -> None:
        for c in reversed(trail):
            v = assign[c]
            assign[c] = -1
            for ri in rows_of[c]:
                if v:
                    ones[ri] -= 1
                else:
                    zeros[ri] -= 1

    def search(start: int) -> None:
        c = start
        while c < n and assign[c] != -1:
            c += 1
        if c == n:
            word = 0
            for v in assign:
                word = (word << 1) | v
            words.append(word)
            return
        for val in (0, 1):
            trail: list[int] = []
            if place(c, val, trail):
                search(c + 1)
            undo(trail)

    search(0)
    return VertexSet.from_words(layout, words)


def dcp_vertices_naive(
    b: FourOnesMatrix, max_cols: int = DEFAULT_MAX_NAIVE_DCP_COLS
) -> VertexSet:
    """Cross-check route: filter all 2^n vectors by the row sums directly."""
    n = b.n
    if n > max_cols:
        raise CapacityError(f"{n} columns exceed the naive filter cap of {max_cols}")
    row_masks = [
        sum(1 << (n - c) for c in row) for row in b.rows
    ]
    words = [
        w
        for w in range(1 << n)
        if all((w & mask).bit_count() == 2 for mask in row_masks)
    ]
    return VertexSet.from_words(CoordLayout.dcp(n), words)
