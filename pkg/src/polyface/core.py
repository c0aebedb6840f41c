"""Coordinate layouts, 0/1 vertices, permutations, linear forms, rational affine maps.

Conventions used throughout the package:

* elements and coordinate pairs are 1-based in every public interface and in
  all file formats; 0-based indices appear only inside coordinate arithmetic,
* a vertex is stored bit-packed with coordinate ``i`` (0-based) at bit
  ``dim - 1 - i``, so comparing packed words is exactly lexicographic
  comparison of the coordinate sequences and ``to_string`` is a plain binary
  rendering,
* vertex sets are deduplicated and sorted in that lexicographic order, which
  makes every generator and face extraction deterministic down to the byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DimensionMismatchError,
    InvalidPairError,
    InvalidParameterError,
    InvalidPermutationError,
    InvalidVertexError,
    ParseError,
)

RELATIONS = ("<=", ">=", "=")


def pair_index(i: int, j: int, m: int) -> int:
    """0-based position of the pair (i, j), i < j, in lexicographic order.

    Pairs over [m] are ordered (1,2), (1,3), ..., (1,m), (2,3), ..., (m-1,m).

    >>> pair_index(1, 2, 4)
    0
    >>> pair_index(3, 4, 4)
    5
    """
    if not (1 <= i < j <= m):
        raise InvalidPairError(f"need 1 <= i < j <= m, got (i={i}, j={j}, m={m})")
    return (i - 1) * (2 * m - i) // 2 + (j - i - 1)


def pairs(m: int) -> list[tuple[int, int]]:
    """All pairs (i, j) with 1 <= i < j <= m in lexicographic order."""
    return list(combinations(range(1, m + 1), 2))


def triples(m: int) -> list[tuple[int, int, int]]:
    """All triples (i, j, k) with 1 <= i < j < k <= m in lexicographic order."""
    return list(combinations(range(1, m + 1), 3))


def bqp_coord_index(i: int, j: int, n: int) -> int:
    """Index of coordinate (i, j) in the quadric layout: diagonal block first.

    Diagonal coordinates (i, i) occupy indices 0..n-1; the off-diagonal pair
    (i, j), i < j, follows at n + pair_index(i, j, n).
    """
    if i == j:
        if not 1 <= i <= n:
            raise InvalidPairError(f"diagonal index out of range: (i={i}, n={n})")
        return i - 1
    return n + pair_index(i, j, n)


class CoordLayout:
    """A named coordinate space: kind, size parameter, and ordered labels.

    Kinds:
      * ``bqp``    - dimension n(n+1)/2: labels x(i,i) for i in [n], then
                     x(i,j) for i < j lexicographic,
      * ``lop``    - dimension m(m-1)/2: labels y(i,j) for i < j lexicographic,
      * ``stable`` - dimension n: labels x(i),
      * ``dcp``    - one label per column; generic columns are c(k), embedding
                     layouts carry their structured labels.
    """

    __slots__ = ("kind", "param", "labels", "dim", "_index")

    def __init__(self, kind: str, param: int, labels: Sequence[str] | None = None):
        if kind not in ("bqp", "lop", "stable", "dcp"):
            raise InvalidParameterError(f"unknown layout kind: {kind!r}")
        if param < 0:
            raise InvalidParameterError(f"layout parameter must be >= 0, got {param}")
        if labels is None:
            labels = self._default_labels(kind, param)
        labels = tuple(labels)
        expected = self._dimension(kind, param)
        if len(labels) != expected:
            raise InvalidParameterError(
                f"{kind}({param}) needs {expected} labels, got {len(labels)}"
            )
        self.kind = kind
        self.param = param
        self.labels = labels
        self.dim = len(labels)
        self._index = {lab: k for k, lab in enumerate(labels)}
        if len(self._index) != len(labels):
            raise InvalidParameterError("coordinate labels must be distinct")

    @staticmethod
    def _dimension(kind: str, param: int) -> int:
        if kind == "bqp":
            return param * (param + 1) // 2
        if kind == "lop":
            return param * (param - 1) // 2
        return param

    @staticmethod
    def _default_labels(kind: str, param: int) -> tuple[str, ...]:
        if kind == "bqp":
            diag = [f"x({i},{i})" for i in range(1, param + 1)]
            off = [f"x({i},{j})" for i, j in pairs(param)]
            return tuple(diag + off)
        if kind == "lop":
            return tuple(f"y({i},{j})" for i, j in pairs(param))
        if kind == "stable":
            return tuple(f"x({i})" for i in range(1, param + 1))
        return tuple(f"c({k})" for k in range(1, param + 1))

    @classmethod
    def bqp(cls, n: int) -> "CoordLayout":
        if n < 1:
            raise InvalidParameterError(f"bqp layout needs n >= 1, got {n}")
        return cls("bqp", n)

    @classmethod
    def lop(cls, m: int) -> "CoordLayout":
        if m < 1:
            raise InvalidParameterError(f"lop layout needs m >= 1, got {m}")
        return cls("lop", m)

    @classmethod
    def stable(cls, n: int) -> "CoordLayout":
        if n < 1:
            raise InvalidParameterError(f"stable layout needs n >= 1, got {n}")
        return cls("stable", n)

    @classmethod
    def dcp(cls, columns: int, labels: Sequence[str] | None = None) -> "CoordLayout":
        if columns < 1:
            raise InvalidParameterError(f"dcp layout needs >= 1 column, got {columns}")
        return cls("dcp", columns, labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidParameterError(f"no coordinate labelled {label!r}") from None

    def header(self) -> str:
        return f"layout {self.kind} {self.param}"

    @classmethod
    def from_header(cls, line: str) -> "CoordLayout":
        parts = line.split()
        if len(parts) != 3 or parts[0] != "layout":
            raise ParseError(f"bad layout header: {line!r}")
        kind = parts[1]
        try:
            param = int(parts[2])
        except ValueError:
            raise ParseError(f"bad layout parameter: {parts[2]!r}") from None
        if kind not in ("bqp", "lop", "stable", "dcp"):
            raise ParseError(f"unknown layout kind: {kind!r}")
        return cls(kind, param)

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "param": self.param, "dim": self.dim}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CoordLayout":
        try:
            return cls(obj["kind"], int(obj["param"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad layout object: {obj!r}") from exc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoordLayout)
            and self.kind == other.kind
            and self.param == other.param
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.param, self.labels))

    def __repr__(self) -> str:
        return f"CoordLayout({self.kind}, {self.param}, dim={self.dim})"


@dataclass(frozen=True, order=True)
class Vertex01:
    """A fixed-dimension 0/1 vector, packed into one integer.

    Coordinate ``i`` (0-based) sits at bit ``dim - 1 - i``; dataclass ordering
    on (dim, word) therefore sorts same-dimension vertices lexicographically
    by coordinates.
    """

    dim: int
    word: int

    def __post_init__(self):
        if self.dim < 0:
            raise InvalidVertexError(f"dimension must be >= 0, got {self.dim}")
        if not 0 <= self.word < (1 << self.dim):
            raise InvalidVertexError(
                f"packed word {self.word} out of range for dimension {self.dim}"
            )

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Vertex01":
        word = 0
        dim = 0
        for b in bits:
            if b not in (0, 1):
                raise InvalidVertexError(f"coordinate must be 0 or 1, got {b!r}")
            word = (word << 1) | b
            dim += 1
        return cls(dim, word)

    @classmethod
    def from_string(cls, s: str) -> "Vertex01":
        if any(c not in "01" for c in s):
            raise ParseError(f"vertex string must be over {{0,1}}: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    def bit(self, i: int) -> int:
        """Coordinate i (0-based)."""
        if not 0 <= i < self.dim:
            raise InvalidVertexError(f"coordinate {i} out of range for dim {self.dim}")
        return (self.word >> (self.dim - 1 - i)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.word >> (self.dim - 1 - i)) & 1 for i in range(self.dim))

    def to_string(self) -> str:
        return format(self.word, f"0{self.dim}b") if self.dim else ""

    def __str__(self) -> str:
        return self.to_string()


def vertex_from_coords(layout: CoordLayout, coords: Sequence) -> Vertex01:
    """Interpret exact rational coordinates as a vertex of ``layout``.

    Raises InvalidVertexError unless every coordinate is exactly 0 or 1.
    """
    if len(coords) != layout.dim:
        raise DimensionMismatchError(
            f"{len(coords)} coordinates for layout of dimension {layout.dim}"
        )
    word = 0
    for c in coords:
        if c == 0:
            word <<= 1
        elif c == 1:
            word = (word << 1) | 1
        else:
            raise InvalidVertexError(f"non-integral coordinate {c!r}")
    return Vertex01(layout.dim, word)


class VertexSet:
    """A deduplicated, lexicographically sorted set of vertices of one layout."""

    __slots__ = ("layout", "vertices", "_words", "_wordset")

    def __init__(self, layout: CoordLayout, vertices: Iterable[Vertex01]):
        words = set()
        for v in vertices:
            if v.dim != layout.dim:
                raise DimensionMismatchError(
                    f"vertex of dim {v.dim} in layout of dim {layout.dim}"
                )
            words.add(v.word)
        ordered = tuple(sorted(words))
        self.layout = layout
        self._words = ordered
        self._wordset = frozenset(ordered)
        self.vertices = tuple(Vertex01(layout.dim, w) for w in ordered)

    @classmethod
    def from_words(cls, layout: CoordLayout, words: Iterable[int]) -> "VertexSet":
        vs = cls.__new__(cls)
        ordered = tuple(sorted(set(words)))
        if ordered and not 0 <= ordered[-1] < (1 << layout.dim):
            raise InvalidVertexError("packed word out of range for layout dimension")
        if ordered and ordered[0] < 0:
            raise InvalidVertexError("packed word out of range for layout dimension")
        vs.layout = layout
        vs._words = ordered
        vs._wordset = frozenset(ordered)
        vs.vertices = tuple(Vertex01(layout.dim, w) for w in ordered)
        return vs

    @property
    def words(self) -> tuple[int, ...]:
        return self._words

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[Vertex01]:
        return iter(self.vertices)

    def __contains__(self, v: Vertex01) -> bool:
        return v.dim == self.layout.dim and v.word in self._wordset

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.layout == other.layout
            and self._words == other._words
        )

    def __hash__(self) -> int:
        return hash((self.layout, self._words))

    def __repr__(self) -> str:
        return f"VertexSet({self.layout!r}, count={len(self)})"

    def restrict_to_words(self, words: Iterable[int]) -> "VertexSet":
        return VertexSet.from_words(self.layout, words)

    def to_text(self) -> str:
        lines = [self.layout.header()]
        lines.extend(v.to_string() for v in self.vertices)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "VertexSet":
        lines = text.splitlines()
        if not lines:
            raise ParseError("empty vertex-set file")
        layout = CoordLayout.from_header(lines[0])
        body = lines[1:]
        if layout.dim > 0:
            body = [ln.strip() for ln in body if ln.strip()]
        verts = [Vertex01.from_string(ln) for ln in body]
        for v in verts:
            if v.dim != layout.dim:
                raise ParseError(
                    f"vertex of length {v.dim} under layout of dimension {layout.dim}"
                )
        return cls(layout, verts)

    def to_json_obj(self) -> dict:
        return {
            "layout": self.layout.to_json_obj(),
            "vertices": [v.to_string() for v in self.vertices],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "VertexSet":
        try:
            layout = CoordLayout.from_json_obj(obj["layout"])
            verts = [Vertex01.from_string(s) for s in obj["vertices"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad vertex-set object: {exc}") from exc
        return cls(layout, verts)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VertexSet":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        return cls.from_json_obj(obj)


@dataclass(frozen=True)
class Permutation:
    """A bijection pi on [m]; ``pi[e - 1]`` is the position of element e.

    The sequence notation lists elements by position, i.e. the inverse images
    of 1..m from left to right.
    """

    pi: tuple[int, ...]

    def __post_init__(self):
        m = len(self.pi)
        if m == 0 or sorted(self.pi) != list(range(1, m + 1)):
            raise InvalidPermutationError(f"not a bijection on [{m}]: {self.pi!r}")

    @property
    def m(self) -> int:
        return len(self.pi)

    def position(self, element: int) -> int:
        if not 1 <= element <= self.m:
            raise InvalidPermutationError(f"element {element} out of range [1, {self.m}]")
        return self.pi[element - 1]

    def sequence(self) -> tuple[int, ...]:
        """Elements in position order (the inverse permutation)."""
        seq = [0] * self.m
        for element, position in enumerate(self.pi, start=1):
            seq[position - 1] = element
        return tuple(seq)

    def sequence_str(self) -> str:
        seq = self.sequence()
        if self.m <= 9:
            return "".join(str(e) for e in seq)
        return " ".join(str(e) for e in seq)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_positions(cls, positions: Sequence[int]) -> "Permutation":
        return cls(tuple(positions))


def sequence_to_perm(s: str | Sequence[int]) -> Permutation:
    """Parse sequence notation (elements listed by position) into a Permutation.

    Accepts an iterable of integers, or a compact digit string such as
    ``"654321"``, or a whitespace/comma separated string for m >= 10.
    """
    if isinstance(s, str):
        text = s.strip()
        if not text:
            raise ParseError("empty permutation sequence")
        if any(sep in text for sep in (" ", ",")):
            tokens = text.replace(",", " ").split()
        else:
            tokens = list(text)
        try:
            elements = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"bad permutation sequence: {s!r}") from None
    else:
        elements = list(s)
    m = len(elements)
    if sorted(elements) != list(range(1, m + 1)):
        raise ParseError(f"sequence is not a permutation of [{m}]: {elements!r}")
    pi = [0] * m
    for position, element in enumerate(elements, start=1):
        pi[element - 1] = position
    return Permutation(tuple(pi))


def perm_to_sequence(p: Permutation) -> str:
    """Render a permutation in sequence notation."""
    return p.sequence_str()


def lop_pair_bits(m: int) -> tuple[tuple[int, int, int], ...]:
    """Per-pair packing table for the linear-order layout.

    Entries are (i, j, bitmask) where bitmask marks coordinate (i, j) inside a
    packed word of dimension m(m-1)/2.
    """
    dim = m * (m - 1) // 2
    table = []
    for i, j in pairs(m):
        bit = 1 << (dim - 1 - pair_index(i, j, m))
        table.append((i, j, bit))
    return tuple(table)


def lop_word_from_positions(positions: Sequence[int], pair_bits) -> int:
    """Packed characteristic word of the linear order given element positions.

    ``positions[e - 1]`` is the position of element e; coordinate (i, j) is 1
    iff element i precedes element j.
    """
    word = 0
    for i, j, bit in pair_bits:
        if positions[i - 1] < positions[j - 1]:
            word |= bit
    return word


def perm_to_lop_vertex(p: Permutation) -> Vertex01:
    """Characteristic vector of the linear order induced by a permutation.

    Coordinate (i, j), i < j, equals 1 iff element i is placed before
    element j.
    """
    m = p.m
    word = lop_word_from_positions(p.pi, lop_pair_bits(m))
    return Vertex01(m * (m - 1) // 2, word)


def lop_vertex_to_perm(v: Vertex01, m: int) -> Permutation:
    """Invert perm_to_lop_vertex: recover element positions from a word.

    In a transitive tournament, element positions are determined by the
    number of elements each one precedes.  The result is validated by a
    round trip; a word that is not a linear order raises InvalidVertexError.
    """
    if v.dim != m * (m - 1) // 2:
        raise DimensionMismatchError(
            f"vertex of dim {v.dim} cannot encode a linear order on [{m}]"
        )
    precedes = [0] * (m + 1)
    table = lop_pair_bits(m)
    for i, j, bit in table:
        if v.word & bit:
            precedes[i] += 1
        else:
            precedes[j] += 1
    positions = tuple(m - precedes[e] for e in range(1, m + 1))
    if sorted(positions) != list(range(1, m + 1)):
        raise InvalidVertexError(f"{v} is not the vector of a linear order")
    if lop_word_from_positions(positions, table) != v.word:
        raise InvalidVertexError(f"{v} is not the vector of a linear order")
    return Permutation(positions)


@dataclass(frozen=True)
class LinearForm:
    """Integer linear form over one coordinate layout: coeffs, relation, rhs."""

    coeffs: tuple[int, ...]
    relation: str
    rhs: int
    _nz: tuple[tuple[int, int], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise InvalidParameterError(f"relation must be one of {RELATIONS}")
        dim = len(self.coeffs)
        nz = tuple(
            (1 << (dim - 1 - i), c) for i, c in enumerate(self.coeffs) if c != 0
        )
        object.__setattr__(self, "_nz", nz)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def evaluate_word(self, word: int) -> int:
        """Dot product with a packed 0/1 word of matching dimension."""
        total = 0
        for mask, c in self._nz:
            if word & mask:
                total += c
        return total

    def evaluate(self, v: Vertex01) -> int:
        if v.dim != self.dim:
            raise DimensionMismatchError(
                f"form of dim {self.dim} applied to vertex of dim {v.dim}"
            )
        return self.evaluate_word(v.word)

    def evaluate_coords(self, coords: Sequence):
        """Dot product with arbitrary exact coordinates (int or Fraction)."""
        if len(coords) != self.dim:
            raise DimensionMismatchError(
                f"form of dim {self.dim} applied to point of dim {len(coords)}"
            )
        return sum(c * x for c, x in zip(self.coeffs, coords))

    def holds(self, value) -> bool:
        if self.relation == "<=":
            return value <= self.rhs
        if self.relation == ">=":
            return value >= self.rhs
        return value == self.rhs

    def satisfied_by_word(self, word: int) -> bool:
        return self.holds(self.evaluate_word(word))

    def satisfied_by(self, v: Vertex01) -> bool:
        return self.holds(self.evaluate(v))

    def relaxed(self, relation: str) -> "LinearForm":
        return LinearForm(self.coeffs, relation, self.rhs)

    def render(self) -> str:
        return " ".join(str(c) for c in self.coeffs) + f" {self.relation} {self.rhs}"

    def describe(self, layout: CoordLayout) -> str:
        """Human-readable rendering using the layout's coordinate labels."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            label = layout.labels[i]
            if c == 1:
                terms.append(f"+ {label}" if terms else label)
            elif c == -1:
                terms.append(f"- {label}")
            else:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                head = f"{mag}*{label}"
                terms.append(f"{sign} {head}" if terms else (f"-{head}" if c < 0 else head))
        lhs = " ".join(terms) if terms else "0"
        return f"{lhs} {self.relation} {self.rhs}"

    @classmethod
    def parse(cls, line: str) -> "LinearForm":
        tokens = line.split()
        if len(tokens) < 3:
            raise ParseError(f"bad linear form line: {line!r}")
        relation = tokens[-2]
        if relation not in RELATIONS:
            raise ParseError(f"bad relation token {relation!r} in {line!r}")
        try:
            coeffs = tuple(int(t) for t in tokens[:-2])
            rhs = int(tokens[-1])
        except ValueError:
            raise ParseError(f"bad integer in form line: {line!r}") from None
        return cls(coeffs, relation, rhs)


@dataclass(frozen=True)
class AffineMapQ:
    """Exact rational affine map: coords -> matrix @ coords + offset."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.offset) != len(self.matrix):
            raise DimensionMismatchError(
                f"offset of dim {len(self.offset)} for {len(self.matrix)} rows"
            )
        widths = {len(row) for row in self.matrix}
        if len(widths) > 1:
            raise DimensionMismatchError("matrix rows of unequal length")

    @classmethod
    def linear(cls, rows: Sequence[Sequence]) -> "AffineMapQ":
        matrix = tuple(tuple(Fraction(c) for c in row) for row in rows)
        offset = tuple(Fraction(0) for _ in matrix)
        return cls(matrix, offset)

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    @property
    def source_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def apply(self, coords: Sequence) -> tuple[Fraction, ...]:
        if self.matrix and len(coords) != self.source_dim:
            raise DimensionMismatchError(
                f"map of source dim {self.source_dim} applied to {len(coords)} coords"
            )
        return tuple(
            sum((c * x for c, x in zip(row, coords)), start=off)
            for row, off in zip(self.matrix, self.offset)
        )

    def apply_vertex(self, v: Vertex01) -> tuple[Fraction, ...]:
        return self.apply(v.bits)
