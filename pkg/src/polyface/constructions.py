"""The three certified embeddings between polytope families.

* ``theorem1_*``: the boolean quadric polytope on n variables as a face of
  the linear ordering polytope on 2n elements, with an explicit affine
  bijection and a permutation lift for every quadric vertex.
* ``lemma1_*``: the stable-set polytope of a graph on n vertices as the
  projection of a face of the linear ordering polytope on 2n elements.
* ``dcp_*``: the linear ordering polytope on m elements as a face of a
  double-covering polytope built from the transitivity inequalities.

Each ``*_verify`` routine enumerates everything at desk scale and returns a
structured report of named assertions; failures become report entries with
witnesses, never crashes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import (
    AffineMapQ,
    CoordLayout,
    LinearForm,
    Permutation,
    Vertex01,
    VertexSet,
    lop_pair_bits,
    lop_vertex_to_perm,
    lop_word_from_positions,
    pair_index,
    pairs,
    triples,
)
from .errors import (
    CapacityError,
    DimensionMismatchError,
    InvalidParameterError,
    InvalidVertexError,
    ParseError,
)
from .faces import FaceSystem, extract_face
from .generators import (
    DEFAULT_MAX_PERMS,
    FourOnesMatrix,
    Graph,
    bqp_vertices,
    dcp_vertices,
    lop_vertices,
    stable_vertices,
)

#: Column budget for double-covering verification (the m = 4 embedding).
DEFAULT_DCP_VERIFY_MAX_COLS = 18


@dataclass(frozen=True)
class Assertion:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class Report:
    """Machine-readable verification outcome: named assertions plus details."""

    construction: str
    params: dict
    assertions: list[Assertion] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def check(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.assertions.append(Assertion(name, passed, witness if not passed else None))

    def assertion(self, name: str) -> Assertion:
        for a in self.assertions:
            if a.name == name:
                return a
        raise KeyError(name)

    def to_json_obj(self) -> dict:
        assertions = []
        for a in self.assertions:
            entry: dict = {"name": a.name, "pass": a.passed}
            if a.witness is not None:
                entry["witness"] = a.witness
            assertions.append(entry)
        return {
            "construction": self.construction,
            "params": self.params,
            "assertions": assertions,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Report":
        try:
            assertions = [
                Assertion(entry["name"], bool(entry["pass"]), entry.get("witness"))
                for entry in obj.get("assertions", [])
            ]
            return cls(
                construction=obj["construction"],
                params=dict(obj.get("params", {})),
                assertions=assertions,
                details=dict(obj.get("details", {})),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad report object: {exc}") from exc

    def render_text(self) -> str:
        lines = [f"construction: {self.construction}"]
        if self.params:
            params = " ".join(f"{k}={self.params[k]}" for k in sorted(self.params))
            lines.append(f"params: {params}")
        for a in self.assertions:
            status = "PASS" if a.passed else "FAIL"
            suffix = f"  [witness: {a.witness}]" if a.witness else ""
            lines.append(f"  {status} {a.name}{suffix}")
        for key in sorted(self.details):
            value = self.details[key]
            rendered = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
            lines.append(f"  {key}: {rendered}")
        verdict = "PASS" if self.all_passed else "FAIL"
        lines.append(f"result: {verdict} ({sum(a.passed for a in self.assertions)}/"
                     f"{len(self.assertions)} assertions)")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# quadric polytope as a face of the linear ordering polytope
# ---------------------------------------------------------------------------


def _bqp_n_from_dim(dim: int) -> int:
    n = int((2 * dim) ** 0.5)
    while n * (n + 1) // 2 > dim:
        n -= 1
    if n < 1 or n * (n + 1) // 2 != dim:
        raise InvalidVertexError(f"dimension {dim} is not of the form n(n+1)/2")
    return n


def theorem1_system(n: int) -> FaceSystem:
    """Equalities over the order polytope on 2n elements carving out the
    quadric face: for every 1 <= i < j <= n,

      y(2i,2j-1) = 0
      y(2i-1,2i) + y(2i,2j) - y(2i-1,2j) = 0
      y(2i-1,2j-1) + y(2j-1,2j) - y(2i-1,2j) = 0
    """
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    m = 2 * n
    layout = CoordLayout.lop(m)
    dim = layout.dim
    forms = []

    def eq(entries: dict[tuple[int, int], int]) -> LinearForm:
        coeffs = [0] * dim
        for (a, b), c in entries.items():
            coeffs[pair_index(a, b, m)] = c
        return LinearForm(tuple(coeffs), "=", 0)

    for i, j in pairs(n):
        oi, ei = 2 * i - 1, 2 * i
        oj, ej = 2 * j - 1, 2 * j
        forms.append(eq({(ei, oj): 1}))
        forms.append(eq({(oi, ei): 1, (ei, ej): 1, (oi, ej): -1}))
        forms.append(eq({(oi, oj): 1, (oj, ej): 1, (oi, ej): -1}))
    return FaceSystem(layout, tuple(forms), provenance=f"theorem1(n={n})")


def theorem1_project(n: int) -> AffineMapQ:
    """Linear map from order coordinates on [2n] to quadric coordinates:
    x(i,i) = y(2i-1,2i) and x(i,j) = y(2j-1,2j) - y(2i,2j)."""
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    m = 2 * n
    source_dim = m * (m - 1) // 2
    rows = []
    for i in range(1, n + 1):
        row = [0] * source_dim
        row[pair_index(2 * i - 1, 2 * i, m)] = 1
        rows.append(row)
    for i, j in pairs(n):
        row = [0] * source_dim
        row[pair_index(2 * j - 1, 2 * j, m)] = 1
        row[pair_index(2 * i, 2 * j, m)] = -1
        rows.append(row)
    return AffineMapQ.linear(rows)


def _validate_bqp_vertex(x: Vertex01, n: int) -> list[int]:
    """Check the product structure of a quadric vertex; return its diagonal."""
    diag = [x.bit(i - 1) for i in range(1, n + 1)]
    for i, j in pairs(n):
        if x.bit(n + pair_index(i, j, n)) != diag[i - 1] * diag[j - 1]:
            raise InvalidVertexError(
                f"{x} violates the product structure at pair ({i},{j})"
            )
    return diag


def theorem1_lift(x: Vertex01) -> Permutation:
    """Permutation of [2n] whose order vector lies on the quadric face and
    projects back onto the quadric vertex ``x``.

    With k indices carrying diagonal 0 (taken in descending order) and the
    rest carrying 1 (descending as well), positions are assigned as

      pos(2i_s - 1) = n - k + 2s,  pos(2i_s) = n - k + 2s - 1   (diagonal 0)
      pos(2i'_t - 1) = t,          pos(2i'_t) = n + k + t       (diagonal 1)
    """
    n = _bqp_n_from_dim(x.dim)
    diag = _validate_bqp_vertex(x, n)
    zeros_desc = [i for i in range(n, 0, -1) if diag[i - 1] == 0]
    ones_desc = [i for i in range(n, 0, -1) if diag[i - 1] == 1]
    k = len(zeros_desc)
    pos = [0] * (2 * n + 1)
    for s, i in enumerate(zeros_desc, start=1):
        pos[2 * i - 1] = n - k + 2 * s
        pos[2 * i] = n - k + 2 * s - 1
    for t, i in enumerate(ones_desc, start=1):
        pos[2 * i - 1] = t
        pos[2 * i] = n + k + t
    return Permutation(tuple(pos[1:]))


def theorem1_verify(
    n: int, lop: VertexSet | None = None, max_perms: int = DEFAULT_MAX_PERMS
) -> Report:
    """Certify the quadric-as-face embedding for one n by full enumeration.

    Checks, in order: the face has exactly 2^n vertices; the projection is a
    bijection from the face onto the quadric vertex set; the three dependent-
    coordinate identities hold on every face vertex; every quadric vertex
    lifts onto the face and round-trips; the face equals the lift image.
    """
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    m = 2 * n
    if lop is None:
        lop = lop_vertices(m, max_perms=max_perms)
    elif lop.layout != CoordLayout.lop(m):
        raise DimensionMismatchError(f"expected a vertex set of lop({m})")
    report = Report("theorem1", {"n": n})
    system = theorem1_system(n)
    extraction = extract_face(lop, system)
    face = extraction.face
    bqp = bqp_vertices(n)
    projection = theorem1_project(n)
    dim = lop.layout.dim

    report.check(
        "face_cardinality",
        len(face) == 2 ** n,
        witness=f"face has {len(face)} vertices, expected {2 ** n}",
    )

    images = []
    integral = True
    bad = None
    for v in face:
        coords = projection.apply_vertex(v)
        if any(c != 0 and c != 1 for c in coords):
            integral = False
            bad = v
            break
        images.append(sum(int(c) << (bqp.layout.dim - 1 - i) for i, c in enumerate(coords)))
    bijective = (
        integral
        and len(set(images)) == len(face)
        and set(images) == set(bqp.words)
    )
    report.check(
        "projection_bijective_onto_bqp",
        bijective,
        witness=f"non-integral image of {bad}" if not integral else "image set mismatch",
    )

    def bit(word: int, a: int, b: int) -> int:
        return (word >> (dim - 1 - pair_index(a, b, m))) & 1

    ok_oe = ok_oo = ok_prod = True
    w_oe = w_oo = w_prod = None
    for v in face:
        word = v.word
        for i, j in pairs(n):
            d_i = bit(word, 2 * i - 1, 2 * i)
            d_j = bit(word, 2 * j - 1, 2 * j)
            cross = bit(word, 2 * i, 2 * j)
            if ok_oe and bit(word, 2 * i - 1, 2 * j) != d_i + cross:
                ok_oe, w_oe = False, f"{v} at pair ({i},{j})"
            if ok_oo and bit(word, 2 * i - 1, 2 * j - 1) != d_i + cross - d_j:
                ok_oo, w_oo = False, f"{v} at pair ({i},{j})"
            if ok_prod and cross != d_j * (1 - d_i):
                ok_prod, w_prod = False, f"{v} at pair ({i},{j})"
    report.check("identity_cross_odd_even", ok_oe, witness=w_oe)
    report.check("identity_cross_odd_odd", ok_oo, witness=w_oo)
    report.check("identity_product", ok_prod, witness=w_prod)

    pair_bits = lop_pair_bits(m)
    lift_words = []
    lift_rows = []
    roundtrip_ok = True
    on_face_ok = True
    witness_rt = witness_face = None
    for x in bqp:
        perm = theorem1_lift(x)
        word = lop_word_from_positions(perm.pi, pair_bits)
        lift_words.append(word)
        lifted = Vertex01(dim, word)
        if lifted not in face:
            on_face_ok = False
            witness_face = f"lift of {x} -> {perm.sequence_str()}"
        back = projection.apply(lifted.bits)
        if tuple(int(c) for c in back) != x.bits:
            roundtrip_ok = False
            witness_rt = f"lift of {x} projects to {tuple(back)}"
        diag = [x.bit(i - 1) for i in range(1, n + 1)]
        zeros_desc = [i for i in range(n, 0, -1) if diag[i - 1] == 0]
        ones_desc = [i for i in range(n, 0, -1) if diag[i - 1] == 1]
        lift_rows.append(
            {
                "diagonal": "".join(str(b) for b in diag),
                "k": len(zeros_desc),
                "zeros_desc": zeros_desc,
                "ones_desc": ones_desc,
                "sequence": perm.sequence_str(),
            }
        )
    report.check("lift_lands_on_face", on_face_ok, witness=witness_face)
    report.check("lift_roundtrip", roundtrip_ok, witness=witness_rt)
    report.check(
        "face_equals_lift_image",
        set(face.words) == set(lift_words),
        witness="face and lift image differ as sets",
    )

    report.details = {
        "n": n,
        "lop_size": len(lop),
        "face_size": len(face),
        "face_sequences": [
            lop_vertex_to_perm(v, m).sequence_str() for v in face
        ],
        "lifts": lift_rows,
    }
    return report


# ---------------------------------------------------------------------------
# stable-set polytope as a projection of a face
# ---------------------------------------------------------------------------


def lemma1_system(g: Graph) -> FaceSystem:
    """Equalities over the order polytope on [2n] for a graph on [n]:
    y(i, n+j) = 0 and y(j, n+i) = 0 for every edge {i, j}."""
    n = g.n
    m = 2 * n
    layout = CoordLayout.lop(m)
    dim = layout.dim
    forms = []
    for i, j in g.sorted_edges():
        for a, b in ((i, n + j), (j, n + i)):
            coeffs = [0] * dim
            coeffs[pair_index(a, b, m)] = 1
            forms.append(LinearForm(tuple(coeffs), "=", 0))
    edges = ",".join(f"{i}{j}" for i, j in g.sorted_edges())
    return FaceSystem(layout, tuple(forms), provenance=f"lemma1(n={n};edges={edges})")


def lemma1_project(n: int) -> AffineMapQ:
    """Coordinate projection from order coordinates on [2n] onto the n
    stable-set coordinates: x(i) = y(i, n+i)."""
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    m = 2 * n
    source_dim = m * (m - 1) // 2
    rows = []
    for i in range(1, n + 1):
        row = [0] * source_dim
        row[pair_index(i, n + i, m)] = 1
        rows.append(row)
    return AffineMapQ.linear(rows)


def lemma1_lift(x: Vertex01, g: Graph) -> Permutation:
    """Permutation of [2n] whose order vector lies on the graph's face and
    projects onto the stable-set vertex ``x``.

    With k indices at 0 and n - k at 1, both taken in descending order:

      pos(i_s) = 2n - k + s,  pos(n + i_s) = s        (coordinate 0)
      pos(i'_t) = k + t,      pos(n + i'_t) = n + t   (coordinate 1)
    """
    n = g.n
    if x.dim != n:
        raise DimensionMismatchError(
            f"vertex of dim {x.dim} for a graph on {n} vertices"
        )
    for i, j in g.sorted_edges():
        if x.bit(i - 1) and x.bit(j - 1):
            raise InvalidVertexError(f"{x} is not stable: edge ({i},{j}) fully set")
    zeros_desc = [i for i in range(n, 0, -1) if x.bit(i - 1) == 0]
    ones_desc = [i for i in range(n, 0, -1) if x.bit(i - 1) == 1]
    k = len(zeros_desc)
    pos = [0] * (2 * n + 1)
    for s, i in enumerate(zeros_desc, start=1):
        pos[i] = 2 * n - k + s
        pos[n + i] = s
    for t, i in enumerate(ones_desc, start=1):
        pos[i] = k + t
        pos[n + i] = n + t
    return Permutation(tuple(pos[1:]))


def lemma1_verify(
    g: Graph, lop: VertexSet | None = None, max_perms: int = DEFAULT_MAX_PERMS
) -> Report:
    """Certify the stable-set projection for one graph by full enumeration.

    The image of the face under the coordinate projection must equal the
    stable-set vertex set (a projection, not a bijection; fiber sizes are
    recorded), and the lift of every stable vertex must land on the face.
    """
    n = g.n
    m = 2 * n
    if lop is None:
        lop = lop_vertices(m, max_perms=max_perms)
    elif lop.layout != CoordLayout.lop(m):
        raise DimensionMismatchError(f"expected a vertex set of lop({m})")
    report = Report(
        "lemma1",
        {"n": n, "edges": [f"{i} {j}" for i, j in g.sorted_edges()]},
    )
    extraction = extract_face(lop, lemma1_system(g))
    face = extraction.face
    stable = stable_vertices(g)
    dim = lop.layout.dim

    diag_bits = [
        (i, 1 << (dim - 1 - pair_index(i, n + i, m))) for i in range(1, n + 1)
    ]
    fibers: dict[int, int] = {}
    for word in face.words:
        image = 0
        for i, bit in diag_bits:
            image = (image << 1) | (1 if word & bit else 0)
        fibers[image] = fibers.get(image, 0) + 1
    report.check(
        "projection_image_equals_stable_set",
        set(fibers) == set(stable.words),
        witness=f"image size {len(fibers)}, stable size {len(stable)}",
    )

    pair_bits = lop_pair_bits(m)
    on_face = True
    projects_back = True
    witness_face = witness_back = None
    for x in stable:
        perm = lemma1_lift(x, g)
        word = lop_word_from_positions(perm.pi, pair_bits)
        if Vertex01(dim, word) not in face:
            on_face = False
            witness_face = f"lift of {x} -> {perm.sequence_str()}"
        image = 0
        for i, bit in diag_bits:
            image = (image << 1) | (1 if word & bit else 0)
        if image != x.word:
            projects_back = False
            witness_back = f"lift of {x} projects to another vertex"
    report.check("lift_lands_on_face", on_face, witness=witness_face)
    report.check("lift_projects_back", projects_back, witness=witness_back)

    stable_layout_dim = stable.layout.dim
    report.details = {
        "n": n,
        "edges": [f"{i} {j}" for i, j in g.sorted_edges()],
        "lop_size": len(lop),
        "face_size": len(face),
        "stable_size": len(stable),
        "fibers": {
            format(w, f"0{stable_layout_dim}b") if stable_layout_dim else "": c
            for w, c in sorted(fibers.items())
        },
    }
    return report


# ---------------------------------------------------------------------------
# order polytope as a face of a double-covering polytope
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DcpEmbedding:
    """Double-covering system hosting the order polytope on [m] as a face.

    Columns are ordered: y(i,j) pairs lexicographic, their complements
    yb(i,j), the two switch columns z and h, then one slack column t(i,j,k)
    per triple.  The face is cut out by z = 0, h = 1.
    """

    m: int
    matrix: FourOnesMatrix
    layout: CoordLayout
    fixed: dict[str, int]


def dcp_embedding(m: int) -> DcpEmbedding:
    """Build the double-covering system whose z=0, h=1 face is the order
    polytope on [m]:

      y(i,j) + yb(i,j) + z + h = 2          for every pair i < j,
      y(i,j) + y(j,k) + yb(i,k) + t(i,j,k) = 2   for every triple i < j < k.
    """
    if m < 3:
        raise InvalidParameterError(f"need m >= 3 (no triples exist below), got {m}")
    pair_list = pairs(m)
    triple_list = triples(m)
    npairs = len(pair_list)
    labels = (
        [f"y({i},{j})" for i, j in pair_list]
        + [f"yb({i},{j})" for i, j in pair_list]
        + ["z", "h"]
        + [f"t({i},{j},{k})" for i, j, k in triple_list]
    )
    ncols = len(labels)
    layout = CoordLayout.dcp(ncols, labels)

    def ycol(i: int, j: int) -> int:
        return pair_index(i, j, m) + 1

    def ybcol(i: int, j: int) -> int:
        return npairs + pair_index(i, j, m) + 1

    zcol = 2 * npairs + 1
    hcol = 2 * npairs + 2
    tcol = {t: 2 * npairs + 2 + idx + 1 for idx, t in enumerate(triple_list)}

    rows = []
    for i, j in pair_list:
        rows.append((ycol(i, j), ybcol(i, j), zcol, hcol))
    for i, j, k in triple_list:
        rows.append((ycol(i, j), ycol(j, k), ybcol(i, k), tcol[(i, j, k)]))
    matrix = FourOnesMatrix.from_rows(ncols, rows)
    return DcpEmbedding(m=m, matrix=matrix, layout=layout, fixed={"z": 0, "h": 1})


def dcp_face_system(emb: DcpEmbedding) -> FaceSystem:
    """The z = 0, h = 1 equalities over the embedding's column layout."""
    dim = emb.layout.dim
    forms = []
    for label, value in emb.fixed.items():
        coeffs = [0] * dim
        coeffs[emb.layout.index_of(label)] = 1
        forms.append(LinearForm(tuple(coeffs), "=", value))
    return FaceSystem(emb.layout, tuple(forms), provenance=f"dcp-face(m={emb.m})")


def dcp_verify(
    m: int,
    max_cols: int = DEFAULT_DCP_VERIFY_MAX_COLS,
    max_perms: int = DEFAULT_MAX_PERMS,
) -> Report:
    """Certify the double-covering embedding for one m by full enumeration.

    Checks the row count formula m(m-1)(m+1)/6, the four-ones row structure,
    that the z=0, h=1 face projects bijectively onto the order polytope
    vertex set, and the two dependent-coordinate identities on the face
    (complements yb = 1 - y and slacks t = 1 - (y_ij + y_jk - y_ik)).
    """
    emb = dcp_embedding(m)
    ncols = emb.layout.dim
    if ncols > max_cols:
        raise CapacityError(
            f"embedding for m={m} has {ncols} columns, over the cap of {max_cols}"
        )
    report = Report("dcp", {"m": m})
    expected_rows = m * (m - 1) * (m + 1) // 6
    report.check(
        "row_count",
        emb.matrix.k == expected_rows,
        witness=f"{emb.matrix.k} rows, expected {expected_rows}",
    )
    report.check(
        "rows_have_four_ones",
        all(len(set(row)) == 4 for row in emb.matrix.rows),
        witness="some row does not have four distinct columns",
    )

    dcp_set = dcp_vertices(emb.matrix, max_cols=max_cols, layout=emb.layout)
    extraction = extract_face(dcp_set, dcp_face_system(emb))
    face = extraction.face
    lop = lop_vertices(m, max_perms=max_perms)

    npairs = len(pairs(m))
    shift = ncols - npairs
    projected = {word >> shift for word in face.words}
    report.check(
        "face_projects_bijectively_onto_lop",
        len(face) == len(lop) and projected == set(lop.words),
        witness=f"face size {len(face)}, lop size {len(lop)}",
    )

    def col_bit(word: int, index: int) -> int:
        return (word >> (ncols - 1 - index)) & 1

    complements_ok = True
    slacks_ok = True
    w_comp = w_slack = None
    triple_list = triples(m)
    for v in face:
        word = v.word
        for i, j in pairs(m):
            y = col_bit(word, pair_index(i, j, m))
            yb = col_bit(word, npairs + pair_index(i, j, m))
            if yb != 1 - y:
                complements_ok = False
                w_comp = f"{v} at pair ({i},{j})"
        for idx, (i, j, k) in enumerate(triple_list):
            y_ij = col_bit(word, pair_index(i, j, m))
            y_jk = col_bit(word, pair_index(j, k, m))
            y_ik = col_bit(word, pair_index(i, k, m))
            t = col_bit(word, 2 * npairs + 2 + idx)
            if t != 1 - (y_ij + y_jk - y_ik):
                slacks_ok = False
                w_slack = f"{v} at triple ({i},{j},{k})"
    report.check("complement_coordinates", complements_ok, witness=w_comp)
    report.check("slack_coordinates", slacks_ok, witness=w_slack)

    report.details = {
        "m": m,
        "columns": ncols,
        "rows": emb.matrix.k,
        "dcp_size": len(dcp_set),
        "face_size": len(face),
        "lop_size": len(lop),
    }
    return report
