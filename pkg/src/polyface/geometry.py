"""Exact rational linear programming and the vertex-geometry predicates.

The solver is a two-phase primal simplex over ``fractions.Fraction`` with
Bland's anti-cycling rule and explicit artificial variables: slow by design,
exact by construction.  Every answer is audited by substituting the returned
point back into the constraints before it leaves this module.

Derived predicates:

* ``conv_membership`` - hull membership as pure LP feasibility,
* ``adjacent``        - two vertices are adjacent iff their midpoint escapes
                        the hull of the remaining vertices,
* ``is_face_subset``  - a vertex subset is a face iff a hyperplane holds it
                        with equality and clears everything else by a unit
                        gap (lossless for rational data after scaling),
* ``clique_check``    - pairwise adjacency of a vertex list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .core import LinearForm, Vertex01, VertexSet
from .errors import (
    DimensionMismatchError,
    InvalidParameterError,
    InvalidVertexError,
    PolyfaceError,
)

RELATIONS = ("<=", ">=", "=")


@dataclass(frozen=True)
class RationalPoint:
    """A point with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def of(cls, values) -> "RationalPoint":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def from_vertex(cls, v: Vertex01) -> "RationalPoint":
        return cls(tuple(Fraction(b) for b in v.bits))

    @classmethod
    def midpoint(cls, u: Vertex01, v: Vertex01) -> "RationalPoint":
        if u.dim != v.dim:
            raise DimensionMismatchError(f"midpoint of dims {u.dim} and {v.dim}")
        return cls(
            tuple(Fraction(a + b, 2) for a, b in zip(u.bits, v.bits))
        )


@dataclass(frozen=True)
class LPConstraint:
    coeffs: tuple
    relation: str
    rhs: object

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise InvalidParameterError(f"relation must be one of {RELATIONS}")


@dataclass(frozen=True)
class LPProblem:
    """A linear program over exact rationals.

    Variables are free unless ``nonnegative`` is set.  ``objective`` is
    optional; without it only feasibility is decided.
    """

    variables: int
    constraints: tuple[LPConstraint, ...]
    objective: tuple | None = None
    sense: str = "max"
    nonnegative: bool = False


@dataclass(frozen=True)
class LPResult:
    status: str  # "feasible" | "optimal" | "infeasible" | "unbounded"
    point: tuple[Fraction, ...] | None = None
    objective_value: Fraction | None = None


class _Tableau:
    """Dense simplex tableau with Bland's rule over exact rationals."""

    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.cost = []
        self.cost_const = 0

    @property
    def m(self) -> int:
        return len(self.rows)

    def pivot(self, r: int, j: int) -> None:
        piv = self.rows[r][j]
        if piv != 1:
            inv = Fraction(1) / piv
            self.rows[r] = [c * inv for c in self.rows[r]]
            self.rhs[r] = self.rhs[r] * inv
        prow = self.rows[r]
        prhs = self.rhs[r]
        for i in range(self.m):
            if i == r:
                continue
            f = self.rows[i][j]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], prow)]
                self.rhs[i] = self.rhs[i] - f * prhs
        f = self.cost[j]
        if f:
            self.cost = [a - f * b for a, b in zip(self.cost, prow)]
            self.cost_const = self.cost_const - f * prhs
        self.basis[r] = j

    def minimize(self, enterable: int) -> str:
        """Run Bland's rule to optimality over columns [0, enterable).

        Entering: lowest-index column with negative reduced cost.  Leaving:
        minimum ratio, ties broken by lowest basic-variable index.
        """
        while True:
            enter = -1
            cost = self.cost
            for j in range(enterable):
                if cost[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            best_key = None
            best_row = -1
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    key = (Fraction(self.rhs[i]) / a, self.basis[i])
                    if best_key is None or key < best_key:
                        best_key = key
                        best_row = i
            if best_row < 0:
                return "unbounded"
            self.pivot(best_row, enter)

    def value(self):
        return -self.cost_const


def _audit(problem: LPProblem, point) -> None:
    for con in problem.constraints:
        value = sum(c * x for c, x in zip(con.coeffs, point))
        ok = (
            value <= con.rhs
            if con.relation == "<="
            else value >= con.rhs if con.relation == ">=" else value == con.rhs
        )
        if not ok:
            raise PolyfaceError(
                f"simplex returned a point violating {con.relation} constraint"
            )
    if problem.nonnegative and any(x < 0 for x in point):
        raise PolyfaceError("simplex returned a negative coordinate")


def lp_feasible(problem: LPProblem) -> LPResult:
    """Solve the program exactly.

    Without an objective, stops after phase one and reports feasibility with
    an exact witness point.  With an objective, continues to optimality and
    reports unboundedness distinctly.
    """
    nvars = problem.variables
    if nvars < 0:
        raise InvalidParameterError("variable count must be >= 0")
    for con in problem.constraints:
        if len(con.coeffs) != nvars:
            raise DimensionMismatchError(
                f"constraint of width {len(con.coeffs)} in a {nvars}-variable program"
            )
    if problem.objective is not None and len(problem.objective) != nvars:
        raise DimensionMismatchError("objective width does not match variable count")
    if problem.sense not in ("max", "min"):
        raise InvalidParameterError(f"sense must be 'max' or 'min', got {problem.sense}")

    # Standard form: free variables split into positive and negative parts.
    if problem.nonnegative:
        def expand(coeffs):
            return list(coeffs)

        ncols_real = nvars
    else:
        def expand(coeffs):
            row = []
            for c in coeffs:
                row.append(c)
                row.append(-c)
            return row

        ncols_real = 2 * nvars

    body = []
    rhs = []
    relations = []
    for con in problem.constraints:
        row = expand(con.coeffs)
        b = con.rhs
        rel = con.relation
        if b < 0:
            row = [-c for c in row]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        body.append(row)
        rhs.append(b)
        relations.append(rel)

    nslack = sum(1 for rel in relations if rel != "=")
    width = ncols_real + nslack
    k = 0
    for i, rel in enumerate(relations):
        pad = [0] * nslack
        if rel != "=":
            pad[k] = 1 if rel == "<=" else -1
            k += 1
        body[i] = body[i] + pad

    nrows = len(body)
    art = width
    for i in range(nrows):
        body[i] = body[i] + [1 if j == i else 0 for j in range(nrows)]
    basis = [art + i for i in range(nrows)]
    tab = _Tableau(body, rhs, basis)

    # Phase one: minimize the sum of artificials.
    tab.cost = [
        -sum(tab.rows[i][j] for i in range(nrows)) if j < art else 0
        for j in range(art + nrows)
    ]
    tab.cost_const = -sum(rhs)
    status = tab.minimize(art)
    if status != "optimal":  # phase one is bounded below by zero
        raise PolyfaceError("internal error: unbounded feasibility phase")
    if tab.value() != 0:
        return LPResult("infeasible")

    # Drive artificials out of the basis; drop rows that turn out redundant.
    drop = []
    for r in range(tab.m):
        if tab.basis[r] >= art:
            enter = next(
                (j for j in range(art) if tab.rows[r][j] != 0),
                None,
            )
            if enter is None:
                drop.append(r)
            else:
                tab.pivot(r, enter)
    if drop:
        keep = [r for r in range(tab.m) if r not in drop]
        tab.rows = [tab.rows[r] for r in keep]
        tab.rhs = [tab.rhs[r] for r in keep]
        tab.basis = [tab.basis[r] for r in keep]
    tab.rows = [row[:art] for row in tab.rows]

    def extract() -> tuple[Fraction, ...]:
        std = [Fraction(0)] * width
        for r, j in enumerate(tab.basis):
            std[j] = Fraction(tab.rhs[r])
        if problem.nonnegative:
            point = tuple(std[:nvars])
        else:
            point = tuple(std[2 * i] - std[2 * i + 1] for i in range(nvars))
        _audit(problem, point)
        return point

    if problem.objective is None:
        return LPResult("feasible", extract())

    # Phase two on the real objective.
    sign = -1 if problem.sense == "max" else 1
    c_std = [sign * c for c in expand(problem.objective)] + [0] * nslack
    tab.cost = [
        c_std[j] - sum(c_std[tab.basis[i]] * tab.rows[i][j] for i in range(tab.m))
        for j in range(width)
    ]
    tab.cost_const = -sum(c_std[tab.basis[i]] * tab.rhs[i] for i in range(tab.m))
    status = tab.minimize(width)
    if status == "unbounded":
        return LPResult("unbounded")
    point = extract()
    value = sum(
        (c * x for c, x in zip(problem.objective, point)), start=Fraction(0)
    )
    return LPResult("optimal", point, value)


def conv_membership(p: RationalPoint, v: VertexSet) -> bool:
    """True iff ``p`` is a convex combination of the vertices of ``v``."""
    dim = v.layout.dim
    if p.dim != dim:
        raise DimensionMismatchError(
            f"point of dim {p.dim} against vertex set of dim {dim}"
        )
    words = v.words
    n = len(words)
    constraints = []
    for d in range(dim):
        shift = dim - 1 - d
        coeffs = tuple((w >> shift) & 1 for w in words)
        constraints.append(LPConstraint(coeffs, "=", p.coords[d]))
    constraints.append(LPConstraint((1,) * n, "=", 1))
    result = lp_feasible(
        LPProblem(variables=n, constraints=tuple(constraints), nonnegative=True)
    )
    return result.status == "feasible"


def adjacent(u: Vertex01, v: Vertex01, vset: VertexSet) -> bool:
    """Midpoint criterion: u and v are adjacent vertices iff (u+v)/2 lies
    outside the hull of the remaining vertices."""
    if u == v:
        raise InvalidParameterError("adjacency needs two distinct vertices")
    if u not in vset or v not in vset:
        raise InvalidVertexError("both vertices must belong to the set")
    rest = vset.restrict_to_words(
        w for w in vset.words if w != u.word and w != v.word
    )
    return not conv_membership(RationalPoint.midpoint(u, v), rest)


def is_face_subset(
    s: list[Vertex01], vset: VertexSet
) -> tuple[bool, LinearForm | None]:
    """Decide whether ``s`` is exactly the vertex set of a face.

    Searches for a rational hyperplane a.x = b with a.x = b on ``s`` and
    a.x <= b - 1 on every other vertex (the unit gap costs nothing after
    scaling).  On success returns an integer certificate, re-validated
    against all vertices before being returned.
    """
    if not s:
        raise InvalidParameterError("the candidate face must be nonempty")
    dim = vset.layout.dim
    want = set()
    for x in s:
        if x not in vset:
            raise InvalidVertexError(f"{x} is not a vertex of the set")
        want.add(x.word)
    constraints = []
    for word in vset.words:
        coeffs = tuple(
            (word >> (dim - 1 - d)) & 1 for d in range(dim)
        ) + (-1,)
        if word in want:
            constraints.append(LPConstraint(coeffs, "=", 0))
        else:
            constraints.append(LPConstraint(coeffs, "<=", -1))
    result = lp_feasible(
        LPProblem(variables=dim + 1, constraints=tuple(constraints))
    )
    if result.status != "feasible":
        return False, None
    point = result.point
    scale = lcm(*(Fraction(c).denominator for c in point)) if point else 1
    coeffs = tuple(int(c * scale) for c in point[:dim])
    beta = int(point[dim] * scale)
    certificate = LinearForm(coeffs, "<=", beta)
    for word in vset.words:
        value = certificate.evaluate_word(word)
        if word in want:
            if value != beta:
                raise PolyfaceError("face certificate failed equality re-validation")
        elif value > beta - 1:
            raise PolyfaceError("face certificate failed gap re-validation")
    return True, certificate


def clique_check(s: list[Vertex01], vset: VertexSet) -> bool:
    """True iff all vertices in ``s`` are pairwise adjacent in ``vset``."""
    if len(s) < 2:
        raise InvalidParameterError("a clique check needs at least two vertices")
    for a in range(len(s)):
        for b in range(a + 1, len(s)):
            if not adjacent(s[a], s[b], vset):
                return False
    return True
