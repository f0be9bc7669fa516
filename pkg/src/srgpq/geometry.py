"""Incidence structures, partial-quadrangle axiom checking, and witness graphs.

The built-in witnesses are the 4x4 rook graph, the Shrikhande graph (same
parameters, not diamond-free, used as a negative control), and the 64-vertex
collinearity graph of GQ(3,5) realized as a Cayley graph on GF(4)^3 whose
connection directions form a hyperoval of PG(2,4).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from srgpq.graphcore import Graph, bits, is_srg_report, maximal_cliques_via_edges
from srgpq.params import ParameterError, PqParams


class GeometryError(ValueError):
    """Malformed incidence data or a failed construction self-check."""


# GF(4) = {0, 1, w, w^2} encoded as 0..3; addition is xor, w^2 = w + 1.
GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


@dataclass(frozen=True)
class GF4Element:
    """Element of GF(4) in the 2-bit encoding 0, 1, w=2, w^2=3."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1, 2, 3):
            raise GeometryError(f"not a GF(4) element: {self.value!r}")

    def __add__(self, other: "GF4Element") -> "GF4Element":
        return GF4Element(self.value ^ other.value)

    def __mul__(self, other: "GF4Element") -> "GF4Element":
        return GF4Element(GF4_MUL[self.value][other.value])

    @classmethod
    def elements(cls) -> tuple["GF4Element", ...]:
        return tuple(cls(v) for v in range(4))


@dataclass(frozen=True)
class IncidenceStructure:
    """Points 0..num_points-1 and lines given as point-id tuples."""

    num_points: int
    lines: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[tuple[int, ...]] = set()
        for line in self.lines:
            if any(not 0 <= p < self.num_points for p in line):
                raise GeometryError(f"line {line} has a point outside 0..{self.num_points - 1}")
            if len(set(line)) != len(line):
                raise GeometryError(f"line {line} repeats a point")
            key = tuple(sorted(line))
            if key in seen:
                raise GeometryError(f"duplicate line {line}")
            seen.add(key)

    @classmethod
    def from_lines(cls, num_points: int, lines: Sequence[Sequence[int]]) -> "IncidenceStructure":
        return cls(num_points, tuple(tuple(sorted(line)) for line in lines))


@dataclass(frozen=True)
class PqAxiomReport:
    """Outcome of the four partial-quadrangle axioms on a structure.

    params is set exactly when all axioms hold; otherwise violated_axiom names
    the first failure and witness carries the offending configuration.
    """

    params: Optional[PqParams]
    is_generalized_quadrangle: bool
    violated_axiom: Optional[str]
    witness: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.params is not None


def _line_masks(inc: IncidenceStructure) -> list[int]:
    masks = []
    for line in inc.lines:
        mask = 0
        for p in line:
            mask |= 1 << p
        masks.append(mask)
    return masks


def _collinearity_masks(inc: IncidenceStructure) -> list[int]:
    coll = [0] * inc.num_points
    for mask in _line_masks(inc):
        for p in bits(mask):
            coll[p] |= mask & ~(1 << p)
    return coll


def verify_pq_axioms(inc: IncidenceStructure) -> PqAxiomReport:
    """Check the four PQ axioms; report parameters or the first violation."""
    if not inc.lines:
        raise GeometryError("need at least one line")

    def violation(axiom: str, witness: dict) -> PqAxiomReport:
        return PqAxiomReport(
            params=None,
            is_generalized_quadrangle=False,
            violated_axiom=axiom,
            witness=witness,
        )

    # (i) constant line size s+1 and constant point degree t+1
    s_plus_one = len(inc.lines[0])
    for index, line in enumerate(inc.lines):
        if len(line) != s_plus_one:
            return violation(
                "i", {"line": index, "size": len(line), "expected": s_plus_one}
            )
    degree = [0] * inc.num_points
    for line in inc.lines:
        for p in line:
            degree[p] += 1
    t_plus_one = degree[0]
    for p, d in enumerate(degree):
        if d != t_plus_one:
            return violation("i", {"point": p, "degree": d, "expected": t_plus_one})

    # (ii) two points on at most one common line
    pair_line: dict[tuple[int, int], int] = {}
    for index, line in enumerate(inc.lines):
        for a, b in combinations(sorted(line), 2):
            if (a, b) in pair_line:
                return violation(
                    "ii", {"points": [a, b], "lines": [pair_line[(a, b)], index]}
                )
            pair_line[(a, b)] = index

    # (iii) a point off a line is collinear with at most one of its points
    line_masks = _line_masks(inc)
    coll = _collinearity_masks(inc)
    for index, mask in enumerate(line_masks):
        for p in range(inc.num_points):
            if mask >> p & 1:
                continue
            hits = coll[p] & mask
            if hits.bit_count() > 1:
                return violation(
                    "iii", {"point": p, "line": index, "collinear_points": list(bits(hits))}
                )

    # (iv) every non-collinear pair sees exactly mu common collinear points
    mu: Optional[int] = None
    for a in range(inc.num_points):
        for b in range(a + 1, inc.num_points):
            if coll[a] >> b & 1:
                continue
            count = (coll[a] & coll[b]).bit_count()
            if mu is None:
                mu = count
            elif mu != count:
                return violation(
                    "iv", {"points": [a, b], "common": count, "expected": mu}
                )

    if mu is None:
        return violation("degenerate", {"detail": "no non-collinear point pair; mu undefined"})
    try:
        params = PqParams(s_plus_one - 1, t_plus_one - 1, mu)
    except ParameterError as exc:
        return violation("degenerate", {"detail": str(exc)})
    return PqAxiomReport(
        params=params,
        is_generalized_quadrangle=params.is_generalized_quadrangle,
        violated_axiom=None,
        witness=None,
    )


def collinearity_graph(inc: IncidenceStructure) -> Graph:
    """Graph on the points, adjacent iff co-incident with some line."""
    return Graph(_collinearity_masks(inc))


def graph_to_pq(g: Graph) -> IncidenceStructure:
    """Points = vertices, lines = maximal cliques, for a diamond-free SRG."""
    params, witness = is_srg_report(g)
    if params is None:
        raise GeometryError(f"input is not a nontrivial SRG: {witness}")
    return IncidenceStructure.from_lines(g.nu, maximal_cliques_via_edges(g))


def build_rook4() -> Graph:
    """4x4 rook graph: vertices (i, j) as 4i+j, adjacent iff same row or column."""
    edges = []
    for i in range(4):
        for j in range(4):
            for jj in range(j + 1, 4):
                edges.append((4 * i + j, 4 * i + jj))
                edges.append((4 * j + i, 4 * jj + i))
    return Graph.from_edges(16, edges)


def build_shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {(+-1,0), (0,+-1), +-(1,1)}."""
    connection = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in connection:
                u = 4 * a + b
                v = 4 * ((a + da) % 4) + (b + db) % 4
                if u < v:
                    edges.append((u, v))
    return Graph.from_edges(16, edges)


def hyperoval_points() -> tuple[tuple[int, int, int], ...]:
    """The conic {(1, c, c^2)} plus its nucleus (0,1,0) and (0,0,1) in PG(2,4)."""
    conic = tuple((1, c, GF4_MUL[c][c]) for c in range(4))
    return conic + ((0, 1, 0), (0, 0, 1))


def _gf4_det3(p: tuple[int, int, int], q: tuple[int, int, int], r: tuple[int, int, int]) -> int:
    a, b, c = (GF4Element(x) for x in p)
    d, e, f = (GF4Element(x) for x in q)
    g, h, i = (GF4Element(x) for x in r)
    term1 = a * (e * i + f * h)
    term2 = b * (d * i + f * g)
    term3 = c * (d * h + e * g)
    return (term1 + term2 + term3).value


def gq35_connection_set() -> frozenset[tuple[int, int, int]]:
    """Nonzero GF(4)^3 vectors whose projective direction lies in the hyperoval."""
    vectors = set()
    for point in hyperoval_points():
        for scale in range(1, 4):
            vectors.add(tuple(GF4_MUL[scale][c] for c in point))
    return frozenset(vectors)


def build_gq35() -> Graph:
    """Collinearity graph of GQ(3,5) as a Cayley graph on GF(4)^3.

    Vertices are vectors (a, b, c) encoded as 16a+4b+c; x ~ y iff x-y lies in
    the 18-vector connection set.  The construction self-checks the hyperoval
    property (no three of the six directions collinear in PG(2,4)).
    """
    oval = hyperoval_points()
    for triple in combinations(oval, 3):
        if _gf4_det3(*triple) == 0:
            raise GeometryError(f"hyperoval self-check failed: collinear triple {triple}")
    connection = gq35_connection_set()
    if len(connection) != 18:
        raise GeometryError(f"expected 18 connection vectors, got {len(connection)}")
    connection_ids = {16 * a + 4 * b + c for a, b, c in connection}
    rows = []
    for x in range(64):
        row = 0
        for d in connection_ids:
            row |= 1 << (x ^ d)  # componentwise GF(4) addition is xor on 2-bit fields
        rows.append(row)
    return Graph(rows)


def parse_incidence(text: str) -> IncidenceStructure:
    """Parse the incidence text format: header "P L", then L lines of point ids.

    Blank lines and lines starting with '#' are skipped.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise GeometryError("empty incidence file")
    header = rows[0].split()
    if len(header) != 2:
        raise GeometryError(f"header must be 'P L', got {rows[0]!r}")
    try:
        num_points, num_lines = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GeometryError(f"non-integer header {rows[0]!r}") from exc
    if len(rows) - 1 != num_lines:
        raise GeometryError(f"expected {num_lines} lines, found {len(rows) - 1}")
    lines = []
    for row in rows[1:]:
        try:
            lines.append(tuple(int(tok) for tok in row.split()))
        except ValueError as exc:
            raise GeometryError(f"non-integer point id in line {row!r}") from exc
    return IncidenceStructure.from_lines(num_points, lines)


def format_incidence(inc: IncidenceStructure) -> str:
    """Serialize to the incidence text format, lines in canonical order."""
    out = [f"{inc.num_points} {len(inc.lines)}"]
    for line in sorted(tuple(sorted(l)) for l in inc.lines):
        out.append(" ".join(str(p) for p in line))
    return "\n".join(out) + "\n"
