"""Array layout: mapping a CGR graph into a grid and applying offsets.

The unshifted array stacks vertex rows, ring-edge rows, and inter-ring edge
rows; the offset vector then rotates each row left by its entry. In a primal
array, info cells carry vertex ids and parity cells carry edges (2 vertex
ids); a dual array reuses the same grid with edge-variable ids instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import POS_INF, CgrGraph, CgrParams, Factorization, build_cgr

RowKind = tuple
INFO = "info"
PARITY = "parity"
EMPTY = "empty"


@dataclass(frozen=True)
class Cell:
    """One grid entry: an info bit, a parity over several bits, or empty.

    Members are kept in construction order (ring wrap-around edges stay as
    (largest, smallest)); use vertex_set for order-free comparisons.
    """

    kind: str
    vertices: tuple[int, ...]

    @classmethod
    def info(cls, vertex: int) -> Cell:
        return cls(INFO, (vertex,))

    @classmethod
    def parity(cls, vertices: tuple[int, ...]) -> Cell:
        if len(vertices) < 2:
            raise ValueError("parity cell needs at least 2 members")
        return cls(PARITY, tuple(vertices))

    @classmethod
    def empty(cls) -> Cell:
        return cls(EMPTY, ())

    @property
    def is_info(self) -> bool:
        return self.kind == INFO

    @property
    def is_parity(self) -> bool:
        return self.kind == PARITY

    @property
    def is_empty(self) -> bool:
        return self.kind == EMPTY

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class OffsetVector:
    """Per-row left cyclic shift amounts; the code's sole free parameter."""

    offsets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def __getitem__(self, i: int) -> int:
        return self.offsets[i]

    def validate_for(self, params: CgrParams) -> None:
        if len(self.offsets) != params.num_rows:
            raise ValueError(
                f"offset vector length {len(self.offsets)} != row count {params.num_rows}"
            )
        for a in self.offsets:
            if not 0 <= a < params.v2:
                raise ValueError(f"offset entry {a} out of range [0, {params.v2 - 1}]")

    @classmethod
    def zeros(cls, params: CgrParams) -> OffsetVector:
        return cls((0,) * params.num_rows)


def as_offsets(offsets) -> OffsetVector:
    if isinstance(offsets, OffsetVector):
        return offsets
    return OffsetVector(tuple(offsets))


def standard_row_kinds(params: CgrParams) -> tuple[RowKind, ...]:
    """Row tags in canonical order: vertex rows, ring-edge rows, then
    inter-ring rows in lexicographic ring-pair order."""
    kinds: list[RowKind] = [("vertex", j) for j in range(params.v1)]
    kinds += [("ring", j) for j in range(params.v1)]
    kinds += [("inter", i, j) for i in range(params.v1) for j in range(i + 1, params.v1)]
    return tuple(kinds)


@dataclass(frozen=True)
class CodeArray:
    """The code definition: a grid of cells plus the offsets that shaped it."""

    params: CgrParams
    rows: tuple[tuple[Cell, ...], ...]
    offsets: OffsetVector
    row_kinds: tuple[RowKind, ...]

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_columns(self) -> int:
        return self.params.v2

    def column(self, c: int) -> list[Cell]:
        return [row[c] for row in self.rows]

    def info_ids(self) -> list[int]:
        """All variable ids carried by info cells, ascending."""
        ids = {cell.vertices[0] for row in self.rows for cell in row if cell.is_info}
        return sorted(ids)

    def is_dual(self) -> bool:
        """True when parity cells are wider than 2 (vertex/edge roles swapped)."""
        return any(len(cell.vertices) > 2 for row in self.rows for cell in row if cell.is_parity)


def map_unshifted(graph: CgrGraph) -> CodeArray:
    """Lay the graph out with zero shifts: V_j rows, then E_j rows, then
    inter-ring rows lexicographically."""
    rows: list[tuple[Cell, ...]] = []
    for verts in graph.vertex_sets:
        rows.append(tuple(Cell.info(v) for v in verts))
    for ring in graph.ring_edges:
        rows.append(tuple(Cell.parity(e) for e in ring))
    for pair in sorted(graph.inter_ring_edges):
        rows.append(tuple(Cell.parity(e) for e in graph.inter_ring_edges[pair]))
    return CodeArray(
        graph.params, tuple(rows), OffsetVector.zeros(graph.params), standard_row_kinds(graph.params)
    )


def apply_offsets(array: CodeArray, offsets) -> CodeArray:
    """Rotate row r left by offsets[r]; composes additively mod v2."""
    off = as_offsets(offsets)
    off.validate_for(array.params)
    v2 = array.params.v2
    rows = tuple(row[k:] + row[:k] for row, k in zip(array.rows, off))
    combined = OffsetVector(tuple((a + b) % v2 for a, b in zip(array.offsets, off)))
    return CodeArray(array.params, rows, combined, array.row_kinds)


def build_code_array(params: CgrParams, offsets) -> CodeArray:
    """Full pipeline: build the graph, lay it out, apply the offset vector."""
    return apply_offsets(map_unshifted(build_cgr(params)), offsets)


def derive_offsets(factorization: Factorization, pi=None) -> OffsetVector:
    """Assemble an offset vector from a perfect one-factorization.

    Vertex rows take offsets 0..v1-1 and ring-edge rows all take v1. The
    inter-ring row for ring pair (i, j) looks up the factor containing edge
    (i, j): the POS_INF-centered factor's edges get offset v1+2, every other
    factor's edges get pi(center label). pi must be a permutation of
    0..v1-1 (default: identity); edges touching a sentinel are ignored.
    """
    v1 = factorization.order - 2
    if pi is None:
        pi = tuple(range(v1))
    pi = tuple(pi)
    if sorted(pi) != list(range(v1)):
        raise ValueError(f"pi must be a permutation of 0..{v1 - 1}, got {pi}")
    lookup = factorization.factor_of_edge()
    entries = list(range(v1)) + [v1] * v1
    for i in range(v1):
        for j in range(i + 1, v1):
            idx = lookup[frozenset((i, j))]
            center = factorization.center_of(idx)
            entries.append(v1 + 2 if center == POS_INF else pi[int(center)])
    return OffsetVector(tuple(entries))
