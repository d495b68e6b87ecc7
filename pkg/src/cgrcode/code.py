"""Encoding, erasure decoding, MDS verification, duals, and complexity.

Cell values live over GF(2). Decoding seeds known bits from surviving info
cells, peels 2-ary parity cells with one unknown, and falls back to Gaussian
elimination; verification checks that every legal set of surviving columns
spans the full variable space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .graph import CgrParams, build_cgr
from .layout import Cell, CodeArray


class UnrecoverableError(Exception):
    """Raised when surviving cells do not determine every variable."""

    def __init__(self, pattern: ErasurePattern, rank: int, nvars: int):
        super().__init__(
            f"erasure pattern {sorted(pattern.erased_columns)} leaves rank "
            f"{rank} < {nvars} unknowns"
        )
        self.pattern = pattern
        self.rank = rank
        self.nvars = nvars


@dataclass(frozen=True)
class ErasurePattern:
    """The set of simultaneously lost columns."""

    erased_columns: frozenset[int]

    @classmethod
    def of(cls, columns) -> ErasurePattern:
        return cls(frozenset(columns))

    def validate_for(self, params: CgrParams) -> None:
        for c in self.erased_columns:
            if not 0 <= c < params.v2:
                raise ValueError(f"erased column {c} out of range [0, {params.v2 - 1}]")

    def survivors(self, v2: int) -> list[int]:
        return [c for c in range(v2) if c not in self.erased_columns]


@dataclass(frozen=True)
class Codeword:
    """A code array together with concrete bit values for every cell."""

    array: CodeArray
    info_bits: dict[int, int]
    cell_values: tuple[tuple[int, ...], ...]


@dataclass
class DecodeReport:
    """Decode outcome: recovered bits plus operation accounting.

    xor_count covers chain decoding (peeling steps and reconstruction of
    erased cells, arity-1 XORs each); elimination_xor_count separately
    reports row operations spent inside the GF(2) fallback, if it ran.
    """

    recovered: dict[int, int]
    peeling_sufficed: bool
    xor_count: int
    elimination_xor_count: int = 0


@dataclass(frozen=True)
class MdsResult:
    """Verdict of an exhaustive erasure sweep, with a counterexample if any."""

    is_mds: bool
    witness: ErasurePattern | None
    patterns_checked: int

    def __bool__(self) -> bool:
        return self.is_mds


def _var_positions(array: CodeArray) -> dict[int, int]:
    return {v: i for i, v in enumerate(array.info_ids())}


def encode(array: CodeArray, info_bits: dict[int, int]) -> Codeword:
    """Fill every cell: info cells copy their bit, parity cells XOR theirs."""
    required = set(array.info_ids())
    given = set(info_bits)
    if given != required:
        missing = sorted(required - given)[:5]
        extra = sorted(given - required)[:5]
        raise ValueError(f"info_bits mismatch: missing {missing}, extra {extra}")
    values = tuple(
        tuple(
            0
            if cell.is_empty
            else info_bits[cell.vertices[0]]
            if cell.is_info
            else _xor_all(info_bits[v] for v in cell.vertices)
            for cell in row
        )
        for row in array.rows
    )
    return Codeword(array, dict(info_bits), values)


def _xor_all(bits) -> int:
    acc = 0
    for b in bits:
        acc ^= b
    return acc


def erase(codeword: Codeword, pattern: ErasurePattern) -> tuple[tuple[int | None, ...], ...]:
    """Cell values with erased columns blanked to None."""
    pattern.validate_for(codeword.array.params)
    return tuple(
        tuple(None if c in pattern.erased_columns else v for c, v in enumerate(row))
        for row in codeword.cell_values
    )


def decode(
    array: CodeArray,
    values,
    pattern: ErasurePattern,
    force_elimination: bool = False,
) -> DecodeReport:
    """Recover every variable from the surviving columns.

    values is a full grid of cell values; erased columns are never read.
    Raises UnrecoverableError when the surviving system is rank-deficient.
    """
    pattern.validate_for(array.params)
    pos = _var_positions(array)
    nvars = len(pos)
    surviving = pattern.survivors(array.params.v2)

    known: dict[int, int] = {}
    parity_cells: list[tuple[tuple[int, ...], int]] = []
    for r, row in enumerate(array.rows):
        for c in surviving:
            cell = row[c]
            if cell.is_info:
                known[cell.vertices[0]] = values[r][c]
            elif cell.is_parity:
                parity_cells.append((cell.vertices, values[r][c]))

    xor_count = 0
    if not force_elimination:
        pending = [pc for pc in parity_cells if len(pc[0]) == 2]
        progress = True
        while progress:
            progress = False
            remaining = []
            for members, value in pending:
                unknown = [v for v in members if v not in known]
                if len(unknown) == 1:
                    acc = value
                    for v in members:
                        if v in known:
                            acc ^= known[v]
                    known[unknown[0]] = acc
                    xor_count += len(members) - 1
                    progress = True
                elif len(unknown) > 1:
                    remaining.append((members, value))
            pending = remaining

    peeling_sufficed = not force_elimination and len(known) == nvars
    elimination_ops = 0
    if len(known) < nvars or force_elimination:
        equations = []
        for r, row in enumerate(array.rows):
            for c in surviving:
                cell = row[c]
                if cell.is_empty:
                    continue
                mask = 0
                for v in cell.vertices:
                    mask |= 1 << pos[v]
                equations.append((mask, values[r][c]))
        solved = gf2.solve_unique(equations, nvars)
        if solved is None:
            deficit = gf2.rank([m for m, _ in equations])
            raise UnrecoverableError(pattern, deficit, nvars)
        assignment, elimination_ops = solved
        inverse = {i: v for v, i in pos.items()}
        known = {inverse[p]: bit for p, bit in assignment.items()}

    # Rebuilding each erased cell from recovered bits costs arity-1 XORs.
    for c in sorted(pattern.erased_columns):
        for row in array.rows:
            cell = row[c]
            if cell.is_parity:
                xor_count += len(cell.vertices) - 1

    return DecodeReport(known, peeling_sufficed, xor_count, elimination_ops)


def _column_masks(array: CodeArray) -> list[list[int]]:
    pos = _var_positions(array)
    masks: list[list[int]] = [[] for _ in range(array.params.v2)]
    for row in array.rows:
        for c, cell in enumerate(row):
            mask = 0
            for v in cell.vertices:
                mask |= 1 << pos[v]
            masks[c].append(mask)
    return masks


def _sweep(array: CodeArray, erased_patterns) -> MdsResult:
    """Full-rank check for each erasure pattern, stopping at the first hole."""
    v2 = array.params.v2
    nvars = len(array.info_ids())
    col_masks = _column_masks(array)
    checked = 0
    for erased in erased_patterns:
        checked += 1
        rows: list[int] = []
        erased_set = set(erased)
        for c in range(v2):
            if c not in erased_set:
                rows.extend(col_masks[c])
        if gf2.rank(rows) < nvars:
            return MdsResult(False, ErasurePattern.of(erased), checked)
    return MdsResult(True, None, checked)


def verify_mds(array: CodeArray) -> MdsResult:
    """True iff any 2 surviving columns determine all vertex bits.

    Survivor pairs are swept in lexicographic order; the witness (on
    failure) is the erased complement of the first failing pair.
    """
    if array.is_dual():
        raise ValueError("verify_mds expects a primal array; use verify_dual_mds")
    v2 = array.params.v2
    patterns = (
        tuple(c for c in range(v2) if c not in pair)
        for pair in itertools.combinations(range(v2), 2)
    )
    return _sweep(array, patterns)


def verify_dual_mds(array: CodeArray) -> MdsResult:
    """True iff the dual code survives every loss of 2 columns, swept in
    lexicographic erased-pair order.

    Accepts a primal array (dualized internally) or an already-dual array.
    """
    dual = array if array.is_dual() else dualize(array)
    return _sweep(dual, itertools.combinations(range(array.params.v2), 2))


def dualize(array: CodeArray) -> CodeArray:
    """Swap vertex and edge roles on the same grid.

    Primal -> dual: each parity cell over edge (u, v) becomes the info cell
    of that edge's variable; each info cell of vertex v becomes a parity over
    the v1+1 edge variables incident to v. Edge variables are numbered in
    row-major order of the unshifted parity rows. Applying dualize twice
    restores the original array exactly.
    """
    graph = build_cgr(array.params)
    edges = graph.edge_list()
    edge_id = {frozenset(e): i for i, e in enumerate(edges)}
    incident: dict[int, list[int]] = {v: [] for v in range(array.params.num_vertices)}
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    def primal_to_dual(cell: Cell) -> Cell:
        if cell.is_info:
            return Cell.parity(tuple(sorted(incident[cell.vertices[0]])))
        if cell.is_parity:
            return Cell.info(edge_id[cell.vertex_set])
        return cell

    def dual_to_primal(cell: Cell) -> Cell:
        if cell.is_info:
            return Cell.parity(edges[cell.vertices[0]])
        if cell.is_parity:
            common = set(edges[cell.vertices[0]])
            for eid in cell.vertices[1:]:
                common &= set(edges[eid])
            (vertex,) = common
            return Cell.info(vertex)
        return cell

    mapper = dual_to_primal if array.is_dual() else primal_to_dual
    rows = tuple(tuple(mapper(cell) for cell in row) for row in array.rows)
    return CodeArray(array.params, rows, array.offsets, array.row_kinds)


def update_complexity(params: CgrParams) -> Fraction:
    """Parity cells touched per single info-bit update, averaged: each bit
    feeds v1+1 parities out of v1*v2 info bits."""
    return Fraction(params.v1 + 1, params.v1 * params.v2)


def decode_complexity(report: DecodeReport, params: CgrParams, pattern: ErasurePattern) -> Fraction:
    """Chain-decoding XORs per erased symbol, normalized by the v1*v2-bit
    payload; 0 when nothing was erased."""
    erased = len(pattern.erased_columns)
    if erased == 0:
        return Fraction(0)
    return Fraction(report.xor_count, erased * params.num_vertices)
