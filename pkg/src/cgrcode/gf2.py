"""GF(2) linear algebra on integer bitmasks.

An equation system is a list of (mask, rhs) pairs: mask is an int whose set
bits select variables, rhs is 0 or 1, and the equation asserts that the XOR
of the selected variables equals rhs.
"""

from __future__ import annotations


def rank(masks: list[int]) -> int:
    """Rank of a set of GF(2) row vectors given as bitmasks."""
    basis: dict[int, int] = {}
    for m in masks:
        while m:
            p = m.bit_length() - 1
            if p not in basis:
                basis[p] = m
                break
            m ^= basis[p]
    return len(basis)


def solve_unique(equations: list[tuple[int, int]], nvars: int) -> tuple[dict[int, int], int] | None:
    """Solve a GF(2) system for a unique assignment of all nvars variables.

    Returns (assignment, xor_ops) where assignment maps variable index to bit
    and xor_ops counts row-XOR operations performed, or None when the system
    is rank-deficient. Raises ValueError on an inconsistent system.
    """
    # Gauss-Jordan: keep every basis row fully reduced against all pivots so
    # that at full rank each row pins down exactly one variable.
    basis: dict[int, tuple[int, int]] = {}
    ops = 0
    for m, r in equations:
        for q in list(basis):
            if (m >> q) & 1:
                bm, br = basis[q]
                m ^= bm
                r ^= br
                ops += 1
        if not m:
            if r:
                raise ValueError("inconsistent GF(2) system")
            continue
        p = m.bit_length() - 1
        for q, (bm, br) in basis.items():
            if (bm >> p) & 1:
                basis[q] = (bm ^ m, br ^ r)
                ops += 1
        basis[p] = (m, r)
    if len(basis) < nvars:
        return None
    return {p: r for p, (_, r) in basis.items()}, ops
