"""Integer row lattices: Hermite-style echelon bases and membership tests.

Primary route: bring the generator matrix to an integer row-echelon basis
(gcd elimination, no pivots lost) and test membership by successive exact
reduction.  Independent oracle: solve the linear system over the rationals
and decide whether an integral solution exists by scanning free-variable
residues; both are pure integer/fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def row_echelon_basis(rows) -> list[list[int]]:
    """Integer row-echelon basis of the lattice spanned by the given rows."""
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    basis = []
    start = 0
    for col in range(ncols):
        live = [i for i in range(start, len(work)) if work[i][col] != 0]
        if not live:
            continue
        # gcd elimination inside this column
        while len(live) > 1:
            live.sort(key=lambda i: abs(work[i][col]))
            small = live[0]
            for i in live[1:]:
                q = work[i][col] // work[small][col]
                work[i] = [a - q * b for a, b in zip(work[i], work[small])]
            live = [i for i in live if work[i][col] != 0]
        piv = live[0]
        work[start], work[piv] = work[piv], work[start]
        if work[start][col] < 0:
            work[start] = [-a for a in work[start]]
        basis.append(work[start])
        start += 1
    # normalize entries above each pivot into [0, pivot)
    for k in range(len(basis) - 1, -1, -1):
        col = next(c for c, a in enumerate(basis[k]) if a != 0)
        piv = basis[k][col]
        for j in range(k):
            q = basis[j][col] // piv
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[k])]
    return basis


def reduce_against(basis: list[list[int]], vector) -> list[int]:
    """Reduce a vector by the echelon basis; zero output means membership."""
    v = list(map(int, vector))
    for row in basis:
        col = next(c for c, a in enumerate(row) if a != 0)
        if v[col] % row[col] == 0:
            q = v[col] // row[col]
            if q:
                v = [a - q * b for a, b in zip(v, row)]
    return v


def lattice_member(basis: list[list[int]], vector) -> bool:
    return not any(reduce_against(basis, vector))


class OracleTooLarge(RuntimeError):
    pass


def integral_solution_exists(columns: list[list[int]], target, residue_cap: int = 200_000) -> bool:
    """Whether sum_i x_i * columns[i] = target has an integer solution.

    Naive route: exact Gaussian elimination over Q, then scan free-variable
    residues modulo the common denominator for an integral assignment.
    """
    if not columns:
        return not any(target)
    ncols = len(columns)
    nrows = len(columns[0])
    aug = [
        [Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
        for i in range(nrows)
    ]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        aug[r] = [a / aug[r][c] for a in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return False
    free = [c for c in range(ncols) if c not in pivots]
    exprs = []  # x_pivot = const - sum coef_j * t_j over free vars
    for i, c in enumerate(pivots):
        exprs.append((aug[i][ncols], [aug[i][f] for f in free]))
    denoms = [e[0].denominator for e in exprs]
    for _, coefs in exprs:
        denoms.extend(x.denominator for x in coefs)
    modulus = lcm(*denoms) if denoms else 1
    if modulus == 1:
        return True
    if modulus ** len(free) > residue_cap:
        raise OracleTooLarge(
            f"residue scan of size {modulus}^{len(free)} exceeds the cap"
        )
    assignments = [()]
    for _ in free:
        assignments = [a + (t,) for a in assignments for t in range(modulus)]
    for assignment in assignments:
        ok = True
        for const, coefs in exprs:
            value = const - sum(f * t for f, t in zip(coefs, assignment))
            if value.denominator != 1:
                ok = False
                break
        if ok:
            return True
    return False
