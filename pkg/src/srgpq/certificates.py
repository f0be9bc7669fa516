"""Exact linear-system certificates for combinatorial nonexistence arguments.

A counting system is a small integer linear system whose unknowns are
nonnegative integer counts.  The solver row-reduces over the rationals,
expresses pivot unknowns as affine forms in the free unknowns, and decides
nonnegative-integer feasibility for systems with at most one free unknown
(the only shape this toolkit produces).  Inconsistent systems come with a
certificate: the multipliers of a rational combination of the input
equations reducing to 0 = nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, lcm
from typing import Optional, Sequence


class CertificateError(ValueError):
    """Malformed counting system input."""


@dataclass(frozen=True)
class AffineForm:
    """constant + sum coefficient_i * unknown_i over the free unknowns."""

    constant: Fraction
    coefficients: dict[str, Fraction] = field(default_factory=dict)

    def evaluate(self, assignment: dict[str, Fraction]) -> Fraction:
        total = self.constant
        for name, coefficient in self.coefficients.items():
            total += coefficient * assignment[name]
        return total

    def render(self) -> str:
        parts = [str(self.constant)]
        for name in sorted(self.coefficients):
            coefficient = self.coefficients[name]
            if coefficient == 0:
                continue
            sign = "+" if coefficient > 0 else "-"
            magnitude = abs(coefficient)
            term = name if magnitude == 1 else f"{magnitude}*{name}"
            parts.append(f"{sign} {term}")
        return " ".join(parts)


@dataclass(frozen=True)
class CountingSystem:
    """A solved integer counting system.

    parametric_solution maps every unknown to an affine form in the free
    unknowns.  feasible is True/False when nonnegative-integer solvability
    was decided, None when the free space has dimension two or more.
    """

    unknowns: tuple[str, ...]
    equations: tuple[tuple[tuple[int, ...], int], ...]
    parametric_solution: dict[str, AffineForm]
    free_unknowns: tuple[str, ...]
    feasible: Optional[bool]
    example: Optional[dict[str, int]] = None
    inconsistency_certificate: Optional[tuple[str, ...]] = None

    def substituted_residuals(self) -> list[tuple[AffineForm, int]]:
        """Each equation with the parametric solution substituted in, symbolically."""
        residuals = []
        for coefficients, rhs in self.equations:
            constant = Fraction(0)
            combined: dict[str, Fraction] = {}
            for coefficient, name in zip(coefficients, self.unknowns):
                if coefficient == 0:
                    continue
                form = self.parametric_solution[name]
                constant += coefficient * form.constant
                for free, value in form.coefficients.items():
                    combined[free] = combined.get(free, Fraction(0)) + coefficient * value
            residuals.append((AffineForm(constant, combined), rhs))
        return residuals

    def substitution_is_identical(self) -> bool:
        """True when every equation reduces to rhs = rhs with no free-term residue."""
        for form, rhs in self.substituted_residuals():
            if form.constant != rhs:
                return False
            if any(value != 0 for value in form.coefficients.values()):
                return False
        return True


def _feasibility_one_free(
    unknowns: Sequence[str], solution: dict[str, AffineForm], free: str
) -> tuple[Optional[bool], Optional[dict[str, int]]]:
    """Nonnegative-integer feasibility when exactly one unknown is free.

    Intersects the rational interval forced by every affine nonnegativity
    constraint, then scans integers (one residue window suffices when the
    interval is unbounded, since integrality of the forms is periodic).
    """
    lower = Fraction(0)  # the free unknown is itself a count
    upper: Optional[Fraction] = None
    for name in unknowns:
        form = solution[name]
        coefficient = form.coefficients.get(free, Fraction(0))
        if coefficient == 0:
            if form.constant < 0:
                return False, None
            continue
        boundary = -form.constant / coefficient
        if coefficient > 0:
            lower = max(lower, boundary)
        else:
            upper = boundary if upper is None else min(upper, boundary)
    if upper is not None and lower > upper:
        return False, None

    denominators = [solution[name].constant.denominator for name in unknowns]
    denominators += [
        solution[name].coefficients.get(free, Fraction(0)).denominator for name in unknowns
    ]
    window = lcm(*denominators) if denominators else 1

    start = ceil(lower)
    if upper is None:
        stop = start + window - 1
    else:
        stop = floor(upper)
    for candidate in range(start, stop + 1):
        assignment = {free: Fraction(candidate)}
        values = {name: solution[name].evaluate(assignment) for name in unknowns}
        if all(value >= 0 and value.denominator == 1 for value in values.values()):
            return True, {name: int(value) for name, value in values.items()}
    return False, None


def solve_counting_system(
    equations: Sequence[tuple[Sequence[int], int]], unknowns: Sequence[str]
) -> CountingSystem:
    """Row-reduce an integer linear system exactly and decide count feasibility.

    Free columns are the non-pivot unknowns (highest-indexed unknowns stay
    free under left-to-right pivoting).  Systems with two or more free
    unknowns report feasible=None rather than searching.
    """
    unknowns = tuple(unknowns)
    width = len(unknowns)
    if not equations:
        raise CertificateError("need at least one equation")
    for coefficients, _ in equations:
        if len(coefficients) != width:
            raise CertificateError(
                f"equation width {len(coefficients)} does not match {width} unknowns"
            )
    equations = tuple((tuple(map(int, coeffs)), int(rhs)) for coeffs, rhs in equations)

    height = len(equations)
    # augmented with the identity to track row operations for certificates
    rows = [
        [Fraction(c) for c in coeffs]
        + [Fraction(rhs)]
        + [Fraction(1 if i == j else 0) for j in range(height)]
        for i, ((coeffs, rhs)) in enumerate(equations)
    ]
    pivot_of_column: dict[int, int] = {}
    pivot_row = 0
    for column in range(width):
        target = next((r for r in range(pivot_row, height) if rows[r][column] != 0), None)
        if target is None:
            continue
        rows[pivot_row], rows[target] = rows[target], rows[pivot_row]
        scale = rows[pivot_row][column]
        rows[pivot_row] = [value / scale for value in rows[pivot_row]]
        for r in range(height):
            if r != pivot_row and rows[r][column] != 0:
                factor = rows[r][column]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_of_column[column] = pivot_row
        pivot_row += 1
        if pivot_row == height:
            break

    # inconsistent row: all zero coefficients, nonzero rhs
    for r in range(height):
        if all(rows[r][c] == 0 for c in range(width)) and rows[r][width] != 0:
            multipliers = tuple(str(rows[r][width + 1 + j]) for j in range(height))
            zero = AffineForm(Fraction(0))
            return CountingSystem(
                unknowns=unknowns,
                equations=equations,
                parametric_solution={name: zero for name in unknowns},
                free_unknowns=(),
                feasible=False,
                inconsistency_certificate=multipliers,
            )

    free = tuple(unknowns[c] for c in range(width) if c not in pivot_of_column)
    solution: dict[str, AffineForm] = {}
    for column, name in enumerate(unknowns):
        if column not in pivot_of_column:
            solution[name] = AffineForm(Fraction(0), {name: Fraction(1)})
            continue
        row = rows[pivot_of_column[column]]
        coefficients = {
            unknowns[c]: -row[c]
            for c in range(width)
            if c != column and c not in pivot_of_column and row[c] != 0
        }
        solution[name] = AffineForm(row[width], coefficients)

    if not free:
        values = {name: solution[name].constant for name in unknowns}
        ok = all(v >= 0 and v.denominator == 1 for v in values.values())
        example = {name: int(v) for name, v in values.items()} if ok else None
        feasible: Optional[bool] = ok
    elif len(free) == 1:
        feasible, example = _feasibility_one_free(unknowns, solution, free[0])
    else:
        feasible, example = None, None

    return CountingSystem(
        unknowns=unknowns,
        equations=equations,
        parametric_solution=solution,
        free_unknowns=free,
        feasible=feasible,
        example=example,
    )


def pq_3_35_20_certificate() -> CountingSystem:
    """The counting system ruling out a diamond-free SRG(676, 108, 2, 20).

    Counts s_i of triangle cells in a vertex neighborhood sending i edges to
    a fixed external triangle satisfy s_0+s_1+s_2+s_3 = 35, s_1+2s_2+3s_3 = 57
    and s_2+3s_3 = 21, which forces s_0 = -1 - s_3 < 0.
    """
    unknowns = ("s_0", "s_1", "s_2", "s_3")
    equations = [
        ((1, 1, 1, 1), 35),
        ((0, 1, 2, 3), 57),
        ((0, 0, 1, 3), 21),
    ]
    return solve_counting_system(equations, unknowns)
