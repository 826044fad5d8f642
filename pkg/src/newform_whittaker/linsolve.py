"""Exact Gaussian elimination on sparse rows of Fractions."""

from fractions import Fraction

__all__ = ["LinearSystemError", "SingularSystemError", "InconsistentSystemError", "solve_sparse"]


class LinearSystemError(ArithmeticError):
    pass


class SingularSystemError(LinearSystemError):
    """Fewer independent equations than unknowns."""


class InconsistentSystemError(LinearSystemError):
    pass


def solve_sparse(equations, unknowns):
    """Solve ``sum(coeffs[x] * x) == rhs`` for every ``(coeffs, rhs)`` in ``equations``.

    ``coeffs`` maps unknown -> coefficient. The system may be overdetermined but
    must be consistent with exactly one solution; returns a dict unknown -> value.
    """
    unknowns = list(unknowns)
    index = {u: k for k, u in enumerate(unknowns)}
    if len(index) != len(unknowns):
        raise ValueError("duplicate unknowns")

    # pivot column -> (row, rhs), rows normalized so the pivot coefficient is 1
    pivots = {}
    for coeffs, rhs in equations:
        row = {}
        for u, c in coeffs.items():
            if u not in index:
                raise KeyError(f"equation mentions unknown {u!r} outside the system")
            c = Fraction(c)
            if c:
                row[index[u]] = row.get(index[u], 0) + c
        row = {k: c for k, c in row.items() if c}
        rhs = Fraction(rhs)
        # reduce against existing pivots until the leading column is new
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            prow, prhs = pivots[lead]
            factor = row[lead]
            for k, c in prow.items():
                nc = row.get(k, 0) - factor * c
                if nc:
                    row[k] = nc
                else:
                    row.pop(k, None)
            rhs -= factor * prhs
        if not row:
            if rhs != 0:
                raise InconsistentSystemError("equations are inconsistent")
            continue
        lead = min(row)
        p = row[lead]
        pivots[lead] = ({k: c / p for k, c in row.items()}, rhs / p)

    if len(pivots) < len(unknowns):
        free = [unknowns[k] for k in range(len(unknowns)) if k not in pivots]
        raise SingularSystemError(f"{len(free)} undetermined unknowns, e.g. {free[:3]}")

    values = [Fraction(0)] * len(unknowns)
    for lead in sorted(pivots, reverse=True):
        prow, prhs = pivots[lead]
        values[lead] = prhs - sum(c * values[k] for k, c in prow.items() if k != lead)
    return {u: values[k] for k, u in enumerate(unknowns)}
