"""Exact feasibility of homogeneous strict linear systems.

A system is a list of rows ``r``, each standing for ``<r, x> < 0``.  There
are no constant terms, so any strict solution can be scaled until every row
has slack at least one; we therefore decide the margin form
``<r, x> <= -1``.  By Farkas' lemma exactly one of the following exists:

* a witness ``x`` with ``<r, x> <= -1`` for all rows, or
* a certificate ``y >= 0``, ``y != 0`` with ``sum_r y[r] * r == 0``.

The solver runs phase one of the simplex method (Bland's rule) on the
certificate side ``A^T y = 0, sum(y) = 1, y >= 0``.  If that is feasible the
basic solution is the certificate; otherwise the optimal phase-one duals
give the witness.  All arithmetic is on :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Vector = tuple[Fraction, ...]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


@dataclass(frozen=True)
class HomogeneousSystem:
    """Rows ``r`` encoding ``<r, x> < 0``; no constant terms by construction."""

    num_vars: int
    rows: tuple[Vector, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(_as_fraction(c) for c in r) for r in self.rows)
        if not rows:
            raise ValueError("a system needs at least one row")
        if self.num_vars < 1:
            raise ValueError("a system needs at least one variable")
        for r in rows:
            if len(r) != self.num_vars:
                raise ValueError(f"row of length {len(r)} in a system over {self.num_vars} variables")
        labels = tuple(self.labels) or tuple(f"r{i}" for i in range(len(rows)))
        if len(labels) != len(rows):
            raise ValueError("one label per row required")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class Feasibility:
    """Outcome of :func:`feasible_strict`; exactly one of the two fields is set."""

    witness: Optional[Vector] = None
    certificate: Optional[Vector] = None

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def _dot(r: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(r, x) if a), Fraction(0))


def check_witness(sys: HomogeneousSystem, x: Sequence) -> bool:
    """True iff ``<r, x> < 0`` for every row (strict, not margin form)."""
    if len(x) != sys.num_vars:
        raise ValueError(f"witness has length {len(x)}, system has {sys.num_vars} variables")
    x = [Fraction(v) for v in x]
    return all(_dot(r, x) < 0 for r in sys.rows)


def check_certificate(sys: HomogeneousSystem, y: Sequence) -> bool:
    """True iff ``y >= 0``, ``y != 0`` and ``sum_r y[r] * r`` is the zero vector."""
    if len(y) != len(sys.rows):
        raise ValueError(f"certificate has length {len(y)}, system has {len(sys.rows)} rows")
    y = [Fraction(v) for v in y]
    if any(v < 0 for v in y) or not any(y):
        return False
    for j in range(sys.num_vars):
        if sum((yi * r[j] for yi, r in zip(y, sys.rows) if yi and r[j]), Fraction(0)) != 0:
            return False
    return True


def _primitive(y: Sequence[Fraction]) -> Vector:
    """Scale a nonzero rational vector to coprime integers."""
    den = math.lcm(*(v.denominator for v in y))
    ints = [v.numerator * (den // v.denominator) for v in y]
    g = math.gcd(*ints)
    return tuple(Fraction(v // g) for v in ints)


def _phase_one(sys: HomogeneousSystem):
    """Phase-one simplex on ``G y = h``, ``G = [A^T; 1^T]``, ``h = e_last``.

    Returns ``(y, None)`` when feasible, else ``(None, duals)``.
    """
    nrows = sys.num_vars + 1
    ncols = len(sys.rows)
    width = ncols + nrows  # y columns, then one artificial per constraint
    zero, one = Fraction(0), Fraction(1)

    tab: list[list[Fraction]] = []
    for i in range(nrows):
        if i < sys.num_vars:
            row = [r[i] for r in sys.rows]
        else:
            row = [one] * ncols
        art = [zero] * nrows
        art[i] = one
        tab.append(row + art + [one if i == nrows - 1 else zero])
    basis = [ncols + i for i in range(nrows)]
    # reduced costs of the phase-one objective sum(artificials); last entry is -objective
    cost = [zero] * (width + 1)
    for j in range(ncols):
        cost[j] = -sum((tab[i][j] for i in range(nrows)), zero)
    cost[width] = -sum((tab[i][width] for i in range(nrows)), zero)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(nrows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # phase one is bounded below by zero, so this cannot happen
            raise AssertionError("unbounded phase-one problem")
        prow = tab[leave]
        piv = prow[enter]
        if piv != 1:
            prow = [v / piv if v else v for v in prow]
            tab[leave] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for i in range(nrows):
            if i == leave:
                continue
            row = tab[i]
            f = row[enter]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
        f = cost[enter]
        for j in nz:
            cost[j] -= f * prow[j]
        basis[leave] = enter

    if cost[width] == 0:
        y = [zero] * ncols
        for i, b in enumerate(basis):
            if b < ncols:
                y[b] = tab[i][width]
        return y, None
    duals = [one - cost[ncols + i] for i in range(nrows)]
    return None, duals


def feasible_strict(sys: HomogeneousSystem) -> Feasibility:
    """Decide ``exists x: <r, x> < 0 for all rows`` exactly.

    A feasible answer carries a margin-form witness (``<r, x> <= -1``); an
    infeasible one carries a certificate scaled to coprime integers.
    Deterministic: equal input gives equal output.
    """
    y, duals = _phase_one(sys)
    if y is not None:
        cert = _primitive(y)
        assert check_certificate(sys, cert)
        return Feasibility(certificate=cert)
    t = duals[-1]
    assert t > 0
    x = tuple(w / t for w in duals[:-1])
    assert all(_dot(r, x) <= -1 for r in sys.rows)
    return Feasibility(witness=x)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def dump_system(sys: HomogeneousSystem) -> str:
    """One line per row: ``label: c1 c2 ... ck``."""
    return "".join(
        f"{label}: {' '.join(format_rational(c) for c in row)}\n"
        for label, row in zip(sys.labels, sys.rows)
    )
