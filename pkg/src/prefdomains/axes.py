"""Single-peaked axes: recognition, enumeration, and obstruction witnesses.

An axis is a left-to-right ordering of all alternatives.  An axis and its
mirror image are single-peaked for exactly the same voters, so axes are
always reported in canonical orientation: the lexicographically smaller of
the axis and its reverse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .prefcore import Profile, ProfileError

Axis = tuple[int, ...]

DEFAULT_AXIS_CAP = 1024


def canonical(order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    rev = order[::-1]
    return min(order, rev)


def _check_axis(p: Profile, ax: Sequence[int]) -> None:
    if sorted(ax) != list(p.alternatives):
        raise ProfileError(f"axis {tuple(ax)} is not a permutation of 1..{p.m}")


def is_single_peaked_on(p: Profile, ax: Sequence[int]) -> bool:
    """True iff every voter's preferences rise to a single peak along ``ax`` and then fall.

    Checked as: for every voter and every t, the t least preferred
    alternatives occupy a prefix plus a suffix of the axis.  Equivalently,
    peeling the voter's ranking from the bottom always removes an end of
    the remaining axis interval.
    """
    _check_axis(p, ax)
    where = {a: t for t, a in enumerate(ax)}
    for ranking in p.rankings:
        lo, hi = 0, p.m - 1
        for a in reversed(ranking):
            t = where[a]
            if t == lo:
                lo += 1
            elif t == hi:
                hi -= 1
            else:
                return False
    return True


@dataclass(frozen=True)
class AxisEnumeration:
    axes: tuple[Axis, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.axes)

    def __len__(self):
        return len(self.axes)

    def __bool__(self):
        return bool(self.axes)


def enumerate_axes(p: Profile, cap: int = DEFAULT_AXIS_CAP) -> AxisEnumeration:
    """All canonical single-peaked axes of ``p``, sorted lexicographically.

    Backtracking from the outside in: among the not yet placed alternatives,
    every alternative that some voter ranks last must sit at one of the two
    free ends.  The first placement fixes the orientation, so each mirror
    pair is generated once.  Stops after ``cap`` axes and sets ``truncated``
    when more exist; in that case the returned axes are the first ``cap``
    found, sorted.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    pos = [p.positions(v) for v in p.voters]
    found: set[Axis] = set()
    truncated = False

    def worst_of(remaining: frozenset[int]) -> list[int]:
        worst = {max(remaining, key=vp.__getitem__) for vp in pos}
        return sorted(worst)

    def rec(left: list[int], right: list[int], remaining: frozenset[int]) -> bool:
        # returns False once the cap is exceeded
        nonlocal truncated
        if not remaining:
            ax = tuple(left + right[::-1])
            if not is_single_peaked_on(p, ax):
                return True
            ax = canonical(ax)
            if ax in found:
                return True
            if len(found) == cap:
                truncated = True
                return False
            found.add(ax)
            return True
        worst = worst_of(remaining)
        if len(worst) > 2:
            return True
        first = not left and not right
        if len(worst) == 1:
            (w,) = worst
            rest = remaining - {w}
            if not rec(left + [w], right, rest):
                return False
            if not first and rest:
                return rec(left, right + [w], rest)
            return True
        a, b = worst
        rest = remaining - {a, b}
        if not rec(left + [a], right + [b], rest):
            return False
        if not first:
            return rec(left + [b], right + [a], rest)
        return True

    rec([], [], frozenset(p.alternatives))
    return AxisEnumeration(tuple(sorted(found)), truncated)


@dataclass(frozen=True)
class SPWitness:
    """A forbidden subprofile for single-peakedness.

    ``kind == "Triple"``: voters (v1, v2, v3) and alternatives (a, b, c)
    where v1 ranks a below b and c, v2 ranks b below a and c, and v3 ranks
    c below a and b.

    ``kind == "Interval4"``: voters (v1, v2) and alternatives (a, b, c, d)
    with a > b > c and d > b for v1, c > b > a and d > b for v2.
    """

    kind: str
    voters: tuple[int, ...]
    alternatives: tuple[int, ...]


def find_sp_obstruction(p: Profile) -> Optional[SPWitness]:
    pos = [p.positions(v) for v in p.voters]
    voters = list(p.voters)

    for triple in itertools.combinations(p.alternatives, 3):
        cited = []
        for x in triple:
            others = [y for y in triple if y != x]
            v = next(
                (v for v in voters if all(pos[v - 1][y] < pos[v - 1][x] for y in others)),
                None,
            )
            if v is None:
                break
            cited.append(v)
        else:
            return SPWitness("Triple", tuple(cited), triple)

    for quad in itertools.combinations(p.alternatives, 4):
        for v1, v2 in itertools.combinations(voters, 2):
            p1, p2 = pos[v1 - 1], pos[v2 - 1]
            for b, d in itertools.permutations(quad, 2):
                if not (p1[d] < p1[b] and p2[d] < p2[b]):
                    continue
                x, y = (z for z in quad if z not in (b, d))
                a, c = (x, y) if p1[x] < p1[b] else (y, x)
                if p1[a] < p1[b] < p1[c] and p2[c] < p2[b] < p2[a]:
                    return SPWitness("Interval4", (v1, v2), (a, b, c, d))
    return None


def check_sp_witness(p: Profile, w: SPWitness) -> bool:
    """Re-validate a witness against the literal pattern it claims."""
    if len(set(w.alternatives)) != len(w.alternatives):
        return False
    if w.kind == "Triple":
        if len(w.voters) != 3 or len(w.alternatives) != 3:
            return False
        for v, x in zip(w.voters, w.alternatives):
            for y in w.alternatives:
                if y != x and not p.prefers(v, y, x):
                    return False
        return True
    if w.kind == "Interval4":
        if len(w.voters) != 2 or len(w.alternatives) != 4:
            return False
        (v1, v2), (a, b, c, d) = w.voters, w.alternatives
        return (
            p.prefers(v1, a, b) and p.prefers(v1, b, c) and p.prefers(v1, d, b)
            and p.prefers(v2, c, b) and p.prefers(v2, b, a) and p.prefers(v2, d, b)
        )
    return False
