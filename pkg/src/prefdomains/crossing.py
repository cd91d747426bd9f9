"""Single-crossing voter orders and obstruction witnesses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .axes import canonical
from .prefcore import Profile, ProfileError

VoterOrder = tuple[int, ...]


def _orientations(p: Profile) -> tuple[list[tuple[int, int]], list[tuple[bool, ...]]]:
    """All pairs a < b, and per voter a tuple saying whether a is preferred to b."""
    pairs = list(itertools.combinations(p.alternatives, 2))
    table = []
    for v in p.voters:
        pos = p.positions(v)
        table.append(tuple(pos[a] < pos[b] for a, b in pairs))
    return pairs, table


def is_single_crossing_on(p: Profile, vo: Sequence[int]) -> bool:
    """True iff along ``vo`` every pair of alternatives switches orientation at most once."""
    if sorted(vo) != list(p.voters):
        raise ProfileError(f"voter order {tuple(vo)} is not a permutation of 1..{p.n}")
    _, table = _orientations(p)
    rows = [table[v - 1] for v in vo]
    for j in range(len(rows[0]) if rows else 0):
        switches = sum(rows[t][j] != rows[t + 1][j] for t in range(len(rows) - 1))
        if switches > 1:
            return False
    return True


def kendall_tau(p: Profile, u: int, v: int) -> int:
    """Number of alternative pairs on which voters u and v disagree."""
    pu, pv = p.positions(u), p.positions(v)
    return sum(
        (pu[a] < pu[b]) != (pv[a] < pv[b])
        for a, b in itertools.combinations(p.alternatives, 2)
    )


def find_sc_order(p: Profile) -> Optional[VoterOrder]:
    """A canonical single-crossing voter order, or None.

    In a single-crossing order the set of pairs on which a voter disagrees
    with the first voter only grows, so sorting by Kendall-tau distance from
    the right first voter recovers an order.  Every voter is tried as the
    first one.
    """
    voters = list(p.voters)
    dist = {
        (u, v): kendall_tau(p, u, v) for u in voters for v in voters if u < v
    }

    def d(u, v):
        return 0 if u == v else dist[min(u, v), max(u, v)]

    for first in voters:
        rest = sorted((v for v in voters if v != first), key=lambda v: (d(first, v), v))
        order = (first, *rest)
        if is_single_crossing_on(p, order):
            return canonical(order)
    return None


@dataclass(frozen=True)
class SCWitness:
    """A forbidden subprofile for single-crossingness.

    ``Gamma3x6``: voters (v1, v2, v3) and ordered pairs ((a, b), (c, d), (e, f))
    with v1: b > a, c > d, e > f; v2: a > b, d > c, e > f; v3: a > b, c > d, f > e.

    ``Delta4x4``: voters (v1, v2, v3, v4) and pairs ((a, b), (c, d)) with
    v1: a > b, c > d; v2: a > b, d > c; v3: b > a, c > d; v4: b > a, d > c.
    """

    kind: str
    voters: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]


def find_sc_obstruction(p: Profile) -> Optional[SCWitness]:
    pairs, table = _orientations(p)
    voters = list(p.voters)

    def oriented(j: int, voter: int, preferred: bool) -> tuple[int, int]:
        # (x, y) with x > y for ``voter`` iff preferred
        a, b = pairs[j]
        return (a, b) if table[voter - 1][j] == preferred else (b, a)

    for trio in itertools.combinations(voters, 3):
        rows = [table[v - 1] for v in trio]
        odd_pairs = []
        for t in range(3):
            u, w = [rows[q] for q in range(3) if q != t]
            j = next(
                (j for j in range(len(pairs)) if u[j] == w[j] != rows[t][j]),
                None,
            )
            if j is None:
                break
            odd_pairs.append(j)
        else:
            v1, v2, v3 = trio
            # each pair is written so that the two agreeing voters prefer its first entry
            ab = oriented(odd_pairs[0], v2, True)
            cd = oriented(odd_pairs[1], v1, True)
            ef = oriented(odd_pairs[2], v1, True)
            return SCWitness("Gamma3x6", trio, (ab, cd, ef))

    for j, l in itertools.combinations(range(len(pairs)), 2):
        combos: dict[tuple[bool, bool], int] = {}
        for v in voters:
            combos.setdefault((table[v - 1][j], table[v - 1][l]), v)
        if len(combos) == 4:
            v1 = combos[True, True]
            ab, cd = pairs[j], pairs[l]
            order = (
                v1,
                combos[True, False],
                combos[False, True],
                combos[False, False],
            )
            return SCWitness("Delta4x4", order, (ab, cd))
    return None


def check_sc_witness(p: Profile, w: SCWitness) -> bool:
    """Re-validate a witness against the literal pattern it claims."""
    if any(x == y for x, y in w.pairs) or len(set(w.voters)) != len(w.voters):
        return False
    if w.kind == "Gamma3x6":
        if len(w.voters) != 3 or len(w.pairs) != 3:
            return False
        (v1, v2, v3), ((a, b), (c, d), (e, f)) = w.voters, w.pairs
        pattern = {
            v1: [(b, a), (c, d), (e, f)],
            v2: [(a, b), (d, c), (e, f)],
            v3: [(a, b), (c, d), (f, e)],
        }
    elif w.kind == "Delta4x4":
        if len(w.voters) != 4 or len(w.pairs) != 2:
            return False
        (v1, v2, v3, v4), ((a, b), (c, d)) = w.voters, w.pairs
        pattern = {
            v1: [(a, b), (c, d)],
            v2: [(a, b), (d, c)],
            v3: [(b, a), (c, d)],
            v4: [(b, a), (d, c)],
        }
    else:
        return False
    return all(p.prefers(v, x, y) for v, prefs in pattern.items() for x, y in prefs)
