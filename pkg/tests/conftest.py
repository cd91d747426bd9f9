import itertools

import pytest
from hypothesis import strategies as st

from prefdomains.prefcore import Profile, parse_profile

EXAMPLE_23_TEXT = "6 3\n3 2 1 4 5 6\n3 4 2 5 6 1\n5 4 3 6 2 1\n"

# the 8 x 16 table printed for P*_4
P4_TABLE = [
    (8, 7, 6, 5, 4, 3, 9, 2, 1, 10, 11, 12, 13, 14, 15, 16),
    (8, 7, 6, 5, 4, 9, 10, 3, 2, 1, 11, 12, 13, 14, 15, 16),
    (10, 9, 8, 7, 6, 5, 11, 4, 3, 12, 2, 1, 13, 14, 15, 16),
    (10, 9, 8, 7, 6, 11, 12, 5, 4, 3, 2, 1, 13, 14, 15, 16),
    (12, 11, 10, 9, 8, 7, 13, 6, 5, 14, 4, 3, 2, 1, 15, 16),
    (12, 11, 10, 9, 8, 13, 14, 7, 6, 5, 4, 3, 2, 1, 15, 16),
    (14, 13, 12, 11, 10, 9, 15, 8, 7, 16, 6, 5, 4, 3, 2, 1),
    (14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 15, 16, 1),
]

# consecutive distances d_2..d_16 of E_1..E_8 for k = 4
TABLE_1 = [
    (15, 2, 3, 2, 7, 2, 11, 13, 1, 35, 5, 62, 9, 145, 13),
    (13, 2, 1, 2, 5, 2, 9, 12, 15, 30, 3, 68, 7, 151, 11),
    (11, 2, 15, 2, 3, 2, 7, 24, 13, 35, 1, 81, 5, 187, 9),
    (9, 2, 13, 2, 1, 2, 5, 20, 11, 30, 15, 68, 3, 171, 7),
    (7, 2, 11, 2, 15, 2, 3, 32, 9, 54, 13, 97, 1, 242, 5),
    (5, 2, 9, 2, 13, 2, 1, 28, 7, 46, 11, 84, 15, 207, 3),
    (3, 2, 7, 2, 11, 2, 15, 24, 5, 54, 9, 100, 13, 233, 1),
    (1, 2, 5, 2, 9, 2, 13, 20, 3, 46, 7, 84, 11, 142, 33),
]


@pytest.fixture
def example23():
    return parse_profile(EXAMPLE_23_TEXT)


@st.composite
def profiles(draw, max_n=4, max_m=6, min_m=1):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(1, max_n))
    rows = [tuple(draw(st.permutations(range(1, m + 1)))) for _ in range(n)]
    return Profile(m, tuple(rows))


# ---- brute-force oracles, independent of the library code paths ----

def canonical_axes_all(m):
    return [ax for ax in itertools.permutations(range(1, m + 1)) if ax <= ax[::-1]]


def unimodal_for(ranking, ax):
    """No alternative strictly between two better ones along the axis."""
    rank = {a: t for t, a in enumerate(ranking)}
    seq = [rank[a] for a in ax]
    # rank values: smaller is better; unimodal = decreasing then increasing
    peak = seq.index(min(seq))
    return all(seq[t] > seq[t + 1] for t in range(peak)) and all(
        seq[t] < seq[t + 1] for t in range(peak, len(seq) - 1)
    )


def brute_sp_axes(p):
    return [ax for ax in canonical_axes_all(p.m) if all(unimodal_for(r, ax) for r in p.rankings)]


def sc_switches_ok(p, order):
    for a, b in itertools.combinations(range(1, p.m + 1), 2):
        signs = [p.rankings[v - 1].index(a) < p.rankings[v - 1].index(b) for v in order]
        if sum(x != y for x, y in zip(signs, signs[1:])) > 1:
            return False
    return True


def brute_sc(p):
    return any(sc_switches_ok(p, order) for order in itertools.permutations(range(1, p.n + 1)))
