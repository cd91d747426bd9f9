"""The minimal non-Euclidean profiles P*_k and their deleted-voter embeddings.

For ``k >= 2`` the profile has ``2k`` voters and ``4k`` alternatives.  It is
single-peaked only on the identity axis (up to mirroring), single-crossing,
and not Euclidean, yet deleting any voter ``v_s`` makes it Euclidean; the
integer embedding ``E_s`` and quarter-integer voter positions ``F_s``
below witness that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import axes, crossing, euclid
from .exactlp import HomogeneousSystem, check_certificate
from .prefcore import Profile, delete_voter


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


def _check_ks(k: int, s: int) -> None:
    _check_k(k)
    if not isinstance(s, int) or not 1 <= s <= 2 * k:
        raise ValueError(f"s must lie in 1..{2 * k}, got {s!r}")


def pieces(k: int, i: int) -> tuple[list[int], list[int], list[int], set[int]]:
    """The ranking pieces X_i, Y_i, Z_i and the uncovered set U_i."""
    X = list(range(2 * k + 2 * i - 2, 2 * i + 1, -1))
    Y = list(range(2 * i - 2, 0, -1))
    Z = list(range(2 * k + 2 * i + 1, 4 * k + 1))
    U = {2 * i - 1, 2 * i, 2 * i + 1, 2 * k + 2 * i - 1, 2 * k + 2 * i}
    return X, Y, Z, U


def gen_profile(k: int) -> Profile:
    _check_k(k)
    rows = []
    for i in range(1, k + 1):
        X, Y, Z, U = pieces(k, i)
        assert len(X) + len(Y) + len(Z) + len(U) == 4 * k
        assert U.isdisjoint(X) and U.isdisjoint(Y) and U.isdisjoint(Z)
        a, b = 2 * k + 2 * i - 1, 2 * k + 2 * i
        odd = X + [2 * i + 1, a, 2 * i, 2 * i - 1, b] + Y + Z
        if i < k:
            even = X + [a, b, 2 * i + 1, 2 * i, 2 * i - 1] + Y + Z
        else:
            even = X + list(range(2 * k + 1, 1, -1)) + [4 * k - 1, 4 * k, 1]
        rows += [odd, even]
    return Profile(4 * k, tuple(map(tuple, rows)))


def _mod(x: int, k: int) -> int:
    r = x % (4 * k)
    assert r != 0, "odd residues modulo 4k never vanish"
    return r


def alternative_positions(k: int, s: int) -> dict[int, int]:
    """E_s[1..4k], built by the recursive distance rules."""
    _check_ks(k, s)
    E = {1: 0}
    for i in range(1, k + 1):
        E[2 * i] = E[2 * i - 1] + _mod(4 * i - 2 * s - 3, k)
        if i <= k - 1:
            E[2 * i + 1] = E[2 * i] + 2
    for i in range(1, k):
        c = 2 * k + 2 * i
        if s != 2 * i - 1:
            E[c - 1] = E[c - 2] + E[c - 3] - E[2 * i + 1] + 2
        else:
            E[c - 1] = E[c - 2] + E[c - 3] - E[2 * i + 2] + 2
        E[c] = E[c - 1] + _mod(4 * i - 2 * s - 1, k)
    last = 4 * k
    if s != 2 * k:
        E[last - 1] = E[last - 2] + E[last - 3] - E[2] + 2
        E[last] = E[last - 1] + E[2] - E[1] - 2
    else:
        E[last - 1] = E[last - 2] + E[last - 3] - E[2 * k + 1] + 2
        E[last] = E[last - 1] + E[2 * k + 1] - E[2 * k - 1]
    return dict(sorted(E.items()))


def voter_positions(k: int, s: int, E: dict[int, int]) -> dict[int, Fraction]:
    """F_s[1..2k]: each voter sits at the mean of four alternative positions."""
    def avg(*alts):
        return Fraction(sum(E[a] for a in alts), 4)

    F = {}
    for i in range(1, k):
        F[2 * i - 1] = avg(2 * i - 1, 2 * i, 2 * k + 2 * i - 1, 2 * k + 2 * i)
        F[2 * i] = avg(2 * i + 1, 2 * i + 2, 2 * k + 2 * i - 1, 2 * k + 2 * i)
    if s != 2 * k:
        F[2 * k - 1] = avg(2 * k - 1, 2 * k, 4 * k - 1, 4 * k)
    else:
        F[2 * k - 1] = avg(2 * k - 2, 2 * k + 1, 4 * k - 1, 4 * k)
    F[2 * k] = avg(1, 2, 4 * k - 1, 4 * k)
    return F


def gen_embedding(k: int, s: int) -> euclid.Embedding:
    """The closed-form embedding (E_s, F_s) for P*_k with voter s deleted.

    F_s[s] is included (it is defined by the same rules) but voter ``s`` is
    marked as deleted and never checked.
    """
    E = alternative_positions(k, s)
    F = voter_positions(k, s, E)
    return euclid.Embedding(4 * k, 2 * k, E, F, deleted_voter=s)


def distance_row(k: int, s: int) -> tuple[int, ...]:
    """Consecutive gaps ``E_s[i] - E_s[i-1]`` for ``i = 2..4k``."""
    E = alternative_positions(k, s)
    return tuple(E[i] - E[i - 1] for i in range(2, 4 * k + 1))


def distance_table(k: int) -> list[tuple[int, ...]]:
    return [distance_row(k, s) for s in range(1, 2 * k + 1)]


@dataclass
class ClauseResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[tuple] = None

    def record(self, ok: bool, example: tuple) -> None:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = example


@dataclass
class LemmaReport:
    k: int
    s: int
    clauses: dict[str, ClauseResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses.values())

    def failures(self) -> list[ClauseResult]:
        return [c for c in self.clauses.values() if not c.passed]


def check_lemmas(k: int, s: int) -> LemmaReport:
    """Evaluate the auxiliary identities and inequalities of E_s.

    Clause names and their index ranges:

    ``order``        E strictly increasing
    ``aux.1a-c``     closed forms of E[2], E[3], E[4]
    ``aux.2a-b``     E[2k-2]-E[2k-3] and E[2k-4]-E[2k-5], only for s in {1, 2}
    ``aux.4a``       E[2k+2i]-E[2k+2i-1] = E[2i]-E[2i-1]+2 for i < k with
                     s != 2i-1, and for i = k with s not in {2k-1, 2k}
    ``aux.4b``       E[2k+2i]-E[2k+2i-1] = E[2i+2]-E[2i+1]-2 for i < k, s != 2i
    ``difference``   E[x]-E[y] >= x-y for y <= x
    ``gap2``         E[2i+1]-E[2i] >= 2 for 1 <= i <= 2k-1
    ``aux.ineq``     E[2k+2i-1] >= E[2k]+E[2i]+2 for 1 <= i <= k-1

    Counterexamples are ``(i, s, values...)`` tuples; for ``difference`` the
    indices are ``(x, y)``.  Clauses whose index range is empty are checked
    zero times and pass vacuously.
    """
    _check_ks(k, s)
    E = alternative_positions(k, s)
    rep = LemmaReport(k, s)

    def clause(name):
        rep.clauses[name] = ClauseResult(name)
        return rep.clauses[name]

    c = clause("order")
    for x in range(2, 4 * k + 1):
        c.record(E[x - 1] < E[x], (x, s, E[x - 1], E[x]))

    c = clause("aux.1a")
    c.record(E[2] == 4 * k - 2 * s + 1, (2, s, E[2]))
    c = clause("aux.1b")
    c.record(E[3] == 4 * k - 2 * s + 3, (3, s, E[3]))
    c = clause("aux.1c")
    want = 4 * k - 4 * s + 8 if s in (1, 2) else 8 * k - 4 * s + 8
    c.record(E[4] == want, (4, s, E[4], want))

    c2a, c2b = clause("aux.2a"), clause("aux.2b")
    if s in (1, 2):
        if 2 * k - 3 >= 1:
            got = E[2 * k - 2] - E[2 * k - 3]
            c2a.record(got == 4 * k - 2 * s - 7, (2 * k - 2, s, got))
        if 2 * k - 5 >= 1:
            got = E[2 * k - 4] - E[2 * k - 5]
            c2b.record(got == 4 * k - 2 * s - 11, (2 * k - 4, s, got))

    c4a, c4b = clause("aux.4a"), clause("aux.4b")
    for i in range(1, k + 1):
        lhs = E[2 * k + 2 * i] - E[2 * k + 2 * i - 1]
        if (i <= k - 1 and s != 2 * i - 1) or (i == k and s not in (2 * k - 1, 2 * k)):
            rhs = E[2 * i] - E[2 * i - 1] + 2
            c4a.record(lhs == rhs, (i, s, lhs, rhs))
        if i <= k - 1 and s != 2 * i:
            rhs = E[2 * i + 2] - E[2 * i + 1] - 2
            c4b.record(lhs == rhs, (i, s, lhs, rhs))

    c = clause("difference")
    for x in range(1, 4 * k + 1):
        for y in range(1, x + 1):
            c.record(E[x] - E[y] >= x - y, (x, y, s, E[x] - E[y]))

    c = clause("gap2")
    for i in range(1, 2 * k):
        c.record(E[2 * i + 1] - E[2 * i] >= 2, (i, s, E[2 * i + 1] - E[2 * i]))

    c = clause("aux.ineq")
    for i in range(1, k):
        lhs, rhs = E[2 * k + 2 * i - 1], E[2 * k] + E[2 * i] + 2
        c.record(lhs >= rhs, (i, s, lhs, rhs))
    return rep


def _cycle_rows(k: int):
    """(label, {alternative: coefficient}, voter, preferred pairs) for the cyclic system."""
    out = []
    for i in range(1, k + 1):
        # E[2k+2i-1] + E[2i] - E[2k+2i] - E[2i-1] < 0, from voter 2i-1
        a, b, c, d = 2 * k + 2 * i - 1, 2 * i, 2 * k + 2 * i, 2 * i - 1
        out.append((f"cyc.1 i={i}", {a: 1, b: 1, c: -1, d: -1}, 2 * i - 1, [(a, b), (d, c)]))
    for i in range(1, k):
        # E[2k+2i] + E[2i+1] - E[2k+2i-1] - E[2i+2] < 0, from voter 2i
        a, b, c, d = 2 * k + 2 * i, 2 * i + 1, 2 * k + 2 * i - 1, 2 * i + 2
        out.append((f"cyc.2 i={i}", {a: 1, b: 1, c: -1, d: -1}, 2 * i, [(d, c), (a, b)]))
    a, b, c, d = 4 * k, 1, 4 * k - 1, 2
    out.append(("cyc.3", {a: 1, b: 1, c: -1, d: -1}, 2 * k, [(d, c), (a, b)]))
    return out


@dataclass(frozen=True)
class CycleCertificate:
    system: HomogeneousSystem
    certificate: tuple[int, ...]
    # per row: the voter and the two preferences (preferred, other) it is derived from
    sources: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]


def noneuclid_certificate(k: int) -> CycleCertificate:
    """The cyclic system over E[1..4k] whose rows sum to zero.

    Each row is the sum of two midpoint constraints of one voter on the
    identity axis, so every Euclidean embedding along that axis would
    satisfy all rows, which is impossible.
    """
    _check_k(k)
    rows, labels, sources = [], [], []
    for label, coeffs, voter, prefs in _cycle_rows(k):
        row = [0] * (4 * k)
        for a, c in coeffs.items():
            row[a - 1] += c
        rows.append(row)
        labels.append(label)
        sources.append((voter, tuple(prefs)))
    sys = HomogeneousSystem(4 * k, tuple(map(tuple, rows)), tuple(labels))
    cert = (1,) * len(rows)
    if not check_certificate(sys, cert):
        raise AssertionError("all-ones combination of the cyclic system is not zero")
    return CycleCertificate(sys, cert, tuple(sources))


def certificate_rows_contained(k: int) -> list[bool]:
    """For each cyclic row: is it the sum of two rows of the Full system on the identity axis?

    The two Full rows belong to the cited voter; their voter coordinates
    cancel and the alternative part must equal the cyclic row exactly.
    """
    p = gen_profile(k)
    ident = tuple(range(1, 4 * k + 1))
    full = euclid.build_constraints(p, ident, euclid.Mode.FULL)
    by_label = dict(zip(full.labels, full.rows))
    cc = noneuclid_certificate(k)
    out = []
    for row, (voter, prefs) in zip(cc.system.rows, cc.sources):
        try:
            parts = [by_label[f"v{voter}: {x}>{y}"] for x, y in prefs]
        except KeyError:
            out.append(False)
            continue
        total = [a + b for a, b in zip(*parts)]
        out.append(tuple(total[: 4 * k]) == row and not any(total[4 * k:]))
    return out


def natural_sc_order(k: int) -> tuple[int, ...]:
    """v_1, ..., v_{2k-2}, v_{2k}, v_{2k-1}."""
    return tuple(range(1, 2 * k - 1)) + (2 * k, 2 * k - 1)


def sc_order_check(k: int, order=None) -> bool:
    _check_k(k)
    if order is None:
        order = natural_sc_order(k)
    return crossing.is_single_crossing_on(gen_profile(k), order)


def canonical_axes_check(k: int) -> bool:
    return canonical_axes_check_profile(gen_profile(k))


def canonical_axes_check_profile(p: Profile) -> bool:
    """True iff the identity axis is the only single-peaked axis of ``p``."""
    found = axes.enumerate_axes(p)
    return not found.truncated and found.axes == (tuple(p.alternatives),)


@dataclass(frozen=True)
class DeletionOutcome:
    s: int
    closed_form_ok: bool
    violations: int
    lp_euclidean: Optional[bool]


@dataclass(frozen=True)
class MinimalityReport:
    k: int
    not_euclidean: bool
    certificates_valid: bool
    deletions: tuple[DeletionOutcome, ...]

    @property
    def passed(self) -> bool:
        if not (self.not_euclidean and self.certificates_valid):
            return False
        if self.k >= 5:
            return all(d.closed_form_ok for d in self.deletions) and all(
                d.lp_euclidean is not False for d in self.deletions
            )
        # small k: the closed form is informational, LP recognition decides
        return all(d.lp_euclidean for d in self.deletions)


def minimality_check(k: int, use_lp: Optional[bool] = None) -> MinimalityReport:
    """Check that P*_k is not Euclidean but becomes Euclidean after any deletion.

    The closed-form embedding is verified for every ``s``.  LP recognition
    of each deleted profile runs for ``k < 5`` by default, or always / never
    when ``use_lp`` is given.
    """
    _check_k(k)
    if use_lp is None:
        use_lp = k < 5
    p = gen_profile(k)
    res = euclid.recognize_euclidean(p)
    outcomes = []
    for s in range(1, 2 * k + 1):
        q = delete_voter(p, s)
        rep = euclid.verify_embedding(q, gen_embedding(k, s), euclid.Mode.REDUCED)
        lp = None
        if use_lp:
            lp = euclid.recognize_euclidean(q).status is euclid.Status.EUCLIDEAN
        outcomes.append(DeletionOutcome(s, rep.ok, len(rep.violations), lp))
    return MinimalityReport(
        k,
        res.status is euclid.Status.NOT_EUCLIDEAN,
        euclid.certificates_valid(res),
        tuple(outcomes),
    )
