"""One-dimensional Euclidean profiles.

A voter at position ``F`` prefers ``a`` to ``b`` iff ``|F - E[a]| < |F - E[b]|``.
For ``E[a] < E[b]`` that is the midpoint condition ``2F < E[a] + E[b]``, so a
fixed left-to-right axis turns the question into a homogeneous strict
linear system over the variables ``(E[1..m], F[1..n])``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .axes import DEFAULT_AXIS_CAP, Axis, enumerate_axes
from .exactlp import Feasibility, HomogeneousSystem, check_certificate, feasible_strict
from .prefcore import Profile, ProfileError, Ranking


_RATIONAL = re.compile(r"-?\d+(/\d+)?")


class Mode(enum.Enum):
    FULL = "full"
    REDUCED = "reduced"


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """Exact positions of alternatives and voters.

    ``n`` is the size of the voter id range the embedding is written for.
    When ``deleted_voter`` is set, that voter is not represented and a
    profile checked against the embedding must have it removed; the
    profile's voters then map, in order, onto ``1..n`` without it.
    """

    m: int
    n: int
    alt_pos: Mapping[int, Fraction]
    voter_pos: Mapping[int, Fraction]
    deleted_voter: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "alt_pos", {a: Fraction(q) for a, q in sorted(self.alt_pos.items())})
        object.__setattr__(self, "voter_pos", {v: Fraction(q) for v, q in sorted(self.voter_pos.items())})
        if self.deleted_voter is not None and not 1 <= self.deleted_voter <= self.n:
            raise EmbeddingError(f"deleted voter {self.deleted_voter} outside 1..{self.n}")

    def represented_voters(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if v != self.deleted_voter]

    def scaled(self, alpha, beta) -> "Embedding":
        """Apply ``x -> alpha * x + beta`` to every position."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        return Embedding(
            self.m,
            self.n,
            {a: alpha * q + beta for a, q in self.alt_pos.items()},
            {v: alpha * q + beta for v, q in self.voter_pos.items()},
            self.deleted_voter,
        )


@dataclass(frozen=True)
class VerificationReport:
    # (voter, preferred alternative, less preferred alternative)
    violations: tuple[tuple[int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class Status(enum.Enum):
    EUCLIDEAN = "euclidean"
    NOT_EUCLIDEAN = "not euclidean"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AxisCertificate:
    axis: Axis
    system: HomogeneousSystem
    certificate: tuple[Fraction, ...]


@dataclass(frozen=True)
class EuclideanResult:
    status: Status
    axes_tried: int
    axis: Optional[Axis] = None
    embedding: Optional[Embedding] = None
    certificates: tuple[AxisCertificate, ...] = field(default=())


def _axis_rows(p: Profile, ax: Sequence[int]):
    m = p.m
    nv = m + p.n
    for t in range(m - 1):
        a, b = ax[t], ax[t + 1]
        row = [0] * nv
        row[a - 1], row[b - 1] = 1, -1
        yield f"axis E{a}<E{b}", row


def _midpoint_row(p: Profile, where: dict[int, int], voter: int, x: int, y: int):
    """Row for ``voter`` preferring ``x`` to ``y``."""
    row = [0] * (p.m + p.n)
    f = p.m + voter - 1
    if where[x] < where[y]:
        # 2F - E[x] - E[y] < 0
        row[f], row[x - 1], row[y - 1] = 2, -1, -1
    else:
        row[f], row[x - 1], row[y - 1] = -2, 1, 1
    return f"v{voter}: {x}>{y}", row


def build_constraints(p: Profile, ax: Sequence[int], mode: Mode = Mode.REDUCED) -> HomogeneousSystem:
    """Strict system whose solutions are embeddings with alternatives ordered as ``ax``.

    Variables are ``E[1..m]`` followed by ``F[1..n]``.  ``Mode.FULL`` emits a
    midpoint row for every voter and every pair of alternatives;
    ``Mode.REDUCED`` only for pairs adjacent in the voter's ranking, which
    suffices because the strict distance comparisons chain.
    """
    if sorted(ax) != list(p.alternatives):
        raise ProfileError(f"axis {tuple(ax)} is not a permutation of 1..{p.m}")
    mode = Mode(mode)
    where = {a: t for t, a in enumerate(ax)}
    labelled = list(_axis_rows(p, ax))
    for v in p.voters:
        r = p.ranking(v)
        if mode is Mode.FULL:
            pos = p.positions(v)
            for s in range(p.m):
                for t in range(s + 1, p.m):
                    a, b = ax[s], ax[t]
                    x, y = (a, b) if pos[a] < pos[b] else (b, a)
                    labelled.append(_midpoint_row(p, where, v, x, y))
        else:
            for t in range(p.m - 1):
                labelled.append(_midpoint_row(p, where, v, r[t], r[t + 1]))
    if not labelled:
        # m == 1: positions are unconstrained, keep one trivially satisfiable row
        row = [0] * (p.m + p.n)
        row[0] = 1
        labelled.append(("trivial E1<0", row))
    labels, rows = zip(*labelled)
    return HomogeneousSystem(p.m + p.n, tuple(rows), tuple(labels))


def embedding_from_solution(p: Profile, x: Sequence[Fraction]) -> Embedding:
    return Embedding(
        p.m,
        p.n,
        {a: x[a - 1] for a in p.alternatives},
        {v: x[p.m + v - 1] for v in p.voters},
    )


def solve_axis(p: Profile, ax: Sequence[int], mode: Mode = Mode.REDUCED) -> Feasibility:
    return feasible_strict(build_constraints(p, ax, mode))


def recognize_euclidean(
    p: Profile, axis_cap: int = DEFAULT_AXIS_CAP, mode: Mode = Mode.REDUCED
) -> EuclideanResult:
    """Decide one-dimensional Euclideanness.

    Only single-peaked axes need to be tried: the left-to-right order of
    the alternatives in any Euclidean embedding is one.
    """
    axes = enumerate_axes(p, axis_cap)
    certs = []
    for tried, ax in enumerate(axes, start=1):
        sys = build_constraints(p, ax, mode)
        res = feasible_strict(sys)
        if res.feasible:
            emb = embedding_from_solution(p, res.witness)
            return EuclideanResult(Status.EUCLIDEAN, tried, ax, emb)
        certs.append(AxisCertificate(ax, sys, res.certificate))
    status = Status.UNKNOWN if axes.truncated else Status.NOT_EUCLIDEAN
    return EuclideanResult(status, len(axes), certificates=tuple(certs))


def certificates_valid(result: EuclideanResult) -> bool:
    return all(check_certificate(c.system, c.certificate) for c in result.certificates)


def _voter_map(p: Profile, e: Embedding) -> list[int]:
    """Embedding voter id for each profile voter, in profile order."""
    ids = e.represented_voters()
    if len(ids) != p.n:
        if e.deleted_voter is not None and p.n == e.n:
            raise EmbeddingError(
                f"deleted voter {e.deleted_voter} is still present in the profile"
            )
        raise EmbeddingError(f"embedding represents {len(ids)} voters, profile has {p.n}")
    if e.m != p.m:
        raise EmbeddingError(f"embedding has {e.m} alternatives, profile has {p.m}")
    missing_a = [a for a in p.alternatives if a not in e.alt_pos]
    missing_v = [v for v in ids if v not in e.voter_pos]
    if missing_a or missing_v:
        raise EmbeddingError(f"missing positions: alternatives {missing_a}, voters {missing_v}")
    return ids


def verify_embedding(p: Profile, e: Embedding, mode: Mode = Mode.FULL) -> VerificationReport:
    """Check every represented voter's preferences against exact distances.

    Violations, including exact ties, are reported as
    ``(embedding voter id, preferred, less preferred)``.
    """
    mode = Mode(mode)
    ids = _voter_map(p, e)
    E = e.alt_pos
    bad = []
    for pv, ev in zip(p.voters, ids):
        f = e.voter_pos[ev]
        r = p.ranking(pv)
        if mode is Mode.FULL:
            pairs = ((r[s], r[t]) for s in range(p.m) for t in range(s + 1, p.m))
        else:
            pairs = ((r[t], r[t + 1]) for t in range(p.m - 1))
        for a, b in pairs:
            if not abs(f - E[a]) < abs(f - E[b]):
                bad.append((ev, a, b))
    return VerificationReport(tuple(bad))


def induced_ranking(e: Embedding, voter: int) -> Ranking:
    """Alternatives by increasing distance from the voter; ties are an error."""
    if voter not in e.voter_pos:
        raise EmbeddingError(f"voter {voter} has no position")
    f = e.voter_pos[voter]
    order = sorted(e.alt_pos, key=lambda a: (abs(f - e.alt_pos[a]), a))
    for a, b in zip(order, order[1:]):
        if abs(f - e.alt_pos[a]) == abs(f - e.alt_pos[b]):
            raise EmbeddingError(f"voter {voter} is equidistant from alternatives {a} and {b}")
    return tuple(order)


def serialize_embedding(e: Embedding) -> str:
    head = f"EMBED {e.m} {e.n}"
    if e.deleted_voter is not None:
        head += f" s={e.deleted_voter}"
    lines = [head]
    lines += [f"A {a} {q}" for a, q in e.alt_pos.items()]
    lines += [f"V {v} {q}" for v, q in e.voter_pos.items()]
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> Embedding:
    header = None
    alts: dict[int, Fraction] = {}
    voters: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if header is None:
                if tok[0] != "EMBED" or len(tok) not in (3, 4):
                    raise ValueError("header must be 'EMBED <m> <n> [s=<id>]'")
                s = None
                if len(tok) == 4:
                    if not tok[3].startswith("s="):
                        raise ValueError(f"bad header field {tok[3]!r}")
                    s = int(tok[3][2:])
                header = (int(tok[1]), int(tok[2]), s)
                continue
            if len(tok) != 3 or tok[0] not in ("A", "V"):
                raise ValueError(f"expected 'A <id> <p>/<q>' or 'V <id> <p>/<q>', got {line!r}")
            target = alts if tok[0] == "A" else voters
            key = int(tok[1])
            if key in target:
                raise ValueError(f"duplicate position for {tok[0]} {key}")
            if not _RATIONAL.fullmatch(tok[2]):
                raise ValueError(f"position {tok[2]!r} is not of the form p or p/q")
            target[key] = Fraction(tok[2])
        except ValueError as exc:
            raise EmbeddingError(f"line {lineno}: {exc}") from None
    if header is None:
        raise EmbeddingError("line 1: missing EMBED header")
    m, n, s = header
    if sorted(alts) != list(range(1, m + 1)):
        raise EmbeddingError(f"alternative ids must be exactly 1..{m}")
    if any(not 1 <= v <= n for v in voters):
        raise EmbeddingError(f"voter ids must lie in 1..{n}")
    return Embedding(m, n, alts, voters, s)


def read_embedding(path) -> Embedding:
    with open(path, encoding="utf-8") as fh:
        return parse_embedding(fh.read())
