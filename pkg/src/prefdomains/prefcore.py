"""Preference profiles: data model, text format, voter deletion.

Alternatives are the integers ``1..m`` and voters the integers ``1..n``.
A ranking lists alternative ids from most to least preferred.

File format::

    <m> <n>
    <ranking of voter 1>
    ...
    <ranking of voter n>

Lines starting with ``#`` are ignored anywhere in the file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Ranking = tuple[int, ...]


class ProfileError(ValueError):
    """Raised for malformed profiles or profile files."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _check_ranking(ranking: Sequence[int], m: int, line: int | None = None) -> None:
    if len(ranking) != m:
        raise ProfileError(f"expected {m} alternatives, got {len(ranking)}", line)
    seen = set()
    for a in ranking:
        if not 1 <= a <= m:
            raise ProfileError(f"alternative {a} outside 1..{m}", line)
        if a in seen:
            raise ProfileError(f"duplicate alternative {a}", line)
        seen.add(a)


@dataclass(frozen=True)
class Profile:
    """n strict rankings over the alternatives 1..m."""

    m: int
    rankings: tuple[Ranking, ...]

    def __post_init__(self):
        object.__setattr__(self, "rankings", tuple(tuple(r) for r in self.rankings))
        if self.m < 1:
            raise ProfileError("need at least one alternative")
        if not self.rankings:
            raise ProfileError("need at least one voter")
        for r in self.rankings:
            _check_ranking(r, self.m)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Profile":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ProfileError("need at least one voter")
        return cls(len(rows[0]), tuple(rows))

    @property
    def n(self) -> int:
        return len(self.rankings)

    @property
    def alternatives(self) -> range:
        return range(1, self.m + 1)

    @property
    def voters(self) -> range:
        return range(1, self.n + 1)

    def ranking(self, voter: int) -> Ranking:
        """Ranking of a 1-based voter id."""
        if not 1 <= voter <= self.n:
            raise ProfileError(f"voter {voter} outside 1..{self.n}")
        return self.rankings[voter - 1]

    def positions(self, voter: int) -> dict[int, int]:
        """Map alternative -> rank position (0 = most preferred)."""
        return {a: t for t, a in enumerate(self.ranking(voter))}

    def prefers(self, voter: int, a: int, b: int) -> bool:
        pos = self.positions(voter)
        return pos[a] < pos[b]


def parse_profile(text: str) -> Profile:
    """Parse the profile text format; errors carry the offending line number."""
    header = None
    rows: list[Ranking] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ProfileError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 2 or values[0] < 1 or values[1] < 1:
                raise ProfileError("header must be '<m> <n>' with m, n >= 1", lineno)
            header = (values[0], values[1], lineno)
            continue
        m, n, _ = header
        if len(rows) == n:
            raise ProfileError(f"more than the declared {n} rankings", lineno)
        _check_ranking(values, m, lineno)
        rows.append(tuple(values))
    if header is None:
        raise ProfileError("missing header", 1)
    m, n, header_line = header
    if len(rows) != n:
        raise ProfileError(f"declared {n} rankings, found {len(rows)}", header_line)
    return Profile(m, tuple(rows))


def serialize_profile(p: Profile) -> str:
    lines = [f"{p.m} {p.n}"]
    lines.extend(" ".join(map(str, r)) for r in p.rankings)
    return "\n".join(lines) + "\n"


def read_profile(path) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def delete_voter(p: Profile, v: int) -> Profile:
    """Drop voter ``v``; the others keep their order, alternatives keep their ids."""
    if p.n == 1:
        raise ProfileError("cannot delete the only voter")
    if not 1 <= v <= p.n:
        raise ProfileError(f"voter {v} outside 1..{p.n}")
    return Profile(p.m, p.rankings[: v - 1] + p.rankings[v:])
