"""Stable matching instances: representation, text format, and generators.

The text format is line oriented (LF endings): the first line holds the
instance size s, the next s lines hold each man's preference list as s
space-separated 1-based woman indices (most preferred first), and the s
lines after that hold the women's lists over men.  Blank lines and lines
starting with '#' are ignored.  Indices are 1-based in files and rendered
output; everything internal is 0-based.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .errors import InvalidSize, ParseError, ValidationError


class Side(enum.Enum):
    MAN = "m"
    WOMAN = "w"


@dataclass(frozen=True, order=True)
class Agent:
    """One participant, identified by side and 1-based index."""

    side: Side
    index: int

    @property
    def label(self) -> str:
        return f"{self.side.value}{self.index}"


def _rank_table(prefs: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    tables = []
    for lst in prefs:
        rank = [0] * len(lst)
        for pos, other in enumerate(lst):
            rank[other] = pos
        tables.append(tuple(rank))
    return tuple(tables)


@dataclass(frozen=True)
class PreferenceProfile:
    """Complete preference lists for s men and s women, all 0-based.

    ``men[i][r]`` is man i's rank-r choice of woman; ``men_rank[i][w]`` is
    the position of woman w on man i's list (lower is better).  Profiles
    are immutable and safe to share between threads.
    """

    men: tuple[tuple[int, ...], ...]
    women: tuple[tuple[int, ...], ...]
    men_rank: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())
    women_rank: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        s = len(self.men)
        if s == 0 or len(self.women) != s:
            raise ValidationError("need equally many men and women, at least one each")
        ref = tuple(range(s))
        for label, prefs in (("man", self.men), ("woman", self.women)):
            for i, lst in enumerate(prefs):
                if tuple(sorted(lst)) != ref:
                    raise ValidationError(
                        f"{label} {i + 1}'s list is not a permutation of 1..{s}"
                    )
        if not self.men_rank:
            object.__setattr__(self, "men_rank", _rank_table(self.men))
        if not self.women_rank:
            object.__setattr__(self, "women_rank", _rank_table(self.women))

    @property
    def size(self) -> int:
        return len(self.men)

    def man_prefers(self, m: int, w_a: int, w_b: int) -> bool:
        """True if man m ranks woman w_a above woman w_b."""
        return self.men_rank[m][w_a] < self.men_rank[m][w_b]

    def woman_prefers(self, w: int, m_a: int, m_b: int) -> bool:
        return self.women_rank[w][m_a] < self.women_rank[w][m_b]

    def agents(self) -> list[Agent]:
        """All 2s agents, men first, in index order."""
        s = self.size
        return [Agent(Side.MAN, i + 1) for i in range(s)] + [
            Agent(Side.WOMAN, i + 1) for i in range(s)
        ]


def parse_instance(text: str | bytes) -> PreferenceProfile:
    """Parse the instance text format into a validated profile."""
    if isinstance(text, bytes):
        text = text.decode("ascii")

    # (line_number, tokens) for every significant line
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))

    if not rows:
        raise ParseError("empty input")

    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError("expected a single integer size", line=lineno)
    try:
        s = int(head[0])
    except ValueError:
        raise ParseError(f"size is not an integer: {head[0]!r}", line=lineno) from None
    if s < 1:
        raise ParseError(f"size must be positive, got {s}", line=lineno)

    if len(rows) != 1 + 2 * s:
        raise ParseError(
            f"expected {2 * s} preference lines for size {s}, found {len(rows) - 1}",
            line=rows[-1][0],
        )

    def read_list(row: tuple[int, list[str]], owner: str) -> tuple[int, ...]:
        lineno, tokens = row
        if len(tokens) != s:
            raise ParseError(
                f"{owner}: expected {s} entries, found {len(tokens)}", line=lineno
            )
        out = []
        for tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"{owner}: bad index {tok!r}", line=lineno) from None
            if not 1 <= v <= s:
                raise ParseError(f"{owner}: index {v} out of range 1..{s}", line=lineno)
            out.append(v - 1)
        if len(set(out)) != s:
            raise ValidationError(f"{owner}: list is not a permutation", line=lineno)
        return tuple(out)

    men = tuple(read_list(rows[1 + i], f"man {i + 1}") for i in range(s))
    women = tuple(read_list(rows[1 + s + i], f"woman {i + 1}") for i in range(s))
    return PreferenceProfile(men, women)


def serialize_instance(profile: PreferenceProfile) -> str:
    """Render the canonical text form; parse(serialize(p)) == p, bit for bit."""
    lines = [str(profile.size)]
    for lst in profile.men + profile.women:
        lines.append(" ".join(str(v + 1) for v in lst))
    return "\n".join(lines) + "\n"


def generate_uniform(s: int, seed: int) -> PreferenceProfile:
    """Draw every preference list as an independent uniform permutation.

    Uses the stdlib Mersenne Twister (``random.Random``) seeded with
    ``seed``; ``shuffle`` is a Fisher-Yates pass, so output is identical
    across runs and platforms for a given (s, seed).
    """
    if s < 1:
        raise InvalidSize(f"size must be positive, got {s}")
    rng = random.Random(seed)

    def draw() -> tuple[int, ...]:
        lst = list(range(s))
        rng.shuffle(lst)
        return tuple(lst)

    men = tuple(draw() for _ in range(s))
    women = tuple(draw() for _ in range(s))
    return PreferenceProfile(men, women)


def generate_irving_leather(k: int) -> PreferenceProfile:
    """Self-similar XOR family with s = 2**k and an exponential count.

    Man i's j-th choice is woman ((i-1) XOR (j-1)) + 1 and woman i's j-th
    choice is man ((i-1) XOR (s-j)) + 1 (1-based); at k=3 this reproduces
    the classic size-8 tables of Irving and Leather.
    """
    if k < 1:
        raise InvalidSize(f"k must be at least 1, got {k}")
    s = 1 << k
    men = tuple(tuple(i ^ j for j in range(s)) for i in range(s))
    women = tuple(tuple(i ^ (s - 1 - j) for j in range(s)) for i in range(s))
    return PreferenceProfile(men, women)


def generate_disjoint_pairs(s: int) -> PreferenceProfile:
    """s/2 independent 2x2 cyclic blocks; exactly 2**(s/2) stable matchings.

    Within block {2t+1, 2t+2} each man ranks his own-index woman first and
    the block partner second, each woman the reverse; everyone ranks the
    rest of the opposite side in index order afterwards.  Every agent's
    attainable partners therefore sit inside the block, which makes the
    stable matchings exactly the independent per-block choices.
    """
    if s < 2 or s % 2:
        raise InvalidSize(f"size must be even and positive, got {s}")

    def build(first: int, second: int) -> tuple[int, ...]:
        rest = [v for v in range(s) if v != first and v != second]
        return (first, second, *rest)

    men = []
    women = []
    for t in range(s // 2):
        a, b = 2 * t, 2 * t + 1
        men.append(build(a, b))   # man a: w_a then w_b
        men.append(build(b, a))   # man b: w_b then w_a
        women.append(build(b, a))  # woman a: m_b then m_a
        women.append(build(a, b))  # woman b: m_a then m_b
    return PreferenceProfile(tuple(men), tuple(women))
