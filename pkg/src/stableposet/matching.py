"""Deferred acceptance solving and stability checking."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import SizeTooLarge
from .instance import PreferenceProfile, Side

BRUTE_FORCE_LIMIT = 9


@dataclass(frozen=True, order=True)
class Matching:
    """A perfect matching, stored as the wife of each man (0-based).

    Orderable and hashable; the canonical order on matchings is the
    lexicographic order of the ``wife`` tuple.
    """

    wife: tuple[int, ...]

    @property
    def husband(self) -> tuple[int, ...]:
        inv = [0] * len(self.wife)
        for m, w in enumerate(self.wife):
            inv[w] = m
        return tuple(inv)

    @property
    def size(self) -> int:
        return len(self.wife)

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.wife))

    def render(self) -> str:
        """Text form "i:j" with 1-based indices, men ascending."""
        return " ".join(f"{m + 1}:{w + 1}" for m, w in enumerate(self.wife))


@dataclass(frozen=True, order=True)
class BlockingPair:
    man: int
    woman: int


def _propose(prefs, acceptor_rank):
    """Core deferred acceptance: proposers in index order until engaged."""
    s = len(prefs)
    engaged_to = [-1] * s      # acceptor -> proposer
    next_choice = [0] * s
    free = list(range(s - 1, -1, -1))  # stack; lowest index proposes first
    while free:
        p = free.pop()
        a = prefs[p][next_choice[p]]
        next_choice[p] += 1
        cur = engaged_to[a]
        if cur == -1:
            engaged_to[a] = p
        elif acceptor_rank[a][p] < acceptor_rank[a][cur]:
            engaged_to[a] = p
            free.append(cur)
        else:
            free.append(p)
    return engaged_to


def gale_shapley(profile: PreferenceProfile, proposing: Side = Side.MAN) -> Matching:
    """Deferred acceptance; returns the proposing-side-optimal stable matching.

    Complete lists guarantee termination with a perfect matching after at
    most s*s proposals.
    """
    if proposing is Side.MAN:
        engaged = _propose(profile.men, profile.women_rank)
        wife = [0] * profile.size
        for w, m in enumerate(engaged):
            wife[m] = w
        return Matching(tuple(wife))
    engaged = _propose(profile.women, profile.men_rank)
    return Matching(tuple(engaged))


def blocking_pairs(profile: PreferenceProfile, matching: Matching) -> list[BlockingPair]:
    """All blocking pairs, sorted by (man, woman); empty iff stable."""
    men_rank = profile.men_rank
    women_rank = profile.women_rank
    husband = matching.husband
    out = []
    for m, w_cur in enumerate(matching.wife):
        my_rank = men_rank[m]
        cutoff = my_rank[w_cur]
        for w in range(profile.size):
            if my_rank[w] < cutoff and women_rank[w][m] < women_rank[w][husband[w]]:
                out.append(BlockingPair(m, w))
    out.sort()
    return out


def is_stable(profile: PreferenceProfile, matching: Matching) -> bool:
    men_rank = profile.men_rank
    women_rank = profile.women_rank
    husband = matching.husband
    for m, w_cur in enumerate(matching.wife):
        my_rank = men_rank[m]
        cutoff = my_rank[w_cur]
        for w in range(profile.size):
            if my_rank[w] < cutoff and women_rank[w][m] < women_rank[w][husband[w]]:
                return False
    return True


def iter_all_matchings(s: int) -> Iterator[Matching]:
    """All s! perfect matchings in canonical (lexicographic) order."""
    for perm in itertools.permutations(range(s)):
        yield Matching(perm)


def brute_force_stable_set(profile: PreferenceProfile) -> list[Matching]:
    """Every stable matching, found by checking all s! bijections.

    Canonically ordered.  Guarded: factorial enumeration is only allowed
    up to s = 9.
    """
    if profile.size > BRUTE_FORCE_LIMIT:
        raise SizeTooLarge(
            f"brute force stable set is limited to s <= {BRUTE_FORCE_LIMIT}, got {profile.size}"
        )
    return [m for m in iter_all_matchings(profile.size) if is_stable(profile, m)]
