"""Rotations: detection of exposed rotations, elimination, full sequences.

A rotation is an ordered cyclic list of matched pairs
((m_0,w_0),...,(m_{k-1},w_{k-1})), k >= 2, where each w_{i+1} (cyclically)
is the first woman after w_i on m_i's list who prefers m_i to her current
partner.  Eliminating it from the exposing matching moves every m_i to
w_{i+1}, which yields another stable matching in which every involved
woman is better off and every involved man worse off.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotExposed, NotStable
from .instance import PreferenceProfile
from .matching import Matching, blocking_pairs, gale_shapley, is_stable


@dataclass(frozen=True, order=True)
class Rotation:
    """Canonical form: the cyclic pair list rotated so the lowest man is first."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def from_cycle(pairs: Sequence[tuple[int, int]]) -> "Rotation":
        k = len(pairs)
        if k < 2:
            raise ValueError("a rotation has at least two pairs")
        men = [m for m, _ in pairs]
        women = [w for _, w in pairs]
        if len(set(men)) != k or len(set(women)) != k:
            raise ValueError("rotation pairs must have distinct men and distinct women")
        start = men.index(min(men))
        return Rotation(tuple(pairs[start:]) + tuple(pairs[:start]))

    def __len__(self) -> int:
        return len(self.pairs)

    def men(self) -> list[int]:
        return [m for m, _ in self.pairs]

    def women(self) -> list[int]:
        return [w for _, w in self.pairs]

    def agent_mask(self, s: int) -> int:
        """Bitmask over the 2s agents (men are bits 0..s-1, women s..2s-1)."""
        mask = 0
        for m, w in self.pairs:
            mask |= (1 << m) | (1 << (s + w))
        return mask

    def render(self) -> str:
        """Canonical text form "(m1,w1)(m2,w2)..." with 1-based indices."""
        return "".join(f"(m{m + 1},w{w + 1})" for m, w in self.pairs)


def _next_woman(profile, wife, husband, m):
    """First woman after m's current partner who prefers m to her partner."""
    prefs = profile.men[m]
    women_rank = profile.women_rank
    for pos in range(profile.men_rank[m][wife[m]] + 1, profile.size):
        w = prefs[pos]
        if women_rank[w][m] < women_rank[w][husband[w]]:
            return w
    return None


def exposed_rotations(
    profile: PreferenceProfile, matching: Matching, check_stable: bool = True
) -> list[Rotation]:
    """All rotations exposed in a stable matching, canonical and sorted.

    For every man m define next(m) as the first woman after his partner on
    his list who prefers m to her current partner, and succ(m) as the
    current partner of next(m).  The exposed rotations are exactly the
    cycles of succ; men whose walk merely leads into a cycle belong to no
    rotation.  The result is empty iff the matching is woman-optimal.
    """
    if check_stable and not is_stable(profile, matching):
        raise NotStable(f"matching has blocking pairs: {blocking_pairs(profile, matching)}")

    s = profile.size
    husband = matching.husband
    succ: list[int | None] = [None] * s
    for m in range(s):
        nxt = _next_woman(profile, matching, m)
        if nxt is not None:
            succ[m] = husband[nxt]

    rotations = []
    state = [0] * s  # 0 unvisited, 1 on current walk, 2 finished
    for start in range(s):
        if state[start] or succ[start] is None:
            continue
        walk = []
        pos_in_walk = {}
        m = start
        while m is not None and state[m] == 0:
            state[m] = 1
            pos_in_walk[m] = len(walk)
            walk.append(m)
            m = succ[m]
        if m is not None and state[m] == 1:
            cycle = walk[pos_in_walk[m]:]
            rotations.append(
                Rotation.from_cycle([(x, matching.wife[x]) for x in cycle])
            )
        for x in walk:
            state[x] = 2
    rotations.sort()
    return rotations


def is_exposed(profile: PreferenceProfile, matching: Matching, rotation: Rotation) -> bool:
    """Check the rotation's defining conditions directly against the matching."""
    k = len(rotation.pairs)
    for i, (m, w) in enumerate(rotation.pairs):
        if matching.wife[m] != w:
            return False
        if _next_woman(profile, matching, m) != rotation.pairs[(i + 1) % k][1]:
            return False
    return True


def eliminate(profile: PreferenceProfile, matching: Matching, rotation: Rotation) -> Matching:
    """Replace each (m_i, w_i) by (m_i, w_{i+1}); all other pairs unchanged.

    The result is again stable (the involved women all improve, the men
    all get worse, and no new blocking pair can form outside the cycle);
    this is asserted in debug runs.
    """
    if not is_exposed(profile, matching, rotation):
        raise NotExposed(f"{rotation.render()} is not exposed in {matching.render()}")
    wife = list(matching.wife)
    k = len(rotation.pairs)
    for i, (m, _) in enumerate(rotation.pairs):
        wife[m] = rotation.pairs[(i + 1) % k][1]
    result = Matching(tuple(wife))
    assert is_stable(profile, result), "elimination produced an unstable matching"
    return result


def maximal_elimination_sequence(
    profile: PreferenceProfile,
) -> tuple[list[Rotation], list[Matching]]:
    """Eliminate canonically-first exposed rotations until none remain.

    Starts at the man-optimal matching; the final trace element is the
    woman-optimal matching, and the returned rotations are the instance's
    full rotation set, each appearing exactly once.
    """
    current = gale_shapley(profile)
    rotations: list[Rotation] = []
    trace = [current]
    while True:
        exposed = exposed_rotations(profile, current, check_stable=False)
        if not exposed:
            return rotations, trace
        current = eliminate(profile, current, exposed[0])
        rotations.append(exposed[0])
        trace.append(current)


def check_pair_uniqueness(rotations: Iterable[Rotation]) -> bool:
    """True iff no (man, woman) pair occurs in two distinct rotations."""
    seen: dict[tuple[int, int], Rotation] = {}
    for rot in set(rotations):
        for pair in rot.pairs:
            if pair in seen and seen[pair] != rot:
                return False
            seen[pair] = rot
    return True


def no_skipping_violations(
    profile: PreferenceProfile,
    rotations: Iterable[Rotation],
    stable_matchings: Iterable[Matching],
) -> list[tuple[int, int]]:
    """Pairs (m, w) skipped by some rotation yet matched in a stable matching.

    For consecutive rotation pairs (m_i, w_i), (m_{i+1}, w_{i+1}), any
    woman strictly between w_i and w_{i+1} on m_i's list can never be
    matched to m_i in any stable matching; returns all counterexamples
    found against the given stable set (empty on correct inputs).
    """
    matched = {(m, w) for matching in stable_matchings for m, w in matching.pairs()}
    bad = []
    for rot in rotations:
        k = len(rot.pairs)
        for i, (m, w_cur) in enumerate(rot.pairs):
            w_next = rot.pairs[(i + 1) % k][1]
            lo = profile.men_rank[m][w_cur]
            hi = profile.men_rank[m][w_next]
            for pos in range(lo + 1, hi):
                w = profile.men[m][pos]
                if (m, w) in matched:
                    bad.append((m, w))
    return bad
