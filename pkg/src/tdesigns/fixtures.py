"""Reference designs: the Fano plane and the Steiner system S(5,6,12).

S(5,6,12) is built as one orbit of 6-subsets of the projective line over
GF(11) under the group generated by z -> z+1 and z -> -1/z (which is
PSL(2,11)).  Field elements 0..10 become points 1..11 and infinity becomes 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .design import DesignParameters, IncidenceStructure, verify_bruteforce

FANO_BLOCKS = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 7), (2, 5, 6), (3, 4, 6), (3, 5, 7))

Q = 11
INF = Q
# Found by scan_s5612_base_block(); re-verified every time the fixture loads.
S5612_BASE_BLOCK = (0, 1, 2, 3, 4, 6)


class FixtureError(RuntimeError):
    """A built-in fixture failed its own verification."""


def _translate(z: int) -> int:
    return INF if z == INF else (z + 1) % Q


def _neg_inverse(z: int) -> int:
    if z == INF:
        return 0
    if z == 0:
        return INF
    return (-pow(z, -1, Q)) % Q


def psl2_11_orbit(base: tuple[int, ...]) -> set[frozenset[int]]:
    """Orbit of a subset of GF(11) u {inf} under <z+1, -1/z>."""
    start = frozenset(base)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for g in (_translate, _neg_inverse):
                image = frozenset(g(z) for z in S)
                if image not in orbit:
                    orbit.add(image)
                    nxt.append(image)
        frontier = nxt
    return orbit


def _structure_from_orbit(orbit) -> IncidenceStructure:
    return IncidenceStructure.from_blocks(12, [[z + 1 for z in S] for S in orbit], k=6)


def scan_s5612_base_block() -> tuple[int, ...]:
    """First 6-subset (lexicographic) whose orbit has 132 members forming a 5-(12,6,1) design."""
    for base in combinations(range(Q + 1), 6):
        orbit = psl2_11_orbit(base)
        if len(orbit) != 132:
            continue
        params = verify_bruteforce(_structure_from_orbit(orbit), 5)
        if params is not None and params.lam == 1:
            return base
    raise FixtureError("no 6-subset of the projective line generates S(5,6,12)")


def generate_s5612(base: tuple[int, ...] = S5612_BASE_BLOCK) -> IncidenceStructure:
    orbit = psl2_11_orbit(base)
    if len(orbit) != 132:
        raise FixtureError(f"base block {base} has orbit of size {len(orbit)}, expected 132")
    return _structure_from_orbit(orbit)


def fano() -> IncidenceStructure:
    return IncidenceStructure.from_blocks(7, FANO_BLOCKS)


def fano_minus_one() -> IncidenceStructure:
    return fano().without(FANO_BLOCKS[0])


@dataclass(frozen=True)
class Fixture:
    name: str
    structure: IncidenceStructure
    expected_params: DesignParameters | None
    t: int


_BUILDERS = {
    "fano": (fano, 2, (2, 7, 3, 1)),
    "fano-minus-one": (fano_minus_one, 2, None),
    "s5612": (generate_s5612, 5, (5, 12, 6, 1)),
}

FIXTURE_NAMES = tuple(_BUILDERS)


def load_fixture(name: str) -> Fixture:
    """Build a fixture and re-verify it by brute force."""
    try:
        build, t, expected = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    D = build()
    params = verify_bruteforce(D, t)
    got = None if params is None else (params.t, params.n, params.k, params.lam)
    if got != expected:
        raise FixtureError(f"fixture {name} verifies as {got}, expected {expected}")
    return Fixture(name, D, params, t)
