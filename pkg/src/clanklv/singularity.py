"""Smoothness, lci and Gorenstein verdicts for orbit closures, pointwise
profiles, and the singular, non-lci and non-Gorenstein loci.

Verdicts for (1,2,1,2)-avoiding clans come from the path diagram and are
cross-checked against the pattern lists.  For containing clans only
smoothness has a proven criterion; lci has an opt-in conjectural pattern test
and Gorensteinness is reported as unknown.

>>> is_lci(parse_clan("1+-+-1")).status
<Verdict.NO: 'no'>
>>> [str(t) for t in singular_locus(parse_clan("1++-1"))]
['+++--']
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .clans import Clan, FsPattern, avoids_1212, clan_from_fs, contains_pattern, negative, parse_clan
from .path_diagram import (
    Boundary,
    Corner,
    PathDiagram,
    band_contains,
    clan_diagram,
    components,
    inner_corners,
    singular_corners,
)
from .permutation import LatticePath

__all__ = [
    "Verdict",
    "TriState",
    "LocalProfile",
    "ConsistencyError",
    "SMOOTH_PATTERNS",
    "LCI_PATTERNS",
    "CONJECTURAL_LCI_PATTERNS",
    "is_smooth",
    "is_lci",
    "is_gorenstein",
    "lci_by_diagram",
    "local_profile",
    "singular_locus",
    "non_lci_locus",
    "non_gorenstein_locus",
]


class ConsistencyError(RuntimeError):
    """Two routes that must agree did not."""


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TriState:
    status: Verdict
    conjectural: bool = False

    def __str__(self) -> str:
        return self.status.value + (" (conjectural)" if self.conjectural else "")


class LocalProfile(NamedTuple):
    smooth: bool
    lci: bool
    gorenstein: bool


def _with_negatives(texts: Iterable[str]) -> tuple[Clan, ...]:
    out: list[Clan] = []
    for text in texts:
        for pat in (parse_clan(text), negative(parse_clan(text))):
            if pat not in out:
                out.append(pat)
    return tuple(out)


SMOOTH_PATTERNS = tuple(
    parse_clan(t) for t in ("1212", "1+-1", "1-+1", "1+221", "1-221", "122+1", "122-1", "122331")
)

LCI_PATTERNS = _with_negatives(
    [
        "1++-1", "1+--1", "1-22+1", "1++221", "1+-221", "122--1", "122+-1", "12+2-1",
        "1+2-21", "1+23321", "12332-1", "1-22331", "12+2331", "122+331", "1223-31",
        "12233+1", "12332441", "12234431", "12233441",
    ]
)

CONJECTURAL_LCI_PATTERNS = _with_negatives(
    [
        "1+212", "121+2", "121323", "122313", "121332", "1+23231", "12323+1", "12323441",
        "12234341", "12342341", "12343241", "12342431",
    ]
)


def _avoids_all(c: Clan, patterns: Iterable[Clan]) -> bool:
    return not any(contains_pattern(c, pat) for pat in patterns)


def is_smooth(c: Clan) -> bool:
    """Avoidance of the eight smoothness patterns.

    For (1,2,1,2)-avoiding clans this is checked against the diagram (no
    singular corners) and a disagreement raises :class:`ConsistencyError`.
    """
    verdict = _avoids_all(c, SMOOTH_PATTERNS)
    if avoids_1212(c) and verdict != (not singular_corners(clan_diagram(c))):
        raise ConsistencyError(f"smoothness pattern and diagram tests disagree on {c}")
    return verdict


def lci_by_diagram(d: PathDiagram) -> bool:
    """Every singular corner has legs (1,1) and no component has two on one side."""
    corners = singular_corners(d)
    if any(corner.legs != (1, 1) for corner in corners):
        return False
    for start, end in components(d):
        for boundary in Boundary:
            inside = [
                c for c in corners if c.boundary is boundary and start <= c.step < end
            ]
            if len(inside) > 1:
                return False
    return True


def is_lci(c: Clan, conjectural: bool = False) -> TriState:
    if avoids_1212(c):
        by_pattern = _avoids_all(c, LCI_PATTERNS)
        if by_pattern != lci_by_diagram(clan_diagram(c)):
            raise ConsistencyError(f"lci pattern and diagram tests disagree on {c}")
        return TriState(Verdict.YES if by_pattern else Verdict.NO)
    if not conjectural:
        return TriState(Verdict.UNKNOWN)
    ok = _avoids_all(c, LCI_PATTERNS) and _avoids_all(c, CONJECTURAL_LCI_PATTERNS)
    return TriState(Verdict.YES if ok else Verdict.NO, conjectural=True)


def is_gorenstein(c: Clan) -> TriState:
    if not avoids_1212(c):
        return TriState(Verdict.UNKNOWN)
    equal = all(
        corner.left_leg == corner.right_leg for corner in singular_corners(clan_diagram(c))
    )
    return TriState(Verdict.YES if equal else Verdict.NO)


def _require_avoiding(c: Clan):
    if not avoids_1212(c):
        raise ValueError(f"{c} contains (1,2,1,2); only avoiding clans are supported")


def local_profile(gamma: Clan, tau: Clan) -> LocalProfile:
    """Smooth / lci / Gorenstein flags of the closure of ``gamma`` at points of ``tau``."""
    _require_avoiding(gamma)
    d, e = clan_diagram(gamma), clan_diagram(tau)
    if (gamma.p, gamma.q) != (tau.p, tau.q) or not band_contains(d, e):
        raise ValueError(f"{tau} does not lie in the closure of {gamma}")
    return _profile(d, e)


def _profile(d: PathDiagram, e: PathDiagram) -> LocalProfile:
    smooth = lci = gorenstein = True
    for path, boundary, cmp in (
        (d.lower, Boundary.BOTTOM, e.lower),
        (d.upper, Boundary.TOP, e.upper),
    ):
        corners = inner_corners(path, boundary)
        missing = [c.point not in cmp.point_set for c in corners]
        for corner, off in zip(corners, missing):
            if off:
                smooth = False
                if corner.legs != (1, 1):
                    lci = False
                if corner.left_leg != corner.right_leg:
                    gorenstein = False
        if any(a and b for a, b in zip(missing, missing[1:])):
            lci = False
    return LocalProfile(smooth, lci, gorenstein)


def _remove_hooks(d: PathDiagram, corners: list[Corner]) -> PathDiagram:
    """Largest sub-band of ``d`` whose paths avoid every given corner.

    A bottom corner at height h pushes the lower path over the tent
    h + 2 - |j - k|; a top corner pulls the upper path under h - 2 + |j - k|.
    """
    upper = list(d.upper.heights)
    lower = list(d.lower.heights)
    for corner in corners:
        k = corner.step
        if corner.boundary is Boundary.BOTTOM:
            peak = d.lower.heights[k]
            lower = [max(h, peak + 2 - abs(j - k)) for j, h in enumerate(lower)]
        else:
            valley = d.upper.heights[k]
            upper = [min(h, valley - 2 + abs(j - k)) for j, h in enumerate(upper)]
    return PathDiagram(LatticePath.from_heights(upper), LatticePath.from_heights(lower))


def _locus(c: Clan, corner_groups: list[list[Corner]]) -> list[Clan]:
    d = clan_diagram(c)
    bands: list[PathDiagram] = []
    for group in corner_groups:
        band = _remove_hooks(d, group)
        if band not in bands:
            bands.append(band)
    maximal = [
        b for b in bands if not any(o != b and band_contains(o, b) for o in bands)
    ]
    return [clan_from_fs(FsPattern(b.fs_entries())) for b in maximal]


def singular_locus(c: Clan) -> list[Clan]:
    """Orbits whose closures are the components of the singular locus.

    >>> [str(t) for t in singular_locus(parse_clan("1+-22+-1"))]
    ['++-1-+-1', '1+-+1+--', '11-2++-2', '1+--1+22']
    """
    _require_avoiding(c)
    return _locus(c, [[corner] for corner in singular_corners(clan_diagram(c))])


def _adjacent_pairs(d: PathDiagram, corners: list[Corner]) -> list[list[Corner]]:
    pairs = []
    for start, end in components(d):
        for boundary in Boundary:
            inside = [x for x in corners if x.boundary is boundary and start <= x.step < end]
            pairs.extend([a, b] for a, b in zip(inside, inside[1:]))
    return pairs


def non_lci_locus(c: Clan) -> list[Clan]:
    _require_avoiding(c)
    d = clan_diagram(c)
    corners = singular_corners(d)
    groups = [[x] for x in corners if x.legs != (1, 1)]
    groups += [
        pair for pair in _adjacent_pairs(d, corners) if all(x.legs == (1, 1) for x in pair)
    ]
    return _locus(c, groups)


def non_gorenstein_locus(c: Clan) -> list[Clan]:
    _require_avoiding(c)
    corners = singular_corners(clan_diagram(c))
    return _locus(c, [[x] for x in corners if x.left_leg != x.right_leg])
