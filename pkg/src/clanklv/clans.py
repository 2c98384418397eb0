"""(p,q)-clans: parsing, normalization, enumeration, pattern containment and
the Grassmannian permutations attached to a clan.

A clan is a tuple of symbols, each one of the strings ``"+"``, ``"-"`` or a
positive integer labelling a matched pair.  Labels are renumbered 1, 2, ...
in order of first occurrence, so equal clans compare equal structurally.

>>> c = parse_clan("5,7,5,7")
>>> c
Clan('1212')
>>> (c.p, c.q, clan_length(c))
(2, 2, 3)
>>> avoids_1212(parse_clan("1122"))
True
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

__all__ = [
    "ClanError",
    "Symbol",
    "Clan",
    "FsPattern",
    "parse_clan",
    "canonical_string",
    "generate_clans",
    "clan_count",
    "clan_length",
    "contains_pattern",
    "avoids_1212",
    "negative",
    "fs_pattern",
    "clan_from_fs",
    "v_perm",
    "u_perm",
    "yamamoto_u",
]

Symbol = Union[str, int]
SIGNS = ("+", "-")
_MINUS_ALIASES = {"−": "-", "–": "-"}


class ClanError(ValueError):
    """Malformed clan or FS-pattern."""


def _normalize(symbols) -> tuple[Symbol, ...]:
    relabel: dict[int, int] = {}
    seen: dict[int, int] = {}
    out: list[Symbol] = []
    for sym in symbols:
        if isinstance(sym, str):
            sym = _MINUS_ALIASES.get(sym, sym)
            if sym not in SIGNS:
                raise ClanError(f"unknown clan symbol {sym!r}")
            out.append(sym)
            continue
        if isinstance(sym, bool) or not isinstance(sym, int) or sym < 1:
            raise ClanError(f"pair labels must be positive integers, got {sym!r}")
        seen[sym] = seen.get(sym, 0) + 1
        if sym not in relabel:
            relabel[sym] = len(relabel) + 1
        out.append(relabel[sym])
    bad = sorted(label for label, count in seen.items() if count != 2)
    if bad:
        raise ClanError(
            "every pair label must occur exactly twice; offending labels: "
            + ", ".join(map(str, bad))
        )
    return tuple(out)


@dataclass(frozen=True)
class Clan:
    """A normalized clan.  Construct from any labelling; labels are renumbered."""

    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ClanError("a clan must have at least one symbol")
        object.__setattr__(self, "symbols", _normalize(self.symbols))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def p(self) -> int:
        return (self.n + self.symbols.count("+") - self.symbols.count("-")) // 2

    @property
    def q(self) -> int:
        return self.n - self.p

    @property
    def pairs(self) -> int:
        return sum(1 for s in self.symbols if not isinstance(s, str)) // 2

    @property
    def mates(self) -> tuple[int, ...]:
        """0-based position of each symbol's mate, or -1 for signs."""
        first: dict[int, int] = {}
        mates = [-1] * self.n
        for pos, sym in enumerate(self.symbols):
            if isinstance(sym, str):
                continue
            if sym in first:
                mates[pos] = first[sym]
                mates[first[sym]] = pos
            else:
                first[sym] = pos
        return tuple(mates)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"Clan({canonical_string(self)!r})"


def parse_clan(text: str) -> Clan:
    """Read a clan from text.

    Two forms are accepted: contiguous single characters (``"1+-1"``), where
    every digit is its own label, and comma-separated tokens (``"10,+,10"``).
    In the comma form a token made only of digits is one label; any other
    token is read character by character, so ``"1+-2,2+-1"`` also works.

    >>> parse_clan("1+-1").symbols
    (1, '+', '-', 1)
    >>> parse_clan("1,2,2")
    Traceback (most recent call last):
    ...
    clanklv.clans.ClanError: every pair label must occur exactly twice; offending labels: 1
    """
    text = "".join(_MINUS_ALIASES.get(ch, ch) for ch in text.strip())
    if not text:
        raise ClanError("empty clan")
    tokens: list[Symbol] = []
    if "," in text:
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ClanError(f"empty token in {text!r}")
            if token.isdigit():
                tokens.append(int(token))
            else:
                tokens.extend(_read_contiguous(token))
    else:
        tokens = _read_contiguous(text)
    return Clan(tuple(tokens))


def _read_contiguous(text: str) -> list[Symbol]:
    out: list[Symbol] = []
    for ch in text:
        if ch in SIGNS:
            out.append(ch)
        elif ch.isdigit() and ch != "0":
            out.append(int(ch))
        else:
            raise ClanError(f"unexpected character {ch!r} in clan text")
    return out


def canonical_string(c: Clan) -> str:
    """Contiguous text when every label is a single digit, comma-separated otherwise.

    >>> canonical_string(Clan((1, "+", 2, 2, "-", 1)))
    '1+22-1'
    """
    parts = [str(s) for s in c.symbols]
    if c.pairs <= 9:
        return "".join(parts)
    return ",".join(parts)


def clan_count(p: int, q: int) -> int:
    """Closed-form number of (p,q)-clans."""
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        double_factorial = 1
        for odd in range(1, 2 * k, 2):
            double_factorial *= odd
        total += comb(n, 2 * k) * double_factorial * comb(n - 2 * k, p - k)
    return total


def generate_clans(p: int, q: int) -> list[Clan]:
    """All (p,q)-clans, each normalized, in a fixed deterministic order.

    >>> [str(c) for c in generate_clans(1, 1)]
    ['+-', '-+', '11']
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 and p + q >= 1")
    n = p + q
    result: list[Clan] = []
    prefix: list[Symbol] = []

    def extend(plus: int, minus: int, open_labels: list[int], next_label: int):
        remaining = n - len(prefix)
        if remaining == 0:
            result.append(Clan(tuple(prefix)))
            return
        # every open pair still needs a closing position
        if plus:
            prefix.append("+")
            extend(plus - 1, minus, open_labels, next_label)
            prefix.pop()
        if minus:
            prefix.append("-")
            extend(plus, minus - 1, open_labels, next_label)
            prefix.pop()
        if remaining - len(open_labels) - plus - minus >= 2:
            prefix.append(next_label)
            extend(plus, minus, open_labels + [next_label], next_label + 1)
            prefix.pop()
        for idx, label in enumerate(open_labels):
            prefix.append(label)
            extend(plus, minus, open_labels[:idx] + open_labels[idx + 1:], next_label)
            prefix.pop()

    for k in range(min(p, q) + 1):
        extend(p - k, q - k, [], 1)
    return result


def clan_length(c: Clan) -> int:
    """Dimension of the orbit above the closed orbits.

    Sums, over pairs at positions i < j, the gap j - i minus the number of
    pairs that start before i and end strictly between i and j.
    """
    mates = c.mates
    total = 0
    for i, j in enumerate(mates):
        if j <= i:
            continue
        crossing = sum(1 for s in range(i) if i < mates[s] < j)
        total += j - i - crossing
    return total


def contains_pattern(c: Clan, pat: Clan) -> bool:
    """Whether some subsequence of ``c`` reads as ``pat``.

    Signs must match literally.  A pair of ``c`` can only stand for a pair of
    ``pat`` when both of its endpoints are chosen.

    >>> contains_pattern(parse_clan("121323"), parse_clan("1212"))
    True
    >>> contains_pattern(parse_clan("112233"), parse_clan("1212"))
    False
    """
    text, pattern = c.symbols, pat.symbols
    n, m = len(text), len(pattern)
    if m > n:
        return False
    text_mates, pat_mates = c.mates, pat.mates

    def suffix_counts(symbols, mates):
        # counts of (+, -, first occurrences, second occurrences) from each index on
        rows = [(0, 0, 0, 0)] * (len(symbols) + 1)
        for pos in range(len(symbols) - 1, -1, -1):
            plus, minus, firsts, seconds = rows[pos + 1]
            sym = symbols[pos]
            if sym == "+":
                plus += 1
            elif sym == "-":
                minus += 1
            elif mates[pos] > pos:
                firsts += 1
            else:
                seconds += 1
            rows[pos] = (plus, minus, firsts, seconds)
        return rows

    text_left = suffix_counts(text, text_mates)
    pat_left = suffix_counts(pattern, pat_mates)
    chosen = [0] * m

    def feasible(k: int, start: int) -> bool:
        have, need = text_left[start], pat_left[k]
        return (
            have[0] >= need[0]
            and have[1] >= need[1]
            and have[2] + have[3] >= need[2] + need[3]
        )

    def search(k: int, start: int) -> bool:
        if k == m:
            return True
        if not feasible(k, start):
            return False
        sym = pattern[k]
        mate = pat_mates[k]
        if isinstance(sym, str):
            for pos in range(start, n - (m - k) + 1):
                if text[pos] == sym:
                    chosen[k] = pos
                    if search(k + 1, pos + 1):
                        return True
            return False
        if mate < k:
            pos = text_mates[chosen[mate]]
            if pos < start:
                return False
            chosen[k] = pos
            return search(k + 1, pos + 1)
        span = mate - k
        for pos in range(start, n - (m - k) + 1):
            if text_mates[pos] - pos >= span:
                chosen[k] = pos
                if search(k + 1, pos + 1):
                    return True
        return False

    return search(0, 0)


_PATTERN_1212 = Clan((1, 2, 1, 2))


def avoids_1212(c: Clan) -> bool:
    """True when any two pairs of ``c`` are nested or disjoint."""
    mates = c.mates
    stack: list[int] = []
    for pos, mate in enumerate(mates):
        if mate < 0:
            continue
        if mate > pos:
            stack.append(pos)
        elif stack.pop() != mate:
            return False
    return True


def negative(c: Clan) -> Clan:
    """Swap every ``+`` with ``-``."""
    swap = {"+": "-", "-": "+"}
    return Clan(tuple(swap.get(s, s) if isinstance(s, str) else s for s in c.symbols))


@dataclass(frozen=True)
class FsPattern:
    """A clan with its pairs forgotten: first occurrences ``F``, second ``S``."""

    entries: tuple[str, ...]

    def __post_init__(self):
        entries = tuple(_MINUS_ALIASES.get(e, e) for e in self.entries)
        depth = 0
        for e in entries:
            if e == "F":
                depth += 1
            elif e == "S":
                depth -= 1
                if depth < 0:
                    raise ClanError("S without an earlier unmatched F")
            elif e not in SIGNS:
                raise ClanError(f"unknown FS symbol {e!r}")
        if depth:
            raise ClanError("unbalanced FS-pattern")
        if not entries:
            raise ClanError("empty FS-pattern")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> FsPattern:
        return cls(tuple(ch for ch in text if not ch.isspace() and ch != ","))

    def __str__(self) -> str:
        return "".join(self.entries)


def fs_pattern(c: Clan) -> FsPattern:
    mates = c.mates
    return FsPattern(
        tuple(
            s if isinstance(s, str) else ("F" if mates[pos] > pos else "S")
            for pos, s in enumerate(c.symbols)
        )
    )


def clan_from_fs(f: FsPattern) -> Clan:
    """The unique (1,2,1,2)-avoiding clan with FS-pattern ``f``.

    Each ``S`` is mated with the most recent unmated ``F``.

    >>> clan_from_fs(FsPattern.parse("FFSS"))
    Clan('1221')
    """
    out: list[Symbol] = []
    open_labels: list[int] = []
    next_label = 1
    for e in f.entries:
        if e == "F":
            open_labels.append(next_label)
            out.append(next_label)
            next_label += 1
        elif e == "S":
            out.append(open_labels.pop())
        else:
            out.append(e)
    return Clan(tuple(out))


def v_perm(c: Clan) -> tuple[int, ...]:
    """Positions of ``+`` and first occurrences, then of ``-`` and second occurrences."""
    mates = c.mates
    up = [pos + 1 for pos, s in enumerate(c.symbols) if s == "+" or mates[pos] > pos]
    down = [pos + 1 for pos, s in enumerate(c.symbols) if s == "-" or 0 <= mates[pos] < pos]
    return tuple(up + down)


def u_perm(c: Clan) -> tuple[int, ...]:
    """Positions of ``+`` and second occurrences, then of ``-`` and first occurrences."""
    mates = c.mates
    up = [pos + 1 for pos, s in enumerate(c.symbols) if s == "+" or 0 <= mates[pos] < pos]
    down = [pos + 1 for pos, s in enumerate(c.symbols) if s == "-" or mates[pos] > pos]
    return tuple(up + down)


def yamamoto_u(c: Clan) -> tuple[int, ...]:
    """Inverse of ``v_perm(c)`` with the entries at each pair's two positions swapped.

    >>> yamamoto_u(parse_clan("12+-12"))
    (5, 6, 3, 4, 1, 2)
    """
    v = v_perm(c)
    oneline = [0] * len(v)
    for pos, value in enumerate(v, start=1):
        oneline[value - 1] = pos
    for i, j in enumerate(c.mates):
        if j > i:
            oneline[i], oneline[j] = oneline[j], oneline[i]
    return tuple(oneline)


def iter_clans(max_n: int) -> Iterator[Clan]:
    """Every clan with 1 <= p + q <= max_n."""
    for n in range(1, max_n + 1):
        for p in range(n + 1):
            yield from generate_clans(p, n - p)
