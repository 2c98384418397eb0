"""Symmetric-group arithmetic, Bruhat order and the lattice paths of
(co)Grassmannian permutations.

Permutations are plain tuples in one-line notation with values 1..n.

>>> coxeter_length((4, 3, 2, 1))
6
>>> lattice_path((1, 3, 6, 7, 2, 4, 5), 4)
LatticePath('URURRUU')
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "Permutation",
    "LatticePath",
    "parse_permutation",
    "format_permutation",
    "identity",
    "coxeter_length",
    "inverse",
    "compose",
    "w0",
    "w0K",
    "descents",
    "ascents",
    "is_grassmannian",
    "is_cograssmannian",
    "bruhat_leq",
    "lattice_path",
]

Permutation = tuple[int, ...]
UP, RIGHT = "U", "R"


def _check(w) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_permutation(text: str) -> Permutation:
    """Contiguous digits (n <= 9) or comma-separated one-line notation."""
    text = text.strip()
    if "," in text:
        return _check(int(tok) for tok in text.split(","))
    if not text.isdigit():
        raise ValueError(f"bad permutation text {text!r}")
    return _check(int(ch) for ch in text)


def format_permutation(w: Permutation) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def coxeter_length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for pos, value in enumerate(w, start=1):
        out[value - 1] = pos
    return tuple(out)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation i -> a(b(i))."""
    if len(a) != len(b):
        raise ValueError("cannot compose permutations of different sizes")
    return tuple(a[value - 1] for value in b)


def w0(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def w0K(p: int, q: int) -> Permutation:
    """Longest element of S_p x S_q: reverses 1..p and p+1..p+q."""
    return tuple(range(p, 0, -1)) + tuple(range(p + q, p, -1))


def descents(w: Permutation) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def ascents(w: Permutation) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] < w[i]]


def is_grassmannian(w: Permutation, p: int) -> bool:
    return all(i == p for i in descents(w))


def is_cograssmannian(w: Permutation) -> bool:
    return len(ascents(w)) <= 1


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Rank-matrix criterion: x <= y iff #{k <= i : x(k) >= j} <= same for y."""
    if len(x) != len(y):
        raise ValueError("permutations of different sizes")
    n = len(x)
    x_counts = [0] * (n + 2)
    y_counts = [0] * (n + 2)
    for i in range(n):
        for j in range(x[i], 0, -1):
            x_counts[j] += 1
        for j in range(y[i], 0, -1):
            y_counts[j] += 1
        for j in range(1, n + 1):
            if x_counts[j] > y_counts[j]:
                return False
    return True


@dataclass(frozen=True)
class LatticePath:
    """A monotone path from (0,0) made of ``U`` (y+1) and ``R`` (x+1) steps."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - {UP, RIGHT}:
            raise ValueError(f"lattice path steps must be U or R: {self.steps!r}")

    @property
    def p(self) -> int:
        return self.steps.count(UP)

    @property
    def q(self) -> int:
        return self.steps.count(RIGHT)

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"LatticePath({self.steps!r})"

    @cached_property
    def points(self) -> tuple[tuple[int, int], ...]:
        """Visited points (x, y), starting at the origin."""
        x = y = 0
        pts = [(0, 0)]
        for step in self.steps:
            if step == UP:
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def point_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.points)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """y - x after each prefix: the height in the rotated picture."""
        return tuple(y - x for x, y in self.points)

    def word(self) -> str:
        """Parenthesis word: ``(`` for up steps, ``)`` for right steps."""
        return self.steps.replace(UP, "(").replace(RIGHT, ")")

    @classmethod
    def from_heights(cls, heights) -> LatticePath:
        return cls("".join(UP if b > a else RIGHT for a, b in zip(heights, heights[1:])))

    def weakly_above(self, other: LatticePath) -> bool:
        """Every prefix of ``self`` has at least as many up steps as ``other``'s."""
        return len(self) == len(other) and all(
            a >= b for a, b in zip(self.heights, other.heights)
        )


def lattice_path(w: Permutation, p: int) -> LatticePath:
    """Step i goes up when w^{-1}(i) <= p and right otherwise."""
    if not 0 <= p <= len(w):
        raise ValueError("p out of range")
    w_inv = inverse(w)
    return LatticePath("".join(UP if w_inv[i] <= p else RIGHT for i in range(len(w))))
