"""Kazhdan-Lusztig polynomials of S_n by two independent routes.

``kl_poly`` builds the canonical basis element C'_w of the Hecke algebra one
right descent at a time.  ``ls_kl`` handles cograssmannian ``w`` with the
Lascoux-Schutzenberger capacity trees: match the parentheses of w's lattice
path, give each leaf the diagonal distance from its corner to x's path, and
count weakly increasing edge labellings.

>>> kl_poly((1, 2, 3, 4), (4, 2, 3, 1))
QPoly([1, 1])
>>> ls_kl((1, 2, 3, 4), (4, 2, 3, 1))
QPoly([1, 1])
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

from .path_diagram import Boundary, Corner, corner_capacity, inner_corners
from .permutation import (
    LatticePath,
    Permutation,
    ascents,
    bruhat_leq,
    coxeter_length,
    is_cograssmannian,
    lattice_path,
)
from .poly import LaurentHalfPoly, QPoly, padd, pmul, pstrip, reduce_by_degree_bound

__all__ = [
    "HeckeElement",
    "hecke_apply_gen",
    "hecke_basis",
    "KLContext",
    "kl_poly",
    "CapacityTree",
    "build_capacity_tree",
    "count_labellings",
    "ls_kl",
]

HeckeElement = dict  # Permutation -> LaurentHalfPoly

_Q = LaurentHalfPoly({2: 1})
_Q_MINUS_ONE = LaurentHalfPoly({2: 1, 0: -1})


def hecke_basis(w: Permutation) -> HeckeElement:
    return {tuple(w): LaurentHalfPoly({0: 1})}


def _accumulate(out: HeckeElement, key, coeff: LaurentHalfPoly):
    total = out.get(key, LaurentHalfPoly()) + coeff
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def hecke_apply_gen(i: int, h: HeckeElement) -> HeckeElement:
    """Left multiplication by T_{s_i}.

    s_i w swaps the values i and i+1 in w's one-line notation; it is longer
    than w exactly when i appears before i+1.
    """
    out: HeckeElement = {}
    for w, coeff in h.items():
        if not 1 <= i < len(w):
            raise ValueError(f"generator s_{i} out of range for S_{len(w)}")
        sw = tuple(i + 1 if a == i else i if a == i + 1 else a for a in w)
        if w.index(i) < w.index(i + 1):
            _accumulate(out, sw, coeff)
        else:
            _accumulate(out, w, coeff * _Q_MINUS_ONE)
            _accumulate(out, sw, coeff * _Q)
    return out


class KLContext:
    """Memoized canonical basis of the Hecke algebra of S_n.

    ``row(w)`` maps each x <= w to the coefficient list of P_{x,w}.  Writes
    to the memo are serialized by a lock, so a context may be shared.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[Permutation, dict[Permutation, list[int]]] = {}
        self._lengths: dict[Permutation, int] = {}
        self._lock = threading.RLock()

    def length(self, w: Permutation) -> int:
        ell = self._lengths.get(w)
        if ell is None:
            ell = self._lengths[w] = coxeter_length(w)
        return ell

    def row(self, w: Permutation) -> dict[Permutation, list[int]]:
        w = tuple(w)
        if len(w) != self.n:
            raise ValueError(f"expected a permutation of size {self.n}")
        row = self._rows.get(w)
        if row is not None:
            return row
        with self._lock:
            row = self._rows.get(w)
            if row is None:
                row = self._rows[w] = self._build(w)
        return row

    def _build(self, w: Permutation) -> dict[Permutation, list[int]]:
        descent = next((i for i in range(self.n - 1) if w[i] > w[i + 1]), None)
        if descent is None:
            return {w: [1]}
        i = descent
        shorter = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
        # C'_{w'} C'_s with C'_s = v^-1 (T_s + 1), all relative to v^-l(w)
        coeffs: dict[Permutation, list[int]] = {}
        for x, poly in self.row(shorter).items():
            xs = x[:i] + (x[i + 1], x[i]) + x[i + 2:]
            factor = poly if x[i] < x[i + 1] else [0] + list(poly)
            padd(coeffs.setdefault(x, []), factor)
            padd(coeffs.setdefault(xs, []), factor)
        top = self.length(w)
        if pstrip(coeffs.get(w, [])) != [1]:
            raise ArithmeticError(f"leading coefficient of C'_{w} is not 1")
        reduce_by_degree_bound(coeffs, top, self.length, self.row)
        return {x: pstrip(p) for x, p in coeffs.items()}


_contexts: dict[int, KLContext] = {}
_contexts_lock = threading.Lock()


def _context(n: int) -> KLContext:
    with _contexts_lock:
        ctx = _contexts.get(n)
        if ctx is None:
            ctx = _contexts[n] = KLContext(n)
    return ctx


def kl_poly(x: Permutation, w: Permutation) -> QPoly:
    """P_{x,w}(q); zero when x is not below w."""
    if len(x) != len(w):
        raise ValueError("permutations of different sizes")
    return QPoly(_context(len(w)).row(tuple(w)).get(tuple(x), []))


@dataclass
class CapacityTree:
    """Rooted tree from a parenthesis matching.

    Each non-root node is a matched pair; ``span`` holds the 0-based
    positions of its two parentheses.  Leaves carry a capacity and the
    corner they stand for.
    """

    children: list[CapacityTree] = field(default_factory=list)
    span: Optional[tuple[int, int]] = None
    capacity: Optional[int] = None
    corner: Optional[Corner] = None

    @property
    def is_leaf(self) -> bool:
        return self.span is not None and not self.children

    def leaves(self) -> list[CapacityTree]:
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)


def build_capacity_tree(word: str, mode: str, comparison: LatticePath) -> CapacityTree:
    """Tree of matched parentheses of ``word`` with leaf capacities.

    ``mode="()"`` matches ``(`` with a later ``)``; leaves are up-right turns
    of the word's path, measured up-left to ``comparison``.  ``mode=")("``
    matches ``)`` with a later ``(``; leaves are right-up turns, measured
    down-right.

    >>> t = build_capacity_tree("()))(()((", "()", lattice_path((7,6,4,2,1,9,8,5,3), 5))
    >>> [leaf.capacity for leaf in t.leaves()]
    [0, 1]
    """
    if mode not in ("()", ")("):
        raise ValueError("mode must be '()' or ')('")
    if set(word) - {"(", ")"}:
        raise ValueError("word must consist of parentheses")
    opener, closer = mode
    path = LatticePath(word.replace("(", "U").replace(")", "R"))
    boundary = Boundary.BOTTOM if mode == "()" else Boundary.TOP
    corners = {c.step: c for c in inner_corners(path, boundary)}
    root = CapacityTree()
    stack: list[tuple[int, list[CapacityTree]]] = []
    for pos, ch in enumerate(word):
        if ch == opener:
            stack.append((pos, []))
        elif stack:
            start, children = stack.pop()
            node = CapacityTree(children=children, span=(start, pos))
            if not children:
                corner = node.corner = corners[pos]
                node.capacity = corner_capacity(corner, comparison)
            (stack[-1][1] if stack else root.children).append(node)
    for _, children in stack:
        root.children.extend(children)
    return root


def count_labellings(tree: CapacityTree) -> QPoly:
    """Sum of q^(label total) over weakly increasing labellings bounded by capacities."""
    leaves = tree.leaves()
    top = max((leaf.capacity for leaf in leaves), default=0)

    def table(node: CapacityTree) -> list[list[int]]:
        # entry m: generating polynomial of the subtree when the edge into node has label m
        if node.is_leaf:
            return [[0] * m + [1] if m <= node.capacity else [] for m in range(top + 1)]
        product = [[0] * m + [1] for m in range(top + 1)]
        for child in node.children:
            sub = table(child)
            running: list[int] = []
            for m in range(top, -1, -1):
                running = padd(list(running), sub[m])
                product[m] = pmul(product[m], running)
        return product

    total = [1]
    for child in tree.children:
        sub = table(child)
        at_least_zero: list[int] = []
        for row in sub:
            padd(at_least_zero, row)
        total = pmul(total, at_least_zero)
    return QPoly(total)


def ls_kl(x: Permutation, w: Permutation) -> QPoly:
    """P_{x,w} for cograssmannian ``w`` from the capacity tree of w's path."""
    x, w = tuple(x), tuple(w)
    if not is_cograssmannian(w):
        raise ValueError(f"{w} has more than one ascent")
    if not bruhat_leq(x, w):
        raise ValueError(f"{x} is not below {w} in Bruhat order")
    found = ascents(w)
    if not found:
        return QPoly.one()
    p = found[0]
    tree = build_capacity_tree(lattice_path(w, p).word(), "()", lattice_path(x, p))
    return count_labellings(tree)
