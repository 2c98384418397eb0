"""Kazhdan-Lusztig-Vogan polynomials for clans.

Two routes are provided and checked against each other:

* ``klv_table`` runs the recursion in the Hecke-module spanned by the clans.
  It works for every clan.
* ``klv_richardson`` covers (1,2,1,2)-avoiding clans.  It multiplies two
  capacity-tree counts read off the path diagram.

>>> t = klv_table(2, 2)
>>> t.poly(parse_clan("+--+"), parse_clan("1212"))
QPoly([1, 1])
>>> klv_richardson(parse_clan("+-+-+-+-"), parse_clan("12+-+-21"))
QPoly([1, 3, 3, 1])
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterator, Optional

from .clans import Clan, Symbol, avoids_1212, canonical_string, clan_length, generate_clans, parse_clan
from .kl import build_capacity_tree, count_labellings
from .path_diagram import band_contains, clan_diagram
from .poly import LaurentHalfPoly, QPoly, padd, pmul, pstrip, reduce_by_degree_bound

__all__ = [
    "CaseKind",
    "ModuleElement",
    "KlvError",
    "classify_root",
    "act",
    "module_apply_gen",
    "module_basis",
    "KlvModule",
    "KlvTable",
    "klv_table",
    "klv_richardson",
    "ClosureOrder",
    "closure_order",
]

ModuleElement = dict  # Clan -> LaurentHalfPoly


class KlvError(ArithmeticError):
    """The module recursion hit a state its theory rules out."""


class CaseKind(Enum):
    COMPACT_IMAGINARY = "compact imaginary"
    NONCOMPACT_IMAGINARY = "noncompact imaginary"
    REAL = "real"
    COMPLEX_ASCENT = "complex ascent"
    COMPLEX_DESCENT = "complex descent"


def classify_root(c: Clan, i: int) -> CaseKind:
    """How the simple reflection s_i (1-based, swapping positions i, i+1) acts on ``c``.

    >>> classify_root(parse_clan("1122"), 2)
    <CaseKind.COMPLEX_ASCENT: 'complex ascent'>
    """
    if not 1 <= i < c.n:
        raise ValueError(f"generator s_{i} out of range for n = {c.n}")
    a, b = c.symbols[i - 1], c.symbols[i]
    mates = c.mates
    if isinstance(a, str) and isinstance(b, str):
        return CaseKind.COMPACT_IMAGINARY if a == b else CaseKind.NONCOMPACT_IMAGINARY
    if a == b:
        return CaseKind.REAL
    if isinstance(b, str):
        ascent = mates[i - 1] < i - 1
    elif isinstance(a, str):
        ascent = mates[i] > i
    else:
        ascent = mates[i - 1] < mates[i]
    return CaseKind.COMPLEX_ASCENT if ascent else CaseKind.COMPLEX_DESCENT


def _replace(c: Clan, i: int, first: Symbol, second: Symbol) -> Clan:
    symbols = list(c.symbols)
    symbols[i - 1], symbols[i] = first, second
    return Clan(tuple(symbols))


def act(c: Clan, i: int) -> list[tuple[Clan, tuple[int, ...]]]:
    """T_{s_i} applied to the basis element of ``c``.

    Returns (clan, coefficients in q) terms.
    """
    kind = classify_root(c, i)
    a, b = c.symbols[i - 1], c.symbols[i]
    if kind is CaseKind.COMPACT_IMAGINARY:
        return [(c, (0, 1))]
    if kind is CaseKind.NONCOMPACT_IMAGINARY:
        fresh = c.pairs + 1
        return [(_replace(c, i, fresh, fresh), (1,)), (_replace(c, i, b, a), (1,))]
    if kind is CaseKind.REAL:
        return [
            (c, (-2, 1)),
            (_replace(c, i, "+", "-"), (-1, 1)),
            (_replace(c, i, "-", "+"), (-1, 1)),
        ]
    swapped = _replace(c, i, b, a)
    if kind is CaseKind.COMPLEX_ASCENT:
        return [(swapped, (1,))]
    return [(swapped, (0, 1)), (c, (-1, 1))]


def module_basis(c: Clan) -> ModuleElement:
    return {c: LaurentHalfPoly({0: 1})}


def module_apply_gen(i: int, m: ModuleElement) -> ModuleElement:
    """Left action of T_{s_i} on a combination of clans."""
    out: ModuleElement = {}
    for c, coeff in m.items():
        for target, poly in act(c, i):
            total = out.get(target, LaurentHalfPoly()) + coeff * LaurentHalfPoly.from_qpoly(poly)
            if total:
                out[target] = total
            else:
                out.pop(target, None)
    return out


def _generator(delta: Clan, real_replacement: tuple[str, str]) -> tuple[int, Clan]:
    for i in range(1, delta.n):
        if classify_root(delta, i) is CaseKind.COMPLEX_DESCENT:
            a, b = delta.symbols[i - 1], delta.symbols[i]
            return i, _replace(delta, i, b, a)
    for i in range(1, delta.n):
        if classify_root(delta, i) is CaseKind.REAL:
            return i, _replace(delta, i, *real_replacement)
    raise KlvError(f"no generator pair for {delta}")


class KlvModule:
    """Lazily computed canonical basis of the clan module for fixed (p, q).

    ``row(delta)`` maps every clan tau in the support of C'_delta to the
    coefficient list of P_{tau,delta}.  Non-constant corrections met along
    the way are collected in ``nonconstant_corrections`` as
    (delta, gamma, coefficients) triples.
    """

    def __init__(self, p: int, q: int, real_replacement: str = "+-"):
        if p < 0 or q < 0 or p + q < 1:
            raise ValueError("need p, q >= 0 and p + q >= 1")
        if real_replacement not in ("+-", "-+"):
            raise ValueError("real_replacement must be '+-' or '-+'")
        self.p, self.q = p, q
        self.real_replacement = tuple(real_replacement)
        self.nonconstant_corrections: list[tuple[Clan, Clan, list[int]]] = []
        self._rows: dict[Clan, dict[Clan, list[int]]] = {}
        self._lengths: dict[Clan, int] = {}
        self._actions: dict[tuple[Clan, int], list] = {}
        self._lock = threading.RLock()

    def length(self, c: Clan) -> int:
        ell = self._lengths.get(c)
        if ell is None:
            ell = self._lengths[c] = clan_length(c)
        return ell

    def _act(self, c: Clan, i: int):
        key = (c, i)
        terms = self._actions.get(key)
        if terms is None:
            terms = self._actions[key] = act(c, i)
        return terms

    def row(self, delta: Clan) -> dict[Clan, list[int]]:
        row = self._rows.get(delta)
        if row is not None:
            return row
        if (delta.p, delta.q) != (self.p, self.q):
            raise ValueError(f"{delta} is not a ({self.p},{self.q})-clan")
        with self._lock:
            row = self._rows.get(delta)
            if row is None:
                row = self._rows[delta] = self._build(delta)
        return row

    def _build(self, delta: Clan) -> dict[Clan, list[int]]:
        top = self.length(delta)
        if top == 0:
            return {delta: [1]}
        i, tau = _generator(delta, self.real_replacement)
        if self.length(tau) != top - 1:
            raise KlvError(f"generator {tau} of {delta} has the wrong length")
        # v^-1 (T_s + 1) C'_tau, stored relative to v^-l(delta)
        coeffs: dict[Clan, list[int]] = {}
        for gamma, poly in self.row(tau).items():
            padd(coeffs.setdefault(gamma, []), poly)
            for target, factor in self._act(gamma, i):
                padd(coeffs.setdefault(target, []), pmul(factor, poly))
        for gamma, poly in coeffs.items():
            if gamma != delta and pstrip(poly) and self.length(gamma) >= top:
                raise KlvError(f"{gamma} is not below {delta} yet appears in its expansion")
        if pstrip(coeffs.get(delta, [])) != [1]:
            raise KlvError(f"leading coefficient of C'_{delta} is not 1")
        found = reduce_by_degree_bound(coeffs, top, self.length, self.row)
        self.nonconstant_corrections.extend((delta, gamma, e) for gamma, e in found)
        row = {gamma: pstrip(poly) for gamma, poly in coeffs.items()}
        for gamma, poly in row.items():
            if any(c < 0 for c in poly):
                raise KlvError(f"negative coefficient in P[{gamma}, {delta}] = {poly}")
        return row

    def cprime(self, delta: Clan) -> ModuleElement:
        """C'_delta as an explicit combination with Laurent coefficients."""
        shift = -self.length(delta)
        return {
            gamma: LaurentHalfPoly.from_qpoly(poly, shift) for gamma, poly in self.row(delta).items()
        }


@dataclass
class KlvTable:
    """All KLV polynomials for one (p, q), rows in increasing length."""

    p: int
    q: int
    clans: list[Clan]
    rows: dict[Clan, dict[Clan, QPoly]]
    lengths: dict[Clan, int]
    nonconstant_corrections: list[tuple[Clan, Clan, list[int]]] = field(default_factory=list)

    def poly(self, tau: Clan, delta: Clan) -> QPoly:
        return self.rows[delta].get(tau, QPoly())

    def support(self, delta: Clan) -> set[Clan]:
        return set(self.rows[delta])

    def records(self) -> Iterator[dict]:
        for delta in self.clans:
            row = self.rows[delta]
            for tau in sorted(row, key=lambda t: (self.lengths[t], canonical_string(t))):
                yield {
                    "delta": canonical_string(delta),
                    "tau": canonical_string(tau),
                    "poly": row[tau].to_list(),
                }

    def write_jsonl(self, fp: IO[str]):
        for record in self.records():
            fp.write(json.dumps(record) + "\n")


def klv_table(p: int, q: int, real_replacement: str = "+-") -> KlvTable:
    module = KlvModule(p, q, real_replacement)
    clans = sorted(generate_clans(p, q), key=lambda c: (module.length(c), canonical_string(c)))
    rows = {}
    for delta in clans:
        rows[delta] = {tau: QPoly(poly) for tau, poly in module.row(delta).items()}
    return KlvTable(
        p=p,
        q=q,
        clans=clans,
        rows=rows,
        lengths={c: module.length(c) for c in clans},
        nonconstant_corrections=list(module.nonconstant_corrections),
    )


def klv_richardson(tau: Clan, gamma: Clan) -> QPoly:
    """P_{tau,gamma} for avoiding ``gamma`` as a product of two tree counts.

    The lower path of ``gamma`` gives a tree by ordinary matching with
    capacities to tau's lower path.  The upper path gives one by reversed
    matching with capacities to tau's upper path.
    """
    if not avoids_1212(gamma):
        raise ValueError(f"{gamma} contains (1,2,1,2)")
    d, e = clan_diagram(gamma), clan_diagram(tau)
    if (gamma.p, gamma.q) != (tau.p, tau.q) or not band_contains(d, e):
        raise ValueError(f"{tau} does not lie in the closure of {gamma}")
    bottom = build_capacity_tree(d.lower.word(), "()", e.lower)
    top = build_capacity_tree(d.upper.word(), ")(", e.upper)
    return count_labellings(bottom) * count_labellings(top)


class ClosureOrder:
    """Closure order on (p,q)-clans read from the supports of C'."""

    def __init__(self, table: KlvTable):
        self.table = table
        self.elements = list(table.clans)

    def leq(self, tau: Clan, delta: Clan) -> bool:
        return tau in self.table.rows[delta]

    def covers(self) -> list[tuple[Clan, Clan]]:
        """Hasse diagram edges (lower, upper)."""
        edges = []
        for delta in self.elements:
            below = [t for t in self.table.rows[delta] if t != delta]
            for tau in below:
                if not any(
                    mid != tau and tau in self.table.rows[mid] for mid in below
                ):
                    edges.append((tau, delta))
        return edges

    def maximum(self) -> Optional[Clan]:
        tops = [d for d in self.elements if all(self.leq(x, d) for x in self.elements)]
        return tops[0] if tops else None


def closure_order(p: int, q: int, table: Optional[KlvTable] = None) -> ClosureOrder:
    return ClosureOrder(table if table is not None else klv_table(p, q))
