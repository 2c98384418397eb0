"""Exact integer polynomials in q and Laurent polynomials in v = q^(1/2).

>>> P = QPoly([1, 1])
>>> P * P
QPoly([1, 2, 1])
>>> str(P * P)
'1 + 2q + q^2'
>>> (LaurentHalfPoly.v() + 1).bar()
LaurentHalfPoly({-1: 1, 0: 1})
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["QPoly", "LaurentHalfPoly", "padd", "pmul", "pstrip"]


def pstrip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def padd(a: list[int], b: Iterable[int], scale: int = 1) -> list[int]:
    """In-place a += scale * b on ascending coefficient lists."""
    for i, c in enumerate(b):
        if i < len(a):
            a[i] += scale * c
        else:
            a.append(scale * c)
    return a


def pmul(a, b) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class QPoly:
    """Integer polynomial in q, stored as ascending coefficients without trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(pstrip([int(c) for c in coeffs]))

    @classmethod
    def one(cls) -> QPoly:
        return cls([1])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        elif isinstance(other, (list, tuple)):
            other = QPoly(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> QPoly:
        return QPoly([other]) if isinstance(other, int) else other

    def __add__(self, other) -> QPoly:
        other = self._coerce(other)
        return QPoly(padd(list(self.coeffs), other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> QPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> QPoly:
        other = self._coerce(other)
        return QPoly(pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


Scalar = Union[int, "LaurentHalfPoly"]


class LaurentHalfPoly:
    """Sparse Laurent polynomial in v, where v^2 = q."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def v(cls, exponent: int = 1) -> LaurentHalfPoly:
        return cls({exponent: 1})

    @classmethod
    def from_qpoly(cls, poly, shift: int = 0) -> LaurentHalfPoly:
        """v^shift * poly(v^2)."""
        coeffs = poly.coeffs if isinstance(poly, QPoly) else poly
        return cls({2 * k + shift: c for k, c in enumerate(coeffs)})

    def to_qpoly(self, shift: int = 0) -> QPoly:
        """Inverse of :meth:`from_qpoly`; raises if the terms do not fit."""
        coeffs: dict[int, int] = {}
        for e, c in self.terms.items():
            k, odd = divmod(e - shift, 2)
            if odd or k < 0:
                raise ValueError(f"v^{e} is not v^{shift} times a power of q")
            coeffs[k] = c
        return QPoly([coeffs.get(k, 0) for k in range(max(coeffs, default=-1) + 1)])

    def _coerce(self, other: Scalar) -> LaurentHalfPoly:
        return LaurentHalfPoly({0: other}) if isinstance(other, int) else other

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentHalfPoly({0: other})
        return isinstance(other, LaurentHalfPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Scalar) -> LaurentHalfPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentHalfPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentHalfPoly:
        return LaurentHalfPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Scalar) -> LaurentHalfPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentHalfPoly:
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentHalfPoly:
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentHalfPoly(out)

    __rmul__ = __mul__

    def bar(self) -> LaurentHalfPoly:
        """The involution v -> v^(-1)."""
        return LaurentHalfPoly({-e: c for e, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"LaurentHalfPoly({dict(sorted(self.terms.items()))})"


def reduce_by_degree_bound(coeffs, top_length, length_of, row_of):
    """Turn a bar-invariant combination into a canonical basis element.

    ``coeffs`` maps basis keys to q-polynomials (lists) representing
    v^(-top_length) * P(q).  For every key other than the top one, visited by
    decreasing length, the coefficients that violate the degree bound
    deg P <= (top_length - length - 1)/2 are cancelled by subtracting a
    bar-symmetric multiple of that key's canonical element, given by
    ``row_of(key)`` in the same normalization relative to its own length.

    Mutates ``coeffs`` and returns a list of (key, correction) pairs for
    every correction that was not a constant.  Each correction is listed as
    its coefficients on q^0, q^1, ... relative to the top normalization.
    """
    buckets: dict[int, set] = {}
    for key in coeffs:
        buckets.setdefault(length_of(key), set()).add(key)
    nonconstant = []
    for level in range(top_length - 1, -1, -1):
        for key in buckets.get(level, ()):
            poly = coeffs.get(key)
            if not poly:
                continue
            gap = top_length - level
            first = (gap + 1) // 2
            if len(poly) <= first:
                continue
            if len(poly) > gap + 1:
                raise ArithmeticError(f"coefficient of {key} exceeds the top term")
            correction = [0] * (gap + 1)
            for j in range(first, len(poly)):
                c = poly[j]
                if c:
                    correction[j] += c
                    if 2 * j != gap:
                        correction[gap - j] += c
            if any(correction[j] for j in range(len(correction)) if 2 * j != gap):
                nonconstant.append((key, pstrip(list(correction))))
            for other, p in row_of(key).items():
                product = pmul(correction, p)
                target = coeffs.get(other)
                if target is None:
                    coeffs[other] = [-x for x in product]
                    buckets.setdefault(length_of(other), set()).add(other)
                else:
                    padd(target, product, -1)
    for key in [k for k, p in coeffs.items() if not pstrip(p)]:
        del coeffs[key]
    return nonconstant
