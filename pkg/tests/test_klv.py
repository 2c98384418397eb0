from __future__ import annotations

import io
import json
from functools import cache

import pytest

from clanklv.clans import avoids_1212, clan_length, generate_clans, parse_clan
from clanklv.klv import (
    CaseKind,
    KlvModule,
    classify_root,
    closure_order,
    klv_richardson,
    klv_table,
    module_apply_gen,
    module_basis,
)
from clanklv.path_diagram import band_contains, clan_diagram
from clanklv.poly import LaurentHalfPoly
from clanklv.singularity import is_smooth, local_profile

Q = LaurentHalfPoly({2: 1})


def _pq(max_n, min_n=1):
    return [(p, n - p) for n in range(min_n, max_n + 1) for p in range(n + 1)]


@cache
def table(p, q):
    return klv_table(p, q)


def _combine(*terms):
    out = {}
    for scale, m in terms:
        for c, coeff in m.items():
            total = out.get(c, LaurentHalfPoly()) + scale * coeff
            if total:
                out[c] = total
            else:
                out.pop(c, None)
    return out


def _element(pairs):
    return {parse_clan(text): LaurentHalfPoly.from_qpoly(coeffs) for text, coeffs in pairs}


def test_classify_examples():
    assert classify_root(parse_clan("+--+"), 2) is CaseKind.COMPACT_IMAGINARY
    assert classify_root(parse_clan("11"), 1) is CaseKind.REAL
    assert classify_root(parse_clan("1122"), 2) is CaseKind.COMPLEX_ASCENT
    assert classify_root(parse_clan("1212"), 2) is CaseKind.COMPLEX_DESCENT
    assert classify_root(parse_clan("+-"), 1) is CaseKind.NONCOMPACT_IMAGINARY
    with pytest.raises(ValueError):
        classify_root(parse_clan("+-"), 2)


def test_action_examples():
    assert module_apply_gen(1, module_basis(parse_clan("+-"))) == _element(
        [("11", [1]), ("-+", [1])]
    )
    assert module_apply_gen(1, module_basis(parse_clan("11"))) == _element(
        [("11", [-2, 1]), ("+-", [-1, 1]), ("-+", [-1, 1])]
    )
    assert module_apply_gen(2, module_basis(parse_clan("1122"))) == module_basis(
        parse_clan("1212")
    )
    assert module_apply_gen(1, module_basis(parse_clan("++"))) == _element([("++", [0, 1])])


@pytest.mark.parametrize("n", range(2, 7))
def test_module_quadratic_relation(n):
    for p, q in _pq(n, n):
        for c in generate_clans(p, q):
            m = module_basis(c)
            for i in range(1, n):
                tm = module_apply_gen(i, m)
                assert module_apply_gen(i, tm) == _combine((Q - 1, tm), (Q, m)), (c, i)


@pytest.mark.parametrize("n", range(3, 6))
def test_module_braid_relations(n):
    for p, q in _pq(n, n):
        for c in generate_clans(p, q):
            m = module_basis(c)
            for i in range(1, n - 1):
                a = module_apply_gen(i, module_apply_gen(i + 1, module_apply_gen(i, m)))
                b = module_apply_gen(i + 1, module_apply_gen(i, module_apply_gen(i + 1, m)))
                assert a == b, (c, i)
            for i in range(1, n):
                for j in range(i + 2, n):
                    assert module_apply_gen(i, module_apply_gen(j, m)) == module_apply_gen(
                        j, module_apply_gen(i, m)
                    )


def test_case_rules_change_length_as_expected():
    for p, q in _pq(7, 2):
        for c in generate_clans(p, q):
            ell = clan_length(c)
            for i in range(1, c.n):
                kind = classify_root(c, i)
                symbols = list(c.symbols)
                symbols[i - 1], symbols[i] = symbols[i], symbols[i - 1]
                if kind is CaseKind.COMPLEX_ASCENT:
                    assert clan_length(type(c)(tuple(symbols))) == ell + 1
                elif kind is CaseKind.COMPLEX_DESCENT:
                    assert clan_length(type(c)(tuple(symbols))) == ell - 1
                elif kind is CaseKind.NONCOMPACT_IMAGINARY:
                    images = [t for t, _ in [*module_apply_gen(i, module_basis(c)).items()]]
                    assert max(clan_length(t) for t in images) == ell + 1


def test_table_examples():
    t = table(1, 1)
    top = parse_clan("11")
    assert {str(k): v.to_list() for k, v in t.rows[top].items()} == {
        "11": [1],
        "+-": [1],
        "-+": [1],
    }
    t = table(2, 2)
    gamma = parse_clan("1212")
    assert t.poly(parse_clan("+--+"), gamma) == [1, 1]
    assert t.poly(parse_clan("-++-"), gamma) == [1, 1]
    smooth = parse_clan("1122")
    assert all(poly == 1 for poly in t.rows[smooth].values())


def test_cprime_normalization():
    module = KlvModule(1, 1)
    top = parse_clan("11")
    assert module.cprime(top) == {
        top: LaurentHalfPoly({-1: 1}),
        parse_clan("+-"): LaurentHalfPoly({-1: 1}),
        parse_clan("-+"): LaurentHalfPoly({-1: 1}),
    }


def test_module_argument_checks():
    with pytest.raises(ValueError):
        KlvModule(0, 0)
    with pytest.raises(ValueError):
        KlvModule(1, 1, real_replacement="++")
    with pytest.raises(ValueError):
        KlvModule(1, 1).row(parse_clan("++-"))


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_table_structure(pq):
    t = table(*pq)
    assert not t.nonconstant_corrections
    for delta in t.clans:
        row = t.rows[delta]
        assert row[delta] == 1
        for tau, poly in row.items():
            coeffs = poly.to_list()
            assert coeffs[0] == 1 and all(c >= 0 for c in coeffs)
            gap = t.lengths[delta] - t.lengths[tau]
            if tau != delta:
                assert gap >= 1 and 2 * (len(coeffs) - 1) <= gap - 1


@pytest.mark.parametrize("pq", _pq(5, 1))
def test_richardson_matches_table(pq):
    t = table(*pq)
    for delta in t.clans:
        if avoids_1212(delta):
            for tau, poly in t.rows[delta].items():
                assert klv_richardson(tau, delta) == poly, (tau, delta)


def test_richardson_examples():
    assert klv_richardson(parse_clan("+-+-+-+-"), parse_clan("12+-+-21")) == [1, 3, 3, 1]
    g = parse_clan("1+-22+-1")
    assert klv_richardson(g, g) == 1
    smooth = parse_clan("1122")
    for tau in table(2, 2).rows[smooth]:
        assert klv_richardson(tau, smooth) == 1
    with pytest.raises(ValueError):
        klv_richardson(parse_clan("+--+"), parse_clan("1212"))
    with pytest.raises(ValueError):
        klv_richardson(parse_clan("11"), parse_clan("+-"))


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_support_is_diagram_containment(pq):
    t = table(*pq)
    diagrams = {c: clan_diagram(c) for c in t.clans}
    for delta in t.clans:
        if avoids_1212(delta):
            inside = {tau for tau in t.clans if band_contains(diagrams[delta], diagrams[tau])}
            assert inside == t.support(delta), delta


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_smooth_iff_trivial_polynomials(pq):
    t = table(*pq)
    for delta in t.clans:
        assert is_smooth(delta) == all(poly == 1 for poly in t.rows[delta].values()), delta


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_local_smoothness_from_polynomials(pq):
    t = table(*pq)
    order = closure_order(*pq, table=t)
    for gamma in t.clans:
        if not avoids_1212(gamma):
            continue
        row = t.rows[gamma]
        for tau in row:
            above = [mid for mid in row if order.leq(tau, mid)]
            expected = all(row[mid] == 1 for mid in above)
            assert local_profile(gamma, tau).smooth == expected, (gamma, tau)


@pytest.mark.parametrize("pq", _pq(5, 2))
def test_other_real_replacement_gives_same_table(pq):
    other = klv_table(*pq, real_replacement="-+")
    assert other.rows == table(*pq).rows


def test_closure_order_examples():
    order = closure_order(1, 1)
    top = parse_clan("11")
    assert set(order.covers()) == {(parse_clan("+-"), top), (parse_clan("-+"), top)}
    assert order.maximum() == top


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_closure_order_graded_with_unique_maximum(pq):
    t = table(*pq)
    order = closure_order(*pq, table=t)
    for low, high in order.covers():
        assert t.lengths[high] == t.lengths[low] + 1
    longest = max(t.clans, key=lambda c: t.lengths[c])
    assert order.maximum() == longest
    for a in t.clans:
        for b in t.support(a):
            for c in t.support(b):
                assert order.leq(c, a)


@pytest.mark.parametrize("pq", _pq(6, 2))
def test_closure_order_matches_containment_on_avoiding(pq):
    t = table(*pq)
    order = closure_order(*pq, table=t)
    avoiding = [c for c in t.clans if avoids_1212(c)]
    diagrams = {c: clan_diagram(c) for c in avoiding}
    for a in avoiding:
        for b in avoiding:
            assert order.leq(b, a) == band_contains(diagrams[a], diagrams[b])


def test_jsonl_export():
    t = table(1, 1)
    buffer = io.StringIO()
    t.write_jsonl(buffer)
    records = [json.loads(line) for line in buffer.getvalue().splitlines()]
    assert {"delta": "11", "tau": "+-", "poly": [1]} in records
    assert len(records) == sum(len(row) for row in t.rows.values())
    again = io.StringIO()
    t.write_jsonl(again)
    assert again.getvalue() == buffer.getvalue()


@pytest.mark.slow
@pytest.mark.parametrize("pq", [(p, 7 - p) for p in range(8)])
def test_richardson_matches_table_7(pq):
    t = klv_table(*pq)
    assert not t.nonconstant_corrections
    for delta in t.clans:
        if avoids_1212(delta):
            for tau, poly in t.rows[delta].items():
                assert klv_richardson(tau, delta) == poly, (tau, delta)
