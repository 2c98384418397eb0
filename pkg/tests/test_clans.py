from __future__ import annotations

import itertools

import pytest
from conftest import clans
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_contains

from clanklv.clans import (
    Clan,
    ClanError,
    FsPattern,
    avoids_1212,
    canonical_string,
    clan_count,
    clan_from_fs,
    clan_length,
    contains_pattern,
    fs_pattern,
    generate_clans,
    iter_clans,
    negative,
    parse_clan,
    u_perm,
    v_perm,
    yamamoto_u,
)
from clanklv.permutation import descents, inverse


def test_parse_contiguous():
    c = parse_clan("1+-1")
    assert c.symbols == (1, "+", "-", 1)
    assert (c.p, c.q) == (2, 2)


def test_parse_relabels():
    assert parse_clan("5,7,5,7") == parse_clan("1212")
    assert parse_clan("2112").symbols == (1, 2, 2, 1)


def test_parse_mixed_comma_tokens():
    assert parse_clan("1+-2,2+-1").symbols == (1, "+", "-", 2, 2, "+", "-", 1)


def test_parse_unicode_minus():
    assert parse_clan("1+−1") == parse_clan("1+-1")


@pytest.mark.parametrize("text", ["1,2,2", "", "1+-", "+a-", "0,0", "1,,1", "122"])
def test_parse_errors(text):
    with pytest.raises(ClanError):
        parse_clan(text)


def test_p_q_inferred():
    c = parse_clan("++-")
    assert (c.p, c.q) == (2, 1)
    assert (parse_clan("-").p, parse_clan("-").q) == (0, 1)


def test_canonical_string_examples():
    assert canonical_string(parse_clan("1212")) == "1212"
    assert canonical_string(parse_clan("+-")) == "+-"
    ten = Clan(tuple(range(1, 11)) + tuple(range(10, 0, -1)))
    text = canonical_string(ten)
    assert "," in text
    assert parse_clan(text) == ten


@given(clans(max_n=12))
def test_canonical_round_trip(c):
    text = canonical_string(c)
    assert parse_clan(text) == c
    assert canonical_string(parse_clan(text)) == text


@pytest.mark.parametrize("p,q,count", [(1, 1, 3), (2, 1, 6), (2, 2, 21), (0, 3, 1)])
def test_generate_counts(p, q, count):
    found = generate_clans(p, q)
    assert len(found) == count == clan_count(p, q)
    assert len(set(found)) == count
    assert all((c.p, c.q) == (p, q) for c in found)


def test_generate_1_1():
    assert {str(c) for c in generate_clans(1, 1)} == {"+-", "-+", "11"}


def test_generate_against_brute_force():
    for p, q in [(2, 2), (3, 2), (3, 3)]:
        n = p + q
        brute = set()
        for word in itertools.product(["+", "-"] + list(range(1, n // 2 + 1)), repeat=n):
            try:
                c = Clan(word)
            except ClanError:
                continue
            if (c.p, c.q) == (p, q):
                brute.add(c)
        assert brute == set(generate_clans(p, q))


def test_generate_rejects_empty():
    with pytest.raises(ValueError):
        generate_clans(0, 0)


@pytest.mark.parametrize(
    "text,length", [("+-", 0), ("1122", 2), ("1212", 3), ("1221", 4), ("11", 1)]
)
def test_clan_length(text, length):
    assert clan_length(parse_clan(text)) == length


@given(clans())
def test_length_zero_iff_no_pairs(c):
    assert (clan_length(c) == 0) == (c.pairs == 0)


def test_contains_examples():
    assert not contains_pattern(parse_clan("112233"), parse_clan("1212"))
    assert contains_pattern(parse_clan("121323"), parse_clan("1212"))
    c = parse_clan("1+2-21")
    assert contains_pattern(c, c)


def test_signs_must_sit_inside_one_pair():
    assert contains_pattern(parse_clan("12+-12"), parse_clan("1+-1"))
    assert not contains_pattern(parse_clan("1-+1"), parse_clan("1+-1"))
    assert not contains_pattern(parse_clan("+1-1"), parse_clan("1+-1"))
    assert not contains_pattern(parse_clan("1+1-"), parse_clan("1+-1"))


@settings(max_examples=300)
@given(clans(max_n=8), clans(max_n=5))
def test_contains_matches_brute_force(c, pat):
    assert contains_pattern(c, pat) == brute_contains(c, pat)


@settings(max_examples=100)
@given(clans(max_n=8), st.data())
def test_containment_transitive(c, data):
    # any subsequence that is a clan is contained; patterns of it are contained in c
    n = c.n
    size = data.draw(st.integers(1, n))
    positions = data.draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True))
    try:
        d = Clan(tuple(c.symbols[i] for i in sorted(positions)))
    except ClanError:
        return
    assert contains_pattern(c, d)
    for pat in [parse_clan("1212"), parse_clan("1+-1"), parse_clan("11")]:
        if contains_pattern(d, pat):
            assert contains_pattern(c, pat)


def test_avoids_1212_examples():
    assert avoids_1212(parse_clan("1221"))
    assert not avoids_1212(parse_clan("1212"))
    assert not avoids_1212(parse_clan("12+-12"))


@given(clans())
def test_avoids_1212_is_pattern_avoidance(c):
    assert avoids_1212(c) == (not contains_pattern(c, parse_clan("1212")))


def test_negative_examples():
    assert negative(parse_clan("1+-1")) == parse_clan("1-+1")
    assert negative(parse_clan("1221")) == parse_clan("1221")
    c = parse_clan("1+221")
    assert negative(negative(c)) == c


@given(clans())
def test_negative_involution_preserves_length(c):
    assert negative(negative(c)) == c
    assert clan_length(negative(c)) == clan_length(c)
    assert (negative(c).p, negative(c).q) == (c.q, c.p)


def test_fs_examples():
    assert str(fs_pattern(parse_clan("1221"))) == "FFSS"
    assert str(fs_pattern(parse_clan("1212"))) == "FFSS"
    assert str(fs_pattern(parse_clan("+-"))) == "+-"
    long = parse_clan("1,1,+,-,2,3,4,4,+,-,3,5,5,2")
    assert str(fs_pattern(long)) == "FS+-FFFS+-SFSS"
    assert clan_from_fs(FsPattern.parse("FS+-FFFS+-SFSS")) == long
    assert clan_from_fs(FsPattern.parse("FFSS")) == parse_clan("1221")
    assert clan_from_fs(FsPattern.parse("+-")) == parse_clan("+-")


@pytest.mark.parametrize("text", ["FSS", "SF", "FF", "F+X"])
def test_fs_errors(text):
    with pytest.raises(ClanError):
        FsPattern.parse(text)


def test_fs_round_trip_exhaustive():
    for c in iter_clans(8):
        back = clan_from_fs(fs_pattern(c))
        if avoids_1212(c):
            assert back == c
        else:
            assert back != c and fs_pattern(back) == fs_pattern(c)


def test_v_u_examples():
    c = parse_clan("12+-12")
    assert v_perm(c) == (1, 2, 3, 4, 5, 6)
    assert u_perm(c) == (3, 5, 6, 1, 2, 4)
    c = parse_clan("122331")
    assert v_perm(c) == (1, 2, 4, 3, 5, 6)
    assert u_perm(c) == (3, 5, 6, 1, 2, 4)
    c = parse_clan("++--")
    assert v_perm(c) == u_perm(c) == (1, 2, 3, 4)


def test_v_u_grassmannian_exhaustive():
    for c in iter_clans(8):
        for w in (v_perm(c), u_perm(c)):
            assert set(descents(w)) <= {c.p}


def test_yamamoto_examples():
    assert yamamoto_u(parse_clan("12+-12")) == (5, 6, 3, 4, 1, 2)
    assert yamamoto_u(parse_clan("122331")) == (6, 4, 2, 5, 3, 1)
    c = parse_clan("+-+")
    assert yamamoto_u(c) == inverse(v_perm(c))


def test_yamamoto_coset_exhaustive():
    # sorting the first p and last q entries of yamamoto_u^{-1} gives u_perm
    for c in iter_clans(8):
        inv = inverse(yamamoto_u(c))
        p = c.p
        assert tuple(sorted(inv[:p]) + sorted(inv[p:])) == u_perm(c)
