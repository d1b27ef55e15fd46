import itertools

import pytest
from hypothesis import given, strategies as st

from bott_samelson.crystal import (
    canonical_sorted, concat, concat_lower_law, concat_raise_closed_form, concat_raise_law, demazure_set,
    format_tableau, lower, lower_power, parse_tableau, power, raise_, raise_power, string,
)
from bott_samelson.weyl import all_columns

EXAMPLE = (1, 2, 2, 1, 3, 2, 1, 4, 2, 2, 3, 3)


def naive_survivors(i, tau):
    """Cancel adjacent (i, i+1) pairs among the live entries until none remain."""
    live = [p for p, r in enumerate(tau) if r in (i, i + 1)]
    changed = True
    while changed:
        changed = False
        for a, b in zip(live, live[1:]):
            if tau[a] == i and tau[b] == i + 1:
                live.remove(a)
                live.remove(b)
                changed = True
                break
    return live


def naive_lower(i, tau):
    live = naive_survivors(i, tau)
    ups = [p for p in live if tau[p] == i]
    if not ups:
        return None
    p = ups[0]
    return tau[:p] + (i + 1,) + tau[p + 1:]


def naive_raise(i, tau):
    live = naive_survivors(i, tau)
    downs = [p for p in live if tau[p] == i + 1]
    if not downs:
        return None
    p = downs[-1]
    return tau[:p] + (i,) + tau[p + 1:]


tableaux = st.lists(st.integers(1, 5), max_size=12).map(tuple)
letters = st.integers(1, 4)


@st.composite
def columns(draw, n=5):
    size = draw(st.integers(1, n))
    return tuple(sorted(draw(st.sets(st.integers(1, n), min_size=size, max_size=size))))


class TestConcat:
    def test_empty_identity(self):
        assert concat((), (1, 2)) == (1, 2)
        assert concat((1, 2), ()) == (1, 2)

    def test_running_example(self):
        assert concat((2,), (2, 3), (1,)) == (2, 2, 3, 1)

    def test_young_tableau_example(self):
        assert concat((3, 4), (1, 3), (1, 2, 3)) == (3, 4, 1, 3, 1, 2, 3)

    def test_null_absorbs(self):
        assert concat((1,), None) is None
        assert concat(None, (1,)) is None

    def test_power(self):
        assert power((1, 2), 3) == (1, 2, 1, 2, 1, 2)
        assert power((1, 2), 0) == ()


class TestLower:
    def test_three_step_chain(self):
        assert lower(2, EXAMPLE) == (1, 3, 2, 1, 3, 2, 1, 4, 2, 2, 3, 3)
        assert lower_power(2, EXAMPLE, 2) == (1, 3, 2, 1, 3, 3, 1, 4, 2, 2, 3, 3)
        assert lower_power(2, EXAMPLE, 3) is None

    def test_empty(self):
        assert lower(1, ()) is None

    def test_null_input(self):
        assert lower(1, None) is None

    @given(letters, tableaux)
    def test_matches_fixpoint_rule(self, i, tau):
        assert lower(i, tau) == naive_lower(i, tau)
        assert raise_(i, tau) == naive_raise(i, tau)

    @given(letters, tableaux)
    def test_changes_one_entry(self, i, tau):
        out = lower(i, tau)
        if out is not None:
            diff = [p for p in range(len(tau)) if tau[p] != out[p]]
            assert len(diff) == 1
            assert (tau[diff[0]], out[diff[0]]) == (i, i + 1)


class TestRaise:
    def test_single_letter(self):
        assert raise_(1, (2,)) == (1,)

    def test_inverse_on_chain_start(self):
        assert raise_(2, lower(2, EXAMPLE)) == EXAMPLE

    def test_no_upper_letter(self):
        assert raise_(2, (1, 2)) is None

    @given(letters, tableaux)
    def test_inverse_pair(self, i, tau):
        down = lower(i, tau)
        if down is not None:
            assert raise_(i, down) == tau
        up = raise_(i, tau)
        if up is not None:
            assert lower(i, up) == tau


class TestString:
    def test_single_box(self):
        assert string(1, (1,)) == [(1,), (2,)]

    def test_column_is_fixed(self):
        assert string(1, (1, 2)) == [(1, 2)]

    def test_empty(self):
        assert string(2, ()) == [()]

    @given(letters, tableaux)
    def test_head_and_steps(self, i, tau):
        chain = string(i, tau)
        assert tau in chain
        assert raise_(i, chain[0]) is None
        assert lower(i, chain[-1]) is None
        for a, b in zip(chain, chain[1:]):
            assert lower(i, a) == b
            assert raise_(i, b) == a

    def test_strings_partition_closed_set(self):
        everything = set(itertools.product(range(1, 4), repeat=4))
        for i in (1, 2):
            seen = set()
            for tau in everything:
                chain = frozenset(string(i, tau))
                assert chain <= everything
                if not chain.isdisjoint(seen):
                    assert chain <= seen
                seen |= chain
            assert seen == everything


class TestDemazureSet:
    def test_single_box(self):
        assert demazure_set(1, {(1,)}) == {(1,), (2,)}

    def test_generation_step(self):
        expected = {(1, 2, 1), (1, 3, 1), (1, 2, 2), (1, 3, 2), (1, 3, 3)}
        assert demazure_set(2, {(1, 2, 1), (1, 2, 2)}) == expected

    def test_empty_set(self):
        assert demazure_set(1, set()) == frozenset()

    @given(letters, st.sets(tableaux, max_size=6))
    def test_idempotent_and_extensive(self, i, T):
        once = demazure_set(i, T)
        assert set(T) <= once
        assert demazure_set(i, once) == once


class TestColumnFacts:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_type_a_columns(self, n):
        for size in range(1, n + 1):
            for kappa in all_columns(size, n):
                for i in range(1, n):
                    assert lower_power(i, kappa, 2) is None
                    assert raise_power(i, kappa, 2) is None
                    assert lower(i, kappa) is None or raise_(i, kappa) is None


class TestSplittingLaws:
    def test_examples(self):
        assert concat_lower_law(1, (1,), (), 1) == (2,)
        assert concat_lower_law(1, (1, 2), (1,), 1) == (1, 2, 2)
        assert concat_lower_law(1, (1,), (2,), 1) is None

    @given(letters, columns(), st.lists(st.integers(1, 5), max_size=8).map(tuple), st.integers(1, 4))
    def test_lower_law(self, i, kappa, rest, a):
        assert concat_lower_law(i, kappa, rest, a) == lower_power(i, kappa + rest, a)

    @given(letters, columns(), st.lists(st.integers(1, 5), max_size=8).map(tuple), st.integers(1, 4))
    def test_raise_law(self, i, kappa, rest, a):
        assert concat_raise_law(i, kappa, rest, a) == raise_power(i, kappa + rest, a)

    @given(letters, columns(), st.lists(st.integers(1, 5), max_size=8).map(tuple))
    def test_raise_closed_form_single_step(self, i, kappa, rest):
        assert concat_raise_closed_form(i, kappa, rest, 1) == raise_(i, kappa + rest)

    def test_raise_closed_form_breaks_for_two_steps(self):
        kappa, rest = (1, 2, 3, 4), (5, 5)
        assert raise_power(4, kappa + rest, 2) is None
        assert concat_raise_closed_form(4, kappa, rest, 2) == (1, 2, 3, 4, 4, 4)
        assert concat_raise_law(4, kappa, rest, 2) is None


class TestText:
    @pytest.mark.parametrize("text, sizes", [
        ("2*2,3*1", [1, 2, 1]),
        ("3,4*1,3*1,2,3", [2, 2, 3]),
    ])
    def test_shaped_round_trip(self, text, sizes):
        assert format_tableau(parse_tableau(text), sizes) == text

    def test_flat_and_empty(self):
        assert parse_tableau("2,2,3,1") == (2, 2, 3, 1)
        assert format_tableau((2, 2, 3, 1)) == "2,2,3,1"
        assert parse_tableau("∅") == ()
        assert format_tableau(()) == "∅"

    @given(tableaux)
    def test_flat_round_trip(self, tau):
        assert parse_tableau(format_tableau(tau)) == tau

    def test_canonical_order(self):
        assert canonical_sorted([(2,), (1, 1), (1,), (1,)]) == [(1,), (2,), (1, 1)]
