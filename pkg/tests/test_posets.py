import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import flagposet as fp
from flagposet.errors import (
    BudgetExceeded,
    CycleDetected,
    EmptySelection,
    InvalidParameter,
    ParseError,
    RedundantCover,
    UnknownElement,
)

from conftest import corpus_poset


def test_build_two_chain():
    p = fp.build_poset(["a", "b"], [("a", "b")])
    assert p.minimal_elements() == ("a",)
    assert p.maximal_elements() == ("b",)
    assert p.less("a", "b") and not p.less("b", "a")


def test_build_rejects_cycle():
    with pytest.raises(CycleDetected):
        fp.build_poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CycleDetected):
        fp.build_poset(["a"], [("a", "a")])


def test_build_rejects_redundant_cover():
    with pytest.raises(RedundantCover):
        fp.build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def test_build_rejects_unknown_and_duplicates():
    with pytest.raises(UnknownElement):
        fp.build_poset(["a"], [("a", "b")])
    with pytest.raises(InvalidParameter):
        fp.build_poset(["a", "a"], [])
    with pytest.raises(InvalidParameter):
        fp.build_poset(["a", "b"], [("a", "b"), ("a", "b")])


def test_pentagon_is_a_valid_poset_but_ungraded():
    p = fp.pentagon()
    assert len(p) == 5 and len(p.covers) == 5
    assert fp.rank_function(p) is None


def test_rank_function_on_chains_and_unions():
    g = fp.chain(4)
    assert [g.rank[e] for e in g.elements] == [1, 2, 3, 4]
    # disjoint union of a 2-chain and a 3-chain: minimal elements rank 1
    p = fp.build_poset(["a1", "a2", "b1", "b2", "b3"],
                       [("a1", "a2"), ("b1", "b2"), ("b2", "b3")])
    g = fp.rank_function(p)
    assert g is not None
    assert g.rank == {"a1": 1, "a2": 2, "b1": 1, "b2": 2, "b3": 3}


def test_maximal_chains_basic():
    assert len(fp.maximal_chains(fp.antichain(5))) == 5
    assert len(fp.maximal_chains(fp.chain(6))) == 1
    chains = fp.maximal_chains(fp.example_3_4())
    seqs = [c.elements for c in chains]
    assert len(chains) == 7
    assert ("a1", "a2", "a3") in seqs and ("c1", "c2", "c3") in seqs
    assert seqs == sorted(seqs)
    assert all(c.saturated and c.maximal for c in chains)


def test_saturated_chains_between():
    g = fp.example_3_4()
    between = fp.saturated_chains_between(g, "b1", "b3")
    assert [c.elements for c in between] == [("b1", "b2", "b3"),
                                             ("b1", "c2", "b3")]
    assert fp.saturated_chains_between(g, "a1", "b2") == []
    two = fp.chain(2)
    assert [c.elements for c in fp.saturated_chains_between(two, "c1", "c2")] \
        == [("c1", "c2")]
    with pytest.raises(InvalidParameter):
        fp.saturated_chains_between(g, "a2", "b1")


def test_rank_selection_full_range_is_copy():
    g = fp.example_3_4()
    sel = fp.rank_selection(g, {1, 2, 3})
    assert sel.elements == g.elements
    assert set(sel.covers) == set(g.covers)
    assert sel.rank == g.rank


def test_rank_selection_layer_of_3_4():
    sel = fp.rank_selection(fp.example_3_4(), {1, 2})
    assert set(sel.elements) == {"a1", "b1", "c1", "a2", "b2", "c2"}
    assert len(sel.covers) == 5


def test_rank_selection_skipping_a_rank_matches_reachability():
    g = fp.hom_rt_poset(3, 2)
    sel = fp.rank_selection(g, {1, 3})
    # oracle: two-step saturated reachability through rank 2
    expected = set()
    for a in g.layer(1):
        for b in g.layer(3):
            if any(g.poset.is_cover(a, m) and g.poset.is_cover(m, b)
                   for m in g.layer(2)):
                expected.add((a, b))
    assert set(sel.covers) == expected
    assert all(sel.rank[e] in (1, 2) for e in sel.elements)


def test_rank_selection_errors():
    g = fp.chain(3)
    with pytest.raises(EmptySelection):
        fp.rank_selection(g, set())
    with pytest.raises(InvalidParameter):
        fp.rank_selection(g, {0, 1})


def test_rank_selection_composition():
    g = fp.example_4_9()
    once = fp.rank_selection(g, {2, 3, 4})
    twice = fp.rank_selection(once, {1, 2})  # ranks 2,3 of the original
    direct = fp.rank_selection(g, {2, 3})
    assert twice.elements == direct.elements
    assert set(twice.covers) == set(direct.covers)


def test_layer_pair():
    g = fp.example_3_4()
    layer = fp.layer_pair(g, 1, trim=True)
    assert layer.bottom == ("a1", "b1", "c1")
    assert layer.top == ("a2", "b2", "c2")
    assert len(layer.edges) == 5
    # trimming drops a maximal element sitting at the bottom rank
    g49 = fp.example_4_9()
    trimmed = fp.layer_pair(g49, 2, trim=True)
    assert "c2" not in trimmed.bottom
    assert "c2" in fp.layer_pair(g49, 2, trim=False).bottom
    # pure poset: trim is a no-op below the top
    pure = fp.hom_rt_poset(3, 2)
    assert fp.layer_pair(pure, 1, trim=True) == fp.layer_pair(pure, 1)


def test_connected_components_against_union_find():
    def components_oracle(p):
        parent = {e: e for e in p.elements}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in p.covers:
            parent[find(a)] = find(b)
        return len({find(e) for e in p.elements})

    assert len(fp.connected_components(fp.chain(3))) == 1
    union = fp.build_poset(["a1", "a2", "b1", "b2"],
                           [("a1", "a2"), ("b1", "b2")])
    assert len(fp.connected_components(union)) == 2
    for p in [fp.example_3_6().poset, fp.example_3_4().poset, union]:
        assert len(fp.connected_components(p)) == components_oracle(p)
    # partition property
    comps = fp.connected_components(union)
    assert sum(len(c) for c in comps) == len(union)


def test_letterplace_poset_degenerate_and_hom_covers():
    q = fp.chain(3).poset
    assert fp.letterplace_poset(1, q).covers == ()
    h = fp.hom_rt_poset(2, 2)
    assert set(h.covers) == {("a1_1", "a2_1"), ("a1_1", "a2_2"),
                             ("a1_2", "a2_2")}


def test_example_4_9_shape():
    g = fp.example_4_9()
    assert len(g) == 16
    assert g.rbar() == 4
    assert set(g.poset.maximal_elements()) == {"c2", "a3", "e3", "b4", "d4"}


def test_builders_reject_bad_sizes():
    for builder in (fp.chain, fp.antichain):
        with pytest.raises(InvalidParameter):
            builder(0)
    with pytest.raises(InvalidParameter):
        fp.hom_rt_poset(0, 2)
    with pytest.raises(InvalidParameter):
        fp.v_coletterplace_poset(1, 1, 0)


def test_isomorphism_identity_and_negatives():
    g = fp.example_3_4().poset
    iso = fp.are_isomorphic(g, g)
    assert iso is not None
    assert sorted(iso) == sorted(iso.values()) == sorted(g.elements)
    assert all(g.is_cover(iso[a], iso[b]) for a, b in g.covers)
    assert fp.are_isomorphic(fp.chain(3), fp.antichain(3)) is None


def test_isomorphism_hom_vs_letterplace():
    h = fp.hom_rt_poset(2, 3)
    lp = fp.letterplace_poset(2, fp.chain(3))
    iso = fp.are_isomorphic(h, lp)
    assert iso is not None
    hp, lpp = h.poset, lp.poset
    assert all(lpp.is_cover(iso[a], iso[b]) for a, b in hp.covers)


def test_isomorphism_budget():
    with pytest.raises(BudgetExceeded):
        fp.are_isomorphic(fp.antichain(30), fp.antichain(30))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=199))
def test_maximal_chain_lengths_match_top_rank(seed):
    g = corpus_poset(seed)
    for c in fp.maximal_chains(g):
        assert len(c.elements) == g.rank[c.elements[-1]]
    if g.is_pure():
        assert {len(c.elements) for c in fp.maximal_chains(g)} == {g.rbar()}


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=199), st.data())
def test_chains_split_over_components(seed, data):
    g = corpus_poset(seed)
    comps = fp.connected_components(g)
    total = sum(len(fp.maximal_chains(c)) for c in comps)
    assert total == len(fp.maximal_chains(g))
    ranks = sorted(set(g.rank.values()))
    lo = data.draw(st.integers(min_value=1, max_value=len(ranks)))
    hi = data.draw(st.integers(min_value=lo, max_value=len(ranks)))
    window = set(range(lo, hi + 1))
    sub = fp.rank_selection(g, window)
    assert set(sub.elements) == {e for e in g.elements
                                 if g.rank[e] in window}


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def test_text_round_trip():
    g = fp.example_3_6()
    text = fp.poset_to_text(g)
    assert text.splitlines()[0] == "# flagposet v1"
    p = fp.parse_poset_text(text)
    assert p.elements == g.elements
    assert set(p.covers) == set(g.covers)
    covers_lines = text.splitlines()[2:]
    assert covers_lines == sorted(covers_lines)


@pytest.mark.parametrize("text,line", [
    ("nonsense\n", 1),
    ("# flagposet v1\nwrong\n", 2),
    ("# flagposet v1\nelements: a b\na<b\n", 3),
    ("# flagposet v1\nelements: a b\na < c\n", 3),
    ("# flagposet v1\nelements: a b\na < b\na < b\n", 4),
    ("# flagposet v1\nelements: a a\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        fp.parse_poset_text(text)
    assert err.value.line == line
