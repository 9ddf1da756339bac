import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ftpie.cutsets import mcs
from ftpie.distributions import Exponential, FixedProb
from ftpie.errors import MissingEventError, NonCoherentError, TooManyCutSetsError
from ftpie.gates import or_prob
from ftpie.generate import random_coherent_tree
from ftpie.model import Not, Or, build_tree
from ftpie.oracle import enum_prob
from ftpie.pie import intersection_prob, pie_probability, pie_sum, pie_term_count, pie_terms, top_probability
from ftpie.solar import LEMMA_MCS, solar_tree

from conftest import fixed_tree

fs = frozenset


def test_intersection_prob():
    assert intersection_prob([{"A", "B"}, {"B", "C"}], dict.fromkeys("ABC", 0.5)) == 0.125
    assert intersection_prob([{"A"}], {"A": 0.3}) == 0.3
    assert intersection_prob([{"A"}, {"B"}], {"A": 0.2, "B": 0.5}) == 0.1
    with pytest.raises(MissingEventError):
        intersection_prob([{"A", "Z"}], {"A": 0.2})


def test_pie_examples(backend):
    assert pie_probability([fs("A"), fs("B")], {"A": .5, "B": .5}) == 0.75
    assert pie_probability([fs("AB"), fs("BC")], dict.fromkeys("ABC", 0.5)) == 0.375


def test_pie_solar_vs_enum(backend):
    tree = solar_tree([1e-5] * 14)
    probs = dict.fromkeys(tree.events, 0.01)
    total, terms = pie_sum(LEMMA_MCS, probs)
    assert terms == 8191
    assert abs(total - enum_prob(tree, probs)) <= 1e-9


def test_term_count():
    assert [pie_term_count(q) for q in (1, 2, 13)] == [1, 3, 8191]
    with pytest.raises(ValueError):
        pie_term_count(0)


def test_terms_signs_and_sum():
    sets = [fs("AB"), fs("BC"), fs("D"), fs("AE")]
    probs = {"A": .3, "B": .6, "C": .2, "D": .9, "E": .45}
    terms = list(pie_terms(sets, probs))
    assert len(terms) == 2 ** len(sets) - 1
    for term in terms:
        assert term.sign == (1 if len(term.subset) % 2 else -1)
        assert term.merged_events == fs().union(*(sets[i] for i in term.subset))
        assert term.value == pytest.approx(math.prod(probs[e] for e in term.merged_events), rel=1e-15)
    slow = math.fsum(t.sign * t.value for t in terms)
    assert abs(pie_probability(sets, probs) - slow) <= 1e-15


def test_cap():
    sets = [fs([f"e{i}"]) for i in range(6)]
    probs = dict.fromkeys((f"e{i}" for i in range(6)), 0.1)
    with pytest.raises(TooManyCutSetsError):
        pie_probability(sets, probs, max_cut_sets=5)
    with pytest.raises(ValueError):
        pie_probability([], probs)


@given(st.lists(st.floats(0, 1), min_size=1, max_size=10))
def test_singletons_reduce_to_or(ps):
    sets = [fs([f"e{i}"]) for i in range(len(ps))]
    probs = {f"e{i}": p for i, p in enumerate(ps)}
    assert abs(pie_probability(sets, probs) - or_prob(ps)) <= 1e-12


@pytest.mark.parametrize("seed", range(25))
def test_pie_matches_enum_random(backend, seed):
    rng = np.random.default_rng(1000 + seed)
    tree = random_coherent_tree(rng, n_events=int(rng.integers(2, 11)), max_depth=5, max_mcs=12)
    probs = {n: m.p for n, m in tree.events.items()}
    assert abs(pie_probability(mcs(tree), probs) - enum_prob(tree, probs)) <= 1e-9


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), idx=st.integers(0, 50), bump=st.floats(0, 1))
def test_monotone_in_event_probability(seed, idx, bump):
    rng = np.random.default_rng(seed)
    tree = random_coherent_tree(rng, n_events=6, max_depth=4, max_mcs=10)
    probs = {n: m.p for n, m in tree.events.items()}
    name = list(probs)[idx % len(probs)]
    raised = dict(probs, **{name: max(probs[name], bump)})
    sets = mcs(tree)
    assert pie_probability(sets, raised) >= pie_probability(sets, probs) - 1e-12


def test_partitioning(backend):
    rng = np.random.default_rng(7)
    sets = [fs(rng.choice([f"e{i}" for i in range(15)], size=int(rng.integers(1, 4)), replace=False))
            for _ in range(14)]
    probs = {f"e{i}": float(p) for i, p in enumerate(rng.random(15))}
    one = pie_sum(sets, probs, workers=1)
    assert pie_sum(sets, probs, workers=1) == one
    four = pie_sum(sets, probs, workers=4)
    assert pie_sum(sets, probs, workers=4) == four
    assert four[1] == one[1] == 2 ** 14 - 1
    assert abs(four[0] - one[0]) <= 1e-12


def test_top_probability():
    tree = fixed_tree({"A": .5, "B": .5}, [("T", Or(("A", "B")))], "T")
    pie = top_probability(tree, 10.0)
    assert (pie.method, pie.probability, pie.terms) == ("pie", 0.75, 3)
    assert "independent" in pie.note
    enum = top_probability(tree, 10.0, "enum")
    assert enum.probability == 0.75
    mc = top_probability(tree, 10.0, "mc", samples=10_000, seed=3)
    assert mc.samples == 10_000 and mc.std_error > 0
    with pytest.raises(ValueError):
        top_probability(tree, 1.0, "bdd")


def test_top_probability_solar():
    tree = solar_tree([1e-5] * 14)
    pie = top_probability(tree, 1000.0, "pie")
    enum = top_probability(tree, 1000.0, "enum")
    assert pie.terms == 8191
    assert abs(pie.probability - enum.probability) <= 1e-9


def test_noncoherent_needs_oracle():
    tree = build_tree([("A", FixedProb(.2)), ("B", Exponential(.1))], [("N", Not("B")), ("T", Or(("A", "N")))], "T")
    with pytest.raises(NonCoherentError):
        top_probability(tree, 1.0)
    assert top_probability(tree, 1.0, "enum").probability == pytest.approx(1 - 0.8 * (1 - math.exp(-0.1)), abs=1e-15)
