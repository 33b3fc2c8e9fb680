import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherica import garside, weyl
from spherica.dynkin import build, parse_type
from spherica.garside import (
    BraidWord,
    GarsideNormalForm,
    WordError,
    delta,
    equals,
    is_normal_pair,
    lift,
    normalize,
    normalize_positive,
    parse_word,
    project,
    tau,
)
from spherica.oracle import brute_equal_positive, brute_right_greedy, positive_class

from conftest import random_positive, random_word


def W(d, *nodes):
    return weyl.from_word(d, nodes)


def test_parse_and_render(a2):
    w = parse_word(a2, "1 2 -1")
    assert w.letters == ((1, 1), (2, 1), (1, -1))
    assert str(w) == "1 2 -1"
    assert parse_word(a2, "").letters == ()
    for bad in ("1 x", "0", "3", "1.5"):
        with pytest.raises(WordError):
            parse_word(a2, bad)


def test_lift_and_project(a2):
    assert lift(weyl.identity(a2)).letters == ()
    assert lift(weyl.longest_element(a2)).nodes() == [1, 2, 1]
    assert lift(W(a2, 1, 2)).nodes() == [1, 2]
    assert project(parse_word(a2, "1 1")).is_identity()
    assert project(parse_word(a2, "1 2 1")) == weyl.longest_element(a2)
    assert project(parse_word(a2, "-1")) == weyl.generator(a2, 1)


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_lift_is_section(name):
    d = parse_type(name)
    rng = random.Random(5)
    for _ in range(50):
        w = weyl.from_word(d, [rng.choice(d.nodes) for _ in range(12)])
        word = lift(w)
        assert len(word) == w.length and project(word) == w


def test_is_normal_pair(a2):
    s1 = W(a2, 1)
    w0 = weyl.longest_element(a2)
    assert is_normal_pair(s1, W(a2, 1, 2))
    assert not is_normal_pair(W(a2, 1, 2), s1)
    assert is_normal_pair(w0, w0)
    assert not is_normal_pair(w0, s1)


def test_normalize_positive_examples(a2):
    f = normalize_positive(parse_word(a2, "1 1 2"))
    assert f == [W(a2, 1), W(a2, 1, 2)]
    assert normalize_positive(parse_word(a2, "1 2 1")) == [weyl.longest_element(a2)]
    assert normalize_positive(parse_word(a2, "")) == []


def test_normalize_examples(a2):
    nf = normalize(parse_word(a2, "-1"))
    # Delta sits on the right: s1^-1 = (s2 s1) Delta^-1
    assert nf.delta_power == -1 and nf.factors == (W(a2, 2, 1),)
    assert equals(nf.render(), parse_word(a2, "-1"))
    nf = normalize(parse_word(a2, "1 2 1 1 2 1"))
    assert nf.delta_power == 2 and nf.factors == ()
    assert str(normalize(parse_word(a2, "1 1 2"))) == "D^0 | [1] [1 2]"


def test_equals_examples(a2):
    assert equals(parse_word(a2, "1 2 1"), parse_word(a2, "2 1 2"))
    assert not equals(parse_word(a2, "1 2"), parse_word(a2, "2 1"))
    assert equals(parse_word(a2, "1 2"), parse_word(a2, "1 2 -1 1"))


def test_delta_and_tau(a2, d4):
    assert delta(a2).nodes() == [1, 2, 1]
    x = parse_word(a2, "1")
    assert tau(x).nodes() == [2]
    assert equals(delta(a2) * x, tau(x) * delta(a2))
    assert tau(tau(x)) == x
    perm = weyl.w0_automorphism(d4)
    y = parse_word(d4, "1")
    assert tau(y).nodes() == [perm[1]]
    assert equals(delta(d4) * y, tau(y) * delta(d4))


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "E6"])
def test_tau_conjugation_random(name):
    d = parse_type(name)
    rng = random.Random(11)
    for _ in range(30):
        x = random_word(d, rng, 8)
        assert equals(delta(d) * x, tau(x) * delta(d))


def test_normal_form_invariants_rejected(a2):
    with pytest.raises(ValueError):
        GarsideNormalForm(a2, 0, (weyl.longest_element(a2),))
    with pytest.raises(ValueError):
        GarsideNormalForm(a2, 0, (W(a2, 1, 2), W(a2, 1)))


def _brute_matches(d, nodes):
    factors = normalize_positive(BraidWord.positive(d, nodes))
    brute = brute_right_greedy(d, nodes)
    if len(factors) != len(brute):
        return False
    return all(tuple(lift(f).nodes()) in positive_class(d, b) for f, b in zip(factors, brute))


def test_normalize_positive_vs_brute_force_a2(a2):
    for n in range(7):
        for nodes in itertools.product(a2.nodes, repeat=n):
            assert _brute_matches(a2, nodes), nodes


def test_normalize_positive_vs_brute_force_random(a3, d4):
    rng = random.Random(3)
    for d in (a3, d4):
        for _ in range(60):
            nodes = [rng.choice(d.nodes) for _ in range(rng.randint(0, 8))]
            assert _brute_matches(d, nodes), nodes


def test_equals_vs_oracle_exhaustive_a2_short(a2):
    words = [BraidWord.positive(a2, w) for n in range(5) for w in itertools.product(a2.nodes, repeat=n)]
    for a in words:
        for b in words:
            assert equals(a, b) == brute_equal_positive(a, b)


def _name_and_word(draw_len=10, positive=False):
    def build_word(name):
        d = parse_type(name)
        letter = st.tuples(st.integers(1, d.rank), st.just(1) if positive else st.sampled_from([1, -1]))
        return st.lists(letter, max_size=draw_len).map(lambda ls: BraidWord(d, tuple(ls)))
    return st.sampled_from(["A2", "A3", "D4", "E6"]).flatmap(build_word)


@settings(max_examples=200, deadline=None)
@given(_name_and_word())
def test_normal_form_properties(word):
    nf = normalize(word)
    # idempotence through rendering
    again = normalize(nf.render())
    assert again == nf
    for u, v in zip(nf.factors, nf.factors[1:]):
        assert is_normal_pair(u, v)
    # x x^-1 collapses
    triv = normalize(word * word.inverse())
    assert triv.delta_power == 0 and triv.factors == ()


@settings(max_examples=200, deadline=None)
@given(_name_and_word(positive=True, draw_len=12))
def test_positive_letter_count(word):
    nf = normalize(word)
    w0 = weyl.longest_element(word.diagram)
    assert nf.delta_power >= 0
    assert sum(f.length for f in nf.factors) + nf.delta_power * w0.length == len(word)
    assert [f for f in normalize_positive(word) if f != w0] == list(nf.factors)


def test_project_is_homomorphism(d4):
    rng = random.Random(2)
    for _ in range(40):
        a, b = random_word(d4, rng, 6), random_word(d4, rng, 6)
        assert project(a * b) == project(a) * project(b)
        # equal braids have equal images
        nf = normalize(a)
        assert project(nf.render()) == project(a)
