import pytest

from utils.exceptions import AlphabetError, NotAMemberError, SubgroupGraphError
from utils.stallings import build_subgroup_graph
from utils.words import Alphabet, random_word


def test_powers_of_a_fold_to_rank_one(ab):
    graph = build_subgroup_graph([ab.parse("a^2"), ab.parse("a^3")])
    assert graph.rank() == 1
    assert len(graph.vertices) == 1
    a = ab.parse("a")
    assert graph.contains(a)
    assert graph.evaluate(graph.express(a)) == a


def test_basis_of_the_free_group(ab):
    graph = build_subgroup_graph([ab.parse("a b"), ab.parse("a^-1")])
    assert graph.rank() == 2
    assert graph.contains(ab.parse("b"))
    assert graph.contains(ab.parse("b^-3 a^5 b"))


def test_free_family_has_rank_eight(free_words):
    u, v = free_words
    assert build_subgroup_graph(u).rank() == 8
    assert build_subgroup_graph(v).rank() == 8


def test_membership_and_non_membership(ab):
    graph = build_subgroup_graph([ab.parse("a^2")])
    assert graph.contains(ab.parse("a^-4"))
    assert not graph.contains(ab.parse("a"))
    assert not graph.contains(ab.parse("b"))
    with pytest.raises(NotAMemberError):
        graph.express(ab.parse("a^3"))


def test_express_round_trip(free_words, rng):
    u, _ = free_words
    graph = build_subgroup_graph(u)
    for _ in range(40):
        coords = random_word(graph.symbols, rng, max_syllables=6, max_exponent=2)
        w = graph.evaluate(coords)
        assert graph.contains(w)
        assert graph.evaluate(graph.express(w)) == w


def test_symbols_use_the_prefix(ab):
    graph = build_subgroup_graph([ab.parse("a b"), ab.parse("b a")], symbol_prefix="V")
    assert graph.symbols.names == ("V1", "V2")


def test_graph_is_folded_and_connected(free_words):
    u, _ = free_words
    graph = build_subgroup_graph(u)
    assert graph.is_folded()
    assert graph.is_connected()
    exported = graph.to_networkx()
    assert exported.number_of_nodes() == len(graph.vertices)
    assert exported.number_of_edges() == len(graph.edges)


def test_invalid_generators(ab):
    with pytest.raises(SubgroupGraphError):
        build_subgroup_graph([])
    with pytest.raises(SubgroupGraphError):
        build_subgroup_graph([ab.parse("a"), ab.identity()])
    with pytest.raises(AlphabetError):
        build_subgroup_graph([ab.parse("a"), Alphabet(("s", "x")).parse("s")])


def test_query_over_wrong_alphabet(ab):
    graph = build_subgroup_graph([ab.parse("a")])
    with pytest.raises(AlphabetError):
        graph.contains(Alphabet(("s", "x")).parse("s"))


def _random_generators(ab, rng):
    count = int(rng.integers(1, 5))
    gens = []
    while len(gens) < count:
        w = random_word(ab, rng, max_syllables=5, max_exponent=3)
        if not w.is_identity:
            gens.append(w)
    return gens


def test_rank_and_membership_ignore_generator_order(ab, rng):
    for _ in range(200):
        gens = _random_generators(ab, rng)
        shuffled = [gens[i] for i in rng.permutation(len(gens))]
        graph, other = build_subgroup_graph(gens), build_subgroup_graph(shuffled)
        assert graph.rank() == other.rank()
        assert graph.rank() <= len(gens)
        for _ in range(10):
            w = random_word(ab, rng, max_syllables=4, max_exponent=3)
            assert graph.contains(w) == other.contains(w)


def test_products_of_generators_round_trip(ab, rng):
    for _ in range(200):
        graph = build_subgroup_graph(_random_generators(ab, rng))
        coords = random_word(graph.symbols, rng, max_syllables=5, max_exponent=2)
        w = graph.evaluate(coords)
        assert graph.contains(w)
        assert graph.evaluate(graph.express(w)) == w
