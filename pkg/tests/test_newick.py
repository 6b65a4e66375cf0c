import pytest

from m0nflag.errors import DegreeViolation, ParseError
from m0nflag.newick import parse_newick, to_newick
from m0nflag.splits import SplitSystem, parse_split
from m0nflag.trees import enumerate_trees, splits_of_tree, star_tree, tree_from_splits

from conftest import greedy_system


def test_caterpillar_splits():
    t = parse_newick("(2,(3,(4,5)),1);")
    assert splits_of_tree(t) == SplitSystem(5, [parse_split("1,2|3,4,5", 5), parse_split("1,2,3|4,5", 5)])


def test_star_canonical():
    assert to_newick(star_tree(4)) == "(1,2,3,4);"


def test_rooted_binary_input_is_unrooted():
    t = parse_newick("((1,2),(3,4));")
    assert to_newick(t) == "(1,2,(3,4));"
    assert t == parse_newick("(1,2,(3,4));")


def test_lengths_names_and_comments_ignored():
    t = parse_newick("((1:0.5,2:1e-3)ab:2,[note]3, (4,5)x:7)root;")
    assert to_newick(t) == "(1,2,(3,(4,5)));"


def test_strict_mode():
    with pytest.raises(DegreeViolation):
        parse_newick("((1,2),(3,4));", strict=True)
    assert to_newick(parse_newick("(1,2,(3,4));", strict=True)) == "(1,2,(3,4));"


def test_unary_nodes_suppressed():
    assert to_newick(parse_newick("(((1)),2,(3,(4)));")) == "(1,2,(3,4));"
    assert to_newick(parse_newick("(((1)),2,((3)),4);")) == "(1,2,3,4);"
    assert to_newick(parse_newick("((1,2,3));")) == "(1,2,3);"


@pytest.mark.parametrize(
    "text",
    [
        "((1,2);",
        "(1,2,3)",
        "(1,2,3));",
        "(1,2,a);",
        "(1,1,2,3);",
        "(1,2,4);",
        "(0,1,2);",
        "(1,2);",
        "1;",
        "",
        "(1,2,3);x",
        "(1,2,3:abc);",
        "(1,2,[3);",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_newick(text)


def test_explicit_n():
    with pytest.raises(ParseError):
        parse_newick("(1,2,3);", n=4)
    assert parse_newick("(1,2,3,4);", n=4).n == 4


@pytest.mark.parametrize("n", range(3, 7))
def test_round_trip_enumerated(n):
    for t in enumerate_trees(n):
        text = to_newick(t)
        u = parse_newick(text)
        assert to_newick(u) == text
        assert u == t


def test_round_trip_random(rng):
    for _ in range(100):
        n = rng.randint(4, 20)
        t = tree_from_splits(n, greedy_system(rng, n))
        assert to_newick(parse_newick(to_newick(t))) == to_newick(t)


def test_canonical_form_independent_of_input_order():
    a = parse_newick("((5,4),3,(2,1));")
    b = parse_newick("(1,2,(3,(4,5)));")
    assert to_newick(a) == to_newick(b) == "(1,2,(3,(4,5)));"
