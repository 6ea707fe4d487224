import pytest

from fockcrystal import (DomainError, GrothVector, SplitVector, diagram_commutes, induce,
                         induce_split, morita_split, parse_multipartition, restrict,
                         restrict_split)
from fockcrystal.grothendieck import compositions, verify_diagram

mp = parse_multipartition


def groth(*pairs):
    level = mp(pairs[0][0]).level
    return GrothVector(level, [(mp(t), c) for t, c in pairs])


def split_vec(split, *pairs):
    return SplitVector(split, [(tuple(mp(b) for b in key), c) for key, c in pairs])


def test_induce_examples():
    assert induce(groth(("(2)|(1)", 1))) == groth(
        ("(3)|(1)", 1), ("(2,1)|(1)", 1), ("(2)|(2)", 1), ("(2)|(1,1)", 1))
    assert induce(groth(("()", 1))) == groth(("(1)", 1))
    assert induce(groth(("(1)", 2))) == groth(("(2)", 2), ("(1,1)", 2))


def test_restrict_examples():
    assert not restrict(groth(("()", 1)))
    assert restrict(groth(("(2,1)", 1))) == groth(("(1,1)", 1), ("(2)", 1))


def test_induce_restrict_coefficient_sums():
    # the coefficient sums count addable and removable nodes, whose difference is the level
    for text in ("(2)|(1)", "(3,1)|()|(1,1)", "()|()"):
        v = groth((text, 1))
        lam = mp(text)
        assert sum(c for _, c in induce(v).items()) - sum(c for _, c in restrict(v).items()) == lam.level


def test_str():
    assert str(groth(("(1)", 2))) == "2[S^(1)]"
    assert str(GrothVector(1)) == "0"


def test_morita_split_examples():
    assert morita_split(groth(("(2)|(1)", 1)), (1, 1)) == split_vec((1, 1), (("(2)", "(1)"), 1))
    assert morita_split(groth(("(1)|()|(3)", 1)), (2, 1)) == split_vec((2, 1), (("(1)|()", "(3)"), 1))


@pytest.mark.parametrize("split", [(1, 2), (0, 2), (), (2, -1)])
def test_bad_splits_rejected(split):
    with pytest.raises(DomainError):
        morita_split(groth(("(1)|()", 1)), split)


def test_induce_split_examples():
    w = split_vec((1, 1), (("(2)", "(1)"), 1))
    assert induce_split(w) == split_vec(
        (1, 1), (("(3)", "(1)"), 1), (("(2,1)", "(1)"), 1), (("(2)", "(2)"), 1), (("(2)", "(1,1)"), 1))
    w = split_vec((1, 1), (("()", "()"), 1))
    assert induce_split(w) == split_vec((1, 1), (("(1)", "()"), 1), (("()", "(1)"), 1))
    assert not restrict_split(w)


def test_diagram_examples():
    assert diagram_commutes(mp("(2)|(1)"), (1, 1))
    assert diagram_commutes(mp("()|()"), (1, 1))
    assert diagram_commutes(mp("(2)|(1)"), (1, 1), restriction=True)


def test_compositions():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(4)) == 8


def test_verify_diagram_small():
    assert verify_diagram(2, 3) == []
    assert verify_diagram(2, 3, restriction=True) == []
