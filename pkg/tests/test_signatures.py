from itertools import product

import pytest

from fockcrystal import (INFINITY, ONE, DomainError, EParam, Multicharge, Node,
                         cogood_node, conormal_nodes, enumerate_multipartitions, eps, good_node,
                         i_signature, normal_nodes, parse_multipartition, phi, reduce)
from fockcrystal.signatures import (Sign, phi_profile, eps_profile, reduce_word,
                                    residues_in_play)
from oracles import all_reductions

mp = parse_multipartition
S0 = Multicharge((0,), EParam(2))
S00 = Multicharge((0, 0), EParam(2))


def _described(sig):
    return [(str(sym.sign), tuple(sym.node)) for sym in sig.symbols]


def test_signature_examples():
    lam = mp("(2,1)")
    assert _described(i_signature(lam, S0, 0)) == [("+", (1, 3, 1)), ("+", (2, 2, 1)), ("+", (3, 1, 1))]
    assert _described(i_signature(lam, S0, 1)) == [("-", (1, 2, 1)), ("-", (2, 1, 1))]
    for e in (EParam(2), EParam(3), INFINITY):
        assert _described(i_signature(mp("()"), Multicharge((0,), e), 0)) == [("+", (1, 1, 1))]


@pytest.mark.parametrize("word, expected", [
    ("-+", ""),
    ("+-", "+-"),
    ("--++", ""),
    ("+-+-", "+-"),
    ("-++-", "+-"),
    ("", ""),
])
def test_reduce_word_examples(word, expected):
    assert reduce_word(word) == expected


def test_reduce_on_a_signature():
    sig = i_signature(mp("()|(1)"), S00, 0)
    assert sig.word == "+-"
    assert reduce(sig).word == "+-"
    sig = i_signature(mp("(2)"), S0, 1)
    assert sig.word == "-+"
    assert reduce(sig).word == ""


def test_reduce_confluent_exhaustive():
    for length in range(9):
        for letters in product("+-", repeat=length):
            word = "".join(letters)
            results = all_reductions(word)
            assert results == {reduce_word(word)}
            red = reduce_word(word)
            assert "-+" not in red
            # every + precedes every -
            assert red == "+" * red.count("+") + "-" * red.count("-")


def test_normal_conormal_examples():
    lam = mp("(2,1)")
    assert conormal_nodes(lam, S0, 0) == [Node(1, 3, 1), Node(2, 2, 1), Node(3, 1, 1)]
    assert normal_nodes(lam, S0, 1) == [Node(1, 2, 1), Node(2, 1, 1)]
    for i in (0, 1):
        assert normal_nodes(mp("()"), S0, i) == []
    assert normal_nodes(mp("(2)"), S0, 1) == [] and conormal_nodes(mp("(2)"), S0, 1) == []


def test_good_cogood_examples():
    assert good_node(mp("(2,1)"), S0, 1) == Node(1, 2, 1)
    assert cogood_node(mp("()|()"), S00, 0) == Node(1, 1, 2)
    assert good_node(mp("(2)"), S0, 1) is None


def test_phi_eps_examples():
    lam = mp("(2,1)")
    assert [phi(lam, S0, i) for i in (0, 1)] == [3, 0]
    assert [eps(lam, S0, i) for i in (0, 1)] == [0, 2]
    lam = mp("(1)|(1)")
    assert phi(lam, S00, 1) == 4
    assert eps(lam, S00, 0) == 2
    for r, e in [(1, 2), (2, 3), (3, 4)]:
        s = Multicharge(tuple(range(r)), EParam(e))
        empty = mp("|".join(["()"] * r))
        assert sum(phi_profile(empty, s).values()) == r
        assert not any(eps_profile(empty, s).values())


def test_e_one_rejected():
    s = Multicharge((0,), ONE)
    for fn in (i_signature, normal_nodes, conormal_nodes, good_node, cogood_node, phi, eps):
        with pytest.raises(DomainError):
            fn(mp("(1)"), s, 0)


def test_signature_sorted_and_signed_correctly():
    s = Multicharge((0, 1, 1), EParam(3))
    for n in range(5):
        for lam in enumerate_multipartitions(3, n):
            for i in range(3):
                sig = i_signature(lam, s, i)
                keys = [(x.comp, x.row, -x.col) for _, x in sig.symbols]
                assert keys == sorted(keys) and len(set(keys)) == len(keys)
                for sign, x in sig.symbols:
                    assert (x in lam) == (sign is Sign.MINUS)


def test_residues_in_play_infinite():
    s = Multicharge((0, 2), INFINITY)
    lam = mp("(2)|(1)")
    # addable: (1,3,1)->2 (2,1,1)->-1 (1,2,2)->3 (2,1,2)->1 ; removable: (1,2,1)->1 (1,1,2)->2
    assert residues_in_play(lam, s) == [-1, 1, 2, 3]
    # residue 1 reads "-+" and cancels
    assert phi_profile(lam, s) == {-1: 1, 1: 0, 2: 1, 3: 1}
