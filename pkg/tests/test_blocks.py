import pytest

from totalcut.blocks import (BlockWord, encode, enumerate_m1_unmatched,
                             iter_words, parse_word)
from totalcut.complexes import total_cut_complex
from totalcut.graphs import cycle_power, squared_cycle
from totalcut.morse import unmatched_after_first

EXAMPLE_WORD = BlockWord(n=14, anchors=(1, 4, 7, 11),
                         offsets=((0, 2), (0, 1), (0, 2), (0, 1)))


def test_decode_published_example():
    assert EXAMPLE_WORD.decode() == (2, 6, 8, 10, 13, 14)
    assert EXAMPLE_WORD.blocks() == ((1, 3), (4, 5), (7, 9), (11, 12))


def test_decode_singleton_blocks():
    w = BlockWord(n=10, anchors=(1, 4, 7), offsets=((0,), (0,), (0,)))
    assert w.decode() == (2, 3, 5, 6, 8, 9, 10)


def test_invariant_violations():
    with pytest.raises(ValueError):
        BlockWord(n=10, anchors=(1, 3), offsets=((0,), (0,)))  # spacing
    with pytest.raises(ValueError):
        BlockWord(n=10, anchors=(2, 5), offsets=((0,), (0,)))  # first anchor
    with pytest.raises(ValueError):
        BlockWord(n=10, anchors=(1, 9), offsets=((0,), (0,)))  # past n-2
    with pytest.raises(ValueError):
        BlockWord(n=10, anchors=(1, 4), offsets=((0,), (1, 2)))  # 0 missing
    with pytest.raises(ValueError):
        BlockWord(n=10, anchors=(1, 4), offsets=((0, 3), (0,)))  # offset 3


def test_encode_published_example():
    assert encode((2, 6, 8, 10, 13, 14), 14, 4) == EXAMPLE_WORD


def test_string_round_trip():
    s = str(EXAMPLE_WORD)
    assert s == "b(1:02)(4:01)(7:02)(11:01)@n=14"
    assert parse_word(s) == EXAMPLE_WORD
    with pytest.raises(ValueError):
        parse_word("b(1:02@n=14")


def test_round_trips_over_all_words():
    for word in iter_words(10, 3):
        face = word.decode()
        assert encode(face, 10, 3) == word
    # encode then decode is the identity on encodable faces
    g = squared_cycle(10)
    for word, face in enumerate_m1_unmatched(g, 3):
        back = encode(face, 10, 3)
        assert back is not None and back.decode() == face


def test_encode_returns_none_when_structure_fails():
    # complement {1,4,7,10}: four greedy blocks cannot make three, and the
    # last anchor would sit past n-2 anyway
    face = tuple(v for v in range(1, 11) if v not in (1, 4, 7, 10))
    assert encode(face, 10, 3) is None
    # wrong block count
    assert encode(tuple(range(2, 11)), 10, 3) is None  # complement {1}: one block
    # scan: encodable faces are exactly those whose greedy split has k
    # blocks and a legal last anchor
    c = total_cut_complex(squared_cycle(10), 3)
    seen_none = 0
    for d in range(-1, c.dim + 1):
        for f in c.faces_of_dim(d):
            if 1 in f:
                continue
            w = encode(f, 10, 3)
            if w is None:
                seen_none += 1
            else:
                assert w.decode() == f
    assert seen_none > 0


def test_enumerate_requires_squared_cycle():
    with pytest.raises(ValueError):
        list(enumerate_m1_unmatched(cycle_power(12, 1), 3))
    with pytest.raises(ValueError):
        list(enumerate_m1_unmatched(squared_cycle(8), 3))  # n < 3k


def test_enumerate_matches_brute_force_small():
    for k, n in [(3, 9), (3, 10), (4, 13)]:
        g = squared_cycle(n)
        emitted = {f for _, f in enumerate_m1_unmatched(g, k)}
        brute = set(unmatched_after_first(total_cut_complex(g, k), 1))
        assert emitted == brute, (k, n)


def test_enumerate_contains_published_example_face():
    assert any(f == (2, 6, 8, 10, 13, 14)
               for _, f in enumerate_m1_unmatched(squared_cycle(14), 4))


def test_enumerated_faces_avoid_vertex_one_and_words_valid():
    for word, face in enumerate_m1_unmatched(squared_cycle(9), 3):
        assert 1 not in face
        assert word.anchors[0] == 1
        anchors = word.anchors
        assert all(anchors[j] >= anchors[j - 1] + 3 for j in range(1, len(anchors)))
        assert anchors[-1] <= word.n - 2


def test_anchors_form_independent_set():
    from totalcut.graphs import is_independent
    g = squared_cycle(12)
    for word, _ in enumerate_m1_unmatched(g, 3):
        assert is_independent(g, word.anchors)
