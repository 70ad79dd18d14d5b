"""
Pruebas para el archivo knuth.py
"""
from actions.knuth import knuth_class, knuth_equivalent, knuth_neighbors
from actions.rsk import p_tableau
from actions.tableau import words
from utils.error import BoundExceeded
from collections import defaultdict
import pytest
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


def test_knuth_neighbors_examples():
    """Verifica los vecinos de Knuth en los ejemplos"""
    assert knuth_neighbors((1, 3, 2)) == {(3, 1, 2)}
    assert knuth_neighbors((1, 2, 3)) == set()
    assert knuth_neighbors((1, 1)) == set()


def test_knuth_neighbors_both_directions():
    """Verifica que cada movimiento se puede deshacer"""
    for length in range(3, 6):
        for w in words(3, length):
            for neighbor in knuth_neighbors(w):
                assert w in knuth_neighbors(neighbor)


def test_knuth_equivalent_examples():
    """Verifica knuth_equivalent en los ejemplos"""
    assert knuth_equivalent((1, 3, 2), (3, 1, 2))
    assert knuth_equivalent((2, 1, 2), (2, 1, 2))
    assert not knuth_equivalent((1, 2), (1, 1))


def test_knuth_class_examples():
    """Verifica la clase de Knuth en los ejemplos"""
    assert knuth_class((2, 1, 2)) == {(2, 1, 2), (2, 2, 1)}
    assert knuth_class((1, 2, 3)) == {(1, 2, 3)}
    assert knuth_class(()) == {()}


def test_knuth_class_matches_insertion():
    """Verifica que las clases coinciden con las fibras de P sobre [3]^{<=6}"""
    for length in range(7):
        fibers = defaultdict(set)
        for w in words(3, length):
            fibers[p_tableau(w)].add(w)
        for fiber in fibers.values():
            assert knuth_class(min(fiber)) == fiber


def test_knuth_class_bound():
    """Verifica que se rechazan palabras más largas que la cota"""
    with pytest.raises(BoundExceeded):
        knuth_class((1,) * 11)
    with pytest.raises(BoundExceeded):
        knuth_class((2, 1, 2), bound=2)
