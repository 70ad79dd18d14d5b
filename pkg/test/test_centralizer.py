"""
Pruebas para el archivo centralizer.py
"""
import actions.centralizer as centralizer
from actions.knuth import knuth_class
from actions.rsk import p_tableau, row_insert
from actions.tableau import generate_ssyt, partitions, row_word, validate_ssyt, words
from utils.error import BudgetExceeded, InvalidArgument
from math import comb
import pytest
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


def _words_up_to(m, max_length):
    for length in range(max_length + 1):
        yield from words(m, length)


def _contains_subsequence(word, target):
    letters = iter(word)
    return all(letter in letters for letter in target)


ALL_WORDS = list(_words_up_to(4, 6))


def test_in_centralizer_examples():
    """Verifica el oráculo en los ejemplos"""
    assert centralizer.in_centralizer((2,), (2, 1, 2))
    assert centralizer.in_centralizer((), (3, 1, 2))
    assert not centralizer.in_centralizer((2, 1, 2), (1,))


def test_in_centralizer_matches_definition():
    """Verifica el oráculo contra P(uw) = P(wu)"""
    for u in _words_up_to(3, 3):
        for w in _words_up_to(3, 4):
            assert centralizer.in_centralizer(u, w) == (p_tableau(u + w) == p_tableau(w + u))


def test_single_letter_examples():
    """Verifica los criterios por filas y columnas para |u| = 1"""
    assert centralizer.test_single_letter_rows(2, (2, 1, 2))
    assert not centralizer.test_single_letter_rows(1, (2,))
    assert centralizer.test_single_letter_rows(3, ())
    assert centralizer.test_single_letter_cols(2, (2, 1, 2))
    assert centralizer.test_single_letter_cols(1, (1, 1, 1))
    assert not centralizer.test_single_letter_cols(2, (1,))


@pytest.mark.slow
def test_single_letter_characterizations():
    """Verifica que los criterios para una letra coinciden con el oráculo sobre [4]^{<=6}"""
    for u in range(1, 5):
        for w in ALL_WORDS:
            expected = centralizer.in_centralizer((u,), w)
            assert centralizer.test_single_letter_rows(u, w) == expected
            assert centralizer.test_single_letter_cols(u, w) == expected


def test_c1_examples():
    """Verifica el criterio lwi para C(1)"""
    assert centralizer.test_c1_lwi((2, 1))
    assert not centralizer.test_c1_lwi((1, 2))
    assert centralizer.test_c1_lwi((1, 1, 1))


def test_c1_characterization():
    """Verifica C(1) por lwi y por Yamanouchi en palabras binarias"""
    for w in ALL_WORDS:
        assert centralizer.test_c1_lwi(w) == centralizer.test_single_letter_cols(1, w)
    for w in _words_up_to(2, 8):
        assert centralizer.is_yamanouchi(w) == centralizer.in_centralizer((1,), w)


def test_is_yamanouchi_examples():
    """Verifica is_yamanouchi en los ejemplos"""
    assert centralizer.is_yamanouchi((2, 1, 2, 1))
    assert not centralizer.is_yamanouchi((1, 2, 1, 2))
    assert centralizer.is_yamanouchi(())


def test_yamanouchi_words_central_binomial():
    """Verifica que hay C(n, n//2) palabras de Yamanouchi binarias"""
    for n in range(9):
        assert len(centralizer.yamanouchi_words(n)) == comb(n, n // 2)
    assert centralizer.yamanouchi_words(4) == centralizer.centralizer_words((1,), 4, 2)


def test_c12_examples():
    """Verifica el criterio por columnas para C(12)"""
    assert centralizer.test_c12((2, 1, 1, 2))
    assert centralizer.test_c12((2, 2, 1, 1))
    assert not centralizer.test_c12((1,))


def test_c212_examples():
    """Verifica el criterio por columnas para C(212)"""
    assert centralizer.test_c212((2, 2, 1, 1))
    assert not centralizer.test_c212((1,))
    assert centralizer.test_c212((2,))


@pytest.mark.slow
def test_two_letter_characterizations():
    """Verifica los criterios de C(12) y C(212) contra el oráculo sobre [4]^{<=6}"""
    for w in ALL_WORDS:
        assert centralizer.test_c12(w) == centralizer.in_centralizer((1, 2), w)
        assert centralizer.test_c212(w) == centralizer.in_centralizer((2, 1, 2), w)


def test_staircase_examples():
    """Verifica el criterio para u = m(m-1)...1"""
    assert centralizer.test_staircase(2, (2, 2, 1, 1))
    assert not centralizer.test_staircase(2, (3,))
    assert centralizer.test_staircase(1, (1, 1, 1))


@pytest.mark.slow
def test_staircase_characterization():
    """Verifica el criterio de escalera contra el oráculo para m <= 3"""
    for m in range(1, 4):
        u = tuple(range(m, 0, -1))
        for w in ALL_WORDS:
            assert centralizer.test_staircase(m, w) == centralizer.in_centralizer(u, w)


def test_power_examples():
    """Verifica el criterio para u = a^k"""
    assert centralizer.test_power(2, 3, (2, 1, 2))
    assert not centralizer.test_power(1, 2, (2,))
    assert centralizer.test_power(3, 2, ())
    with pytest.raises(InvalidArgument):
        centralizer.test_power(1, 0, (1,))


@pytest.mark.slow
def test_power_characterization():
    """Verifica C(a^k) = C(a) contra el oráculo para a, k <= 3"""
    for a in range(1, 4):
        for k in range(1, 4):
            for w in ALL_WORDS:
                assert centralizer.test_power(a, k, w) == centralizer.in_centralizer((a,) * k, w)


def test_centralizer_is_union_of_knuth_classes():
    """Verifica que C(u) está cerrado bajo equivalencia de Knuth"""
    for u in [(1,), (1, 2), (2, 1, 2), (1, 3, 2)]:
        for n in range(5):
            members = set(centralizer.centralizer_words(u, n, 3))
            for w in members:
                assert knuth_class(w) <= members


def test_centralizer_contained_in_power():
    """Verifica C(u) ⊆ C(u^k)"""
    for u in _words_up_to(3, 3):
        for w in _words_up_to(3, 5):
            if centralizer.in_centralizer(u, w):
                for k in range(2, 4):
                    assert centralizer.in_centralizer(u * k, w)


def test_decreasing_subsequence_bounds_rows():
    """Verifica que una subsecuencia m, m-1, ..., m-k+1 en u acota las k primeras filas de P(w)"""
    for u in _words_up_to(3, 3):
        if not u:
            continue
        m = max(u)
        for w in _words_up_to(3, 5):
            if not centralizer.in_centralizer(u, w):
                continue
            for k in range(1, m + 1):
                if _contains_subsequence(u, range(m, m - k, -1)):
                    assert centralizer.rows_bounded(p_tableau(w), m, k)


def test_staircase_insertion_rows_matches_insertion():
    """Verifica la forma de P(rw(T) m ... 1) contra la inserción"""
    for m in range(1, 4):
        for n in range(7):
            for partition in partitions(n):
                for tableau in generate_ssyt(partition, 4):
                    if not centralizer.rows_bounded(tableau, m):
                        continue
                    expected = p_tableau(row_word(tableau) + tuple(range(m, 0, -1)))
                    assert centralizer.staircase_insertion_rows(tableau, m) == expected


def test_staircase_insertion_rows_rejects_unbounded():
    """Verifica que se rechaza un tableau con filas no acotadas"""
    with pytest.raises(InvalidArgument):
        centralizer.staircase_insertion_rows(validate_ssyt([[1, 3]]), 2)


def test_centralizer_words_examples():
    """Verifica centralizer_words en los ejemplos"""
    assert centralizer.centralizer_words((1,), 2, 2) == [(1, 1), (2, 1)]
    assert centralizer.centralizer_words((1,), 4, 2) == [
        (1, 1, 1, 1), (1, 1, 2, 1), (1, 2, 1, 1), (2, 1, 1, 1), (2, 1, 2, 1), (2, 2, 1, 1)
    ]
    assert centralizer.centralizer_words((3, 1), 0, 2) == [()]


def test_centralizer_words_budget(monkeypatch):
    """Verifica que se respeta el presupuesto"""
    monkeypatch.setenv('PLACTIC_BUDGET', '10')
    with pytest.raises(BudgetExceeded):
        centralizer.centralizer_words((1,), 4, 2)


def test_centralizer_words_invalid_range():
    """Verifica que se rechazan n negativo y m < 1"""
    with pytest.raises(InvalidArgument):
        centralizer.centralizer_words((1,), -1, 2)
    with pytest.raises(InvalidArgument):
        centralizer.centralizer_words((1,), 2, 0)


def test_centralizer_words_workers():
    """Verifica que el resultado no depende del número de procesos"""
    sequential = centralizer.centralizer_words((1, 2), 6, 3)
    assert centralizer.centralizer_words((1, 2), 6, 3, workers=2) == sequential


def test_letters_outside_u_are_never_bumped():
    """Verifica que al insertar u en P(w), con w en C(u), solo se desplazan letras de u"""
    for u in _words_up_to(3, 3):
        for w in _words_up_to(3, 5):
            if not centralizer.in_centralizer(u, w):
                continue
            tableau = p_tableau(w)
            for letter in u:
                tableau, trace = row_insert(tableau, letter)
                assert set(trace.displaced()) <= set(u)
