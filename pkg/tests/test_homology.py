import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from twistkit import homology as hom
from twistkit.braid import beta_k, half_twist
from twistkit.homology import (
    HClass,
    TwistWord,
    apply,
    b_class,
    basis,
    chain_boundary_classes,
    chain_class,
    curve_class,
    evaluate_twistword,
    hyperelliptic_matrix,
    identity,
    intersection,
    is_symplectic,
    transvection,
    twistword_from_braid,
)

classes3 = st.lists(st.integers(-4, 4), min_size=6, max_size=6).map(lambda v: HClass(3, tuple(v)))


def a(g, i):
    return basis(g, "a", i)


def b(g, i):
    return basis(g, "b", i)


def test_intersection_examples():
    assert intersection(a(2, 1), b(2, 1)) == 1
    assert intersection(b(2, 1), a(2, 1)) == -1
    assert intersection(a(2, 1), a(2, 2)) == 0
    with pytest.raises(ValueError):
        intersection(a(2, 1), a(3, 1))


@given(classes3, classes3, classes3)
def test_intersection_bilinear_antisymmetric(x, y, z):
    assert intersection(x, x) == 0
    assert intersection(x, y) == -intersection(y, x)
    assert intersection(x + y, z) == intersection(x, z) + intersection(y, z)


def test_transvection_examples():
    zero = HClass(2, (0,) * 4)
    assert (transvection(zero, 5) == identity(2)).all()
    assert apply(transvection(a(2, 1), 1), b(2, 1)) == b(2, 1) - a(2, 1)
    assert apply(transvection(a(2, 1), 4), b(2, 1)) == b(2, 1) - 4 * a(2, 1)


@given(classes3, st.integers(-3, 3))
def test_transvection_properties(c, e):
    T = transvection(c, e)
    assert is_symplectic(T)
    assert (T.dot(transvection(c, -e)) == identity(3)).all()
    assert apply(T, c) == c


@given(classes3, st.integers(1, 4))
def test_transvection_power_is_iterate(c, e):
    T1 = transvection(c, 1)
    P = identity(3)
    for _ in range(e):
        P = P.dot(T1)
    assert (P == transvection(c, e)).all()


@pytest.mark.parametrize("g", range(1, 11))
def test_chain_intersection_pattern(g):
    A = [chain_class(g, i) for i in range(1, 2 * g + 2)]
    for i, j in itertools.combinations(range(2 * g + 1), 2):
        ij = intersection(A[i], A[j])
        if j == i + 1:
            assert abs(ij) == 1, (i + 1, j + 1)
        else:
            assert ij == 0, (i + 1, j + 1)


@pytest.mark.parametrize("g", range(1, 7))
def test_twist_images_satisfy_braid_relations(g):
    T = [transvection(chain_class(g, i), 1) for i in range(1, 2 * g + 2)]
    for i in range(len(T) - 1):
        assert (T[i].dot(T[i + 1]).dot(T[i]) == T[i + 1].dot(T[i]).dot(T[i + 1])).all()
    for i in range(len(T)):
        for j in range(i + 2, len(T)):
            assert (T[i].dot(T[j]) == T[j].dot(T[i])).all()


def test_curve_class_examples():
    for g in range(1, 7):
        assert curve_class("B0", g) == HClass(g, (0,) * g + (1,) * g)
    assert curve_class("c", 4).is_zero()
    assert curve_class("B2", 2).normalized() == a(2, 1) + a(2, 2)


def test_curve_class_errors():
    with pytest.raises(hom.CurveLabelError):
        curve_class("c", 3)
    with pytest.raises(hom.CurveLabelError):
        curve_class("bd1", 4)
    with pytest.raises(hom.CurveLabelError):
        curve_class("A6", 2)
    with pytest.raises(hom.CurveLabelError):
        curve_class("q1", 2)


def bullet_classes(g):
    """The even-genus vanishing-cycle table, commutator words dropped, with a_i -> -a_i."""
    r = g // 2
    A = lambda i: -1 * a(g, i)  # noqa: E731
    bsum = lambda lo, hi: sum((b(g, i) for i in range(lo, hi + 1)), HClass(g, (0,) * (2 * g)))  # noqa: E731
    table = {0: bsum(1, g), g: A(r) + A(r + 1)}
    for k in range(1, r + 1):
        table[2 * k - 1] = A(k) + bsum(k, g + 1 - k) + A(g + 1 - k)
    for k in range(1, r):
        table[2 * k] = A(k) + bsum(k + 1, g - k) + A(g + 1 - k)
    return table


@pytest.mark.parametrize("g", [2, 4, 6, 8])
def test_b_classes_match_even_table(g):
    for k, expected in bullet_classes(g).items():
        got = b_class(g, k)
        assert got == expected or got == -expected, (k, str(got), str(expected))


@pytest.mark.parametrize("g", range(1, 6))
def test_b_twist_is_conjugated_generator(g):
    for k in range(g + 1):
        M = evaluate_twistword(twistword_from_braid(beta_k(g, k), g))
        assert (M == transvection(b_class(g, k), 1)).all()


@pytest.mark.parametrize("g", range(2, 9))
def test_relation_word_acts_trivially(g):
    M = evaluate_twistword(hom.relation_word(g))
    assert is_symplectic(M)
    assert (M == identity(g)).all()


@pytest.mark.parametrize("g", range(1, 7))
def test_half_twist_square_acts_trivially(g):
    M = evaluate_twistword(twistword_from_braid(half_twist(g) ** 2, g))
    assert (M == identity(g)).all()


@pytest.mark.parametrize("g", [2, 4, 6, 8])
def test_even_chain_power(g):
    M = evaluate_twistword(hom.chain_power_word(g, g, 2 * (g + 1)))
    assert (M == identity(g)).all()


@pytest.mark.parametrize("g", [3, 5, 7, 9])
def test_odd_chain_boundary(g):
    alpha, beta = chain_boundary_classes(g)
    M = evaluate_twistword(hom.chain_power_word(g, g, g + 1))
    assert np.linalg.matrix_rank(np.array(M - identity(g), dtype=float)) <= 2
    assert intersection(alpha, beta) == 0
    assert (transvection(alpha, 1).dot(transvection(beta, 1)) == M).all()
    assert alpha == beta == a(g, (g + 1) // 2)


def test_chain_boundary_rejects_even():
    with pytest.raises(ValueError):
        chain_boundary_classes(4)


@pytest.mark.parametrize("g", range(1, 7))
def test_hyperelliptic_matrix(g):
    J = hyperelliptic_matrix(g)
    assert (J == -identity(g)).all()
    assert not (J == identity(g)).all()
    assert is_symplectic(J)
    assert (evaluate_twistword(hom.hyperelliptic_word(g)) == J).all()


def test_twistword_algebra():
    w = TwistWord(2, (("a1", 1), ("b1", 2)))
    assert (evaluate_twistword(w * w ** -1) == identity(2)).all()
    assert (evaluate_twistword(TwistWord(2, ())) == identity(2)).all()
    with pytest.raises(hom.CurveLabelError):
        TwistWord(2, (("a3", 1),))


@pytest.mark.parametrize("g", range(1, 11))
def test_every_emitted_matrix_is_symplectic(g):
    words = [hom.chain_power_word(g, 2 * g + 1, 3), hom.hyperelliptic_word(g)]
    if g >= 2:
        words.append(hom.relation_word(g))
    for i in range(1, 2 * g + 2):
        words.append(TwistWord(g, ((f"A{i}", -2),)))
    for w in words:
        assert is_symplectic(evaluate_twistword(w))
