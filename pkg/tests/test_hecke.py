import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistlab.exact import Matrix, RatFunc
from twistlab.hecke import (HeckeElement, a_invariant, check_relations, compute_a_invariant, embed,
                            q_antisymmetrizer, regular_representation, t_word)

Q_VALUES = [None, Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-2), Fraction(5, 7)]
Q_IDS = ["formal" if q is None else str(q) for q in Q_VALUES]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda q: q not in (0, -1))


def T(n, i, q=None):
    return HeckeElement.generator(n, i, q)


# -- the algebra -------------------------------------------------------------------

@pytest.mark.parametrize("q", Q_VALUES, ids=Q_IDS)
def test_quadratic_and_braid_relations(q):
    one = HeckeElement.one(3, q)
    t1, t2 = T(3, 1, q), T(3, 2, q)
    qv = one.param
    assert t1 * t1 == t1.scale(qv - 1) + one.scale(qv)
    assert t1 * t2 * t1 == t2 * t1 * t2


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("q", [None, Fraction(3), Fraction(-1, 2)], ids=["formal", "3", "-1/2"])
def test_regular_representation_relations(n, q):
    assert check_relations(regular_representation(n, q), q) == []


def test_far_generators_commute():
    assert T(4, 1) * T(4, 3) == T(4, 3) * T(4, 1)


def test_q_one_is_the_group_algebra():
    w = t_word(3, [1, 2, 1], 1)
    assert w == t_word(3, [2, 1, 2], 1)
    assert T(3, 1, 1) * T(3, 1, 1) == HeckeElement.one(3, 1)


@given(rationals, st.lists(st.integers(1, 3), max_size=4), st.lists(st.integers(1, 3), max_size=4),
       st.lists(st.integers(1, 3), max_size=4))
@settings(max_examples=25)
def test_multiplication_is_associative(q, u, v, w):
    x, y, z = t_word(4, u, q), t_word(4, v, q), t_word(4, w, q)
    assert (x * y) * z == x * (y * z)


def test_mismatched_specialisations_rejected():
    with pytest.raises(ValueError):
        T(3, 1, 2) + T(3, 1, 3)
    with pytest.raises(ValueError):
        T(3, 1) * T(4, 1)
    with pytest.raises(ValueError):
        T(3, 3)


def test_q_minus_one_rejected():
    with pytest.raises(ValueError):
        q_antisymmetrizer(2, -1)


# -- antisymmetrizers ------------------------------------------------------------------

def test_p2_closed_form():
    q = RatFunc.q()
    p = q_antisymmetrizer(2)
    one, t = HeckeElement.one(2), T(2, 1)
    assert p == one.scale(q / (q + 1)) - t.scale(1 / (q + 1))
    p1 = q_antisymmetrizer(2, 1)
    assert p1 == HeckeElement.one(2, 1).scale(Fraction(1, 2)) - T(2, 1, 1).scale(Fraction(1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [None, Fraction(2), Fraction(1, 3)], ids=["formal", "2", "1/3"])
def test_antisymmetrizer_is_absorbing_idempotent(n, q):
    p = q_antisymmetrizer(n, q)
    assert p * p == p
    for i in range(1, n):
        assert T(n, i, q) * p == -p == p * T(n, i, q)


def test_antisymmetrizer_at_q_one_is_signed_average():
    p = q_antisymmetrizer(3, 1)
    coeffs = p.as_dict()
    assert len(coeffs) == 6
    for w, c in coeffs.items():
        inversions = sum(1 for a, b in itertools.combinations(w, 2) if a > b)
        assert c == Fraction((-1) ** inversions, 6)


def test_embedding_shifts_generators():
    p = q_antisymmetrizer(2)
    assert embed(p, 3, 1) * T(3, 2) == -embed(p, 3, 1)
    assert embed(p, 3, 0) * T(3, 1) == -embed(p, 3, 0)


# -- the a-invariant --------------------------------------------------------------------

def reflection_oracle(q: Fraction) -> Fraction:
    """tr(e1 e2) in a two-dimensional representation built by hand.

    t1, t2 are triangular with eigenvalues -1 and q; e_i = (q - t_i)/(q + 1) is
    the rank-one projector onto the (-1)-eigenline.
    """
    t1 = [[Fraction(-1), Fraction(0)], [Fraction(1), q]]
    t2 = [[q, q], [Fraction(0), Fraction(-1)]]

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]

    assert mul(mul(t1, t2), t1) == mul(mul(t2, t1), t2)
    e = [[[((q if i == j else 0) - t[i][j]) / (q + 1) for j in range(2)] for i in range(2)] for t in (t1, t2)]
    prod = mul(e[0], e[1])
    return prod[0][0] + prod[1][1]


def test_formal_a_invariant():
    q = RatFunc.q()
    res = compute_a_invariant()
    assert res.proportional
    assert res.value == q / (q + 1) ** 2
    assert str(res.value) == "q/(q^2 + 2*q + 1)"


@pytest.mark.parametrize("q,expected", [(0, 0), (1, Fraction(1, 4)), (2, Fraction(2, 9)), (Fraction(1, 3), Fraction(3, 16))])
def test_a_invariant_specialisations(q, expected):
    assert a_invariant()(Fraction(q)) == expected
    assert reflection_oracle(Fraction(q)) == expected


@given(rationals)
@settings(max_examples=12)
def test_specialised_computation_matches_formal_value(q):
    assert a_invariant(q) == a_invariant()(q) == reflection_oracle(q)


def test_raw_projectors_are_not_proportional():
    res = compute_a_invariant()
    assert res.raw_residual != Matrix.zeros(6, 6, res.raw_residual.field)
