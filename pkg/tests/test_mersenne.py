import pytest
import sympy

from eisenstein.core import UNITS, EInt, exact_div, is_unit, sextant
from eisenstein.divisors import sigma
from eisenstein.mersenne import (
    TAU,
    check_lemma38,
    composite_index_split,
    mersenne,
    mersenne_sextant_class,
    table1_mersenne,
    table1_norm,
)


def test_mersenne_examples():
    rec = mersenne(TAU, 2)
    assert rec.m == EInt(3, 1) and rec.a_k == 7 and rec.is_prime
    assert mersenne(TAU, 1).m == 1
    for p in (2, 3, 5, 7, 13):
        assert mersenne(2, p).m == 2**p - 1


def test_mersenne_record_invariants():
    for tau in (TAU, EInt(2), EInt(3, 1), EInt(5), EInt(4, 1)):
        for k in range(1, 25):
            rec = mersenne(tau, k)
            assert rec.m * (tau - 1) == tau**k - 1
            assert rec.a_k == rec.m.norm()
            assert rec.m == sigma(tau ** (k - 1))


def test_mersenne_rejects_non_prime_tau():
    with pytest.raises(ValueError):
        mersenne(EInt(7), 3)
    with pytest.raises(ValueError):
        mersenne(TAU, 0)


def test_tau_minus_one_is_unit():
    assert is_unit(TAU - 1)


@pytest.mark.parametrize("k, a", [(2, 7), (3, 28), (11, 176419)])
def test_table1_norm_examples(k, a):
    assert table1_norm(k) == a


def test_table1_row11_by_hand():
    assert 1 + 3**11 - 3**6 == 176419


@pytest.mark.parametrize("k, m", [(2, EInt(3, 1)), (3, EInt(6, 4)), (1, EInt(1))])
def test_table1_mersenne_examples(k, m):
    assert table1_mersenne(k) == m


def test_table1_regression():
    for k in range(1, 121):
        rec = mersenne(TAU, k)
        assert rec.m == table1_mersenne(k), k
        assert rec.a_k == table1_norm(k), k


def test_table1_rows_five_and_seven_share_norm():
    # both rows list 1 + 3^k + 3^((1+k)/2); direct computation agrees for each
    for k in (5, 7, 17, 19, 29, 31):
        assert mersenne(TAU, k).a_k == 1 + 3**k + 3 ** ((k + 1) // 2)


def test_sextant_class():
    assert mersenne_sextant_class(13) == 6
    assert mersenne_sextant_class(11) == 5
    assert mersenne_sextant_class(2) == 1
    for k in range(2, 200):
        if k % 12 == 1:
            assert mersenne_sextant_class(k) == 6
        elif k % 12 == 11:
            assert mersenne_sextant_class(k) == 5


def test_sixth_sextant_star_is_tau_power_minus_one():
    # for k = 1 (mod 12): M_k * (1 + w) = tau^k - 1 lies in the first sextant
    for k in (13, 25, 37, 49):
        m = mersenne(TAU, k).m
        assert m * EInt(1, 1) == TAU**k - 1
        assert sextant(TAU**k - 1) == 1
        assert 1 + (TAU**k - 1) == TAU**k
    # for k = -1 (mod 12): conj(M_k) * (-w) = conj(tau)^k - 1 is first-sextant
    for k in (11, 23, 35, 47):
        mb = mersenne(TAU, k).m.conjugate()
        assert mb * EInt(0, -1) == TAU.conjugate() ** k - 1
        assert sextant(TAU.conjugate() ** k - 1) == 1


def test_norm_against_power_of_three():
    for k in range(1, 121):
        a, p3 = table1_norm(k), 3**k
        if k % 12 in (3, 4, 5, 6, 7, 8, 9):
            assert a > p3, k
        else:
            assert a < p3, k


def test_composite_index_split():
    for k in range(4, 41):
        if sympy.isprime(k):
            continue
        for n in sympy.divisors(k)[1:-1]:
            left, right = composite_index_split(TAU, n, k // n)
            assert left * right == mersenne(TAU, k).m
            assert not is_unit(left) and not is_unit(right)
            assert left == mersenne(TAU, n).m


def test_composite_index_m4():
    m4 = mersenne(TAU, 4).m
    assert m4 == (1 + TAU) * (1 + TAU**2)
    assert not mersenne(TAU, 4).is_prime


def test_lemma38_sweep():
    assert check_lemma38(2).ok
    report = check_lemma38(60)
    assert report.ok and report.counterexamples == []
    assert report.prime_indices == [2, 5, 7, 11, 17, 19]
    assert all(sympy.isprime(mersenne(TAU, k).a_k) for k in report.prime_indices)
    for k in range(2, 61):
        if k not in report.prime_indices:
            assert not sympy.isprime(mersenne(TAU, k).a_k)
