import pytest
from hypothesis import given, strategies as st

from macmahon.characters import (CharacterError, IntegerSeries, chi, chi_bar, conjecture1, conjecture2,
                                 elevated_tuples_character, macmahon_series, module_character, p_alpha,
                                 q_pochhammer, tensor_factorization_check, theorem_character)
from macmahon.glinf_gz import gz_character
from macmahon.planepartitions import VACUUM, BoundaryTriple, NotSplitError, enumerate_pp
from oracles import c_pairs_count, ideal_sets, series_product, vacuum_pp_count

B = BoundaryTriple.of


def test_macmahon_low_terms():
    s = macmahon_series(10)
    assert s.to_list()[:5] == [1, 1, 3, 6, 13]
    assert s.to_list() == series_product({i: i for i in range(1, 11)}, 10)
    assert s.to_list()[:8] == [vacuum_pp_count(d) for d in range(8)]


def test_macmahon_vs_enumeration():
    assert module_character(VACUUM, None, 8) == macmahon_series(8)


def test_pochhammer_inverse_is_partition_count():
    inv = q_pochhammer(15) ** -1
    assert inv.to_list() == series_product({i: 1 for i in range(1, 16)}, 15)


def test_series_arithmetic():
    a = IntegerSeries([1, 2, 3], 4)
    assert (a * a.inverse()) == IntegerSeries.one(4)
    assert a.shift(2).to_list() == [0, 0, 1, 2, 3]
    assert a.shift(2).shift(-2) == a.truncate(2)
    with pytest.raises(CharacterError):
        a.shift(-1)
    assert a.first_difference(a) is None
    assert a.first_difference(IntegerSeries([1, 2, 4], 4)) == (2, 3, 4)
    assert a.to_csv_rows()[1] == (1, 2)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_series_ring_laws(x, y):
    a, b = IntegerSeries(x, 7), IntegerSeries(y, 7)
    assert a * b == b * a
    assert (a + b) - b == a
    if x[0] in (1, -1):
        assert (b / a) * a == b


@pytest.mark.parametrize("k", range(5))
def test_chi_bar_pair_enumeration(k):
    assert chi_bar(k, 12).to_list() == [c_pairs_count(k, n) for n in range(13)]


@pytest.mark.parametrize("k", range(9))
def test_chi_bar_recursion(k):
    N = 14
    lhs = chi_bar(k, N) + chi_bar(k + 1, N).shift(k + 1)
    assert lhs == q_pochhammer(N) ** -2


def test_chi_negative():
    for k in range(1, 4):
        assert chi(-k, 8).coeffs[0] == 0
        assert chi(-k, 8) == chi_bar(k, 8).shift(k)
        assert chi(k, 8) == chi_bar(k, 8)


def test_p_alpha_examples():
    assert p_alpha((0,)) == 0
    assert p_alpha((1, 0), 2) == 0
    assert p_alpha((2, 1)) == 1
    # a negative last part raises the degree of the singular vector
    assert p_alpha((0, -1), 2) == 1


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (0, -1), (1, -1), (2, -2)])
def test_p_alpha_is_lowest_degree(alpha):
    from macmahon.characters import alternating_sum
    s = alternating_sum(list(alpha), 12)
    first = next(d for d, c in enumerate(s.coeffs) if c)
    assert first == p_alpha(alpha)


def test_theorem_n1():
    for k in range(0, 3):
        assert theorem_character((k,), 1, 8) == chi(k, 8)
    for k in (1, 2):
        # q^p(alpha) chi(W) = chi_{-k} with p = k
        assert theorem_character((-k,), 1, 8) == chi(-k, 8 + k).shift(-k)


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (2, 1), (1, -1), (3, 1)])
def test_theorem_vs_patterns(alpha):
    c = max(0, -alpha[-1])
    shifted = tuple(a + c for a in alpha)
    assert theorem_character(alpha, 2, 8).to_list() == gz_character(2, shifted, c, 8)


def test_theorem_is_character():
    assert theorem_character((2, 0, -1), 3, 6).is_character()


def test_conjecture_identity():
    assert conjecture1(1, 10) == conjecture2(1, 1, 10)


@pytest.mark.parametrize("m", [1, 2])
def test_conjecture1_enumeration(m):
    assert conjecture1(m, 7) == module_character(VACUUM, (1, m), 7)


def test_conjecture1_box():
    # m = 2 forbids the box (3,1,2)
    s = conjecture1(2, 6)
    assert s.to_list() == [len(enumerate_pp(VACUUM, d, (3, 1, 2))) for d in range(7)]


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2)])
def test_conjecture2_enumeration(n, m):
    assert conjecture2(n, m, 5) == module_character(VACUUM, (n, m), 5)


def test_conjecture_preconditions():
    with pytest.raises(ValueError):
        conjecture1(0, 4)
    with pytest.raises(ValueError):
        conjecture2(1, 2, 4)


def test_module_character_examples():
    assert module_character(VACUUM, (0, 0), 6) == IntegerSeries.one(6)
    for r in (1, 2):
        layered = [sum(1 for s in ideal_sets((), (), (), d) if all(k <= r for _, _, k in s)) for d in range(6)]
        assert module_character(VACUUM, (r, 0), 5).to_list() == layered


def test_elevated_single():
    # one partition: ordinary partition counts
    assert elevated_tuples_character((), (), 1, 8).to_list() == series_product({i: 1 for i in range(1, 9)}, 8)


@pytest.mark.parametrize("b,abc", [
    (VACUUM, (1, 1, 1)), (VACUUM, (1, 1, 2)), (VACUUM, (1, 1, 3)),
    (B((), (1,), ()), (2, 1, 2)), (B((1,), (1,), ()), (2, 1, 2)), (B((1,), (1,), (1,)), (2, 2, 2)),
])
def test_tensor_factorization(b, abc):
    rep = tensor_factorization_check(b, *abc, N=5)
    assert rep.agrees, rep.to_json()


def test_tensor_not_split():
    with pytest.raises(NotSplitError):
        tensor_factorization_check(VACUUM, 2, 2, 2, 4)


def test_f_tensor_f_example():
    # ((1),(1),empty) at (2,1,2): two Fock factors
    rep = tensor_factorization_check(B((1,), (1,), ()), 2, 1, 2, N=6)
    fock = series_product({i: 1 for i in range(1, 7)}, 6)
    nonzero = [f.to_list() for f in rep.factors if f.to_list() != [1] + [0] * 6]
    assert nonzero == [fock, fock]
