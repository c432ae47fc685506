import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import zetalab as zl
from zetalab.primes import PrattTree, factor_string


def _trial_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_primes_up_to_small():
    assert zl.primes_up_to(10) == [2, 3, 5, 7]
    assert zl.primes_up_to(1) == []
    assert zl.primes_up_to(2) == [2]


def test_primes_up_to_541():
    ps = zl.primes_up_to(541)
    assert len(ps) == 100
    assert ps[-1] == 541


def test_first_primes():
    assert zl.first_primes(5) == [2, 3, 5, 7, 11]
    assert len(zl.first_primes(1000)) == 1000
    assert zl.first_primes(1000)[-1] == 7919
    assert zl.first_primes(0) == []


def test_is_prime_spot_checks():
    assert zl.is_prime(211)
    assert not zl.is_prime(1)
    assert not zl.is_prime(0)
    assert not zl.is_prime(15)
    assert not zl.is_prime(2047)       # strong pseudoprime base 2
    assert not zl.is_prime(561)        # Carmichael
    assert zl.is_prime(2305843009213693951)   # 2^61 - 1
    assert not zl.is_prime(2 ** 61 + 1)


def test_is_prime_rejects_wide_input():
    with pytest.raises(ValueError):
        zl.is_prime(2 ** 64)


@given(n=st.integers(min_value=0, max_value=100000))
@settings(max_examples=300, deadline=None)
def test_is_prime_matches_trial_division(n):
    assert zl.is_prime(n) == _trial_is_prime(n)


def test_factorize_basics():
    assert zl.factorize(1) == {}
    assert zl.factorize(12) == {2: 2, 3: 1}
    assert zl.factorize(1024) == {2: 10}
    assert zl.factorize(97) == {97: 1}


def test_factorize_large_semiprime():
    # two primes above the trial range, exercises the rho split
    n = 1000003 * 1000033
    assert zl.factorize(n) == {1000003: 1, 1000033: 1}


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        zl.factorize(0)


@given(n=st.integers(min_value=2, max_value=10 ** 12))
@settings(max_examples=100, deadline=None)
def test_factorize_reconstructs(n):
    fac = zl.factorize(n)
    prod = 1
    for p, e in fac.items():
        assert zl.is_prime(p)
        prod *= p ** e
    assert prod == n
    assert list(fac) == sorted(fac)


def test_factor_string():
    assert factor_string(316) == "2^2*79"
    assert factor_string(378) == "2*3^3*7"
    assert factor_string(462) == "2*3*7*11"
    assert factor_string(388) == "2^2*97"
    assert factor_string(358) == "2*179"
    assert factor_string(1) == "1"


def test_poset_predecessors():
    assert zl.poset_predecessors(19) == {2, 3}
    assert zl.poset_predecessors(2) == set()
    assert zl.poset_predecessors(29) == {2, 7}
    assert zl.poset_predecessors(317) == {2, 79}
    with pytest.raises(ValueError):
        zl.poset_predecessors(15)


def test_is_poset_related():
    assert zl.is_poset_related(3, 19)
    assert not zl.is_poset_related(5, 19)
    assert zl.is_poset_related(2, 29)
    assert zl.is_poset_related(179, 359)
    assert not zl.is_poset_related(19, 3)
    with pytest.raises(ValueError):
        zl.is_poset_related(4, 19)


@given(i=st.integers(min_value=0, max_value=99),
       j=st.integers(min_value=0, max_value=99))
@settings(max_examples=120, deadline=None)
def test_poset_antisymmetric(i, j):
    ps = zl.first_primes(100)
    q, p = ps[i], ps[j]
    if q != p:
        assert not (zl.is_poset_related(q, p) and zl.is_poset_related(p, q))


def test_pratt_tree_base_case():
    t = zl.pratt_tree(2)
    assert t.prime == 2
    assert t.edges == ()


def test_pratt_tree_29():
    t = zl.pratt_tree(29)
    by_child = {sub.prime: (sub, exp) for sub, exp in t.edges}
    assert set(by_child) == {2, 7}
    assert by_child[2][1] == 2      # 28 = 2^2 * 7
    assert by_child[7][1] == 1
    seven, _ = by_child[7]
    assert {sub.prime for sub, _ in seven.edges} == {2, 3}


def test_pratt_tree_317_edges():
    t = zl.pratt_tree(317)
    tops = sorted((sub.prime, exp) for sub, exp in t.edges)
    assert tops == [(2, 2), (79, 1)]   # 316 = 2^2 * 79


def test_pratt_tree_rejects_composite():
    with pytest.raises(ValueError):
        zl.pratt_tree(16)


def _check_product(tree):
    if tree.prime == 2:
        assert tree.edges == ()
        return
    assert tree.predecessor_product() == tree.prime - 1
    for sub, _ in tree.edges:
        _check_product(sub)


@given(i=st.integers(min_value=0, max_value=199))
@settings(max_examples=80, deadline=None)
def test_pratt_product_invariant(i):
    p = zl.first_primes(200)[i]
    _check_product(zl.pratt_tree(p))


def test_pratt_children_match_predecessors():
    for p in (19, 29, 317, 541):
        t = zl.pratt_tree(p)
        assert {sub.prime for sub, _ in t.edges} == zl.poset_predecessors(p)


def test_iter_edges_root_first():
    rows = list(zl.pratt_tree(29).iter_edges())
    assert rows[0] == (29, 2, 2)
    assert (7, 3, 1) in rows
    assert len(rows) == 5


def test_euclid_generate_basic():
    cand = zl.euclid_generate([3, 5, 7])
    assert cand.candidate == 211
    assert cand.is_prime
    assert cand.factors == (3, 5, 7)


def test_euclid_generate_single():
    assert zl.euclid_generate([7]).candidate == 15
    assert not zl.euclid_generate([7]).is_prime
    c5 = zl.euclid_generate([5])
    assert c5.candidate == 11 and c5.is_prime


def test_euclid_sorts_factors():
    assert zl.euclid_generate([7, 3]).factors == (3, 7)


def test_euclid_rejects_bad_factors():
    with pytest.raises(ValueError):
        zl.euclid_generate([3, 3])
    with pytest.raises(ValueError):
        zl.euclid_generate([2])
    with pytest.raises(ValueError):
        zl.euclid_generate([4])
    with pytest.raises(ValueError):
        zl.euclid_generate([])


def test_euclid_overflow():
    with pytest.raises(OverflowError):
        zl.euclid_generate([2305843009213693951, 5])


@given(idx=st.lists(st.integers(min_value=1, max_value=30),
                    min_size=1, max_size=4, unique=True))
@settings(max_examples=100, deadline=None)
def test_euclid_prime_candidates_sit_above_factors(idx):
    ps = zl.first_primes(31)
    factors = [ps[i] for i in idx]
    cand = zl.euclid_generate(factors)
    assert cand.candidate == 2 * math.prod(factors) + 1
    if cand.is_prime:
        for q in factors:
            assert zl.is_poset_related(q, cand.candidate)
