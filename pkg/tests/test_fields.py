import random

import pytest

from visiblepoints.errors import IdenticallyZero
from visiblepoints.fields import (
    ExtensionField,
    PrimeField,
    factor_squarefree,
    find_irreducible_poly,
    u_deg,
    u_divmod,
    u_eval,
    u_gcd,
    u_is_irreducible,
    u_mul,
    univariate_roots,
)


def test_find_irreducible_examples():
    assert find_irreducible_poly(5, 1) == [0, 1]  # V itself
    assert find_irreducible_poly(7, 2) == [1, 0, 1]  # V^2 + 1, -1 nonresidue
    assert find_irreducible_poly(5, 2) == [2, 0, 1]  # V^2 + 2, -2 nonresidue


def test_find_irreducible_has_no_roots():
    for p, k in ((5, 2), (7, 2), (11, 3), (3, 4)):
        g = find_irreducible_poly(p, k)
        assert len(g) == k + 1 and g[-1] == 1
        for x in range(p):
            acc = 0
            for c in reversed(g):
                acc = (acc * x + c) % p
            assert acc != 0


def test_univariate_roots_examples():
    assert univariate_roots([6, 0, 1], PrimeField(7)) == {1, 6}  # V^2 - 1
    assert univariate_roots([2, 0, 1], PrimeField(5)) == set()  # V^2 - 3, nonresidue
    assert univariate_roots([4, 2], PrimeField(5)) == {3}  # 2V - 1
    with pytest.raises(IdenticallyZero):
        univariate_roots([], PrimeField(5))
    with pytest.raises(IdenticallyZero):
        univariate_roots([0, 0], PrimeField(5))


def test_univariate_roots_match_enumeration_large_prime():
    # p above the brute-force threshold exercises the powmod/split path
    p = 1009
    K = PrimeField(p)
    rng = random.Random(31)
    for _ in range(25):
        g = [rng.randrange(p) for _ in range(rng.randint(2, 5))]
        if all(c == 0 for c in g):
            g[-1] = 1
        if g[-1] == 0:
            g[-1] = 1
        found = univariate_roots(g, K)
        expected = {x for x in range(p) if u_eval(K, g, x) == 0}
        assert found == expected


def test_extension_field_basics():
    F49 = ExtensionField(7, 2)
    assert F49.size == 49 and F49.modulus == (1, 0, 1)
    a = (3, 5)
    assert F49.mul(a, F49.inv(a)) == F49.one
    # nonzero element orders divide p^k - 1
    for idx in (1, 2, 10, 33, 48):
        x = F49.element_at(idx)
        assert F49.pow_(x, 48) == F49.one
    assert F49.from_int(10) == (3, 0)
    with pytest.raises(ValueError):
        ExtensionField(7, 2, modulus=[0, 0, 1])  # V^2 reducible
    with pytest.raises(ValueError):
        ExtensionField(7, 2, modulus=[1, 1])  # wrong degree


def test_extension_roots_and_square_roots_of_minus_one():
    F49 = ExtensionField(7, 2)
    roots = univariate_roots([F49.one, F49.zero, F49.one], F49)  # V^2 + 1
    assert len(roots) == 2
    for r in roots:
        assert F49.mul(r, r) == F49.neg(F49.one)


def test_divmod_identity_random():
    rng = random.Random(3)
    for K in (PrimeField(13), ExtensionField(3, 2)):
        for _ in range(40):
            a = [K.element_at(rng.randrange(K.size)) for _ in range(rng.randint(0, 6))]
            b = [K.element_at(rng.randrange(K.size)) for _ in range(rng.randint(1, 4))]
            while b and b[-1] == K.zero:
                b.pop()
            if not b:
                continue
            while a and a[-1] == K.zero:
                a.pop()
            q, r = u_divmod(K, a, b)
            recon = u_mul(K, q, b)
            n = max(len(recon), len(r), len(a))
            for i in range(n):
                x = recon[i] if i < len(recon) else K.zero
                y = r[i] if i < len(r) else K.zero
                z = a[i] if i < len(a) else K.zero
                assert K.add(x, y) == z
            assert u_deg(r) < u_deg(b) or not r


def _irreducible_pool(K, max_deg):
    """All monic irreducibles over K of degree <= max_deg (tiny fields) or a
    random-but-verified sample (large fields)."""
    pool = []
    if K.size <= 16:
        from visiblepoints.fields import _monic_polys

        for d in range(1, max_deg + 1):
            pool.extend(c for c in _monic_polys(K, d) if u_is_irreducible(K, c))
    else:
        rng = random.Random(K.size)
        while len(pool) < 12:
            d = rng.randint(1, max_deg)
            cand = [K.element_at(rng.randrange(K.size)) for _ in range(d)] + [K.one]
            if u_is_irreducible(K, cand) and cand not in pool:
                pool.append(cand)
    return pool


def test_factor_squarefree_reconstructs_product():
    rng = random.Random(17)
    for K in (PrimeField(101), PrimeField(13), ExtensionField(7, 2), PrimeField(2)):
        pool = _irreducible_pool(K, 2)
        for _ in range(15):
            parts = rng.sample(pool, rng.randint(1, min(3, len(pool))))
            g = [K.one]
            for part in parts:
                g = u_mul(K, g, part)
            factors = factor_squarefree(K, g)
            assert len(factors) == len(parts)
            recon = [K.one]
            for fac in factors:
                assert u_is_irreducible(K, fac)
                recon = u_mul(K, recon, fac)
            assert recon == g


def test_gcd_monic_and_common_divisor():
    K = PrimeField(11)
    a = u_mul(K, [1, 1], [3, 0, 1])
    b = u_mul(K, [1, 1], [5, 1])
    g = u_gcd(K, a, b)
    assert g == [1, 1]
