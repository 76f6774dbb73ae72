"""Prime fields F_p, extension fields F_{p^k}, and univariate polynomial
arithmetic over either.

Field elements are plain values: ints for F_p, length-k tuples of ints
(coefficients of 1, x, ..., x^(k-1)) for F_{p^k}.  Univariate polynomials
are lists of field elements, ascending by exponent, with no trailing zeros
(the zero polynomial is the empty list).  Searches scan elements in the
fixed order given by ``element_at`` so results are reproducible across
runs and platforms.
"""

from __future__ import annotations

import itertools
import random

from .arith import factorize, is_prime
from .errors import IdenticallyZero

_BRUTE_FORCE_ROOT_LIMIT = 512  # enumerate the whole field below this size
_TINY_FACTOR_LIMIT = 9  # enumeration-based univariate factoring threshold


class PrimeField:
    """F_p with elements represented as ints in [0, p-1]."""

    __slots__ = ("p",)

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def size(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow_(self, a, e: int):
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def element_at(self, idx: int):
        if not 0 <= idx < self.p:
            raise IndexError(idx)
        return idx

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# univariate polynomial helpers (generic over the field object)


def _trim(K, c: list) -> list:
    while c and c[-1] == K.zero:
        c.pop()
    return c


def u_deg(c: list) -> int:
    return len(c) - 1


def u_add(K, a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.add(x, y))
    return _trim(K, out)


def u_sub(K, a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.sub(x, y))
    return _trim(K, out)


def u_neg(K, a: list) -> list:
    return [K.neg(x) for x in a]


def u_scale(K, a: list, s) -> list:
    if s == K.zero:
        return []
    return _trim(K, [K.mul(x, s) for x in a])


def u_mul(K, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == K.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _trim(K, out)


def u_divmod(K, a: list, b: list) -> tuple[list, list]:
    """Quotient and remainder of a by nonzero b."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], _trim(K, a)
    inv_lead = K.inv(b[-1])
    q = [K.zero] * (da - db + 1)
    for k in range(da - db, -1, -1):
        coef = K.mul(a[db + k], inv_lead)
        if coef != K.zero:
            q[k] = coef
            for j in range(db + 1):
                a[j + k] = K.sub(a[j + k], K.mul(coef, b[j]))
    return _trim(K, q), _trim(K, a[:db])


def u_mod(K, a: list, b: list) -> list:
    return u_divmod(K, a, b)[1]


def u_monic(K, a: list) -> list:
    if not a:
        return []
    if a[-1] == K.one:
        return list(a)
    return u_scale(K, a, K.inv(a[-1]))


def u_gcd(K, a: list, b: list) -> list:
    while b:
        a, b = b, u_mod(K, a, b)
    return u_monic(K, a)


def u_ext_gcd(K, a: list, b: list) -> tuple[list, list, list]:
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = u_divmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, u_sub(K, s0, u_mul(K, q, s1))
        t0, t1 = t1, u_sub(K, t0, u_mul(K, q, t1))
    if not r0:
        return [], s0, t0
    lead_inv = K.inv(r0[-1])
    return u_scale(K, r0, lead_inv), u_scale(K, s0, lead_inv), u_scale(K, t0, lead_inv)


def u_eval(K, a: list, x):
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def u_deriv(K, a: list) -> list:
    p = K.characteristic
    out = []
    for i in range(1, len(a)):
        out.append(K.mul(a[i], K.from_int(i % p)))
    return _trim(K, out)


def u_pow_mod(K, base: list, e: int, mod: list) -> list:
    result = [K.one]
    base = u_mod(K, base, mod)
    while e:
        if e & 1:
            result = u_mod(K, u_mul(K, result, base), mod)
        base = u_mod(K, u_mul(K, base, base), mod)
        e >>= 1
    return result


def u_shift(K, a: list, c) -> list:
    """The polynomial X -> a(X + c), by Horner on (X + c)."""
    out: list = []
    for coef in reversed(a):
        new = [K.zero] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i + 1] = v
            new[i] = K.add(new[i], K.mul(v, c))
        new[0] = K.add(new[0], coef)
        out = new
    return _trim(K, out)


def u_is_irreducible(K, g: list) -> bool:
    """Rabin irreducibility test over K."""
    d = u_deg(g)
    if d <= 0:
        return False
    if d == 1:
        return True
    q = K.size
    x = [K.zero, K.one]
    for ell in {p for p, _ in factorize(d)}:
        h = u_sub(K, u_pow_mod(K, x, q ** (d // ell), g), x)
        if u_deg(u_gcd(K, h, g)) != 0:
            return False
    h = u_sub(K, u_pow_mod(K, x, q**d, g), x)
    return not u_mod(K, h, g)


def _monic_polys(K, deg: int):
    """All monic degree-deg polynomials over K, lexicographic in the
    coefficient vector with the constant coefficient varying fastest."""
    size = K.size
    for idxs in itertools.product(range(size), repeat=deg):
        yield [K.element_at(i) for i in reversed(idxs)] + [K.one]


def find_irreducible_over(K, k: int) -> list:
    """First monic irreducible degree-k polynomial over K in search order."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    if k == 1:
        return [K.zero, K.one]
    for cand in _monic_polys(K, k):
        if u_is_irreducible(K, cand):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


def find_irreducible_poly(p: int, k: int) -> list[int]:
    """First monic irreducible degree-k polynomial over F_p, deterministic.

    Coefficients ascending: (p=7, k=2) gives [1, 0, 1], i.e. V^2 + 1.
    """
    return find_irreducible_over(PrimeField(p), k)


class ExtensionField:
    """F_{p^k} as F_p[x]/(modulus), elements stored as length-k int tuples.

    The modulus is verified irreducible at construction; omitting it picks
    the first irreducible monic degree-k polynomial in the fixed search
    order, so field construction is reproducible.
    """

    __slots__ = ("p", "k", "modulus", "base", "_red")

    def __init__(self, p: int, k: int, modulus=None):
        base = PrimeField(p)
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            mod = find_irreducible_over(base, k)
        else:
            mod = [c % p for c in modulus]
            if len(mod) != k + 1 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if k > 1 and not u_is_irreducible(base, mod):
                raise ValueError("modulus is not irreducible over F_p")
        self.p = p
        self.k = k
        self.base = base
        self.modulus = tuple(mod)
        # reductions of x^k .. x^(2k-2) as coefficient tuples
        red = []
        if k > 1:
            cur = [(-c) % p for c in mod[:-1]]
            red.append(tuple(cur))
            for _ in range(k - 2):
                nxt = [0] + cur[:-1]
                top = cur[-1]
                if top:
                    for i in range(k):
                        nxt[i] = (nxt[i] + top * red[0][i]) % p
                cur = nxt
                red.append(tuple(cur))
        self._red = red

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = conv[:k]
        for t in range(k, 2 * k - 1):
            c = conv[t]
            if c:
                row = self._red[t - k]
                for i in range(k):
                    out[i] += c * row[i]
        return tuple(v % p for v in out)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = u_ext_gcd(self.base, _trim(self.base, list(a)), list(self.modulus))
        if u_deg(g) != 0:
            raise ZeroDivisionError("element not invertible")
        return tuple(s[i] if i < len(s) else 0 for i in range(self.k))

    def pow_(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.k - 1)

    def element_at(self, idx: int):
        if not 0 <= idx < self.size:
            raise IndexError(idx)
        digits = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            digits.append(r)
        return tuple(digits)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.k, self.modulus))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, k={self.k})"


# ---------------------------------------------------------------------------
# roots and factorization


def _roots_brute(K, g: list) -> set:
    out = set()
    for i in range(K.size):
        x = K.element_at(i)
        if u_eval(K, g, x) == K.zero:
            out.add(x)
    return out


def _split_all_linear(K, s: list, out: set) -> None:
    """Extract the roots of s, a monic product of distinct linear factors,
    by deterministic quadratic-character splitting (odd field size)."""
    d = u_deg(s)
    if d <= 0:
        return
    if d == 1:
        out.add(K.neg(s[0]))
        return
    half = (K.size - 1) // 2
    idx = 0
    while True:
        c = K.element_at(idx)
        idx += 1
        h = u_sub(K, u_pow_mod(K, [c, K.one], half, s), [K.one])
        t = u_gcd(K, h, s)
        dt = u_deg(t)
        if 0 < dt < d:
            _split_all_linear(K, t, out)
            _split_all_linear(K, u_divmod(K, s, t)[0], out)
            return


def univariate_roots(g: list, field) -> set:
    """All roots of g in the field, each listed once.

    Raises IdenticallyZero for the zero polynomial; row-by-row callers
    treat that case as 'every value satisfies the congruence'.
    """
    K = field
    g = _trim(K, list(g))
    if not g:
        raise IdenticallyZero("root search on the zero polynomial")
    if u_deg(g) == 0:
        return set()
    if K.size <= _BRUTE_FORCE_ROOT_LIMIT or K.characteristic == 2:
        return _roots_brute(K, g)
    g = u_monic(K, g)
    x = [K.zero, K.one]
    w = u_sub(K, u_pow_mod(K, x, K.size, g), x)
    s = u_gcd(K, w, g)
    out: set = set()
    _split_all_linear(K, s, out)
    return out


def _factor_tiny(K, g: list) -> list[list]:
    """Factor monic g over a tiny field by trial division over all monic
    candidates in the deterministic order."""
    factors = []
    g = u_monic(K, g)
    d = 1
    while u_deg(g) > 0 and d <= u_deg(g) // 2:
        found = False
        for cand in _monic_polys(K, d):
            q, r = u_divmod(K, g, cand)
            if not r:
                factors.append(cand)
                g = q
                found = True
                break
        if not found:
            d += 1
    if u_deg(g) > 0:
        factors.append(g)
    return factors


def _equal_degree_split(K, g: list, e: int, rng: random.Random, out: list) -> None:
    """Cantor-Zassenhaus splitting of monic squarefree g whose irreducible
    factors all have degree e; needs odd field size."""
    d = u_deg(g)
    if d == e:
        out.append(g)
        return
    q = K.size
    exp = (q**e - 1) // 2
    while True:
        a = _trim(K, [K.element_at(rng.randrange(q)) for _ in range(d)])
        if u_deg(a) < 1:
            continue
        h = u_sub(K, u_pow_mod(K, a, exp, g), [K.one])
        t = u_gcd(K, h, g)
        dt = u_deg(t)
        if 0 < dt < d:
            _equal_degree_split(K, t, e, rng, out)
            _equal_degree_split(K, u_divmod(K, g, t)[0], e, rng, out)
            return


def _elt_key(c):
    return (c,) if isinstance(c, int) else tuple(c)


def factor_squarefree(K, g: list) -> list[list]:
    """Factor a monic squarefree univariate polynomial into monic
    irreducibles, in a deterministic order."""
    g = u_monic(K, g)
    if u_deg(g) <= 1:
        return [g] if u_deg(g) == 1 else []
    if K.size <= _TINY_FACTOR_LIMIT or K.characteristic == 2:
        factors = _factor_tiny(K, g)
    else:
        factors = []
        q = K.size
        x = [K.zero, K.one]
        h = list(x)
        rem = g
        e = 0
        while u_deg(rem) > 0:
            e += 1
            if 2 * e > u_deg(rem):
                factors.append(rem)
                break
            h = u_pow_mod(K, h, q, rem)
            t = u_gcd(K, u_sub(K, h, x), rem)
            if u_deg(t) > 0:
                rng = random.Random(0xC0FFEE + e)
                _equal_degree_split(K, t, e, rng, factors)
                rem = u_divmod(K, rem, t)[0]
                if u_deg(rem) > 0:
                    h = u_mod(K, h, rem)
    return sorted(factors, key=lambda f: (len(f), [_elt_key(c) for c in f]))
