"""Exact irreducibility of bivariate polynomials over finite fields.

The reducibility engine decides whether f(U, V) factors into two
nonconstant polynomials over a given finite field K.  Strategy, in order:

1. degree-1 and single-variable inputs are settled directly;
2. a nonconstant gcd of the V-coefficients (the content in K[U]) is a
   factor;
3. the polynomial is made monic in V (multiplying by a power of its
   V-leading coefficient and rescaling V, an irreducibility-preserving
   change over the rational function field K(U));
4. a nontrivial gcd with the V-derivative (computed by a fraction-free
   pseudo-remainder sequence) exhibits a repeated factor;
5. otherwise the squarefree monic polynomial is specialized at a point
   u0 with squarefree image, its univariate image is factored, the
   factors are Hensel-lifted U-adically to precision exceeding every
   possible factor's U-degree, and all subset products are tested by
   exact trial division.  A factor found this way is genuine; if no
   subset divides, the polynomial is irreducible over K.

Absolute irreducibility reduces to irreducibility over F_p and over
F_{p^l} for every prime l dividing the total degree n: a base-irreducible
polynomial that splits over the algebraic closure does so into e > 1
conjugate factors of equal degree with e | n, and grouping conjugates
yields a factorization over F_{p^l} for any prime l | e.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize
from .errors import ConstantPolynomial, FieldTooSmall
from .fields import (
    ExtensionField,
    PrimeField,
    factor_squarefree,
    u_add,
    u_deg,
    u_deriv,
    u_divmod,
    u_ext_gcd,
    u_eval,
    u_gcd,
    u_is_irreducible,
    u_monic,
    u_mul,
    u_scale,
    u_shift,
    u_sub,
)
from .poly import IntBivariatePoly, ModBivariatePoly, reduce_mod

_EXHAUSTIVE_BUDGET = 2_000_000  # candidate cap for the tiny-field fallback


# ---------------------------------------------------------------------------
# bivariate polynomials as lists over the V-degree of U-polynomials


def _b_trim(bp: list) -> list:
    while bp and not bp[-1]:
        bp.pop()
    return bp


def _b_degv(bp: list) -> int:
    return len(bp) - 1


def _b_degu(bp: list) -> int:
    return max((u_deg(e) for e in bp if e), default=-1)


def _b_is_zero(bp: list) -> bool:
    return all(not e for e in bp)


def _from_terms(K, terms: dict) -> list:
    if not terms:
        return []
    m = max(j for _, j in terms)
    bp: list = [[] for _ in range(m + 1)]
    for (i, j), c in terms.items():
        e = bp[j]
        while len(e) <= i:
            e.append(K.zero)
        e[i] = c
    for e in bp:
        while e and e[-1] == K.zero:
            e.pop()
    return _b_trim(bp)


def _b_to_terms(bp: list, K, swap: bool) -> dict:
    out = {}
    for j, e in enumerate(bp):
        for i, c in enumerate(e):
            if c != K.zero:
                out[(j, i) if swap else (i, j)] = c
    return out


def _b_sub(K, a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for j in range(n):
        x = a[j] if j < len(a) else []
        y = b[j] if j < len(b) else []
        out.append(u_sub(K, x, y))
    return _b_trim(out)


def _b_mul(K, a: list, b: list, trunc: int | None = None) -> list:
    if not a or not b:
        return []
    out: list = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                prod = u_mul(K, x, y)
                if trunc is not None:
                    prod = prod[:trunc]
                    while prod and prod[-1] == K.zero:
                        prod.pop()
                out[i + j] = u_add(K, out[i + j], prod)
    if trunc is not None:
        for idx, e in enumerate(out):
            e = e[:trunc]
            while e and e[-1] == K.zero:
                e.pop()
            out[idx] = e
    return _b_trim(out)


def _b_scale_upoly(K, bp: list, s: list) -> list:
    return _b_trim([u_mul(K, e, s) for e in bp])


def _b_eval_u(K, bp: list, u0) -> list:
    out = [u_eval(K, e, u0) for e in bp]
    while out and out[-1] == K.zero:
        out.pop()
    return out


def _b_layer(K, bp: list, t: int) -> list:
    out = [e[t] if t < len(e) else K.zero for e in bp]
    while out and out[-1] == K.zero:
        out.pop()
    return out


def _b_deriv_v(K, bp: list) -> list:
    char = K.characteristic
    out = []
    for j in range(1, len(bp)):
        out.append(u_scale(K, bp[j], K.from_int(j % char)))
    return _b_trim(out)


def _b_shift_u(K, bp: list, c) -> list:
    return _b_trim([u_shift(K, e, c) for e in bp])


def _b_content_u(K, bp: list) -> list:
    g: list = []
    for e in bp:
        if e:
            g = u_gcd(K, g, e)
            if u_deg(g) == 0:
                break
    return g


def _b_primitive_part(K, bp: list) -> list:
    cont = _b_content_u(K, bp)
    if u_deg(cont) <= 0:
        return [list(e) for e in bp]
    out = []
    for e in bp:
        if not e:
            out.append([])
            continue
        q, r = u_divmod(K, e, cont)
        if r:
            raise AssertionError("content does not divide a coefficient")
        out.append(q)
    return _b_trim(out)


def _b_divmod_monic_v(K, a: list, b: list) -> tuple[list, list]:
    """Division in K[U][V] by b monic in V; exact, no fractions."""
    db = _b_degv(b)
    if db < 0 or u_deg(b[db]) != 0 or b[db][0] != K.one:
        raise ValueError("divisor must be monic in V")
    rem = [list(e) for e in a]
    da = _b_degv(rem)
    if da < db:
        return [], _b_trim(rem)
    quo: list = [[] for _ in range(da - db + 1)]
    for k in range(da - db, -1, -1):
        coef = rem[db + k]
        if not coef:
            continue
        quo[k] = list(coef)
        for j in range(db + 1):
            rem[j + k] = u_sub(K, rem[j + k], u_mul(K, coef, b[j]))
    return _b_trim(quo), _b_trim(rem)


def _u_pow(K, a: list, e: int) -> list:
    out = [K.one]
    for _ in range(e):
        out = u_mul(K, out, a)
    return out


def _pseudo_rem_v(K, a: list, b: list) -> list:
    """A remainder of a by b in K[U][V] after scaling by powers of b's
    V-leading coefficient; preserves gcds up to K[U]-content."""
    db = _b_degv(b)
    lcb = b[db]
    rem = [list(e) for e in a]
    while not _b_is_zero(rem) and _b_degv(_b_trim(rem)) >= db:
        rem = _b_trim(rem)
        da = _b_degv(rem)
        lca = rem[da]
        shifted = [[] for _ in range(da - db)] + [u_mul(K, lca, e) for e in b]
        rem = _b_sub(K, _b_scale_upoly(K, rem, lcb), shifted)
    return _b_trim(rem)


def _gcd_v_primitive(K, a: list, b: list) -> list:
    """gcd of a and b as polynomials in V over K(U), primitive-part PRS."""
    a = _b_primitive_part(K, _b_trim([list(e) for e in a]))
    b = _b_primitive_part(K, _b_trim([list(e) for e in b]))
    while not _b_is_zero(b):
        if _b_degv(a) < _b_degv(b):
            a, b = b, a
            continue
        r = _pseudo_rem_v(K, a, b)
        a, b = b, (_b_primitive_part(K, r) if not _b_is_zero(r) else [])
    return a


# ---------------------------------------------------------------------------
# Hensel lifting


def _lift_pair(K, F: list, g0: list, h0: list, kappa: int) -> tuple[list, list]:
    """Lift F = g0*h0 (mod U) to G*H = F (mod U^kappa), G = g0 and H = h0
    at U = 0, both monic in V."""
    gee, bez_s, bez_t = u_ext_gcd(K, g0, h0)
    if u_deg(gee) != 0:
        raise AssertionError("Hensel factors must be coprime at U=0")
    g_layers = [list(g0)]
    h_layers = [list(h0)]
    for t in range(1, kappa):
        e = _b_layer(K, F, t)
        for i in range(1, t):
            e = u_sub(K, e, u_mul(K, g_layers[i], h_layers[t - i]))
        q, h_t = u_divmod(K, u_mul(K, e, bez_s), h0)
        g_t = u_add(K, u_mul(K, e, bez_t), u_mul(K, q, g0))
        if u_deg(g_t) >= u_deg(g0):
            raise AssertionError("lift layer degree overflow")
        g_layers.append(g_t)
        h_layers.append(h_t)
    return _layers_to_bp(K, g_layers), _layers_to_bp(K, h_layers)


def _layers_to_bp(K, layers: list) -> list:
    m = max(len(layer) for layer in layers)
    bp = []
    for j in range(m):
        e = [layer[j] if j < len(layer) else K.zero for layer in layers]
        while e and e[-1] == K.zero:
            e.pop()
        bp.append(e)
    return _b_trim(bp)


def _hensel_factors(K, F: list, phis: list, kappa: int) -> list:
    """Lift the pairwise-coprime monic factors of F(0, V) to U-adic
    precision kappa."""
    out = []
    cur = F
    for i in range(len(phis) - 1):
        h0 = [K.one]
        for phi in phis[i + 1 :]:
            h0 = u_mul(K, h0, phi)
        g, cur = _lift_pair(K, cur, phis[i], h0, kappa)
        out.append(g)
    out.append(cur)
    return out


# ---------------------------------------------------------------------------
# the reducibility engine


def _exhaustive_reducible(K, F: list) -> tuple[bool, list | None]:
    """Last-resort factor search over a tiny field: enumerate monic-in-V
    candidates with bounded coefficient degrees and trial divide."""
    m = _b_degv(F)
    delta = _b_degu(F)
    for r in range(1, m // 2 + 1):
        ncoef = r * (delta + 1)
        if K.size**ncoef > _EXHAUSTIVE_BUDGET:
            raise FieldTooSmall(
                f"field of size {K.size} too small for specialization and "
                f"candidate count {K.size}^{ncoef} exceeds the search budget"
            )
        for combo in itertools.product(range(K.size), repeat=ncoef):
            cand: list = []
            pos = 0
            for _ in range(r):
                coeffs = [K.element_at(c) for c in combo[pos : pos + delta + 1]]
                while coeffs and coeffs[-1] == K.zero:
                    coeffs.pop()
                cand.append(coeffs)
                pos += delta + 1
            cand.append([K.one])
            _, rem = _b_divmod_monic_v(K, F, cand)
            if _b_is_zero(rem):
                return True, cand
    return False, None


def _univariate_factor_any(K, g: list) -> list | None:
    """Some nontrivial monic factor of a univariate g with deg >= 2 known
    reducible, or None when only inseparable structure is present."""
    g = u_monic(K, g)
    d = u_deriv(K, g)
    if not d:
        return None
    c = u_gcd(K, g, d)
    if 0 < u_deg(c) < u_deg(g):
        return c
    return factor_squarefree(K, g)[0]


def _unmonicize(K, g: list, lam: list | None) -> list:
    """Map a monic-in-V factor of the monicized polynomial back to a factor
    of the original via V -> lam(U)*V and a primitive part."""
    if lam is None:
        return g
    out = [u_mul(K, g[j], _u_pow(K, lam, j)) for j in range(len(g))]
    return _b_primitive_part(K, _b_trim(out))


def _reducible_over(K, terms: dict) -> tuple[bool, list | None, bool]:
    """Decide reducibility of the polynomial given by terms over K.

    Returns (reducible, factor-or-None, swapped); the factor, when present,
    is a genuine nonconstant proper factor in the engine's U/V orientation,
    with swapped=True meaning the variables were exchanged first.
    """
    char = K.characteristic
    n = max(i + j for i, j in terms)
    if n == 1:
        return False, None, False
    deg_u = max(i for i, _ in terms)
    deg_v = max(j for _, j in terms)
    swapped = False

    if deg_v == 0 or deg_u == 0:
        if deg_v == 0:
            up = [terms.get((i, 0), K.zero) for i in range(deg_u + 1)]
            swapped = True  # report the factor in the U variable
        else:
            up = [terms.get((0, j), K.zero) for j in range(deg_v + 1)]
        while up and up[-1] == K.zero:
            up.pop()
        if u_is_irreducible(K, up):
            return False, None, swapped
        fac = _univariate_factor_any(K, up)
        return True, ([fac] if fac else None), swapped

    if all(j % char == 0 for _, j in terms):
        if all(i % char == 0 for i, _ in terms):
            return True, None, False  # a perfect char-th power
        terms = {(j, i): c for (i, j), c in terms.items()}
        deg_u, deg_v = deg_v, deg_u
        swapped = True

    bp = _from_terms(K, terms)
    cont = _b_content_u(K, bp)
    if u_deg(cont) >= 1:
        return True, [cont], swapped
    m = _b_degv(bp)
    if m == 1:
        return False, None, swapped

    lead = bp[m]
    if u_deg(lead) == 0:
        inv = K.inv(lead[0])
        F = [u_scale(K, e, inv) for e in bp]
        lam = None
    else:
        F = [u_mul(K, bp[j], _u_pow(K, lead, m - 1 - j)) for j in range(m)]
        F.append([K.one])
        lam = lead

    d_f = _b_deriv_v(K, F)
    g = _gcd_v_primitive(K, F, d_f)
    if _b_degv(g) >= 1:
        return True, _unmonicize(K, g, lam), swapped

    # find u0 with a squarefree specialization; at most (2m-1)*deg_U(F)
    # points can fail, so scanning one more settles it for large fields
    bound = (2 * m - 1) * max(1, _b_degu(F)) + 1
    u0 = None
    for idx in range(min(K.size, bound + 1)):
        cand = K.element_at(idx)
        fu = _b_eval_u(K, F, cand)
        if u_deg(u_gcd(K, fu, u_deriv(K, fu))) == 0:
            u0 = cand
            break
    if u0 is None:
        if K.size > bound:
            raise AssertionError("squarefree polynomial with no squarefree fiber")
        red, fac = _exhaustive_reducible(K, F)
        return red, (_unmonicize(K, fac, lam) if fac else None), swapped

    ft = _b_shift_u(K, F, u0)
    f0 = _b_layer(K, ft, 0)
    phis = factor_squarefree(K, f0)
    s = len(phis)
    if s == 1:
        return False, None, swapped
    kappa = _b_degu(ft) + 1
    lifted = _hensel_factors(K, ft, phis, kappa)
    degs = [u_deg(phi) for phi in phis]
    for mask in range(1, (1 << s) - 1):
        dsum = sum(degs[i] for i in range(s) if mask >> i & 1)
        if 2 * dsum > m:
            continue
        if 2 * dsum == m and not mask & 1:
            continue
        cand = [[K.one]]
        for i in range(s):
            if mask >> i & 1:
                cand = _b_mul(K, cand, lifted[i], trunc=kappa)
        _, rem = _b_divmod_monic_v(K, ft, cand)
        if _b_is_zero(rem):
            back = _b_shift_u(K, cand, K.neg(u0))
            return True, _unmonicize(K, back, lam), swapped
    return False, None, swapped


# ---------------------------------------------------------------------------
# public verdict operations


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of the absolute-irreducibility decision.

    ``witness`` is an int e > 1 (an extension degree over which a
    base-irreducible polynomial splits), a string describing a factor over
    the base field, or None.
    """

    irreducible_over_base: bool
    absolutely_irreducible: bool
    witness: int | str | None = None


def _embed_terms(fmod: ModBivariatePoly, K) -> dict:
    return {ij: K.from_int(c) for ij, c in fmod.terms.items()}


def _factor_text(K, bp: list, swap: bool) -> str:
    # only used with a prime base field, where elements are plain ints
    terms = _b_to_terms(bp, K, swap)
    return IntBivariatePoly(terms).text()


def is_irreducible_bivariate(fmod: ModBivariatePoly, field) -> bool:
    """True iff f admits no factorization into two nonconstant polynomials
    over the given (prime or extension) field."""
    if fmod.is_constant():
        raise ConstantPolynomial("irreducibility of a constant polynomial")
    red, _, _ = _reducible_over(field, _embed_terms(fmod, field))
    return not red


@lru_cache(maxsize=128)
def _extension_field(p: int, ell: int) -> ExtensionField:
    return ExtensionField(p, ell)


def is_absolutely_irreducible(fmod: ModBivariatePoly) -> IrreducibilityVerdict:
    """Exact absolute-irreducibility verdict for f over F_p.

    Tests irreducibility over F_p and over F_{p^l} for every prime l
    dividing the total degree; that set of extensions is decisive because
    conjugate absolutely irreducible factors come in groups of size
    dividing the degree.
    """
    if fmod.is_constant():
        raise ConstantPolynomial("verdict on a constant polynomial")
    if fmod.degree == 1:
        return IrreducibilityVerdict(True, True)
    p = fmod.p
    base = PrimeField(p)
    red, fac, swapped = _reducible_over(base, _embed_terms(fmod, base))
    if red:
        witness = _factor_text(base, fac, swapped) if fac else None
        return IrreducibilityVerdict(False, False, witness)
    for ell in sorted({q for q, _ in factorize(fmod.degree)}):
        ext = _extension_field(p, ell)
        red, _, _ = _reducible_over(ext, _embed_terms(fmod, ext))
        if red:
            return IrreducibilityVerdict(True, False, ell)
    return IrreducibilityVerdict(True, True)


def bad_level_values(f: IntBivariatePoly, p: int) -> set[int]:
    """The residues a for which f - a is not absolutely irreducible mod p.

    Computed by running the verdict for every level; the size of this set
    stays bounded independently of p for fixed degree.
    """
    fm = reduce_mod(f, p)
    bad = set()
    for a in range(p):
        verdict = is_absolutely_irreducible(fm.subtract_const(a))
        if not verdict.absolutely_irreducible:
            bad.add(a)
    return bad
