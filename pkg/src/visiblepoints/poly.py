"""Bivariate polynomials in U and V: exact integer coefficients and their
reductions modulo a prime.

Text format accepted by :func:`parse_poly`: a sum of terms ``c*U^i*V^j``
joined by ``+`` or ``-``.  The ``*`` between coefficient and variables and
the ``^`` before an exponent are mandatory; a coefficient of 1, an exponent
of 1 and absent variables may be omitted.  Whitespace is insignificant.
Examples: ``U*V``, ``V^2 - U^3 - U - 1``, ``3*U^2*V - 7``.
"""

from __future__ import annotations

import re

from .arith import is_prime
from .errors import DegenerateReduction, PolynomialParseError

_TERM_VARPART = re.compile(r"^(?:(\d+)\*)?([UV](?:\^\d+)?(?:\*[UV](?:\^\d+)?)*)$")
_TERM_CONST = re.compile(r"^(\d+)$")
_FACTOR = re.compile(r"^([UV])(?:\^(\d+))?$")


def _parse_term(term: str) -> tuple[int, int, int]:
    """One signed-stripped term -> (coefficient, U-exponent, V-exponent)."""
    m = _TERM_CONST.match(term)
    if m:
        return int(m.group(1)), 0, 0
    m = _TERM_VARPART.match(term)
    if not m:
        raise PolynomialParseError(
            f"bad term {term!r}: expected c*U^i*V^j with explicit '*' and '^'"
        )
    coef = int(m.group(1)) if m.group(1) else 1
    iexp = jexp = 0
    seen = set()
    for factor in m.group(2).split("*"):
        fm = _FACTOR.match(factor)
        var, exp = fm.group(1), int(fm.group(2) or 1)
        if exp < 1:
            raise PolynomialParseError(f"bad exponent in term {term!r}")
        if var in seen:
            raise PolynomialParseError(f"variable {var} repeated in term {term!r}")
        seen.add(var)
        if var == "U":
            iexp = exp
        else:
            jexp = exp
    return coef, iexp, jexp


def parse_poly(text: str) -> "IntBivariatePoly":
    """Parse polynomial text in the c*U^i*V^j grammar."""
    s = "".join(text.split())
    if not s:
        raise PolynomialParseError("empty polynomial text")
    bad = re.search(r"[^0-9UV+\-*^]", s)
    if bad:
        raise PolynomialParseError(
            f"unexpected character {bad.group(0)!r}; only variables U and V are allowed"
        )
    # Split into signed terms at top level (every +/- is top level here).
    terms: dict[tuple[int, int], int] = {}
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    start = pos
    chunks: list[tuple[int, str]] = []
    while pos <= len(s):
        if pos == len(s) or s[pos] in "+-":
            if start == pos:
                raise PolynomialParseError(f"empty term in {text!r}")
            chunks.append((sign, s[start:pos]))
            if pos < len(s):
                sign = -1 if s[pos] == "-" else 1
            start = pos + 1
        pos += 1
    for sgn, chunk in chunks:
        c, i, j = _parse_term(chunk)
        key = (i, j)
        terms[key] = terms.get(key, 0) + sgn * c
    return IntBivariatePoly(terms)


class IntBivariatePoly:
    """Bivariate polynomial over Z, stored as {(i, j): coefficient != 0}.

    Immutable after construction; the total degree is cached.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms: dict[tuple[int, int], int]):
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            if c:
                clean[(int(i), int(j))] = int(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(
            self, "degree", max((i + j for i, j in clean), default=-1)
        )

    def __setattr__(self, *_):
        raise AttributeError("IntBivariatePoly is immutable")

    @property
    def deg_u(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_v(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.degree <= 0

    def evaluate(self, u: int, v: int) -> int:
        """Exact integer value f(u, v); unbounded precision."""
        return sum(c * u**i * v**j for (i, j), c in self.terms.items())

    def specialize_u_int(self, u: int) -> list[int]:
        """Exact integer coefficients of V -> f(u, V), ascending in V."""
        out = [0] * (self.deg_v + 1) if self.terms else []
        for (i, j), c in self.terms.items():
            out[j] += c * u**i
        while out and out[-1] == 0:
            out.pop()
        return out

    def text(self) -> str:
        """Canonical text form (terms sorted by total degree, then U-degree)."""
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda ij: (-(ij[0] + ij[1]), -ij[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s
                for s in (
                    f"U^{i}" if i > 1 else ("U" if i == 1 else ""),
                    f"V^{j}" if j > 1 else ("V" if j == 1 else ""),
                )
                if s
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntBivariatePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"IntBivariatePoly({self.text()!r})"


class ModBivariatePoly:
    """Reduction of an integer bivariate polynomial modulo a prime p.

    Coefficients live in [0, p-1]; zero coefficients are not stored.
    ``int_degree`` is the total degree of the integer preimage, so a drop
    of total degree under reduction is visible as ``degree < int_degree``.
    """

    __slots__ = ("p", "terms", "degree", "int_degree")

    def __init__(self, p: int, terms: dict[tuple[int, int], int], int_degree: int | None = None):
        clean = {}
        for (i, j), c in terms.items():
            c %= p
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", max((i + j for i, j in clean), default=-1))
        object.__setattr__(
            self, "int_degree", self.degree if int_degree is None else int_degree
        )

    def __setattr__(self, *_):
        raise AttributeError("ModBivariatePoly is immutable")

    @property
    def degree_dropped(self) -> bool:
        return self.degree < self.int_degree

    @property
    def deg_u(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_v(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def evaluate(self, x: int, y: int) -> int:
        """f(x, y) mod p."""
        p = self.p
        return sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in self.terms.items()) % p

    def specialize_u(self, x: int) -> list[int]:
        """Coefficients (ascending in V) of the univariate V -> f(x, V) over F_p.

        A zero polynomial comes back as []; callers must handle it.
        """
        p = self.p
        out = [0] * (self.deg_v + 1) if self.terms else []
        for (i, j), c in self.terms.items():
            out[j] = (out[j] + c * pow(x, i, p)) % p
        while out and out[-1] == 0:
            out.pop()
        return out

    def subtract_const(self, a: int) -> "ModBivariatePoly":
        """f - a modulo p."""
        terms = dict(self.terms)
        terms[(0, 0)] = (terms.get((0, 0), 0) - a) % self.p
        return ModBivariatePoly(self.p, terms, int_degree=self.int_degree)

    def scale_args(self, d: int) -> "ModBivariatePoly":
        """The polynomial (U, V) -> f(d*U, d*V) modulo p."""
        p = self.p
        terms = {(i, j): c * pow(d, i + j, p) for (i, j), c in self.terms.items()}
        return ModBivariatePoly(p, terms, int_degree=self.int_degree)

    def to_int_poly(self) -> IntBivariatePoly:
        """Lift with coefficients in [0, p-1]."""
        return IntBivariatePoly(dict(self.terms))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModBivariatePoly)
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"ModBivariatePoly(p={self.p}, {self.to_int_poly().text()!r})"


def reduce_mod(f: IntBivariatePoly, p: int) -> ModBivariatePoly:
    """Reduce f modulo the prime p.

    Raises DegenerateReduction when the result is constant (including the
    zero polynomial): such reductions disqualify every curve-level use.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fm = ModBivariatePoly(p, f.terms, int_degree=f.degree)
    if fm.is_constant():
        raise DegenerateReduction(
            f"{f.text()} reduces to a constant modulo {p}"
        )
    return fm


def specialize_u(fmod: ModBivariatePoly, x: int) -> list[int]:
    """Univariate V -> f(x, V) over F_p, coefficients ascending."""
    return fmod.specialize_u(x)
