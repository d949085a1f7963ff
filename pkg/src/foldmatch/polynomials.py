"""Exact sparse polynomial arithmetic.

Two flavours are used throughout:

* ``Polynomial`` -- integer polynomials in y_1..y_n (nonnegative exponents),
  the home of matching polynomials.
* ``LaurentPolynomial`` -- integer Laurent polynomials in x_1..x_n, y_1..y_n
  (x exponents may be negative), the home of oracle cluster variables.

Both store ``{exponent tuple: coefficient}`` with zero coefficients never
kept.  The canonical term order is total degree first, then lexicographic on
the exponent tuple; string output follows that order so it is reproducible.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .errors import InexactDivision

Exponents = Tuple[int, ...]


def _term_key(exps: Exponents) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    """Polynomial in y_1..y_nvars with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        self.nvars = nvars
        self.terms: Dict[Exponents, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = self.terms.get(tuple(e), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {tuple([0] * nvars): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls(nvars, {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {tuple([0] * self.nvars): 1}

    def constant_term(self) -> int:
        return self.terms.get(tuple([0] * self.nvars), 0)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def max_terms(self) -> list[Exponents]:
        """Exponent tuples of maximal total degree."""
        if not self.terms:
            return []
        top = max(sum(e) for e in self.terms)
        return sorted(e for e in self.terms if sum(e) == top)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return Polynomial(self.nvars, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_term_key)]

    def __str__(self) -> str:
        return format_terms(self.sorted_terms(), self.nvars)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def monomial_str(exps: Exponents, nvars: int, names: tuple[str, ...] | None = None) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        name = names[i] if names else f"y{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_terms(terms: list[tuple[Exponents, int]], nvars: int,
                 names: tuple[str, ...] | None = None) -> str:
    if not terms:
        return "0"
    chunks = []
    for e, c in terms:
        mono = monomial_str(e, nvars, names)
        if mono == "1":
            chunks.append(str(c))
        elif c == 1:
            chunks.append(mono)
        elif c == -1:
            chunks.append(f"-{mono}")
        else:
            chunks.append(f"{c}*{mono}")
    out = chunks[0]
    for chunk in chunks[1:]:
        if chunk.startswith("-"):
            out += " - " + chunk[1:]
        else:
            out += " + " + chunk
    return out


class LaurentPolynomial:
    """Laurent polynomial in x_1..x_n (any sign) and y_1..y_n (nonnegative).

    Exponent keys are tuples of length 2n: x exponents first, then y.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | None = None):
        self.n = n
        self.terms: Dict[Exponents, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    key = tuple(e)
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def one(cls, n: int) -> "LaurentPolynomial":
        return cls(n, {tuple([0] * (2 * n)): 1})

    @classmethod
    def x_var(cls, n: int, i: int) -> "LaurentPolynomial":
        e = [0] * (2 * n)
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, n: int, exps: Iterable[int], coeff: int = 1) -> "LaurentPolynomial":
        return cls(n, {tuple(exps): coeff})

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.n, out)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.n, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def power(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers only via exact_div")
        out = LaurentPolynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises InexactDivision when the quotient is not a
        Laurent polynomial with integer coefficients."""
        if not other.terms:
            raise ZeroDivisionError
        if not self.terms:
            return LaurentPolynomial(self.n)
        width = 2 * self.n

        def _factor(terms: Mapping[Exponents, int]):
            lo = [min(e[i] for e in terms) for i in range(width)]
            return lo, {tuple(a - s for a, s in zip(e, lo)): c for e, c in terms.items()}

        # Factor each operand as monomial * ordinary polynomial; the divisor
        # part then has a zero minimum in every variable, so the quotient of
        # the ordinary parts is an ordinary polynomial whenever the Laurent
        # quotient exists.
        sf, f = _factor(self.terms)
        sg, g = _factor(other.terms)
        carry = tuple(a - b for a, b in zip(sf, sg))
        g_lead = max(g, key=_term_key)
        g_lc = g[g_lead]
        quot: Dict[Exponents, int] = {}
        while f:
            f_lead = max(f, key=_term_key)
            diff = tuple(a - b for a, b in zip(f_lead, g_lead))
            if any(d < 0 for d in diff) or f[f_lead] % g_lc:
                raise InexactDivision(f"division left remainder at {f_lead}")
            c = f[f_lead] // g_lc
            quot[diff] = quot.get(diff, 0) + c
            for e, gc in g.items():
                key = tuple(a + b for a, b in zip(diff, e))
                val = f.get(key, 0) - c * gc
                if val:
                    f[key] = val
                else:
                    f.pop(key, None)
        return LaurentPolynomial(
            self.n, {tuple(a + b for a, b in zip(e, carry)): c for e, c in quot.items()})

    def specialize_x_to_one(self) -> Polynomial:
        out: Dict[Exponents, int] = {}
        for e, c in self.terms.items():
            ye = e[self.n:]
            out[ye] = out.get(ye, 0) + c
        return Polynomial(self.n, out)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_term_key)]

    def __str__(self) -> str:
        names = tuple([f"x{i + 1}" for i in range(self.n)] + [f"y{i + 1}" for i in range(self.n)])
        return format_terms(self.sorted_terms(), 2 * self.n, names)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"
