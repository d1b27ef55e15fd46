"""
Exact Laurent polynomials in ``x_1, ..., x_n`` and Demazure characters.

Polynomials are sparse maps from exponent vectors to non-zero Python ints.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .crystal import Tableau
from .errors import PreconditionError
from .weyl import Shape, Subword, Word, is_reduced

__all__ = [
    "LaurentPolynomial", "weight_monomial", "fundamental_weight",
    "divided_difference", "demazure_character", "demazure_character_all",
    "set_character", "key_shape", "schur_oracle", "longest_word",
    "conjugate_partition",
]

Exponents = tuple[int, ...]


class LaurentPolynomial:
    """A finite ℤ-linear combination of Laurent monomials in ``n`` variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | None = None):
        self.n = n
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise PreconditionError(f"exponent vector {exps} has length != {n}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, n: int) -> LaurentPolynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> LaurentPolynomial:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> LaurentPolynomial:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int, n: int) -> LaurentPolynomial:
        exps = [0] * n
        exps[i - 1] = 1
        return cls.monomial(exps)

    def _wrap(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.n != self.n:
                raise PreconditionError(f"mixing polynomials in {self.n} and {other.n} variables")
            return other
        if isinstance(other, int):
            return LaurentPolynomial(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __add__(self, other) -> LaurentPolynomial:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPolynomial:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self.terms) != 1:
                raise PreconditionError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise PreconditionError("monomial inverse needs a unit coefficient")
            return LaurentPolynomial(self.n, {tuple(a * k for a in e): c ** -k})
        out = LaurentPolynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial(self.n, {(0,) * self.n: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def swap(self, i: int) -> LaurentPolynomial:
        """``s_i f``: exchange the exponents of ``x_i`` and ``x_{i+1}``."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return LaurentPolynomial(self.n, out)

    def at_ones(self) -> int:
        """Specialization ``x_1 = ... = x_n = 1``."""
        return sum(self.terms.values())

    def evaluate(self, values: Sequence) -> object:
        """Evaluate at a point (values must support ``**`` with negative exponents if needed)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, a in zip(values, e):
                term = term * v ** a
            total = total + term
        return total

    def is_symmetric_in(self, i: int) -> bool:
        return self.swap(i) == self

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending lex order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> LaurentPolynomial:
        return cls(n, {tuple(t["exponents"]): int(t["coeff"]) for t in data})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for idx, a in enumerate(e, start=1):
                if a == 1:
                    factors.append(f"x{idx}")
                elif a:
                    factors.append(f"x{idx}^{a}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" + first) if first_sign == "-" else first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.n}, {self})"


def weight_monomial(tau: Tableau, n: int) -> LaurentPolynomial:
    """``x^τ = x_{r_1} ... x_{r_N}``."""
    exps = [0] * n
    for r in tau:
        if not 1 <= r <= n:
            raise PreconditionError(f"entry {r} outside 1..{n}")
        exps[r - 1] += 1
    return LaurentPolynomial.monomial(exps)


def fundamental_weight(i: int, n: int) -> LaurentPolynomial:
    """``ω_i = x_1 x_2 ... x_i``."""
    return LaurentPolynomial.monomial([1] * i + [0] * (n - i))


def _divide_by_root(g: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """Exact quotient ``g / (x_i - x_{i+1})``; asserts the remainder vanishes."""
    n = g.n
    # group terms by the exponents of the other variables and the total degree d in
    # (x_i, x_{i+1}); each group is x_{i+1}^d * p(y) with y = x_i / x_{i+1}
    groups: dict[tuple, dict[int, int]] = defaultdict(dict)
    for e, c in g.terms.items():
        a, b = e[i - 1], e[i]
        rest = e[:i - 1] + e[i + 1:]
        groups[(rest, a + b)][a] = c
    out: dict[Exponents, int] = {}
    for (rest, d), poly in groups.items():
        lo, hi = min(poly), max(poly)
        # synthetic division of sum_t poly[lo+t] y^t by (y - 1), highest degree first
        carry = 0
        quotient: dict[int, int] = {}
        for a in range(hi, lo - 1, -1):
            carry += poly.get(a, 0)
            if a > lo:
                # coefficient of y^(a-1) in the quotient, i.e. exponent a-1 of x_i
                if carry:
                    quotient[a - 1] = carry
        assert carry == 0, f"divided difference left remainder {carry}"
        for a, c in quotient.items():
            e = rest[:i - 1] + (a, d - 1 - a) + rest[i - 1:]
            out[e] = c
    return LaurentPolynomial(n, out)


def divided_difference(i: int, f: LaurentPolynomial) -> LaurentPolynomial:
    """Isobaric divided difference ``(x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})``."""
    if not 1 <= i <= f.n - 1:
        raise PreconditionError(f"Λ_{i} undefined in {f.n} variables")
    numerator = LaurentPolynomial.variable(i, f.n) * f - LaurentPolynomial.variable(i + 1, f.n) * f.swap(i)
    return _divide_by_root(numerator, i)


def demazure_character(J: Subword, shape: Shape) -> LaurentPolynomial:
    """``Λ^{δ_1}_{i_1}(ω_{i_1}^{m_1} Λ^{δ_2}_{i_2}(... ))`` with ``δ_k = [k ∈ J]``."""
    if J.word != shape.word:
        raise PreconditionError("subword and shape refer to different ambient words")
    n = shape.n
    f = LaurentPolynomial.one(n)
    for k in range(len(shape.word), 0, -1):
        a = shape.word[k]
        if shape.mult[k - 1]:
            f = fundamental_weight(a, n) ** shape.mult[k - 1] * f
        if k in J:
            f = divided_difference(a, f)
    return f


def demazure_character_all(shape: Shape) -> dict[Subword, LaurentPolynomial]:
    """:func:`demazure_character` for every ``J``, sharing suffix computations."""
    word, n = shape.word, shape.n
    out: dict[Subword, LaurentPolynomial] = {}

    def descend(k: int, mask: int, f: LaurentPolynomial) -> None:
        if k == 0:
            out[Subword(word, mask)] = f
            return
        a = word[k]
        if shape.mult[k - 1]:
            f = fundamental_weight(a, n) ** shape.mult[k - 1] * f
        descend(k - 1, mask, f)
        descend(k - 1, mask | 1 << (k - 1), divided_difference(a, f))

    descend(len(word), 0, LaurentPolynomial.one(n))
    return out


def set_character(tableaux: Iterable[Tableau], n: int) -> LaurentPolynomial:
    """``Σ_{τ ∈ T} x^τ`` over a duplicate-free set."""
    out: dict[Exponents, int] = defaultdict(int)
    for tau in set(tableaux):
        exps = [0] * n
        for r in tau:
            exps[r - 1] += 1
        out[tuple(exps)] += 1
    return LaurentPolynomial(n, out)


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = [p for p in lam if p > 0]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(p) for p in lam)
    if any(p < 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise PreconditionError(f"{lam} is not a partition")
    return tuple(p for p in lam if p)


def key_shape(letters: Sequence[int], lam: Sequence[int], n: int) -> Shape:
    """
    Shape whose sections realize the Demazure module ``V_w(λ)``.

    ``letters`` is a reduced word for ``w`` in which the last occurrences of the
    letters ``1, 2, ...`` appear in increasing order.  ``m`` places the number of
    columns of height ``h`` of ``λ`` at the last occurrence of letter ``h``.
    """
    word = Word(tuple(letters), n)
    lam = _check_partition(lam)
    if len(lam) > n:
        raise PreconditionError(f"{lam} has more than {n} parts")
    if not is_reduced(Subword.full(word)):
        raise PreconditionError(f"{word} is not a reduced word")
    last = {a: j for j, a in enumerate(word.letters, start=1)}
    ordered = [last[a] for a in sorted(last)]
    if ordered != sorted(ordered):
        raise PreconditionError(
            f"last occurrences {dict(sorted(last.items()))} of {word} are not increasing in the letter")
    mult = [0] * len(word)
    padded = list(lam) + [0]
    for h in range(1, len(lam) + 1):
        columns = padded[h - 1] - padded[h]
        if not columns:
            continue
        if h not in last:
            raise PreconditionError(f"λ = {lam} has columns of height {h} but letter {h} is absent from {word}")
        mult[last[h] - 1] = columns
    return Shape(word, tuple(mult))


def longest_word(n: int) -> tuple[int, ...]:
    """A reduced word for ``w_0`` of S_n whose last occurrences increase in the letter."""
    return tuple(a for b in range(1, n) for a in range(n - 1, b - 1, -1))


def schur_oracle(lam: Sequence[int], n: int) -> LaurentPolynomial:
    """Schur polynomial ``s_λ(x_1..x_n)`` by enumerating semistandard Young tableaux."""
    lam = _check_partition(lam)
    if len(lam) > n:
        return LaurentPolynomial.zero(n)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    out: dict[Exponents, int] = defaultdict(int)
    filling: dict[tuple[int, int], int] = {}

    def place(idx: int) -> None:
        if idx == len(cells):
            exps = [0] * n
            for v in filling.values():
                exps[v - 1] += 1
            out[tuple(exps)] += 1
            return
        r, c = cells[idx]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, n + 1):
            filling[(r, c)] = v
            place(idx + 1)
        filling.pop((r, c), None)

    place(0)
    return LaurentPolynomial(n, out)
