"""
Standard tableaux of shape ``(i, m)`` with respect to a subword ``J``.

Two independent constructions are provided:

* :func:`generate_constructible` evaluates the nested expression
  ``Λ^{δ_1}_{i_1}(ω_{i_1}^{⋆m_1} ⋆ Λ^{δ_2}_{i_2}(... ))`` right to left,
  where ``δ_k = 1`` iff ``k ∈ J``;
* :func:`generate_liftable` enumerates reduced nests of subwords under ``J``
  and collects the tableaux they generate.

They agree on every input (this is checked by the test suite), but the second
one is exponential and only meant as an oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import crystal
from .crystal import Tableau, canonical_sorted, demazure_set, lower_power, raise_
from .errors import HypothesisViolation, PreconditionError, ResourceBoundExceeded, ShapeError
from .weyl import (
    Column, Shape, Subword, column_up_to, fundamental_column,
    is_column, less_wrt_column, w_max, word_permutation,
)

__all__ = [
    "DEFAULT_MAX_L", "StandardSet", "ReducedNest", "StandardnessResult",
    "shape_columns", "validate_tableau", "generate_constructible",
    "generate_constructible_all", "generate_liftable", "generate_liftable_all",
    "find_lifting", "is_standard", "reconstruct", "check_recursion",
    "recursion_rhs", "check_headstring", "check_tail_invariance",
    "all_tableaux_of_shape",
]

DEFAULT_MAX_L = 12


@dataclass(frozen=True)
class StandardSet:
    """A canonically ordered, duplicate-free set of tableaux of one shape."""
    shape: Shape
    ambient: Subword
    tableaux: tuple[Tableau, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tableaux", tuple(canonical_sorted(self.tableaux)))
        object.__setattr__(self, "_members", frozenset(self.tableaux))

    @classmethod
    def build(cls, shape: Shape, ambient: Subword, tableaux: Iterable[Tableau]) -> StandardSet:
        return cls(shape, ambient, tuple(tableaux))

    def __len__(self) -> int:
        return len(self.tableaux)

    def __iter__(self) -> Iterator[Tableau]:
        return iter(self.tableaux)

    def __contains__(self, tau) -> bool:
        return tau in self._members

    def as_set(self) -> frozenset[Tableau]:
        return self._members

    def column_sizes(self) -> list[int]:
        return [self.shape.word[k] for k in self.shape.slots()]

    def format_lines(self) -> list[str]:
        sizes = self.column_sizes()
        return [crystal.format_tableau(tau, sizes) for tau in self.tableaux]

    def to_json(self) -> dict:
        return {
            "word": list(self.shape.word.letters),
            "mult": list(self.shape.mult),
            "n": self.shape.n,
            "subword": list(self.ambient.positions()),
            "tableaux": self.format_lines(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def shape_columns(shape: Shape) -> list[tuple[int, Column]]:
    """``(k, ω_{i_k})`` for each column slot of the shape, in tableau order."""
    return [(k, fundamental_column(shape.word[k])) for k in shape.slots()]


def validate_tableau(tau: Tableau, shape: Shape) -> list[Column]:
    """Split ``τ`` into the columns of ``shape``; raise ShapeError if it does not fit."""
    sizes = [shape.word[k] for k in shape.slots()]
    columns = crystal.split_columns(tuple(tau), sizes)
    for col in columns:
        if not is_column(col, shape.n):
            raise ShapeError(f"{col} is not a column over 1..{shape.n}")
    return columns


def all_tableaux_of_shape(shape: Shape) -> Iterator[Tableau]:
    """Every tableau of the shape (columns chosen independently)."""
    from itertools import product
    from .weyl import all_columns
    pools = [all_columns(shape.word[k], shape.n) for k in shape.slots()]
    for cols in product(*pools):
        yield sum(cols, ())


def _check_ambient(J: Subword, shape: Shape) -> None:
    if J.word != shape.word:
        raise ShapeError("subword and shape refer to different ambient words")


# constructible tableaux C(J, m)

def _constructible(J: Subword, shape: Shape) -> frozenset[Tableau]:
    letters, mult = shape.word.letters, shape.mult
    current: frozenset[Tableau] = frozenset({()})
    for k in range(len(letters), 0, -1):
        a = letters[k - 1]
        if mult[k - 1]:
            prefix = fundamental_column(a) * mult[k - 1]
            current = frozenset(prefix + tau for tau in current)
        if k in J:
            current = demazure_set(a, current)
    return current


def generate_constructible(J: Subword, shape: Shape) -> StandardSet:
    """``C(J, m)`` by the right-to-left Demazure/concatenation recursion."""
    _check_ambient(J, shape)
    return StandardSet.build(shape, J, _constructible(J, shape))


def generate_constructible_all(shape: Shape) -> dict[Subword, StandardSet]:
    """``C(J, m)`` for every ``J ⊆ [l]``, sharing the common suffix computations."""
    word = shape.word
    letters, mult = word.letters, shape.mult
    out: dict[Subword, StandardSet] = {}

    def descend(k: int, mask: int, current: frozenset[Tableau]) -> None:
        if k == 0:
            J = Subword(word, mask)
            out[J] = StandardSet.build(shape, J, current)
            return
        a = letters[k - 1]
        if mult[k - 1]:
            prefix = fundamental_column(a) * mult[k - 1]
            current = frozenset(prefix + tau for tau in current)
        descend(k - 1, mask, current)
        descend(k - 1, mask | 1 << (k - 1), demazure_set(a, current))

    descend(len(letters), 0, frozenset({()}))
    return out


# liftable-standard tableaux T(J, m)

class _NestOracle:
    """Memoized enumeration of reduced nests for one shape."""

    def __init__(self, shape: Shape, max_l: int):
        if len(shape.word) > max_l:
            raise ResourceBoundExceeded(
                f"nest enumeration limited to l <= {max_l}, word has length {len(shape.word)}")
        self.shape = shape
        self.word = shape.word
        self.slots = shape.slots()
        self._reduced: dict[int, bool] = {}
        self._column: dict[tuple[int, int], Column] = {}
        self._under: dict[tuple[int, int], frozenset[Tableau]] = {}

    def reduced_prefix(self, mask: int, k: int) -> bool:
        key = mask & ((1 << k) - 1)
        hit = self._reduced.get(key)
        if hit is None:
            J = Subword(self.word, key)
            hit = self._reduced[key] = word_permutation(J).length() == len(J)
        return hit

    def column(self, mask: int, k: int) -> Column:
        key = (mask & ((1 << k) - 1), k)
        hit = self._column.get(key)
        if hit is None:
            hit = self._column[key] = column_up_to(Subword(self.word, key[0]), k, "nest")
        return hit

    def under(self, mask: int, s: int) -> frozenset[Tableau]:
        """Tableaux of slots ``s..`` generated by reduced nests whose first member is ``⊆ mask``."""
        if s == len(self.slots):
            return frozenset({()})
        key = (mask, s)
        hit = self._under.get(key)
        if hit is not None:
            return hit
        found: set[Tableau] = set()
        k = self.slots[s]
        # nests whose slot-s subword is exactly `mask`
        if self.reduced_prefix(mask, k):
            col = self.column(mask, k)
            found.update(col + tau for tau in self.under(mask, s + 1))
        # nests whose slot-s subword is a proper subset of `mask`
        bits = mask
        while bits:
            low = bits & -bits
            found.update(self.under(mask & ~low, s))
            bits ^= low
        hit = self._under[key] = frozenset(found)
        return hit

    def lifting(self, columns: list[Column], mask: int, s: int, dead: set) -> list[int] | None:
        """One chain of masks generating ``columns[s:]`` under ``mask``, or None."""
        if s == len(self.slots):
            return []
        if (mask, s) in dead:
            return None
        k = self.slots[s]
        for sub in Subword(self.word, mask).subsets():
            if not self.reduced_prefix(sub.mask, k) or self.column(sub.mask, k) != columns[s]:
                continue
            rest = self.lifting(columns, sub.mask, s + 1, dead)
            if rest is not None:
                return [sub.mask] + rest
        dead.add((mask, s))
        return None


def generate_liftable(J: Subword, shape: Shape, max_l: int = DEFAULT_MAX_L) -> StandardSet:
    """``T(J, m)`` by brute-force enumeration of reduced nests under ``J``."""
    _check_ambient(J, shape)
    oracle = _NestOracle(shape, max_l)
    return StandardSet.build(shape, J, oracle.under(J.mask, 0))


def generate_liftable_all(shape: Shape, max_l: int = DEFAULT_MAX_L) -> dict[Subword, StandardSet]:
    oracle = _NestOracle(shape, max_l)
    return {J: StandardSet.build(shape, J, oracle.under(J.mask, 0)) for J in Subword.all(shape.word)}


@dataclass(frozen=True)
class ReducedNest:
    """A decreasing chain of subwords, one per column slot of the shape."""
    shape: Shape
    subwords: tuple[Subword, ...]

    def __post_init__(self):
        slots = self.shape.slots()
        if len(self.subwords) != len(slots):
            raise ShapeError(f"{len(self.subwords)} subwords for {len(slots)} column slots")
        for a, b in zip(self.subwords, self.subwords[1:]):
            if not b <= a:
                raise PreconditionError(f"{b} is not contained in {a}")
        for J, k in zip(self.subwords, slots):
            prefix = J.up_to(k)
            if word_permutation(prefix).length() != len(prefix):
                raise PreconditionError(f"{J} ∩ [{k}] is not reduced")

    def tableau(self) -> Tableau:
        return sum((column_up_to(J, k, "nest") for J, k in zip(self.subwords, self.shape.slots())), ())

    def __str__(self) -> str:
        return " ⊇ ".join(map(str, self.subwords)) if self.subwords else EMPTY_NEST


EMPTY_NEST = "(empty nest)"


def find_lifting(tau: Tableau, shape: Shape, J: Subword | None = None,
                 max_l: int = DEFAULT_MAX_L) -> ReducedNest | None:
    """A reduced nest under ``J`` (default ``[l]``) generating ``τ``, or None."""
    columns = validate_tableau(tau, shape)
    J = Subword.full(shape.word) if J is None else J
    _check_ambient(J, shape)
    oracle = _NestOracle(shape, max_l)
    masks = oracle.lifting(columns, J.mask, 0, set())
    if masks is None:
        return None
    return ReducedNest(shape, tuple(Subword(shape.word, m) for m in masks))


# standardness test

@dataclass(frozen=True)
class StandardnessResult:
    standard: bool
    witness: tuple[int, ...] | None = None
    residual: Tableau | None = None
    stuck_at: int | None = None

    def __bool__(self) -> bool:
        return self.standard


def is_standard(tau: Tableau, shape: Shape, J: Subword | None = None) -> StandardnessResult:
    """
    Decide ``τ ∈ C(J, m)`` by undoing the generation steps.

    At position ``k`` (left to right) raise with ``e_{i_k}`` as far as possible
    (only when ``k ∈ J``), then strip the prefix ``ω_{i_k}^{⋆m_k}``.  The raise
    counts form the witness; on failure the tableau left when stripping fails
    is returned as the residual.
    """
    validate_tableau(tau, shape)
    J = Subword.full(shape.word) if J is None else J
    _check_ambient(J, shape)
    current = tuple(tau)
    witness = []
    for k, (a, m) in enumerate(zip(shape.word.letters, shape.mult), start=1):
        count = 0
        if k in J:
            while (up := raise_(a, current)) is not None:
                current = up
                count += 1
        witness.append(count)
        prefix = fundamental_column(a) * m
        if current[:len(prefix)] != prefix:
            return StandardnessResult(False, residual=current, stuck_at=k)
        current = current[len(prefix):]
    if current:
        return StandardnessResult(False, residual=current, stuck_at=len(shape.word))
    return StandardnessResult(True, witness=tuple(witness))


def reconstruct(witness: tuple[int, ...], shape: Shape) -> Tableau | None:
    """``f_{i_1}^{a_1}(ω^{⋆m_1} ⋆ f_{i_2}^{a_2}(... ))`` for raise counts ``a``."""
    current: Tableau | None = ()
    for k in range(len(shape.word), 0, -1):
        a = shape.word[k]
        current = crystal.concat(fundamental_column(a) * shape.mult[k - 1], current)
        current = lower_power(a, current, witness[k - 1])
    return current


# structural checks

def recursion_rhs(J: Subword, shape: Shape) -> tuple[frozenset[Tableau], list[frozenset[Tableau]]]:
    """
    The two sides of the column-k recursion, built from independent calls.

    Returns ``(κ_max ⋆ C(J, m-ε(k)), [C(J', m) for J' <_k J])``.
    """
    k = shape.first_support()
    if k is None:
        raise PreconditionError("the recursion needs m != 0")
    kmax = column_up_to(J, k, "max")
    head = frozenset(kmax + tau for tau in _constructible(J, shape.minus_unit(k)))
    smaller = [_constructible(Jp, shape) for Jp in J.subsets() if less_wrt_column(Jp, J, k)]
    return head, smaller


def check_recursion(J: Subword, shape: Shape) -> bool:
    """``C(J,m) = κ_max ⋆ C(J,m-ε(k)) ⊔ ⋃_{J' <_k J} C(J',m)``, disjointness included."""
    _check_ambient(J, shape)
    head, smaller = recursion_rhs(J, shape)
    union = frozenset().union(*smaller)
    if head & union:
        return False
    return _constructible(J, shape) == head | union


def check_headstring(tableaux: Iterable[Tableau], n: int) -> bool:
    """Every ``i``-string meets the set either entirely or exactly in its head."""
    members = frozenset(tableaux)
    for i in range(1, n):
        seen: set[Tableau] = set()
        for tau in members:
            if tau in seen:
                continue
            chain = crystal.string(i, tau)
            inside = [s for s in chain if s in members]
            seen.update(inside)
            if len(inside) == len(chain):
                continue
            if len(inside) == 1 and inside[0] == chain[0]:
                continue
            return False
    return True


def check_tail_invariance(J: Subword, J_prime: Subword, shape: Shape, k: int,
                          max_l: int = DEFAULT_MAX_L) -> bool:
    """
    ``T(J, m) = T(J', m)`` when the tails after ``k`` coincide and the prefixes
    up to ``k`` share ``w_max``.  Raises HypothesisViolation if they do not.
    """
    _check_ambient(J, shape)
    _check_ambient(J_prime, shape)
    if any(shape.mult[:k - 1]):
        raise HypothesisViolation(f"m must be supported on [{k}, l], got {shape.mult}")
    if J.tail(k) != J_prime.tail(k):
        raise HypothesisViolation(f"{J} and {J_prime} differ after position {k}")
    if w_max(J.up_to(k)) != w_max(J_prime.up_to(k)):
        raise HypothesisViolation(f"w_max of {J} and {J_prime} up to {k} differ")
    oracle = _NestOracle(shape, max_l)
    return oracle.under(J.mask, 0) == oracle.under(J_prime.mask, 0)
