"""
Words, subwords and permutations of the symmetric group S_n.

Conventions used throughout the package:

* letters of a word lie in ``1..n-1`` and stand for simple transpositions
  ``s_i = (i, i+1)``;
* positions inside a word are 1-based, and a subword is a bitmask over
  positions (bit ``j-1`` set means position ``j`` is present);
* a permutation is stored in one-line notation over ``1..n`` and composition
  is ``(v * w)(r) = v(w(r))``;
* a column is a strictly increasing tuple of integers in ``1..n``.

>>> word = Word((1, 2, 1), 3)
>>> J = Subword.from_positions(word, [1, 2])
>>> apply_permutation(word_permutation(J), fundamental_column(2))
(2, 3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError, ShapeError

__all__ = [
    "Column", "Word", "Shape", "Subword", "Permutation",
    "fundamental_column", "is_column", "all_columns",
    "apply_permutation", "bruhat_leq", "bruhat_lt", "perm_bruhat_leq",
    "word_permutation", "is_reduced", "w_max", "column_up_to",
    "less_wrt_column", "parse_word", "format_word", "parse_subword",
    "format_subword", "parse_column", "format_column",
]

# a strictly increasing tuple of row indices in 1..n
Column = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    """An ambient word ``(i_1, ..., i_l)`` for ``GL(n)``."""
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.n < 1:
            raise PreconditionError(f"rank parameter n must be positive, got {self.n}")
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise PreconditionError(f"letter {a} outside [1, {self.n - 1}]")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, k: int) -> int:
        """Letter at 1-based position ``k``."""
        if not 1 <= k <= len(self.letters):
            raise PreconditionError(f"position {k} outside [1, {len(self.letters)}]")
        return self.letters[k - 1]

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class Shape:
    """A word together with column multiplicities ``m_1, ..., m_l``."""
    word: Word
    mult: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))
        if len(self.mult) != len(self.word):
            raise ShapeError(f"{len(self.mult)} multiplicities for a word of length {len(self.word)}")
        if any(m < 0 for m in self.mult):
            raise ShapeError(f"negative multiplicity in {self.mult}")

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def size(self) -> int:
        """Number of columns, ``|m|``."""
        return sum(self.mult)

    @property
    def length(self) -> int:
        """Number of entries of a tableau of this shape."""
        return sum(m * a for m, a in zip(self.mult, self.word.letters))

    def first_support(self) -> int | None:
        """Smallest position ``k`` with ``m_k > 0``, or ``None`` for ``m = 0``."""
        for k, m in enumerate(self.mult, start=1):
            if m:
                return k
        return None

    def minus_unit(self, k: int) -> Shape:
        """The shape with ``m - eps(k)``."""
        if self.mult[k - 1] == 0:
            raise ShapeError(f"m_{k} = 0 cannot be decremented")
        mult = list(self.mult)
        mult[k - 1] -= 1
        return Shape(self.word, tuple(mult))

    def slots(self) -> list[int]:
        """Position ``k`` of each column slot, in tableau order."""
        return [k for k, m in enumerate(self.mult, start=1) for _ in range(m)]


@dataclass(frozen=True)
class Subword:
    """A positional subword ``J ⊆ [l]`` of an ambient word, stored as a bitmask."""
    word: Word
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.word):
            raise PreconditionError(f"mask {self.mask:#b} not contained in [{len(self.word)}]")

    @classmethod
    def from_positions(cls, word: Word, positions: Iterable[int]) -> Subword:
        mask = 0
        for j in positions:
            if not 1 <= j <= len(word):
                raise PreconditionError(f"position {j} outside [1, {len(word)}]")
            mask |= 1 << (j - 1)
        return cls(word, mask)

    @classmethod
    def full(cls, word: Word) -> Subword:
        return cls(word, (1 << len(word)) - 1)

    @classmethod
    def empty(cls, word: Word) -> Subword:
        return cls(word, 0)

    @classmethod
    def all(cls, word: Word) -> Iterator[Subword]:
        """All ``2^l`` subwords, in increasing mask order."""
        for mask in range(1 << len(word)):
            yield cls(word, mask)

    def positions(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, len(self.word) + 1) if self.mask >> (j - 1) & 1)

    def letters(self) -> tuple[int, ...]:
        return tuple(self.word.letters[j - 1] for j in self.positions())

    def __contains__(self, j: int) -> bool:
        return 1 <= j <= len(self.word) and bool(self.mask >> (j - 1) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions())

    def _same_word(self, other: Subword) -> None:
        if self.word != other.word:
            raise PreconditionError("subwords of different ambient words")

    def up_to(self, k: int) -> Subword:
        """``J ∩ [k]``."""
        return Subword(self.word, self.mask & ((1 << max(k, 0)) - 1))

    def tail(self, k: int) -> Subword:
        """``J ∩ [k+1, l]``."""
        return Subword(self.word, self.mask & ~((1 << max(k, 0)) - 1))

    def issubset(self, other: Subword) -> bool:
        self._same_word(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: Subword) -> bool:
        return self.issubset(other)

    def __lt__(self, other: Subword) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __or__(self, other: Subword) -> Subword:
        self._same_word(other)
        return Subword(self.word, self.mask | other.mask)

    def __and__(self, other: Subword) -> Subword:
        self._same_word(other)
        return Subword(self.word, self.mask & other.mask)

    def __sub__(self, other: Subword) -> Subword:
        self._same_word(other)
        return Subword(self.word, self.mask & ~other.mask)

    def complement(self) -> Subword:
        return Subword.full(self.word) - self

    def subsets(self) -> Iterator[Subword]:
        """All ``J' ⊆ J`` (including ``J`` and the empty subword)."""
        sub = self.mask
        while True:
            yield Subword(self.word, sub)
            if sub == 0:
                return
            sub = (sub - 1) & self.mask

    def __str__(self) -> str:
        return format_subword(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation: ``images[r-1] = w(r)``."""
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PreconditionError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        """The transposition ``s_i = (i, i+1)``."""
        if not 1 <= i <= n - 1:
            raise PreconditionError(f"s_{i} undefined for n = {n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, r: int) -> int:
        return self.images[r - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (v * w)(r) = v(w(r))
        return Permutation(tuple(self.images[r - 1] for r in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for r, image in enumerate(self.images, start=1):
            inv[image - 1] = r
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def fundamental_column(i: int) -> Column:
    """``ω_i = (1, 2, ..., i)``."""
    return tuple(range(1, i + 1))


def is_column(kappa: Sequence[int], n: int) -> bool:
    return all(1 <= r <= n for r in kappa) and all(a < b for a, b in zip(kappa, kappa[1:]))


def all_columns(size: int, n: int) -> list[Column]:
    """All columns of the given size over ``1..n``, in lex order."""
    from itertools import combinations
    return [tuple(c) for c in combinations(range(1, n + 1), size)]


def apply_permutation(w: Permutation, kappa: Column) -> Column:
    """``w · κ``: the increasing rearrangement of ``(w(r_1), ..., w(r_i))``."""
    return tuple(sorted(w.images[r - 1] for r in kappa))


def bruhat_leq(kappa: Column, other: Column) -> bool:
    """Elementwise comparison of two columns of equal size."""
    if len(kappa) != len(other):
        raise ShapeError(f"columns of sizes {len(kappa)} and {len(other)} are incomparable")
    return all(a <= b for a, b in zip(kappa, other))


def bruhat_lt(kappa: Column, other: Column) -> bool:
    return kappa != other and bruhat_leq(kappa, other)


def perm_bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """Bruhat order on S_n via the tableau criterion ``v·ω_i ≤ w·ω_i`` for all i."""
    return all(
        bruhat_leq(apply_permutation(v, fundamental_column(i)), apply_permutation(w, fundamental_column(i)))
        for i in range(1, v.n)
    )


def word_permutation(J: Subword) -> Permutation:
    """``w(J)``, the product of ``s_{i_j}`` over ``j ∈ J`` in increasing order."""
    n = J.word.n
    images = list(range(1, n + 1))
    # right-multiplying by s_a swaps the images of a and a+1
    for a in J.letters():
        images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def is_reduced(J: Subword) -> bool:
    return word_permutation(J).length() == len(J)


def w_max(J: Subword) -> Permutation:
    """
    Bruhat-maximal permutation generated by the reduced subwords of ``J``.

    Computed as the left-to-right Demazure product: a letter is absorbed only
    when it lengthens the running product.
    """
    n = J.word.n
    images = list(range(1, n + 1))
    for a in J.letters():
        # w * s_a is longer than w iff w(a) < w(a+1)
        if images[a - 1] < images[a]:
            images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def column_up_to(J: Subword, k: int, flavor: str = "nest") -> Column:
    """
    Column generated by ``J`` up to position ``k``.

    ``flavor="nest"`` gives ``w(J∩[k])·ω_{i_k}``; ``flavor="max"`` gives
    ``w_max(J∩[k])·ω_{i_k}``.
    """
    if not 1 <= k <= len(J.word):
        raise PreconditionError(f"position {k} outside [1, {len(J.word)}]")
    prefix = J.up_to(k)
    if flavor == "nest":
        w = word_permutation(prefix)
    elif flavor == "max":
        w = w_max(prefix)
    else:
        raise PreconditionError(f"unknown column flavor {flavor!r}")
    return apply_permutation(w, fundamental_column(J.word[k]))


def less_wrt_column(J_prime: Subword, J: Subword, k: int) -> bool:
    """``J' <_k J``: strict containment and a strictly smaller maximal k-th column."""
    if not J_prime < J:
        return False
    return bruhat_lt(column_up_to(J_prime, k, "max"), column_up_to(J, k, "max"))


# textual forms

def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in re.split(r"\s*,\s*", text)]
    except ValueError as exc:
        raise PreconditionError(f"cannot parse integer list {text!r}") from exc


def parse_word(text: str, n: int) -> Word:
    return Word(tuple(_int_list(text)), n)


def format_word(word: Word) -> str:
    return ",".join(map(str, word.letters))


def parse_subword(text: str, word: Word) -> Subword:
    """Parse ``"{1,3}"`` (braces optional) into a subword of ``word``."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    return Subword.from_positions(word, _int_list(body))


def format_subword(J: Subword) -> str:
    return "{" + ",".join(map(str, J.positions())) + "}"


def parse_column(text: str) -> Column:
    return tuple(_int_list(text))


def format_column(kappa: Column) -> str:
    return ",".join(map(str, kappa))
