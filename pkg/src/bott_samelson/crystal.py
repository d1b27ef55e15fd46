"""
Tableaux and the root operators ``f_i`` (lowering) and ``e_i`` (raising).

A tableau is a plain tuple of entries in ``1..n``; concatenation is tuple
addition and the empty tableau is ``()``.  The null symbol is ``None``: every
operator that can fail returns ``Tableau | None``, and :func:`concat` absorbs
``None`` on either side.

The pairing rule is evaluated in one left-to-right pass.  Only entries equal
to ``i`` or ``i+1`` matter; an ``i+1`` cancels the most recent unmatched ``i``.
What survives is a run of unmatched ``i+1``'s followed by unmatched ``i``'s.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import PreconditionError, ShapeError

__all__ = [
    "Tableau", "MaybeTableau", "NULL", "concat", "power", "lower", "raise_",
    "lower_power", "raise_power", "string", "demazure_set",
    "concat_lower_law", "concat_raise_law", "concat_raise_closed_form", "canonical_key", "canonical_sorted",
    "split_columns", "parse_tableau", "format_tableau", "EMPTY_SYMBOL",
]

Tableau = tuple[int, ...]
MaybeTableau = Optional[Tableau]

NULL = None
EMPTY_SYMBOL = "∅"


def concat(*parts: Tableau | None) -> Tableau | None:
    """``τ ⋆ τ' ⋆ ...``; any null factor makes the whole product null."""
    out: Tableau = ()
    for part in parts:
        if part is None:
            return None
        out += part
    return out


def power(kappa: Tableau, m: int) -> Tableau:
    """``κ^{⋆m}``."""
    return tuple(kappa) * m


def _surviving(i: int, tau: Tableau) -> tuple[list[int], list[int]]:
    """Positions of the unmatched ``i+1``'s and the unmatched ``i``'s."""
    up = i + 1
    opened: list[int] = []
    closed: list[int] = []
    if i not in tau and up not in tau:
        return closed, opened
    for pos, r in enumerate(tau):
        if r == i:
            opened.append(pos)
        elif r == up:
            if opened:
                opened.pop()
            else:
                closed.append(pos)
    return closed, opened


def lower(i: int, tau: Tableau | None) -> Tableau | None:
    """``f_i``: turn the leftmost surviving ``i`` into ``i+1``."""
    if tau is None:
        return None
    if i < 1:
        raise PreconditionError(f"root operator index {i} must be positive")
    _, opened = _surviving(i, tau)
    if not opened:
        return None
    p = opened[0]
    return tau[:p] + (i + 1,) + tau[p + 1:]


def raise_(i: int, tau: Tableau | None) -> Tableau | None:
    """``e_i``: turn the rightmost surviving ``i+1`` into ``i``."""
    if tau is None:
        return None
    if i < 1:
        raise PreconditionError(f"root operator index {i} must be positive")
    closed, _ = _surviving(i, tau)
    if not closed:
        return None
    p = closed[-1]
    return tau[:p] + (i,) + tau[p + 1:]


def lower_power(i: int, tau: Tableau | None, a: int) -> Tableau | None:
    for _ in range(a):
        tau = lower(i, tau)
        if tau is None:
            return None
    return tau


def raise_power(i: int, tau: Tableau | None, a: int) -> Tableau | None:
    for _ in range(a):
        tau = raise_(i, tau)
        if tau is None:
            return None
    return tau


def string(i: int, tau: Tableau) -> list[Tableau]:
    """The ``i``-string through ``τ``, ordered from head to tail."""
    head = tau
    while (up := raise_(i, head)) is not None:
        head = up
    out = [head]
    while (down := lower(i, out[-1])) is not None:
        out.append(down)
    return out


def demazure_set(i: int, tableaux: Iterable[Tableau]) -> frozenset[Tableau]:
    """Plactic Demazure operator: close a set of tableaux under ``f_i``."""
    out: set[Tableau] = set()
    for tau in tableaux:
        while tau is not None and tau not in out:
            out.add(tau)
            tau = lower(i, tau)
    return frozenset(out)


def concat_lower_law(i: int, kappa: Tableau, rest: Tableau, a: int) -> Tableau | None:
    """
    ``f_i^a(κ ⋆ τ')`` evaluated through the column splitting law.

    Valid when ``κ`` is a column; agrees with iterating :func:`lower` on the
    concatenation.
    """
    if a < 1:
        raise PreconditionError("the splitting law needs a >= 1")
    f_kappa = lower(i, kappa)
    if f_kappa is not None and raise_(i, rest) is None:
        return concat(f_kappa, lower_power(i, rest, a - 1))
    return concat(kappa, lower_power(i, rest, a))


def concat_raise_law(i: int, kappa: Tableau, rest: Tableau, a: int) -> Tableau | None:
    """
    ``e_i^a(κ ⋆ τ')`` evaluated through the dual splitting law.

    One raise acts on ``τ'`` exactly when ``f_i κ = null and e_i τ' ≠ null``
    or ``e_i^2 τ' ≠ null``, and on ``κ`` otherwise.  The closed two-case form
    only holds for ``a = 1`` (e.g. ``i=4, κ=1234, τ'=55, a=2``), so the
    one-step rule is applied ``a`` times, re-splitting after each step.
    """
    if a < 1:
        raise PreconditionError("the splitting law needs a >= 1")
    for _ in range(a):
        e_rest = raise_(i, rest)
        if (lower(i, kappa) is None and e_rest is not None) or raise_(i, e_rest) is not None:
            rest = e_rest
        else:
            kappa = raise_(i, kappa)
            if kappa is None:
                return None
    return concat(kappa, rest)


def concat_raise_closed_form(i: int, kappa: Tableau, rest: Tableau, a: int) -> Tableau | None:
    """The two-case closed form ``κ ⋆ e_i^a τ'`` / ``e_i κ ⋆ e_i^{a-1} τ'``; exact for ``a = 1``."""
    e_rest = raise_(i, rest)
    if (lower(i, kappa) is None and e_rest is not None) or raise_(i, e_rest) is not None:
        return concat(kappa, raise_power(i, rest, a))
    return concat(raise_(i, kappa), raise_power(i, rest, a - 1))


def canonical_key(tau: Tableau) -> tuple[int, Tableau]:
    return (len(tau), tau)


def canonical_sorted(tableaux: Iterable[Tableau]) -> list[Tableau]:
    """Sort by length, then lexicographically on entries."""
    return sorted(set(tableaux), key=canonical_key)


# textual forms

def split_columns(tau: Tableau, sizes: Sequence[int]) -> list[Tableau]:
    """Cut ``τ`` into consecutive pieces of the given sizes."""
    if len(tau) != sum(sizes):
        raise ShapeError(f"tableau of length {len(tau)} does not fit column sizes {tuple(sizes)}")
    out, pos = [], 0
    for size in sizes:
        out.append(tuple(tau[pos:pos + size]))
        pos += size
    return out


def parse_tableau(text: str) -> Tableau:
    """
    Parse ``"2*2,3*1"`` (columns joined by ``*``) or a flat ``"2,2,3,1"``.

    ``"∅"``, ``"()"`` and the empty string denote the empty tableau.
    """
    body = text.strip()
    if body in ("", EMPTY_SYMBOL, "()", "empty"):
        return ()
    entries: list[int] = []
    for column in body.split("*"):
        for tok in column.split(","):
            tok = tok.strip()
            if not tok:
                raise PreconditionError(f"empty entry in tableau {text!r}")
            try:
                entries.append(int(tok))
            except ValueError as exc:
                raise PreconditionError(f"cannot parse tableau {text!r}") from exc
    return tuple(entries)


def format_tableau(tau: Tableau | None, sizes: Sequence[int] | None = None) -> str:
    """Inverse of :func:`parse_tableau`; with ``sizes`` the columns are starred."""
    if tau is None:
        return "O"
    if not tau:
        return EMPTY_SYMBOL
    if sizes is None:
        return ",".join(map(str, tau))
    return "*".join(",".join(map(str, col)) for col in split_columns(tau, sizes) if col)
