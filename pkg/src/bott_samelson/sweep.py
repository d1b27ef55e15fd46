"""
Desk-scale sweeps over words, subwords and multiplicities.

Each shape is checked for every ``J ⊆ [l]`` at once, so suffix computations
are shared between subwords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from . import charpoly, standard
from .weyl import Shape, Word


@dataclass(frozen=True)
class SweepBounds:
    max_l: int = 5
    max_n: int = 4
    max_entry: int = 2
    max_total: int = 4
    min_n: int = 2


@dataclass
class SweepReport:
    shapes: int = 0
    cases: int = 0
    liftable_mismatch: list = field(default_factory=list)
    character_mismatch: list = field(default_factory=list)
    dimension_mismatch: list = field(default_factory=list)
    headstring_failure: list = field(default_factory=list)

    def ok(self, *kinds: str) -> bool:
        kinds = kinds or ("liftable_mismatch", "character_mismatch", "dimension_mismatch", "headstring_failure")
        return all(not getattr(self, kind) for kind in kinds)


def iter_shapes(bounds: SweepBounds = SweepBounds()) -> Iterator[Shape]:
    for n in range(bounds.min_n, bounds.max_n + 1):
        for l in range(bounds.max_l + 1):
            for letters in itertools.product(range(1, n), repeat=l):
                word = Word(letters, n)
                for mult in itertools.product(range(bounds.max_entry + 1), repeat=l):
                    if sum(mult) <= bounds.max_total:
                        yield Shape(word, mult)


def check_shape(shape: Shape, report: SweepReport, *, liftable: bool = True,
                characters: bool = True, headstring: bool = True) -> None:
    constructible = standard.generate_constructible_all(shape)
    lifted = standard.generate_liftable_all(shape) if liftable else None
    chars = charpoly.demazure_character_all(shape) if characters else None
    report.shapes += 1
    for J, C in constructible.items():
        report.cases += 1
        tag = (shape.word.letters, shape.mult, shape.n, J.positions())
        if lifted is not None and lifted[J].as_set() != C.as_set():
            report.liftable_mismatch.append(tag)
        if chars is not None:
            if charpoly.set_character(C, shape.n) != chars[J]:
                report.character_mismatch.append(tag)
            if chars[J].at_ones() != len(C):
                report.dimension_mismatch.append(tag)
        if headstring and not standard.check_headstring(C, shape.n):
            report.headstring_failure.append(tag)


def run_sweep(bounds: SweepBounds = SweepBounds(), **checks) -> SweepReport:
    report = SweepReport()
    for shape in iter_shapes(bounds):
        check_shape(shape, report, **checks)
    return report
