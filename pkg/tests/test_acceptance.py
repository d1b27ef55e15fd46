"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is printed in the summary."""

import io
import time

import pytest

from bott_samelson.charpoly import (
    LaurentPolynomial, demazure_character, divided_difference, key_shape, longest_word, schur_oracle,
)
from bott_samelson.cli import main
from bott_samelson.crystal import lower, lower_power, raise_, raise_power
from bott_samelson.geometry import certify_independence
from bott_samelson.standard import generate_constructible, generate_liftable, is_standard, reconstruct
from bott_samelson.sweep import SweepBounds, run_sweep
from bott_samelson.weyl import Shape, Subword, Word, all_columns
from conftest import ACCEPTANCE_LINES

W121 = Word((1, 2, 1), 3)
S111 = Shape(W121, (1, 1, 1))


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    report = run_sweep(SweepBounds())
    return report, time.perf_counter() - start


def test_criterion_01_running_example():
    expected = "".join(line + "\n" for line in [
        "1*1,2*1", "1*1,2*2", "1*1,3*1", "1*1,3*2", "1*1,3*3",
        "2*1,2*1", "2*1,2*2", "2*1,3*1", "2*1,3*2", "2*1,3*3",
        "2*2,3*1", "2*2,3*2", "2*2,3*3",
    ])
    start = time.perf_counter()
    out = io.StringIO()
    code = main(["generate", "--word", "1,2,1", "--mult", "1,1,1", "--n", "3"], out)
    elapsed = time.perf_counter() - start
    ok = code == 0 and out.getvalue() == expected and elapsed < 1.0
    record(1, ok, f"{len(out.getvalue().splitlines())} tableaux, byte-exact={out.getvalue() == expected}, {elapsed:.3f}s")


def test_criterion_02_root_operator_chain():
    tau = (1, 2, 2, 1, 3, 2, 1, 4, 2, 2, 3, 3)
    chain = [lower_power(2, tau, a) for a in (1, 2, 3)]
    expected = [(1, 3, 2, 1, 3, 2, 1, 4, 2, 2, 3, 3), (1, 3, 2, 1, 3, 3, 1, 4, 2, 2, 3, 3), None]
    ok = chain == expected and lower(2, chain[1]) is None
    record(2, ok, f"f2 chain {chain}")


def test_criterion_03_divided_difference():
    lhs = divided_difference(2, LaurentPolynomial.monomial((2, 2, 1)))
    x = [LaurentPolynomial.variable(i, 3) for i in (1, 2, 3)]
    rhs = x[0] ** 2 * x[1] * x[2] * (x[1] + x[2])
    record(3, lhs == rhs, f"Λ2(x1^2*x2^2*x3) = {lhs}")


def test_criterion_04_standardness_test():
    rejected = is_standard((2, 1, 2, 3), S111)
    accepted = is_standard((2, 2, 3, 1), S111)
    ok = (not rejected and rejected.residual == (3,)
          and accepted and reconstruct(accepted.witness, S111) == (2, 2, 3, 1))
    record(4, ok, f"2123 residual {rejected.residual}, 2*23*1 witness {accepted.witness}")


def test_criterion_05_oracle_equivalence(sweep):
    report, elapsed = sweep
    ok = report.ok("liftable_mismatch") and report.cases > 0
    record(5, ok, f"{report.cases} (shape, J) cases over {report.shapes} shapes, "
                  f"{len(report.liftable_mismatch)} mismatches, sweep {elapsed:.0f}s")


def test_criterion_06_character_equality(sweep):
    report, _ = sweep
    ok = report.ok("character_mismatch", "dimension_mismatch") and report.cases > 0
    record(6, ok, f"{report.cases} cases, {len(report.character_mismatch)} character and "
                  f"{len(report.dimension_mismatch)} dimension mismatches")


def test_criterion_07_rank_certificate():
    full = Subword.full(W121)
    T = generate_constructible(full, S111)
    ok1, rank1, seed1 = certify_independence(T.tableaux, S111, [full], 20, 0, reseeds=3)
    union_shape = Shape(W121, (0, 0, 1))
    parts = [Subword.from_positions(W121, (1,)), Subword.from_positions(W121, (3,))]
    ok2, rank2, seed2 = certify_independence([(1,), (2,)], union_shape, parts, 20, 0, reseeds=3)
    ok = ok1 and rank1 == 13 and ok2 and rank2 == 2
    record(7, ok, f"rank {rank1}/13 (seed {seed1}); union rank {rank2}/2 (seed {seed2})")


def test_criterion_08_schur_and_key():
    shape = key_shape(longest_word(3), (2, 1), 3)
    char = demazure_character(Subword.full(shape.word), shape)
    schur = schur_oracle((2, 1), 3)
    key = Shape(Word((3, 2, 3), 4), (0, 2, 1))
    key_dim = demazure_character(Subword.full(key.word), key).at_ones()
    lifted = len(generate_liftable(Subword.full(key.word), key))
    ok = char == schur and char.at_ones() == 8 and key_dim == lifted
    record(8, ok, f"s_21 dimension {char.at_ones()}, key character {key_dim} vs {lifted} liftable")


def test_criterion_09_head_string(sweep):
    report, _ = sweep
    ok = report.ok("headstring_failure") and report.cases > 0
    record(9, ok, f"{report.cases} generated sets, {len(report.headstring_failure)} failures")


def test_criterion_10_column_facts():
    checked = 0
    bad = []
    for n in range(2, 7):
        for size in range(1, n + 1):
            for kappa in all_columns(size, n):
                for i in range(1, n):
                    checked += 1
                    if (lower_power(i, kappa, 2) is not None or raise_power(i, kappa, 2) is not None
                            or (lower(i, kappa) is not None and raise_(i, kappa) is not None)):
                        bad.append((n, kappa, i))
    record(10, not bad, f"{checked} (column, i) pairs, {len(bad)} violations")
