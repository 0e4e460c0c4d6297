"""Ladder operators, adjointness, charge conservation, exact application."""

import math

import pytest

from qk_eigenlab.fock import (
    FockVector,
    apply_exact_ladder,
    apply_exact_word,
    build_ladder_ops,
    commutator,
)
from qk_eigenlab.radicals import RadicalSum
from qk_eigenlab.scalars import ComplexRational


@pytest.fixture(scope="module")
def ops8():
    return build_ladder_ops(8)


def test_matrix_elements(ops8):
    assert ops8["a"].entry((0, 0), (1, 0)) == 1.0
    assert ops8["a"].entry((1, 0), (2, 0)) == math.sqrt(2)
    assert ops8["b"].entry((3, 0), (3, 1)) == 1.0
    # <2,2| a^dag b^dag |1,1> = sqrt(2) * sqrt(2)
    raise_pair = ops8["a_dag"] @ ops8["b_dag"]
    assert raise_pair.entry((2, 2), (1, 1)) == pytest.approx(2.0, rel=1e-12)


def test_adjointness_exact(ops8):
    assert ops8["a_dag"] == ops8["a"].adjoint()
    assert ops8["b_dag"] == ops8["b"].adjoint()
    assert ops8["a"] == ops8["a_dag"].adjoint()


def test_Q_diagonal(ops8):
    for (row, col), val in ops8["Q"].entries().items():
        assert row == col
        assert val == row[0] - row[1]


def test_charge_commutant_exactly_zero(ops8):
    assert commutator(ops8["K"], ops8["Q"]).is_zero()


def test_truncation_drops_raising_edge(ops8):
    # no entry may lead out of the lattice
    N = 8
    for (row, col) in ops8["a_dag"].entries():
        assert row[0] <= N and col[0] <= N
    assert ops8["a_dag"].entry((8, 0), (7, 0)) == math.sqrt(8)


def test_operator_apply_matches_exact_ladder():
    one = ComplexRational.of(1)
    exact = {(2, 1): RadicalSum.of(one), (0, 3): RadicalSum.of(one * 2)}
    vec = FockVector.from_exact(6, exact)
    ops = build_ladder_ops(6)
    for name in ("a", "b", "a_dag", "b_dag"):
        applied = ops[name].apply(vec)
        exact_applied = apply_exact_ladder(exact, name)
        for idx, amp in exact_applied.items():
            if max(idx) <= 6:
                assert applied.amplitude(idx) == pytest.approx(amp.to_complex(), rel=1e-12)


def test_exact_word_order():
    # ab acting on |2,1> gives sqrt(2*1) |1,0>; the word applies b first
    start = {(2, 1): RadicalSum.of(ComplexRational.of(1))}
    out = apply_exact_word(start, ["a", "b"])
    assert set(out) == {(1, 0)}
    assert out[(1, 0)] == RadicalSum.of(ComplexRational.of(1), 2)


def test_fock_vector_invariants():
    with pytest.raises(ValueError):
        FockVector(2, {(3, 0): 1.0})
    exact = {(1, 1): RadicalSum.of(ComplexRational.of(1, 0), 2)}
    vec = FockVector.from_exact(4, exact, prefactor=0.5)
    assert vec.amplitude((1, 1)) == pytest.approx(0.5 * math.sqrt(2))
    assert vec.exact_prefactor == 0.5


def test_inner_product():
    u = FockVector(3, {(0, 0): 1 + 1j, (1, 1): 2.0})
    v = FockVector(3, {(0, 0): 1j, (2, 2): 5.0})
    assert u.inner(v) == (1 - 1j) * 1j
    assert v.inner(u) == pytest.approx((u.inner(v)).conjugate())
