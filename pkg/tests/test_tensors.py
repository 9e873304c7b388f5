import pytest

from qorbits.scalars import QLaurent, quantum_integer, scalar_to_str
from qorbits.tensors import (
    TensorMatrix,
    check_hecke,
    check_trace_normalization,
    check_ybe,
    flip,
    hecke_symmetry,
    partial_quantum_trace,
    quantum_trace,
    standard_r,
    weight_matrix,
)


def test_r_matrix_n1_is_q():
    r = standard_r(1)
    assert r.entries == {(0, 0): QLaurent.q_power(1)}
    assert hecke_symmetry(1).entries == {(0, 0): QLaurent.q_power(1)}


def test_r_matrix_shape_n2():
    r = standard_r(2)
    q = QLaurent.q_power(1)
    one = QLaurent.one()
    assert r[(0, 0)] == q and r[(3, 3)] == q
    assert r[(1, 1)] == one and r[(2, 2)] == one
    hooks = [k for k in r.entries if k[0] != k[1]]
    assert len(hooks) == 1
    assert r[hooks[0]] == QLaurent({1: 1, -1: -1})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_r_matrix_nonzero_count(n):
    assert len(standard_r(n).entries) == n * n + n * (n - 1) // 2


def test_flip_squares_to_identity():
    for n in (2, 3):
        p = flip(n)
        assert p * p == TensorMatrix.identity(n)


def test_flip_satisfies_braid():
    ok, _ = check_ybe(flip(2))
    assert ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ybe(n):
    ok, witness = check_ybe(hecke_symmetry(n))
    assert ok, witness


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hecke_condition(n):
    ok, witness = check_hecke(hecke_symmetry(n))
    assert ok, witness


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_s_specializes_to_flip_at_q1(n):
    assert hecke_symmetry(n).eval_q1() == flip(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weight_normalizations(n):
    ok, witness = check_trace_normalization(n)
    assert ok, witness


def test_weight_matrix_values():
    assert [scalar_to_str(d) for d in weight_matrix(1).diag] == ["1"]
    d2 = weight_matrix(2)
    assert d2.trace() == quantum_integer(2)
    d3 = weight_matrix(3)
    # consecutive entries differ by the factor q^2 (geometric in q^-2 read backwards)
    for i in range(2):
        assert d3.diag[i] == d3.diag[i + 1] * QLaurent.q_power(-2)


def test_partial_trace_other_leg_differs():
    # the leg-1 contraction does not satisfy the normalization for n >= 2
    s = hecke_symmetry(2)
    d = weight_matrix(2)
    pt = partial_quantum_trace(s, d.diag, leg=1)
    q = QLaurent.q_power(1)
    assert any(pt.get((i, i)) != q for i in range(2))


def test_quantum_trace_basics():
    d = weight_matrix(2)
    one = QLaurent.one()
    zero = QLaurent.zero()
    assert quantum_trace(d, [[one, zero], [zero, one]]) == quantum_integer(2)
    assert quantum_trace(d, [[zero, zero], [zero, zero]]) == zero
    assert quantum_trace(d, [[one, zero], [zero, zero]]) == d.diag[0]
    with pytest.raises(ValueError):
        quantum_trace(d, [[one]])
