import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftwist import elim, kernels
from hopftwist.cyclo import ONE, ZERO, cyc, cyclotomic_poly, zeta
from hopftwist.errors import DimensionMismatch, OrderBoundExceeded, SingularMatrix
from hopftwist.kernels import _pure
from hopftwist.linalg import Matrix, map_order

BACKENDS = [pytest.param(_pure, id="python")]
try:
    from hopftwist.kernels import _ckernels

    BACKENDS.append(pytest.param(_ckernels, id="cython"))
except ImportError:  # extension not built
    pass


def naive_mulmod(a, b, phi):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    d = len(phi) - 1
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for t in range(d + 1):
                prod[k - d + t] -= c * phi[t]
    return (prod + [0] * d)[:d]


ints = st.integers(min_value=-10**6, max_value=10**6)
huge = st.integers(min_value=-10**30, max_value=10**30)


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([1, 4, 5, 8, 9, 12, 15]), data=st.data(), elems=st.sampled_from([ints, huge]))
def test_poly_mulmod_matches_naive(backend, n, data, elems):
    phi = list(cyclotomic_poly(n))
    d = len(phi) - 1
    a = data.draw(st.lists(elems, min_size=d, max_size=d))
    b = data.draw(st.lists(elems, min_size=d, max_size=d))
    assert list(backend.poly_mulmod(a, b, phi)) == naive_mulmod(a, b, phi)


@pytest.mark.parametrize("backend", BACKENDS)
def test_poly_reduce(backend):
    phi = list(cyclotomic_poly(4))
    # x^3 = -x mod x^2 + 1
    assert list(backend.poly_reduce([0, 0, 0, 1], phi)) == [0, -1]
    assert list(backend.poly_reduce([5], phi)) == [5, 0]


@pytest.mark.parametrize("backend", BACKENDS)
def test_matmul_matches_naive(backend):
    rng = random.Random(7)
    for n, scale in [(1, 10), (8, 10**3), (12, 10**12), (5, 10**40)]:
        phi = list(cyclotomic_poly(n))
        d = len(phi) - 1
        r, k, c = 3, 4, 2
        A = [[rng.randint(-scale, scale) for _ in range(d)] for _ in range(r * k)]
        B = [[rng.randint(-scale, scale) for _ in range(d)] for _ in range(k * c)]
        A[0] = [0] * d  # exercise the zero skip
        flatA = [x for v in A for x in v]
        flatB = [x for v in B for x in v]
        out = list(backend.matmul(flatA, flatB, r, k, c, phi))
        for i in range(r):
            for j in range(c):
                acc = [0] * d
                for t in range(k):
                    p = naive_mulmod(A[i * k + t], B[t * c + j], phi)
                    acc = [x + y for x, y in zip(acc, p)]
                assert out[(i * c + j) * d:(i * c + j + 1) * d] == acc


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")


def test_rref_and_nullspace_fractions():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    R, piv = elim.rref(rows, 3)
    assert piv == [0]
    ns = elim.nullspace(rows, 3, Fraction(0), Fraction(1))
    assert len(ns) == 2
    for v in ns:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0


def test_solve_and_inverse_fractions():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = elim.solve(A, [Fraction(3), Fraction(5)], Fraction(0))
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    inv = elim.inverse(A, Fraction(0), Fraction(1))
    assert inv == [[Fraction(3, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(2, 5)]]
    with pytest.raises(SingularMatrix):
        elim.inverse([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], Fraction(0), Fraction(1))
    with pytest.raises(SingularMatrix):
        elim.solve([[Fraction(1)], [Fraction(1)]], [Fraction(1), Fraction(2)], Fraction(0))


def test_matrix_product_and_inverse_cyclotomic():
    M = Matrix([[1, zeta(8)], ["1/2", cyc("i") - 1]])
    N = Matrix([[zeta(3), 0], [2, "-1/3"]])
    P = M @ N
    for i in range(2):
        for j in range(2):
            assert P[i, j] == sum((M[i, t] * N[t, j] for t in range(2)), ZERO)
    assert (M @ M.inverse()).is_identity()
    assert M.power(-2) @ M.power(2) == Matrix.identity(2)
    assert Matrix.identity(3).kron(Matrix([[2]])) == Matrix.identity(3).scale(2)
    assert M.transpose().transpose() == M
    assert (M + M) == M.scale(2)
    assert (M - M) == Matrix.zeros(2, 2)


def test_matrix_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2]]).apply((ONE,))


def test_nullspace_rank_trace():
    M = Matrix([[1, 1, 0], [0, 0, 0], [1, 1, 0]])
    assert M.rank() == 1
    assert len(M.nullspace()) == 2
    for v in M.nullspace():
        assert all(x == 0 for x in M.apply(v))
    assert M.trace() == 1


def test_map_order_examples():
    assert map_order(Matrix.identity(3), 5) == 1
    assert map_order(Matrix([[0, -1], [1, 0]]), 10) == 4
    assert map_order(Matrix([[zeta(5)]]), 10) == 5
    with pytest.raises(OrderBoundExceeded) as err:
        map_order(Matrix([[1, 1], [0, 1]]), 100)
    assert err.value.bound == 100
    assert "may be infinite" in str(err.value)
    with pytest.raises(OrderBoundExceeded):
        map_order(Matrix([[0, -1], [1, 0]]), 3)
