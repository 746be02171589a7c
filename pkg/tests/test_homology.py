import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pborel.corpus import RP2_TRIPLES
from pborel.homology import GF, QQ, FieldSpec, SimplicialComplex, boundary_matrix, field_rank, reduced_homology_dims

from oracles import reduced_homology, sympy_rank

RP2_FACETS = [
    f for f in combinations(range(6), 3) if tuple(v + 1 for v in f) not in RP2_TRIPLES
]


def rp2_complex():
    return SimplicialComplex.from_facets(6, RP2_FACETS)


def test_fieldspec():
    assert str(QQ) == "QQ" and str(GF(7)) == "GF(7)"
    with pytest.raises(ValueError):
        FieldSpec(9)


def test_edge_boundary():
    K = SimplicialComplex.from_facets(2, [(0, 1)])
    assert boundary_matrix(K, 1) == [[-1], [1]]
    assert boundary_matrix(K, 0) == [[1, 1]]


def test_void_complex():
    K = SimplicialComplex.void(3)
    assert boundary_matrix(K, 0) == [] and boundary_matrix(K, 1) == []
    assert reduced_homology_dims(K, 2) == {}


def test_not_closed_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(3, [(), (0, 1)])


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)])
def test_rank_examples(F):
    assert field_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]], F) == 3


def test_rank_of_p():
    assert field_rank([[5]], 5) == 0
    assert field_rank([[5]], 0) == 1


def test_rank_det_two():
    # U * diag(1, 1, 1, 2) * V with unimodular U, V
    U = [[1, 2, 0, 1], [0, 1, 3, 0], [0, 0, 1, 4], [0, 0, 0, 1]]
    V = [[1, 0, 0, 0], [5, 1, 0, 0], [-2, 3, 1, 0], [1, 1, -1, 1]]
    D = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]
    mul = lambda A, B: [[sum(A[i][k] * B[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
    M = mul(mul(U, D), V)
    from sympy import Matrix

    assert abs(Matrix(M).det()) == 2
    assert field_rank(M, 0) == 4
    assert field_rank(M, 3) == 4
    assert field_rank(M, 2) == 3
    assert sympy_rank(M, 2) == 3


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices, st.sampled_from([0, 2, 3, 5]))
def test_rank_matches_sympy(M, p):
    assert field_rank(M, p) == sympy_rank(M, p)


@given(matrices, st.integers(1, 4))
def test_rank_of_low_rank_products(M, k):
    rng = random.Random(len(M) * 31 + k)
    B = [[rng.randint(-3, 3) for _ in range(len(M[0]))] for _ in range(k)]
    A = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(len(M))]
    P = [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(len(M[0]))] for i in range(len(M))]
    assert field_rank(P, 0) == sympy_rank(P, 0) <= k


def random_complex(rng, v):
    facets = [tuple(sorted(rng.sample(range(v), rng.randint(1, min(v, 4))))) for _ in range(rng.randint(1, 6))]
    return SimplicialComplex.from_facets(v, facets)


@pytest.mark.parametrize("seed", range(25))
def test_boundary_squared_and_oracle(seed):
    rng = random.Random(seed)
    K = random_complex(rng, rng.randint(2, 7))
    for i in range(1, K.dim + 1):
        A, B = boundary_matrix(K, i - 1), boundary_matrix(K, i)
        prod = [[sum(A[r][t] * B[t][c] for t in range(len(B))) for c in range(len(B[0]))] for r in range(len(A))]
        assert all(x == 0 for row in prod for x in row)
    for p in (0, 2, 3):
        assert reduced_homology_dims(K, p) == reduced_homology(K.faces, p)


@pytest.mark.parametrize("seed", range(25))
def test_euler_and_universal_coefficients(seed):
    rng = random.Random(1000 + seed)
    K = random_complex(rng, rng.randint(2, 7))
    euler = sum((-1) ** d * n for d, n in K.f_vector().items())
    hq = reduced_homology_dims(K, 0)
    for p in (0, 2, 3, 5):
        h = reduced_homology_dims(K, p)
        assert sum((-1) ** d * x for d, x in h.items()) == euler
        assert all(hq[d] <= h[d] for d in h)


def test_triangle_boundary():
    K = SimplicialComplex.from_facets(3, [(0, 1), (1, 2), (0, 2)])
    for p in (0, 2, 3):
        assert reduced_homology_dims(K, p) == {-1: 0, 0: 0, 1: 1}


def test_point():
    K = SimplicialComplex.from_facets(1, [(0,)])
    assert reduced_homology_dims(K, 0) == {-1: 0, 0: 0}


def test_rp2_homology():
    K = rp2_complex()
    assert K.f_vector() == {-1: 1, 0: 6, 1: 15, 2: 10}
    assert reduced_homology_dims(K, 2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert reduced_homology_dims(K, 0) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology_dims(K, 3) == reduced_homology_dims(K, 0)
    for p in (0, 2):
        assert reduced_homology(K.faces, p) == reduced_homology_dims(K, p)
