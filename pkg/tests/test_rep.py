import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from detmorph import linalg as la
from detmorph.ar import indec_projective, projective_cover
from detmorph.errors import PreconditionError
from detmorph.oracle import all_isomorphic, random_morphism, random_representation
from detmorph.quiver import linear_algebra
from detmorph.rep import (Representation, RepMorphism, add_member, annihilator_basis, cokernel,
                          direct_sum, end_algebra, hom_basis, identity, image, indecomposable_decomposition,
                          is_indecomposable, is_isomorphic, is_right_minimal, kernel, pullback,
                          right_minimalize, simple, sum_morphism, transport, zero_morphism, zero_rep)


def rep(alg, dims, maps):
    return Representation(alg, dict(zip(alg.vertices, dims)), maps)


def test_relation_violation_rejected():
    from detmorph.quiver import Arrow, BoundQuiverAlgebra, Quiver
    alg = BoundQuiverAlgebra(Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")]),
                             [["a", "b"]], 5)
    with pytest.raises(PreconditionError):
        rep(alg, (1, 1, 1), {"a": [[1]], "b": [[1]]})
    rep(alg, (1, 1, 1), {"a": [[1]], "b": [[0]]})


def test_shape_mismatch_rejected(a2):
    with pytest.raises(Exception):
        rep(a2, (1, 1), {"a1": [[1, 0]]})


def test_file_roundtrip(a2):
    M = rep(a2, (2, 1), {"a1": [[1, 3]]})
    back = Representation.from_dict(a2, json.loads(json.dumps(M.to_dict())))
    assert back.fingerprint() == M.fingerprint()
    f = projective_cover(M)
    g = RepMorphism.from_dict(a2, json.loads(json.dumps(f.to_dict())))
    assert g.source.fingerprint() == f.source.fingerprint()
    assert g.vector().tolist() == f.vector().tolist()


def test_intertwining_enforced(a2):
    S1, P1 = simple(a2, "1"), indec_projective(a2, "1")
    with pytest.raises(PreconditionError):
        RepMorphism(S1, P1, {"1": [[1]], "2": np.zeros((1, 0), dtype=np.int64)})


def test_hom_examples(a2):
    S1, S2, P1 = simple(a2, "1"), simple(a2, "2"), indec_projective(a2, "1")
    assert hom_basis(S1, S2) == []
    assert len(hom_basis(P1, P1)) == 1
    assert len(hom_basis(S1, P1)) == 0
    assert len(hom_basis(P1, S1)) == 1


def test_end_algebra_examples(a2):
    S1 = simple(a2, "1")
    A, _ = end_algebra(S1)
    assert A.dim == 1
    M = rep(a2, (2, 1), {"a1": [[1, 0]]})
    assert end_algebra(direct_sum([M, M]).module)[0].dim == 4 * end_algebra(M)[0].dim
    assert end_algebra(zero_rep(a2))[0].dim == 0


def test_kernel_cokernel_examples(a2):
    P1, S1, S2 = indec_projective(a2, "1"), simple(a2, "1"), simple(a2, "2")
    assert kernel(identity(P1))[0].is_zero()
    assert is_isomorphic(cokernel(zero_morphism(zero_rep(a2), P1))[0], P1) is not None
    pi = projective_cover(S1)
    K, _ = kernel(pi)
    assert is_isomorphic(K, S2) is not None


def test_pullback_dimensions(a2):
    pi = projective_cover(simple(a2, "1"))
    pb = pullback(pi, pi)
    assert pb.module.total_dim == pi.source.total_dim + kernel(pi)[0].total_dim
    assert (pi @ pb.to_first).equals(pi @ pb.to_second)
    P1 = pi.source
    diag = pullback(identity(P1), identity(P1))
    assert is_isomorphic(diag.module, P1) is not None


def test_decomposition_examples(a2):
    M = rep(a2, (1, 1), {"a1": [[0]]})
    parts = indecomposable_decomposition(M)
    assert sorted(p.dim_vector for p in parts) == [(0, 1), (1, 0)]
    P1 = indec_projective(a2, "1")
    assert len(indecomposable_decomposition(direct_sum([P1, P1]).module)) == 2
    assert indecomposable_decomposition(P1)[0].dim_vector == (1, 1)


def test_isomorphism_examples(a2):
    P1 = indec_projective(a2, "1")
    assert is_isomorphic(P1, P1) is not None
    assert is_isomorphic(simple(a2, "1"), simple(a2, "2")) is None
    scaled = rep(a2, (1, 1), {"a1": [[3]]})
    iso = is_isomorphic(P1, scaled)
    assert iso is not None and iso.is_isomorphism()


def test_add_member_examples(a2):
    S1, S2 = simple(a2, "1"), simple(a2, "2")
    assert add_member(zero_rep(a2), S1)
    assert add_member(S1, S1)
    assert not add_member(S1, S2)
    assert add_member(direct_sum([S1, S1]).module, [S2, S1])


def test_right_minimalize_examples(a2):
    S1, S2 = simple(a2, "1"), simple(a2, "2")
    pi = projective_cover(S1)
    f = sum_morphism([pi, zero_morphism(S2, S1)])
    rm = right_minimalize(f)
    assert rm.morphism.source.dim_vector == (1, 1)
    assert rm.complement.dim_vector == (0, 1)
    assert is_right_minimal(rm.morphism)
    assert right_minimalize(identity(S1)).morphism.source.dim_vector == (1, 0)
    z = right_minimalize(zero_morphism(S2, S1))
    assert z.morphism.source.is_zero()


def _random_change(m, rng):
    change = {}
    for v in m.vertices:
        n = m.dims[v]
        while True:
            g = rng.integers(0, m.p, size=(n, n))
            if la.inverse(g, m.p) is not None:
                break
        change[v] = g
    return change


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_krull_schmidt_under_change_of_basis(seed):
    alg = linear_algebra(3, 3)
    rng = np.random.default_rng(seed)
    dims = {v: int(rng.integers(0, 3)) for v in alg.vertices}
    M = random_representation(alg, dims, seed)
    N, iso = transport(M, _random_change(M, rng))
    assert iso.is_isomorphism()
    a = indecomposable_decomposition(M)
    b = indecomposable_decomposition(N)
    assert all_isomorphic(a, b)
    for x in a:
        assert is_indecomposable(x)
    found = is_isomorphic(M, N)
    assert found is not None and found.is_isomorphism()


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_kernel_image_dimensions(seed):
    alg = linear_algebra(3, 5)
    rng = np.random.default_rng(seed)
    X = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, seed)
    Y = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, seed + 1)
    f = random_morphism(X, Y, seed)
    K, k = kernel(f)
    I, i = image(f)
    assert K.total_dim + I.total_dim == X.total_dim
    assert (f @ k).is_zero()
    C, c = cokernel(f)
    assert C.total_dim + I.total_dim == Y.total_dim
    assert (c @ f).is_zero()


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_right_minimalize_splits_off_kernel_part(seed):
    alg = linear_algebra(3, 5)
    rng = np.random.default_rng(seed)
    X = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, seed)
    Y = random_representation(alg, {v: int(rng.integers(0, 2)) for v in alg.vertices}, seed + 1)
    X = direct_sum([X, X]).module
    f = random_morphism(X, Y, seed)
    rm = right_minimalize(f)
    assert is_right_minimal(rm.morphism)
    assert (f @ rm.complement_inclusion).is_zero()
    assert (f @ rm.inclusion).equals(rm.morphism)
    both = sum_morphism([rm.inclusion, rm.complement_inclusion])
    assert both.is_isomorphism()
    # annihilator of the minimal part lies in the radical of its endomorphism ring
    Xm = rm.morphism.source
    if not Xm.is_zero():
        A, space = end_algebra(Xm)
        for phi in annihilator_basis(rm.morphism):
            assert A.in_radical(space.coords(phi))
