import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from detmorph.ar import (dualize, indec_injective, indec_projective, is_injective, is_projective,
                         minimal_projective_presentation, nakayama, projective_cover, tau, tau_inverse,
                         transpose)
from detmorph.oracle import random_representation
from detmorph.quiver import Arrow, BoundQuiverAlgebra, Quiver, linear_algebra
from detmorph.rep import (indecomposable_decomposition, is_isomorphic, kernel, simple,
                          zero_rep)


def test_projective_cover_examples(a2):
    P1 = indec_projective(a2, "1")
    assert projective_cover(P1).is_isomorphism()
    c = projective_cover(simple(a2, "1"))
    assert c.source.tops == ("1",) and c.is_epi()
    assert projective_cover(zero_rep(a2)).source.is_zero()


def test_presentation_examples(a2):
    pres = minimal_projective_presentation(simple(a2, "1"))
    assert pres.p0.tops == ("1",) and pres.p1.tops == ("2",)
    assert minimal_projective_presentation(indec_projective(a2, "1")).p1.is_zero()
    z = minimal_projective_presentation(zero_rep(a2))
    assert z.p0.is_zero() and z.p1.is_zero()


def test_transpose_of_projective_is_zero(a3):
    for v in a3.vertices:
        assert transpose(indec_projective(a3, v)).is_zero()
        assert tau(indec_projective(a3, v)).is_zero()
        assert tau_inverse(indec_injective(a3, v)).is_zero()
    assert transpose(zero_rep(a3)).is_zero()


def test_tau_on_a2(a2):
    S1, S2 = simple(a2, "1"), simple(a2, "2")
    assert is_isomorphic(tau(S1), S2) is not None
    assert is_isomorphic(tau_inverse(S2), S1) is not None
    assert transpose(S1).algebra is a2.opposite()


def test_dual_examples(a2):
    S1 = simple(a2, "1")
    D = dualize(S1)
    assert D.algebra is a2.opposite() and D.dim_vector == (1, 0)
    assert is_isomorphic(dualize(D), S1) is not None
    Pop = indec_projective(a2.opposite(), "1")
    assert is_isomorphic(dualize(Pop), indec_injective(a2, "1")) is not None


@pytest.mark.parametrize("n", [3, 4])
def test_tau_shifts_simples_on_linear_quiver(n):
    alg = linear_algebra(n, 5)
    for i in range(1, n):
        assert is_isomorphic(tau(simple(alg, str(i))), simple(alg, str(i + 1))) is not None


def test_predicates(a2):
    assert is_projective(indec_projective(a2, "1"))
    assert not is_projective(simple(a2, "1"))
    assert is_injective(simple(a2, "1"))
    assert not is_injective(simple(a2, "2"))


def _nonprojective_indecomposables(alg, seed, count=4):
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        dims = {v: int(rng.integers(0, 3)) for v in alg.vertices}
        M = random_representation(alg, dims, seed * 13 + k)
        out.extend(x for x in indecomposable_decomposition(M) if not is_projective(x))
    return out


@settings(max_examples=10)
@given(st.integers(0, 10 ** 5))
def test_nakayama_presentation_kernel_is_tau(seed):
    alg = linear_algebra(4, 3)
    for M in _nonprojective_indecomposables(alg, seed):
        pres = minimal_projective_presentation(M)
        K, _ = kernel(nakayama(pres.differential))
        assert is_isomorphic(K, tau(M)) is not None


@settings(max_examples=10)
@given(st.integers(0, 10 ** 5))
def test_double_transpose_and_double_dual(seed):
    alg = linear_algebra(3, 5)
    for M in _nonprojective_indecomposables(alg, seed):
        assert is_isomorphic(transpose(transpose(M)), M) is not None
        assert is_isomorphic(dualize(dualize(M)), M) is not None
        assert is_isomorphic(tau_inverse(tau(M)), M) is not None


def test_tau_with_relations():
    # 1 -a-> 2 -b-> 3 with ab = 0: S2 has tau = S3 and tau(S1) = S2
    alg = BoundQuiverAlgebra(Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")]),
                             [["a", "b"]], 5)
    assert is_isomorphic(tau(simple(alg, "1")), simple(alg, "2")) is not None
    assert is_isomorphic(tau(simple(alg, "2")), simple(alg, "3")) is not None
    assert is_projective(simple(alg, "3"))
