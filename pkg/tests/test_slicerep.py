import numpy as np
import pytest
from hypothesis import given, strategies as st

from polaract import action as act
from polaract import liealg, slicerep
from polaract.harness.fixtures import spin8_tensor_rep
from polaract.harness.tables import make_action


def test_isotropy_of_k_at_origin_is_k():
    a = make_action("BDI:2,5", "k")
    assert slicerep.isotropy_subalgebra(a, np.eye(7)).dim == a.pair.k.dim


def test_so2so5_slice_at_origin():
    a = make_action("BDI:3,4", "block:so5+so2")
    rep = slicerep.slice_representation(a, np.eye(7))
    assert rep.algebra.dim == 5 and rep.dim == 6
    assert slicerep.linear_cohomogeneity(rep) == 2 == act.cohomogeneity(a)
    assert rep.homomorphism_residual() < 1e-8


def test_isotropy_slice_is_s_representation_without_fixed_vectors():
    a = make_action("AIII:2,3", "k")
    rep = slicerep.slice_representation(a, np.eye(10))
    assert rep.dim == a.pair.p.dim
    assert slicerep.trivial_subspace(rep).dim == 0
    assert np.abs(rep.action_matrices + rep.action_matrices.transpose(0, 2, 1)).max() < 1e-12


@pytest.mark.parametrize("space,sub", [("BDI:3,5", "block:so2+so6"), ("AIII:2,3", "block:ou5"),
                                       ("CII:1,2", "block:uq3")])
def test_slice_cohomogeneity_equals_action_cohomogeneity(space, sub):
    a = make_action(space, sub)
    coh = act.cohomogeneity(a)
    for i in range(5):
        rep = slicerep.slice_representation(a, a.sample_point(i))
        assert slicerep.linear_cohomogeneity(rep) == coh


def test_trivial_rep():
    zero = liealg.MatrixLieAlgebra.from_matrices(np.zeros((0, 3, 3)))
    rep = slicerep.rep_from_matrices(zero, np.zeros((0, 3, 3)))
    dec = slicerep.decompose_modules(rep)
    assert dec.trivial.dim == 3 and dec.summands == [] or dec.dims == []


def test_su2_adjoint_doubled():
    so3 = liealg.build_classical("so", 3)
    rep = slicerep.rep_from_matrices(so3, np.array([np.kron(np.eye(2), x) for x in so3.mats]))
    dec = slicerep.decompose_modules(rep)
    assert sorted(dec.dims) == [3, 3]
    assert slicerep.commutant_dimension(rep) >= 4
    assert slicerep.has_equivalent_pair(rep, dec)


@given(st.integers(0, 1000))
def test_decomposition_properties(seed):
    su3 = liealg.build_classical("su", 3)
    ad = np.array([liealg.ad_matrix(su3, x) for x in su3.mats])
    rho = np.array([np.block([[a, np.zeros((8, 6))], [np.zeros((6, 8)), r]])
                    for a, r in zip(ad, su3.mats)])
    rep = slicerep.rep_from_matrices(su3, rho)
    dec = slicerep.decompose_modules(rep, seed=seed)
    assert sorted(dec.dims) == [6, 8]
    assert sum(dec.dims) + dec.trivial.dim == rep.dim
    bases = [s.basis for s in dec.summands]
    assert np.abs(bases[0] @ bases[1].T).max() < 1e-9
    assert all(slicerep.invariance_residual(rep, s) < 1e-7 for s in dec.summands)
    assert not slicerep.has_equivalent_pair(rep, dec)


def test_spin8_tensor_splits_8_56():
    rep = spin8_tensor_rep()
    assert rep.dim == 64
    dims = {tuple(sorted(slicerep.decompose_modules(rep, seed=s).dims)) for s in range(3)}
    assert dims == {(8, 56)}


def test_spin9_slice_carrier_56():
    a = make_action("BDI:8,8", "spin9")
    rep = slicerep.slice_representation(a, np.eye(16))
    assert (rep.algebra.dim, rep.dim) == (28, 56)


def test_aiii_ii_equivalent_pair():
    a = make_action("AII:4", "block:ouz6+u1+z2")
    rep = slicerep.slice_representation(a, np.eye(16))
    dec = slicerep.decompose_modules(rep)
    assert sorted(dec.dims) == [6, 6, 8]
    assert slicerep.has_equivalent_pair(rep, dec)


@pytest.mark.parametrize("space,sub,dim,rank", [("AIII:2,3", "block:ou5", 6, 2), ("CII:1,2", "block:uq3", 4, 1),
                                                ("BDI:3,5", "block:so2+so6", 10, 2)])
def test_verify_hermann_slice(space, sub, dim, rank):
    out = slicerep.verify_hermann_slice(make_action(space, sub), dim, rank)
    assert out["ok"], out
