import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triqw import (
    FockBasis,
    ManyBodyState,
    Statistics,
    apply_annihilation,
    apply_creation,
    build_monomial_state,
    enumerate_basis,
)

BOS = Statistics.BOSONS
FER = Statistics.FERMIONS


def dense_operator(basis: FockBasis, mode: int, create: bool) -> np.ndarray:
    """Matrix of c_mode^+ (or c_mode) between two bases of adjacent N."""
    apply_op = apply_creation if create else apply_annihilation
    target = enumerate_basis(
        basis.n_particles + (1 if create else -1), basis.n_modes, basis.stats
    )
    op = np.zeros((len(target), len(basis)))
    for col, occ in enumerate(basis.states):
        res = apply_op(occ, mode, basis.stats)
        if res is None:
            continue
        factor, occ2 = res
        op[target.index(occ2), col] = factor
    return op


def number_conserving_matrix(basis: FockBasis, terms) -> np.ndarray:
    """Dense matrix of a sum of c_i^+ c_j terms on one basis."""
    mat = np.zeros((len(basis), len(basis)))
    for col, occ in enumerate(basis.states):
        for i, j in terms:
            res = apply_annihilation(occ, j, basis.stats)
            if res is None:
                continue
            f1, occ1 = res
            res = apply_creation(occ1, i, basis.stats)
            if res is None:
                continue
            f2, occ2 = res
            mat[basis.index(occ2), col] += f1 * f2
    return mat


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_basis(3, 6, FER)) == 20  # C(6, 3)
        assert len(enumerate_basis(3, 6, BOS)) == 56  # C(8, 3)

    def test_single_particle_order_is_lexicographic(self):
        basis = enumerate_basis(1, 3, BOS)
        assert basis.states == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
        assert basis.states == tuple(sorted(basis.states))

    def test_index_is_inverse_of_listing(self):
        for stats in (BOS, FER):
            basis = enumerate_basis(3, 6, stats)
            for k, occ in enumerate(basis.states):
                assert basis.index(occ) == k

    def test_all_states_legal_and_distinct(self):
        basis = enumerate_basis(3, 6, FER)
        assert len(set(basis.states)) == len(basis)
        assert all(sum(occ) == 3 and max(occ) <= 1 for occ in basis.states)

    def test_fermion_overfilling_rejected(self):
        with pytest.raises(ValueError):
            enumerate_basis(4, 3, FER)

    def test_bad_arguments_rejected(self):
        with pytest.raises(ValueError):
            enumerate_basis(-1, 3, BOS)
        with pytest.raises(ValueError):
            enumerate_basis(2, 0, BOS)

    def test_vacuum_basis(self):
        basis = enumerate_basis(0, 4, FER)
        assert basis.states == ((0, 0, 0, 0),)


class TestLadderOperators:
    def test_creation_on_vacuum(self):
        assert apply_creation((0, 0, 0), 2, BOS) == (1.0, (0, 1, 0))
        assert apply_creation((0, 0, 0), 2, FER) == (1.0, (0, 1, 0))

    def test_fermion_exclusion(self):
        assert apply_creation((1, 0), 1, FER) is None

    def test_fermion_anticommutation_sign(self):
        # one occupied mode left of mode 2
        assert apply_creation((1, 0, 0), 2, FER) == (-1.0, (1, 1, 0))

    def test_boson_ladder_factor(self):
        factor, occ = apply_creation((1, 0), 1, BOS)
        assert occ == (2, 0)
        assert factor == pytest.approx(math.sqrt(2.0), abs=1e-15)

    def test_annihilation(self):
        assert apply_annihilation((0, 1, 0), 2, BOS) == (1.0, (0, 0, 0))
        assert apply_annihilation((0, 1), 1, BOS) is None
        factor, occ = apply_annihilation((2, 0), 1, BOS)
        assert occ == (1, 0)
        assert factor == pytest.approx(math.sqrt(2.0), abs=1e-15)

    def test_mode_out_of_range(self):
        with pytest.raises(ValueError):
            apply_creation((0, 0), 3, BOS)
        with pytest.raises(ValueError):
            apply_annihilation((1, 1), 0, FER)

    @pytest.mark.parametrize("stats", [BOS, FER])
    def test_adjointness(self, stats):
        # <phi| c_i^+ |psi> == conj(<psi| c_i |phi>) on every basis pair
        basis = enumerate_basis(1, 3, stats)
        for mode in (1, 2, 3):
            up = dense_operator(basis, mode, create=True)
            upper = enumerate_basis(2, 3, stats)
            down = dense_operator(upper, mode, create=False)
            assert np.array_equal(up, down.T)


@settings(max_examples=25, deadline=None)
@given(
    stats=st.sampled_from([BOS, FER]),
    n_modes=st.integers(2, 4),
    n_particles=st.integers(0, 3),
)
def test_commutation_contract(stats, n_modes, n_particles):
    """(c_i c_j^+ -+ c_j^+ c_i) |n> = delta_ij |n>, - bosons / + fermions."""
    if stats.exclusive and n_particles > n_modes:
        n_particles = n_modes
    basis = enumerate_basis(n_particles, n_modes, stats)
    sign = 1.0 if stats.exclusive else -1.0
    for i in range(1, n_modes + 1):
        for j in range(1, n_modes + 1):
            first = number_conserving_matrix(basis, [(i, j)]).T  # c_i then c_j^+
            # build c_i c_j^+ directly: annihilate i after creating j
            mat = np.zeros((len(basis), len(basis)))
            for col, occ in enumerate(basis.states):
                res = apply_creation(occ, j, stats)
                if res is None:
                    continue
                f1, occ1 = res
                res = apply_annihilation(occ1, i, stats)
                if res is None:
                    continue
                f2, occ2 = res
                mat[basis.index(occ2), col] += f1 * f2
            other = number_conserving_matrix(basis, [(j, i)])
            combo = mat + sign * other
            expected = np.eye(len(basis)) if i == j else np.zeros((len(basis),) * 2)
            assert np.abs(combo - expected).max() <= 1e-14


@pytest.mark.parametrize("stats", [BOS, FER])
def test_number_operator_counts_particles(stats):
    basis = enumerate_basis(3, 4, stats)
    total = number_conserving_matrix(basis, [(m, m) for m in range(1, 5)])
    assert np.abs(total - 3.0 * np.eye(len(basis))).max() <= 1e-14


class TestMonomialState:
    def test_identity_coefficients_reproduce_ket(self):
        basis = enumerate_basis(3, 6, FER)
        init = (1, 1, 1, 0, 0, 0)
        state = build_monomial_state(basis, np.eye(6), init)
        expected = np.zeros(len(basis))
        expected[basis.index(init)] = 1.0
        assert np.array_equal(state.amp, expected.astype(complex))

    def test_identity_coefficients_bosons_with_double_occupancy(self):
        basis = enumerate_basis(3, 3, BOS)
        init = (2, 1, 0)
        state = build_monomial_state(basis, np.eye(3), init)
        assert state.amp[basis.index(init)] == pytest.approx(1.0, abs=1e-14)
        assert state.norm() == pytest.approx(1.0, abs=1e-14)

    def test_fermion_swap_gives_odd_permutation_sign(self):
        basis = enumerate_basis(2, 3, FER)
        swap = np.eye(3)[[1, 0, 2]]
        state = build_monomial_state(basis, swap, (1, 1, 0))
        assert state.amp[basis.index((1, 1, 0))] == pytest.approx(-1.0, abs=1e-14)

    def test_rejects_mismatched_init(self):
        basis = enumerate_basis(2, 3, FER)
        with pytest.raises(ValueError):
            build_monomial_state(basis, np.eye(3), (1, 1, 1))
        with pytest.raises(ValueError):
            build_monomial_state(basis, np.eye(3), (2, 0, 0))


def test_many_body_state_validation():
    basis = enumerate_basis(1, 3, BOS)
    with pytest.raises(ValueError):
        ManyBodyState(basis, np.zeros(5, dtype=complex))
    state = ManyBodyState.basis_ket(basis, (0, 1, 0))
    assert state.norm() == pytest.approx(1.0)
    assert state.overlap(state) == pytest.approx(1.0)
