import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import r_from_action
from gybraid.gates import (GateParams, NotAnInvolutionError, ParameterError, PauliWord,
                           build_r_decomposed, build_r_direct, comm_identities_check,
                           exp_involution, h_generator, not_i, not_identities_check, pauli_x,
                           pauli_z, s_kl, xor_controlled_not)
from gybraid.qlinalg import basis_state, matpow, max_entry_distance

ODD_M = [3, 5, 7, 9]


class TestPauliGates:
    @pytest.mark.parametrize("bits", ["".join(b) for b in itertools.product("01", repeat=3)])
    def test_x2_flips_middle(self, bits):
        flipped = bits[0] + str(1 - int(bits[1])) + bits[2]
        assert np.array_equal(pauli_x(2, 3) @ basis_state(bits), basis_state(flipped))

    def test_z1z3_equal_outer(self):
        assert np.array_equal(pauli_z(1, 3) @ pauli_z(3, 3) @ basis_state("101"),
                              basis_state("101"))

    def test_z1z3_unequal_outer(self):
        assert np.array_equal(pauli_z(1, 3) @ pauli_z(3, 3) @ basis_state("100"),
                              -basis_state("100"))

    def test_index_range(self):
        with pytest.raises(ParameterError):
            pauli_x(0, 3)
        with pytest.raises(ParameterError):
            pauli_z(4, 3)


class TestXorNot:
    def test_equal_outer_fixed(self):
        assert np.array_equal(xor_controlled_not() @ basis_state("010"), basis_state("010"))

    def test_unequal_outer_flips(self):
        assert np.array_equal(xor_controlled_not() @ basis_state("110"), basis_state("100"))

    def test_square(self):
        g = xor_controlled_not()
        assert np.array_equal(g @ g, np.eye(8))

    def test_returns_copy(self):
        g = xor_controlled_not()
        g[0, 0] = 7
        assert xor_controlled_not()[0, 0] == 1


class TestNotI:
    def test_not2_fixes_0100(self):
        assert np.array_equal(not_i(2, 3) @ basis_state("0100"), basis_state("0100"))

    def test_not3_flips_0100(self):
        assert np.array_equal(not_i(3, 3) @ basis_state("0100"), basis_state("0110"))

    def test_braid_like_relation(self):
        a, b = not_i(2, 3), not_i(3, 3)
        assert np.array_equal(a @ b @ a, b @ a @ b)

    @pytest.mark.parametrize("i,n", [(1, 3), (4, 3), (2, 1)])
    def test_range(self, i, n):
        with pytest.raises(ParameterError):
            not_i(i, n)


class TestPauliWord:
    def test_labels_and_matrix(self):
        w = PauliWord.from_label("ZXZ")
        expected = pauli_z(1, 3) @ pauli_x(2, 3) @ pauli_z(3, 3)
        assert np.array_equal(w.matrix(), expected)

    def test_x_z_anticommute(self):
        x, z = PauliWord.single("X", 1, 1), PauliWord.single("Z", 1, 1)
        assert x * z == -(z * x)
        assert not x.commutes_with(z)

    def test_xz_squares_to_minus_identity(self):
        xz = PauliWord.from_label("X") * PauliWord.from_label("Z")
        assert xz.factors == ("XZ",)
        assert xz.square() == -PauliWord.identity(1)
        assert not xz.is_involution()

    @given(st.lists(st.sampled_from("IXZ"), min_size=1, max_size=4).map("".join),
           st.lists(st.sampled_from("IXZ"), min_size=1, max_size=4).map("".join),
           st.integers(0, 3), st.integers(0, 3))
    def test_product_matches_matrices(self, a, b, pa, pb):
        b = (b * 4)[:len(a)]
        u, v = PauliWord.from_label(a, pa), PauliWord.from_label(b, pb)
        assert max_entry_distance((u * v).matrix(), u.matrix() @ v.matrix()) == 0

    @given(st.lists(st.sampled_from("IXZ"), min_size=3, max_size=3).map("".join),
           st.integers(0, 3))
    def test_squares_to_plus_or_minus_identity(self, label, phase):
        sq = PauliWord.from_label(label, phase).square()
        assert not any(sq.x) and not any(sq.z)
        assert sq.phase in (0, 2)

    def test_bad_symbol(self):
        with pytest.raises(ValueError):
            PauliWord.from_label("XY")


class TestExpInvolution:
    def test_zero_angle(self):
        assert np.array_equal(exp_involution(PauliWord.from_label("IXI"), 0.0), np.eye(8))

    def test_x2_third_turn_cubes_to_identity(self):
        u = exp_involution(PauliWord.from_label("IXI"), 2 * math.pi / 3)
        direct = u @ u @ u
        assert max_entry_distance(direct, np.eye(8)) < 1e-12
        eig = np.sort_complex(np.linalg.eigvals(u))
        expected = np.sort_complex(np.array([np.exp(-2j * np.pi / 3)] * 4
                                            + [np.exp(2j * np.pi / 3)] * 4))
        assert max_entry_distance(eig, expected) < 1e-12

    def test_half_turn(self):
        u = exp_involution(PauliWord.from_label("ZXZ"), math.pi)
        assert max_entry_distance(u, -np.eye(8)) < 1e-15

    def test_rejects_non_involution(self):
        xz = PauliWord.from_label("XI") * PauliWord.from_label("ZI")
        with pytest.raises(NotAnInvolutionError):
            exp_involution(xz, 0.3)


class TestRMatrix:
    def test_m3_corner(self):
        assert build_r_direct(3)[0, 0] == pytest.approx(-0.5)

    def test_m5_entry(self):
        assert build_r_direct(5)[0, 2] == pytest.approx(0.5877852522924731j)

    @pytest.mark.parametrize("m", ODD_M)
    def test_unitary(self, m):
        r = build_r_direct(m)
        assert max_entry_distance(r @ r.conj().T, np.eye(8)) < 1e-15

    @pytest.mark.parametrize("m", ODD_M)
    def test_matches_action_formula(self, m):
        assert max_entry_distance(build_r_direct(m), r_from_action(m)) < 1e-15

    @pytest.mark.parametrize("m", ODD_M)
    def test_decomposition(self, m):
        assert max_entry_distance(build_r_decomposed(m), build_r_direct(m)) < 1e-12

    def test_uncorrected_m3_form_fails(self):
        # the m >= 5 formula with m = 3 is not R(3)
        from gybraid.gates import _xor_not
        wrong = exp_involution(PauliWord.from_label("ZXZ"), math.pi / 3) @ _xor_not()
        assert max_entry_distance(wrong, build_r_direct(3)) > 0.1

    @pytest.mark.parametrize("m", [2, 4, 1, 0, -3])
    def test_bad_m(self, m):
        with pytest.raises(ParameterError):
            build_r_direct(m)
        with pytest.raises(ParameterError):
            build_r_decomposed(m)


class TestHAndS:
    def test_h_m5(self):
        h = h_generator(2, GateParams(3, 5))
        assert str(h) == "+Z1 X2 Z3"

    def test_s22_m5(self):
        assert s_kl(2, 2, GateParams(3, 5)) == PauliWord.from_label("ZXZI")

    def test_s23_m5_square(self):
        params = GateParams(3, 5)
        s = s_kl(2, 3, params)
        assert s.factors == ("Z", "XZ", "XZ", "Z")
        assert s == h_generator(2, params) * h_generator(3, params)
        mat = s.matrix()
        assert max_entry_distance(mat @ mat, np.eye(16)) == 0
        explicit = (pauli_z(1, 4) @ pauli_x(2, 4) @ pauli_z(3, 4)
                    @ pauli_z(2, 4) @ pauli_x(3, 4) @ pauli_z(4, 4))
        assert max_entry_distance(mat, explicit) == 0

    def test_s24_m3(self):
        assert s_kl(2, 4, GateParams(4, 3)) == PauliWord.from_label("IXXXI")

    @pytest.mark.parametrize("n,m", [(3, 3), (4, 5), (5, 7), (6, 9)])
    def test_all_s_are_involutions(self, n, m):
        params = GateParams(n, m)
        for k in range(2, n + 1):
            for l in range(k, n + 1):
                assert s_kl(k, l, params).is_involution()

    def test_h_commute(self):
        params = GateParams(5, 5)
        hs = [h_generator(i, params) for i in range(2, 6)]
        assert all(a.commutes_with(b) for a, b in itertools.combinations(hs, 2))

    def test_ranges(self):
        with pytest.raises(ParameterError):
            s_kl(3, 2, GateParams(3, 5))
        with pytest.raises(ParameterError):
            h_generator(4, GateParams(3, 5))
        with pytest.raises(ParameterError):
            GateParams(1, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_comm_identities(n):
    report = comm_identities_check(n)
    assert report.passed and report.residual_max == 0.0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_not_identities(n):
    report = not_identities_check(n)
    assert report.passed and report.residual_max == 0.0


def test_comm_identity_catches_wrong_clause():
    # Z_i NOT_i = NOT_i Z_i would be wrong; the suite must see the difference
    q = 4
    lhs = pauli_z(2, q) @ not_i(2, 3)
    assert max_entry_distance(lhs, not_i(2, 3) @ pauli_z(2, q)) > 0


def test_exponential_of_power_is_cyclic():
    u = exp_involution(PauliWord.from_label("ZXZ"), math.pi / 7)
    assert max_entry_distance(matpow(-u, 7), np.eye(8)) < 1e-12
