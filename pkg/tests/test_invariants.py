from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from liebranch.branching import branch_sp_to_gl, interlacing_lowers, o3_invariant_profile
from liebranch.invariants import (
    CASES,
    NString,
    dim_invariants_Kprime,
    dim_invariants_Ktilde,
    dim_invariants_Ktilde_oracle,
    n_string_count,
    n_strings,
    sp6_su2s_invariants_oracle,
    su2s_invariants_closed,
    su2s_invariants_oracle,
    sym_power_dim,
)


def e7_closed(n):
    return sym_power_dim(12, n) - sym_power_dim(12, n - 4)


class TestSymPowerDim:
    def test_values(self):
        assert [sym_power_dim(8, n) for n in (-1, 0, 1, 2, 3)] == [0, 1, 8, 36, 120]

    def test_rejects_empty_space(self):
        with pytest.raises(ValueError):
            sym_power_dim(0, 2)

    @given(st.integers(1, 12), st.integers(0, 12))
    def test_pascal(self, d, n):
        if d > 1 and n > 0:
            assert sym_power_dim(d, n) == sym_power_dim(d - 1, n) + sym_power_dim(d, n - 1)


class TestNStrings:
    @pytest.mark.parametrize("n", range(6))
    def test_count(self, n):
        assert n_string_count(n) == (comb(n + 7, 7),) * 2

    def test_monomial_has_degree_n(self):
        for s in n_strings(3):
            assert sum(NString(3, s).monomial()) == 3

    def test_monomials_are_distinct(self):
        mons = {NString(3, s).monomial() for s in n_strings(3)}
        assert len(mons) == comb(10, 7)

    def test_invalid_string(self):
        with pytest.raises(ValueError):
            NString(2, (1, 2, 0, 0, 0, 0, 0))


class TestKtilde:
    @pytest.mark.parametrize("case", ["E6", "E7", "E8"])
    @pytest.mark.parametrize("n", range(5))
    def test_case_algorithm(self, case, n):
        assert dim_invariants_Ktilde(case, n) == comb(n + 7, 7)

    @pytest.mark.parametrize("case,n", [("E6", 2), ("E6", 3), ("E7", 2), ("E8", 2)])
    def test_oracle(self, case, n):
        assert dim_invariants_Ktilde_oracle(case, n) == comb(n + 7, 7)

    def test_parity_filter_matters(self):
        # dropping the det-parity condition overcounts at n = 3
        n = 3
        loose = sum(
            o3_invariant_profile(*mu).so3_invariant
            for lam in branch_sp_to_gl(4, n)
            for mu in interlacing_lowers(lam)
        )
        assert loose == 121 and dim_invariants_Ktilde("E6", n) == 120

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            dim_invariants_Ktilde("F4", 1)

    def test_minimal_type_dimensions(self):
        assert [CASES[c].minimal_type(1).dimension for c in ("E6", "E7", "E8")] == [42, 70, 128]


class TestSU2sCounts:
    @settings(max_examples=40)
    @given(st.integers(0, 30), st.integers(0, 30))
    def test_symmetry(self, a, b):
        assert su2s_invariants_closed(a, b) == su2s_invariants_closed(b, a)

    @pytest.mark.parametrize("a,b,val", [(0, 0, 1), (1, 0, 6), (0, 1, 6), (1, 1, 36), (2, 2, 440)])
    def test_values(self, a, b, val):
        assert su2s_invariants_closed(a, b) == val

    @pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4 - a)])
    def test_oracle_against_tableaux(self, a, b):
        assert su2s_invariants_oracle(a, b) == oracles.su2s_invariants_by_tableaux(a, b)
        assert su2s_invariants_oracle(a, b) == su2s_invariants_closed(a, b)

    @pytest.mark.parametrize("n", range(5))
    def test_telescoping(self, n):
        assert sum(sp6_su2s_invariants_oracle(c) for c in range(n + 1)) == su2s_invariants_closed(n, 0)

    def test_sp6_pieces(self):
        assert [sp6_su2s_invariants_oracle(c) for c in range(5)] == [1, 5, 15, 35, 70]


class TestKprime:
    @pytest.mark.parametrize("n", range(11))
    def test_e6_closed_and_chain(self, n):
        assert dim_invariants_Kprime("E6", n, "closed") == dim_invariants_Kprime("E6", n, "chain") == comb(n + 4, 4)

    @pytest.mark.parametrize("n", range(11))
    def test_e7_closed_and_chain(self, n):
        assert dim_invariants_Kprime("E7", n, "closed") == dim_invariants_Kprime("E7", n, "chain") == e7_closed(n)

    @pytest.mark.parametrize("n", range(4))
    def test_e6_oracle(self, n):
        assert dim_invariants_Kprime("E6", n, "oracle") == comb(n + 4, 4)

    @pytest.mark.parametrize("n", range(3))
    def test_e7_oracle_against_tableaux(self, n):
        assert dim_invariants_Kprime("E7", n, "oracle") == oracles.su8_kprime_invariants_by_tableaux(n)

    def test_e7_sequence(self):
        assert [e7_closed(n) for n in range(6)] == [1, 12, 78, 364, 1364, 4356]

    def test_e8_oracle_values(self):
        assert [dim_invariants_Kprime("E8", n, "oracle") for n in range(4)] == [1, 28, 420, 4440]

    @pytest.mark.parametrize("method", ["closed", "chain"])
    def test_e8_has_no_formula(self, method):
        with pytest.raises(NotImplementedError):
            dim_invariants_Kprime("E8", 1, method)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            dim_invariants_Kprime("E6", -1)
        with pytest.raises(ValueError):
            dim_invariants_Kprime("E6", 1, "guess")
