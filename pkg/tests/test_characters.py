from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from liebranch.characters import (
    Decomposition,
    DominantCharacter,
    LatticeMap,
    branch,
    decompose,
    full_weight_multiset,
    identity_map,
    invariant_dim,
    irreducible_character,
    littlewood_richardson,
    lr_decompose,
    restrict_character,
    sym_power_character,
    tensor_decompose,
    trivial_character,
    weight_counter,
)
from liebranch.roots import CartanType, Group, build_root_system, gl, root_system, su2

HALF = Fraction(1, 2)


def _counter_in_coords(c):
    g = c.group
    return Counter({tuple(g.from_key(k)): m for k, m in weight_counter(c).items()})


class TestFreudenthal:
    def test_sp8_fourth_fundamental(self):
        c = irreducible_character(root_system("C4"), (1, 1, 1, 1))
        assert c.dimension == 42
        assert c.multiplicity((1, 1, 0, 0)) == 1
        assert c.multiplicity((0, 0, 0, 0)) == 2

    def test_e8_adjoint_zero_weight(self):
        rs = root_system("E8")
        c = irreducible_character(rs, rs.fundamental_weights[7])
        assert c.dimension == 248
        assert c.multiplicity((0,) * 8) == 8

    def test_e6_minuscule(self):
        rs = root_system("E6")
        c = irreducible_character(rs, rs.fundamental_weights[0])
        assert c.dimension == 27 and len(list(c.items())) == 1

    def test_half_spin(self):
        c = irreducible_character(root_system("D8"), (HALF,) * 8)
        assert c.dimension == 128
        want = Counter(oracles.half_spin_weights(8))
        assert _counter_in_coords(c) == want

    @pytest.mark.parametrize(
        "lam", [(2, 1, 0), (3, 1, 1), (2, 2, 0), (4, 2, 1), (3, 3, 3), (1, 0, 0), (5, 2, 0)]
    )
    def test_gl3_against_tableaux(self, lam):
        c = irreducible_character(gl(3), lam)
        assert _counter_in_coords(c) == oracles.ssyt_contents(lam, 3)

    @pytest.mark.parametrize("lam", [(2, 1, 1, 0), (2, 2, 1, 0), (3, 1, 0, 0)])
    def test_gl4_against_tableaux(self, lam):
        c = irreducible_character(gl(4), lam)
        assert _counter_in_coords(c) == oracles.ssyt_contents(lam, 4)

    @pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
    def test_dimension_conservation_over_orbits(self, name):
        rs = root_system(name)
        for i in range(rs.rank):
            hw = rs.fundamental_weights[i] + rs.fundamental_weights[0]
            c = irreducible_character(rs, hw)
            assert sum(rs.orbit_size(w) * m for w, m in c.items()) == rs.weyl_dim(hw)

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(["B2", "C3", "G2", "D4", "A3"]), st.data())
    def test_random_highest_weights(self, name, data):
        rs = root_system(name)
        labels = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank))
        hw = rs.from_dynkin_labels(labels)
        c = irreducible_character(rs, hw)
        assert c.dimension == rs.weyl_dim(hw)

    @pytest.mark.parametrize("name", ["B2", "C3", "D4", "G2"])
    def test_weyl_symmetry_of_full_multiset(self, name):
        rs = root_system(name)
        hw = rs.from_dynkin_labels([1] * rs.rank)
        counts = _counter_in_coords(irreducible_character(rs, hw))
        for i in range(rs.rank):
            reflected = Counter({tuple(rs.reflect(w, i)): m for w, m in counts.items()})
            assert reflected == counts

    def test_non_dominant_highest_weight_rejected(self):
        with pytest.raises(ValueError):
            irreducible_character(root_system("C2"), (0, 1))


class TestStandardModules:
    @pytest.mark.parametrize("series,rank", [("B", 3), ("C", 3), ("D", 4)])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_symmetric_powers_of_standard(self, series, rank, k):
        rs = build_root_system(CartanType(series, rank))
        std = irreducible_character(rs, (1,) + (0,) * (rank - 1))
        got = _counter_in_coords(sym_power_character(std, k))
        want = oracles.sym_power_multiset(oracles.standard_weights(series, rank), k)
        assert got == Counter({tuple(Fraction(x) for x in w): m for w, m in want.items()})

    def test_sym_power_dimension(self):
        c = irreducible_character(root_system("C3"), (1, 1, 1))
        for n in range(5):
            assert sym_power_character(c, n).dimension == comb(14 + n - 1, n)


class TestDecomposition:
    def test_peeling_recovers_irreducible(self):
        rs = root_system("C3")
        c = irreducible_character(rs, (2, 1, 0))
        assert decompose(c) == {(2, 1, 0): 1}

    def test_negative_remainder_raises(self):
        rs = root_system("A2")
        g = Group.of(rs)
        bad = DominantCharacter.from_weights(g, {(2, 0, 0): 1})
        with pytest.raises(ValueError, match="negative multiplicity"):
            decompose(bad)

    def test_sum_of_characters(self):
        rs = root_system("B2")
        a = irreducible_character(rs, (1, 0))
        b = irreducible_character(rs, (1, 1))
        d = decompose(a + b + b)
        assert d.multiplicity((1, 1)) == 2 and d.multiplicity((1, 0)) == 1
        assert not d.is_multiplicity_free and d.dimension == 5 + 20

    def test_invariants_of_tensor_square(self):
        std = irreducible_character(root_system("C2"), (1, 0))
        d = tensor_decompose(std, std)
        assert invariant_dim(d) == 1 and d.dimension == 16


class TestTensor:
    def test_trivial_is_unit(self):
        rs = root_system("G2")
        v = irreducible_character(rs, rs.fundamental_weights[0])
        assert tensor_decompose(v, trivial_character(rs)).as_dict() == {rs.fundamental_weights[0]: 1}

    def test_g2_seven_squared(self):
        rs = root_system("G2")
        v = irreducible_character(rs, rs.fundamental_weights[0])
        d = tensor_decompose(v, v)
        assert sorted(rs.weyl_dim(w) for w, _ in d.items()) == [1, 7, 14, 27]

    @settings(max_examples=30, deadline=None)
    @given(
        st.lists(st.integers(0, 3), min_size=3, max_size=3),
        st.lists(st.integers(0, 3), min_size=3, max_size=3),
    )
    def test_klimyk_matches_littlewood_richardson(self, p, q):
        lam = tuple(sorted(p, reverse=True))
        mu = tuple(sorted(q, reverse=True))
        g3 = gl(3)
        k = tensor_decompose(irreducible_character(g3, lam), irreducible_character(g3, mu))
        assert k == lr_decompose(lam, mu, 3)

    @pytest.mark.parametrize(
        "lam,mu", [((2, 1, 0, 0), (2, 1, 0, 0)), ((3, 1, 1, 0), (1, 1, 0, 0)), ((2, 2, 1, 1), (2, 1, 0, 0))]
    )
    def test_klimyk_matches_lr_rank_four(self, lam, mu):
        g4 = gl(4)
        k = tensor_decompose(irreducible_character(g4, lam), irreducible_character(g4, mu))
        assert k == lr_decompose(lam, mu, 4)

    def test_lr_classic_coefficient(self):
        assert littlewood_richardson((2, 1, 0, 0), (2, 1, 0, 0), 4)[(3, 2, 1, 0)] == 2

    def test_tensor_dimension_is_product(self):
        rs = root_system("C3")
        a = irreducible_character(rs, (1, 1, 0))
        b = irreducible_character(rs, (1, 0, 0))
        assert tensor_decompose(a, b).dimension == 14 * 6


class TestRestriction:
    def test_identity_map(self):
        rs = root_system("B3")
        c = irreducible_character(rs, (1, 1, 0))
        assert branch(c, identity_map(rs)) == {(1, 1, 0): 1}

    def test_sp4_to_sp2_sp2(self):
        c4 = root_system("C2")
        tgt = Group.of(su2(), su2())
        lm = LatticeMap.from_function(c4, tgt, lambda x: [x[0], x[1]])
        d = branch(irreducible_character(c4, (1, 0)), lm)
        assert d == {(1, 0): 1, (0, 1): 1}

    def test_adjoint_e8_to_spin16(self):
        # 248 = 120 + 128 under D8
        e8 = root_system("E8")
        d8 = root_system("D8")
        lm = LatticeMap.from_function(e8, d8, lambda x: list(x))
        d = branch(irreducible_character(e8, e8.fundamental_weights[7]), lm)
        assert sorted(d8.weyl_dim(w) for w, _ in d.items()) == [120, 128]

    def test_restriction_preserves_dimension(self):
        c = irreducible_character(root_system("A3"), (2, 1, 0, 0))
        lm = LatticeMap.from_function(root_system("A3"), su2(), lambda x: [x[0] - x[1] + x[2] - x[3]])
        r = restrict_character(c, lm)
        assert r.dimension == c.dimension == 20

    def test_compose(self):
        a3 = root_system("A3")
        c2 = root_system("C2")
        f = LatticeMap.from_function(a3, c2, lambda x: [x[0] - x[3], x[1] - x[2]])
        g = LatticeMap.from_function(c2, su2(), lambda x: [x[0] + x[1]])
        c = irreducible_character(a3, (1, 1, 0, 0))
        assert branch(c, g.compose(f)) == branch(restrict_character(c, f), g)

    def test_full_multiset_size(self):
        c = irreducible_character(root_system("C4"), (1, 1, 1, 1))
        assert sum(m for _, m in full_weight_multiset(c)) == 42
