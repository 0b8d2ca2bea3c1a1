from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from liebranch.roots import (
    CartanType,
    Group,
    Weight,
    branch_node,
    build_root_system,
    gl,
    identify_cartan_type,
    root_system,
    su2,
)

ALL_TYPES = ["A1", "A3", "A7", "B2", "B3", "C1", "C3", "C4", "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2"]


class TestCartanType:
    def test_parse_round_trip(self):
        assert str(CartanType.parse("E8")) == "E8"
        assert CartanType.parse("c4") == CartanType("C", 4)

    @pytest.mark.parametrize("bad", ["X3", "E9", "D1", "B1", "G3", "A"])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            CartanType.parse(bad)

    @pytest.mark.parametrize(
        "name,dim", [("A7", 63), ("C4", 36), ("D8", 120), ("E6", 78), ("E7", 133), ("E8", 248), ("F4", 52), ("G2", 14)]
    )
    def test_algebra_dimension(self, name, dim):
        assert CartanType.parse(name).lie_algebra_dim == dim


class TestRootCounts:
    @pytest.mark.parametrize(
        "name,npos,order",
        [
            ("A7", 28, 40320),
            ("C4", 16, 384),
            ("D8", 56, 5160960),
            ("E6", 36, 51840),
            ("E7", 63, 2903040),
            ("E8", 120, 696729600),
            ("F4", 24, 1152),
            ("G2", 6, 12),
        ],
    )
    def test_positive_roots_and_weyl_order(self, name, npos, order):
        rs = root_system(name)
        assert len(rs.positive_roots) == npos
        assert rs.weyl_group_order == order

    @pytest.mark.parametrize("series,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("A", 4)])
    def test_weyl_order_against_generic_orbit(self, series, rank):
        rs = build_root_system(CartanType(series, rank))
        assert rs.weyl_group_order == oracles.generic_orbit_size(oracles.classical_simple_roots(series, rank))

    def test_g2_weyl_order_against_generic_orbit(self):
        rs = root_system("G2")
        assert rs.weyl_group_order == oracles.generic_orbit_size(rs.simple_roots)


class TestStructure:
    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_rho_pairs_to_one_with_simple_coroots(self, name):
        rs = root_system(name)
        assert all(rs.pair(rs.rho, c) == 1 for c in rs.simple_coroots)

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_fundamental_weights_dual_to_coroots(self, name):
        rs = root_system(name)
        for i, w in enumerate(rs.fundamental_weights):
            assert [rs.pair(w, c) for c in rs.simple_coroots] == [int(i == j) for j in range(rs.rank)]

    @pytest.mark.parametrize("name", ["E6", "E7", "E8", "D4", "D8"])
    def test_branch_node_weight_reconstruction(self, name):
        rs = root_system(name)
        b = branch_node(rs)
        wb = rs.fundamental_weights[b - 1]
        coeffs = rs.simple_root_coefficients(wb)
        assert [rs.pair(wb, c) for c in rs.fundamental_coweights] == list(coeffs)
        assert sum((a * c for a, c in zip(rs.simple_roots, coeffs)), Weight([0] * rs.dim)) == wb

    def test_branch_node_numbers(self):
        assert [branch_node(root_system(n)) for n in ("E6", "E7", "E8", "D5")] == [4, 4, 4, 3]

    @pytest.mark.parametrize("name", ["A4", "C4", "F4", "G2"])
    def test_no_branch_node(self, name):
        with pytest.raises(ValueError):
            branch_node(root_system(name))

    @pytest.mark.parametrize("name", ALL_TYPES)
    def test_cartan_matrix_is_identified(self, name):
        rs = root_system(name)
        gram = [[rs.inner(a, b) for b in rs.simple_roots] for a in rs.simple_roots]
        # low-rank coincidences are reported under one name
        same = {"B2": "C2", "C1": "A1"}
        assert identify_cartan_type(gram) == [CartanType.parse(same.get(name, name))]

    def test_reducible_gram(self):
        rs = root_system("D4")
        picks = [rs.simple_roots[i] for i in (0, 2, 3)]
        gram = [[rs.inner(a, b) for b in picks] for a in picks]
        assert identify_cartan_type(gram) == [CartanType("A", 1)] * 3


class TestWeylDimension:
    @pytest.mark.parametrize(
        "name,hw,dim",
        [
            ("C4", (1, 1, 1, 1), 42),
            ("A7", (1, 1, 1, 1, 0, 0, 0, 0), 70),
            ("D8", (Fraction(1, 2),) * 8, 128),
            ("E6", None, 27),
        ],
    )
    def test_known_dimensions(self, name, hw, dim):
        rs = root_system(name)
        if hw is None:
            hw = rs.fundamental_weights[0]
        assert rs.weyl_dim(hw) == dim

    def test_e8_adjoint_and_next(self):
        rs = root_system("E8")
        assert rs.weyl_dim(rs.fundamental_weights[7]) == 248
        assert rs.weyl_dim(rs.fundamental_weights[0]) == 3875

    def test_non_dominant_rejected(self):
        with pytest.raises(ValueError):
            root_system("A2").weyl_dim((0, 1, 0))

    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
    def test_gl_dimension_matches_tableaux(self, parts):
        lam = tuple(sorted(parts, reverse=True))
        assert gl(3).weyl_dim(lam) == sum(oracles.ssyt_contents(lam, 3).values())


class TestKeys:
    @settings(max_examples=60)
    @given(st.sampled_from(["B3", "C3", "D4", "D5", "A3", "G2", "F4"]), st.data())
    def test_dominant_conjugate_agrees_with_reflection_loop(self, name, data):
        rs = root_system(name)
        coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank))
        w = rs.from_dynkin_labels(coeffs)
        key = rs.to_key(w)
        assert rs.from_key(rs.dominant_key(key)) == rs.dominant_conjugate(w)

    @settings(max_examples=60)
    @given(st.sampled_from(["B3", "C3", "D4", "D5", "A3"]), st.data())
    def test_sign_is_determinant_of_rho_shift(self, name, data):
        # w(lam + rho) dominant: the sign is (-1)^length, zero when not regular
        rs = root_system(name)
        coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank))
        w = rs.from_dynkin_labels(coeffs)
        key = rs.to_key(w)
        dom, sign, regular = rs.dominant_key_sign(key)
        v, length = Weight(w), 0
        changed = True
        while changed:
            changed = False
            for i, c in enumerate(rs.simple_coroots):
                if rs.pair(v, c) < 0:
                    v, length, changed = rs.reflect(v, i), length + 1, True
        assert rs.from_key(dom) == v
        assert regular == all(rs.pair(v, c) != 0 for c in rs.simple_coroots)
        if regular:
            # on a wall the Weyl element is not unique and the sign is unused
            assert sign == (-1) ** length

    @pytest.mark.parametrize("name", ["B3", "C3", "D4", "G2", "A3", "F4"])
    def test_orbit_array_matches_reflection_closure(self, name):
        rs = root_system(name)
        w = rs.from_dynkin_labels([1] + [0] * (rs.rank - 1))
        got = {tuple(r) for r in rs.orbit_array(rs.to_key(w)).tolist()}
        want = {rs.to_key(x) for x in oracles.orbit(w, rs.simple_roots)}
        assert got == want
        assert len(want) == rs.orbit_size(w)


class TestGroups:
    def test_su2_uses_doubled_weight(self):
        assert su2().weyl_dim((3,)) == 4

    def test_gl1_is_abelian(self):
        g = gl(1)
        assert g.rank == 0 and g.weyl_dim((5,)) == 1

    def test_product_dimension(self):
        g = Group.of(su2(), root_system("C3"))
        assert g.weyl_dim((1, 1, 1, 1)) == 2 * 14
        assert g.weyl_group_order == 2 * 48

    def test_su_keys_are_trace_free(self):
        a2 = root_system("A2")
        g = Group.of(a2)
        assert g.canonical_key(g.to_key((2, 1, 1))) == g.canonical_key(g.to_key((1, 0, 0)))
