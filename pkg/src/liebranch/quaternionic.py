"""K-type bookkeeping for cohomologically induced quaternionic modules.

For a quaternionic group with maximal compact SU(2) x_2 M, the module
R^1(W[k]) has K-types  S^(k+n-2)(C^2) x (Sym^n(n_M) x W_M),  n >= 0,
where n_M is the M-module n/Z(n).  The functions here expand these
K-types with exact characters and run the multiplicity arithmetic of an
exact sequence and of a see-saw pair.

Two instances ship as data:

* split F4: M = Sp(6), n_M = V(1,1,1) (dimension 14);
* SU(2,1): M = U(1), n_M = chi^3 + chi^-3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .characters import (
    Decomposition,
    DominantCharacter,
    LatticeMap,
    irreducible_character,
    restrict_character,
    sym_power_character,
    tensor_decompose,
    trivial_character,
    weight_counter,
)
from .roots import CartanType, Group, build_root_system, gl


@dataclass(frozen=True)
class QuatInductionDatum:
    k: int
    m_rep: DominantCharacter
    n_m_rep: DominantCharacter

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if self.m_rep.group != self.n_m_rep.group:
            raise ValueError("W_M and n_M must live on the same group M")

    @property
    def group(self):
        return self.m_rep.group


@dataclass(frozen=True)
class KTypeTerm:
    n: int
    su2_top_weight: int
    m_constituents: Decomposition

    @property
    def dimension(self) -> int:
        return (self.su2_top_weight + 1) * self.m_constituents.dimension


def r1_ktype(d: QuatInductionDatum, n: int) -> KTypeTerm:
    sym = sym_power_character(d.n_m_rep, n)
    return KTypeTerm(n, d.k + n - 2, tensor_decompose(sym, d.m_rep))


def r1_ktypes(d: QuatInductionDatum, depth: int) -> list[KTypeTerm]:
    """The K-types of R^1(W[k]) for n = 0..depth."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    return [r1_ktype(d, n) for n in range(depth + 1)]


def exact_sequence_ktype_diff(d_low: QuatInductionDatum, d_high: QuatInductionDatum, depth: int) -> dict[int, Decomposition]:
    """K-types of the kernel of R^1(W[k_low]) -> R^1(W[k_high]), assuming surjectivity.

    Keyed by SU(2) level (the exponent of S^j(C^2)); covers the levels of
    the first ``depth + 1`` terms of the low module.  Raises if any
    multiplicity would be negative.
    """
    if d_low.group != d_high.group or d_low.n_m_rep != d_high.n_m_rep:
        raise ValueError("both modules must share M and n_M")
    if d_high.k < d_low.k:
        raise ValueError("the target must have the larger k")
    shift = d_high.k - d_low.k
    out: dict[int, Decomposition] = {}
    for term in r1_ktypes(d_low, depth):
        level = term.su2_top_weight
        table = dict(term.m_constituents.table)
        m = term.n - shift
        if m >= 0:
            for key, mult in r1_ktype(d_high, m).m_constituents.table.items():
                table[key] = table.get(key, 0) - mult
        bad = {k: v for k, v in table.items() if v < 0}
        if bad:
            g = term.m_constituents.group
            shown = {str(g.from_key(k)): v for k, v in bad.items()}
            raise ArithmeticError(f"negative multiplicities at level {level}: {shown}")
        out[level] = Decomposition(term.m_constituents.group, table)
    return out


# -- the two instances -----------------------------------------------------


def sp6():
    return build_root_system(CartanType("C", 3))


def f44_datum(k: int) -> QuatInductionDatum:
    """Split F4 with W = C[k]: M = Sp(6), n_M = V(1,1,1)."""
    m = sp6()
    return QuatInductionDatum(k, trivial_character(m), irreducible_character(m, (1, 1, 1)))


def su21_datum(a: int, b: int, r: int = 6) -> QuatInductionDatum:
    """SU(2,1) with W = chi^(a-b)[r+a+b]: M = U(1), n_M = chi^3 + chi^-3."""
    u1 = gl(1)
    n_m = DominantCharacter.from_weights(u1, {(3,): 1, (-3,): 1})
    return QuatInductionDatum(r + a + b, irreducible_character(u1, (a - b,)), n_m)


def _su3():
    return build_root_system(CartanType("A", 2))


V6_WEIGHT = (2, 0, 0)
V6_DUAL_WEIGHT = (2, 2, 0)


def seesaw_multiplicity(a: int, b: int) -> int:
    """dim(Sym^a V6 x Sym^b V6*) - dim(Sym^(a-2) V6 x Sym^(b-2) V6*) for V6 = S^2 C^3.

    Dimensions are read off the symmetric-power characters; the binomial
    shortcut is asserted on the way.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")

    def block(x: int, y: int) -> int:
        if x < 0 or y < 0:
            return 0
        d = _sym_v6_dim(x) * _sym_v6_dim(y, dual=True)
        if d != comb(x + 5, 5) * comb(y + 5, 5):
            raise ArithmeticError("symmetric power dimension disagrees with the binomial count")
        return d

    return block(a, b) - block(a - 2, b - 2)


_SYM_CACHE: dict[tuple[int, bool], int] = {}


def _sym_v6_dim(x: int, dual: bool = False) -> int:
    key = (x, dual)
    if key not in _SYM_CACHE:
        v = irreducible_character(_su3(), V6_DUAL_WEIGHT if dual else V6_WEIGHT)
        _SYM_CACHE[key] = sym_power_character(v, x).dimension
    return _SYM_CACHE[key]


# -- consistency of the two n_M choices --------------------------------------


def u1_su3_in_sp6() -> LatticeMap:
    """Sp(6) -> U(1) x SU(3) through the Levi U(3); U(1) is the inverse centre."""
    su3 = _su3()
    tgt = Group.of(gl(1), su3)
    return LatticeMap.from_function(sp6(), tgt, lambda y: [-(y[0] + y[1] + y[2]), y[0], y[1], y[2]])


def seesaw_ktype_identity(n: int) -> tuple[dict, dict]:
    """Both sides of the U(1) x SU(3) K-type identity at degree n.

    Left: Sym^n(V(1,1,1)) of Sp(6) restricted to U(1) x SU(3).
    Right: the sum over a + b + m = n of
    Sym^m(chi^3 + chi^-3) x chi^(a-b) x Sym^a V6 x Sym^b V6*.
    Returned as full weight Counters (integer keys at the target scale).
    """
    lm = u1_su3_in_sp6()
    tgt = lm.target
    n_f4 = irreducible_character(sp6(), (1, 1, 1))
    left = weight_counter(restrict_character(sym_power_character(n_f4, n), lm))

    su3 = _su3()
    v6 = irreducible_character(su3, V6_WEIGHT)
    v6d = irreducible_character(su3, V6_DUAL_WEIGHT)
    nm = su21_datum(0, 0).n_m_rep
    right: dict = {}
    for m in range(n + 1):
        u1_part = weight_counter(sym_power_character(nm, m))
        for a in range(n - m + 1):
            b = n - m - a
            sa = weight_counter(sym_power_character(v6, a))
            sb = weight_counter(sym_power_character(v6d, b))
            prod_su3: dict = {}
            for w1, m1 in sa.items():
                for w2, m2 in sb.items():
                    w = tuple(x + y for x, y in zip(w1, w2))
                    prod_su3[w] = prod_su3.get(w, 0) + m1 * m2
            for (u,), mu in u1_part.items():
                for w, mw in prod_su3.items():
                    key = tgt.canonical_key((u + (a - b) * tgt.scale,) + w)
                    right[key] = right.get(key, 0) + mu * mw
    left = {k: v for k, v in left.items() if v}
    right = {k: v for k, v in right.items() if v}
    return left, right


__all__ = [
    "KTypeTerm",
    "QuatInductionDatum",
    "exact_sequence_ktype_diff",
    "f44_datum",
    "r1_ktype",
    "r1_ktypes",
    "seesaw_ktype_identity",
    "seesaw_multiplicity",
    "su21_datum",
    "u1_su3_in_sp6",
]
