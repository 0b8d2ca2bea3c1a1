"""Invariant dimensions in the K_H-types V(n omega) of minimal representations.

Three compact groups K_H carry the types V(n omega):

==== ======= =====================
E6   Sp(8)   omega_4 = (1,1,1,1)
E7   SU(8)   omega_4 = (1,1,1,1,0,0,0,0)
E8   Spin16  omega_8 = (1/2)^8
==== ======= =====================

For each we count invariants of two subgroups, K~ (the compact part of
the centralizer of split G2) and K' = SU(2)_l x SU(2)_s (the compact part
of G2).  Each count is available by a combinatorial case algorithm, by a
closed binomial formula where one is known, and by restricting the
character outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterator

from .branching import (
    branch_gl_to_gl_gl,
    branch_sp8_mintype_su2l,
    branch_sp_to_gl,
    branch_spin_to_gl,
    branch_su8_mintype_su2l,
    branch_Vn0_to_sp6,
    interlacing_count,
    interlacing_lowers,
    o3_invariant_profile,
    su6_weight,
)
from .characters import DominantCharacter, LatticeMap, branch, irreducible_character
from .roots import CartanType, Group, RootSystem, Weight, build_root_system, gl, su2


def sym_power_dim(d: int, n: int) -> int:
    """dim Sym^n of a d-dimensional space; 0 for negative n."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return comb(n + d - 1, d - 1) if n >= 0 else 0


# -- n-strings -------------------------------------------------------------


@dataclass(frozen=True)
class NString:
    """n >= a_1 >= ... >= a_7 >= 0."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        e = (self.n, *self.entries, 0)
        if len(self.entries) != 7 or any(x < y for x, y in zip(e, e[1:])):
            raise ValueError(f"not an n-string: {self.n}, {self.entries}")

    def monomial(self) -> tuple[int, ...]:
        """Exponents of x_1 ... x_8 attached to the string."""
        e = (self.n, *self.entries, 0)
        return tuple(x - y for x, y in zip(e, e[1:]))


def n_strings(n: int, length: int = 7) -> Iterator[tuple[int, ...]]:
    def rec(top: int, k: int, acc: tuple):
        if k == length:
            yield acc
            return
        for x in range(top, -1, -1):
            yield from rec(x, k + 1, acc + (x,))

    yield from rec(n, 0, ())


def n_string_count(n: int) -> tuple[int, int]:
    """(enumerated count, C(n+7, 7)); raises if they differ."""
    if n < 0:
        raise ValueError("n must be >= 0")
    enumerated = sum(1 for _ in n_strings(n))
    closed = comb(n + 7, 7)
    if enumerated != closed:
        raise ArithmeticError(f"n-string count {enumerated} != C({n}+7,7) = {closed}")
    return enumerated, closed


# -- the three cases -------------------------------------------------------


@dataclass(frozen=True)
class DualPairCase:
    label: str
    kh: RootSystem
    omega: Weight
    k_prime_map: Callable[[], LatticeMap]
    k_tilde_map: Callable[[], LatticeMap]
    p_dim: int | None  # dim of p in the centralizer of G2, when a closed form is known

    def minimal_type(self, n: int) -> DominantCharacter:
        return irreducible_character(self.kh, self.omega * n)


def _sp8() -> RootSystem:
    return build_root_system(CartanType("C", 4))


def _su8() -> RootSystem:
    return build_root_system(CartanType("A", 7))


def _spin16() -> RootSystem:
    return build_root_system(CartanType("D", 8))


def _k_prime_target() -> Group:
    return Group.of(su2(), su2())


def _k_prime_sp8() -> LatticeMap:
    # SU(2)_l on the first long root, SU(2)_s diagonal in the other three
    return LatticeMap.from_function(_sp8(), _k_prime_target(), lambda x: [x[0], x[1] + x[2] + x[3]])


def _su8_to_k_prime(x):
    return [x[0] - x[1], x[2] - x[3] + x[4] - x[5] + x[6] - x[7]]


def _k_prime_su8() -> LatticeMap:
    return LatticeMap.from_function(_su8(), _k_prime_target(), _su8_to_k_prime)


def _k_prime_spin16() -> LatticeMap:
    return LatticeMap.from_function(_spin16(), _k_prime_target(), _su8_to_k_prime)


def _k_tilde_sp8() -> LatticeMap:
    # SO(3) torus (weights 1, 0, -1 in 2j units) and the centre of GL(3)
    tgt = Group.of(su2(), gl(1))
    return LatticeMap.from_function(_sp8(), tgt, lambda x: [2 * (x[0] - x[2]), x[0] + x[1] + x[2]])


def _k_tilde_su8() -> LatticeMap:
    # diagonal GL(3) in SL(4) x SL(4), each copy via g -> diag(g, det g^-1)
    return LatticeMap.from_function(
        _su8(), gl(3), lambda x: [x[j] - x[3] + x[4 + j] - x[7] for j in range(3)]
    )


def _k_tilde_spin16() -> LatticeMap:
    tgt = Group.of(su2(), build_root_system(CartanType("C", 3)))
    return LatticeMap.from_function(
        _spin16(), tgt, lambda x: [x[0] - x[1], x[2] - x[3], x[4] - x[5], x[6] - x[7]]
    )


CASES: dict[str, DualPairCase] = {
    "E6": DualPairCase("E6", _sp8(), Weight([1, 1, 1, 1]), _k_prime_sp8, _k_tilde_sp8, 5),
    "E7": DualPairCase("E7", _su8(), Weight([1, 1, 1, 1, 0, 0, 0, 0]), _k_prime_su8, _k_tilde_su8, 12),
    "E8": DualPairCase("E8", _spin16(), Weight([Fraction(1, 2)] * 8), _k_prime_spin16, _k_tilde_spin16, None),
}


def _case(case: DualPairCase | str) -> DualPairCase:
    if isinstance(case, DualPairCase):
        return case
    try:
        return CASES[case.upper()]
    except KeyError:
        raise ValueError(f"unknown case {case!r}; expected one of {sorted(CASES)}") from None


# -- K~ invariants ---------------------------------------------------------


def dim_invariants_Ktilde(case: DualPairCase | str, n: int) -> int:
    """dim V(n omega)^K~ by the interlacing case analysis."""
    case = _case(case)
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    if case.label == "E6":
        # GL(4)-types, then GL(3)-types by interlacing, then O(3) acting by det^n
        for lam in branch_sp_to_gl(4, n):
            for mu in interlacing_lowers(lam):
                prof = o3_invariant_profile(*mu)
                if prof.so3_invariant and prof.det_power_parity == n % 2:
                    total += 1
    elif case.label == "E7":
        # V(lam) x V(lam') of GL(4)^2 contains V(mu) x V(mu)^* of the diagonal GL(3)
        for lam, lam2 in branch_gl_to_gl_gl(4, n):
            for mu in interlacing_lowers(lam):
                dual = tuple(n - x for x in reversed(mu))
                total += interlacing_count(lam, mu) * interlacing_count(lam2, dual)
    elif case.label == "E8":
        # V(l1,l1,...,l4,l4) of GL~(8) against V(d,d) x V(a,a,b,b,c,c), d determined
        for lam in branch_spin_to_gl(4, n):
            mu = lam[0::2]
            total += sum(1 for _ in interlacing_lowers(mu))
    else:
        raise ValueError(f"unknown case {case.label}")
    return total


def dim_invariants_Ktilde_oracle(case: DualPairCase | str, n: int) -> int:
    """dim V(n omega)^K~ by restricting the character of V(n omega)."""
    case = _case(case)
    d = branch(case.minimal_type(n), case.k_tilde_map())
    if case.label == "E6":
        # SO(3)-invariants on which -1 in O(3) acts by (-1)^n
        return sum(m for w, m in d.items() if w[0] == 0 and (int(w[1]) - n) % 2 == 0)
    if case.label == "E7":
        return d.multiplicity((0, 0, 0))
    return d.multiplicity((0, 0, 0, 0))


# -- SU(2)_s counts in SU(6) modules -----------------------------------------


def su2s_invariants_closed(a: int, b: int) -> int:
    """C(a+5,5) C(b+5,5) - C(a+3,5) C(b+3,5)."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")
    return comb(a + 5, 5) * comb(b + 5, 5) - comb(a + 3, 5) * comb(b + 3, 5)


def _su6() -> RootSystem:
    return build_root_system(CartanType("A", 5))


def su6_to_su2s() -> LatticeMap:
    """SU(2) acting diagonally on C^6 = C^2 + C^2 + C^2."""
    return LatticeMap.from_function(_su6(), su2(), lambda x: [x[0] - x[1] + x[2] - x[3] + x[4] - x[5]])


@lru_cache(maxsize=None)
def su2s_invariants_oracle(a: int, b: int) -> int:
    """SU(2)_s-invariants of V(a omega_2 + b omega_4) of SU(6), by restriction."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")
    c = irreducible_character(_su6(), su6_weight(a, b))
    return branch(c, su6_to_su2s()).multiplicity((0,))


def sp6_su2s_invariants_oracle(c: int) -> int:
    """SU(2)_s-invariants of V(c,c,0) of Sp(6), SU(2)_s diagonal in SU(2)^3."""
    sp6 = build_root_system(CartanType("C", 3))
    lm = LatticeMap.from_function(sp6, su2(), lambda x: [x[0] + x[1] + x[2]])
    return branch(irreducible_character(sp6, (c, c, 0)), lm).multiplicity((0,))


# -- K' invariants ---------------------------------------------------------

METHODS = ("closed", "chain", "oracle")


def dim_invariants_Kprime(case: DualPairCase | str, n: int, method: str = "closed") -> int:
    """dim V(n omega)^K' by closed formula, by the SU(2)_l-then-SU(2)_s chain, or by restriction."""
    case = _case(case)
    if n < 0:
        raise ValueError("n must be >= 0")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "oracle":
        return _k_prime_oracle(case.label, n)
    if case.label == "E8":
        raise NotImplementedError("no closed form or chain rule is available for E8")
    if method == "closed":
        if case.label == "E6":
            return comb(n + 4, 4)
        return comb(n + 11, 11) - comb(n + 7, 11)
    if case.label == "E6":
        # V(n,n,0) = V_{n,0} - V_{n-1,0} as Sp(6)-modules
        upper = set(branch_Vn0_to_sp6(n))
        lower = set(branch_Vn0_to_sp6(n - 1)) if n else set()
        if upper - lower != {branch_sp8_mintype_su2l(n)} or not lower <= upper:
            raise ArithmeticError("Sp(6) quotient bookkeeping failed")
        return su2s_invariants_closed(n, 0) - (su2s_invariants_closed(n - 1, 0) if n else 0)
    return sum(su2s_invariants_closed(a, b) for a, b in branch_su8_mintype_su2l(n))


@lru_cache(maxsize=None)
def _k_prime_oracle(label: str, n: int) -> int:
    case = CASES[label]
    return branch(case.minimal_type(n), case.k_prime_map()).multiplicity((0, 0))


__all__ = [
    "CASES",
    "DualPairCase",
    "METHODS",
    "NString",
    "dim_invariants_Kprime",
    "dim_invariants_Ktilde",
    "dim_invariants_Ktilde_oracle",
    "n_string_count",
    "n_strings",
    "sp6_su2s_invariants_oracle",
    "su2s_invariants_closed",
    "su2s_invariants_oracle",
    "su6_to_su2s",
    "sym_power_dim",
]
