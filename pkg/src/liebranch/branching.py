"""Closed-form branching rules and their character-restriction oracles.

Highest weights of GL(m) are weakly decreasing tuples; half-integral
tuples stand for weights of the double cover.  Every closed-form rule has
an ``*_oracle`` twin that restricts the actual character and decomposes
it, so the two can be compared as multisets.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .characters import Decomposition, LatticeMap, branch, irreducible_character
from .roots import Group, Weight, build_root_system, CartanType, gl, su2

HALF = Fraction(1, 2)


def _as_tuple(xs: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


def _tidy(xs: Sequence[Fraction]) -> tuple:
    """Use ints where possible so results print and compare cleanly."""
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in xs)


def is_gl_weight(t: Sequence) -> bool:
    t = _as_tuple(t)
    if any(a < b for a, b in zip(t, t[1:])):
        return False
    return len({x - int(x // 1) for x in t}) <= 1


def _decreasing(length: int, hi, lo, step=1) -> Iterator[tuple]:
    """Weakly decreasing tuples with entries in {hi, hi - step, ..., >= lo}."""
    hi, lo = Fraction(hi), Fraction(lo)
    if hi < lo:
        return
    values = []
    v = hi
    while v >= lo:
        values.append(v)
        v -= step

    def rec(k: int, start: int, acc: list):
        if k == length:
            yield _tidy(acc)
            return
        for i in range(start, len(values)):
            yield from rec(k + 1, i, acc + [values[i]])

    yield from rec(0, 0, [])


# -- Levi branchings -------------------------------------------------------


def branch_sp_to_gl(m: int, n: int) -> list[tuple]:
    """GL(m)-constituents of V(n omega_m) of Sp(2m): n >= l_1 >= ... >= l_m >= -n, l_i = n mod 2."""
    _check_mn(m, n)
    return list(_decreasing(m, n, -n, 2))


def branch_gl_to_gl_gl(m: int, n: int) -> list[tuple[tuple, tuple]]:
    """GL(m) x GL(m)-constituents of V(n^m, 0^m) of GL(2m).

    The first tuple runs over n >= l_1 >= ... >= l_m >= 0 and the second
    is its complement (n - l_m, ..., n - l_1).
    """
    _check_mn(m, n)
    return [(lam, tuple(n - x for x in reversed(lam))) for lam in _decreasing(m, n, 0)]


def branch_spin_to_gl(m: int, n: int) -> list[tuple]:
    """Constituents of the n-th power of a half-spin module of Spin(4m) under GL~(2m).

    Tuples have paired equal entries in [-n/2, n/2], all congruent to n/2.
    """
    _check_mn(m, n)
    h = Fraction(n, 2)
    out = []
    for lam in _decreasing(m, h, -h):
        out.append(_tidy([x for x in lam for _ in range(2)]))
    return out


def _check_mn(m: int, n: int) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")


def _levi_setup(kind: str, m: int, n: int):
    if kind == "sp":
        src = build_root_system(CartanType("C", m))
        hw = [n] * m
        tgt = Group.of(gl(m))
    elif kind == "gl":
        src = gl(2 * m)
        hw = [n] * m + [0] * m
        tgt = Group.of(gl(m), gl(m))
    elif kind == "spin":
        src = build_root_system(CartanType("D", 2 * m))
        hw = [Fraction(n, 2)] * (2 * m)
        tgt = Group.of(gl(2 * m))
    else:
        raise ValueError(f"unknown Levi branching {kind!r}")
    eye = [[int(i == j) for j in range(src.dim)] for i in range(src.dim)]
    return irreducible_character(src, hw), LatticeMap(src, tgt, eye)


@lru_cache(maxsize=None)
def _levi_oracle(kind: str, m: int, n: int) -> Decomposition:
    c, lm = _levi_setup(kind, m, n)
    return branch(c, lm)


def branch_sp_to_gl_oracle(m: int, n: int) -> Decomposition:
    return _levi_oracle("sp", m, n)


def branch_gl_to_gl_gl_oracle(m: int, n: int) -> Decomposition:
    return _levi_oracle("gl", m, n)


def branch_spin_to_gl_oracle(m: int, n: int) -> Decomposition:
    return _levi_oracle("spin", m, n)


def levi_rule_as_decomposition(kind: str, m: int, n: int) -> Decomposition:
    """The closed-form list packaged in the oracle's target group."""
    if kind == "sp":
        g, weights = Group.of(gl(m)), branch_sp_to_gl(m, n)
    elif kind == "gl":
        g = Group.of(gl(m), gl(m))
        weights = [a + b for a, b in branch_gl_to_gl_gl(m, n)]
    elif kind == "spin":
        g, weights = Group.of(gl(2 * m)), branch_spin_to_gl(m, n)
    else:
        raise ValueError(f"unknown Levi branching {kind!r}")
    table: dict = {}
    for w in weights:
        table[w] = table.get(w, 0) + 1
    return Decomposition.from_weights(g, table)


# -- Gelfand-Zetlin --------------------------------------------------------


def interlacing_count(upper: Sequence, lower: Sequence) -> int:
    """1 if ``upper[i] >= lower[i] >= upper[i+1]`` for all i, else 0."""
    upper, lower = _as_tuple(upper), _as_tuple(lower)
    if len(lower) != len(upper) - 1:
        raise ValueError(f"lengths {len(upper)} and {len(lower)} do not differ by one")
    if upper and lower and (upper[0] - lower[0]).denominator != 1:
        return 0
    ok = all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))
    return int(ok)


def interlacing_lowers(upper: Sequence) -> Iterator[tuple]:
    """All tuples interlacing below ``upper`` (same residue mod Z)."""
    upper = _as_tuple(upper)
    ranges = []
    for i in range(len(upper) - 1):
        lo, hi = upper[i + 1], upper[i]
        ranges.append([lo + j for j in range(int(hi - lo) + 1)])
    for combo in product(*ranges):
        yield _tidy(combo)


def gz_multiplicity(upper: Sequence, lower: Sequence) -> int:
    """Number of interlacing chains from ``upper`` down to ``lower``.

    Equals the multiplicity of V(lower) in the restriction of V(upper)
    from GL(k) to the GL(j) on the first j coordinates.
    """
    upper, lower = _as_tuple(upper), _as_tuple(lower)
    if len(lower) >= len(upper):
        raise ValueError("lower must be shorter than upper")
    if len(lower) == len(upper) - 1:
        return interlacing_count(upper, lower)
    return sum(gz_multiplicity(mid, lower) for mid in interlacing_lowers(upper))


class O3Profile(NamedTuple):
    so3_invariant: int
    det_power_parity: int | None


def o3_invariant_profile(a: int, b: int, c: int) -> O3Profile:
    """SO(3)-invariants in V(a,b,c) of GL(3), and how O(3) acts on them.

    An invariant exists (and is unique up to scalar) iff a = b = c mod 2;
    then O(3) acts on it through det^(a+b+c).
    """
    if not (a >= b >= c):
        raise ValueError(f"({a},{b},{c}) is not dominant")
    if a % 2 == b % 2 == c % 2:
        return O3Profile(1, (a + b + c) % 2)
    return O3Profile(0, None)


def so3_invariant_oracle(a: int, b: int, c: int) -> int:
    """SO(3)-invariants of V(a,b,c) by restricting along a maximal torus of SO(3)."""
    # SO(3) torus inside GL(3) acts with weights (1, 0, -1); 2j-convention on SU(2)
    lm = LatticeMap(gl(3), su2(), [[2, 0, -2]])
    return branch(irreducible_character(gl(3), (a, b, c)), lm).multiplicity((0,))


# -- rules used for the compact G2 side ------------------------------------


def branch_sp8_mintype_su2l(n: int) -> tuple[int, int, int]:
    """Sp(6)-module of SU(2)_l-invariants in V(n omega_4) of Sp(8)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (n, n, 0)


def branch_su8_mintype_su2l(n: int) -> list[tuple[int, int]]:
    """Labels (a, b) of the SU(6)-constituents a omega_2 + b omega_4 of the SU(2)_l-invariants."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [(a, n - a) for a in range(n, -1, -1)]


def branch_Vn0_to_sp6(n: int) -> list[tuple[int, int, int]]:
    """Sp(6)-constituents of V_{n,0} = V(n omega_2) of SU(6)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [(c, c, 0) for c in range(n, -1, -1)]


def su6_weight(a: int, b: int) -> tuple[int, ...]:
    """a omega_2 + b omega_4 of SU(6) as a tuple."""
    return (a + b, a + b, b, b, 0, 0)


def _sp8() -> object:
    return build_root_system(CartanType("C", 4))


def _su(m: int):
    return build_root_system(CartanType("A", m - 1))


def sp8_to_su2l_sp6() -> LatticeMap:
    """Sp(8) -> SU(2)_l x Sp(6): the long-root SU(2) on the first coordinate."""
    src = _sp8()
    tgt = Group.of(su2(), build_root_system(CartanType("C", 3)))
    return LatticeMap.from_function(src, tgt, lambda x: [x[0], x[1], x[2], x[3]])


def su8_to_su2l_su6() -> LatticeMap:
    """SU(8) -> SU(2)_l x SU(6): SU(2)_l acts on the first two coordinates."""
    tgt = Group.of(su2(), _su(6))
    return LatticeMap.from_function(_su(8), tgt, lambda x: [x[0] - x[1], *x[2:]])


def su6_to_sp6() -> LatticeMap:
    """SU(6) -> Sp(6) with the coordinate pairs (1,2), (3,4), (5,6) as (t, 1/t)."""
    tgt = build_root_system(CartanType("C", 3))
    return LatticeMap.from_function(_su(6), tgt, lambda x: [x[0] - x[1], x[2] - x[3], x[4] - x[5]])


def _invariant_part(d: Decomposition, slot: int = 0) -> dict[tuple, int]:
    """Constituents trivial on the first factor, read on the remaining factors."""
    g = d.group
    first = g.slices[slot]
    out: dict[tuple, int] = {}
    for w, m in d.items():
        if all(x == 0 for x in w[first]):
            rest = Weight(w[: first.start]).concat(w[first.stop :])
            out[_tidy(rest)] = out.get(_tidy(rest), 0) + m
    return out


def branch_sp8_mintype_su2l_oracle(n: int) -> dict[tuple, int]:
    c = irreducible_character(_sp8(), [n] * 4)
    return _invariant_part(branch(c, sp8_to_su2l_sp6()))


def branch_su8_mintype_su2l_oracle(n: int) -> dict[tuple, int]:
    c = irreducible_character(_su(8), [n] * 4 + [0] * 4)
    return _invariant_part(branch(c, su8_to_su2l_su6()))


def branch_Vn0_to_sp6_oracle(n: int) -> dict[tuple, int]:
    c = irreducible_character(_su(6), su6_weight(n, 0))
    return {_tidy(w): m for w, m in branch(c, su6_to_sp6()).items()}


__all__ = [
    "O3Profile",
    "branch_Vn0_to_sp6",
    "branch_Vn0_to_sp6_oracle",
    "branch_gl_to_gl_gl",
    "branch_gl_to_gl_gl_oracle",
    "branch_sp8_mintype_su2l",
    "branch_sp8_mintype_su2l_oracle",
    "branch_sp_to_gl",
    "branch_sp_to_gl_oracle",
    "branch_spin_to_gl",
    "branch_spin_to_gl_oracle",
    "branch_su8_mintype_su2l",
    "branch_su8_mintype_su2l_oracle",
    "gz_multiplicity",
    "interlacing_count",
    "interlacing_lowers",
    "is_gl_weight",
    "levi_rule_as_decomposition",
    "o3_invariant_profile",
    "so3_invariant_oracle",
    "sp8_to_su2l_sp6",
    "su6_to_sp6",
    "su6_weight",
    "su8_to_su2l_su6",
]
