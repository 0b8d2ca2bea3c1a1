"""Root systems of the simple types in exact epsilon-coordinates.

Every root system is realized in a standard orthogonal ambient space (the
usual Bourbaki tables), so the invariant form is the dot product.  Weights
are tuples of :class:`fractions.Fraction`; the fast paths used by the
character machinery work on integer keys, i.e. coordinates multiplied by
a per-system ``scale`` (2 for everything except E6, whose fundamental
weights have denominator 3).

Type A is realized on n+1 coordinates.  ``build_root_system(CartanType("A", n))``
gives SU(n+1) semantics (weights are GL-tuples read modulo (1,...,1));
:func:`gl` gives GL(m), where tuples are taken literally.  SU(2) is also
available in its one-coordinate Sp(2) = C1 model via :func:`su2`, where a
weight is the single integer 2j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, lcm, prod
from typing import Iterable, Sequence

import numpy as np
import sympy

SERIES = "ABCDEFG"


class Weight(tuple):
    """An exact vector in epsilon-coordinates.

    A tuple of Fractions with vector arithmetic: ``+``/``-`` act
    coordinate-wise (not as tuple concatenation) and ``*`` scales.
    Compares and hashes equal to the plain tuple of its coordinates, so
    ``Weight((1, 0)) == (1, 0)``.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in coords))

    def _zip(self, other):
        if len(self) != len(other):
            raise ValueError(f"dimension mismatch: {len(self)} vs {len(other)}")
        return zip(self, other)

    def __add__(self, other):
        return Weight(a + b for a, b in self._zip(other))

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return Weight(other).__add__(self)

    def __sub__(self, other):
        return Weight(a - b for a, b in self._zip(other))

    def __rsub__(self, other):
        return Weight(other).__sub__(self)

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, c):
        if isinstance(c, (tuple, list)):
            return NotImplemented
        c = Fraction(c)
        return Weight(c * a for a in self)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return Weight(a / c for a in self)

    def __getitem__(self, item):
        out = super().__getitem__(item)
        return Weight(out) if isinstance(item, slice) else out

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self) + ")"

    def __str__(self):
        return "(" + ",".join(str(c) for c in self) + ")"

    def concat(self, other: Sequence) -> "Weight":
        return Weight(tuple(self) + tuple(Weight(other)))

    def scaled(self, scale: int) -> tuple[int, ...]:
        """Integer key ``scale * self``; raises if not integral."""
        out = []
        for c in self:
            v = c * scale
            if v.denominator != 1:
                raise ValueError(f"{self!r} is not integral at scale {scale}")
            out.append(int(v))
        return tuple(out)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True, order=True)
class CartanType:
    """Series letter plus rank, e.g. ``CartanType("E", 8)``."""

    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s not in SERIES or len(s) != 1:
            raise ValueError(f"unknown series {s!r}")
        if not isinstance(n, int):
            raise TypeError("rank must be an int")
        ok = {
            "A": n >= 0,  # A0 only as the GL(1) torus, see gl()
            "B": n >= 2,
            "C": n >= 1,  # C1 is the one-coordinate model of SU(2)
            "D": n >= 2,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[s]
        if not ok:
            raise ValueError(f"invalid rank {n} for series {s}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        return cls(text[0].upper(), int(text[1:]))

    @property
    def ambient_dim(self) -> int:
        s, n = self.series, self.rank
        if s == "A":
            return n + 1
        return {"E": 8, "F": 4, "G": 3}.get(s, n)

    @property
    def lie_algebra_dim(self) -> int:
        """Dimension of the simple Lie algebra (semisimple part for A0)."""
        s, n = self.series, self.rank
        npos = {
            "A": n * (n + 1) // 2,
            "B": n * n,
            "C": n * n,
            "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
            "F": 24,
            "G": 6,
        }[s]
        return 2 * npos + n

    def __str__(self):
        return f"{self.series}{self.rank}"


def _e(n: int, *entries) -> Weight:
    """Vector of length n from (index, value) pairs, 1-based indices."""
    v = [Fraction(0)] * n
    for i, c in entries:
        v[i - 1] += Fraction(c)
    return Weight(v)


def _simple_roots(t: CartanType) -> list[Weight]:
    s, n, d = t.series, t.rank, t.ambient_dim
    if s == "A":
        return [_e(d, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if s in "BCD":
        roots = [_e(d, (i, 1), (i + 1, -1)) for i in range(1, n)]
        if s == "B":
            roots.append(_e(d, (n, 1)))
        elif s == "C":
            roots.append(_e(d, (n, 2)))
        else:
            roots.append(_e(d, (n - 1, 1), (n, 1)))
        return roots
    if s == "G":
        return [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
    if s == "F":
        h = Fraction(1, 2)
        return [
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1), (4, -1)),
            _e(4, (4, 1)),
            _e(4, (1, h), (2, -h), (3, -h), (4, -h)),
        ]
    # E_n: the first n simple roots of E8 in Bourbaki's realization
    h = Fraction(1, 2)
    e8 = [
        Weight([h, -h, -h, -h, -h, -h, -h, h]),
        _e(8, (1, 1), (2, 1)),
        _e(8, (1, -1), (2, 1)),
        _e(8, (2, -1), (3, 1)),
        _e(8, (3, -1), (4, 1)),
        _e(8, (4, -1), (5, 1)),
        _e(8, (5, -1), (6, 1)),
        _e(8, (6, -1), (7, 1)),
    ]
    return e8[:n]


def _positive_roots(simple: list[Weight]) -> list[Weight]:
    """Close the simple roots under root strings (p - q = <beta, alpha^vee>)."""
    ints = [a.scaled(2) for a in simple]
    norms = [sum(x * x for x in a) for a in ints]
    known = set(ints)
    roots = list(ints)
    frontier = list(ints)
    while frontier:
        new = []
        for beta in frontier:
            for a, nn in zip(ints, norms):
                cur = tuple(x - y for x, y in zip(beta, a))
                p = 0
                while cur in known:
                    p += 1
                    cur = tuple(x - y for x, y in zip(cur, a))
                if p * nn > 2 * sum(x * y for x, y in zip(beta, a)):
                    gamma = tuple(x + y for x, y in zip(beta, a))
                    if gamma not in known:
                        known.add(gamma)
                        new.append(gamma)
        roots.extend(new)
        frontier = new
    return [Weight(Fraction(x, 2) for x in r) for r in roots]


def _solve_in_span(basis: list[Weight], targets: list[list[Fraction]]) -> list[Weight]:
    """For each target row t, the vector v in span(basis) with (basis_j, v) = t_j."""
    gram = sympy.Matrix([[sympy.Rational(dot(a, b)) for b in basis] for a in basis])
    inv = gram.inv()
    out = []
    for t in targets:
        coeffs = inv * sympy.Matrix([sympy.Rational(x) for x in t])
        v = sum(
            (Fraction(int(c.p), int(c.q)) * a for c, a in zip(coeffs, basis)),
            Weight([0] * len(basis[0])),
        )
        out.append(v)
    return out


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root datum of a simple type (or GL(m)) in epsilon-coordinates.

    ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee>``.  Fundamental weights
    satisfy ``<omega_i, alpha_j^vee> = delta_ij``; fundamental coweights lie
    in the span of the roots and satisfy ``<alpha_j, omega_i^vee> = delta_ij``.
    For type A the fundamental weights are the GL-style ``(1^i, 0^{n+1-i})``.
    """

    cartan_type: CartanType
    gl: bool
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[Weight, ...]
    fundamental_coweights: tuple[Weight, ...]
    rho: Weight
    form: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def dim(self) -> int:
        """Dimension of the ambient (epsilon) space."""
        return len(self.form)

    @property
    def lie_algebra_dim(self) -> int:
        return 2 * len(self.positive_roots) + (self.dim if self.gl else self.rank)

    def __repr__(self):
        prefix = "GL" if self.gl else ""
        if self.gl:
            return f"RootSystem(GL{self.dim})"
        return f"RootSystem({prefix}{self.cartan_type})"

    @cached_property
    def name(self) -> str:
        return f"GL{self.dim}" if self.gl else str(self.cartan_type)

    # -- exact layer ----------------------------------------------------

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return dot(u, v)

    def pair(self, w: Sequence, c: Sequence) -> Fraction:
        """``<w, c>`` for a weight w and a coweight c (both in the ambient space)."""
        return self.inner(w, c)

    @staticmethod
    def coroot(alpha: Weight) -> Weight:
        return alpha * (Fraction(2) / dot(alpha, alpha))

    @cached_property
    def simple_coroots(self) -> tuple[Weight, ...]:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @cached_property
    def positive_coroots(self) -> tuple[Weight, ...]:
        return tuple(self.coroot(a) for a in self.positive_roots)

    def dynkin_labels(self, w: Sequence) -> tuple[Fraction, ...]:
        w = Weight(w)
        return tuple(self.inner(w, c) for c in self.simple_coroots)

    def is_integral(self, w: Sequence) -> bool:
        return all(x.denominator == 1 for x in self.dynkin_labels(w))

    def is_dominant(self, w: Sequence) -> bool:
        return all(x >= 0 for x in self.dynkin_labels(w))

    def simple_root_coefficients(self, w: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of (the root-span part of) w in the simple-root basis."""
        w = Weight(w)
        return tuple(self.inner(w, c) for c in self.fundamental_coweights)

    def from_dynkin_labels(self, labels: Sequence[int]) -> Weight:
        out = Weight([0] * self.dim)
        for c, om in zip(labels, self.fundamental_weights, strict=True):
            out = out + Fraction(c) * om
        return out

    def weyl_dim(self, hw: Sequence) -> int:
        """Weyl dimension formula; exact."""
        hw = Weight(hw)
        if len(hw) != self.dim:
            raise ValueError(f"weight must have length {self.dim}")
        if not (self.is_dominant(hw) and self.is_integral(hw)):
            raise ValueError(f"{hw} is not a dominant integral weight of {self.name}")
        shifted = hw + self.rho
        num, den = Fraction(1), Fraction(1)
        for cor in self.positive_coroots:
            num *= dot(shifted, cor)
            den *= dot(self.rho, cor)
        q = num / den
        assert q.denominator == 1
        return int(q)

    @cached_property
    def _heights(self) -> list[int]:
        return [int(sum(self.simple_root_coefficients(a))) for a in self.positive_roots]

    @cached_property
    def _supports(self) -> list[frozenset[int]]:
        return [
            frozenset(i for i, c in enumerate(self.simple_root_coefficients(a)) if c)
            for a in self.positive_roots
        ]

    def parabolic_order(self, nodes: Iterable[int]) -> int:
        """Order of the Weyl group generated by the given simple reflections (0-based).

        Uses Macdonald's product  |W| = prod (ht(b) + 1) / ht(b)  over the
        positive roots b of the subsystem.
        """
        nodes = frozenset(nodes)
        out = Fraction(1)
        for h, supp in zip(self._heights, self._supports):
            if supp <= nodes:
                out *= Fraction(h + 1, h)
        assert out.denominator == 1
        return int(out)

    @cached_property
    def weyl_group_order(self) -> int:
        return self.parabolic_order(range(self.rank))

    def stabilizer_order(self, w: Sequence) -> int:
        """Order of the stabilizer of a dominant weight (a parabolic subgroup)."""
        labels = self.dynkin_labels(w)
        if any(x < 0 for x in labels):
            raise ValueError(f"{Weight(w)} is not dominant")
        return self.parabolic_order(i for i, x in enumerate(labels) if x == 0)

    def orbit_size(self, w: Sequence) -> int:
        return self.weyl_group_order // self.stabilizer_order(self.dominant_conjugate(w))

    def reflect(self, w: Sequence, i: int) -> Weight:
        """Simple reflection s_i (0-based index)."""
        w = Weight(w)
        a = self.simple_roots[i]
        return w - dot(w, self.simple_coroots[i]) * a

    def dominant_conjugate(self, w: Sequence) -> Weight:
        key = self.to_key(w)
        return self.from_key(self.dominant_key(key))

    def orbit(self, w: Sequence) -> list[Weight]:
        """The Weyl orbit of w, each element once, in a deterministic order."""
        key = self.dominant_key(self.to_key(w))
        return [self.from_key(tuple(int(x) for x in row)) for row in self.orbit_array(key)]

    # -- integer-key layer ----------------------------------------------

    @cached_property
    def scale(self) -> int:
        dens = [c.denominator for v in (*self.fundamental_weights, self.rho) for c in v]
        return lcm(2, *dens)

    def to_key(self, w: Sequence, scale: int | None = None) -> tuple[int, ...]:
        w = Weight(w)
        if len(w) != self.dim:
            raise ValueError(f"weight must have length {self.dim}")
        return w.scaled(scale or self.scale)

    def from_key(self, key: Sequence[int], scale: int | None = None) -> Weight:
        s = scale or self.scale
        return Weight(Fraction(int(k), s) for k in key)

    @lru_cache(maxsize=None)
    def int_simple_roots(self, scale: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Pairs (scaled simple root, its squared norm) at the given scale."""
        out = []
        for a in self.simple_roots:
            k = a.scaled(scale)
            out.append((k, sum(x * x for x in k)))
        return tuple(out)

    def dominant_key(self, key: Sequence[int], scale: int | None = None) -> tuple[int, ...]:
        s = self.cartan_type.series
        if s == "A":
            return tuple(sorted(key, reverse=True))
        if s in "BC":
            return tuple(sorted((abs(x) for x in key), reverse=True))
        if s == "D":
            neg = sum(1 for x in key if x < 0)
            out = sorted((abs(x) for x in key), reverse=True)
            if neg % 2 and out[-1]:
                out[-1] = -out[-1]
            return tuple(out)
        return self.dominant_key_sign(key, scale)[0]

    def dominant_key_sign(self, key: Sequence[int], scale: int | None = None):
        """Conjugate to the dominant chamber by simple reflections.

        Returns ``(dominant key, sign of the Weyl element, regular)`` where
        ``regular`` is False when the result lies on a wall.
        """
        s = self.cartan_type.series
        if s in "ABCD":
            return _classical_dominant_sign(s, tuple(key))
        simple = self.int_simple_roots(scale or self.scale)
        k = list(key)
        sign = 1
        while True:
            for a, nn in simple:
                p = 2 * sum(x * y for x, y in zip(k, a))
                if p < 0:
                    c = p // nn
                    if c * nn != p:
                        raise ValueError(f"{key} is not an integral weight")
                    k = [x - c * y for x, y in zip(k, a)]
                    sign = -sign
                    break
            else:
                break
        regular = all(sum(x * y for x, y in zip(k, a)) > 0 for a, _ in simple)
        return tuple(k), sign, regular

    def is_dominant_key(self, key: Sequence[int], scale: int | None = None) -> bool:
        simple = self.int_simple_roots(scale or self.scale)
        return all(sum(x * y for x, y in zip(key, a)) >= 0 for a, _ in simple)

    def orbit_size_key(self, key: Sequence[int], scale: int | None = None) -> int:
        """Orbit size of a dominant integer key."""
        simple = self.int_simple_roots(scale or self.scale)
        zero = frozenset(i for i, (a, _) in enumerate(simple) if not sum(x * y for x, y in zip(key, a)))
        return self.weyl_group_order // self._parabolic_cached(zero)

    @lru_cache(maxsize=None)
    def _parabolic_cached(self, nodes: frozenset) -> int:
        return self.parabolic_order(nodes)

    def canonical_key(self, key: Sequence[int]) -> tuple[int, ...]:
        """SU(m) weights are read modulo (1,...,1): pin the last coordinate to 0."""
        if self.cartan_type.series == "A" and not self.gl:
            t = key[-1]
            return tuple(x - t for x in key)
        return tuple(key)

    def _orbit_rows(self, key: Sequence[int], scale: int | None = None):
        """Orbit of a dominant key as int64 rows, possibly with uniform repetition.

        Returns ``(rows, repeat)``: every orbit element occurs exactly
        ``repeat`` times among the rows.
        """
        s = self.cartan_type.series
        key = tuple(int(x) for x in key)
        if s == "A":
            return _distinct_permutations(key), 1
        if s in "BCD":
            perms = _distinct_permutations(tuple(abs(x) for x in key))
            n = len(key)
            signs = _sign_patterns(n, even=(s == "D"))
            if s == "D" and key[-1] < 0:
                signs = signs.copy()
                signs[:, -1] *= -1
            zeros = sum(1 for x in key if x == 0)
            if s == "D":
                repeat = 2 ** (zeros - 1) if zeros else 1
            else:
                repeat = 2**zeros
            rows = (perms[:, None, :] * signs[None, :, :]).reshape(-1, n)
            return rows, repeat
        return self._orbit_bfs(key, scale or self.scale), 1

    def orbit_array(self, key: Sequence[int], scale: int | None = None) -> np.ndarray:
        """Distinct orbit elements of a dominant key, sorted lexicographically."""
        rows, repeat = self._orbit_rows(key, scale)
        if repeat != 1:
            rows = np.unique(rows, axis=0)
        return rows

    def _orbit_bfs(self, key, scale) -> np.ndarray:
        simple = self.int_simple_roots(scale)
        seen = {tuple(key)}
        frontier = [tuple(key)]
        while frontier:
            nxt = []
            for k in frontier:
                for a, nn in simple:
                    p = 2 * sum(x * y for x, y in zip(k, a))
                    if p:
                        c = p // nn
                        r = tuple(x - c * y for x, y in zip(k, a))
                        if r not in seen:
                            seen.add(r)
                            nxt.append(r)
            frontier = nxt
        return np.array(sorted(seen), dtype=np.int64).reshape(len(seen), len(key))


def _perm_sign(values: Sequence[int]) -> int:
    """Sign of the permutation sorting ``values`` into weakly decreasing order."""
    order = sorted(range(len(values)), key=lambda i: -values[i])
    seen = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _classical_dominant_sign(series: str, key: tuple[int, ...]):
    """Dominant conjugate, determinant of the conjugating element, regularity."""
    if series == "A":
        out = tuple(sorted(key, reverse=True))
        regular = all(a > b for a, b in zip(out, out[1:]))
        return out, _perm_sign(key), regular
    absval = [abs(x) for x in key]
    flips = sum(1 for x in key if x < 0)
    out = sorted(absval, reverse=True)
    sign = _perm_sign(absval) * (-1) ** flips
    if series == "D":
        if flips % 2:
            # an odd number of flips is completed by flipping the last slot
            out[-1] = -out[-1]
            sign = -sign
        regular = all(a > b for a, b in zip(out[:-1], out[1:-1])) and (
            len(out) < 2 or out[-2] > abs(out[-1])
        )
    else:
        regular = all(a > b for a, b in zip(out, out[1:])) and out[-1] > 0
    return tuple(out), sign, regular


@lru_cache(maxsize=16)
def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _distinct_permutations(key: tuple[int, ...]) -> np.ndarray:
    n = len(key)
    arr = np.asarray(key, dtype=np.int64)
    if n <= 8:
        return np.unique(arr[_all_permutations(n)], axis=0)
    from sympy.utilities.iterables import multiset_permutations

    return np.array(list(multiset_permutations(list(key))), dtype=np.int64)


@lru_cache(maxsize=32)
def _sign_patterns(n: int, even: bool) -> np.ndarray:
    pats = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int64).reshape(-1, n)
    if even:
        pats = pats[(pats < 0).sum(axis=1) % 2 == 0]
    return pats


@lru_cache(maxsize=None)
def build_root_system(t: CartanType | str, gl: bool = False) -> RootSystem:
    """Construct the root system of type ``t`` with Bourbaki numbering."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    if gl and t.series != "A":
        raise ValueError("GL semantics only apply to type A")
    if t.series == "A" and t.rank == 0 and not gl:
        raise ValueError("A0 only exists as the GL(1) torus")
    d = t.ambient_dim
    simple = _simple_roots(t)
    positive = _positive_roots(simple) if simple else []
    cartan = tuple(
        tuple(int(2 * dot(ai, aj) / dot(ai, ai)) for aj in simple) for ai in simple
    )
    if t.series == "A":
        fund = [Weight([1] * i + [0] * (d - i)) for i in range(1, t.rank + 1)]
    else:
        fund = _solve_in_span(
            simple,
            [[(dot(a, a) / 2 if i == j else Fraction(0)) for j, a in enumerate(simple)] for i in range(len(simple))],
        )
    cow = (
        _solve_in_span(simple, [[Fraction(int(i == j)) for j in range(len(simple))] for i in range(len(simple))])
        if simple
        else []
    )
    positive.sort(key=lambda a: (sum(dot(a, c) for c in cow), tuple(-c for c in a)))
    rho = sum(positive, Weight([0] * d)) / 2
    form = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    return RootSystem(
        cartan_type=t,
        gl=gl,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        cartan_matrix=cartan,
        fundamental_weights=tuple(fund),
        fundamental_coweights=tuple(cow),
        rho=rho,
        form=form,
    )


def root_system(name: str) -> RootSystem:
    """``root_system("E8")``; also accepts ``"GL4"`` and ``"SU2"``."""
    name = name.strip().upper()
    if name.startswith("GL"):
        return gl(int(name[2:]))
    if name == "SU2":
        return su2()
    return build_root_system(CartanType.parse(name))


def gl(m: int) -> RootSystem:
    """GL(m) (or its double cover, for half-integral tuples) as a GL-flagged A_{m-1}."""
    if m < 1:
        raise ValueError("GL(m) needs m >= 1")
    return build_root_system(CartanType("A", m - 1), gl=True)


def su2() -> RootSystem:
    """SU(2) = Sp(2) with a single epsilon coordinate; V(x) has dimension x + 1."""
    return build_root_system(CartanType("C", 1))


def pair(rs: RootSystem, w: Sequence, c: Sequence) -> Fraction:
    return rs.pair(w, c)


def weyl_dim(rs: RootSystem, hw: Sequence) -> int:
    return rs.weyl_dim(hw)


# -- products ---------------------------------------------------------------


@dataclass(frozen=True)
class Group:
    """Direct product of root systems; weights are concatenated coordinates."""

    factors: tuple[RootSystem, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a group needs at least one factor")

    @classmethod
    def of(cls, *factors: "RootSystem | Group") -> "Group":
        flat: list[RootSystem] = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, Group) else [f])
        return cls(tuple(flat))

    def __repr__(self):
        return "Group(" + " x ".join(f.name for f in self.factors) + ")"

    @cached_property
    def name(self) -> str:
        return " x ".join(f.name for f in self.factors)

    @cached_property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @cached_property
    def slices(self) -> tuple[slice, ...]:
        out, start = [], 0
        for f in self.factors:
            out.append(slice(start, start + f.dim))
            start += f.dim
        return tuple(out)

    @cached_property
    def scale(self) -> int:
        return lcm(*(f.scale for f in self.factors))

    @cached_property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def _pad(self, i: int, v: Weight) -> Weight:
        before = sum(f.dim for f in self.factors[:i])
        after = self.dim - before - len(v)
        return Weight([0] * before + list(v) + [0] * after)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self._pad(i, a) for i, f in enumerate(self.factors) for a in f.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self._pad(i, a) for i, f in enumerate(self.factors) for a in f.simple_roots)

    @cached_property
    def rho(self) -> Weight:
        out: list[Fraction] = []
        for f in self.factors:
            out.extend(f.rho)
        return Weight(out)

    def split(self, w: Sequence) -> list[Weight]:
        w = Weight(w)
        if len(w) != self.dim:
            raise ValueError(f"weight must have length {self.dim}")
        return [w[s] for s in self.slices]

    def is_dominant(self, w: Sequence) -> bool:
        return all(f.is_dominant(p) for f, p in zip(self.factors, self.split(w)))

    def is_integral(self, w: Sequence) -> bool:
        return all(f.is_integral(p) for f, p in zip(self.factors, self.split(w)))

    def weyl_dim(self, hw: Sequence) -> int:
        return prod(f.weyl_dim(p) for f, p in zip(self.factors, self.split(hw)))

    @cached_property
    def weyl_group_order(self) -> int:
        return prod(f.weyl_group_order for f in self.factors)

    def stabilizer_order(self, w: Sequence) -> int:
        return prod(f.stabilizer_order(p) for f, p in zip(self.factors, self.split(w)))

    def orbit_size(self, w: Sequence) -> int:
        return prod(f.orbit_size(p) for f, p in zip(self.factors, self.split(w)))

    # integer keys at the group scale

    def to_key(self, w: Sequence) -> tuple[int, ...]:
        w = Weight(w)
        if len(w) != self.dim:
            raise ValueError(f"weight must have length {self.dim}")
        return w.scaled(self.scale)

    def from_key(self, key: Sequence[int]) -> Weight:
        return Weight(Fraction(int(k), self.scale) for k in key)

    def dominant_key(self, key: Sequence[int]) -> tuple[int, ...]:
        if len(self.factors) == 1:
            return self.factors[0].dominant_key(key, self.scale)
        out: list[int] = []
        for f, s in zip(self.factors, self.slices):
            out.extend(f.dominant_key(key[s], self.scale))
        return tuple(out)

    def dominant_key_sign(self, key: Sequence[int]):
        out: list[int] = []
        sign, regular = 1, True
        for f, s in zip(self.factors, self.slices):
            k, sg, reg = f.dominant_key_sign(key[s], self.scale)
            out.extend(k)
            sign *= sg
            regular = regular and reg
        return tuple(out), sign, regular

    def is_dominant_key(self, key: Sequence[int]) -> bool:
        return all(f.is_dominant_key(key[s], self.scale) for f, s in zip(self.factors, self.slices))

    def canonical_key(self, key: Sequence[int]) -> tuple[int, ...]:
        if not self._has_su:
            return tuple(key)
        out: list[int] = []
        for f, s in zip(self.factors, self.slices):
            out.extend(f.canonical_key(key[s]))
        return tuple(out)

    @cached_property
    def _has_su(self) -> bool:
        return any(f.cartan_type.series == "A" and not f.gl for f in self.factors)

    def canonical_rows(self, rows: np.ndarray) -> np.ndarray:
        if not self._has_su:
            return rows
        rows = rows.copy()
        for f, s in zip(self.factors, self.slices):
            if f.cartan_type.series == "A" and not f.gl:
                rows[:, s] -= rows[:, s.stop - 1 : s.stop]
        return rows

    def is_trivial_key(self, key: Sequence[int]) -> bool:
        return not any(self.canonical_key(key))

    @cached_property
    def _int_positive_coroot_sum(self) -> np.ndarray:
        # <w, 2 rho^vee> as an integer functional on keys
        s = self.scale
        total = np.zeros(self.dim, dtype=object)
        for a in self.positive_roots:
            k = np.array(a.scaled(s), dtype=object)
            total = total + Fraction(2) * k / int(k.dot(k))
        return total

    def height(self, key: Sequence[int]) -> Fraction:
        """``<w, 2 rho^vee>``; strictly increases along positive roots."""
        return sum((c * int(x) for c, x in zip(self._int_positive_coroot_sum, key)), Fraction(0))

    @cached_property
    def int_simple_matrix(self) -> np.ndarray:
        """Scaled simple roots as rows (for vectorized dominance tests)."""
        if not self.simple_roots:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array([a.scaled(self.scale) for a in self.simple_roots], dtype=np.int64)

    def dominant_mask(self, rows: np.ndarray) -> np.ndarray:
        m = self.int_simple_matrix
        if m.shape[0] == 0:
            return np.ones(rows.shape[0], dtype=bool)
        return np.all(rows @ m.T >= 0, axis=1)

    def orbit_rows(self, key: Sequence[int]):
        """Orbit of a dominant key: ``(rows, repeat)`` as in RootSystem._orbit_rows."""
        parts = []
        repeat = 1
        for f, s in zip(self.factors, self.slices):
            rows, r = f._orbit_rows(key[s], self.scale)
            parts.append(rows)
            repeat *= r
        rows = parts[0]
        for p in parts[1:]:
            a = np.repeat(rows, p.shape[0], axis=0)
            b = np.tile(p, (rows.shape[0], 1))
            rows = np.hstack([a, b])
        return rows, repeat

    def orbit_array(self, key: Sequence[int]) -> np.ndarray:
        rows, repeat = self.orbit_rows(key)
        if repeat != 1:
            rows = np.unique(rows, axis=0)
        return rows


def as_group(g: "RootSystem | Group") -> Group:
    return g if isinstance(g, Group) else Group((g,))


# -- classification ---------------------------------------------------------


def identify_cartan_type(gram: Sequence[Sequence]) -> list[CartanType]:
    """Cartan types of the components of a Gram matrix of simple roots.

    The Gram matrix may carry any positive scaling per component.  Raises
    ValueError if the diagram is not a finite-type Dynkin diagram.
    """
    g = [[Fraction(x) for x in row] for row in gram]
    n = len(g)
    bonds: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j]:
                b = g[i][j] * g[i][j] * 4 / (g[i][i] * g[j][j])
                if b.denominator != 1 or int(b) not in (1, 2, 3):
                    raise ValueError("not a Dynkin diagram")
                bonds[i, j] = int(b)
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for i, j in bonds:
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    out = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(_classify_component(sorted(comp), adj, bonds, g))
    return sorted(out)


def _classify_component(comp, adj, bonds, g) -> CartanType:
    r = len(comp)
    edges = [(i, j, b) for (i, j), b in bonds.items() if i in comp]
    if len(edges) != r - 1:
        raise ValueError("Dynkin diagram has a cycle")
    if r == 1:
        return CartanType("A", 1)
    multi = [e for e in edges if e[2] > 1]
    degrees = {v: len(adj[v]) for v in comp}
    if any(e[2] == 3 for e in multi):
        if r != 2:
            raise ValueError("triple bond outside G2")
        return CartanType("G", 2)
    if len(multi) > 1:
        raise ValueError("more than one multiple bond")
    if multi:
        i, j, _ = multi[0]
        if max(degrees.values()) > 2:
            raise ValueError("branch node together with a double bond")
        if r == 2:
            return CartanType("C", 2)
        ends = [v for v in comp if degrees[v] == 1]
        if i in ends or j in ends:
            end = i if i in ends else j
            other = j if end == i else i
            # C_r: the end node of the double bond is the long root
            return CartanType("C" if g[end][end] > g[other][other] else "B", r)
        if r == 4:
            return CartanType("F", 4)
        raise ValueError("double bond in the middle of a long chain")
    branch = [v for v in comp if degrees[v] == 3]
    if not branch:
        if max(degrees.values()) > 2:
            raise ValueError("not a Dynkin diagram")
        return CartanType("A", r)
    if len(branch) > 1 or max(degrees.values()) > 3:
        raise ValueError("not a Dynkin diagram")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CartanType("D", r)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return CartanType("E", r)
    raise ValueError("not a Dynkin diagram")


def branch_node(rs: RootSystem) -> int:
    """1-based index of the trivalent node of the Dynkin diagram."""
    for i, row in enumerate(rs.cartan_matrix):
        if sum(1 for j, x in enumerate(row) if j != i and x) == 3:
            return i + 1
    raise ValueError(f"{rs.name} has no branch node")


__all__ = [
    "CartanType",
    "Group",
    "RootSystem",
    "Weight",
    "as_group",
    "branch_node",
    "build_root_system",
    "dot",
    "factorial",
    "gl",
    "identify_cartan_type",
    "pair",
    "root_system",
    "su2",
    "weyl_dim",
]
