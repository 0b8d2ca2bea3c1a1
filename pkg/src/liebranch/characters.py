"""Exact characters of compact groups given by products of root systems.

A :class:`DominantCharacter` stores only the dominant weights of a
Weyl-invariant character, keyed by integer coordinates at the group's
scale.  The full weight multiset is recovered by orbit expansion.  All
multiplicities are Python ints.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator, Mapping, Sequence

import numpy as np

from .roots import Group, RootSystem, Weight, as_group

# rows of orbit data handled per numpy batch
CHUNK_ROWS = 1 << 18


class DominantCharacter:
    """Multiplicities of the dominant weights of a Weyl-invariant character."""

    __slots__ = ("group", "table")

    def __init__(self, group, table: Mapping[tuple[int, ...], int]):
        self.group: Group = as_group(group)
        self.table: dict[tuple[int, ...], int] = {
            tuple(int(x) for x in k): int(v) for k, v in table.items() if v
        }

    @classmethod
    def from_weights(cls, group, mults: Mapping[Sequence, int]) -> "DominantCharacter":
        """Build from {dominant weight: multiplicity} with exact weights."""
        g = as_group(group)
        table: dict[tuple[int, ...], int] = {}
        for w, m in mults.items():
            key = g.canonical_key(g.to_key(w))
            if not g.is_dominant_key(key):
                raise ValueError(f"{Weight(w)} is not dominant for {g.name}")
            table[key] = table.get(key, 0) + int(m)
        return cls(g, table)

    def __repr__(self):
        return f"DominantCharacter({self.group.name}, {len(self.table)} dominant weights, dim {self.dimension})"

    def __eq__(self, other):
        if not isinstance(other, DominantCharacter):
            return NotImplemented
        return self.group == other.group and self.table == other.table

    def __add__(self, other: "DominantCharacter") -> "DominantCharacter":
        _check_same(self.group, other.group)
        out = Counter(self.table)
        out.update(other.table)
        return DominantCharacter(self.group, out)

    def scaled(self, c: int) -> "DominantCharacter":
        return DominantCharacter(self.group, {k: c * v for k, v in self.table.items()})

    def multiplicity(self, w: Sequence) -> int:
        """Multiplicity of an arbitrary (not necessarily dominant) weight."""
        g = self.group
        key = g.dominant_key(g.canonical_key(g.to_key(w)))
        return self.table.get(g.canonical_key(key), 0)

    def items(self) -> Iterator[tuple[Weight, int]]:
        """Dominant weights with multiplicities, highest first."""
        g = self.group
        for k in sorted(self.table, key=lambda k: (-g.height(k), tuple(-x for x in k))):
            yield g.from_key(k), self.table[k]

    @property
    def dimension(self) -> int:
        g = self.group
        return sum(_orbit_size_key(g, k) * m for k, m in self.table.items())

    def weights(self) -> Iterator[tuple[Weight, int]]:
        return full_weight_multiset(self)


def _check_same(a: Group, b: Group) -> None:
    if a != b:
        raise ValueError(f"context mismatch: {a.name} vs {b.name}")


def _orbit_size_key(g: Group, key: Sequence[int]) -> int:
    out = 1
    for f, s in zip(g.factors, g.slices):
        out *= f.orbit_size_key(key[s], g.scale)
    return out


class Decomposition:
    """Multiset of irreducible constituents, keyed by highest weight."""

    __slots__ = ("group", "table")

    def __init__(self, group, table: Mapping[tuple[int, ...], int]):
        self.group: Group = as_group(group)
        self.table = {tuple(k): int(v) for k, v in table.items() if v}

    def __repr__(self):
        body = ", ".join(f"{w}:{m}" for w, m in self.items())
        return f"Decomposition({self.group.name}; {body})"

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return self.group == other.group and self.table == other.table
        if isinstance(other, Mapping):
            return self == Decomposition.from_weights(self.group, other)
        return NotImplemented

    @classmethod
    def from_weights(cls, group, mults: Mapping[Sequence, int]) -> "Decomposition":
        g = as_group(group)
        table: Counter = Counter()
        for w, m in mults.items():
            table[g.canonical_key(g.to_key(w))] += int(m)
        return cls(g, table)

    def items(self) -> list[tuple[Weight, int]]:
        g = self.group
        keys = sorted(self.table, key=lambda k: (-g.height(k), tuple(-x for x in k)))
        return [(g.from_key(k), self.table[k]) for k in keys]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.items())

    def multiplicity(self, hw: Sequence) -> int:
        g = self.group
        return self.table.get(g.canonical_key(g.to_key(hw)), 0)

    @property
    def dimension(self) -> int:
        g = self.group
        return sum(g.weyl_dim(g.from_key(k)) * m for k, m in self.table.items())

    @property
    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.table.values())

    def __len__(self):
        return len(self.table)

    def character(self) -> DominantCharacter:
        out: Counter = Counter()
        for k, m in self.table.items():
            for kk, mm in _irreducible_table(self.group, k).items():
                out[kk] += m * mm
        return DominantCharacter(self.group, out)


# -- irreducible characters ------------------------------------------------


def _freudenthal(rs: RootSystem, hw: tuple[int, ...], scale: int) -> dict[tuple[int, ...], int]:
    """Dominant weight multiplicities of V(hw) for one simple factor (integer keys)."""
    if not rs.positive_roots:
        return {hw: 1}
    pos = [a.scaled(scale) for a in rs.positive_roots]
    norms = [sum(x * x for x in a) for a in pos]
    rho = rs.rho.scaled(scale)
    dom = lambda k: rs.dominant_key(k, scale)  # noqa: E731

    def ip(u, v):
        return sum(x * y for x, y in zip(u, v))

    # dominant weights by saturation along root strings
    weights = {hw}
    frontier = [hw]
    while frontier:
        nxt = []
        for nu in frontier:
            for a, nn in zip(pos, norms):
                c = 2 * ip(nu, a) // nn
                cur = nu
                for _ in range(c):
                    cur = tuple(x - y for x, y in zip(cur, a))
                    d = dom(cur)
                    if d not in weights:
                        weights.add(d)
                        nxt.append(d)
        frontier = nxt

    rho_vee = [Fraction(0)] * len(hw)
    for a, nn in zip(pos, norms):
        for i, x in enumerate(a):
            rho_vee[i] += Fraction(2 * x, nn)
    height = lambda k: sum(c * x for c, x in zip(rho_vee, k))  # noqa: E731
    order = sorted(weights, key=lambda k: (-height(k), k))

    lr = tuple(x + y for x, y in zip(hw, rho))
    top = ip(lr, lr)
    mult: dict[tuple[int, ...], int] = {hw: 1}
    for mu in order[1:]:
        num = 0
        for a in pos:
            k = tuple(x + y for x, y in zip(mu, a))
            while True:
                d = dom(k)
                m = mult.get(d)
                if m is None:
                    if d not in weights:
                        break
                    m = 0
                num += ip(k, a) * m
                k = tuple(x + y for x, y in zip(k, a))
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = top - ip(mr, mr)
        q, r = divmod(2 * num, den)
        if r:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        if q:
            mult[mu] = q
    return mult


@lru_cache(maxsize=4096)
def _factor_table(rs: RootSystem, hw: tuple[int, ...], scale: int) -> tuple:
    table = _freudenthal(rs, hw, scale)
    if rs.cartan_type.series == "A" and not rs.gl:
        table = {rs.canonical_key(k): m for k, m in table.items()}
    return tuple(table.items())


def _irreducible_table(g: Group, key: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {(): 1}
    for f, s in zip(g.factors, g.slices):
        part = _factor_table(f, tuple(key[s]), g.scale)
        out = {a + b: m * n for a, m in out.items() for b, n in part}
    return out


def irreducible_character(group, hw: Sequence) -> DominantCharacter:
    """Character of the irreducible representation with highest weight ``hw``."""
    g = as_group(group)
    key = g.to_key(hw)
    if not g.is_dominant_key(key):
        raise ValueError(f"{Weight(hw)} is not dominant for {g.name}")
    if not g.is_integral(hw):
        raise ValueError(f"{Weight(hw)} is not integral for {g.name}")
    return DominantCharacter(g, _irreducible_table(g, g.canonical_key(key)))


def trivial_character(group) -> DominantCharacter:
    g = as_group(group)
    return DominantCharacter(g, {(0,) * g.dim: 1})


# -- orbit expansion -------------------------------------------------------


def _orbit_chunks(g: Group, key: tuple[int, ...]):
    """Yield (rows, repeat) batches covering the orbit of a dominant key."""
    rows, repeat = g.orbit_rows(key)
    for start in range(0, rows.shape[0], CHUNK_ROWS):
        yield rows[start : start + CHUNK_ROWS], repeat


def full_weight_multiset(c: DominantCharacter) -> Iterator[tuple[Weight, int]]:
    """Every weight of ``c`` once, with its multiplicity."""
    g = c.group
    for k, m in c.items():
        for row in g.orbit_array(g.to_key(k)):
            yield g.from_key(g.canonical_key(tuple(int(x) for x in row))), m


def weight_counter(c: DominantCharacter) -> Counter:
    """Full weight multiset as a Counter of integer keys."""
    g = c.group
    out: Counter = Counter()
    for k, m in c.table.items():
        for row in g.canonical_rows(g.orbit_array(k)):
            out[tuple(int(x) for x in row)] += m
    return out


# -- decomposition ---------------------------------------------------------


def decompose(c: DominantCharacter) -> Decomposition:
    """Write ``c`` as a non-negative combination of irreducible characters.

    Peels off the highest remaining weight repeatedly.  A negative
    remainder means ``c`` is not an honest character.
    """
    g = c.group
    rest = dict(c.table)
    heap = [(-g.height(k), k) for k in rest]
    heapq.heapify(heap)
    out: dict[tuple[int, ...], int] = {}
    while heap:
        _, k = heapq.heappop(heap)
        m = rest.pop(k, 0)
        if m == 0:
            continue
        if m < 0:
            raise ValueError(f"negative multiplicity {m} at {g.from_key(k)}: not a character")
        out[k] = m
        for kk, mm in _irreducible_table(g, k).items():
            if kk == k:
                continue
            if kk not in rest:
                heapq.heappush(heap, (-g.height(kk), kk))
                rest[kk] = 0
            rest[kk] -= m * mm
    return Decomposition(g, out)


def invariant_dim(c: "DominantCharacter | Decomposition") -> int:
    """Multiplicity of the trivial representation."""
    if isinstance(c, DominantCharacter):
        c = decompose(c)
    return c.table.get((0,) * c.group.dim, 0)


# -- tensor products -------------------------------------------------------


def tensor_character(a: DominantCharacter, b: DominantCharacter) -> DominantCharacter:
    return tensor_decompose(a, b).character()


def tensor_decompose(a: DominantCharacter, b: DominantCharacter) -> Decomposition:
    """Decompose ``a ⊗ b`` by the Brauer-Klimyk orbit method.

    ``a`` and ``b`` may be arbitrary characters; the weights of the smaller
    one are added to ``rho`` plus the highest weights of the other.
    """
    _check_same(a.group, b.group)
    g = a.group
    da, db = decompose(a), decompose(b)
    # expand the smaller factor into weights
    if a.dimension > b.dimension:
        a, db = b, da
    rho = g.to_key(g.rho)
    weights = weight_counter(a)
    out: Counter = Counter()
    for hw, m_hw in db.table.items():
        shift = tuple(x + y for x, y in zip(hw, rho))
        for nu, m in weights.items():
            k = tuple(x + y for x, y in zip(nu, shift))
            d, sign, regular = g.dominant_key_sign(k)
            if regular:
                out[g.canonical_key(tuple(x - y for x, y in zip(d, rho)))] += sign * m * m_hw
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("Klimyk sum produced a negative multiplicity")
    return Decomposition(g, out)


# -- symmetric powers ------------------------------------------------------


def _convolve(x: Counter, y: Counter) -> Counter:
    out: Counter = Counter()
    for k1, m1 in x.items():
        for k2, m2 in y.items():
            out[tuple(a + b for a, b in zip(k1, k2))] += m1 * m2
    return out


def sym_power_weights(c: DominantCharacter, n: int) -> Counter:
    """Full weight multiset of Sym^n via  n h_n = sum_k psi^k h_{n-k}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    g = c.group
    base = weight_counter(c)
    h: list[Counter] = [Counter({(0,) * g.dim: 1})]
    adams = [None] + [
        Counter({tuple(k * x for x in w): m for w, m in base.items()}) for k in range(1, n + 1)
    ]
    for j in range(1, n + 1):
        acc: Counter = Counter()
        for k in range(1, j + 1):
            acc.update(_convolve(adams[k], h[j - k]))
        hj: Counter = Counter()
        for w, m in acc.items():
            q, r = divmod(m, j)
            if r:
                raise ArithmeticError("Newton recursion produced a non-integer")
            if q:
                hj[w] = q
        h.append(hj)
    return h[n]


def sym_power_character(c: DominantCharacter, n: int) -> DominantCharacter:
    """Character of the n-th symmetric power of ``c``."""
    g = c.group
    full = sym_power_weights(c, n)
    table = {k: m for k, m in full.items() if g.is_dominant_key(k)}
    return DominantCharacter(g, table)


# -- restriction -----------------------------------------------------------


class LatticeMap:
    """Rational-linear map from source epsilon-coordinates to target ones.

    ``matrix`` has one row per target coordinate.  Images of SU(m) factors
    of the target are read modulo (1,...,1).
    """

    def __init__(self, source, target, matrix: Sequence[Sequence]):
        self.source: Group = as_group(source)
        self.target: Group = as_group(target)
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(self.matrix) != self.target.dim or any(len(r) != self.source.dim for r in self.matrix):
            raise ValueError(
                f"matrix must be {self.target.dim} x {self.source.dim} for {self.source.name} -> {self.target.name}"
            )
        # integer keys: target_key = (A @ source_key) / den
        factor = Fraction(self.target.scale, self.source.scale)
        scaled = [[x * factor for x in row] for row in self.matrix]
        den = lcm(1, *(x.denominator for row in scaled for x in row))
        self._int = np.array([[int(x * den) for x in row] for row in scaled], dtype=np.int64)
        self._den = den

    def __repr__(self):
        return f"LatticeMap({self.source.name} -> {self.target.name})"

    @classmethod
    def from_function(cls, source, target, fn) -> "LatticeMap":
        """Build from a function acting on coordinate lists (linear in its input)."""
        src = as_group(source)
        cols = []
        for i in range(src.dim):
            e = [Fraction(0)] * src.dim
            e[i] = Fraction(1)
            cols.append([Fraction(x) for x in fn(e)])
        return cls(source, target, [list(r) for r in zip(*cols)])

    def __call__(self, w: Sequence) -> Weight:
        w = Weight(w)
        return Weight(sum((a * x for a, x in zip(row, w)), Fraction(0)) for row in self.matrix)

    def apply_rows(self, rows: np.ndarray) -> np.ndarray:
        img = rows @ self._int.T
        if self._den != 1:
            if np.any(img % self._den):
                raise ValueError(f"{self} does not map the weight lattice into the target lattice")
            img //= self._den
        return img

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """``self ∘ other``."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        m = [
            [sum((a * other.matrix[k][j] for k, a in enumerate(row)), Fraction(0)) for j in range(other.source.dim)]
            for row in self.matrix
        ]
        return LatticeMap(other.source, self.target, m)


def restrict_character(c: DominantCharacter, m: LatticeMap) -> DominantCharacter:
    """Push the weights of ``c`` through ``m`` and keep the dominant part."""
    _check_same(c.group, m.source)
    tg = m.target
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for key, mult in c.table.items():
        for rows, repeat in _orbit_chunks(c.group, key):
            img = tg.canonical_rows(m.apply_rows(rows))
            img = img[tg.dominant_mask(img)]
            if not img.shape[0]:
                continue
            uniq, counts = np.unique(img, axis=0, return_counts=True)
            for row, cnt in zip(uniq.tolist(), counts.tolist()):
                q, r = divmod(cnt, repeat)
                if r:
                    raise ArithmeticError("orbit repetition is not uniform")
                out[tuple(row)] += q * mult
    return DominantCharacter(tg, out)


def branch(c: DominantCharacter, m: LatticeMap) -> Decomposition:
    return decompose(restrict_character(c, m))


def identity_map(group) -> LatticeMap:
    g = as_group(group)
    return LatticeMap(g, g, [[int(i == j) for j in range(g.dim)] for i in range(g.dim)])


# -- Littlewood-Richardson (type A reference) --------------------------------


def littlewood_richardson(lam: Sequence[int], mu: Sequence[int], rows: int) -> dict[tuple[int, ...], int]:
    """LR coefficients c^nu_{lam,mu} for GL(rows), by counting LR tableaux.

    Entries may be negative integers; both tuples are shifted to partitions
    and the shift is restored on the output.
    """
    lam, mu = list(lam), list(mu)
    if len(lam) != rows or len(mu) != rows:
        raise ValueError(f"tuples must have length {rows}")
    s1, s2 = min(0, lam[-1]), min(0, mu[-1])
    lam = [x - s1 for x in lam]
    mu = [x - s2 for x in mu]
    out: Counter = Counter()
    for nu in _lr_fillings(tuple(lam), tuple(mu), rows):
        out[tuple(x + s1 + s2 for x in nu)] += 1
    return dict(out)


def _lr_fillings(lam: tuple[int, ...], mu: tuple[int, ...], rows: int):
    """Yield the outer shape of each LR tableau of content mu on top of lam.

    Boxes labelled i are added as a horizontal strip, for i = 1, 2, ...;
    the lattice condition is enforced with the reading word constraint
    in its standard strip form: the number of i's in rows 1..r never
    exceeds the number of (i-1)'s in rows 1..r-1.
    """
    content = [x for x in mu if x > 0]

    def rec(i: int, shape: tuple[int, ...], prev_counts: list[int] | None):
        if i == len(content):
            yield shape
            return
        for strip in _horizontal_strips(shape, content[i], rows):
            counts = [b - a for a, b in zip(shape, strip)]
            if prev_counts is not None:
                ok = True
                cum_new = cum_old = 0
                for r in range(rows):
                    cum_new += counts[r]
                    if cum_new > cum_old:
                        ok = False
                        break
                    cum_old += prev_counts[r]
                if not ok:
                    continue
            yield from rec(i + 1, strip, counts)

    # the lattice condition is vacuous for the first letter
    yield from rec(0, lam, None)


def _horizontal_strips(shape: tuple[int, ...], size: int, rows: int):
    """Shapes obtained by adding a horizontal strip of ``size`` boxes."""

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield tuple(acc)
            return
        cap = shape[r - 1] - shape[r] if r > 0 else left
        for add in range(min(left, cap), -1, -1):
            yield from rec(r + 1, left - add, acc + [shape[r] + add])

    yield from rec(0, size, [])


def lr_decompose(lam: Sequence[int], mu: Sequence[int], rows: int) -> Decomposition:
    from .roots import gl

    g = gl(rows)
    return Decomposition.from_weights(g, littlewood_richardson(lam, mu, rows))


__all__ = [
    "Decomposition",
    "DominantCharacter",
    "LatticeMap",
    "branch",
    "decompose",
    "full_weight_multiset",
    "identity_map",
    "invariant_dim",
    "irreducible_character",
    "littlewood_richardson",
    "lr_decompose",
    "restrict_character",
    "sym_power_character",
    "sym_power_weights",
    "tensor_character",
    "tensor_decompose",
    "trivial_character",
    "weight_counter",
]
