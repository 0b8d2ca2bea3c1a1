"""Restricted root systems of marked Dynkin diagrams and integrability exponents.

Marking a set S of nodes of a Dynkin diagram singles out the subspace
``a`` spanned by the fundamental coweights at S.  Every root then
restricts to the vector of its simple-root coefficients at S; the
nonzero restrictions form a root system on ``a*`` whose multiplicities
count the ambient roots lying over each restricted root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

import sympy

from .roots import CartanType, RootSystem, branch_node, build_root_system, dot, identify_cartan_type


@dataclass(frozen=True)
class MarkedDiagram:
    """A Cartan type with a set of marked nodes (Bourbaki numbering, 1-based)."""

    ambient: CartanType
    marked_nodes: tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.ambient, str):
            object.__setattr__(self, "ambient", CartanType.parse(self.ambient))
        nodes = tuple(sorted(set(self.marked_nodes)))
        if not nodes:
            raise ValueError("at least one node must be marked")
        if nodes[0] < 1 or nodes[-1] > self.ambient.rank:
            raise ValueError(f"marked nodes {nodes} out of range for {self.ambient}")
        object.__setattr__(self, "marked_nodes", nodes)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.ambient)

    def __str__(self):
        return f"{self.ambient}{{{','.join(map(str, self.marked_nodes))}}}"


@dataclass(frozen=True)
class RestrictedRootDatum:
    diagram: MarkedDiagram
    restricted_roots: tuple[tuple[tuple[int, ...], int], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    identified_type: CartanType
    long_mult: int | None
    short_mult: int
    centralizer_dim: int
    centralizer_type: tuple[CartanType, ...]

    @property
    def positive_roots(self) -> list[tuple[tuple[int, ...], int]]:
        return [(c, m) for c, m in self.restricted_roots if min(c) >= 0]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.restricted_roots)

    @property
    def rank(self) -> int:
        return len(self.diagram.marked_nodes)

    def accounting(self) -> tuple[int, int]:
        """(sum of multiplicities + centralizer + rank of a, dim of the ambient algebra)."""
        lhs = self.total_multiplicity + self.centralizer_dim + self.rank
        return lhs, self.diagram.ambient.lie_algebra_dim

    def norm(self, c: Sequence[int]) -> Fraction:
        return _quad(self.gram, c, c)


def _quad(inv_gram, u, v) -> Fraction:
    return sum(
        (Fraction(u[i]) * inv_gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v))),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def restricted_root_data(d: MarkedDiagram) -> RestrictedRootDatum:
    rs = d.root_system
    idx = [i - 1 for i in d.marked_nodes]
    cow = [rs.fundamental_coweights[i] for i in idx]

    mults: dict[tuple[int, ...], int] = {}
    zero = 0
    for a in rs.positive_roots:
        c = tuple(int(dot(a, w)) for w in cow)
        if any(c):
            mults[c] = mults.get(c, 0) + 1
        else:
            zero += 1
    positive = sorted(mults, key=lambda c: (sum(c), c))

    # inner products on a*: the inverse of the Gram matrix of the marked coweights
    gram = sympy.Matrix([[sympy.Rational(dot(u, v)) for v in cow] for u in cow]).inv()
    inv_gram = tuple(tuple(Fraction(int(x.p), int(x.q)) for x in gram.row(i)) for i in range(len(cow)))

    pset = set(positive)
    for c in positive:
        if tuple(2 * x for x in c) in pset:
            raise ValueError(f"{d}: restricted roots are not reduced")
    sums = {tuple(x + y for x, y in zip(a, b)) for a in positive for b in positive}
    simple = [c for c in positive if c not in sums]
    if len(simple) != len(idx):
        raise ValueError(f"{d}: {len(simple)} simple restricted roots for rank {len(idx)}")
    sgram = [[_quad(inv_gram, a, b) for b in simple] for a in simple]
    types = identify_cartan_type(sgram)
    if len(types) != 1:
        raise ValueError(f"{d}: restricted roots form the reducible system {types}")
    (rtype,) = types
    rsys = build_root_system(rtype)
    if len(rsys.positive_roots) != len(positive):
        raise ValueError(f"{d}: {len(positive)} positive restricted roots, expected {len(rsys.positive_roots)} for {rtype}")
    _check_closed(positive, inv_gram, d)

    norms = {c: _quad(inv_gram, c, c) for c in positive}
    by_norm: dict[Fraction, set[int]] = {}
    for c in positive:
        by_norm.setdefault(norms[c], set()).add(mults[c])
    if any(len(v) != 1 for v in by_norm.values()):
        raise ValueError(f"{d}: multiplicities are not constant on root lengths")
    lengths = sorted(by_norm)
    short = next(iter(by_norm[lengths[0]]))
    long_ = next(iter(by_norm[lengths[-1]])) if len(lengths) > 1 else None

    allroots = [(c, mults[c]) for c in positive] + [(tuple(-x for x in c), mults[c]) for c in positive]
    unmarked = [i for i in range(rs.rank) if i not in idx]
    cgram = [[dot(rs.simple_roots[i], rs.simple_roots[j]) for j in unmarked] for i in unmarked]
    ctype = tuple(identify_cartan_type(cgram)) if unmarked else ()
    return RestrictedRootDatum(
        diagram=d,
        restricted_roots=tuple(allroots),
        simple_roots=tuple(simple),
        gram=inv_gram,
        identified_type=rtype,
        long_mult=long_,
        short_mult=short,
        centralizer_dim=2 * zero + rs.rank - len(idx),
        centralizer_type=ctype,
    )


def _check_closed(positive, inv_gram, d) -> None:
    """Every reflection s_a(b) = b - <b, a^vee> a stays inside the restricted roots."""
    den = 1
    for row in inv_gram:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    g = [[int(x * den) for x in row] for row in inv_gram]
    k = len(g)

    def ip(u, v):
        return sum(u[i] * g[i][j] * v[j] for i in range(k) for j in range(k))

    full = set(positive) | {tuple(-x for x in c) for c in positive}
    for a in positive:
        na = ip(a, a)
        for b in full:
            q, r = divmod(2 * ip(b, a), na)
            if r:
                raise ValueError(f"{d}: non-integral Cartan integer")
            if tuple(x - q * y for x, y in zip(b, a)) not in full:
                raise ValueError(f"{d}: restricted roots are not closed under reflections")


def find_markings(ambient: CartanType | str, size: int, target: CartanType | str) -> list[MarkedDiagram]:
    """All markings of ``size`` nodes whose restricted system has type ``target``."""
    if isinstance(ambient, str):
        ambient = CartanType.parse(ambient)
    if isinstance(target, str):
        target = CartanType.parse(target)
    out = []
    for nodes in combinations(range(1, ambient.rank + 1), size):
        d = MarkedDiagram(ambient, nodes)
        try:
            if restricted_root_data(d).identified_type == target:
                out.append(d)
        except ValueError:
            continue
    return out


# -- exponents -------------------------------------------------------------


@dataclass(frozen=True)
class ExponentReport:
    p: Fraction
    per_node: tuple[tuple[int, Fraction], ...]


def integrability_exponent(
    ambient: CartanType | str,
    selected_nodes: Iterable[int] | None = None,
    branch_node_index: int | None = None,
    rho_pairings: Sequence | None = None,
) -> ExponentReport:
    """Smallest p with  p <omega_b, omega_i^vee> >= 2 <rho, omega_i^vee>  for selected i.

    By default ``rho`` is the ambient rho and all nodes are selected.
    ``rho_pairings`` supplies <rho, omega_i^vee> for the selected nodes
    directly (used for the rho of a restricted root system).
    """
    if isinstance(ambient, str):
        ambient = CartanType.parse(ambient)
    rs = build_root_system(ambient)
    nodes = list(range(1, rs.rank + 1)) if selected_nodes is None else sorted(selected_nodes)
    b = branch_node(rs) if branch_node_index is None else branch_node_index
    omega_b = rs.fundamental_weights[b - 1]
    if rho_pairings is None:
        rho_pairings = [rs.pair(rs.rho, rs.fundamental_coweights[i - 1]) for i in nodes]
    if len(rho_pairings) != len(nodes):
        raise ValueError("one rho pairing per selected node is required")
    per_node = []
    for i, r in zip(nodes, rho_pairings):
        wb = rs.pair(omega_b, rs.fundamental_coweights[i - 1])
        if wb == 0:
            raise ZeroDivisionError(f"<omega_b, omega_{i}^vee> vanishes")
        per_node.append((i, 2 * Fraction(r) / wb))
    return ExponentReport(max(x for _, x in per_node), tuple(per_node))


def restricted_rho_pairings(datum: RestrictedRootDatum) -> list[Fraction]:
    """<rho, omega_i^vee> for the rho of the restricted system (roots counted once)."""
    k = datum.rank
    return [Fraction(sum(c[i] for c, _ in datum.positive_roots), 2) for i in range(k)]


def ambient_exponent(ambient: CartanType | str) -> Fraction:
    return integrability_exponent(ambient).p


def restricted_exponent(d: MarkedDiagram) -> ExponentReport:
    datum = restricted_root_data(d)
    return integrability_exponent(d.ambient, d.marked_nodes, None, restricted_rho_pairings(datum))


# -- the six markings ------------------------------------------------------

PRESETS: dict[str, MarkedDiagram] = {
    "E6-A2": MarkedDiagram(CartanType("E", 6), (1, 6)),
    "E7-C3": MarkedDiagram(CartanType("E", 7), (1, 6, 7)),
    "E8-F4": MarkedDiagram(CartanType("E", 8), (1, 6, 7, 8)),
    "E6-G2": MarkedDiagram(CartanType("E", 6), (2, 4)),
    "E7-G2": MarkedDiagram(CartanType("E", 7), (1, 3)),
    "E8-G2": MarkedDiagram(CartanType("E", 8), (7, 8)),
}

FIRST_FAMILY = ("E6-A2", "E7-C3", "E8-F4")
SECOND_FAMILY = ("E6-G2", "E7-G2", "E8-G2")

__all__ = [
    "ExponentReport",
    "FIRST_FAMILY",
    "MarkedDiagram",
    "PRESETS",
    "RestrictedRootDatum",
    "SECOND_FAMILY",
    "ambient_exponent",
    "find_markings",
    "integrability_exponent",
    "restricted_exponent",
    "restricted_rho_pairings",
    "restricted_root_data",
]
