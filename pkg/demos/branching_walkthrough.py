"""Restrict a few characters by hand and compare with the closed-form rules."""

from __future__ import annotations

from liebranch import Group, LatticeMap, branch, irreducible_character, root_system, su2
from liebranch.branching import branch_sp_to_gl, levi_rule_as_decomposition
from liebranch.characters import tensor_decompose
from liebranch.quaternionic import exact_sequence_ktype_diff, f44_datum

# Sp(8) fourth fundamental, 42-dimensional, over its Levi GL(4)
rule = branch_sp_to_gl(4, 1)
oracle = levi_rule_as_decomposition("sp", 4, 1)
print("Sp(8) -> GL(4), n = 1:", rule, "total dim", oracle.dimension)

# E8 adjoint over Spin(16): 120 + 128
e8, d8 = root_system("E8"), root_system("D8")
d = branch(irreducible_character(e8, e8.fundamental_weights[7]), LatticeMap.from_function(e8, d8, list))
print("E8 -> Spin(16):", [(str(w), d8.weyl_dim(w)) for w, _ in d.items()])

# Sp(4) standard module over SU(2) x SU(2)
c2 = root_system("C2")
lm = LatticeMap.from_function(c2, Group.of(su2(), su2()), lambda x: [x[0], x[1]])
print("Sp(4) -> SU(2)^2:", branch(irreducible_character(c2, (1, 0)), lm).as_dict())

# G2: 7 x 7
g2 = root_system("G2")
seven = irreducible_character(g2, g2.fundamental_weights[0])
print("G2 7x7 dims:", sorted(g2.weyl_dim(w) for w, _ in tensor_decompose(seven, seven).items()))

# K-types of the kernel of the F4 exact sequence, first five levels
diff = exact_sequence_ktype_diff(f44_datum(6), f44_datum(10), 4)
for level, dec in diff.items():
    print(f"level {level}: Sp(6)-dimension {dec.dimension}, {len(dec)} constituents")
