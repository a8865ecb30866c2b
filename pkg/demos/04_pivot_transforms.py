"""Principal pivot transforms keep the pivot bound.

Swapping the w and z roles on some coordinates turns a K-matrix into a
matrix that is usually neither Z nor symmetric. Its matroid is still a
K*-matroid, and the pivoting method still needs at most 2n steps.

Run: python demos/04_pivot_transforms.py
"""

from omcp.classify import all_complementary_sets, is_kstar_matroid
from omcp.pivot import LcpOracle, RandomRule, max_index, min_index, verify_fastK
from omcp.realize import circuits_of_realization, format_rational, generate_k_matrix, is_z_matrix, ppt_instance
from omcp.signvec import GroundSet

n = 3
g = GroundSet(n)
inst = generate_k_matrix(n, seed=11)
print("K-matrix:", [[format_rational(v) for v in row] for row in inst.M])

for F in all_complementary_sets(n):
    if len(F) != 2:
        continue
    ppt = ppt_instance(inst, F)
    s_side = g.S ^ (frozenset(F) | g.complement_set(F))
    ks = is_kstar_matroid(circuits_of_realization(ppt))
    rep = verify_fastK(LcpOracle(ppt), (min_index, max_index, RandomRule(0)), s_side=s_side)
    print(
        f"F={sorted(F)}  Z-matrix: {is_z_matrix(ppt.M)!s:5}  K*: {ks.holds} via {sorted(ks.witness.positive)}"
        f"  max pivots {rep.max_pivots}, from S' {rep.max_pivots_from_S}"
    )
