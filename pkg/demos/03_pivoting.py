"""Simple principal pivoting on a K-matrix LCP.

Find w, z >= 0 with w - Mz = q and w_i z_i = 0. Each step looks at the
fundamental circuit of q in the current complementary basis and swaps one
negative basic element for its complement.

Run: python demos/03_pivoting.py
"""

from collections import Counter

from omcp.pivot import LcpOracle, RandomRule, brute_force_omcp, max_index, min_index, simple_principal_pivot
from omcp.realize import LcpInstance, format_rational, generate_k_matrix, lcp_solution_from_sign_vector
from omcp.signvec import GroundSet

inst = LcpInstance([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [-1, -1, -1])
oracle = LcpOracle(inst)
trace = simple_principal_pivot(oracle, rule=min_index)
for step in trace.steps:
    move = f"pivot on {step.pivot}" if step.pivot else "done"
    print(f"B={sorted(step.basis)}  C={step.circuit}  {move}")

w, z = lcp_solution_from_sign_vector(inst, trace.solution)
print("w =", [format_rational(v) for v in w], " z =", [format_rational(v) for v in z])
print("brute force agrees:", brute_force_omcp(inst) == [trace.solution])

# Pivot counts over many random K-instances, every rule and start.
g = GroundSet(4)
counts = Counter()
for seed in range(50):
    oracle = LcpOracle(generate_k_matrix(4, seed))
    for rule in (min_index, max_index, RandomRule(seed)):
        for B in g.complementary_bases():
            counts[simple_principal_pivot(oracle, B, rule).pivots] += 1
print("\nn = 4 pivot histogram:", dict(sorted(counts.items())), " (never above 8)")
