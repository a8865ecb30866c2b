"""Matrix classes and their matroid counterparts.

A matrix is P when all principal minors are positive and Z when its
off-diagonal entries are nonpositive. The same properties can be read off
the sign patterns of the circuits alone, which is what this script shows.

Run: python demos/02_classify.py
"""

from omcp.classify import eqK_all, is_kstar_matroid, is_p_matroid, is_z_matroid
from omcp.realize import (
    LcpInstance,
    circuits_of_realization,
    fiedler_ptak_condition,
    inverse,
    is_p_matrix,
    is_z_matrix,
    principal_minors,
)

examples = {
    "tridiagonal": [[2, -1], [-1, 2]],
    "upper": [[1, 3], [0, 1]],
    "singular": [[0, 0], [-1, 1]],
    "cyclic": [[1, -1, -1], [1, 1, -1], [1, 1, 1]],
}

for name, M in examples.items():
    m = circuits_of_realization(LcpInstance(M))
    p, z = is_p_matroid(m), is_z_matroid(m)
    print(f"{name}: M = {M}")
    print(f"  matrix  P={is_p_matrix(M)}  Z={is_z_matrix(M)}")
    print(f"  matroid P={p.holds}  Z={z.holds}", end="")
    for r in (p, z):
        if r.witness is not None:
            print(f"  [{r.condition} witness {r.witness}]", end="")
    print()
    if z:
        verdicts = "".join("T" if r else "F" for r in eqK_all(m).values())
        fp = "".join("T" if fiedler_ptak_condition(M, c) else "F" for c in "abcde")
        print(f"  K-conditions a..d*: {verdicts}   Fiedler-Ptak a..e: {fp}")
    elif p:
        ks = is_kstar_matroid(m)
        print(f"  K*: {ks.holds}" + (f" via S' = {sorted(ks.witness.positive)}" if ks else ""))

M = examples["tridiagonal"]
print("\nprincipal minors of", M, "->", [str(v) for v in principal_minors(M).values()])
print("inverse:", [[str(v) for v in row] for row in inverse(M)])
