"""Sign vectors and the oriented matroid of a small matrix.

Run: python demos/01_sign_vectors.py
"""

from omcp.matroid import bases, conformal_decompose, fundamental_circuit
from omcp.realize import LcpInstance, circuits_of_realization
from omcp.signvec import SignVector, compose, is_orthogonal, reflect

sv = SignVector.from_string

# Ground set E_4 = {1, 2, 3, 4}; 1 and 3 are complementary, as are 2 and 4.
X, Y = sv("+0-0"), sv("--++")
print("X =", X, " Y =", Y)
print("X o Y =", compose(X, Y), " (X wins wherever it is nonzero)")
print("orthogonal:", is_orthogonal(X, Y))
print("reflect(X) =", reflect(X), " reflect twice =", reflect(reflect(X)))

# The matrix [I -M] for M = [[2, -1], [-1, 2]] has four circuit pairs.
m = circuits_of_realization(LcpInstance([[2, -1], [-1, 2]]))
print("\ncircuits:", [str(c) for c in m.sorted_circuits()])
print("vectors:", len(m.vectors), " covectors:", len(m.covectors))
print("bases:", sorted(sorted(B) for B in bases(m)))
print("C({1,2}, 3) =", fundamental_circuit(m, {1, 2}, 3))

# Every vector splits into circuits that agree with it in sign.
parts = conformal_decompose(m, sv("++++"))
print("++++ =", " o ".join(map(str, parts)))
