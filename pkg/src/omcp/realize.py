"""Exact rational linear algebra linking LCP matrices to oriented matroids.

An instance ``(M, q)`` realizes the matroid of sign patterns of
``ker [I  -M]`` and, with ``q``, the extension ``ker [I  -M  -q]``.  All
arithmetic uses :class:`fractions.Fraction`; no floats appear anywhere.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .matroid import AbstractOM, ExtensionOM, NotABasisError, SizeError
from .signvec import SignVector, is_sign_reversing

Rational = Fraction
Matrix = tuple[tuple[Fraction, ...], ...]

MAX_REALIZE_N = 6
_RAT = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class InconsistentSystemError(ValueError):
    """The linear system attached to a sign vector has no matching solution."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or an integer string exactly."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RAT.match(text):
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(parse_rational(v) for v in row) for row in rows)


@dataclass(frozen=True)
class LcpInstance:
    M: Matrix
    q: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        M = as_matrix(self.M)
        n = len(M)
        if n == 0 or any(len(r) != n for r in M):
            raise ValueError("M must be a non-empty square matrix")
        object.__setattr__(self, "M", M)
        if self.q is not None:
            q = tuple(parse_rational(v) for v in self.q)
            if len(q) != n:
                raise ValueError("q must have length n")
            object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return len(self.M)

    def with_q(self, q: Sequence) -> "LcpInstance":
        return LcpInstance(self.M, tuple(q))

    def column(self, e: int) -> tuple[Fraction, ...]:
        """Column ``e`` of ``[I  -M  -q]`` (labels ``1..2n+1``)."""
        n = self.n
        if 1 <= e <= n:
            return tuple(Fraction(int(i == e - 1)) for i in range(n))
        if n < e <= 2 * n:
            return tuple(-self.M[i][e - n - 1] for i in range(n))
        if e == 2 * n + 1:
            if self.q is None:
                raise ValueError("instance has no q")
            return tuple(-v for v in self.q)
        raise IndexError(e)

    def check_solution(self, w: Sequence[Fraction], z: Sequence[Fraction]) -> bool:
        n = self.n
        if self.q is None:
            raise ValueError("instance has no q")
        for i in range(n):
            if w[i] - sum(self.M[i][j] * z[j] for j in range(n)) != self.q[i]:
                return False
        return all(v >= 0 for v in w) and all(v >= 0 for v in z) and sum(
            a * b for a, b in zip(w, z)
        ) == 0


# -- elimination -------------------------------------------------------------


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    A = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    ncols = len(A[0]) if A else 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [v / pv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(rows)
    basis = []
    for f in (c for c in range(ncols) if c not in piv):
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(piv):
            x[p] = -R[i][f]
        basis.append(x)
    return basis


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """A solution of ``Ax = b`` (free variables at 0), or ``None`` if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(piv):
        x[p] = R[i][ncols]
    return x


def det(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Bareiss fraction-free elimination (exact over the rationals)."""
    A = [list(map(Fraction, r)) for r in M]
    n = len(A)
    if n == 0:
        return Fraction(1)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inverse(M: Sequence[Sequence[Fraction]]) -> Matrix | None:
    n = len(M)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        return None
    return tuple(tuple(r[n:]) for r in R)


def principal_minors(M: Matrix) -> dict[tuple[int, ...], Fraction]:
    n = len(M)
    return {
        idx: det([[M[i][j] for j in idx] for i in idx])
        for k in range(1, n + 1)
        for idx in combinations(range(n), k)
    }


def is_p_matrix(M) -> bool:
    M = as_matrix(M)
    return all(v > 0 for v in principal_minors(M).values())


def is_z_matrix(M) -> bool:
    M = as_matrix(M)
    return all(M[i][j] <= 0 for i in range(len(M)) for j in range(len(M)) if i != j)


def is_k_matrix(M) -> bool:
    return is_z_matrix(M) and is_p_matrix(M)


# -- circuits ----------------------------------------------------------------


def _sign_vector(x: Sequence[Fraction]) -> SignVector:
    return SignVector.from_signs([(v > 0) - (v < 0) for v in x])


def circuit_witnesses(inst: LcpInstance, with_q: bool = False) -> list[tuple[SignVector, list[Fraction]]]:
    """Canonical circuits of ``[I -M]`` (or ``[I -M -q]``) with kernel vectors.

    A column subset ``J`` is a circuit support exactly when ``ker A_J`` is
    one-dimensional and spanned by a vector without zero entries.
    """
    n = inst.n
    if n > MAX_REALIZE_N:
        raise SizeError(f"circuit enumeration refuses n = {n} > {MAX_REALIZE_N}")
    size = 2 * n + int(with_q)
    cols = {e: inst.column(e) for e in range(1, size + 1)}
    out = []
    for k in range(1, n + 2):
        for J in combinations(range(1, size + 1), k):
            rows = [[cols[e][i] for e in J] for i in range(n)]
            ker = nullspace(rows, k)
            if len(ker) != 1 or any(v == 0 for v in ker[0]):
                continue
            x = [Fraction(0)] * size
            for e, v in zip(J, ker[0]):
                x[e - 1] = v
            first = next(v for v in x if v != 0)
            if first < 0:
                x = [-v for v in x]
            out.append((_sign_vector(x), x))
    return out


def circuits_of_realization(inst: LcpInstance, with_q: bool = False) -> AbstractOM | ExtensionOM:
    size = 2 * inst.n + int(with_q)
    m = AbstractOM(size, frozenset(c for c, _ in circuit_witnesses(inst, with_q)))
    if with_q:
        return ExtensionOM(circuits_of_realization(inst), m)
    return m


def realization_residual(inst: LcpInstance, x: Sequence[Fraction]) -> list[Fraction]:
    """``[I -M (-q)] x`` computed exactly."""
    return [
        sum(inst.column(e)[i] * v for e, v in enumerate(x, start=1))
        for i in range(inst.n)
    ]


def lcp_solution_from_sign_vector(inst: LcpInstance, X: SignVector) -> tuple[list[Fraction], list[Fraction]]:
    """Back-substitute an OMCP solution sign vector into exact ``(w, z)``."""
    n = inst.n
    if inst.q is None:
        raise ValueError("instance has no q")
    if X.size != 2 * n + 1 or X[2 * n + 1] <= 0:
        raise ValueError("X must live on E_2n + q with X_q = +")
    supp = [e for e in range(1, 2 * n + 1) if X[e] != 0]
    A = [[inst.column(e)[i] for e in supp] for i in range(n)]
    if supp:
        x = solve(A, inst.q)
    else:
        x = [] if all(v == 0 for v in inst.q) else None
    if x is None:
        raise InconsistentSystemError(f"{X} does not come from a solution of w - Mz = q")
    full = [Fraction(0)] * (2 * n)
    for e, v in zip(supp, x):
        if (v > 0) - (v < 0) != X[e]:
            raise InconsistentSystemError(f"sign of x_{e} = {v} disagrees with {X}")
        full[e - 1] = v
    return full[:n], full[n:]


# -- Fiedler-Ptak ------------------------------------------------------------


def fiedler_ptak_condition(M, cond: str) -> bool:
    """One of the five equivalent conditions (a)-(e) for a Z-matrix.

    (a) ``x >= 0, Mx > 0`` and (b) ``x > 0, Mx > 0`` are decided on the
    realized matroid: ``[I -M](w, z) = 0`` means ``w = Mz``.  (d) is the
    absence of a sign-reversing circuit.
    """
    M = as_matrix(M)
    if not is_z_matrix(M):
        raise ValueError("Fiedler-Ptak conditions need a Z-matrix")
    n = len(M)
    if cond in ("a", "b"):
        m = circuits_of_realization(LcpInstance(M))
        full = (1 << n) - 1
        for X in m.vectors:
            s_pos = X.plus & full == full
            t_plus = X.plus >> n
            if cond == "a" and s_pos and not (X.minus >> n):
                return True
            if cond == "b" and s_pos and t_plus == full:
                return True
        return False
    if cond == "c":
        inv = inverse(M)
        return inv is not None and all(v >= 0 for row in inv for v in row)
    if cond == "d":
        m = circuits_of_realization(LcpInstance(M))
        return not any(is_sign_reversing(c) for c in m.circuits)
    if cond == "e":
        return is_p_matrix(M)
    raise ValueError(f"unknown condition {cond!r}")


# -- generators --------------------------------------------------------------

_DENOMS = (1, 2, 4, 5, 10, 20, 25, 50, 100)


def _rand_rational(rng: random.Random, lo: int, hi: int) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(_DENOMS))


def _mixed_q(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    q = [_rand_rational(rng, -20, 20) for _ in range(n)]
    if all(v >= 0 for v in q):
        q[rng.randrange(n)] = -_rand_rational(rng, 1, 20)
    return tuple(q)


def generate_k_matrix(n: int, seed: int, margin: Fraction | int | str = 1) -> LcpInstance:
    """A strictly diagonally dominant Z-matrix with positive diagonal, plus a mixed-sign ``q``."""
    margin = parse_rational(margin) if not isinstance(margin, Fraction) else margin
    if n < 1 or margin <= 0:
        raise ValueError("need n >= 1 and margin > 0")
    rng = random.Random(seed)
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                M[i][j] = -_rand_rational(rng, 0, 20)
        M[i][i] = -sum(M[i][j] for j in range(n) if j != i) + margin
    return LcpInstance(tuple(map(tuple, M)), _mixed_q(rng, n))


MATRIX_KINDS = ("K", "PnotZ", "ZnotP", "neither")


def generate_matrix(n: int, seed: int, kind: str = "K") -> LcpInstance:
    """Random instance of a requested P/Z class (verified by the exact tests).

    ``PnotZ`` is strictly diagonally dominant with a positive off-diagonal;
    ``ZnotP`` is a Z-matrix with a non-positive diagonal entry; ``neither``
    has both a positive off-diagonal and a non-positive diagonal entry.
    """
    if kind == "K":
        return generate_k_matrix(n, seed)
    rng = random.Random(f"{kind}:{n}:{seed}")
    if kind in ("PnotZ", "neither") and n < 2:
        raise ValueError(f"{kind} needs n >= 2")
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                v = _rand_rational(rng, 0, 20)
                M[i][j] = v if kind != "ZnotP" and rng.random() < 0.5 else -v
    if kind in ("PnotZ", "neither"):
        i, j = rng.sample(range(n), 2)
        M[i][j] = _rand_rational(rng, 1, 20)
    for i in range(n):
        off = sum(abs(M[i][j]) for j in range(n) if j != i)
        M[i][i] = off + _rand_rational(rng, 1, 10)
    if kind in ("ZnotP", "neither"):
        k = rng.randrange(n)
        M[k][k] = -_rand_rational(rng, 0, 10)
    return LcpInstance(tuple(map(tuple, M)), _mixed_q(rng, n))


def ppt_instance(inst: LcpInstance, F: Iterable[int]) -> LcpInstance:
    """Principal pivot transform of ``(M, q)`` exchanging ``w_i`` and ``z_i`` for ``i`` in ``F``.

    ``F`` holds indices ``1..n`` (complementary labels ``i + n`` are folded
    onto ``i``).  ``M_FF`` must be nonsingular.
    """
    n = inst.n
    idx = sorted({(e - 1) % n for e in F})
    rest = [i for i in range(n) if i not in idx]
    M = inst.M
    if not idx:
        return inst
    inv = inverse([[M[i][j] for j in idx] for i in idx])
    if inv is None:
        raise NotABasisError("principal submatrix on F is singular")
    pos = {i: k for k, i in enumerate(idx)}

    def inv_times(col):  # M_FF^{-1} @ col (col indexed by idx)
        return [sum(inv[a][b] * col[b] for b in range(len(idx))) for a in range(len(idx))]

    new = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        if j in pos:
            col = inv_times([Fraction(int(i == j)) for i in idx])
            for i in idx:
                new[i][j] = col[pos[i]]
            for g in rest:
                new[g][j] = sum(M[g][f] * col[pos[f]] for f in idx)
        else:
            col = inv_times([M[i][j] for i in idx])
            for i in idx:
                new[i][j] = -col[pos[i]]
            for g in rest:
                new[g][j] = M[g][j] - sum(M[g][f] * col[pos[f]] for f in idx)
    q = None
    if inst.q is not None:
        col = inv_times([inst.q[i] for i in idx])
        q = [Fraction(0)] * n
        for i in idx:
            q[i] = -col[pos[i]]
        for g in rest:
            q[g] = inst.q[g] - sum(M[g][f] * col[pos[f]] for f in idx)
        q = tuple(q)
    return LcpInstance(tuple(map(tuple, new)), q)
