"""P-, Z-, K- and K*-matroid predicates and the characterization conditions.

Every predicate returns a :class:`ConditionReport`; on a false verdict the
witness is a sign vector that can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .matroid import (
    AbstractOM,
    ExtensionOM,
    NotABasisError,
    fundamental_circuit,
    is_basis,
    principal_minor,
    reflect_matroid,
)
from .signvec import (
    GroundSet,
    GroundSetMismatch,
    SignVector,
    bit,
    is_sign_preserving,
    is_sign_reversing,
    mask_of,
)

EQK_CONDITIONS = ("a", "a*", "b", "b*", "c", "c*", "d", "d*")
EQP_CONDITIONS = ("a", "a*", "b", "b*")


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    holds: bool
    witness: SignVector | None = None
    note: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out = {"condition": self.condition, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.note:
            out["note"] = self.note
        return out


def _pure(m: AbstractOM) -> GroundSet:
    if m.size % 2:
        raise GroundSetMismatch("expected a matroid on E_2n (no q)")
    return m.ground


def is_p_matroid(m: AbstractOM) -> ConditionReport:
    _pure(m)
    for c in m.sorted_circuits():
        if is_sign_reversing(c):
            return ConditionReport("P", False, c)
    return ConditionReport("P", True)


def z_violation(vectors: Iterable[SignVector], s_side: Iterable[int], n: int) -> SignVector | None:
    """First ``X`` with ``X_T' >= 0`` and some ``e`` in ``S'`` where ``X_e = +`` but ``X_ebar != +``.

    ``S'`` is any complementary ``n``-set, ``T'`` its complement.
    """
    g = GroundSet(n)
    S = sorted(s_side)
    tmask = mask_of(g.complement(e) for e in S)
    for X in vectors:
        if X.minus & tmask:
            continue
        for e in S:
            if X.plus & bit(e) and not X.plus & bit(g.complement(e)):
                return X
    return None


def _both_signs(m: AbstractOM) -> list[SignVector]:
    return list(m.signed_circuits)


def is_z_matroid(m: AbstractOM) -> ConditionReport:
    g = _pure(m)
    bad = z_violation(_both_signs(m), g.S, g.n)
    return ConditionReport("Z", bad is None, bad)


def z_dual_check(m: AbstractOM) -> ConditionReport:
    """Z-matroid test on cocircuits: ``D_S <= 0`` forces ``D_ebar = -`` wherever ``D_e = +`` on ``T``."""
    g = _pure(m)
    smask = g.s_mask
    for D in sorted(m.dual.signed_circuits, key=SignVector.sort_key):
        if D.plus & smask:
            continue
        for e in g.T:
            if D.plus & bit(e) and not D.minus & bit(g.complement(e)):
                return ConditionReport("Zdual", False, D)
    return ConditionReport("Zdual", True)


def is_k_matroid(m: AbstractOM) -> ConditionReport:
    p = is_p_matroid(m)
    if not p:
        return ConditionReport("K", False, p.witness, "not a P-matroid")
    z = is_z_matroid(m)
    if not z:
        return ConditionReport("K", False, z.witness, "not a Z-matroid")
    return ConditionReport("K", True)


def check_fundc(m: AbstractOM) -> bool:
    """Fundamental circuits w.r.t. ``S`` have the sign pattern forced on Z-matroids."""
    g = _pure(m)
    if not is_basis(m, g.S):
        raise NotABasisError("S is not a basis")
    for e in sorted(g.T):
        C = fundamental_circuit(m, g.S, e)
        if C[e] != 1:
            return False
        if any(C[f] for f in g.T if f != e):
            return False
        if any(C[f] > 0 for f in g.S if f != g.complement(e)):
            return False
    return True


# -- Theorem on K-matroids -----------------------------------------------------


def _find(vectors, pred) -> SignVector | None:
    return next((v for v in sorted(vectors, key=SignVector.sort_key) if pred(v)), None)


def eqK_condition(m: AbstractOM, cond: str) -> ConditionReport:
    """Evaluate one of the eight equivalent K-matroid conditions on a Z-matroid.

    Unstarred conditions look at vectors/circuits, starred ones at
    covectors/cocircuits.
    """
    g = _pure(m)
    sm, tm = g.s_mask, g.t_mask
    if cond == "a":
        X = _find(m.vectors, lambda X: X.plus & sm == sm and not X.minus & tm)
        return ConditionReport(cond, X is not None, X)
    if cond == "b":
        X = _find(m.vectors, lambda X: X.plus == sm | tm)
        return ConditionReport(cond, X is not None, X)
    if cond == "c":
        C = _find(m.signed_circuits, lambda C: not C.minus & sm and C.minus & tm)
        return ConditionReport(cond, C is None, C)
    if cond == "d":
        r = is_p_matroid(m)
        return ConditionReport(cond, r.holds, r.witness)
    if cond == "a*":
        Y = _find(m.covectors, lambda Y: not Y.plus & sm and Y.plus & tm == tm)
        return ConditionReport(cond, Y is not None, Y)
    if cond == "b*":
        Y = _find(m.covectors, lambda Y: Y.minus == sm and Y.plus == tm)
        return ConditionReport(cond, Y is not None, Y)
    if cond == "c*":
        D = _find(m.dual.signed_circuits, lambda D: not D.minus & tm and D.plus & sm)
        return ConditionReport(cond, D is None, D)
    if cond == "d*":
        D = _find(m.cocircuits, is_sign_preserving)
        return ConditionReport(cond, D is None, D)
    raise ValueError(f"unknown condition {cond!r}")


def eqK_all(m: AbstractOM) -> dict[str, ConditionReport]:
    return {c: eqK_condition(m, c) for c in EQK_CONDITIONS}


def reflected_dual(m: AbstractOM) -> AbstractOM:
    """``reflect(m*)``: the starred conditions on ``m`` are the plain ones here."""
    return reflect_matroid(m.dual)


# -- Theorem on P-matroids -----------------------------------------------------


def totally_sign_preserving(n: int) -> list[SignVector]:
    g = GroundSet(n)
    return [SignVector(2 * n, p | (p << n), (g.s_mask & ~p) | ((g.s_mask & ~p) << n)) for p in range(1 << n)]


def totally_sign_reversing(n: int) -> list[SignVector]:
    g = GroundSet(n)
    return [SignVector(2 * n, p | ((g.s_mask & ~p) << n), (g.s_mask & ~p) | (p << n)) for p in range(1 << n)]


def eqP_condition(m: AbstractOM, cond: str) -> ConditionReport:
    g = _pure(m)
    if cond == "a":
        r = is_p_matroid(m)
        return ConditionReport(cond, r.holds, r.witness)
    if cond == "a*":
        D = _find(m.cocircuits, is_sign_preserving)
        return ConditionReport(cond, D is None, D)
    if cond == "b":
        vs = m.vectors
        X = next((X for X in totally_sign_preserving(g.n) if X not in vs), None)
        return ConditionReport(cond, X is None, X)
    if cond == "b*":
        cvs = m.covectors
        Y = next((Y for Y in totally_sign_reversing(g.n) if Y not in cvs), None)
        return ConditionReport(cond, Y is None, Y)
    raise ValueError(f"unknown condition {cond!r}")


def complementary_solutions(ext: ExtensionOM | AbstractOM) -> list[SignVector]:
    """Complementary circuits ``C >= 0`` with ``C_q = +`` of an extension."""
    m = ext.extension if isinstance(ext, ExtensionOM) else ext
    if m.size % 2 == 0:
        raise GroundSetMismatch("expected an extension on E_2n + q")
    n = m.size // 2
    sm = (1 << n) - 1
    q = bit(m.size)
    return [
        C
        for C in m.signed_circuits
        if not C.minus and C.plus & q and not (C.plus & (C.plus >> n) & sm)
    ]


def eqP_extension_uniqueness(ext: ExtensionOM | AbstractOM) -> int:
    return len(complementary_solutions(ext))


def eqP_c_sampled(M, q_grid: Iterable) -> ConditionReport:
    """Uniqueness over LCP-realizable extensions for the listed ``q`` only."""
    from .realize import LcpInstance, circuits_of_realization

    for q in q_grid:
        ext = circuits_of_realization(LcpInstance(M, tuple(q)), with_q=True)
        sols = complementary_solutions(ext)
        if len(sols) != 1:
            return ConditionReport("c", False, sols[0] if sols else None, f"sampled; q={list(map(str, q))} gives {len(sols)}")
    return ConditionReport("c", True, note="sampled over a q grid, not a proof")


# -- K* and principal minors ---------------------------------------------------


def is_kstar_matroid(m: AbstractOM) -> ConditionReport:
    """P-matroid satisfying the Z-condition for some complementary ``S'``.

    The witness is the indicator sign vector of ``S'`` (``+`` on ``S'``).
    """
    g = _pure(m)
    p = is_p_matroid(m)
    if not p:
        return ConditionReport("Kstar", False, p.witness, "not a P-matroid")
    signed = _both_signs(m)
    for S2 in g.complementary_bases():
        if z_violation(signed, S2, g.n) is None:
            return ConditionReport("Kstar", True, SignVector.from_sets(m.size, S2))
    return ConditionReport("Kstar", False, None, "no complementary S' satisfies the Z condition")


def check_lemma_K(m: AbstractOM) -> bool:
    """Every principal minor of a K-matroid is a K-matroid."""
    g = _pure(m)
    for k in range(g.n + 1):
        for F in _complementary_sets(g.n, k):
            if not is_k_matroid(principal_minor(m, F)):
                return False
    return True


def _complementary_sets(n: int, k: int):
    from itertools import combinations, product

    for idx in combinations(range(1, n + 1), k):
        for side in product((0, 1), repeat=k):
            yield frozenset(i + n * s for i, s in zip(idx, side))


def all_complementary_sets(n: int):
    for k in range(n + 1):
        yield from _complementary_sets(n, k)
