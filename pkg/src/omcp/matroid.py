"""Oriented matroids presented by their circuits.

Everything here is exhaustive and meant for desk-scale ground sets; the
3**|E| scans refuse to run past :data:`MAX_ENUM`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Literal

from .signvec import (
    GroundSet,
    GroundSetMismatch,
    SignVector,
    bit,
    compose,
    conforms_to,
    elements_of,
    is_orthogonal,
    mask_of,
    popcount,
    ppt_sign_vector,
    reflect,
)

MAX_ENUM = 12
MAX_AXIOMS = 14


class SizeError(ValueError):
    """An exhaustive enumeration was asked to run past its size guard."""


class NotABasisError(ValueError):
    pass


class NotAVectorError(ValueError):
    pass


def _guard(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise SizeError(f"{what} refuses |E| = {size} > {limit}")


def minimal_supports(vectors: Iterable[SignVector]) -> set[SignVector]:
    """Nonzero members of ``vectors`` whose support is inclusion-minimal."""
    cands = sorted({v for v in vectors if not v.is_zero()}, key=lambda v: popcount(v.support_mask))
    kept: list[SignVector] = []
    for v in cands:
        s = v.support_mask
        if any(k.support_mask & s == k.support_mask and k.support_mask != s for k in kept):
            continue
        kept.append(v)
    return set(kept)


@dataclass(frozen=True)
class AbstractOM:
    """An oriented matroid on ``{1..size}`` given by one circuit per +/- pair.

    ``circuits`` holds canonical representatives (lowest nonzero entry ``+``);
    :attr:`signed_circuits` has both signs.  When ``size`` is even the ground
    set is read as ``E_2n``; when odd, as ``E_2n + q``.
    """

    size: int
    circuits: frozenset[SignVector] = field(default_factory=frozenset)

    def __post_init__(self):
        canon = frozenset(c.canonical() for c in self.circuits)
        for c in canon:
            if c.size != self.size:
                raise GroundSetMismatch(f"circuit {c} does not live on {self.size} elements")
            if c.is_zero():
                raise ValueError("the zero vector is not a circuit")
        object.__setattr__(self, "circuits", canon)

    @classmethod
    def from_circuits(cls, circuits: Iterable[SignVector | str], size: int | None = None):
        circ = [SignVector.from_string(c) if isinstance(c, str) else c for c in circuits]
        if size is None:
            if not circ:
                raise ValueError("size is required for an empty circuit list")
            size = circ[0].size
        return cls(size, frozenset(circ))

    @property
    def ground(self) -> GroundSet:
        return GroundSet.from_size(self.size)

    @property
    def n(self) -> int:
        return self.size // 2

    @cached_property
    def signed_circuits(self) -> tuple[SignVector, ...]:
        out = list(self.circuits) + [-c for c in self.circuits]
        return tuple(sorted(out, key=SignVector.sort_key))

    @cached_property
    def vectors(self) -> frozenset[SignVector]:
        return frozenset(vectors_from_circuits(self))

    @cached_property
    def cocircuits(self) -> frozenset[SignVector]:
        return frozenset(cocircuits(self))

    @cached_property
    def dual(self) -> "AbstractOM":
        return AbstractOM(self.size, self.cocircuits)

    @cached_property
    def covectors(self) -> frozenset[SignVector]:
        return self.dual.vectors

    @cached_property
    def rank(self) -> int:
        return rank(self)

    def sorted_circuits(self) -> list[SignVector]:
        return sorted(self.circuits, key=SignVector.sort_key)

    def __repr__(self) -> str:
        return f"AbstractOM({self.size}, {[str(c) for c in self.sorted_circuits()]})"


@dataclass(frozen=True)
class ExtensionOM:
    """A one-point extension of ``base`` (on ``E_2n``) by ``q`` (label ``2n+1``)."""

    base: AbstractOM
    extension: AbstractOM

    def __post_init__(self):
        if self.extension.size != self.base.size + 1 or self.base.size % 2:
            raise GroundSetMismatch("extension must live on E_2n + q")
        q = self.extension.size
        if delete(self.extension, {q}) != self.base:
            raise ValueError("deleting q does not recover the base matroid")
        if not any(c[q] for c in self.extension.circuits):
            raise ValueError("q is a coloop: no vector has a nonzero q entry")

    @classmethod
    def from_extension(cls, extension: AbstractOM) -> "ExtensionOM":
        return cls(delete(extension, {extension.size}), extension)

    @property
    def n(self) -> int:
        return self.base.size // 2

    @property
    def q(self) -> int:
        return self.extension.size


# -- axioms ------------------------------------------------------------------


@dataclass
class Violation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom}: " + ", ".join(str(w) for w in self.witness)


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def violated(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok


def _same_size(vs: Iterable[SignVector]) -> list[SignVector]:
    vs = list(vs)
    if len({v.size for v in vs}) > 1:
        raise GroundSetMismatch("sign vectors of different lengths")
    return vs


def verify_circuit_axioms(circuits: Iterable[SignVector]) -> AxiomReport:
    """Exhaustive check of (C1), (C2), (C3), (C4) and (C4')."""
    circ = _same_size(circuits)
    report = AxiomReport()
    if circ:
        _guard(circ[0].size, MAX_AXIOMS, "verify_circuit_axioms")
    cs = set(circ)

    zero = next((c for c in circ if c.is_zero()), None)
    if zero is not None:
        report.violations.append(Violation("C1", (zero,)))

    missing = next((c for c in circ if -c not in cs), None)
    if missing is not None:
        report.violations.append(Violation("C2", (missing, -missing)))

    nonzero = [c for c in circ if not c.is_zero()]
    for c in nonzero:
        hit = next(
            (d for d in nonzero if d != c and d != -c and c.support_mask & ~d.support_mask == 0),
            None,
        )
        if hit is not None:
            report.violations.append(Violation("C3", (c, hit)))
            break

    weak = strong = None
    for c in nonzero:
        for d in nonzero:
            common = c.plus & d.minus
            if not common:
                continue
            for e in elements_of(common):
                b = bit(e)
                P = (c.plus | d.plus) & ~b
                N = (c.minus | d.minus) & ~b
                covered = 0
                found = False
                for z in nonzero:
                    if not (z.plus & ~P) and not (z.minus & ~N):
                        found = True
                        covered |= z.support_mask
                if weak is None and c != -d and not found:
                    weak = Violation("C4", (c, d, e))
                need = (c.plus & ~d.minus) | (c.minus & ~d.plus)
                lack = need & ~covered
                if strong is None and lack:
                    strong = Violation("C4'", (c, d, e, elements_of(lack)[0]))
            if weak and strong:
                break
        if weak and strong:
            break
    report.violations.extend(v for v in (weak, strong) if v is not None)
    return report


V4Mode = Literal["weak", "standard", "printed"]


def verify_vector_axioms(
    vectors: Iterable[SignVector], strict: bool = False, v4: V4Mode | None = None
) -> AxiomReport:
    """Exhaustive check of (V1)-(V4).

    The support clause at the end of (V4) depends on ``v4``:

    ``"weak"`` (default)
        omitted; only ``Z+ <= X+ | Y+``, ``Z- <= X- | Y-`` and ``Z_e = 0``.
    ``"printed"`` (also selected by ``strict=True``)
        requires ``(X\\Y) | (Y\\X) | (X+ & Y+) | (X- | Y-)`` inside ``supp Z``
        literally; note this contains ``e`` itself and so can never hold.
    ``"standard"``
        uses ``X- & Y-`` in the last term, the usual textbook form.
    """
    vs = _same_size(vectors)
    report = AxiomReport()
    if not vs:
        report.violations.append(Violation("V1", ()))
        return report
    size = vs[0].size
    _guard(size, MAX_AXIOMS, "verify_vector_axioms")
    mode = v4 or ("printed" if strict else "weak")
    vset = set(vs)

    if SignVector.zero(size) not in vset:
        report.violations.append(Violation("V1", (SignVector.zero(size),)))
    missing = next((v for v in vs if -v not in vset), None)
    if missing is not None:
        report.violations.append(Violation("V2", (missing, -missing)))
    bad = next(((x, y) for x in vs for y in vs if compose(x, y) not in vset), None)
    if bad is not None:
        report.violations.append(Violation("V3", bad))

    for x in vs:
        for y in vs:
            for e in elements_of(x.plus & y.minus):
                b = bit(e)
                P, N = x.plus | y.plus, x.minus | y.minus
                xs, ys = x.support_mask, y.support_mask
                need = 0
                if mode != "weak":
                    last = (x.minus | y.minus) if mode == "printed" else (x.minus & y.minus)
                    need = (xs & ~ys) | (ys & ~xs) | (x.plus & y.plus) | last
                ok = any(
                    not (z.plus & ~P)
                    and not (z.minus & ~N)
                    and not (z.support_mask & b)
                    and need & ~z.support_mask == 0
                    for z in vs
                )
                if not ok:
                    report.violations.append(Violation("V4", (x, y, e)))
                    return report
    return report


# -- vectors, decomposition, bases -------------------------------------------


def vectors_from_circuits(m: AbstractOM) -> set[SignVector]:
    """All finite compositions of circuits, plus the zero vector."""
    _guard(m.size, MAX_AXIOMS, "vectors_from_circuits")
    circ = m.signed_circuits
    seen = {SignVector.zero(m.size), *circ}
    frontier = list(circ)
    while frontier:
        nxt = []
        for x in frontier:
            for c in circ:
                if c.support_mask & ~x.support_mask == 0:
                    continue
                v = compose(x, c)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def conformal_decompose(m: AbstractOM, X: SignVector) -> list[SignVector]:
    """Greedy conformal decomposition of ``X`` into circuits.

    Repeatedly covers the lowest uncovered support element by the
    lexicographically smallest circuit conformal to ``X`` containing it.
    """
    if X.size != m.size:
        raise GroundSetMismatch("vector and matroid differ in size")
    conformal = [c for c in m.signed_circuits if conforms_to(c, X)]
    parts: list[SignVector] = []
    covered = 0
    for e in sorted(X.support):
        if covered & bit(e):
            continue
        c = next((c for c in conformal if c.support_mask & bit(e)), None)
        if c is None:
            raise NotAVectorError(f"{X} is not a vector: no conformal circuit through {e}")
        parts.append(c)
        covered |= c.support_mask
    return parts


def _independent(m: AbstractOM, mask: int) -> bool:
    return not any(c.support_mask & ~mask == 0 for c in m.circuits)


def rank(m: AbstractOM) -> int:
    mask = 0
    for e in range(1, m.size + 1):
        if _independent(m, mask | bit(e)):
            mask |= bit(e)
    return popcount(mask)


def is_basis(m: AbstractOM, B: Iterable[int]) -> bool:
    mask = mask_of(B)
    if mask >> m.size or not _independent(m, mask):
        return False
    return all(
        not _independent(m, mask | bit(e)) for e in range(1, m.size + 1) if not mask & bit(e)
    )


def bases(m: AbstractOM) -> set[frozenset[int]]:
    r = m.rank
    return {
        frozenset(B)
        for B in combinations(range(1, m.size + 1), r)
        if _independent(m, mask_of(B))
    }


def _matroid_of(m: AbstractOM | ExtensionOM) -> AbstractOM:
    return m.extension if isinstance(m, ExtensionOM) else m


def fundamental_circuit(m: AbstractOM | ExtensionOM, B: Iterable[int], e: int) -> SignVector:
    """The circuit ``C(B, e)``: support inside ``B + e`` and ``C_e = +``."""
    m = _matroid_of(m)
    B = frozenset(B)
    if e in B:
        raise ValueError(f"element {e} lies in the basis")
    if not is_basis(m, B):
        raise NotABasisError(f"{sorted(B)} is not a basis")
    allowed = mask_of(B) | bit(e)
    for c in m.circuits:
        if c.support_mask & ~allowed == 0 and c.support_mask & bit(e):
            return c if c[e] > 0 else -c
    raise ValueError(f"no circuit inside {sorted(B)} + {e}: malformed circuit list")


# -- duality -----------------------------------------------------------------


def cocircuits(m: AbstractOM) -> set[SignVector]:
    """Minimal-support nonzero sign vectors orthogonal to every circuit.

    Orthogonality to all circuits is equivalent to orthogonality to all
    vectors (each vector is a conformal composition of circuits).  Supports
    are scanned by increasing size, so supersets of a found cocircuit
    support are skipped.
    """
    _guard(m.size, MAX_ENUM, "cocircuits")
    circ = m.signed_circuits
    found: list[int] = []
    out: set[SignVector] = set()
    for k in range(1, m.size + 1):
        for supp in combinations(range(1, m.size + 1), k):
            smask = mask_of(supp)
            if any(f & ~smask == 0 for f in found):
                continue
            hit = False
            rest = supp[1:]
            for signs in range(1 << len(rest)):
                minus = mask_of(r for i, r in enumerate(rest) if signs >> i & 1)
                y = SignVector(m.size, smask & ~minus, minus)
                if all(is_orthogonal(c, y) for c in circ):
                    out.update((y, -y))
                    hit = True
            if hit:
                found.append(smask)
    return out


def dual(m: AbstractOM) -> AbstractOM:
    return m.dual


# -- minors ------------------------------------------------------------------


def minor(m: AbstractOM, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> AbstractOM:
    """``(m \\ delete) / contract``, relabelled order-preservingly onto ``1..k``."""
    D, K = frozenset(delete), frozenset(contract)
    if D & K:
        raise ValueError("deletion and contraction sets must be disjoint")
    if not (D | K) <= set(range(1, m.size + 1)):
        raise ValueError("minor elements outside the ground set")
    keep = [e for e in range(1, m.size + 1) if e not in D and e not in K]
    dmask = mask_of(D)
    restricted = (c.restrict(keep) for c in m.circuits if not c.support_mask & dmask)
    return AbstractOM(len(keep), frozenset(minimal_supports(restricted)))


def delete(m: AbstractOM, F: Iterable[int]) -> AbstractOM:
    return minor(m, delete=F)


def contract(m: AbstractOM, F: Iterable[int]) -> AbstractOM:
    return minor(m, contract=F)


def principal_minor(m: AbstractOM, F: Iterable[int]) -> AbstractOM:
    """``m \\ F / Fbar`` for a complementary ``F``; lands on canonical ``E_2(n-|F|)``."""
    F = frozenset(F)
    g = GroundSet(m.n)
    if not g.is_complementary(F):
        raise ValueError(f"{sorted(F)} is not complementary")
    return minor(m, delete=F, contract=g.complement_set(F))


def reflect_matroid(m: AbstractOM) -> AbstractOM:
    return AbstractOM(m.size, frozenset(reflect(c) for c in m.circuits))


def ppt_matroid(m: AbstractOM, F: Iterable[int]) -> AbstractOM:
    F = frozenset(F)
    return AbstractOM(m.size, frozenset(ppt_sign_vector(c, F) for c in m.circuits))
