"""Simple principal pivoting over a fundamental-circuit oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Protocol, Sequence

from .matroid import AbstractOM, ExtensionOM, NotABasisError, SizeError, fundamental_circuit
from .realize import MAX_REALIZE_N, LcpInstance, circuits_of_realization, rref
from .signvec import GroundSet, SignVector, bit, elements_of


class CircuitOracle(Protocol):
    n: int

    def query(self, basis: frozenset[int], e: int) -> SignVector:
        """The fundamental circuit ``C(basis, e)`` with ``C_e = +``."""


class LcpOracle:
    """Fundamental circuits of ``[I -M -q]`` by exact linear solves."""

    def __init__(self, inst: LcpInstance):
        if inst.q is None:
            raise ValueError("the oracle needs q")
        self.inst = inst
        self.n = inst.n
        self._cache: dict[tuple[frozenset[int], int], tuple[SignVector, list[Fraction]]] = {}

    def solve(self, basis: frozenset[int], e: int) -> list[Fraction]:
        """Kernel vector supported on ``basis + e`` with coordinate ``e`` equal to 1."""
        return self._lookup(frozenset(basis), e)[1]

    def query(self, basis: frozenset[int], e: int) -> SignVector:
        return self._lookup(frozenset(basis), e)[0]

    def _lookup(self, basis, e):
        key = (basis, e)
        if key not in self._cache:
            self._cache[key] = self._compute(basis, e)
        return self._cache[key]

    def _compute(self, basis, e):
        inst, n = self.inst, self.n
        if e in basis:
            raise ValueError(f"{e} is in the basis")
        B = sorted(basis)
        if len(B) != n:
            raise NotABasisError(f"{B} has {len(B)} elements, rank is {n}")
        aug = [[inst.column(b)[i] for b in B] + [-inst.column(e)[i]] for i in range(n)]
        R, piv = rref(aug)
        if piv != list(range(n)):
            raise NotABasisError(f"{B} is not a basis")
        x = [R[i][n] for i in range(n)]
        full = [Fraction(0)] * (2 * n + 1)
        for b, v in zip(B, x):
            full[b - 1] = v
        full[e - 1] = Fraction(1)
        sv = SignVector.from_signs([(v > 0) - (v < 0) for v in full])
        return sv, full


class MatroidOracle:
    """Fundamental circuits looked up in an extension's circuit list."""

    def __init__(self, ext: ExtensionOM | AbstractOM):
        self.ext = ext.extension if isinstance(ext, ExtensionOM) else ext
        self.n = self.ext.size // 2
        self._cache: dict[tuple[frozenset[int], int], SignVector] = {}

    def query(self, basis: frozenset[int], e: int) -> SignVector:
        key = (frozenset(basis), e)
        if key not in self._cache:
            self._cache[key] = fundamental_circuit(self.ext, key[0], e)
        return self._cache[key]


# -- pivot rules -------------------------------------------------------------

PivotRule = Callable[[Sequence[int], int], int]


def min_index(candidates: Sequence[int], step: int) -> int:
    return min(candidates)


def max_index(candidates: Sequence[int], step: int) -> int:
    return max(candidates)


@dataclass(frozen=True)
class RandomRule:
    """Uniform choice, reproducible from ``(seed, step, candidates)`` alone."""

    seed: int

    @property
    def name(self) -> str:
        return f"random:{self.seed}"

    def __call__(self, candidates: Sequence[int], step: int) -> int:
        rng = random.Random(f"{self.seed}:{step}:{','.join(map(str, candidates))}")
        return rng.choice(list(candidates))


def rule_name(rule: PivotRule) -> str:
    return getattr(rule, "name", None) or getattr(rule, "__name__", repr(rule))


def get_rule(name: str) -> PivotRule:
    if name == "min_index":
        return min_index
    if name == "max_index":
        return max_index
    if name.startswith("random"):
        _, _, seed = name.partition(":")
        return RandomRule(int(seed or 0))
    raise ValueError(f"unknown pivot rule {name!r}")


# -- the algorithm -------------------------------------------------------------


@dataclass(frozen=True)
class PivotStep:
    basis: frozenset[int]
    circuit: SignVector
    pivot: int | None = None

    def to_json(self) -> dict:
        out = {"basis": sorted(self.basis), "circuit": str(self.circuit)}
        if self.pivot is not None:
            out["pivot"] = self.pivot
        return out


@dataclass
class PivotTrace:
    n: int
    steps: list[PivotStep] = field(default_factory=list)
    status: str = "solved"
    rule: str = ""

    @property
    def pivots(self) -> int:
        return sum(s.pivot is not None for s in self.steps)

    @property
    def pivot_elements(self) -> list[int]:
        return [s.pivot for s in self.steps if s.pivot is not None]

    @property
    def circuits(self) -> list[SignVector]:
        return [s.circuit for s in self.steps]

    @property
    def solution(self) -> SignVector | None:
        return self.steps[-1].circuit if self.status == "solved" else None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "pivots": self.pivots,
            "rule": self.rule,
            "steps": [s.to_json() for s in self.steps],
        }


def default_cap(n: int) -> int:
    return 3 * 2**n


def simple_principal_pivot(
    oracle: CircuitOracle,
    start: Iterable[int] | None = None,
    rule: PivotRule = min_index,
    cap: int | None = None,
) -> PivotTrace:
    """Pivot from a complementary basis until ``C(B, q)`` is nonnegative.

    Each step swaps a negative basic element for its complement.  Stops with
    status ``"cap_exceeded"`` once ``cap`` pivots were made without success.
    """
    n = oracle.n
    g = GroundSet(n)
    B = frozenset(g.S if start is None else start)
    if len(B) != n or not g.is_complementary(B):
        raise ValueError(f"{sorted(B)} is not a complementary n-set")
    cap = default_cap(n) if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be positive")
    q = 2 * n + 1
    trace = PivotTrace(n, rule=rule_name(rule))
    C = oracle.query(B, q)
    step = 0
    while C.minus:
        if step >= cap:
            trace.steps.append(PivotStep(B, C))
            trace.status = "cap_exceeded"
            return trace
        candidates = elements_of(C.minus)
        e = rule(candidates, step)
        if e not in candidates:
            raise ValueError(f"rule {trace.rule} chose {e} outside {candidates}")
        trace.steps.append(PivotStep(B, C, e))
        B = (B - {e}) | {g.complement(e)}
        C = oracle.query(B, q)
        step += 1
    trace.steps.append(PivotStep(B, C))
    return trace


def brute_force_omcp(problem: ExtensionOM | AbstractOM | LcpInstance) -> list[SignVector]:
    """All distinct feasible ``C(B, q)`` over the ``2**n`` complementary bases.

    Complementary sets that are not bases are skipped.
    """
    if isinstance(problem, LcpInstance):
        if problem.n > MAX_REALIZE_N:
            raise SizeError(f"n = {problem.n} > {MAX_REALIZE_N}")
        oracle: CircuitOracle = LcpOracle(problem)
    else:
        oracle = MatroidOracle(problem)
        if oracle.n > MAX_REALIZE_N:
            raise SizeError(f"n = {oracle.n} > {MAX_REALIZE_N}")
    n = oracle.n
    found: set[SignVector] = set()
    for B in GroundSet(n).complementary_bases():
        try:
            C = oracle.query(B, 2 * n + 1)
        except NotABasisError:
            continue
        if not C.minus:
            found.add(C)
    return sorted(found, key=SignVector.sort_key)


# -- trace lemmas --------------------------------------------------------------


def check_lemma_P(trace: PivotTrace) -> bool:
    """After pivoting on ``e``, the new circuit is ``+`` at ``ebar``."""
    g = GroundSet(trace.n)
    for cur, nxt in zip(trace.steps, trace.steps[1:]):
        if cur.pivot is not None and nxt.circuit[g.complement(cur.pivot)] != 1:
            return False
    return True


def check_lemma_staysplus(trace: PivotTrace) -> bool:
    """Once ``C_f >= 0`` for ``f`` in ``T`` it stays so for the rest of the run."""
    g = GroundSet(trace.n)
    tmask = g.t_mask
    settled = 0
    for s in trace.steps:
        if s.circuit.minus & settled:
            return False
        settled |= tmask & ~s.circuit.minus
    return True


def complementarity_holds(trace: PivotTrace) -> bool:
    g = GroundSet(trace.n)
    q = bit(2 * trace.n + 1)
    for s in trace.steps:
        supp = s.circuit.support_mask & ~q
        if supp & ~sum(bit(b) for b in s.basis):
            return False
        if not g.is_complementary(elements_of(supp)):
            return False
    return True


@dataclass
class FastKReport:
    n: int
    runs: int = 0
    max_pivots: int = 0
    max_pivots_from_S: int = 0
    failures: list[tuple[str, PivotTrace]] = field(default_factory=list)
    traces: list[PivotTrace] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_fastK(
    oracle: CircuitOracle | LcpInstance,
    rules: Iterable[PivotRule] = (min_index, max_index),
    starts: Iterable[Iterable[int]] | None = None,
    keep_traces: bool = False,
    s_side: Iterable[int] | None = None,
) -> FastKReport:
    """Run every rule from every start and check the ``2n`` / ``n`` pivot bounds.

    ``s_side`` names the complementary set playing the role of ``S`` (for
    pivot-transformed instances); runs started there must use at most ``n``
    pivots.
    """
    if isinstance(oracle, LcpInstance):
        from .realize import is_k_matrix

        if not is_k_matrix(oracle.M):
            raise ValueError("verify_fastK needs a K-matrix instance")
        oracle = LcpOracle(oracle)
    n = oracle.n
    g = GroundSet(n)
    S = frozenset(g.S if s_side is None else s_side)
    starts = list(g.complementary_bases()) if starts is None else [frozenset(s) for s in starts]
    report = FastKReport(n)
    for rule in rules:
        for B0 in starts:
            tr = simple_principal_pivot(oracle, B0, rule, cap=2 * n + 1)
            report.runs += 1
            report.max_pivots = max(report.max_pivots, tr.pivots)
            if keep_traces:
                report.traces.append(tr)
            if tr.status != "solved" or tr.pivots > 2 * n:
                report.failures.append(("bound_2n", tr))
            elif len(set(tr.pivot_elements)) != tr.pivots:
                report.failures.append(("repeated_pivot", tr))
            if B0 == S:
                report.max_pivots_from_S = max(report.max_pivots_from_S, tr.pivots)
                if tr.pivots > n:
                    report.failures.append(("bound_n", tr))
    return report


def realized_oracles(inst: LcpInstance) -> tuple[LcpOracle, MatroidOracle]:
    return LcpOracle(inst), MatroidOracle(circuits_of_realization(inst, with_q=True))
