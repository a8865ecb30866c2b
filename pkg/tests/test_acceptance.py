"""Exit criteria. Each test is one criterion; all checks are exact.

The summary hook in ``conftest.py`` prints one PASS/FAIL line per criterion.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian

import pytest

from omcp.classify import (
    all_complementary_sets,
    check_fundc,
    check_lemma_K,
    eqK_all,
    eqP_extension_uniqueness,
    is_k_matroid,
    is_kstar_matroid,
    is_p_matroid,
    is_z_matroid,
)
from omcp.matroid import ppt_matroid, verify_circuit_axioms
from omcp.pivot import (
    FastKReport,
    LcpOracle,
    RandomRule,
    brute_force_omcp,
    check_lemma_P,
    check_lemma_staysplus,
    complementarity_holds,
    max_index,
    min_index,
    simple_principal_pivot,
    verify_fastK,
)
from omcp.realize import (
    LcpInstance,
    circuit_witnesses,
    circuits_of_realization,
    fiedler_ptak_condition,
    generate_k_matrix,
    generate_matrix,
    inverse,
    is_k_matrix,
    is_p_matrix,
    is_z_matrix,
    lcp_solution_from_sign_vector,
    ppt_instance,
    realization_residual,
)
from omcp.signvec import GroundSet, is_orthogonal

RULES = (min_index, max_index, *(RandomRule(s) for s in range(5)))
SWEEP_N = (1, 2, 3, 4)
SWEEP_SEEDS = range(100)


@dataclass
class SweepRun:
    inst: LcpInstance
    report: FastKReport


@pytest.fixture(scope="session")
def sweep():
    """Every rule from every complementary start on 100 K-instances per n."""
    runs = []
    for n in SWEEP_N:
        for seed in SWEEP_SEEDS:
            inst = generate_k_matrix(n, seed)
            runs.append(SweepRun(inst, verify_fastK(LcpOracle(inst), RULES, keep_traces=True)))
    return runs


@pytest.fixture(scope="session")
def matrix_pool():
    """200 matrices, n <= 4, fifty of each P/Z combination."""
    pool = []
    for kind in ("K", "PnotZ", "ZnotP", "neither"):
        for seed in range(50):
            n = 1 + seed % 4
            if kind in ("PnotZ", "neither"):
                n = max(n, 2)
            pool.append((kind, generate_matrix(n, seed, kind).M))
    return pool


@pytest.fixture(scope="session")
def z_pool():
    """100 Z-matrices, n <= 3: half K, half Z but not P."""
    pool = []
    for kind in ("K", "ZnotP"):
        for seed in range(50):
            pool.append(generate_matrix(1 + seed % 3, 1000 + seed, kind).M)
    return pool


@pytest.mark.acceptance(1, "every run solves within 2n pivots, no element pivots twice")
def test_pivot_bound(sweep):
    runs = 0
    for run in sweep:
        n = run.inst.n
        assert run.report.runs == len(RULES) * 2**n
        runs += run.report.runs
        bad = [kind for kind, _ in run.report.failures if kind in ("bound_2n", "repeated_pivot")]
        assert not bad, (run.inst, bad)
        assert run.report.max_pivots <= 2 * n
        for tr in run.report.traces:
            assert tr.status == "solved" and tr.pivots <= 2 * n
            assert len(set(tr.pivot_elements)) == tr.pivots
    assert runs == 100 * len(RULES) * sum(2**n for n in SWEEP_N)


@pytest.mark.acceptance(2, "runs started at S use at most n pivots")
def test_s_start_bound(sweep):
    for run in sweep:
        n = run.inst.n
        S = GroundSet(n).S
        from_s = [tr for tr in run.report.traces if tr.steps[0].basis == S]
        assert len(from_s) == len(RULES)
        assert all(tr.pivots <= n for tr in from_s)
        assert not [k for k, _ in run.report.failures if k == "bound_n"]


@pytest.mark.acceptance(3, "exactly one complementary solution, found by the solver")
def test_uniqueness():
    checked = 0
    for n in (1, 2, 3):
        for seed in range(10):
            M = generate_k_matrix(n, seed).M
            for signs in cartesian((-1, 0, 1), repeat=n):
                q = [s * Fraction(i + 1 + seed % 3, 2) for i, s in enumerate(signs)]
                inst = LcpInstance(M, q)
                tr = simple_principal_pivot(LcpOracle(inst))
                assert brute_force_omcp(inst) == [tr.solution]
                assert eqP_extension_uniqueness(circuits_of_realization(inst, True)) == 1
                checked += 1
    assert checked == 10 * (3 + 9 + 27)


@pytest.mark.acceptance(4, "matrix and matroid P/Z/K classes agree")
def test_matrix_matroid_agreement(matrix_pool):
    seen = set()
    for kind, M in matrix_pool:
        m = circuits_of_realization(LcpInstance(M))
        p, z, k = is_p_matrix(M), is_z_matrix(M), is_k_matrix(M)
        assert bool(is_p_matroid(m)) == p
        assert bool(is_z_matroid(m)) == z
        assert bool(is_k_matroid(m)) == k
        seen.add((p, z))
    assert seen == {(True, True), (True, False), (False, True), (False, False)}
    assert len(matrix_pool) == 200


@pytest.mark.acceptance(5, "the eight K-matroid conditions agree on every Z-matroid")
def test_eqK_equivalence(z_pool):
    kinds = set()
    for M in z_pool:
        m = circuits_of_realization(LcpInstance(M))
        verdicts = {c: r.holds for c, r in eqK_all(m).items()}
        assert len(set(verdicts.values())) == 1, (M, verdicts)
        kinds.add(verdicts["a"])
    assert kinds == {True, False}


@pytest.mark.acceptance(6, "Fiedler-Ptak conditions agree; K inverses are nonnegative")
def test_fiedler_ptak(z_pool):
    for M in z_pool:
        verdicts = {c: fiedler_ptak_condition(M, c) for c in "abcde"}
        assert len(set(verdicts.values())) == 1, (M, verdicts)
        assert verdicts["a"] == is_k_matrix(M)
        if is_k_matrix(M):
            inv = inverse(M)
            assert inv is not None and all(v >= 0 for row in inv for v in row)


@pytest.mark.acceptance(7, "axioms, cocircuit orthogonality and double duality")
def test_duality_and_axioms(matrix_pool):
    for _, M in matrix_pool:
        m = circuits_of_realization(LcpInstance(M))
        assert verify_circuit_axioms(m.signed_circuits).ok
        if m.size <= 6:
            for D in m.cocircuits:
                assert all(is_orthogonal(C, D) for C in m.signed_circuits)
    count = 0
    for n in (1, 2):
        for entries in cartesian((-1, 0, 1), repeat=n * n):
            M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
            m = circuits_of_realization(LcpInstance(M))
            assert verify_circuit_axioms(m.signed_circuits).ok
            assert verify_circuit_axioms(m.dual.signed_circuits).ok
            for D in m.cocircuits:
                assert all(is_orthogonal(C, D) for C in m.signed_circuits)
            assert m.dual.dual.circuits == m.circuits
            count += 1
    assert count == 3 + 81


@pytest.mark.acceptance(8, "fundc, Lemma K, Lemmas P and stays+, PPT closure, K* bound")
def test_structural_lemmas(sweep, z_pool, matrix_pool):
    for M in z_pool:
        assert check_fundc(circuits_of_realization(LcpInstance(M)))
    for M in z_pool:
        if is_k_matrix(M):
            assert check_lemma_K(circuits_of_realization(LcpInstance(M)))
    for run in sweep:
        for tr in run.report.traces:
            assert check_lemma_P(tr) and check_lemma_staysplus(tr) and complementarity_holds(tr)
    for _, M in matrix_pool:
        if is_p_matrix(M) and len(M) <= 3:
            m = circuits_of_realization(LcpInstance(M))
            for F in all_complementary_sets(len(M)):
                assert is_p_matroid(ppt_matroid(m, F))
    for n in (1, 2, 3):
        g = GroundSet(n)
        for seed in range(5):
            inst = generate_k_matrix(n, seed)
            for F in all_complementary_sets(n):
                ppt = ppt_instance(inst, F)
                s_side = g.S ^ (frozenset(F) | g.complement_set(F))
                assert is_kstar_matroid(circuits_of_realization(ppt))
                assert verify_fastK(LcpOracle(ppt), RULES, s_side=s_side).ok


@pytest.mark.acceptance(9, "zero residual for every circuit witness and every solution")
def test_exactness(sweep, matrix_pool):
    for _, M in matrix_pool:
        n = len(M)
        inst = LcpInstance(M, [(-1) ** i * Fraction(i + 1, 3) for i in range(n)])
        for _, x in circuit_witnesses(inst, with_q=True):
            assert all(r == 0 for r in realization_residual(inst, x))
    for run in sweep:
        for C in {tr.solution for tr in run.report.traces}:
            w, z = lcp_solution_from_sign_vector(run.inst, C)
            q, M = run.inst.q, run.inst.M
            assert all(w[i] - sum(M[i][j] * z[j] for j in range(len(z))) == q[i] for i in range(len(q)))
            assert sum(a * b for a, b in zip(w, z)) == 0
            assert all(v >= 0 for v in w + z)
