from itertools import product as cartesian

import pytest

from omcp.matroid import (
    AbstractOM,
    ExtensionOM,
    NotABasisError,
    NotAVectorError,
    SizeError,
    bases,
    cocircuits,
    conformal_decompose,
    contract,
    delete,
    fundamental_circuit,
    is_basis,
    minimal_supports,
    minor,
    ppt_matroid,
    principal_minor,
    reflect_matroid,
    vectors_from_circuits,
    verify_circuit_axioms,
    verify_vector_axioms,
)
from omcp.realize import LcpInstance, circuits_of_realization
from omcp.signvec import SignVector, compose, conforms_to, is_orthogonal

from oracles import sampled_circuits, sampled_covectors, sampled_vectors

sv = SignVector.from_string
TRIDIAG = [[2, -1], [-1, 2]]


def om(*circuits):
    return AbstractOM.from_circuits(circuits)


@pytest.fixture
def tri():
    return circuits_of_realization(LcpInstance(TRIDIAG))


# -- axioms ----------------------------------------------------------------------


def test_kernel_line_passes_circuit_axioms():
    assert verify_circuit_axioms([sv("++"), sv("--")]).ok


def test_zero_circuit_flags_c1():
    assert "C1" in verify_circuit_axioms([sv("00"), sv("++"), sv("--")]).violated


def test_missing_negations_flag_c2():
    report = verify_circuit_axioms([sv("++0"), sv("+0+"), sv("0+-")])
    assert "C2" in report.violated


def test_nested_supports_flag_c3():
    report = verify_circuit_axioms([sv("+0"), sv("-0"), sv("++"), sv("--")])
    assert "C3" in report.violated


def test_elimination_violation():
    # +0+ and 0-- cannot be eliminated at 3: nothing lives on {1,2} with the right signs
    cs = [sv("+0+"), sv("-0-"), sv("0--"), sv("0++")]
    report = verify_circuit_axioms(cs)
    assert {"C4", "C4'"} <= report.violated


def test_vector_axioms_examples():
    assert verify_vector_axioms([sv("00"), sv("++"), sv("--")]).ok
    assert "V2" in verify_vector_axioms([sv("00"), sv("++")]).violated
    vs = [sv(s) for s in ("00", "+0", "-0", "0+", "0-")]
    assert "V3" in verify_vector_axioms(vs).violated


def test_vector_axioms_v4_modes():
    vs = [sv("00"), sv("++"), sv("--")]
    assert verify_vector_axioms(vs, v4="standard").ok
    # the printed clause asks for the eliminated element itself to be in the support
    assert "V4" in verify_vector_axioms(vs, strict=True).violated


def test_realized_vectors_pass_standard_v4(tri):
    assert verify_vector_axioms(tri.vectors, v4="standard").ok


# -- vectors and decomposition -------------------------------------------------


def test_vectors_of_single_circuit():
    assert vectors_from_circuits(om("++")) == {sv("00"), sv("++"), sv("--")}


def test_vectors_of_empty_matroid():
    assert vectors_from_circuits(AbstractOM(3)) == {SignVector.zero(3)}


def test_vectors_of_tridiagonal(tri):
    # frozen from the sampling oracle: 4 lines through 0 in the plane give 8 rays, 8 sectors, 1 origin
    expected = sampled_vectors(TRIDIAG)
    assert len(expected) == 17
    assert tri.vectors == expected
    assert sv("++++") in tri.vectors


def test_conformal_decomposition_examples(tri):
    C = sv("+-+0")
    assert conformal_decompose(tri, C) == [C]
    assert conformal_decompose(tri, SignVector.zero(4)) == []
    parts = conformal_decompose(tri, sv("++++"))
    assert len(parts) == 2
    assert compose(*parts) == sv("++++")


def test_conformal_decomposition_all_vectors(tri):
    for X in tri.vectors:
        parts = conformal_decompose(tri, X)
        acc = SignVector.zero(4)
        for c in parts:
            assert conforms_to(c, X)
            acc = compose(acc, c)
        assert acc == X


def test_conformal_decomposition_rejects_non_vector():
    with pytest.raises(NotAVectorError):
        conformal_decompose(om("++"), sv("+-"))


# -- bases and fundamental circuits --------------------------------------------


def test_bases_of_single_circuit():
    m = om("++")
    assert is_basis(m, {1}) and is_basis(m, {2})
    assert not is_basis(m, {1, 2})
    assert bases(m) == {frozenset({1}), frozenset({2})}


def test_bases_have_equal_size(tri):
    assert {len(B) for B in bases(tri)} == {2}
    assert len(bases(tri)) == 6


def test_fundamental_circuit_examples(tri):
    assert fundamental_circuit(om("++"), {1}, 2) == sv("++")
    assert fundamental_circuit(tri, {1, 2}, 3) == sv("+-+0")
    for B in bases(tri):
        for e in set(range(1, 5)) - B:
            C = fundamental_circuit(tri, B, e)
            assert C[e] == 1 and C.support <= B | {e}


def test_fundamental_circuit_errors(tri):
    with pytest.raises(NotABasisError):
        fundamental_circuit(om("++0"), {1, 2}, 3)
    with pytest.raises(ValueError):
        fundamental_circuit(tri, {1, 2}, 1)


# -- duality -----------------------------------------------------------------------


def test_cocircuits_of_single_circuit():
    assert cocircuits(om("++")) == {sv("+-"), sv("-+")}


def test_cocircuits_of_free_matroid():
    units = set()
    for e in range(3):
        s = ["0"] * 3
        s[e] = "+"
        units |= {sv("".join(s)), -sv("".join(s))}
    assert cocircuits(AbstractOM(3)) == units


def test_cocircuits_orthogonal_to_circuits(tri):
    for D in tri.cocircuits:
        for C in tri.signed_circuits:
            assert is_orthogonal(C, D)


def test_covectors_match_row_space(tri):
    assert tri.covectors == sampled_covectors(TRIDIAG)


def test_cocircuit_size_guard():
    with pytest.raises(SizeError):
        cocircuits(AbstractOM(13))


@pytest.mark.parametrize("M", [[[1]], [[0]], TRIDIAG, [[1, 3], [0, 1]], [[0, 1], [-1, 0]], [[1, 0], [0, 0]]])
def test_double_dual(M):
    m = circuits_of_realization(LcpInstance(M))
    assert verify_circuit_axioms(m.dual.signed_circuits).ok
    assert m.dual.dual.circuits == m.circuits


def test_vector_orthogonality_definition_of_dual(tri):
    """Covectors are exactly the sign vectors orthogonal to every vector."""
    from omcp.signvec import all_sign_vectors

    direct = {Y for Y in all_sign_vectors(4) if all(is_orthogonal(X, Y) for X in tri.vectors)}
    assert direct == tri.covectors


# -- minors, reflection, ppt -----------------------------------------------------------


def test_delete_nothing(tri):
    assert delete(tri, set()) == tri


def test_principal_minor_example(tri):
    assert principal_minor(tri, {3}) == circuits_of_realization(LcpInstance([[2]]))


def test_contract_basis_leaves_loops(tri):
    m = contract(tri, {1, 2})
    # every remaining element is parallel to the contracted basis: rank 0
    assert m.size == 2 and m.rank == 0
    assert {c.support for c in m.circuits} == {frozenset({1}), frozenset({2})}


def test_full_principal_minor_is_empty(tri):
    m = principal_minor(tri, {1, 2})
    assert m.size == 0 and not m.circuits


def _via_vectors(m, D, K):
    keep = [e for e in range(1, m.size + 1) if e not in D and e not in K]
    vs = {X.restrict(keep) for X in m.vectors if not any(X[f] for f in D)}
    return AbstractOM(len(keep), frozenset(minimal_supports(vs)))


@pytest.mark.parametrize("M", [TRIDIAG, [[1, 3], [0, 1]], [[1, -1, 0], [2, 1, -1], [0, 1, 1]]])
def test_minors_match_vector_route(M):
    m = circuits_of_realization(LcpInstance(M))
    E = range(1, m.size + 1)
    for d in E:
        for k in E:
            if d != k:
                assert minor(m, {d}, {k}) == _via_vectors(m, {d}, {k})


def _shift(e, removed):
    return e - sum(1 for r in removed if r < e)


@pytest.mark.parametrize("M", [TRIDIAG, [[1, 1], [-2, 0]], [[1, -1, 0], [2, 1, -1], [0, 1, 1]]])
def test_delete_contract_commute(M):
    m = circuits_of_realization(LcpInstance(M))
    for e, f in cartesian(range(1, m.size + 1), repeat=2):
        if e == f:
            continue
        a = contract(delete(m, {e}), {_shift(f, [e])})
        b = delete(contract(m, {f}), {_shift(e, [f])})
        assert a == b == minor(m, {e}, {f})


def test_ppt_and_reflection(tri):
    assert ppt_matroid(tri, set()) == tri
    assert reflect_matroid(reflect_matroid(tri)) == tri
    m = om("++")
    assert reflect_matroid(m.dual) == reflect_matroid(m).dual
    assert reflect_matroid(tri.dual) == reflect_matroid(tri).dual


@pytest.mark.parametrize("F", [{1}, {2}, {3}, {1, 2}, {1, 4}])
def test_ppt_matroid_is_involution(tri, F):
    assert ppt_matroid(ppt_matroid(tri, F), F) == tri


# -- extensions --------------------------------------------------------------------


def test_extension_checks():
    ext = circuits_of_realization(LcpInstance([[1]], (-1,)), with_q=True)
    assert isinstance(ext, ExtensionOM)
    assert ext.base == om("++")
    with pytest.raises(ValueError):
        ExtensionOM(om("+-"), ext.extension)
    with pytest.raises(ValueError):
        # q only appears as a coloop here
        ExtensionOM(om("++"), AbstractOM.from_circuits(["++0"]))


@pytest.mark.parametrize("M, q", [([[1]], [-1]), (TRIDIAG, [-1, 1]), ([[1, 3], [0, 1]], [2, -1])])
def test_realized_circuits_match_sampling(M, q):
    assert circuits_of_realization(LcpInstance(M)).circuits == sampled_circuits(M)
    ext = circuits_of_realization(LcpInstance(M, q), with_q=True)
    assert ext.extension.circuits == sampled_circuits(M, q)
