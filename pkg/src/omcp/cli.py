"""Command-line front end (``omcp``).

Exit codes: 0 success, 1 input error, 2 algorithmic non-success (pivot cap
or a non-basis met while pivoting), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import classify as cl
from .files import (
    FileFormatError,
    instance_to_json,
    load_instance,
    load_matroid,
    matroid_to_json,
)
from .matroid import MAX_ENUM, AbstractOM, ExtensionOM, NotABasisError, SizeError, verify_circuit_axioms
from .pivot import (
    LcpOracle,
    MatroidOracle,
    get_rule,
    rule_name,
    simple_principal_pivot,
)
from .realize import (
    MATRIX_KINDS,
    MAX_REALIZE_N,
    LcpInstance,
    circuits_of_realization,
    fiedler_ptak_condition,
    format_rational,
    generate_matrix,
    is_k_matrix,
    is_p_matrix,
    is_z_matrix,
    lcp_solution_from_sign_vector,
    parse_rational,
)
from .signvec import GroundSet

EXIT_OK, EXIT_INPUT, EXIT_ALGO, EXIT_INVARIANT = 0, 1, 2, 3
ALL_RULES = ("min_index", "max_index", "random:0", "random:1", "random:2", "random:3", "random:4")


class InvariantViolation(RuntimeError):
    pass


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _parse_start(text: str, n: int) -> frozenset[int]:
    g = GroundSet(n)
    if text == "S":
        return g.S
    if text == "T":
        return g.T
    try:
        B = frozenset(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise FileFormatError(f"bad start {text!r}") from None
    if len(B) != n or not g.is_complementary(B):
        raise FileFormatError(f"start {sorted(B)} is not a complementary {n}-set")
    return B


# -- solve -------------------------------------------------------------------


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    if inst.q is None:
        raise FileFormatError("instance has no q")
    rule = get_rule(args.rule)
    start = _parse_start(args.start, inst.n)
    oracle = LcpOracle(inst) if args.oracle == "lcp" else MatroidOracle(circuits_of_realization(inst, True))
    try:
        trace = simple_principal_pivot(oracle, start, rule, args.cap)
    except NotABasisError as exc:
        _emit({"status": "not_a_basis", "error": str(exc)})
        return EXIT_ALGO
    out = {"status": trace.status, "pivots": trace.pivots, "rule": trace.rule}
    if trace.status == "solved":
        w, z = lcp_solution_from_sign_vector(inst, trace.solution)
        if not inst.check_solution(w, z):
            raise InvariantViolation("back-substituted (w, z) fails w - Mz = q")
        out["solution"] = str(trace.solution)
        out["w"] = [format_rational(v) for v in w]
        out["z"] = [format_rational(v) for v in z]
    if args.trace:
        out["trace"] = trace.to_json()
    _emit(out)
    return EXIT_OK if trace.status == "solved" else EXIT_ALGO


# -- classify ----------------------------------------------------------------


def _matroid_verdicts(m: AbstractOM) -> tuple[dict, dict]:
    verdicts, witnesses = {}, {}
    for key, fn in (("P", cl.is_p_matroid), ("Z", cl.is_z_matroid), ("K", cl.is_k_matroid)):
        r = fn(m)
        verdicts[key] = r.holds
        if r.witness is not None:
            witnesses[key] = str(r.witness)
    if m.size > MAX_ENUM:
        verdicts["Kstar"] = "skipped"
        if verdicts["Z"]:
            verdicts["eqK"] = "skipped"
        return verdicts, witnesses
    ks = cl.is_kstar_matroid(m)
    verdicts["Kstar"] = ks.holds
    if ks.witness is not None:
        witnesses["Kstar"] = str(ks.witness)
    if verdicts["Z"]:
        verdicts["eqK"] = {c: r.holds for c, r in cl.eqK_all(m).items()}
    return verdicts, witnesses


def classify_report(inst: LcpInstance | None = None, m: AbstractOM | None = None) -> dict:
    report: dict = {}
    if inst is not None:
        M = inst.M
        report.update(P=is_p_matrix(M), Z=is_z_matrix(M), K=is_k_matrix(M))
        if report["Z"]:
            report["fiedler_ptak"] = {c: fiedler_ptak_condition(M, c) for c in "abcde"} if inst.n <= MAX_REALIZE_N else "skipped"
        if m is None and inst.n <= MAX_REALIZE_N:
            m = circuits_of_realization(inst)
    if m is None:
        report.update(Kstar="skipped", matroid="skipped")
        return report
    verdicts, witnesses = _matroid_verdicts(m)
    if inst is None:
        report.update(verdicts)
    else:
        for key in ("P", "Z", "K"):
            if report[key] != verdicts[key]:
                raise InvariantViolation(f"matrix and matroid disagree on {key}")
        report.update({k: v for k, v in verdicts.items() if k not in ("P", "Z", "K")})
    report["witnesses"] = witnesses
    return report


def cmd_classify(args) -> int:
    if args.instance:
        report = classify_report(inst=load_instance(args.instance))
    else:
        m = load_matroid(args.matroid)
        report = classify_report(m=m.base if isinstance(m, ExtensionOM) else m)
    _emit(report)
    return EXIT_OK


# -- circuits ----------------------------------------------------------------


def cmd_circuits(args) -> int:
    inst = load_instance(args.instance)
    if args.with_q and inst.q is None:
        raise FileFormatError("--with-q needs an instance with q")
    m = circuits_of_realization(inst, args.with_q)
    if args.as_matroid:
        _emit(matroid_to_json(m), args.out)
    else:
        target = m.extension if isinstance(m, ExtensionOM) else m
        _emit([str(c) for c in target.sorted_circuits()], args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def verify_report(inst: LcpInstance | None, m: AbstractOM, ext: ExtensionOM | None = None) -> dict:
    checks: dict = {}
    checks["circuit_axioms"] = verify_circuit_axioms(m.signed_circuits).ok
    if ext is not None:
        checks["extension_axioms"] = verify_circuit_axioms(ext.extension.signed_circuits).ok
    if m.size > MAX_ENUM:
        checks["skipped"] = "duality-based checks need |E| <= %d" % MAX_ENUM
        return {"checks": checks, "ok": all(v is True for k, v in checks.items() if k != "skipped")}
    eqp = {c: cl.eqP_condition(m, c).holds for c in cl.EQP_CONDITIONS}
    checks["eqP"] = eqp
    checks["eqP_equivalent"] = len(set(eqp.values())) == 1
    z, zd = cl.is_z_matroid(m).holds, cl.z_dual_check(m).holds
    checks["Z_equals_Zdual"] = z == zd
    p = eqp["a"]
    if ext is not None:
        count = cl.eqP_extension_uniqueness(ext)
        checks["extension_solutions"] = count
        if p:
            checks["eqP_c"] = count == 1
    if z:
        eqk = {c: r.holds for c, r in cl.eqK_all(m).items()}
        checks["eqK"] = eqk
        checks["eqK_equivalent"] = len(set(eqk.values())) == 1
        try:
            checks["fundc"] = cl.check_fundc(m)
        except NotABasisError:
            checks["fundc"] = "S is not a basis"
        if p:
            checks["lemma_K"] = cl.check_lemma_K(m)
    if inst is not None:
        if is_z_matrix(inst.M):
            fp = {c: fiedler_ptak_condition(inst.M, c) for c in "abcde"}
            checks["fiedler_ptak"] = fp
            checks["fiedler_ptak_equivalent"] = len(set(fp.values())) == 1
        checks["realP"] = is_p_matrix(inst.M) == p
        checks["realZ"] = is_z_matrix(inst.M) == z
    ok = all(v is True for k, v in checks.items() if isinstance(v, bool) or k == "fundc")
    return {"checks": checks, "ok": ok}


def cmd_verify(args) -> int:
    inst = ext = None
    if args.instance:
        inst = load_instance(args.instance)
        if inst.n > MAX_REALIZE_N:
            raise SizeError(f"n = {inst.n} > {MAX_REALIZE_N}")
        m = circuits_of_realization(inst)
        if inst.q is not None:
            ext = circuits_of_realization(inst, True)
    else:
        loaded = load_matroid(args.matroid)
        m = loaded.base if isinstance(loaded, ExtensionOM) else loaded
        ext = loaded if isinstance(loaded, ExtensionOM) else None
    report = verify_report(inst, m, ext)
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_INVARIANT


# -- generate / bench ----------------------------------------------------------


def cmd_generate(args) -> int:
    if args.kind == "K":
        from .realize import generate_k_matrix

        inst = generate_k_matrix(args.n, args.seed, parse_rational(args.margin))
    else:
        inst = generate_matrix(args.n, args.seed, args.kind)
    _emit(instance_to_json(inst), args.out)
    return EXIT_OK


def bench_rows(ns, count, seed_start=0, rules=ALL_RULES, starts="all"):
    from .realize import generate_k_matrix

    for n in ns:
        g = GroundSet(n)
        for seed in range(seed_start, seed_start + count):
            inst = generate_k_matrix(n, seed)
            oracle = LcpOracle(inst)
            bases = [g.S] if starts == "S" else list(g.complementary_bases())
            for r in rules:
                rule = get_rule(r)
                for B0 in bases:
                    tr = simple_principal_pivot(oracle, B0, rule, cap=2 * n + 1)
                    ok2n = tr.status == "solved" and tr.pivots <= 2 * n
                    okn = (tr.pivots <= n) if B0 == g.S else None
                    yield {
                        "n": n,
                        "seed": seed,
                        "rule": rule_name(rule),
                        "start": " ".join(map(str, sorted(B0))),
                        "pivots": tr.pivots,
                        "bound_2n_ok": ok2n,
                        "bound_n_ok": okn,
                    }


def cmd_bench(args) -> int:
    rules = ALL_RULES if args.rules == "all" else tuple(args.rules.split(","))
    for r in rules:
        get_rule(r)
    rows = list(bench_rows(args.n or [3], args.count, args.seed_start, rules, args.starts))
    fields = ["n", "seed", "rule", "start", "pivots", "bound_2n_ok", "bound_n_ok"]
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            row = dict(row)
            for k in ("bound_2n_ok", "bound_n_ok"):
                row[k] = "na" if row[k] is None else str(row[k]).lower()
            w.writerow(row)
    finally:
        if args.out:
            fh.close()
    bad = any(not r["bound_2n_ok"] or r["bound_n_ok"] is False for r in rows)
    return EXIT_INVARIANT if bad else EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omcp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an LCP by simple principal pivoting")
    s.add_argument("--instance", required=True)
    s.add_argument("--rule", default="min_index", help="min_index | max_index | random:SEED")
    s.add_argument("--start", default="S", help="S, T, or a comma-separated complementary set")
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--trace", action="store_true")
    s.add_argument("--oracle", choices=("lcp", "matroid"), default="lcp")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("classify", help="P/Z/K/K* verdicts with witnesses")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--instance")
    g.add_argument("--matroid")
    c.set_defaults(func=cmd_classify)

    ci = sub.add_parser("circuits", help="circuits of [I -M] or [I -M -q]")
    ci.add_argument("--instance", required=True)
    ci.add_argument("--with-q", action="store_true")
    ci.add_argument("--as-matroid", action="store_true", help="emit a matroid file instead of a list")
    ci.add_argument("--out")
    ci.set_defaults(func=cmd_circuits)

    v = sub.add_parser("verify", help="check axioms and the characterization theorems")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--instance")
    g.add_argument("--matroid")
    v.set_defaults(func=cmd_verify)

    ge = sub.add_parser("generate", help="generate a seeded instance")
    ge.add_argument("--n", type=int, required=True)
    ge.add_argument("--seed", type=int, required=True)
    ge.add_argument("--margin", default="1")
    ge.add_argument("--kind", choices=MATRIX_KINDS, default="K")
    ge.add_argument("--out")
    ge.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="pivot counts on generated K-instances (CSV)")
    b.add_argument("--n", type=int, action="append")
    b.add_argument("--count", type=int, default=10)
    b.add_argument("--seed-start", type=int, default=0)
    b.add_argument("--rules", default="all")
    b.add_argument("--starts", choices=("all", "S"), default="all")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (FileFormatError, SizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
