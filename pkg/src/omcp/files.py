"""JSON readers/writers for instance and matroid files."""

from __future__ import annotations

import json
from pathlib import Path

from .matroid import AbstractOM, ExtensionOM, verify_circuit_axioms
from .realize import LcpInstance, format_rational, parse_rational
from .signvec import SignVector


class FileFormatError(ValueError):
    pass


def instance_to_json(inst: LcpInstance) -> dict:
    out = {"n": inst.n, "M": [[format_rational(v) for v in row] for row in inst.M]}
    if inst.q is not None:
        out["q"] = [format_rational(v) for v in inst.q]
    return out


def instance_from_json(data: dict) -> LcpInstance:
    try:
        n = int(data["n"])
        M = [[parse_rational(v) for v in row] for row in data["M"]]
        q = data.get("q")
        inst = LcpInstance(tuple(map(tuple, M)), None if q is None else tuple(parse_rational(v) for v in q))
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad instance: {exc}") from exc
    if inst.n != n:
        raise FileFormatError(f"declared n = {n} but M is {inst.n}x{inst.n}")
    return inst


def matroid_to_json(m: AbstractOM | ExtensionOM) -> dict:
    if isinstance(m, ExtensionOM):
        out = matroid_to_json(m.base)
        out["extension_circuits"] = [str(c) for c in m.extension.sorted_circuits()]
        return out
    return {"n": m.size // 2, "circuits": [str(c) for c in m.sorted_circuits()]}


def matroid_from_json(data: dict, validate: bool = True) -> AbstractOM | ExtensionOM:
    """Read a matroid file; negations are implied, axioms checked when ``validate``."""
    try:
        n = int(data["n"])
        base = [SignVector.from_string(s) for s in data["circuits"]]
        ext = data.get("extension_circuits")
        ext = None if ext is None else [SignVector.from_string(s) for s in ext]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad matroid: {exc}") from exc
    for c in base:
        if c.size != 2 * n:
            raise FileFormatError(f"circuit {c} is not of length {2 * n}")
    for c in ext or ():
        if c.size != 2 * n + 1:
            raise FileFormatError(f"extension circuit {c} is not of length {2 * n + 1}")
    try:
        m = AbstractOM(2 * n, frozenset(base))
        if validate:
            _validate(m)
        if ext is None:
            return m
        e = AbstractOM(2 * n + 1, frozenset(ext))
        if validate:
            _validate(e)
        return ExtensionOM(m, e)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def _validate(m: AbstractOM) -> None:
    report = verify_circuit_axioms(m.signed_circuits)
    if not report.ok:
        raise FileFormatError("circuit axioms fail: " + "; ".join(map(str, report.violations)))


def load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc


def load_instance(path: str | Path) -> LcpInstance:
    return instance_from_json(load_json(path))


def load_matroid(path: str | Path, validate: bool = True) -> AbstractOM | ExtensionOM:
    return matroid_from_json(load_json(path), validate)
