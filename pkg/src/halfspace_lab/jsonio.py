"""JSON encodings.  Rationals are strings ``"p/q"``; indices are 1-based."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .arrangement import Arrangement
from .errors import DimensionMismatch, InconsistentInput
from .exactla import format_rational, matrix, vector
from .feasibility import FarkasCertificate, Feasible, Infeasible, MixedSystem, Optimal, Rel, Unbounded
from .polyhedron import ActiveTriple, Cone, Tetrad
from .signs import format_sign, parse_sign, sort_signs


def rat(q) -> str:
    return format_rational(q)


def vec(v) -> list:
    return [format_rational(x) for x in v]


def mat(M) -> list:
    return [vec(r) for r in M]


def parse_vector_text(text: str) -> tuple:
    """``"0,1,0,1"`` or ``"0 1/2 -3"`` to a vector."""
    parts = text.replace(",", " ").split()
    return vector(parts)


def system_to_json(s: MixedSystem) -> dict:
    return {
        "n": s.n,
        "rows": [{"normal": vec(c.normal), "rel": c.rel.value, "rhs": rat(c.rhs)} for c in s.rows],
    }


def system_from_json(obj: dict) -> MixedSystem:
    try:
        n = int(obj["n"])
        rows = [(r["normal"], Rel(r["rel"]), r["rhs"]) for r in obj.get("rows", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InconsistentInput(f"malformed system: {exc}") from None
    return MixedSystem.build(n, rows)


def decision_to_json(d: Union[Feasible, Infeasible]) -> dict:
    if d.feasible:
        return {"feasible": True, "witness": vec(d.witness)}
    return {"feasible": False, "certificate": certificate_to_json(d.certificate)}


def certificate_to_json(c: FarkasCertificate) -> dict:
    return {"multipliers": vec(c.multipliers), "flag": c.flag}


def lp_to_json(res) -> dict:
    if isinstance(res, Optimal):
        return {"status": "optimal", "point": vec(res.point), "value": rat(res.value)}
    if isinstance(res, Unbounded):
        return {"status": "unbounded", "point": vec(res.point), "ray": vec(res.ray)}
    return {"status": "infeasible", "certificate": certificate_to_json(res.certificate)}


def _one_based(ix) -> list:
    return sorted(i + 1 for i in ix)


def _zero_based(ix, m: int) -> frozenset:
    out = set()
    for i in ix:
        i = int(i)
        if not 1 <= i <= m:
            raise InconsistentInput(f"index {i} outside 1..{m}")
        out.add(i - 1)
    return frozenset(out)


def tetrad_to_json(t: Tetrad) -> dict:
    return {"a": vec(t.a), "I": _one_based(t.I), "J": _one_based(t.J), "K": _one_based(t.K)}


def tetrad_from_json(obj: dict) -> Tetrad:
    a = vector(obj["a"])
    m = len(a)
    I = _zero_based(obj.get("I", []), m)
    K = _zero_based(obj.get("K", []), m)
    J = _zero_based(obj["J"], m) if "J" in obj else frozenset(range(m)) - I - K
    return Tetrad(a, I, J, K)


def triple_to_json(t: ActiveTriple) -> dict:
    return {"I": _one_based(t.I), "J": _one_based(t.J), "K": _one_based(t.K)}


def cone_to_json(c: Cone) -> dict:
    return {"n": c.n, "rays": mat(c.rays), "lineality": mat(c.lineality)}


def arrangement_to_json(A: Arrangement) -> dict:
    return {"n": A.n, "U": mat(A.U), "a": vec(A.a)}


def arrangement_from_json(obj: dict) -> Arrangement:
    U = matrix(obj["U"])
    return Arrangement.of(U, obj.get("a"), obj.get("n"))


def signs_to_json(signs) -> list:
    return [format_sign(s) for s in sort_signs(signs)]


def signs_from_json(items) -> frozenset:
    return frozenset(parse_sign(s) for s in items)


@dataclass
class Config:
    """Input file: ``U`` plus optional named offsets and tetrads."""

    U: tuple
    n: int
    offsets: dict = field(default_factory=dict)
    tetrads: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.U)

    def offset(self, key: Optional[str], text: Optional[str] = None) -> tuple:
        """Offset from literal text, else a named offset, else the only one present."""
        if text is not None:
            a = parse_vector_text(text) if text not in self.offsets else self.offsets[text]
        elif key is not None:
            if key not in self.offsets:
                raise InconsistentInput(f"no offset named {key!r}")
            a = self.offsets[key]
        elif len(self.offsets) == 1:
            a = next(iter(self.offsets.values()))
        else:
            raise InconsistentInput("an offset vector is required")
        if len(a) != self.m:
            raise DimensionMismatch(f"offset of length {len(a)} for {self.m} rows")
        return a

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "U": mat(self.U),
            "offsets": {k: vec(v) for k, v in self.offsets.items()},
            "tetrads": {k: tetrad_to_json(t) for k, t in self.tetrads.items()},
        }


def config_from_json(obj: dict) -> Config:
    if not isinstance(obj, dict) or "U" not in obj:
        raise InconsistentInput("configuration must be an object with a \"U\" entry")
    U = matrix(obj["U"])
    n = obj.get("n")
    if n is None:
        if not U:
            raise InconsistentInput("\"n\" is required when U is empty")
        n = len(U[0])
    offsets = {k: vector(v) for k, v in obj.get("offsets", {}).items()}
    if "a" in obj:
        offsets.setdefault("a", vector(obj["a"]))
    tetrads = {k: tetrad_from_json(v) for k, v in obj.get("tetrads", {}).items()}
    cfg = Config(U, int(n), offsets, tetrads)
    for row in U:
        if len(row) != cfg.n:
            raise DimensionMismatch("rows of U must have length n")
    return cfg


def load_config(path: Union[str, Path]) -> Config:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InconsistentInput(f"{path}: {exc}") from None
    return config_from_json(obj)
