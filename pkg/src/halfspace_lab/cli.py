"""Command-line front end.

Exit status: 0 on success, 1 when a checked property fails (the report
carries the counterexamples), 2 on usage or input errors.  Indices in all
input and output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import jsonio, verify
from .arrangement import (
    Arrangement,
    combinatorially_equivalent,
    faces as arrangement_faces,
    normally_equivalent_translations,
    semilattice_equivalent,
    sign_equivalent,
    sign_set,
)
from .deformations import coning, elementary_lift, face_count_report, parallel_translation
from .derived import derived_face_dimension, enumerate_circuits, enumerate_derived_faces, locate_open_face
from .errors import HalfspaceError
from .om import CovectorSystem, affine_covectors, check_covector_axioms, om_equivalent, om_equivalent_up_to_symmetry
from .operators import all_faces, face_operator_set, fixed_point_check, sign_operator
from .polyhedron import Tetrad, enumerate_faces, is_bounded, is_empty, normal_cone, normal_fan_equal, open_interior_point
from .sampling import SEED_ENV, resolve_seed
from .signs import format_sign, parse_sign, sort_signs


class UsageError(Exception):
    pass


class Outcome:
    def __init__(self, payload: dict, code: int = 0, text: Optional[str] = None):
        self.payload, self.code, self.text = payload, code, text


# -- input helpers ----------------------------------------------------------


def _config(args):
    if not args.config:
        raise UsageError("--config is required")
    return jsonio.load_config(args.config)


def _offset(cfg, text, name="a"):
    """Literal or named offset; ``a`` may fall back to the only offset in the file."""
    if text is not None:
        return cfg.offset(None, text)
    if name in cfg.offsets:
        return cfg.offset(name)
    if name != "a":
        raise UsageError(f"--{name} is required")
    return cfg.offset(None)


def _index_list(text) -> list:
    if text is None or text.strip() == "":
        return []
    return [int(t) for t in text.replace(",", " ").split()]


def _tetrad(cfg, args, which: str = "") -> Tetrad:
    name = getattr(args, f"tetrad{which}")
    if name is not None:
        if name not in cfg.tetrads:
            raise UsageError(f"no tetrad named {name!r} in the configuration")
        return cfg.tetrads[name]
    text = getattr(args, "a" if not which else "b")
    a = _offset(cfg, text)
    obj = {"a": list(a), "I": _index_list(args.I), "K": _index_list(args.K)}
    if args.J is not None:
        obj["J"] = _index_list(args.J)
    return jsonio.tetrad_from_json(obj)


def _kind_arrangement(cfg, a, kind: str) -> Arrangement:
    if kind == "translate":
        return parallel_translation(cfg.U, a, cfg.n)
    if kind == "cone":
        return coning(cfg.U, a, cfg.n).cone
    if kind == "lift":
        return elementary_lift(cfg.U, a, cfg.n).lift
    raise UsageError(f"unknown kind {kind!r}")


def _covectors(args, cfg_attr="config", cov_attr="covectors", a_attr="a"):
    path = getattr(args, cov_attr)
    if path:
        with open(path) as fh:
            obj = json.load(fh)
        items = obj["covectors"] if isinstance(obj, dict) else obj
        m = obj.get("m") if isinstance(obj, dict) else None
        return CovectorSystem.of(jsonio.signs_from_json(items), m)
    if a_attr == "b" and getattr(args, "config2", None):
        # the second system comes from its own file, offset --b or its "a"
        cfg = jsonio.load_config(args.config2)
        a = _offset(cfg, args.b)
    else:
        cfg = _config(args)
        a = _offset(cfg, getattr(args, a_attr), a_attr)
    A = _kind_arrangement(cfg, a, args.kind)
    return CovectorSystem.of(sign_set(A), A.m)


def _faces_arg(text_items, width: int) -> list:
    out = []
    for item in text_items:
        tokens = item.split(",")
        if len(tokens) == width and all(len(t.strip()) == 1 for t in tokens) and width != 1:
            out.append(parse_sign(item))
        else:
            out.extend(parse_sign(t) for t in tokens)
    for s in out:
        if len(s) != width:
            raise UsageError(f"derived sign vectors have {width} entries")
    return out


# -- subcommands ------------------------------------------------------------


def _circuit_list(cfg):
    return [
        {"support": [i + 1 for i in c.support], "vector": jsonio.vec(c.vector)}
        for c in enumerate_circuits(cfg.U)
    ]


def cmd_circuits(args):
    cfg = _config(args)
    cs = _circuit_list(cfg)
    lines = [f"{{{','.join(map(str, c['support']))}}}  ({', '.join(c['vector'])})" for c in cs]
    return Outcome({"circuits": cs}, text="\n".join(lines) or "no circuits")


def cmd_derived(args):
    cfg = _config(args)
    out = {"circuits": _circuit_list(cfg)}
    if args.faces:
        out["faces"] = [
            {"sign": format_sign(f.sign), "representative": jsonio.vec(f.representative),
             "dimension": derived_face_dimension(cfg.U, f.sign)}
            for f in enumerate_derived_faces(cfg.U)
        ]
    lines = [f"hyperplane {k + 1}: " + " ".join(c["vector"]) for k, c in enumerate(out["circuits"])]
    for f in out.get("faces", []):
        lines.append(f"face {f['sign']}  dim {f['dimension']}  rep ({', '.join(f['representative'])})")
    return Outcome(out, text="\n".join(lines))


def cmd_locate(args):
    cfg = _config(args)
    a = _offset(cfg, args.a)
    s = locate_open_face(cfg.U, a)
    out = {"sign": format_sign(s), "face_dim": derived_face_dimension(cfg.U, s)}
    return Outcome(out, text=f"sign {out['sign']}\nface_dim {out['face_dim']}")


def cmd_faces(args):
    cfg = _config(args)
    A = _kind_arrangement(cfg, _offset(cfg, args.a), args.kind)
    fs = [
        {"sign": format_sign(f.sign), "dimension": f.dimension, "witness": jsonio.vec(f.witness)}
        for f in arrangement_faces(A)
    ]
    text = "\n".join(f"{f['sign']}  dim {f['dimension']}  at ({', '.join(f['witness'])})" for f in fs)
    return Outcome({"count": len(fs), "faces": fs}, text=f"{len(fs)} faces\n{text}")


def cmd_signs(args):
    cfg = _config(args)
    A = _kind_arrangement(cfg, _offset(cfg, args.a), args.kind)
    ss = jsonio.signs_to_json(sign_set(A))
    return Outcome({"count": len(ss), "signs": ss}, text="\n".join(ss))


def cmd_poly(args):
    cfg = _config(args)
    t = _tetrad(cfg, args)
    op = args.op
    if op == "feas":
        w = open_interior_point(cfg.U, t, cfg.n)
        out = {"empty": is_empty(cfg.U, t, cfg.n), "open_interior_point": None if w is None else jsonio.vec(w)}
        return Outcome(out, text=f"empty {out['empty']}\nopen point {out['open_interior_point']}")
    if op == "bounded":
        out = {"bounded": is_bounded(cfg.U, t, cfg.n)}
        return Outcome(out, text=f"bounded {out['bounded']}")
    if op == "faces":
        recs = []
        for f in enumerate_faces(cfg.U, t, n=cfg.n):
            c = normal_cone(cfg.U, t, f.active, cfg.n)
            recs.append({**jsonio.triple_to_json(f.active), "dimension": f.dimension,
                         "witness": jsonio.vec(f.witness), "normal_cone": jsonio.cone_to_json(c)})
        text = "\n".join(f"I={r['I']} J={r['J']} K={r['K']} dim {r['dimension']}" for r in recs)
        return Outcome({"count": len(recs), "faces": recs}, text=f"{len(recs)} faces (the polyhedron itself included)\n{text}")
    t2 = _tetrad(cfg, args, "2")
    out = {"normal_fan_equal": normal_fan_equal(cfg.U, t, t2, cfg.n)}
    return Outcome(out, text=f"normal_fan_equal {out['normal_fan_equal']}")


def cmd_equiv(args):
    cfg = _config(args)
    a = _offset(cfg, args.a)
    b = _offset(cfg, args.b, "b")
    if args.relation == "normal":
        val = normally_equivalent_translations(cfg.U, a, b, cfg.n, allow_multi=args.allow_multi)
    else:
        A, B = _kind_arrangement(cfg, a, args.kind), _kind_arrangement(cfg, b, args.kind)
        fn = {"sign": sign_equivalent, "comb": combinatorially_equivalent, "semilattice": semilattice_equivalent}
        val = fn[args.relation](A, B)
    return Outcome({"relation": args.relation, "equivalent": val}, text=f"{args.relation} equivalent: {val}")


def cmd_deform(args):
    cfg = _config(args)
    a = _offset(cfg, args.a)
    kind = args.kind_pos or args.kind or "translate"
    if kind == "counts" or args.report == "counts":
        r = face_count_report(cfg.U, a, cfg.n).as_dict()
        if kind == "counts":
            return Outcome(r, text="\n".join(f"{k} {v}" for k, v in r.items()))
    A = _kind_arrangement(cfg, a, kind)
    out = {"kind": kind, "arrangement": jsonio.arrangement_to_json(A)}
    if args.report == "counts":
        out["counts"] = r
    lines = [f"{kind} in R^{A.n}:"] + [
        f"  H{i + 1}: ({', '.join(jsonio.vec(u))}) . x = {jsonio.rat(ai)}" for i, (u, ai) in enumerate(zip(A.U, A.a))
    ]
    return Outcome(out, text="\n".join(lines))


def cmd_om(args):
    op = args.op
    if op == "check":
        L = _covectors(args)
        res = check_covector_axioms(L)
        if res.ok:
            return Outcome({"ok": True, "size": len(L)}, text=f"ok ({len(L)} covectors)")
        wit = [format_sign(w) if isinstance(w, tuple) else w + 1 for w in res.witnesses]
        return Outcome({"ok": False, "axiom": res.axiom, "witnesses": wit}, code=1,
                       text=f"violation of {res.axiom}: {wit}")
    if op == "affine":
        L = _covectors(args)
        if args.g is None:
            raise UsageError("--g is required")
        out = affine_covectors(L, args.g - 1)
        ss = jsonio.signs_to_json(out.covectors)
        return Outcome({"m": out.m, "covectors": ss}, text="\n".join(ss) if ss else "(empty vector)")
    L1 = _covectors(args)
    L2 = _covectors(args, cov_attr="covectors2", a_attr="b")
    if not args.up_to_symmetry:
        val = om_equivalent(L1, L2)
        return Outcome({"equivalent": val}, text=f"equivalent: {val}")
    if args.all_witnesses:
        found = om_equivalent_up_to_symmetry(L1, L2, relabel_only=args.relabel_only, all_witnesses=True)
        ws = [{"perm": [p + 1 for p in w.perm], "reoriented": sorted(i + 1 for i in w.reoriented)} for w in found]
        text = "\n".join(f"perm {w['perm']} reorient {w['reoriented']}" for w in ws) or "not found"
        return Outcome({"found": bool(ws), "witnesses": ws}, text=text)
    w = om_equivalent_up_to_symmetry(L1, L2, relabel_only=args.relabel_only)
    if w is None:
        return Outcome({"found": False}, text="not found")
    out = {"found": True, "perm": [p + 1 for p in w.perm], "reoriented": sorted(i + 1 for i in w.reoriented)}
    return Outcome(out, text=f"found: perm {out['perm']} reorient {out['reoriented']}")


def cmd_operators(args):
    cfg = _config(args)
    width = len(enumerate_circuits(cfg.U))
    S = sorted(all_faces(cfg.U, args.kind)) if args.all else _faces_arg(args.faces or [], width)
    if not S:
        raise UsageError("give --faces or --all")
    signs = sign_operator(cfg.U, S, args.kind)
    back = face_operator_set(cfg.U, signs, args.kind)
    ok = fixed_point_check(cfg.U, S, args.kind)
    out = {
        "faces": [format_sign(s) for s in sort_signs(S)],
        "sign": jsonio.signs_to_json(signs),
        "face_of_sign": [format_sign(s) for s in sort_signs(back)],
        "fixed_point": ok,
    }
    text = f"fixed point: {ok}\nSign(S): {len(signs)} sign vectors\nFace(Sign(S)): {out['face_of_sign']}"
    return Outcome(out, text=text)


def cmd_verify(args):
    seed = resolve_seed(args.seed)
    U = n = None
    if args.config:
        cfg = _config(args)
        U, n = cfg.U, cfg.n
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = [verify.run_suite(name, args.trials, seed, U, n) for name in names]
    ok = all(r.ok for r in reports)
    out = {"seed": seed, "ok": ok, "suites": [r.as_dict() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"{r.name}: {'PASS' if r.ok else 'FAIL'} ({r.checked} checks, {len(r.violations)} violations)")
        for v in r.violations[:5]:
            lines.append("  " + json.dumps(v))
    return Outcome(out, code=0 if ok else 1, text="\n".join(lines))


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with U, offsets and tetrads")
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="halfspace-lab", description="Exact tools for deformed hyperplane arrangements and tetrad polyhedra.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("circuits", parents=[common], help="circuits of the rows of U")
    d = sub.add_parser("derived", parents=[common], help="derived arrangement in offset space")
    d.add_argument("--faces", action="store_true", help="also list its open faces")

    lo = sub.add_parser("locate", parents=[common], help="open derived face of an offset")
    lo.add_argument("--a")

    kinds = ("translate", "cone", "lift")
    for name, helptext in (("faces", "faces of a deformation"), ("signs", "sign set of a deformation")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--a")
        s.add_argument("--kind", choices=kinds, default="translate")

    po = sub.add_parser("poly", parents=[common], help="tetrad polyhedra")
    po.add_argument("op", choices=("feas", "bounded", "faces", "normalfan"))
    po.add_argument("--tetrad")
    po.add_argument("--tetrad2")
    po.add_argument("--a")
    po.add_argument("--b")
    po.add_argument("--I")
    po.add_argument("--J")
    po.add_argument("--K")

    eq = sub.add_parser("equiv", parents=[common], help="equivalence of two deformations")
    eq.add_argument("relation", choices=("sign", "comb", "semilattice", "normal"))
    eq.add_argument("--a")
    eq.add_argument("--b")
    eq.add_argument("--kind", choices=kinds, default="translate")
    eq.add_argument("--allow-multi", action="store_true")

    de = sub.add_parser("deform", parents=[common], help="translation, coning, lift, face counts")
    de.add_argument("kind_pos", nargs="?", choices=kinds + ("counts",))
    de.add_argument("--kind", choices=kinds)
    de.add_argument("--a")
    de.add_argument("--report", choices=("counts",))

    om = sub.add_parser("om", parents=[common], help="covector systems")
    om.add_argument("op", choices=("check", "affine", "equiv"))
    om.add_argument("--covectors", help="JSON list of sign strings (or {\"m\":..,\"covectors\":[..]})")
    om.add_argument("--covectors2")
    om.add_argument("--config2", help="config for the second system of om equiv")
    om.add_argument("--a")
    om.add_argument("--b")
    om.add_argument("--kind", choices=kinds, default="cone")
    om.add_argument("--g", type=int, help="1-based element")
    om.add_argument("--up-to-symmetry", action="store_true")
    om.add_argument("--relabel-only", action="store_true")
    om.add_argument("--all-witnesses", action="store_true", help="list every (perm, S) instead of the first")

    op = sub.add_parser("operators", parents=[common], help="Sign and Face operators")
    op.add_argument("op", choices=("fixpoint",))
    op.add_argument("--faces", nargs="+", help="derived sign vectors, e.g. +0+,+-+")
    op.add_argument("--all", action="store_true")
    op.add_argument("--kind", choices=kinds, default="translate")

    ve = sub.add_parser("verify", parents=[common], help=f"seeded property suites ({SEED_ENV} overrides --seed)")
    ve.add_argument("suite", choices=tuple(verify.SUITES) + ("all",))
    ve.add_argument("--trials", type=int)
    ve.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {
    "circuits": cmd_circuits,
    "derived": cmd_derived,
    "locate": cmd_locate,
    "faces": cmd_faces,
    "signs": cmd_signs,
    "poly": cmd_poly,
    "equiv": cmd_equiv,
    "deform": cmd_deform,
    "om": cmd_om,
    "operators": cmd_operators,
    "verify": cmd_verify,
}


def _default(o):
    if isinstance(o, float) and math.isinf(o):
        return "inf"
    raise TypeError(f"cannot encode {type(o).__name__}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = COMMANDS[args.command](args)
    except (UsageError, HalfspaceError, OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.format == "text" and outcome.text is not None:
        print(outcome.text, file=stdout)
    else:
        print(json.dumps(outcome.payload, indent=2, default=_default), file=stdout)
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
