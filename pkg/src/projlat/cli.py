"""Command line front end.

Subcommands:

  validate         law-check a groupoid document or an algebra
  projections      enumerate a projection family and verify its orthogonality
  lattice          order analytics under the mult or inclusion order
  copyables        copyable enumeration against connected components (rel only)
  tensor           compose two algebras and check the product structure
  counterexamples  self-contained bundles whose claims are re-verified on the spot

Inputs are either paths to JSON documents or builtin fixture names; a path
that does not exist falls back to the builtin named by its basename, so
"fixtures/klein4" and "klein4" both work without any files on disk.

Exit codes: 0 when every law and claim checked out, 1 when a law or claim
failed (resource caps included), 2 for usage and parse errors.
"""

import argparse
import os
import re
import sys

import numpy as np

from .backend import DEFAULT_TOL, FHILB, REL, Morphism, Tolerance, unit_object
from .cstar import (
    basis_algebra,
    direct_sum,
    is_matrix_projection,
    pants_algebra,
    point_from_matrix,
    random_projection,
    subspace_join,
    subspace_meet,
    zero_one_points,
)
from .errors import BackendMismatch, LawViolation, ParseError, ResourceLimit
from .frobenius import (
    FrobeniusAlgebra,
    Point,
    check_axioms,
    is_commutative,
    is_projection,
)
from .groupoid import (
    Groupoid,
    canonical_subset_name,
    copyables_report,
    cyclic,
    dihedral,
    disjoint_union,
    enumerate_subgroupoids,
    groupoid_violations,
    interval,
    klein4,
    product,
    quaternion8,
    subgroupoid_points,
    symmetric3,
    to_algebra,
    validate,
)
from .order import (
    build_poset,
    check_orthogonality_axioms,
    commute_glb_equivalence,
    compare_orders,
    hasse_edges,
    inclusion_poset,
    lattice_report,
    to_dot,
)
from .serialize import (
    CliReport,
    algebra_from_doc,
    detect_document,
    dump_json,
    load_json,
    matrix_to_doc,
)
from .tensoralg import bi_order_check, tensor_algebras

# Upper bound on points tensored per side before bi-order checks are skipped;
# interchange cost is quadratic in the pair count.
BI_ORDER_PAIR_CAP = 64

_SAMPLES_PER_RANK = 20


# -- input resolution -------------------------------------------------------

_BROKEN_INVERSE_DOC = {
    "objects": ["x"],
    "morphisms": [
        {"name": "e", "dom": "x", "cod": "x"},
        {"name": "a", "dom": "x", "cod": "x"},
    ],
    "compose": [
        ["e", "e", "e"],
        ["e", "a", "a"],
        ["a", "e", "a"],
        ["a", "a", "a"],
    ],
    "identities": {"x": "e"},
    "inverses": {"e": "e", "a": "a"},
}

_FIXED_BUILTINS = {
    "klein4": klein4,
    "interval": interval,
    "symmetric3": symmetric3,
    "quaternion8": quaternion8,
    "z2xz4": lambda: product(cyclic(2), cyclic(4)),
    "two-intervals": lambda: disjoint_union(interval(), interval()),
    "broken-inverse": lambda: dict(_BROKEN_INVERSE_DOC),
}

_FAMILY_BUILTINS = (
    (re.compile(r"^cyclic(\d+)$"), cyclic, 1, 16),
    (re.compile(r"^dihedral(\d+)$"), dihedral, 3, 12),
    (re.compile(r"^pants(\d+)$"), pants_algebra, 1, 6),
    (re.compile(r"^basis(\d+)$"), basis_algebra, 1, 10),
)


def builtin_names() -> list[str]:
    """Fixed builtin fixture names plus the parameterized family patterns."""
    return sorted(_FIXED_BUILTINS) + ["cyclicN", "dihedralN", "pantsN", "basisN"]


def _builtin(name: str):
    maker = _FIXED_BUILTINS.get(name)
    if maker is not None:
        return maker()
    for pattern, make, lo, hi in _FAMILY_BUILTINS:
        m = pattern.match(name)
        if m:
            n = int(m.group(1))
            if not lo <= n <= hi:
                raise ParseError(
                    f"builtin {name!r} out of range; supported {pattern.pattern} "
                    f"with {lo} <= N <= {hi}"
                )
            return make(n)
    return None


def _resolve_raw(spec: str):
    """A (display name, payload) pair; payload is a dict document, a
    Groupoid, or a FrobeniusAlgebra, not yet law-checked."""
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            doc = load_json(fh.read())
        kind = detect_document(doc)
        if kind == "groupoid":
            return spec, doc
        if kind == "algebra":
            return spec, algebra_from_doc(doc)
        raise ParseError(f"input {spec!r} is a {kind} document, need groupoid or algebra")
    name = os.path.basename(spec)
    payload = _builtin(name)
    if payload is None:
        raise ParseError(
            f"no such file or builtin fixture: {spec!r} "
            f"(builtins: {', '.join(builtin_names())})"
        )
    return name, payload


def _checked(raw) -> tuple:
    """Law-check a raw payload into (groupoid or None, algebra)."""
    if isinstance(raw, dict):
        raw = validate(raw)
    if isinstance(raw, Groupoid):
        return raw, to_algebra(raw)
    return None, raw


# -- output rendering -------------------------------------------------------


def _scalar(v) -> str:
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if v is None:
        return "-"
    if isinstance(v, float):
        return format(v, ".6g")
    return str(v)


def _scalar_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _scalar_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            elif _scalar_list(v) and v:
                lines.append(f"{pad}{k}: [{', '.join(_scalar(x) for x in v)}]")
            elif isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}: (none)")
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _emit(command: str, data: dict, args) -> None:
    doc = CliReport(command, data).to_dict()
    if args.format == "structured":
        sys.stdout.write(dump_json(doc))
    else:
        sys.stdout.write("\n".join(_render(doc)) + "\n")


def _require_text_or_structured(args) -> None:
    if args.format == "dot":
        raise ParseError("dot output is only available for the lattice subcommand")


# -- projection families ----------------------------------------------------


def _rel_scan_points(alg: FrobeniusAlgebra, tol: Tolerance, max_enum: int) -> list[Point]:
    n = alg.carrier.size
    if 2**n > max_enum:
        raise ResourceLimit(f"subset scan needs {2**n} candidates, cap is {max_enum}")
    labels = alg.carrier.labels
    points = []
    for mask in range(2**n):
        pairs = frozenset((0, i) for i in range(n) if mask >> i & 1)
        if labels is not None and len(labels) == n:
            name = canonical_subset_name(labels[i] for i in range(n) if mask >> i & 1)
        else:
            name = f"s{mask:0{n}b}"
        p = Point(alg, Morphism(unit_object(REL), alg.carrier, pairs), name)
        if is_projection(p, tol):
            points.append(p)
    return points


def _fhilb_scan_points(alg: FrobeniusAlgebra, tol: Tolerance, max_enum: int) -> list[Point]:
    n = alg.carrier.size
    if 2**n > max_enum:
        raise ResourceLimit(f"0/1 scan needs {2**n} candidates, cap is {max_enum}")
    return [p for p in zero_one_points(alg) if is_projection(p, tol)]


def _family(g, alg: FrobeniusAlgebra, tol: Tolerance, max_enum: int) -> list[Point]:
    if g is not None:
        subs = enumerate_subgroupoids(g, max_closed=max_enum)
        return subgroupoid_points(alg, subs)
    if alg.backend == REL:
        return _rel_scan_points(alg, tol, max_enum)
    return _fhilb_scan_points(alg, tol, max_enum)


def _sample_matrix_projections(alg: FrobeniusAlgebra, tol: Tolerance, seed: int) -> dict:
    """Seeded random projections checked through the vectorized embedding."""
    d = alg.carrier.size
    n = int(round(d**0.5))
    if n * n != d:
        return {"sampled": 0, "skipped": "carrier is not a full matrix block"}
    sampled = 0
    agreements = 0
    for k in range(_SAMPLES_PER_RANK):
        for rank in range(n + 1):
            mat = random_projection(n, rank, seed + k * (n + 1) + rank)
            ok_matrix = is_matrix_projection(mat, tol)
            ok_point = is_projection(point_from_matrix(alg, mat), tol)
            sampled += 1
            if ok_matrix and ok_point:
                agreements += 1
    return {"sampled": sampled, "agreements": agreements, "all_agree": agreements == sampled}


# -- subcommands ------------------------------------------------------------


def cmd_validate(args) -> int:
    _require_text_or_structured(args)
    tol = Tolerance(args.tolerance)
    name, raw = _resolve_raw(args.input)
    if isinstance(raw, Groupoid):
        raw = raw.to_doc()
    if isinstance(raw, dict):
        backend = REL
        violations = groupoid_violations(raw)
        data = {
            "input": name,
            "target": "groupoid",
            "backend": backend,
            "passed": not violations,
            "violations": [v.to_dict() for v in violations],
        }
        code = 0 if not violations else 1
    else:
        backend = raw.backend
        rep = check_axioms(raw, tol)
        data = {
            "input": name,
            "target": "algebra",
            "backend": backend,
            "passed": rep.passed,
            "axioms": rep.to_dict(),
        }
        code = 0 if rep.passed else 1
    if args.backend is not None and args.backend != backend:
        raise ParseError(f"input {name!r} lives on {backend}, not {args.backend}")
    _emit("validate", data, args)
    return code


def cmd_projections(args) -> int:
    _require_text_or_structured(args)
    tol = Tolerance(args.tolerance)
    name, raw = _resolve_raw(args.input)
    g, alg = _checked(raw)
    points = _family(g, alg, tol, args.max_enum)
    poset = build_poset(alg, points, tol)
    orth = check_orthogonality_axioms(poset)
    data = {
        "input": name,
        "backend": alg.backend,
        "carrier": alg.carrier.size,
        "count": poset.n,
        "elements": sorted(poset.names),
        "orthogonality": orth.to_dict(),
    }
    if args.seed is not None and alg.backend == FHILB:
        data["sampling"] = _sample_matrix_projections(alg, tol, args.seed)
    _emit("projections", data, args)
    ok = orth.passed and data.get("sampling", {}).get("all_agree", True)
    return 0 if ok else 1


def cmd_lattice(args) -> int:
    tol = Tolerance(args.tolerance)
    name, raw = _resolve_raw(args.input)
    g, alg = _checked(raw)
    if args.order == "inclusion":
        if g is None:
            raise ParseError("the inclusion order needs a groupoid input")
        subs = enumerate_subgroupoids(g, max_closed=args.max_enum)
        poset = inclusion_poset(alg, subs, tol)
    else:
        poset = build_poset(alg, _family(g, alg, tol, args.max_enum), tol)
    if args.format == "dot":
        sys.stdout.write(to_dot(poset, title=f"{os.path.basename(name)} {args.order}"))
        return 0
    rep = lattice_report(poset)
    data = {
        "input": name,
        "order": args.order,
        "elements": poset.n,
        "lattice": rep.to_dict(),
        "hasse": [list(e) for e in hasse_edges(poset)],
    }
    code = 0
    if args.order == "mult":
        equiv = commute_glb_equivalence(alg, poset, tol)
        data["equivalence"] = equiv.to_dict()
        if not equiv.consistent:
            code = 1
    _emit("lattice", data, args)
    return code


def cmd_copyables(args) -> int:
    _require_text_or_structured(args)
    name, raw = _resolve_raw(args.input)
    g, alg = _checked(raw)
    if alg.backend != REL:
        raise ParseError("copyable enumeration is defined on the rel backend only")
    rep = copyables_report(alg)
    data = {"input": name, "report": rep.to_dict()}
    _emit("copyables", data, args)
    return 0 if rep.lemma_holds else 1


def cmd_tensor(args) -> int:
    _require_text_or_structured(args)
    tol = Tolerance(args.tolerance)
    name_a, raw_a = _resolve_raw(args.left)
    name_b, raw_b = _resolve_raw(args.right)
    ga, alga = _checked(raw_a)
    gb, algb = _checked(raw_b)
    ta = tensor_algebras(alga, algb, tol)
    data = {
        "left": name_a,
        "right": name_b,
        "backend": ta.algebra.backend,
        "carrier": ta.algebra.carrier.size,
        "axioms": ta.axioms.to_dict(),
    }
    ok = ta.axioms.passed
    fam_a = _family(ga, alga, tol, args.max_enum)
    fam_b = _family(gb, algb, tol, args.max_enum)
    if len(fam_a) * len(fam_b) <= BI_ORDER_PAIR_CAP:
        bi = bi_order_check(ta, fam_a, fam_b, tol)
        data["bi_order"] = bi.to_dict()
        ok = ok and bi.passed
    else:
        data["bi_order"] = {
            "skipped": f"{len(fam_a)}x{len(fam_b)} pairs exceed cap {BI_ORDER_PAIR_CAP}"
        }
    _emit("tensor", data, args)
    return 0 if ok else 1


# -- counterexample bundles -------------------------------------------------


def _bundle_klein4(tol: Tolerance) -> tuple[dict, bool]:
    g = klein4()
    alg = to_algebra(g)
    commutative = is_commutative(alg, tol)
    subs = enumerate_subgroupoids(g)
    rep = lattice_report(inclusion_poset(alg, subs, tol))
    a, b, c = rep.distributive_witness
    lhs = rep.meet_table[(a, rep.join_table[(b, c)])]
    rhs = rep.join_table[(rep.meet_table[(a, b)], rep.meet_table[(a, c)])]
    witness_ok = lhs == a and lhs != rhs
    ok = (
        commutative
        and len(subs) == 6
        and rep.distributive is False
        and rep.modular is True
        and witness_ok
    )
    data = {
        "claim": "a commutative rel algebra with a non-distributive projection lattice",
        "groupoid": "klein4",
        "order": "inclusion",
        "commutative": commutative,
        "subgroupoid_count": len(subs),
        "distributive": rep.distributive,
        "modular": rep.modular,
        "witness": {
            "elements": [a, b, c],
            "meet_with_join": lhs,
            "join_of_meets": rhs,
        },
        "verified": ok,
    }
    return data, ok


def _bundle_interval(tol: Tolerance) -> tuple[dict, bool]:
    g = interval()
    alg = to_algebra(g)
    commutative = is_commutative(alg, tol)
    fwd = g.compose("f", "f_inv")
    back = g.compose("f_inv", "f")
    subs = enumerate_subgroupoids(g)
    inc = inclusion_poset(alg, subs, tol)
    inc_rep = lattice_report(inc)
    mult = build_poset(alg, subgroupoid_points(alg, subs), tol)
    mult_rep = lattice_report(mult)
    cmp = compare_orders(mult, inc)
    ok = (
        not commutative
        and fwd != back
        and len(subs) == 5
        and inc_rep.distributive is True
        and mult_rep.distributive is False
        and mult_rep.modular is True
        and not cmp.equal
        and not cmp.dual
    )
    data = {
        "claim": "a noncommutative groupoid algebra where mult and inclusion orders split",
        "groupoid": "interval",
        "commutative": commutative,
        "noncommuting_witness": {
            "pair": ["f", "f_inv"],
            "f_after_f_inv": fwd,
            "f_inv_after_f": back,
        },
        "subgroupoid_count": len(subs),
        "inclusion": {"distributive": inc_rep.distributive, "modular": inc_rep.modular},
        "mult": {"distributive": mult_rep.distributive, "modular": mult_rep.modular},
        "order_comparison": cmp.to_dict(),
        "verified": ok,
    }
    return data, ok


def _bundle_fhilb(tol: Tolerance) -> tuple[dict, bool]:
    a = np.array([[1, 0], [0, 0]], dtype=np.complex128)
    b = np.array([[0, 0], [0, 1]], dtype=np.complex128)
    c = np.full((2, 2), 0.5, dtype=np.complex128)
    lhs = subspace_meet(a, subspace_join(b, c, tol), tol)
    rhs = subspace_join(subspace_meet(a, b, tol), subspace_meet(a, c, tol), tol)
    dev_lhs = float(np.max(np.abs(lhs - a)))
    dev_rhs = float(np.max(np.abs(rhs)))
    ok = dev_lhs <= tol.epsilon and dev_rhs <= tol.epsilon
    data = {
        "claim": "three lines in the 2x2 matrix backend break distributivity",
        "projections": {
            "a": matrix_to_doc(a),
            "b": matrix_to_doc(b),
            "c": matrix_to_doc(c),
        },
        "meet_with_join": matrix_to_doc(lhs),
        "join_of_meets": matrix_to_doc(rhs),
        "deviation_from_a": dev_lhs,
        "deviation_from_zero": dev_rhs,
        "verified": ok,
    }
    return data, ok


def _bundle_boolean(tol: Tolerance) -> tuple[dict, bool]:
    alg = basis_algebra(3)
    points = [p for p in zero_one_points(alg) if is_projection(p, tol)]
    poset = build_poset(alg, points, tol)
    rep = lattice_report(poset)
    masks = {p.name: k for k, p in enumerate(points)}
    bit_ok = len(points) == 8
    for na, ia in masks.items():
        for nb, ib in masks.items():
            want_meet = f"b{ia & ib:03b}"
            want_join = f"b{ia | ib:03b}"
            if rep.meet_table[(na, nb)] != want_meet or rep.join_table[(na, nb)] != want_join:
                bit_ok = False
    complement_ok = all(
        e.complement == f"b{~masks[e.element] & 7:03b}" for e in rep.probe.entries
    )
    ok = (
        bit_ok
        and rep.is_lattice
        and rep.distributive is True
        and rep.probe.applicable
        and rep.probe.all_pass
        and complement_ok
    )
    data = {
        "claim": "the rank-3 basis algebra carries the Boolean cube with complements",
        "algebra": "basis3",
        "projection_count": len(points),
        "distributive": rep.distributive,
        "modular": rep.modular,
        "meets_are_bitwise_and": bit_ok,
        "joins_are_bitwise_or": bit_ok,
        "complements_are_bitwise_not": complement_ok,
        "probe": rep.probe.to_dict(),
        "verified": ok,
    }
    return data, ok


_BUNDLES = {
    "klein4-nondistributive": _bundle_klein4,
    "interval-noncommutative": _bundle_interval,
    "fhilb-nondistributive": _bundle_fhilb,
    "boolean-basis": _bundle_boolean,
}


def cmd_counterexamples(args) -> int:
    _require_text_or_structured(args)
    tol = Tolerance(args.tolerance)
    names = list(_BUNDLES) if args.bundle == "all" else [args.bundle]
    bundles = {}
    all_ok = True
    for nm in names:
        data, ok = _BUNDLES[nm](tol)
        bundles[nm] = data
        all_ok = all_ok and ok
    _emit("counterexamples", {"bundles": bundles, "verified": all_ok}, args)
    return 0 if all_ok else 1


# -- argument plumbing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projlat",
        description="Projection order analytics for groupoid and matrix algebras.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tolerance", type=float, default=DEFAULT_TOL.epsilon, help="numeric tolerance"
    )
    common.add_argument(
        "--format",
        choices=["text", "structured", "dot"],
        default="text",
        help="output format (dot applies to lattice only)",
    )
    common.add_argument(
        "--max-enum",
        dest="max_enum",
        type=int,
        default=1_000_000,
        help="cap on enumerated candidates before giving up",
    )
    common.add_argument("--seed", type=int, default=None, help="seed for sampling checks")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="law-check one input")
    p.add_argument("input", help="path to a JSON document, or a builtin fixture name")
    p.add_argument(
        "--backend",
        choices=[REL, FHILB],
        default=None,
        help="assert the input lives on this backend",
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "projections", parents=[common], help="enumerate the projection family"
    )
    p.add_argument("input")
    p.set_defaults(func=cmd_projections)

    p = sub.add_parser("lattice", parents=[common], help="order and lattice analytics")
    p.add_argument("input")
    p.add_argument(
        "--order",
        choices=["mult", "inclusion"],
        required=True,
        help="which order to analyze",
    )
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser(
        "copyables", parents=[common], help="copyables versus connected components"
    )
    p.add_argument("input")
    p.set_defaults(func=cmd_copyables)

    p = sub.add_parser("tensor", parents=[common], help="compose two algebras")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser(
        "counterexamples", parents=[common], help="verified counterexample bundles"
    )
    p.add_argument("bundle", choices=sorted(_BUNDLES) + ["all"])
    p.set_defaults(func=cmd_counterexamples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BackendMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LawViolation as exc:
        print(f"law violation: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v.law}: {v.witness}", file=sys.stderr)
        return 1
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
