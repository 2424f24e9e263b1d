"""Finite groupoids, their relational algebras, and subgroupoid enumeration.

A groupoid document lists objects, morphisms with dom/cod, and a composition
table [[f, g, h], ...] meaning f after g equals h (defined exactly when
dom f = cod g). Identities and inverses are inferred and validated, or
declared and cross-checked; every law failure is reported with a witness.

to_algebra turns a groupoid into a symmetric dagger Frobenius algebra on the
rel backend: the carrier is the morphism set, multiplication relates the
pair (f, g) to f after g on composable pairs, and the unit relates the
monoidal point to every identity. Projections of that algebra are exactly
the subgroupoids, which enumerate_subgroupoids lists with Ganter-style
Next-Closure over the subgroupoid closure operator (brute-force subset scan
cross-checks small carriers).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .backend import (
    REL,
    Morphism,
    ObjectRef,
    rel_morphism,
    rel_object,
    tensor_objects,
    unit_object,
)
from .errors import (
    BackendMismatch,
    LawViolation,
    ParseError,
    ResourceLimit,
    Violation,
)
from .frobenius import FrobeniusAlgebra, Point

MAX_CARRIER = 64
MAX_CLOSED_SETS = 1_000_000
BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class Mor:
    name: str
    dom: str
    cod: str


class Groupoid:
    """A validated finite groupoid. Construct via validate() or a fixture."""

    def __init__(
        self,
        objects: tuple[str, ...],
        morphisms: tuple[Mor, ...],
        compose_table: dict[tuple[str, str], str],
        identities: dict[str, str],
        inverses: dict[str, str],
    ):
        self.objects = objects
        self.morphisms = morphisms
        self.compose_table = compose_table
        self.identities = identities
        self.inverses = inverses
        self.index = {m.name: i for i, m in enumerate(morphisms)}
        self._by_name = {m.name: m for m in morphisms}

    def mor(self, name: str) -> Mor:
        return self._by_name[name]

    def morphism_names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.morphisms)

    def composable(self, f: str, g: str) -> bool:
        return self._by_name[f].dom == self._by_name[g].cod

    def compose(self, f: str, g: str) -> str:
        """f after g."""
        try:
            return self.compose_table[(f, g)]
        except KeyError:
            raise ParseError(f"morphisms {f!r} and {g!r} are not composable") from None

    @property
    def is_group(self) -> bool:
        return len(self.objects) == 1

    def to_doc(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [
                {"name": m.name, "dom": m.dom, "cod": m.cod} for m in self.morphisms
            ],
            "compose": sorted([f, g, h] for (f, g), h in self.compose_table.items()),
            "identities": dict(sorted(self.identities.items())),
            "inverses": dict(sorted(self.inverses.items())),
        }

    def __repr__(self):
        return f"Groupoid({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


# -- document validation ----------------------------------------------------


def _parse_structure(doc: dict) -> tuple[tuple[str, ...], tuple[Mor, ...], dict]:
    if not isinstance(doc, dict):
        raise ParseError("groupoid document must be a mapping")
    for key in ("objects", "morphisms", "compose"):
        if key not in doc:
            raise ParseError(f"groupoid document missing field {key!r}")
    objects = tuple(str(x) for x in doc["objects"])
    if len(set(objects)) != len(objects):
        raise ParseError("duplicate object names")
    morphisms = []
    for entry in doc["morphisms"]:
        try:
            m = Mor(str(entry["name"]), str(entry["dom"]), str(entry["cod"]))
        except (TypeError, KeyError) as exc:
            raise ParseError(f"malformed morphism entry {entry!r}") from exc
        if m.dom not in objects or m.cod not in objects:
            raise ParseError(f"morphism {m.name!r} references unknown object")
        morphisms.append(m)
    names = [m.name for m in morphisms]
    if len(set(names)) != len(names):
        raise ParseError("duplicate morphism names")
    table = {}
    for entry in doc["compose"]:
        if len(entry) != 3:
            raise ParseError(f"compose entry {entry!r} is not a triple")
        f, g, h = (str(x) for x in entry)
        for nm in (f, g, h):
            if nm not in set(names):
                raise ParseError(f"compose entry references unknown morphism {nm!r}")
        if (f, g) in table:
            raise ParseError(f"duplicate compose entry for ({f!r}, {g!r})")
        table[(f, g)] = h
    return objects, tuple(morphisms), table


def groupoid_violations(doc: dict) -> list[Violation]:
    """All law violations of a structurally well-formed document."""
    objects, morphisms, table = _parse_structure(doc)
    by_name = {m.name: m for m in morphisms}
    violations: list[Violation] = []

    for (f, g), h in table.items():
        mf, mg, mh = by_name[f], by_name[g], by_name[h]
        if mf.dom != mg.cod:
            violations.append(
                Violation("composability", (f, g), "table entry for a non-composable pair")
            )
        elif mh.dom != mg.dom or mh.cod != mf.cod:
            violations.append(
                Violation("composition-typing", (f, g, h), "composite has wrong dom/cod")
            )
    for mf in morphisms:
        for mg in morphisms:
            if mf.dom == mg.cod and (mf.name, mg.name) not in table:
                violations.append(
                    Violation("totality", (mf.name, mg.name), "composable pair missing from table")
                )
    if violations:
        return violations  # structural defects make the remaining laws unstatable

    for f in by_name:
        for g in by_name:
            if (f, g) not in table:
                continue
            for h in by_name:
                if (g, h) not in table:
                    continue
                lhs = table[(table[(f, g)], h)]
                rhs = table[(f, table[(g, h)])]
                if lhs != rhs:
                    violations.append(
                        Violation("associativity", (f, g, h, lhs, rhs), "(f.g).h != f.(g.h)")
                    )

    declared_ids = doc.get("identities")
    identities: dict[str, str] = {}
    for x in objects:
        if declared_ids is not None:
            if x not in declared_ids:
                raise ParseError(f"declared identities missing object {x!r}")
            candidates = [str(declared_ids[x])]
            if candidates[0] not in by_name:
                raise ParseError(f"declared identity {candidates[0]!r} unknown")
        else:
            candidates = [
                m.name for m in morphisms if m.dom == x and m.cod == x
            ]
        found = None
        for e in candidates:
            me = by_name[e]
            if me.dom != x or me.cod != x:
                continue
            ok = all(
                table.get((m.name, e)) == m.name for m in morphisms if m.dom == x
            ) and all(
                table.get((e, m.name)) == m.name for m in morphisms if m.cod == x
            )
            if ok:
                found = e
                break
        if found is None:
            violations.append(
                Violation("identity", (x,), "object has no two-sided identity")
            )
        else:
            identities[x] = found

    inverses: dict[str, str] = {}
    declared_inv = doc.get("inverses")
    for m in morphisms:
        idd = identities.get(m.dom)
        idc = identities.get(m.cod)
        if idd is None or idc is None:
            continue  # already reported as identity violations
        if declared_inv is not None:
            if m.name not in declared_inv:
                raise ParseError(f"declared inverses missing morphism {m.name!r}")
            candidates = [str(declared_inv[m.name])]
            if candidates[0] not in by_name:
                raise ParseError(f"declared inverse {candidates[0]!r} unknown")
        else:
            candidates = [
                g.name for g in morphisms if g.dom == m.cod and g.cod == m.dom
            ]
        found = None
        for g in candidates:
            if table.get((g, m.name)) == idd and table.get((m.name, g)) == idc:
                found = g
                break
        if found is None:
            violations.append(
                Violation("inverse", (m.name,), "morphism has no two-sided inverse")
            )
        else:
            inverses[m.name] = found
    return violations


def validate(doc: dict) -> Groupoid:
    """Parse and law-check a groupoid document; raise LawViolation on failure."""
    violations = groupoid_violations(doc)
    if violations:
        raise LawViolation(
            f"groupoid document breaks {len(violations)} law(s): "
            + ", ".join(sorted({v.law for v in violations})),
            violations,
        )
    objects, morphisms, table = _parse_structure(doc)
    by_name = {m.name: m for m in morphisms}
    identities = {}
    for x in objects:
        for m in morphisms:
            if m.dom == x and m.cod == x and all(
                table.get((q.name, m.name)) == q.name
                for q in morphisms
                if q.dom == x
            ):
                identities[x] = m.name
                break
    inverses = {}
    for m in morphisms:
        idd, idc = identities[m.dom], identities[m.cod]
        for g in morphisms:
            if table.get((g.name, m.name)) == idd and table.get((m.name, g.name)) == idc:
                inverses[m.name] = g.name
                break
    return Groupoid(objects, morphisms, table, identities, inverses)


# -- fixtures ---------------------------------------------------------------


def _group_doc(names: list[str], prod: Callable[[str, str], str]) -> dict:
    return {
        "objects": ["*"],
        "morphisms": [{"name": n, "dom": "*", "cod": "*"} for n in names],
        "compose": [[f, g, prod(f, g)] for f in names for g in names],
    }


def cyclic(n: int) -> Groupoid:
    """The cyclic group of order n as a one-object groupoid."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    names = [str(i) for i in range(n)]
    return validate(_group_doc(names, lambda a, b: str((int(a) + int(b)) % n)))


def klein4() -> Groupoid:
    """Z2 x Z2 with elements named as pairs, componentwise addition."""
    names = [f"({a},{b})" for a in (0, 1) for b in (0, 1)]

    def prod(x: str, y: str) -> str:
        a, b = int(x[1]), int(x[3])
        c, d = int(y[1]), int(y[3])
        return f"({a ^ c},{b ^ d})"

    return validate(_group_doc(names, prod))


def dihedral(n: int) -> Groupoid:
    """The dihedral group of order 2n: r{k} rotations and s{k} reflections."""
    if n < 1:
        raise ValueError("dihedral parameter must be >= 1")

    def decode(x: str) -> tuple[int, int]:
        return int(x[1:]), 0 if x[0] == "r" else 1

    def encode(k: int, e: int) -> str:
        return f"{'r' if e == 0 else 's'}{k % n}"

    def prod(x: str, y: str) -> str:
        k, e = decode(x)
        m, f = decode(y)
        if e == 0:
            return encode(k + m, f)
        return encode(k - m, 1 - f)

    names = [encode(k, e) for e in (0, 1) for k in range(n)]
    return validate(_group_doc(names, prod))


def quaternion8() -> Groupoid:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }

    def split(x: str) -> tuple[int, str]:
        return (-1, x[1:]) if x.startswith("-") else (1, x)

    def join(sign: int, sym: str) -> str:
        return sym if sign == 1 else f"-{sym}"

    def prod(x: str, y: str) -> str:
        sx, bx = split(x)
        sy, by = split(y)
        s, b = base[(bx, by)]
        return join(sx * sy * s, b)

    names = [join(s, b) for b in ("1", "i", "j", "k") for s in (1, -1)]
    return validate(_group_doc(names, prod))


def symmetric3() -> Groupoid:
    """S3 as permutations of {0,1,2}; composition applies the right factor first."""
    perms = {
        "e": (0, 1, 2),
        "(01)": (1, 0, 2),
        "(02)": (2, 1, 0),
        "(12)": (0, 2, 1),
        "(012)": (1, 2, 0),
        "(021)": (2, 0, 1),
    }
    names_by_perm = {v: k for k, v in perms.items()}

    def prod(x: str, y: str) -> str:
        f, g = perms[x], perms[y]
        return names_by_perm[tuple(f[g[i]] for i in range(3))]

    return validate(_group_doc(list(perms), prod))


def interval() -> Groupoid:
    """Two isomorphic objects x, y joined by f: x -> y and its inverse."""
    return validate(
        {
            "objects": ["x", "y"],
            "morphisms": [
                {"name": "id_x", "dom": "x", "cod": "x"},
                {"name": "id_y", "dom": "y", "cod": "y"},
                {"name": "f", "dom": "x", "cod": "y"},
                {"name": "f_inv", "dom": "y", "cod": "x"},
            ],
            "compose": [
                ["id_x", "id_x", "id_x"],
                ["id_y", "id_y", "id_y"],
                ["f", "id_x", "f"],
                ["id_y", "f", "f"],
                ["f_inv", "id_y", "f_inv"],
                ["id_x", "f_inv", "f_inv"],
                ["f_inv", "f", "id_x"],
                ["f", "f_inv", "id_y"],
            ],
        }
    )


def product(g: Groupoid, h: Groupoid) -> Groupoid:
    """Componentwise product; morphism order is row-major over (g, h) pairs."""
    doc = {
        "objects": [f"({x},{u})" for x in g.objects for u in h.objects],
        "morphisms": [
            {
                "name": f"({a.name},{b.name})",
                "dom": f"({a.dom},{b.dom})",
                "cod": f"({a.cod},{b.cod})",
            }
            for a in g.morphisms
            for b in h.morphisms
        ],
        "compose": [
            [f"({f1},{g1})", f"({f2},{g2})", f"({h1},{h2})"]
            for (f1, f2), h1 in g.compose_table.items()
            for (g1, g2), h2 in h.compose_table.items()
        ],
    }
    return validate(doc)


def disjoint_union(g: Groupoid, h: Groupoid) -> Groupoid:
    """Side-by-side union with L./R. prefixes to keep names apart."""
    doc = {
        "objects": [f"L.{x}" for x in g.objects] + [f"R.{x}" for x in h.objects],
        "morphisms": [
            {"name": f"L.{m.name}", "dom": f"L.{m.dom}", "cod": f"L.{m.cod}"}
            for m in g.morphisms
        ]
        + [
            {"name": f"R.{m.name}", "dom": f"R.{m.dom}", "cod": f"R.{m.cod}"}
            for m in h.morphisms
        ],
        "compose": [
            [f"L.{f}", f"L.{g2}", f"L.{h2}"] for (f, g2), h2 in g.compose_table.items()
        ]
        + [
            [f"R.{f}", f"R.{g2}", f"R.{h2}"] for (f, g2), h2 in h.compose_table.items()
        ],
    }
    return validate(doc)


# -- the relational algebra -------------------------------------------------


def to_algebra(g: Groupoid) -> FrobeniusAlgebra:
    """The groupoid algebra on rel; carrier labels are the morphism names."""
    n = len(g.morphisms)
    carrier = rel_object(n, g.morphism_names() if n else None)
    mult_pairs = {
        (g.index[f] * n + g.index[gg], g.index[h])
        for (f, gg), h in g.compose_table.items()
    }
    unit_pairs = {(0, g.index[e]) for e in g.identities.values()}
    return FrobeniusAlgebra(
        carrier,
        rel_morphism(tensor_objects(carrier, carrier), carrier, mult_pairs),
        rel_morphism(unit_object(REL), carrier, unit_pairs),
    )


def canonical_subset_name(names: Iterable[str]) -> str:
    return "{" + ",".join(sorted(names)) + "}"


def subset_point(alg: FrobeniusAlgebra, names: Iterable[str], name: str | None = None) -> Point:
    """The subset of the carrier, by label, as a rel point."""
    if alg.backend != REL:
        raise BackendMismatch("subset points only exist on the rel backend")
    labels = alg.carrier.labels
    if labels is None:
        raise ValueError("carrier has no labels to resolve subset names")
    wanted = set(names)
    unknown = wanted - set(labels)
    if unknown:
        raise ValueError(f"unknown carrier labels: {sorted(unknown)}")
    pairs = {(0, i) for i, lab in enumerate(labels) if lab in wanted}
    return Point(
        alg,
        rel_morphism(unit_object(REL), alg.carrier, pairs),
        name if name is not None else canonical_subset_name(wanted),
    )


def point_names(p: Point) -> frozenset[str]:
    labels = p.algebra.carrier.labels
    if labels is None:
        raise ValueError("carrier has no labels")
    return frozenset(labels[j] for _, j in p.morphism.payload)


@dataclass(frozen=True)
class Subgroupoid:
    """A subset of morphism names closed under identities, inverses, composition."""

    members: frozenset[str]

    @property
    def name(self) -> str:
        return canonical_subset_name(self.members)

    def __len__(self) -> int:
        return len(self.members)


# -- subgroupoid enumeration ------------------------------------------------


class _Closure:
    """Bit-level closure context over morphism indices."""

    def __init__(self, g: Groupoid):
        n = len(g.morphisms)
        self.n = n
        self.require = [0] * n  # identity and inverse bits pulled in by each element
        for m in g.morphisms:
            i = g.index[m.name]
            bits = 1 << g.index[g.identities[m.dom]]
            bits |= 1 << g.index[g.identities[m.cod]]
            bits |= 1 << g.index[g.inverses[m.name]]
            self.require[i] = bits
        self.by_left: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.by_right: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.products: list[tuple[int, int, int]] = []
        for (f, gg), h in g.compose_table.items():
            i, j, k = g.index[f], g.index[gg], g.index[h]
            self.products.append((i, j, k))
            self.by_left[i].append((j, k))
            self.by_right[j].append((i, k))

    def close(self, mask: int) -> int:
        queue = [i for i in range(self.n) if mask >> i & 1]
        closed = mask
        while queue:
            x = queue.pop()
            new = self.require[x] & ~closed
            for j, k in self.by_left[x]:
                if closed >> j & 1 and not closed >> k & 1:
                    new |= 1 << k
            for i, k in self.by_right[x]:
                if closed >> i & 1 and not closed >> k & 1:
                    new |= 1 << k
            while new:
                low = new & -new
                b = low.bit_length() - 1
                closed |= low
                queue.append(b)
                new &= new - 1
        return closed


def _lectic_key(mask: int, n: int) -> int:
    rev = 0
    for i in range(n):
        if mask >> i & 1:
            rev |= 1 << (n - 1 - i)
    return rev


def _next_closure_masks(ctx: _Closure, max_closed: int) -> Iterator[int]:
    """All closed sets in lectic order (Ganter's Next-Closure)."""
    n = ctx.n
    a = ctx.close(0)
    yield a
    count = 1
    while True:
        nxt = None
        for i in range(n - 1, -1, -1):
            if a >> i & 1:
                continue
            below = (1 << i) - 1
            b = ctx.close((a & below) | (1 << i))
            if (b & below) == (a & below):
                nxt = b
                break
        if nxt is None:
            return
        a = nxt
        count += 1
        if count > max_closed:
            raise ResourceLimit(f"more than {max_closed} closed sets")
        yield a


def _mask_to_subgroupoid(g: Groupoid, mask: int) -> Subgroupoid:
    return Subgroupoid(
        frozenset(m.name for i, m in enumerate(g.morphisms) if mask >> i & 1)
    )


def brute_force_subgroupoids(g: Groupoid) -> list[Subgroupoid]:
    """Independent oracle: scan every subset and test closure directly."""
    n = len(g.morphisms)
    if n > BRUTE_FORCE_LIMIT:
        raise ResourceLimit(f"brute force limited to {BRUTE_FORCE_LIMIT} morphisms")
    ctx = _Closure(g)
    out = []
    for mask in range(1 << n):
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest &= rest - 1
            if ctx.require[i] & ~mask:
                ok = False
                break
        if ok:
            for i, j, k in ctx.products:
                if mask >> i & 1 and mask >> j & 1 and not mask >> k & 1:
                    ok = False
                    break
        if ok:
            out.append(mask)
    out.sort(key=lambda m: _lectic_key(m, n))
    return [_mask_to_subgroupoid(g, m) for m in out]


def enumerate_subgroupoids(
    g: Groupoid,
    *,
    max_closed: int = MAX_CLOSED_SETS,
    max_carrier: int = MAX_CARRIER,
    cross_check: Optional[bool] = None,
) -> list[Subgroupoid]:
    """All subgroupoids, in lectic order, the empty one included.

    Uses Next-Closure over the subgroupoid closure operator; when the
    carrier is small (or cross_check is forced on) a brute-force subset scan
    must produce the identical list, otherwise the enumeration itself is
    broken and a LawViolation is raised.
    """
    n = len(g.morphisms)
    if n > max_carrier:
        raise ResourceLimit(f"carrier {n} exceeds cap {max_carrier}")
    ctx = _Closure(g)
    masks = list(_next_closure_masks(ctx, max_closed))
    subs = [_mask_to_subgroupoid(g, m) for m in masks]
    if cross_check is None:
        cross_check = n <= BRUTE_FORCE_LIMIT
    if cross_check:
        oracle = brute_force_subgroupoids(g)
        if [s.members for s in oracle] != [s.members for s in subs]:
            raise LawViolation(
                "Next-Closure enumeration disagrees with the subset scan",
                [Violation("enumeration", (len(subs), len(oracle)))],
            )
    return subs


def subgroupoid_points(alg: FrobeniusAlgebra, subs: Iterable[Subgroupoid]) -> list[Point]:
    return [subset_point(alg, s.members) for s in subs]


# -- components and copyables ----------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _component_name_sets(g: Groupoid) -> list[frozenset[str]]:
    uf = _UnionFind(len(g.objects))
    obj_index = {x: i for i, x in enumerate(g.objects)}
    for m in g.morphisms:
        uf.union(obj_index[m.dom], obj_index[m.cod])
    blocks: dict[int, set[str]] = {}
    for m in g.morphisms:
        blocks.setdefault(uf.find(obj_index[m.dom]), set()).add(m.name)
    ordered = sorted(blocks.items(), key=lambda kv: kv[0])
    return [frozenset(names) for _, names in ordered]


def connected_components(g: Groupoid) -> list[Point]:
    """Morphism blocks of the object-connectivity partition, as points."""
    alg = to_algebra(g)
    return [subset_point(alg, block) for block in _component_name_sets(g)]


def _algebra_products(alg: FrobeniusAlgebra) -> list[tuple[int, int, int]]:
    n = alg.carrier.size
    return [(pair // n, pair % n, k) for pair, k in alg.mult.payload]


def _algebra_components(alg: FrobeniusAlgebra) -> list[frozenset[int]]:
    n = alg.carrier.size
    uf = _UnionFind(n)
    for i, j, k in _algebra_products(alg):
        uf.union(i, j)
        uf.union(i, k)
    blocks: dict[int, set[int]] = {}
    for i in range(n):
        blocks.setdefault(uf.find(i), set()).add(i)
    return [frozenset(b) for _, b in sorted(blocks.items())]


def enumerate_copyables(
    alg: FrobeniusAlgebra, *, max_scan: int = BRUTE_FORCE_LIMIT
) -> list[Point]:
    """All rel points satisfying the copying equation, in lectic order.

    Carriers up to max_scan are scanned exhaustively. Above that only the
    cheap candidates (empty set, each connectivity block, their union) are
    tested pointwise, so the result is sound but not exhaustive.
    """
    if alg.backend != REL:
        raise BackendMismatch("copyable enumeration is a rel operation")
    n = alg.carrier.size
    products = _algebra_products(alg)
    comp_with = [0] * n  # j bits composable on the right of i
    for i, j, _ in products:
        comp_with[i] |= 1 << j

    def copyable(mask: int) -> bool:
        for i, j, k in products:
            inside = bool(mask >> i & 1 and mask >> j & 1)
            if bool(mask >> k & 1) != inside:
                # product membership must match pair membership both ways
                return False
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest &= rest - 1
            if mask & ~comp_with[i]:
                return False  # a pair of members is not composable
        return True

    if n <= max_scan:
        masks = [m for m in range(1 << n) if copyable(m)]
    else:
        candidates = {0}
        union = 0
        for block in _algebra_components(alg):
            bm = 0
            for i in block:
                bm |= 1 << i
            candidates.add(bm)
            union |= bm
        candidates.add(union)
        masks = [m for m in sorted(candidates) if copyable(m)]
    masks.sort(key=lambda m: _lectic_key(m, n))
    labels = alg.carrier.labels or tuple(str(i) for i in range(n))
    out = []
    for mask in masks:
        names = [labels[i] for i in range(n) if mask >> i & 1]
        out.append(subset_point(alg, names))
    return out


@dataclass(frozen=True)
class CopyablesReport:
    """Copyable enumeration cross-checked against connectivity blocks.

    lemma_holds records whether the copyables are exactly the blocks plus
    the empty set; a mismatch is a law violation surfaced to callers, with
    the offending subsets listed on both sides.
    """

    copyables: tuple[str, ...]
    components: tuple[str, ...]
    missing: tuple[str, ...]  # expected (blocks or empty set) but not copyable
    extra: tuple[str, ...]  # copyable but neither a block nor empty

    @property
    def lemma_holds(self) -> bool:
        return not self.missing and not self.extra

    def to_dict(self) -> dict:
        return {
            "kind": "copyables_report",
            "copyables": list(self.copyables),
            "components": list(self.components),
            "missing": list(self.missing),
            "extra": list(self.extra),
            "lemma_holds": self.lemma_holds,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CopyablesReport":
        return cls(
            tuple(doc["copyables"]),
            tuple(doc["components"]),
            tuple(doc["missing"]),
            tuple(doc["extra"]),
        )


def copyables_report(alg: FrobeniusAlgebra, *, max_scan: int = BRUTE_FORCE_LIMIT) -> CopyablesReport:
    labels = alg.carrier.labels or tuple(str(i) for i in range(alg.carrier.size))
    found = {frozenset(point_names(p)) for p in enumerate_copyables(alg, max_scan=max_scan)}
    expected = {frozenset(labels[i] for i in block) for block in _algebra_components(alg)}
    expected.add(frozenset())
    return CopyablesReport(
        copyables=tuple(sorted(canonical_subset_name(s) for s in found)),
        components=tuple(
            sorted(canonical_subset_name(s) for s in expected if s)
        ),
        missing=tuple(sorted(canonical_subset_name(s) for s in expected - found)),
        extra=tuple(sorted(canonical_subset_name(s) for s in found - expected)),
    )


# -- group predicates -------------------------------------------------------


def is_abelian(g: Groupoid) -> bool:
    """Every composable pair commutes, composability included."""
    for (f, gg), h in g.compose_table.items():
        if (gg, f) not in g.compose_table or g.compose_table[(gg, f)] != h:
            return False
    return True


def element_order(g: Groupoid, name: str) -> int:
    if not g.is_group:
        raise ValueError("element orders are defined for one-object groupoids")
    e = next(iter(g.identities.values()))
    k = 1
    acc = name
    while acc != e:
        acc = g.compose(name, acc)
        k += 1
        if k > len(g.morphisms):
            raise LawViolation("element order exceeds group order", [])
    return k


def is_cyclic_group(g: Groupoid) -> bool:
    """True iff some element's order equals the group order."""
    if not g.is_group:
        raise ValueError("cyclicity is a one-object (group) question")
    n = len(g.morphisms)
    return any(element_order(g, m.name) == n for m in g.morphisms)
