"""Skeletal G-crossed braided fusion categories and their coherence checks.

Conventions, in the splitting basis:

* F move: ``|(ab)_e c; d> = sum_f F^{abc}_d[e, f] |a(bc)_f; d>``.
* braiding ``c_{a,b}: a (x) b -> (p.b) (x) a`` with ``p = deg(a)`` acts on a
  vertex ``c -> a (x) b`` by the scalar ``R^{ab}_c``.
* the action functor of ``g`` sends the vertex ``c -> a (x) b`` to
  ``U_g(a, b; c)`` times the vertex ``g.c -> g.a (x) g.b``.
* the action is strict: ``(gh).a == g.(h.a)``.
"""
from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from pydantic import ValidationError

from . import linalg
from .algebra import Cyclotomic, FiniteGroup, group_parse, parse_scalar
from .errors import CategoryError, CyclotomicError, GroupError
from .schemas import AxiomReport, CategoryFile, CheckFailure, CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FBlock:
    """F^{abc}_d as a matrix with its row (e) and column (f) labels."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: linalg.Matrix
    inverse: linalg.Matrix


@dataclass(frozen=True, eq=False)
class GCategoryData:
    name: str
    group: FiniteGroup
    conductor: int
    labels: tuple[str, ...]
    unit: int
    deg: tuple[int, ...]
    dual: tuple[int, ...]
    act: tuple[tuple[int, ...], ...]
    fusion: dict[tuple[int, int, int], int]
    F: dict[tuple[int, int, int, int, int, int], Cyclotomic]
    R: dict[tuple[int, int, int], Cyclotomic]
    U: dict[tuple[int, int, int, int], Cyclotomic]
    theta: tuple[Cyclotomic, ...]
    description: str | None = None
    _cache: dict[Any, Any] = field(default_factory=dict, repr=False)

    # -- labels ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def simples(self) -> range:
        return range(len(self.labels))

    def index(self, label: str | int) -> int:
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.rank:
                return label
            raise CategoryError("unknown-label", f"label index {label} out of range")
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise CategoryError("unknown-label", f"unknown label {label!r}") from None

    def indices(self, labels: Iterable[str | int]) -> tuple[int, ...]:
        return tuple(self.index(a) for a in labels)

    def names(self, labels: Iterable[int]) -> list[str]:
        return [self.labels[a] for a in labels]

    def g_name(self, g: int) -> str:
        return self.group.name(g)

    # -- fusion ------------------------------------------------------------

    def N(self, a: int, b: int, c: int) -> int:
        return self.fusion.get((a, b, c), 0)

    def fuse(self, a: int, b: int) -> tuple[int, ...]:
        key = ("fuse", a, b)
        if key not in self._cache:
            self._cache[key] = tuple(c for c in self.simples if self.N(a, b, c))
        return self._cache[key]

    @property
    def multiplicity_free(self) -> bool:
        return all(m <= 1 for m in self.fusion.values())

    # -- scalars -----------------------------------------------------------

    def zero(self) -> Cyclotomic:
        return Cyclotomic.zero(self.conductor)

    def one(self) -> Cyclotomic:
        return Cyclotomic.one(self.conductor)

    def f(self, a: int, b: int, c: int, d: int, e: int, f: int) -> Cyclotomic:
        return self.F.get((a, b, c, d, e, f)) or self.zero()

    def fblock(self, a: int, b: int, c: int, d: int) -> FBlock:
        key = ("F", a, b, c, d)
        if key not in self._cache:
            rows = tuple(e for e in self.fuse(a, b) if self.N(e, c, d))
            cols = tuple(f for f in self.fuse(b, c) if self.N(a, f, d))
            m = linalg.from_rows([[self.f(a, b, c, d, e, f) for f in cols] for e in rows])
            if len(rows) != len(cols):
                raise CategoryError(
                    "fusion-associativity",
                    f"F^{{{self._n(a, b, c)}}}_{self.labels[d]} is {len(rows)}x{len(cols)}",
                )
            try:
                inv = linalg.inverse(m) if rows else m
            except CyclotomicError:
                raise CategoryError(
                    "F-invertible", f"F^{{{self._n(a, b, c)}}}_{self.labels[d]} is singular"
                ) from None
            self._cache[key] = FBlock(rows, cols, m, inv)
        return self._cache[key]

    def f_inv(self, a: int, b: int, c: int, d: int, f: int, e: int) -> Cyclotomic:
        """Entry [f, e] of (F^{abc}_d)^{-1}."""
        blk = self.fblock(a, b, c, d)
        if f not in blk.cols or e not in blk.rows:
            return self.zero()
        return blk.inverse[blk.cols.index(f), blk.rows.index(e)]

    def r(self, a: int, b: int, c: int) -> Cyclotomic:
        return self.R.get((a, b, c)) or self.zero()

    def u(self, g: int, a: int, b: int, c: int) -> Cyclotomic:
        return self.U.get((g, a, b, c)) or self.zero()

    def twist(self, a: int) -> Cyclotomic:
        return self.theta[a]

    def bending(self, a: int) -> Cyclotomic:
        """theta_a * R^{a* a}_1, the scalar closing a rotated cup."""
        return self.theta[a] * self.r(self.dual[a], a, self.unit)

    def act_on(self, g: int, labels: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.act[g][a] for a in labels)

    def _n(self, *labels: int) -> str:
        return ",".join(self.labels[a] for a in labels)

    def summary(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "conductor": self.conductor,
            "group_order": self.group.order,
            "label_count": self.rank,
            "labels": list(self.labels),
        }


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------


def _split_key(key: str, shape: tuple[int, ...]) -> list[list[str]]:
    parts = [p.strip() for p in key.split(";")]
    if len(parts) != len(shape):
        raise CategoryError("symbol-key", f"malformed symbol key {key!r}")
    out = []
    for part, n in zip(parts, shape):
        items = [s.strip() for s in part.split(",")]
        if len(items) != n or not all(items):
            raise CategoryError("symbol-key", f"malformed symbol key {key!r}")
        out.append(items)
    return out


def _scalar(value: Any, conductor: int, where: str) -> Cyclotomic:
    try:
        return_value = parse_scalar(value, conductor)
    except CyclotomicError as exc:
        raise CategoryError("scalar", f"{where}: {exc}") from None
    if return_value.is_zero():
        raise CategoryError("nonzero-symbol", f"{where} is zero")
    return return_value


def parse_category(data: dict[str, Any]) -> GCategoryData:
    """Validate a category document and build the skeletal data."""
    try:
        doc = CategoryFile.model_validate(data)
    except ValidationError as exc:
        raise CategoryError("schema", str(exc)) from None

    try:
        group = group_parse(doc.group)
    except GroupError as exc:
        raise CategoryError("group", str(exc)) from None
    try:
        Cyclotomic.one(doc.conductor)
    except CyclotomicError as exc:
        raise CategoryError("conductor", str(exc)) from None
    n = doc.conductor

    labels = tuple(spec.name for spec in doc.labels)
    if len(set(labels)) != len(labels):
        raise CategoryError("label-names", "label names must be distinct")

    def idx(name: str | int, what: str) -> int:
        try:
            return labels.index(str(name))
        except ValueError:
            raise CategoryError("unknown-label", f"{what} refers to unknown label {name!r}") from None

    def gidx(name: str | int, what: str) -> int:
        try:
            return group.index(name)
        except GroupError as exc:
            raise CategoryError("group-element", f"{what}: {exc}") from None

    deg = tuple(gidx(spec.degree, f"degree of {spec.name}") for spec in doc.labels)
    dual = tuple(idx(spec.dual, f"dual of {spec.name}") for spec in doc.labels)

    if doc.unit is not None:
        unit = idx(doc.unit, "unit")
    else:
        unit = labels.index("1") if "1" in labels else 0
    if deg[unit] != group.identity:
        raise CategoryError("unit-degree", f"unit {labels[unit]} is not in the trivial degree")

    for a in range(len(labels)):
        if dual[dual[a]] != a:
            raise CategoryError("dual-involution", f"({labels[a]}*)* != {labels[a]}")
        if deg[dual[a]] != group.inv(deg[a]):
            raise CategoryError(
                "dual-grading",
                f"deg({labels[dual[a]]}) must be deg({labels[a]})^-1",
            )

    fusion: dict[tuple[int, int, int], int] = {}
    for row in doc.fusion:
        a, b, c = (idx(x, "fusion") for x in row[:3])
        mult = int(row[3]) if len(row) == 4 else 1
        if mult < 0:
            raise CategoryError("fusion-multiplicity", f"negative multiplicity in {row}")
        if (a, b, c) in fusion:
            raise CategoryError("fusion-duplicate", f"fusion entry {row} given twice")
        if mult == 0:
            continue
        if group.mul(deg[a], deg[b]) != deg[c]:
            raise CategoryError(
                "fusion-grading",
                f"N_{{{labels[a]},{labels[b]}}}^{labels[c]} != 0 but deg(a)deg(b) != deg(c)",
            )
        fusion[(a, b, c)] = mult

    for a in range(len(labels)):
        for b in range(len(labels)):
            want = 1 if a == b else 0
            if fusion.get((unit, a, b), 0) != want or fusion.get((a, unit, b), 0) != want:
                raise CategoryError(
                    "unit-fusion", f"1 (x) {labels[a]} or {labels[a]} (x) 1 does not fuse to itself only"
                )
        if fusion.get((a, dual[a], unit), 0) != 1 or fusion.get((dual[a], a, unit), 0) != 1:
            raise CategoryError("dual-fusion", f"N_{{{labels[a]},{labels[a]}*}}^1 must be 1")

    act = _parse_action(doc, group, labels, deg, idx, gidx)

    has_symbols = bool(doc.F or doc.R or doc.U)
    if has_symbols and any(m > 1 for m in fusion.values()):
        raise CategoryError("multiplicity-free", "symbol data requires N in {0, 1}")

    def adm(a: int, b: int, c: int) -> bool:
        return fusion.get((a, b, c), 0) > 0

    F: dict[tuple[int, int, int, int, int, int], Cyclotomic] = {}
    for key, value in doc.F.items():
        (a, b, c), (d,), (e, f) = (
            [idx(x, f"F[{key}]") for x in part] for part in _split_key(key, (3, 1, 2))
        )
        if not (adm(a, b, e) and adm(e, c, d) and adm(b, c, f) and adm(a, f, d)):
            raise CategoryError("F-admissible", f"F[{key}] is given for an inadmissible channel")
        F[(a, b, c, d, e, f)] = _scalar(value, n, f"F[{key}]")

    R: dict[tuple[int, int, int], Cyclotomic] = {}
    for key, value in doc.R.items():
        (a, b), (c,) = ([idx(x, f"R[{key}]") for x in part] for part in _split_key(key, (2, 1)))
        if not adm(a, b, c):
            raise CategoryError("R-admissible", f"R[{key}] is given for an inadmissible channel")
        R[(a, b, c)] = _scalar(value, n, f"R[{key}]")

    U: dict[tuple[int, int, int, int], Cyclotomic] = {}
    for key, value in doc.U.items():
        (g,), rest = _split_key(key, (1, 3))
        gi = gidx(g, f"U[{key}]")
        a, b, c = (idx(x, f"U[{key}]") for x in rest)
        if not adm(a, b, c):
            raise CategoryError("U-admissible", f"U[{key}] is given for an inadmissible channel")
        U[(gi, a, b, c)] = _scalar(value, n, f"U[{key}]")

    one = Cyclotomic.one(n)
    # unspecified symbols default to 1; with multiplicities there are no scalar symbols
    multiplicity_free = all(m == 1 for m in fusion.values())
    for (a, b, c) in fusion if multiplicity_free else ():
        R.setdefault((a, b, c), one)
        for g in group.elements:
            U.setdefault((g, a, b, c), one)
    for a, b, c, d in itertools.product(range(len(labels)) if multiplicity_free else (), repeat=4):
        for e in range(len(labels)):
            if not (adm(a, b, e) and adm(e, c, d)):
                continue
            for f in range(len(labels)):
                if adm(b, c, f) and adm(a, f, d):
                    F.setdefault((a, b, c, d, e, f), one)

    theta_map: dict[int, Cyclotomic] = {}
    for key, value in doc.theta.items():
        theta_map[idx(key, "theta")] = _scalar(value, n, f"theta[{key}]")
    theta = tuple(theta_map.get(a, one) for a in range(len(labels)))
    if theta[unit] != 1:
        raise CategoryError("twist-unit", "theta_1 must be 1")

    cat = GCategoryData(
        name=doc.name,
        description=doc.description,
        group=group,
        conductor=n,
        labels=labels,
        unit=unit,
        deg=deg,
        dual=dual,
        act=act,
        fusion=fusion,
        F=F,
        R=R,
        U=U,
        theta=theta,
    )
    if multiplicity_free:
        for a, b, c, d in itertools.product(cat.simples, repeat=4):
            cat.fblock(a, b, c, d)
    logger.info(
        "loaded category %s: |G|=%d, %d labels, conductor %d",
        cat.name, group.order, cat.rank, n,
    )
    return cat


def _parse_action(doc, group, labels, deg, idx, gidx) -> tuple[tuple[int, ...], ...]:
    table = [[a for a in range(len(labels))] for _ in group.elements]
    for a, spec in enumerate(doc.labels):
        for g_name, target in spec.action.items():
            table[gidx(g_name, f"action of {spec.name}")][a] = idx(target, f"action of {spec.name}")
    act = tuple(tuple(row) for row in table)

    e = group.identity
    for a in range(len(labels)):
        if act[e][a] != a:
            raise CategoryError("action-unit", f"e.{labels[a]} != {labels[a]}")
    for g in group.elements:
        if sorted(act[g]) != list(range(len(labels))):
            raise CategoryError("action-bijective", f"{group.name(g)} does not permute the labels")
        for a in range(len(labels)):
            if deg[act[g][a]] != group.conj(g, deg[a]):
                raise CategoryError(
                    "action-grading",
                    f"deg({group.name(g)}.{labels[a]}) != {group.name(g)} deg({labels[a]}) {group.name(g)}^-1",
                )
    for g, h in itertools.product(group.elements, repeat=2):
        gh = group.mul(g, h)
        for a in range(len(labels)):
            if act[gh][a] != act[g][act[h][a]]:
                raise CategoryError(
                    "action-composition",
                    f"({group.name(g)}{group.name(h)}).{labels[a]} != "
                    f"{group.name(g)}.({group.name(h)}.{labels[a]})",
                )
    return act


def load_category(path: str | Path) -> GCategoryData:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return parse_category(data)


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


def fusion_dim(cat: GCategoryData, labels: Sequence[str | int]) -> int:
    """dim Hom(1, a_1 (x) ... (x) a_n) by iterated contraction of N."""
    idx = cat.indices(labels)
    vec = [0] * cat.rank
    vec[cat.unit] = 1
    for a in idx:
        nxt = [0] * cat.rank
        for b, mult in enumerate(vec):
            if mult:
                for c in cat.fuse(b, a):
                    nxt[c] += mult * cat.N(b, a, c)
        vec = nxt
    return vec[cat.unit]


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def _require_symbols(cat: GCategoryData) -> None:
    if not cat.multiplicity_free:
        raise CategoryError("multiplicity-free", "symbol checks need N in {0, 1}")


def pentagon_axiom(cat: GCategoryData) -> AxiomReport:
    _require_symbols(cat)
    L = cat.simples
    checked = 0
    failures: list[CheckFailure] = []
    for a, b, c, d in itertools.product(L, repeat=4):
        for f in cat.fuse(a, b):
            for g in cat.fuse(f, c):
                for e in cat.fuse(g, d):
                    for l in cat.fuse(c, d):
                        for k in cat.fuse(b, l):
                            if not cat.N(a, k, e):
                                continue
                            checked += 1
                            lhs = cat.f(f, c, d, e, g, l) * cat.f(a, b, l, e, f, k)
                            rhs = cat.zero()
                            for h in cat.fuse(b, c):
                                rhs = rhs + (
                                    cat.f(a, b, c, g, f, h)
                                    * cat.f(a, h, d, e, g, k)
                                    * cat.f(b, c, d, k, h, l)
                                )
                            if lhs != rhs:
                                failures.append(
                                    CheckFailure(
                                        witness=cat.names((a, b, c, d, e, f, g, k, l)),
                                        detail=f"lhs {lhs} != rhs {rhs}",
                                    )
                                )
    logger.debug("pentagon: %d instances, %d failures", checked, len(failures))
    return AxiomReport.build("pentagon", checked, failures)


def hexagon_axioms(cat: GCategoryData) -> list[AxiomReport]:
    """Both hexagons: braiding a past b (x) c, and a (x) b past c."""
    _require_symbols(cat)
    grp = cat.group
    L = cat.simples
    checked = [0, 0]
    failures: tuple[list[CheckFailure], list[CheckFailure]] = ([], [])
    for a, b, c, d in itertools.product(L, repeat=4):
        p, q = cat.deg[a], cat.deg[b]
        pb, pc = cat.act[p][b], cat.act[p][c]
        es = [e for e in cat.fuse(a, b) if cat.N(e, c, d)]
        fs = [f for f in cat.fuse(b, c) if cat.N(a, f, d)]

        # c_{a, b(x)c}
        gs = [g for g in cat.fuse(a, c) if cat.N(pb, g, d)]
        for e, g in itertools.product(es, gs):
            checked[0] += 1
            lhs = cat.zero()
            for f in fs:
                lhs = lhs + (
                    cat.f(a, b, c, d, e, f)
                    * cat.r(a, f, d)
                    * cat.u(p, b, c, f)
                    * cat.f(pb, pc, a, d, cat.act[p][f], g)
                )
            rhs = cat.r(a, b, e) * cat.f(pb, a, c, d, e, g) * cat.r(a, c, g)
            if lhs != rhs:
                failures[0].append(
                    CheckFailure(
                        witness=cat.names((a, b, c, d, e, g)),
                        detail=f"lhs {lhs} != rhs {rhs}",
                    )
                )

        # c_{a(x)b, c}
        qc = cat.act[q][c]
        rc = cat.act[grp.mul(p, q)][c]
        gs2 = [g for g in cat.fuse(a, qc) if cat.N(g, b, d)]
        for e, h in itertools.product(es, es):
            checked[1] += 1
            lhs = cat.zero()
            for f in fs:
                for g in gs2:
                    lhs = lhs + (
                        cat.f(a, b, c, d, e, f)
                        * cat.r(b, c, f)
                        * cat.f_inv(a, qc, b, d, f, g)
                        * cat.r(a, qc, g)
                        * cat.f(rc, a, b, d, g, h)
                    )
            rhs = cat.r(e, c, d) if e == h else cat.zero()
            if lhs != rhs:
                failures[1].append(
                    CheckFailure(
                        witness=cat.names((a, b, c, d, e, h)),
                        detail=f"lhs {lhs} != rhs {rhs}",
                    )
                )
    logger.debug("hexagon: %s instances, %d+%d failures", checked, *map(len, failures))
    return [
        AxiomReport.build("hexagon", checked[0], failures[0]),
        AxiomReport.build("hexagon_mirror", checked[1], failures[1]),
    ]


def check_pentagon(cat: GCategoryData) -> CheckReport:
    return CheckReport(subject=cat.name, axioms=[pentagon_axiom(cat)])


def check_hexagon(cat: GCategoryData) -> CheckReport:
    return CheckReport(
        subject=cat.name,
        interpretation_notes=[
            "hexagon_mirror checks the braiding of a (x) b past c, which is the hexagon "
            "for the inverse braiding read backwards",
        ],
        axioms=hexagon_axioms(cat),
    )


def g_coherence_axioms(cat: GCategoryData) -> list[AxiomReport]:
    grp = cat.group
    L = cat.simples
    G = grp.elements
    reports: list[AxiomReport] = []

    fails: list[CheckFailure] = []
    n = 0
    for g, h in itertools.product(G, repeat=2):
        for a in L:
            n += 1
            if cat.act[grp.mul(g, h)][a] != cat.act[g][cat.act[h][a]]:
                fails.append(CheckFailure(witness=[cat.g_name(g), cat.g_name(h), cat.labels[a]],
                                          detail="(gh).a != g.(h.a)"))
    reports.append(AxiomReport.build("action-composition", n, fails))

    fails, n = [], 0
    for g in G:
        for a, b, c in itertools.product(L, repeat=3):
            n += 1
            ga, gb, gc = cat.act_on(g, (a, b, c))
            if cat.N(ga, gb, gc) != cat.N(a, b, c):
                fails.append(CheckFailure(witness=[cat.g_name(g), *cat.names((a, b, c))],
                                          detail="N_{ga,gb}^{gc} != N_{ab}^c"))
    reports.append(AxiomReport.build("fusion-invariance", n, fails))

    fails = [
        CheckFailure(witness=[cat.g_name(g)], detail=f"{cat.g_name(g)}.1 = {cat.labels[cat.act[g][cat.unit]]}")
        for g in G
        if cat.act[g][cat.unit] != cat.unit
    ]
    reports.append(AxiomReport.build("unit-compatibility", grp.order, fails))

    fails = [
        CheckFailure(witness=[cat.g_name(g), cat.labels[a]], detail="g.(a*) != (g.a)*")
        for g in G
        for a in L
        if cat.act[g][cat.dual[a]] != cat.dual[cat.act[g][a]]
    ]
    reports.append(AxiomReport.build("dual-compatibility", grp.order * cat.rank, fails))

    fails = [
        CheckFailure(witness=[cat.labels[a]], detail=f"deg(a).a = {cat.labels[cat.act[cat.deg[a]][a]]}")
        for a in L
        if cat.act[cat.deg[a]][a] != a
    ]
    reports.append(AxiomReport.build("twist-target", cat.rank, fails))

    if cat.multiplicity_free:
        reports.extend(_u_axioms(cat))
    return reports


def _u_axioms(cat: GCategoryData) -> list[AxiomReport]:
    grp = cat.group
    G = grp.elements
    triples = sorted(cat.fusion)

    fails: list[CheckFailure] = []
    n = 0
    for (a, b, c) in triples:
        n += 1
        if cat.u(grp.identity, a, b, c) != 1:
            fails.append(CheckFailure(witness=["e", *cat.names((a, b, c))], detail="U_e != 1"))
        for g, h in itertools.product(G, repeat=2):
            n += 1
            ha, hb, hc = cat.act_on(h, (a, b, c))
            lhs = cat.u(grp.mul(g, h), a, b, c)
            rhs = cat.u(g, ha, hb, hc) * cat.u(h, a, b, c)
            if lhs != rhs:
                fails.append(CheckFailure(
                    witness=[cat.g_name(g), cat.g_name(h), *cat.names((a, b, c))],
                    detail=f"U_gh {lhs} != U_g U_h {rhs}",
                ))
    comp = AxiomReport.build("action-coefficients", n, fails)

    fails, n = [], 0
    for (a, b, c, d, e, f), value in sorted(cat.F.items()):
        for g in G:
            n += 1
            ga, gb, gc, gd, ge, gf = cat.act_on(g, (a, b, c, d, e, f))
            lhs = value * cat.u(g, b, c, f) * cat.u(g, a, f, d)
            rhs = cat.u(g, a, b, e) * cat.u(g, e, c, d) * cat.f(ga, gb, gc, gd, ge, gf)
            if lhs != rhs:
                fails.append(CheckFailure(
                    witness=[cat.g_name(g), *cat.names((a, b, c, d, e, f))],
                    detail=f"F U U {lhs} != U U gF {rhs}",
                ))
    assoc = AxiomReport.build("associativity-equivariance", n, fails)

    fails, n = [], 0
    for (a, b, c) in triples:
        pb = cat.act[cat.deg[a]][b]
        for g in G:
            n += 1
            ga, gb, gc = cat.act_on(g, (a, b, c))
            lhs = cat.r(ga, gb, gc) * cat.u(g, a, b, c)
            rhs = cat.u(g, pb, a, c) * cat.r(a, b, c)
            if lhs != rhs:
                fails.append(CheckFailure(
                    witness=[cat.g_name(g), *cat.names((a, b, c))],
                    detail=f"gR U {lhs} != U R {rhs}",
                ))
    braid = AxiomReport.build("braiding-equivariance", n, fails)
    return [comp, assoc, braid]


def check_g_coherence(cat: GCategoryData) -> CheckReport:
    return CheckReport(
        subject=cat.name,
        interpretation_notes=["the action is strict, so the associator of the action is trivial"],
        axioms=g_coherence_axioms(cat),
    )


def twist_axioms(cat: GCategoryData) -> list[AxiomReport]:
    reports: list[AxiomReport] = []
    fails = [] if cat.theta[cat.unit] == 1 else [
        CheckFailure(witness=[cat.labels[cat.unit]], detail=f"theta_1 = {cat.theta[cat.unit]}")
    ]
    reports.append(AxiomReport.build("twist-unit", 1, fails))

    fails = []
    for (a, b, c) in sorted(cat.fusion):
        pb = cat.act[cat.deg[a]][b]
        lhs = cat.theta[c] * cat.u(cat.deg[c], a, b, c)
        rhs = cat.theta[a] * cat.theta[b] * cat.r(a, b, c) * cat.r(pb, a, c)
        if lhs != rhs:
            fails.append(CheckFailure(witness=cat.names((a, b, c)),
                                      detail=f"theta_c U {lhs} != theta_a theta_b R R {rhs}"))
    reports.append(AxiomReport.build("ribbon", len(cat.fusion), fails))

    fails = [
        CheckFailure(witness=[cat.labels[a]], detail=f"theta_a* = {cat.theta[cat.dual[a]]}, theta_a = {cat.theta[a]}")
        for a in cat.simples
        if cat.theta[cat.dual[a]] != cat.theta[a]
    ]
    reports.append(AxiomReport.build("twist-dual", cat.rank, fails))

    fails = [
        CheckFailure(witness=[cat.g_name(g), cat.labels[a]], detail="theta_{g.a} != theta_a")
        for g in cat.group.elements
        for a in cat.simples
        if cat.theta[cat.act[g][a]] != cat.theta[a]
    ]
    reports.append(AxiomReport.build("twist-invariance", cat.group.order * cat.rank, fails))
    return reports


def check_twist(cat: GCategoryData) -> CheckReport:
    return CheckReport(subject=cat.name, axioms=twist_axioms(cat))


def check_category(cat: GCategoryData) -> CheckReport:
    """All category-level checks in one report."""
    axioms = [pentagon_axiom(cat), *hexagon_axioms(cat), *g_coherence_axioms(cat), *twist_axioms(cat)]
    report = CheckReport(
        subject=cat.name,
        interpretation_notes=[
            "the action is strict, so the associator of the action is trivial",
            "hexagon_mirror checks the braiding of a (x) b past c",
        ],
        axioms=axioms,
    )
    logger.info("category checks for %s: passed=%s", cat.name, report.passed)
    return report
