"""Fusion data read back from block spaces, compared with the input category."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, replace

from .algebra import Cyclotomic
from .category import GCategoryData, fusion_dim
from .errors import GBlocksError, ReconstructionError
from .msdata import Tally, failure, twist_from_blocks
from .schemas import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReconstructedFusion:
    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    fusion: dict[tuple[int, int, int], int]
    theta: tuple[Cyclotomic, ...] | None

    def N(self, a: int, b: int, c: int) -> int:
        return self.fusion.get((a, b, c), 0)


def _unique(candidates: list[int], what: str, labels: tuple[str, ...]) -> int:
    if len(candidates) != 1:
        found = ", ".join(labels[c] for c in candidates) or "none"
        raise ReconstructionError(f"{what} is not represented by a unique label (found: {found})")
    return candidates[0]


def reconstruct_fusion(cat: GCategoryData) -> ReconstructedFusion:
    """N'_{ab}^c = dim <c', a, b> where c' is the label pairing with c."""
    unit = _unique([u for u in cat.simples if fusion_dim(cat, (u,)) == 1], "the unit", cat.labels)
    dual = tuple(
        _unique([d for d in cat.simples if fusion_dim(cat, (a, d))], f"the dual of {cat.labels[a]}", cat.labels)
        for a in cat.simples
    )
    fusion = {}
    for a, b, c in itertools.product(cat.simples, repeat=3):
        n = fusion_dim(cat, (dual[c], a, b))
        if n:
            fusion[(a, b, c)] = n
    return ReconstructedFusion(cat.labels, unit, dual, fusion, None)


def reconstruct_twist(cat: GCategoryData) -> tuple[Cyclotomic, ...]:
    return tuple(twist_from_blocks(cat, a) for a in cat.simples)


def _rebuild(cat: GCategoryData, rec: ReconstructedFusion) -> GCategoryData:
    return replace(
        cat,
        unit=rec.unit,
        dual=rec.dual,
        fusion=dict(rec.fusion),
        theta=rec.theta if rec.theta is not None else cat.theta,
        _cache={},
    )


def roundtrip_check(cat: GCategoryData) -> CheckReport:
    names = cat.labels
    unit_t, dual_t, fusion_t, twist_t = Tally("unit"), Tally("dual"), Tally("fusion"), Tally("twist")
    assoc_t, idem_t = Tally("fusion-associativity"), Tally("idempotence")
    try:
        rec = reconstruct_fusion(cat)
    except ReconstructionError as exc:
        unit_t.check(False, lambda: failure([], str(exc)))
        return CheckReport(subject=cat.name, axioms=[unit_t.report()])

    unit_t.check(rec.unit == cat.unit, lambda: failure([names[rec.unit]], f"unit' = {names[rec.unit]}, unit = {names[cat.unit]}"))
    for a in cat.simples:
        dual_t.check(rec.dual[a] == cat.dual[a], lambda a=a: failure(
            [names[a]], f"dual' = {names[rec.dual[a]]}, dual = {names[cat.dual[a]]}"))
    for a, b, c in itertools.product(cat.simples, repeat=3):
        got, want = rec.N(a, b, c), cat.N(a, b, c)
        fusion_t.check(got == want, lambda a=a, b=b, c=c, got=got, want=want: failure(
            [names[a], names[b], names[c]], f"N' = {got}, N = {want}"))

    thetas: list[Cyclotomic | None] = []
    for a in cat.simples:
        try:
            value = twist_from_blocks(cat, a)
        except GBlocksError as exc:
            twist_t.check(False, lambda a=a, exc=exc: failure([names[a]], str(exc)))
            thetas.append(None)
            continue
        thetas.append(value)
        twist_t.check(value == cat.twist(a), lambda a=a, value=value: failure(
            [names[a]], f"theta' = {value}, theta = {cat.twist(a)}"))

    for a, b, d, e in itertools.product(cat.simples, repeat=4):
        lhs = sum(rec.N(a, b, c) * cat.N(c, d, e) for c in cat.simples)
        rhs = sum(cat.N(b, d, f) * rec.N(a, f, e) for f in cat.simples)
        assoc_t.check(lhs == rhs, lambda a=a, b=b, d=d, e=e, lhs=lhs, rhs=rhs: failure(
            [names[a], names[b], names[d], names[e]], f"(ab)d -> e counts {lhs}, a(bd) -> e counts {rhs}"))

    if all(t is not None for t in thetas):
        rec = replace(rec, theta=tuple(thetas))

    def idempotent() -> bool:
        again = reconstruct_fusion(_rebuild(cat, rec))
        return (again.unit, again.dual, again.fusion) == (rec.unit, rec.dual, rec.fusion)

    idem_t.guard([], idempotent, lambda: failure([], "reconstructing the reconstructed data changes it"))

    report = CheckReport(
        subject=cat.name,
        interpretation_notes=[
            "F and R symbols are not re-extracted; unit, duals, fusion rules and twists are compared exactly",
        ],
        axioms=[t.report() for t in (unit_t, dual_t, fusion_t, twist_t, assoc_t, idem_t)],
        details={
            "unit": names[rec.unit],
            "dual": {names[a]: names[rec.dual[a]] for a in cat.simples},
            "theta": {names[a]: (str(t) if t is not None else None) for a, t in zip(cat.simples, thetas)},
        },
    )
    logger.info("roundtrip for %s: passed=%s", cat.name, report.passed)
    return report
