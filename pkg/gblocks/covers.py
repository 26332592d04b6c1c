"""Genus-zero G-covers as gluings of standard blocks, and the simple moves.

Block indices are 0-based; boundary indices inside a block are 1-based.
A cut joins boundary ``a`` of one block ("from") to boundary ``b`` of a
different block ("to"); its marked-point label is the ``h`` entry on the
from side.
"""
from __future__ import annotations

import itertools
import json
import logging
from collections import deque
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Literal, Sequence

from pydantic import ValidationError
from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

from . import config
from .algebra import FiniteGroup
from .errors import CoverError, GroupError
from .schemas import CoverFile, MoveSpec

logger = logging.getLogger(__name__)

Port = tuple[int, int]
MoveKind = Literal["Z", "B", "F", "P", "T"]


@dataclass(frozen=True, slots=True)
class StandardBlock:
    g: tuple[int, ...]
    h: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.g)


@dataclass(frozen=True, slots=True)
class Cut:
    src: Port
    dst: Port


@dataclass(frozen=True, slots=True)
class Move:
    kind: MoveKind
    block: int | None = None
    cut: int | None = None
    x: int | None = None
    z: int | None = None

    def describe(self, group: FiniteGroup) -> str:
        if self.kind in ("Z", "B"):
            return f"{self.kind}{self.block}"
        if self.kind == "P":
            return f"P{self.block}[{group.name(self.x)}]"
        if self.kind == "F":
            return f"F{self.cut}"
        return f"T{self.cut}[{group.name(self.z)}]"

    def to_spec(self, group: FiniteGroup) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.block is not None:
            out["block"] = self.block
        if self.cut is not None:
            out["cut"] = self.cut
        if self.x is not None:
            out["x"] = group.name(self.x)
        if self.z is not None:
            out["z"] = group.name(self.z)
        return out


@dataclass(frozen=True)
class GluingGraph:
    group: FiniteGroup
    blocks: tuple[StandardBlock, ...]
    cuts: tuple[Cut, ...]
    free: tuple[Port, ...]
    name: str | None = None

    def __post_init__(self) -> None:
        _validate(self)

    def block(self, i: int) -> StandardBlock:
        if not 0 <= i < len(self.blocks):
            raise CoverError(f"no block {i}")
        return self.blocks[i]

    def cut(self, c: int) -> Cut:
        if not 0 <= c < len(self.cuts):
            raise CoverError(f"no cut {c}")
        return self.cuts[c]

    def h_at(self, port: Port) -> int:
        b, a = port
        return self.blocks[b].h[a - 1]

    def cut_label(self, c: int) -> int:
        return self.h_at(self.cut(c).src)

    def port_monodromy(self, port: Port) -> int:
        return monodromy(self.group, self.blocks[port[0]], port[1])

    def free_monodromies(self) -> list[int]:
        return [self.port_monodromy(p) for p in self.free]

    def to_document(self) -> dict[str, Any]:
        grp = self.group
        return {
            "blocks": [
                {"g": [grp.name(x) for x in b.g], "h": [grp.name(x) for x in b.h]} for b in self.blocks
            ],
            "cuts": [
                {"from": list(c.src), "to": list(c.dst), "label": grp.name(self.h_at(c.src))} for c in self.cuts
            ],
            "free": [list(p) for p in self.free],
        }


def _validate(p: GluingGraph) -> None:
    grp = p.group
    for i, blk in enumerate(p.blocks):
        if len(blk.h) != blk.n:
            raise CoverError(f"block {i}: g and h differ in length")
        if grp.prod(*blk.g) != grp.identity:
            raise CoverError(f"block {i}: product of g is not the identity")
    seen: set[Port] = set()

    def claim(port: Port, what: str) -> None:
        b, a = port
        if not (0 <= b < len(p.blocks) and 1 <= a <= p.blocks[b].n):
            raise CoverError(f"{what} refers to missing boundary {list(port)}")
        if port in seen:
            raise CoverError(f"boundary {list(port)} is used twice")
        seen.add(port)

    parent = list(range(len(p.blocks)))

    def root(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k, cut in enumerate(p.cuts):
        claim(cut.src, f"cut {k}")
        claim(cut.dst, f"cut {k}")
        if cut.src[0] == cut.dst[0]:
            raise CoverError(f"cut {k} glues block {cut.src[0]} to itself")
        ra, rb = root(cut.src[0]), root(cut.dst[0])
        if ra == rb:
            raise CoverError(f"cut {k} closes a cycle; only genus-zero gluings are supported")
        parent[ra] = rb
        if grp.mul(p.port_monodromy(cut.src), p.port_monodromy(cut.dst)) != grp.identity:
            raise CoverError(f"cut {k}: monodromies on the two sides are not inverse")
    for port in p.free:
        claim(port, "free list")
    total = sum(b.n for b in p.blocks)
    if len(seen) != total:
        raise CoverError("every boundary must be either cut or free")


def monodromy(group: FiniteGroup, block: StandardBlock, i: int) -> int:
    """h_i g_i^-1 h_i^-1 around boundary i (1-based)."""
    if not 1 <= i <= block.n:
        raise CoverError(f"boundary {i} outside 1..{block.n}")
    h, g = block.h[i - 1], block.g[i - 1]
    return group.prod(h, group.inv(g), group.inv(h))


def can_glue(group: FiniteGroup, b1: StandardBlock, i: int, b2: StandardBlock, j: int) -> bool:
    return group.mul(monodromy(group, b1, i), monodromy(group, b2, j)) == group.identity


def block_iso(group: FiniteGroup, b1: StandardBlock, b2: StandardBlock) -> int | None:
    """The unique x with x g_i x^-1 = g'_i and h_i x^-1 = h'_i, if any."""
    if b1.n != b2.n:
        return None
    if b1.n == 0:
        return group.identity
    x = group.mul(group.inv(b2.h[0]), b1.h[0])
    ok = all(group.conj(x, g) == g2 for g, g2 in zip(b1.g, b2.g)) and all(
        group.mul(h, group.inv(x)) == h2 for h, h2 in zip(b1.h, b2.h)
    )
    return x if ok else None


def standard_block(group: FiniteGroup, g: Sequence[int], h: Sequence[int] | None = None) -> StandardBlock:
    g = tuple(g)
    return StandardBlock(g, tuple(h) if h is not None else (group.identity,) * len(g))


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------


def parse_cover(group: FiniteGroup, data: dict[str, Any]) -> GluingGraph:
    try:
        doc = CoverFile.model_validate(data)
    except ValidationError as exc:
        raise CoverError(str(exc)) from None
    try:
        blocks = tuple(
            standard_block(
                group,
                [group.index(x) for x in spec.g],
                [group.index(x) for x in spec.h] if spec.h is not None else None,
            )
            for spec in doc.blocks
        )
        labels = [group.index(c.label) if c.label is not None else None for c in doc.cuts]
    except GroupError as exc:
        raise CoverError(str(exc)) from None
    cuts = tuple(Cut(tuple(c.from_), tuple(c.to)) for c in doc.cuts)
    if doc.free is not None:
        free = tuple(tuple(p) for p in doc.free)
    else:
        taken = {c.src for c in cuts} | {c.dst for c in cuts}
        free = tuple(
            (b, a) for b, blk in enumerate(blocks) for a in range(1, blk.n + 1) if (b, a) not in taken
        )
    graph = GluingGraph(group, blocks, cuts, free, name=doc.name)
    for k, y in enumerate(labels):
        if y is not None and y != graph.cut_label(k):
            raise CoverError(
                f"cut {k}: label {group.name(y)} differs from the marked point {group.name(graph.cut_label(k))}"
            )
    logger.info("loaded cover %s: %d blocks, %d cuts", doc.name or "<unnamed>", len(blocks), len(cuts))
    return graph


def load_cover(group: FiniteGroup, path: str | Path) -> GluingGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_cover(group, json.load(fh))


def parse_move(group: FiniteGroup, spec: MoveSpec | dict[str, Any]) -> Move:
    if isinstance(spec, dict):
        try:
            spec = MoveSpec.model_validate(spec)
        except ValidationError as exc:
            raise CoverError(str(exc)) from None
    try:
        x = group.index(spec.x) if spec.x is not None else None
        z = group.index(spec.z) if spec.z is not None else None
    except GroupError as exc:
        raise CoverError(str(exc)) from None
    if spec.kind in ("Z", "B", "P") and spec.block is None:
        raise CoverError(f"{spec.kind} move needs a block")
    if spec.kind in ("F", "T") and spec.cut is None:
        raise CoverError(f"{spec.kind} move needs a cut")
    if spec.kind == "P" and x is None:
        raise CoverError("P move needs x")
    if spec.kind == "T" and z is None:
        raise CoverError("T move needs z")
    return Move(spec.kind, block=spec.block, cut=spec.cut, x=x, z=z)


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------


def _remap(p: GluingGraph, blocks: Sequence[StandardBlock], port_map) -> GluingGraph:
    cuts = tuple(Cut(port_map(c.src), port_map(c.dst)) for c in p.cuts)
    free = tuple(port_map(q) for q in p.free)
    return GluingGraph(p.group, tuple(blocks), cuts, free, name=p.name)


def _rotate(p: GluingGraph, b: int) -> GluingGraph:
    blk = p.block(b)
    n = blk.n
    new = StandardBlock(blk.g[-1:] + blk.g[:-1], blk.h[-1:] + blk.h[:-1])
    blocks = list(p.blocks)
    blocks[b] = new
    return _remap(p, blocks, lambda q: (b, q[1] % n + 1) if q[0] == b else q)


def _braid(p: GluingGraph, b: int) -> GluingGraph:
    grp = p.group
    blk = p.block(b)
    if blk.n != 3:
        raise CoverError(f"B needs a three-holed block, block {b} has {blk.n}")
    (g1, g2, g3), (h1, h2, h3) = blk.g, blk.h
    new = StandardBlock(
        (g1, grp.conj(g2, g3), g2),
        (h1, grp.mul(h3, grp.inv(g2)), h2),
    )
    blocks = list(p.blocks)
    blocks[b] = new
    swap = {1: 1, 2: 3, 3: 2}
    return _remap(p, blocks, lambda q: (b, swap[q[1]]) if q[0] == b else q)


def fusion_orientation(p: GluingGraph, c: int) -> tuple[int, int, int] | None:
    """(orientation, merged block, removed block) if F applies at cut c."""
    cut = p.cut(c)
    if p.h_at(cut.src) != p.h_at(cut.dst):
        return None
    (ba, a), (bb, b) = cut.src, cut.dst
    if a == p.blocks[ba].n and b == 1:
        return 1, ba, bb
    if b == p.blocks[bb].n and a == 1:
        return 2, bb, ba
    return None


def _fuse(p: GluingGraph, c: int) -> GluingGraph:
    found = fusion_orientation(p, c)
    if found is None:
        raise CoverError(f"F does not apply at cut {c}")
    _, keep, drop = found
    left, right = p.blocks[keep], p.blocks[drop]
    k = left.n - 1
    merged = StandardBlock(left.g[:-1] + right.g[1:], left.h[:-1] + right.h[1:])

    def shift(i: int) -> int:
        i = keep if i == drop else i
        return i - 1 if i > drop else i

    def port_map(q: Port) -> Port:
        b, a = q
        if b == drop:
            return shift(keep), k + a - 1
        return shift(b), a

    blocks = [merged if i == keep else blk for i, blk in enumerate(p.blocks) if i != drop]
    cuts = tuple(Cut(port_map(x.src), port_map(x.dst)) for i, x in enumerate(p.cuts) if i != c)
    free = tuple(port_map(q) for q in p.free)
    return GluingGraph(p.group, tuple(blocks), cuts, free, name=p.name)


def _conjugate(p: GluingGraph, b: int, x: int) -> GluingGraph:
    grp = p.group
    blk = p.block(b)
    xi = grp.inv(x)
    new = StandardBlock(tuple(grp.conj(x, g) for g in blk.g), tuple(grp.mul(h, xi) for h in blk.h))
    blocks = list(p.blocks)
    blocks[b] = new
    return replace(p, blocks=tuple(blocks))


def _relabel(p: GluingGraph, c: int, z: int) -> GluingGraph:
    grp = p.group
    cut = p.cut(c)
    k = grp.mul(z, grp.inv(p.cut_label(c)))
    blocks = [list(blk.h) for blk in p.blocks]
    for b, a in (cut.src, cut.dst):
        blocks[b][a - 1] = grp.mul(k, blocks[b][a - 1])
    new = tuple(StandardBlock(blk.g, tuple(h)) for blk, h in zip(p.blocks, blocks))
    return replace(p, blocks=new)


def apply_move(p: GluingGraph, m: Move) -> GluingGraph:
    if m.kind == "Z":
        return _rotate(p, m.block)
    if m.kind == "B":
        return _braid(p, m.block)
    if m.kind == "F":
        return _fuse(p, m.cut)
    if m.kind == "P":
        return _conjugate(p, m.block, m.x)
    if m.kind == "T":
        return _relabel(p, m.cut, m.z)
    raise CoverError(f"unknown move {m.kind!r}")


def enumerate_moves(p: GluingGraph) -> list[Move]:
    moves: list[Move] = []
    for b, blk in enumerate(p.blocks):
        if blk.n:
            moves.append(Move("Z", block=b))
    for b, blk in enumerate(p.blocks):
        if blk.n == 3:
            moves.append(Move("B", block=b))
    for c in range(len(p.cuts)):
        if fusion_orientation(p, c) is not None:
            moves.append(Move("F", cut=c))
    for b in range(len(p.blocks)):
        moves.extend(Move("P", block=b, x=x) for x in p.group.elements)
    for c in range(len(p.cuts)):
        moves.extend(Move("T", cut=c, z=z) for z in p.group.elements)
    return moves


# ---------------------------------------------------------------------------
# canonical form and search
# ---------------------------------------------------------------------------


def reorder(p: GluingGraph, block_perm: Sequence[int], cut_perm: Sequence[int] | None = None) -> GluingGraph:
    """New graph whose block k is old block ``block_perm[k]`` and cut k is old cut ``cut_perm[k]``."""
    where = {old: new for new, old in enumerate(block_perm)}
    if sorted(where) != list(range(len(p.blocks))):
        raise CoverError(f"{list(block_perm)} is not a permutation of the blocks")
    cut_perm = list(range(len(p.cuts))) if cut_perm is None else list(cut_perm)
    if sorted(cut_perm) != list(range(len(p.cuts))):
        raise CoverError(f"{cut_perm} is not a permutation of the cuts")

    def port_map(q: Port) -> Port:
        return where[q[0]], q[1]

    blocks = tuple(p.blocks[old] for old in block_perm)
    cuts = tuple(Cut(port_map(p.cuts[old].src), port_map(p.cuts[old].dst)) for old in cut_perm)
    free = tuple(port_map(q) for q in p.free)
    return GluingGraph(p.group, blocks, cuts, free, name=p.name)


def graph_key(p: GluingGraph) -> tuple:
    return (
        tuple((b.g, b.h) for b in p.blocks),
        tuple((c.src, c.dst) for c in p.cuts),
        p.free,
    )


Order = tuple[tuple[int, ...], tuple[int, ...]]


def canonical_orders(p: GluingGraph) -> tuple[GluingGraph, list[Order]]:
    """The least block/cut ordering of p, with every (block, cut) permutation pair producing it."""
    n = len(p.blocks)
    perms = itertools.permutations(range(n)) if n <= config.MAX_BLOCKS else [tuple(range(n))]
    best_key, best, orders = None, None, []
    for perm in perms:
        shuffled = reorder(p, perm)
        cut_perm = tuple(sorted(range(len(p.cuts)), key=lambda k: (shuffled.cuts[k].src, shuffled.cuts[k].dst)))
        candidate = reorder(shuffled, range(n), cut_perm)
        key = graph_key(candidate)
        if best_key is None or key < best_key:
            best_key, best, orders = key, candidate, [(tuple(perm), cut_perm)]
        elif key == best_key:
            orders.append((tuple(perm), cut_perm))
    return best, orders


def canonicalize(p: GluingGraph) -> tuple[GluingGraph, tuple[int, ...], tuple[int, ...]]:
    """The least block/cut ordering of p, with the permutations that produce it."""
    graph, orders = canonical_orders(p)
    return graph, *orders[0]


def canonical_form(p: GluingGraph) -> tuple:
    return graph_key(canonicalize(p)[0])


def same_cover(p1: GluingGraph, p2: GluingGraph) -> bool:
    return canonical_form(p1) == canonical_form(p2)


def find_path(p1: GluingGraph, p2: GluingGraph, max_depth: int | None = None) -> list[Move] | None:
    """Breadth-first shortest move sequence from p1 to p2 (up to block order)."""
    max_depth = config.PATH_DEPTH if max_depth is None else max_depth
    if len(p1.free) != len(p2.free):
        return None
    goal = canonical_form(p2)
    start = canonicalize(p1)[0]
    if graph_key(start) == goal:
        return []
    # paths are tracked on the original indexing of each first-reached graph
    seen = {graph_key(start)}
    queue: deque[tuple[GluingGraph, list[Move]]] = deque([(p1, [])])
    while queue:
        graph, path = queue.popleft()
        if len(path) >= max_depth:
            continue
        for move in enumerate_moves(graph):
            nxt = apply_move(graph, move)
            key = canonical_form(nxt)
            if key in seen:
                continue
            if key == goal:
                logger.debug("path of length %d found", len(path) + 1)
                return path + [move]
            seen.add(key)
            queue.append((nxt, path + [move]))
    return None


# ---------------------------------------------------------------------------
# base markings
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Marking:
    """Boundary loops and marked-point paths of each block as words in pi_1 of the base.

    The words live in a free group with one generator per free boundary,
    skipping the first free boundary of each component. They are kept in the
    gauge where that first boundary and both sides of every cut carry the
    empty path, so equal markings mean isotopic parameterizations.
    """

    free: FreeGroup
    g: tuple[tuple[FreeGroupElement, ...], ...]
    h: tuple[tuple[FreeGroupElement, ...], ...]

    def key(self) -> tuple:
        return tuple(
            (tuple(_word_key(w) for w in gs), tuple(_word_key(w) for w in hs)) for gs, hs in zip(self.g, self.h)
        )

    def reordered(self, block_perm: Sequence[int]) -> Marking:
        return Marking(self.free, tuple(self.g[b] for b in block_perm), tuple(self.h[b] for b in block_perm))


def _word_key(w: FreeGroupElement) -> tuple[tuple[str, int], ...]:
    return tuple((str(s), e) for s, e in w.array_form)


def _components(p: GluingGraph) -> list[int]:
    parent = list(range(len(p.blocks)))

    def root(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for cut in p.cuts:
        parent[root(cut.src[0])] = root(cut.dst[0])
    return [root(b) for b in range(len(p.blocks))]


def initial_marking(p: GluingGraph) -> Marking:
    """Words of p read off its own gluing, solved block by block from the leaves inwards."""
    comp = _components(p)
    first: dict[int, Port] = {}
    for q in p.free:
        first.setdefault(comp[q[0]], q)
    named = [q for q in p.free if first[comp[q[0]]] != q]
    free, *gens = free_group(", ".join(f"x{k}" for k in range(1, max(len(named), 1) + 1)))
    words: dict[Port, FreeGroupElement] = dict(zip(named, gens))
    partner: dict[Port, Port] = {}
    for cut in p.cuts:
        partner[cut.src], partner[cut.dst] = cut.dst, cut.src

    pending = list(range(len(p.blocks)))
    while pending:
        for b in pending:
            ports = [(b, a) for a in range(1, p.blocks[b].n + 1)]
            unknown = [q for q in ports if q not in words]
            if len(unknown) <= 1:
                break
        else:
            raise CoverError("boundary words of the gluing cannot be solved")
        pending.remove(b)
        if not unknown:
            continue
        q = unknown[0]
        before = _product(free, [words[r] for r in ports[: q[1] - 1]])
        after = _product(free, [words[r] for r in ports[q[1] :]])
        words[q] = before**-1 * after**-1
        if q in partner:
            words[partner[q]] = words[q] ** -1

    g = tuple(tuple(words[(b, a)] for a in range(1, blk.n + 1)) for b, blk in enumerate(p.blocks))
    h = tuple((free.identity,) * blk.n for blk in p.blocks)
    return Marking(free, g, h)


def _product(free: FreeGroup, words: Sequence[FreeGroupElement]) -> FreeGroupElement:
    out = free.identity
    for w in words:
        out = out * w
    return out


def _gauge(p: GluingGraph, free: FreeGroup, g: list[list[FreeGroupElement]], h: list[list[FreeGroupElement]]) -> None:
    """Conjugate blocks and shift cut paths until the gauge conditions of ``Marking`` hold."""

    def shift(b: int, x: FreeGroupElement) -> None:
        if x.is_identity:
            return
        xi = x**-1
        g[b] = [x * w * xi for w in g[b]]
        h[b] = [w * xi for w in h[b]]

    edges: dict[int, list[tuple[Port, Port]]] = {b: [] for b in range(len(p.blocks))}
    for cut in p.cuts:
        edges[cut.src[0]].append((cut.src, cut.dst))
        edges[cut.dst[0]].append((cut.dst, cut.src))
    visited: set[int] = set()
    for b, a in [*p.free, *((b, 0) for b in range(len(p.blocks)))]:
        if b in visited:
            continue
        if a:
            shift(b, h[b][a - 1])
        visited.add(b)
        queue = deque([b])
        while queue:
            u = queue.popleft()
            for (_, pu), (v, pv) in edges[u]:
                if v in visited:
                    continue
                k = h[u][pu - 1] ** -1
                h[u][pu - 1] = free.identity
                h[v][pv - 1] = k * h[v][pv - 1]
                shift(v, h[v][pv - 1])
                visited.add(v)
                queue.append(v)


def advance_marking(p: GluingGraph, marking: Marking, m: Move, after: GluingGraph | None = None) -> Marking:
    """The marking after move m on p; P and T only change the G-lift and keep it."""
    if m.kind in ("P", "T"):
        return marking
    after = apply_move(p, m) if after is None else after
    g = [list(ws) for ws in marking.g]
    h = [list(ws) for ws in marking.h]
    if m.kind == "Z":
        b = m.block
        g[b], h[b] = g[b][-1:] + g[b][:-1], h[b][-1:] + h[b][:-1]
    elif m.kind == "B":
        b = m.block
        (g1, g2, g3), (h1, h2, h3) = g[b], h[b]
        g[b] = [g1, g2 * g3 * g2**-1, g2]
        h[b] = [h1, h3 * g2**-1, h2]
    else:
        _, keep, drop = fusion_orientation(p, m.cut)
        merged = (g[keep][:-1] + g[drop][1:], h[keep][:-1] + h[drop][1:])
        g = [merged[0] if i == keep else ws for i, ws in enumerate(g) if i != drop]
        h = [merged[1] if i == keep else ws for i, ws in enumerate(h) if i != drop]
    _gauge(after, marking.free, g, h)
    return Marking(marking.free, tuple(map(tuple, g)), tuple(map(tuple, h)))


def marked_order(marking: Marking, orders: Sequence[Order]) -> tuple[Marking, tuple[int, ...], tuple[int, ...]]:
    """Among orders giving the same canonical graph, the one with the least reordered marking."""
    if len(orders) == 1:
        block_perm, cut_perm = orders[0]
    else:
        block_perm, cut_perm = min(orders, key=lambda o: marking.reordered(o[0]).key())
    return marking.reordered(block_perm), block_perm, cut_perm


def canonicalize_marked(p: GluingGraph, marking: Marking) -> tuple[GluingGraph, Marking, tuple[int, ...], tuple[int, ...]]:
    graph, orders = canonical_orders(p)
    return graph, *marked_order(marking, orders)
