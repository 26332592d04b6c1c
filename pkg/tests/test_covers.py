from functools import reduce
from operator import mul

import pytest

from gblocks.covers import (
    Move,
    advance_marking,
    apply_move,
    block_iso,
    can_glue,
    canonical_form,
    canonicalize,
    canonicalize_marked,
    enumerate_moves,
    find_path,
    fusion_orientation,
    graph_key,
    initial_marking,
    monodromy,
    parse_cover,
    parse_move,
    reorder,
    same_cover,
    standard_block,
)
from gblocks.errors import CoverError


def test_four_sigma_structure(ising, four_sigma):
    graph, _ = four_sigma
    assert len(graph.blocks) == 2
    assert len(graph.cuts) == 1
    assert graph.free == ((0, 1), (0, 2), (1, 2), (1, 3))
    assert graph.cut_label(0) == ising.group.identity
    assert graph.free_monodromies() == [1, 1, 1, 1]


def test_free_boundaries_default_to_uncut_ports(vec_s3, s3_pair):
    graph, _ = s3_pair
    assert graph.free == ((0, 1), (0, 2), (1, 2), (1, 3))


def test_round_trip_through_document(vec_s3, s3_pair):
    graph, _ = s3_pair
    again = parse_cover(vec_s3.group, graph.to_document())
    assert canonical_form(again) == canonical_form(graph)


def test_monodromy_and_gluing(vec_s3):
    grp = vec_s3.group
    t12, t13, c = grp.index("(12)"), grp.index("(13)"), grp.index("(123)")
    blk = standard_block(grp, (t12, t13, c))
    assert monodromy(grp, blk, 3) == grp.inv(c)
    other = standard_block(grp, (grp.inv(c), grp.index("(23)"), t13))
    assert can_glue(grp, blk, 3, other, 1)
    assert not can_glue(grp, blk, 1, other, 1)
    with pytest.raises(CoverError):
        monodromy(grp, blk, 4)


def test_block_iso(vec_s3):
    grp = vec_s3.group
    blk = standard_block(grp, (grp.index("(12)"), grp.index("(13)"), grp.index("(123)")))
    x = grp.index("(23)")
    moved = apply_move(
        parse_cover(grp, {"blocks": [{"g": ["(12)", "(13)", "(123)"]}]}), Move("P", block=0, x=x)
    ).blocks[0]
    assert block_iso(grp, blk, moved) == x
    assert block_iso(grp, blk, standard_block(grp, (grp.identity, grp.identity))) is None


@pytest.mark.parametrize("doc, message", [
    ({"blocks": [{"g": ["1", "0"]}]}, "product of g"),
    ({"blocks": [{"g": ["1", "1"]}, {"g": ["1", "1"]}], "cuts": [{"from": [0, 2], "to": [0, 1]}]}, "itself"),
    ({"blocks": [{"g": ["1", "1"]}, {"g": ["1", "1"]}], "cuts": [{"from": [0, 3], "to": [1, 1]}]}, "missing"),
    ({"blocks": [{"g": ["1", "1"]}], "free": [[0, 1]]}, "either cut or free"),
    ({"blocks": [{"g": ["1", "1"]}], "free": [[0, 1], [0, 1], [0, 2]]}, "twice"),
    ({"blocks": [{"g": ["1", "1"], "h": ["0", "1"]}, {"g": ["1", "1"]}],
      "cuts": [{"from": [0, 2], "to": [1, 1], "label": "0"}]}, "differs"),
    ({"blocks": [{"g": ["2", "0"]}]}, "unknown group element"),
])
def test_invalid_covers(ising, doc, message):
    with pytest.raises(CoverError, match=message):
        parse_cover(ising.group, doc)


def test_cycles_are_rejected(ising):
    doc = {
        "blocks": [{"g": ["1", "1", "0"]}, {"g": ["0", "1", "1"]}],
        "cuts": [{"from": [0, 3], "to": [1, 1]}, {"from": [0, 2], "to": [1, 2]}],
    }
    with pytest.raises(CoverError, match="cycle"):
        parse_cover(ising.group, doc)


def test_parse_move(ising):
    grp = ising.group
    assert parse_move(grp, {"kind": "P", "block": 0, "x": "1"}) == Move("P", block=0, x=1)
    assert parse_move(grp, {"kind": "T", "cut": 0, "z": "0"}).describe(grp) == "T0[0]"
    for spec in ({"kind": "P", "block": 0}, {"kind": "F"}, {"kind": "T", "cut": 0}, {"kind": "Q"}, {"kind": "Z"}):
        with pytest.raises(CoverError):
            parse_move(grp, spec)


def test_rotation_cycles_the_boundaries(four_sigma):
    graph, _ = four_sigma
    turned = apply_move(graph, Move("Z", block=0))
    assert turned.blocks[0].g == (0, 1, 1)
    assert turned.cuts[0].src == (0, 1)
    assert turned.free[:2] == ((0, 2), (0, 3))
    again = apply_move(apply_move(turned, Move("Z", block=0)), Move("Z", block=0))
    assert again == graph


def test_braid_swaps_last_two(vec_s3, s3_triple):
    graph, _ = s3_triple
    grp = vec_s3.group
    g1, g2, g3 = graph.blocks[0].g
    braided = apply_move(graph, Move("B", block=0)).blocks[0]
    assert braided.g == (g1, grp.conj(g2, g3), g2)
    assert grp.prod(*braided.g) == grp.identity


def test_fusion_merges_blocks(four_sigma):
    graph, _ = four_sigma
    assert fusion_orientation(graph, 0) == (1, 0, 1)
    fused = apply_move(graph, Move("F", cut=0))
    assert len(fused.blocks) == 1
    assert fused.blocks[0].g == (1, 1, 1, 1)
    assert fused.free == ((0, 1), (0, 2), (0, 3), (0, 4))
    assert not fused.cuts


def test_fusion_needs_matching_marked_points(four_sigma):
    graph, _ = four_sigma
    moved = apply_move(graph, Move("P", block=1, x=1))
    assert moved.blocks[1].h == (1, 1, 1)
    assert moved.cut_label(0) == 0
    assert fusion_orientation(moved, 0) is None
    with pytest.raises(CoverError):
        apply_move(moved, Move("F", cut=0))


def test_braid_needs_three_boundaries(four_sigma):
    graph, _ = four_sigma
    fused = apply_move(graph, Move("F", cut=0))
    with pytest.raises(CoverError):
        apply_move(fused, Move("B", block=0))


def test_enumerate_moves_order(four_sigma):
    graph, _ = four_sigma
    kinds = [m.kind for m in enumerate_moves(graph)]
    assert kinds == ["Z", "Z", "B", "B", "F", "P", "P", "P", "P", "T", "T"]


def test_canonical_form_ignores_block_order(four_sigma):
    graph, _ = four_sigma
    swapped = reorder(graph, (1, 0))
    assert swapped.cuts[0].src == (1, 3)
    assert same_cover(graph, swapped)
    canon, perm, _ = canonicalize(swapped)
    assert perm == (0, 1)
    assert canon.blocks[0].g == (0, 1, 1)
    assert canonicalize(graph)[1] == (1, 0)
    with pytest.raises(CoverError):
        reorder(graph, (0, 0))


def test_find_path(four_sigma):
    graph, _ = four_sigma
    assert find_path(graph, graph) == []
    target = apply_move(apply_move(graph, Move("F", cut=0)), Move("Z", block=0))
    path = find_path(graph, target, max_depth=3)
    assert path is not None and len(path) <= 2
    reached = graph
    for m in path:
        reached = apply_move(reached, m)
    assert same_cover(reached, target)


def test_find_path_gives_up(ising, four_sigma):
    graph, _ = four_sigma
    single = parse_cover(ising.group, {"blocks": [{"g": ["1", "1"]}]})
    assert find_path(graph, single) is None


def _walk(graph, marking, moves):
    for m in moves:
        nxt = apply_move(graph, m)
        marking = advance_marking(graph, marking, m, after=nxt)
        graph = nxt
    return graph, marking


def test_initial_marking_words(four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    x1, x2, x3 = marking.free.generators
    assert marking.g[0] == ((x1 * x2 * x3) ** -1, x1, x2 * x3)
    assert marking.g[1] == ((x2 * x3) ** -1, x2, x3)
    assert all(w.is_identity for hs in marking.h for w in hs)


def test_braid_moves_the_marked_point(four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    x1, x2, x3 = marking.free.generators
    _, braided = _walk(graph, marking, [Move("B", block=1)])
    assert braided.g[1] == ((x2 * x3) ** -1, x2 * x3 * x2**-1, x2)
    assert braided.h[1] == (marking.free.identity, x2**-1, marking.free.identity)
    assert braided.g[0] == marking.g[0]


def test_double_braids_are_told_apart(four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    moved, twisted = _walk(graph, marking, [Move("B", block=1)] * 4)
    assert graph_key(moved) == graph_key(graph)
    assert twisted.key() != marking.key()


def test_full_rotation_keeps_the_marking(four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    moved, turned = _walk(graph, marking, [Move("Z", block=1)] * 3)
    assert graph_key(moved) == graph_key(graph)
    assert turned.key() == marking.key()


def test_gauge_moves_keep_the_marking(ising, four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    moved, same = _walk(graph, marking, [Move("P", block=0, x=1), Move("T", cut=0, z=1)])
    assert graph_key(moved) != graph_key(graph)
    assert same is marking


def test_boundary_words_multiply_to_one(four_sigma):
    graph, _ = four_sigma
    marking = initial_marking(graph)
    moves = [Move("B", block=1), Move("Z", block=0), Move("B", block=0), Move("Z", block=0), Move("Z", block=0)]
    moved, walked = _walk(graph, marking, moves)
    for words in walked.g:
        assert reduce(mul, words).is_identity
    assert fusion_orientation(moved, 0) is not None
    fused, merged = _walk(moved, walked, [Move("F", cut=0)])
    assert len(merged.g) == 1
    assert reduce(mul, merged.g[0]).is_identity
    assert fused.blocks[0].n == 4


def test_canonical_marking_ignores_block_order(four_sigma):
    graph, _ = four_sigma
    swapped = reorder(graph, (1, 0))
    canon, marking, _, _ = canonicalize_marked(graph, initial_marking(graph))
    canon2, marking2, _, _ = canonicalize_marked(swapped, initial_marking(graph).reordered((1, 0)))
    assert graph_key(canon) == graph_key(canon2)
    assert marking.key() == marking2.key()
