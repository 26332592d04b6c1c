from __future__ import annotations

from typing import Any

from fastapi import APIRouter, Depends, HTTPException

from ..category import GCategoryData
from ..covers import GluingGraph, parse_cover, parse_move
from ..errors import GBlocksError
from ..mf import CoverLabeling, check_path_independence, check_relations, factorization, make_labeling, path_map, tau_dim
from ..schemas import CategoryRequest, CoverFile, CoverRequest, DimResponse, MapResponse
from ..services.catalog import Catalog, get_catalog
from .categories import resolve_category, run_check

router = APIRouter(prefix="/covers", tags=["covers"])


def _cover(cat: GCategoryData, doc: CoverFile) -> GluingGraph:
    return parse_cover(cat.group, doc.model_dump(by_alias=True))


def _resolve(payload: CoverRequest, catalog: Catalog) -> tuple[GCategoryData, GluingGraph, CoverLabeling]:
    cat = resolve_category(payload, catalog)
    try:
        graph = _cover(cat, payload.cover)
        labeling = make_labeling(cat, graph, payload.labeling.boundary_labels)
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return cat, graph, labeling


@router.post("/dim", response_model=DimResponse)
def cover_dim(payload: CoverRequest, catalog: Catalog = Depends(get_catalog)) -> DimResponse:
    cat, graph, labeling = _resolve(payload, catalog)
    try:
        return DimResponse(
            dim=tau_dim(cat, graph, labeling),
            factorization=[factorization(cat, graph, labeling, c) for c in range(len(graph.cuts))],
        )
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@router.post("/map", response_model=MapResponse)
def cover_map(payload: CoverRequest, catalog: Catalog = Depends(get_catalog)) -> MapResponse:
    cat, graph, labeling = _resolve(payload, catalog)
    try:
        moves = [parse_move(cat.group, spec) for spec in payload.moves]
        bm = path_map(cat, graph, labeling, moves)
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return MapResponse(
        source_dim=bm.source.dim,
        target_dim=bm.target.dim,
        matrix=bm.text(),
        target=bm.target.graph.to_document(),
    )


@router.post("/paths")
def cover_paths(payload: CoverRequest, catalog: Catalog = Depends(get_catalog)) -> dict[str, Any]:
    cat, graph, labeling = _resolve(payload, catalog)
    try:
        target = _cover(cat, payload.target) if payload.target is not None else graph
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return run_check(check_path_independence, cat, graph, target, labeling, payload.depth)


@router.post("/relations")
def cover_relations(payload: CategoryRequest, catalog: Catalog = Depends(get_catalog)) -> dict[str, Any]:
    return run_check(check_relations, resolve_category(payload, catalog), payload.bound)
