from __future__ import annotations

from typing import Any

from fastapi import APIRouter, Depends, HTTPException

from ..category import GCategoryData, check_category, parse_category
from ..errors import GBlocksError
from ..msdata import check_ms_axioms
from ..roundtrip import roundtrip_check
from ..schemas import CategoryRequest
from ..services.catalog import Catalog, get_catalog

router = APIRouter(prefix="/categories", tags=["categories"])


def resolve_category(payload: CategoryRequest, catalog: Catalog) -> GCategoryData:
    if payload.catalog is not None:
        try:
            return catalog.category(payload.catalog)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"Unknown catalog entry {payload.catalog!r}.") from None
    try:
        return parse_category(payload.document.model_dump())
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def run_check(fn, *args: Any) -> dict[str, Any]:
    try:
        return fn(*args).to_payload()
    except GBlocksError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@router.post("/validate")
def validate_category(payload: CategoryRequest, catalog: Catalog = Depends(get_catalog)) -> dict[str, Any]:
    return run_check(check_category, resolve_category(payload, catalog))


@router.post("/ms-check")
def ms_check(payload: CategoryRequest, catalog: Catalog = Depends(get_catalog)) -> dict[str, Any]:
    return run_check(check_ms_axioms, resolve_category(payload, catalog), payload.bound)


@router.post("/roundtrip")
def roundtrip(payload: CategoryRequest, catalog: Catalog = Depends(get_catalog)) -> dict[str, Any]:
    return run_check(roundtrip_check, resolve_category(payload, catalog))
