from __future__ import annotations

from typing import Any

from fastapi import APIRouter, Depends, HTTPException, Query

from ..category import check_category
from ..msdata import check_ms_axioms
from ..roundtrip import roundtrip_check
from ..schemas import CatalogEntry
from ..services.catalog import Catalog, get_catalog

router = APIRouter(prefix="/catalog", tags=["catalog"])


@router.get("", response_model=list[CatalogEntry])
def list_catalog(catalog: Catalog = Depends(get_catalog)) -> list[CatalogEntry]:
    return catalog.entries()


@router.get("/{name}/report")
def catalog_report(
    name: str,
    bound: int | None = Query(None, gt=0, le=8),
    catalog: Catalog = Depends(get_catalog),
) -> dict[str, Any]:
    try:
        cat = catalog.category(name)
    except KeyError:
        raise HTTPException(status_code=404, detail=f"Unknown catalog entry {name!r}.") from None
    reports = {
        "validate": check_category(cat).to_payload(),
        "ms-check": check_ms_axioms(cat, bound).to_payload(),
        "roundtrip": roundtrip_check(cat).to_payload(),
    }
    return {
        "name": name,
        "summary": cat.summary(),
        "reports": reports,
        "passed": all(r["passed"] for r in reports.values()),
    }
