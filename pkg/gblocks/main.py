from __future__ import annotations

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .config import CORS_ORIGINS
from .routers import catalog, categories, covers

app = FastAPI(
    title="gblocks API",
    version=__version__,
    description="Exact checks for G-equivariant fusion categories, Moore-Seiberg data and genus-zero G-modular functors.",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=CORS_ORIGINS,
    allow_credentials=CORS_ORIGINS != ["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(catalog.router)
app.include_router(categories.router)
app.include_router(covers.router)


@app.get("/")
def root() -> dict[str, object]:
    return {"service": "gblocks API", "status": "ok", "version": __version__}


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "healthy"}
