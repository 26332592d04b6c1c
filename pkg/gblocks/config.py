import os

CONDUCTOR_LIMIT: int = int(os.getenv("GBLOCKS_CONDUCTOR_LIMIT", "64"))
AXIOM_BOUND: int = int(os.getenv("GBLOCKS_AXIOM_BOUND", "5"))
PATH_DEPTH: int = int(os.getenv("GBLOCKS_PATH_DEPTH", "6"))
MAX_BLOCKS: int = int(os.getenv("GBLOCKS_MAX_BLOCKS", "3"))
MAX_BOUNDARIES: int = int(os.getenv("GBLOCKS_MAX_BOUNDARIES", "6"))
RELATION_BOUND: int = int(os.getenv("GBLOCKS_RELATION_BOUND", "4"))
LOG_LEVEL: str = os.getenv("GBLOCKS_LOG_LEVEL", "WARNING").upper()

_cors_raw = os.getenv("GBLOCKS_CORS_ORIGINS", "*").strip()
CORS_ORIGINS: list[str] = (
    ["*"]
    if _cors_raw == "*"
    else [o.strip() for o in _cors_raw.split(",") if o.strip()]
)
