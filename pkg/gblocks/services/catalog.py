from __future__ import annotations

import logging
from pathlib import Path

from ..category import GCategoryData, load_category
from ..schemas import CatalogEntry

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
CATEGORY_DIR = DATA_DIR / "categories"
COVER_DIR = DATA_DIR / "covers"
LABEL_DIR = DATA_DIR / "labels"


class Catalog:
    """Shipped categories, loaded on first use and kept for the process lifetime."""

    def __init__(self, directory: Path = CATEGORY_DIR) -> None:
        self.directory = directory
        self._loaded: dict[str, GCategoryData] = {}

    def names(self) -> list[str]:
        return sorted(p.stem for p in self.directory.glob("*.json"))

    def category(self, name: str) -> GCategoryData:
        if name not in self._loaded:
            path = self.directory / f"{name}.json"
            if not path.is_file():
                raise KeyError(name)
            self._loaded[name] = load_category(path)
            logger.info("catalog loaded %s from %s", name, path)
        return self._loaded[name]

    def entries(self) -> list[CatalogEntry]:
        return [CatalogEntry(**self.category(name).summary()) for name in self.names()]


_catalog = Catalog()


def get_catalog():
    yield _catalog
