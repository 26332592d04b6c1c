import copy
import json

import pytest
from fastapi.testclient import TestClient

from gblocks.category import load_category, parse_category
from gblocks.covers import load_cover
from gblocks.main import app
from gblocks.mf import load_labeling
from gblocks.services.catalog import CATEGORY_DIR, COVER_DIR, LABEL_DIR


def category_path(name):
    return CATEGORY_DIR / f"{name}.json"


def cover_path(name):
    return COVER_DIR / f"{name}.json"


def label_path(name):
    return LABEL_DIR / f"{name}.json"


def category_document(name):
    with open(category_path(name), encoding="utf-8") as fh:
        return json.load(fh)


def mutated(name, edit):
    """Parse a shipped category after applying ``edit`` to a copy of its document."""
    doc = copy.deepcopy(category_document(name))
    edit(doc)
    return parse_category(doc)


@pytest.fixture(scope="session")
def ising():
    return load_category(category_path("ising_z2"))


def _signed_action(doc):
    # action of 1 twisted by the sign of psi, with R^{sigma psi} adjusted to match
    doc["U"] = {"1;sigma,sigma,psi": -1, "1;sigma,psi,sigma": -1, "1;psi,sigma,sigma": -1}
    doc["R"]["sigma,psi;sigma"] = {"4": 1}


@pytest.fixture(scope="session")
def ising_signed():
    return mutated("ising_z2", _signed_action)


@pytest.fixture(scope="session")
def fib():
    return load_category(category_path("fibonacci"))


@pytest.fixture(scope="session")
def vec_s3():
    return load_category(category_path("vec_s3"))


@pytest.fixture(scope="session")
def four_sigma(ising):
    graph = load_cover(ising.group, cover_path("four_sigma"))
    return graph, load_labeling(ising, graph, label_path("sigma4"))


@pytest.fixture(scope="session")
def s3_pair(vec_s3):
    graph = load_cover(vec_s3.group, cover_path("s3_pair"))
    return graph, load_labeling(vec_s3, graph, label_path("s3_pair"))


@pytest.fixture(scope="session")
def s3_triple(vec_s3):
    graph = load_cover(vec_s3.group, cover_path("s3_triple"))
    return graph, load_labeling(vec_s3, graph, label_path("s3_triple"))


@pytest.fixture(scope="session")
def fib_four(fib):
    graph = load_cover(fib.group, cover_path("fib_four"))
    return graph, load_labeling(fib, graph, label_path("tau4"))


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c
