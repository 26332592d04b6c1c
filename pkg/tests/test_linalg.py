import pytest

from gblocks import linalg
from gblocks.algebra import Cyclotomic
from gblocks.errors import CyclotomicError


def test_inverse_round_trip():
    z = Cyclotomic.root(1, 8)
    m = linalg.from_rows([[z, Cyclotomic.one(8)], [Cyclotomic.zero(8), z * z]])
    inv = linalg.inverse(m)
    assert linalg.is_identity(linalg.matmul(m, inv))
    assert linalg.equal(linalg.matmul(inv, m), linalg.identity(2))


def test_singular_and_misshaped():
    with pytest.raises(CyclotomicError):
        linalg.inverse(linalg.zeros(2, 2))
    with pytest.raises(CyclotomicError):
        linalg.matmul(linalg.zeros(2, 3), linalg.zeros(2, 3))
    assert not linalg.is_identity(linalg.zeros(1, 2))


def test_kron_and_text():
    a = linalg.from_rows([[Cyclotomic.one(), Cyclotomic.rational(2)]])
    b = linalg.identity(2)
    k = linalg.kron(a, b)
    assert k.shape == (2, 4)
    assert linalg.to_text(k) == [["1", "0", "2", "0"], ["0", "1", "0", "2"]]
    assert linalg.matmul(linalg.zeros(2, 0), linalg.zeros(0, 3)).shape == (2, 3)


def test_only_used_helpers_remain():
    assert not any(hasattr(linalg, name) for name in ("is_diagonal", "block_diag", "to_json"))
