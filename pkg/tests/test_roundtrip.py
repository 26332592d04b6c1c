import pytest

from gblocks.roundtrip import reconstruct_fusion, reconstruct_twist, roundtrip_check


@pytest.mark.parametrize("fixture", ["ising", "fib", "vec_s3"])
def test_roundtrip_reproduces_input(request, fixture):
    cat = request.getfixturevalue(fixture)
    report = roundtrip_check(cat)
    assert report.passed, [(a.name, a.failures[:1]) for a in report.axioms if a.status == "fail"]
    assert [a.name for a in report.axioms] == [
        "unit", "dual", "fusion", "twist", "fusion-associativity", "idempotence",
    ]


def test_reconstructed_fusion(ising):
    rec = reconstruct_fusion(ising)
    s, psi = ising.index("sigma"), ising.index("psi")
    assert rec.unit == ising.unit
    assert rec.dual == ising.dual
    assert rec.N(s, s, psi) == 1
    assert rec.N(s, psi, psi) == 0
    assert rec.fusion == ising.fusion


def test_reconstructed_twists(fib):
    assert reconstruct_twist(fib) == fib.theta


def test_report_details(vec_s3):
    details = roundtrip_check(vec_s3).details
    assert details["unit"] == "1"
    assert details["dual"]["d(123)"] == "d(132)"
    assert set(details["theta"].values()) == {"1"}

