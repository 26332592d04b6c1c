import itertools

import pytest

from gblocks.category import check_category, check_g_coherence, check_hexagon, check_pentagon, check_twist, fusion_dim, parse_category
from gblocks.errors import CategoryError
from tests.conftest import category_document, mutated


def brute_force_dim(cat, labels):
    """Count fusion trees by enumerating every sequence of intermediate labels."""
    idx = cat.indices(labels)
    if len(idx) < 2:
        return int(idx == (cat.unit,)) if idx else 1
    total = 0
    for mids in itertools.product(cat.simples, repeat=len(idx) - 2):
        chain = (idx[0],) + mids + (cat.unit,)
        count = 1
        for k in range(1, len(idx)):
            count *= cat.N(chain[k - 1], idx[k], chain[k])
        total += count
    return total


@pytest.mark.parametrize("name", ["ising_z2", "fibonacci", "vec_s3"])
def test_shipped_categories_pass(name, request):
    cat = request.getfixturevalue({"ising_z2": "ising", "fibonacci": "fib", "vec_s3": "vec_s3"}[name])
    report = check_category(cat)
    assert report.passed, [a.name for a in report.axioms if a.status == "fail"]
    assert report.axiom("pentagon").instances_checked > 0


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 4)])
def test_ising_sigma_dimensions(ising, n, expected):
    labels = ["sigma"] * (2 * n)
    assert fusion_dim(ising, labels) == expected
    assert brute_force_dim(ising, labels) == expected


@pytest.mark.parametrize("n, expected", [(3, 1), (4, 2), (5, 3), (6, 5)])
def test_fibonacci_dimensions(fib, n, expected):
    labels = ["tau"] * n
    assert fusion_dim(fib, labels) == expected
    assert brute_force_dim(fib, labels) == expected


def test_vec_s3_dimensions(vec_s3):
    grp = vec_s3.group
    for labels in itertools.product(vec_s3.simples, repeat=3):
        want = int(grp.prod(*(vec_s3.deg[a] for a in labels)) == grp.identity)
        assert fusion_dim(vec_s3, labels) == want


def test_odd_sigma_count_vanishes(ising):
    assert fusion_dim(ising, ["sigma"] * 3) == 0
    assert fusion_dim(ising, []) == 1
    assert fusion_dim(ising, ["psi"]) == 0


def test_summary(ising):
    summary = ising.summary()
    assert summary["group_order"] == 2
    assert summary["label_count"] == 3
    assert summary["conductor"] == 16


def test_split_checks(ising, vec_s3):
    assert check_pentagon(ising).passed
    assert check_hexagon(ising).passed
    report = check_g_coherence(vec_s3)
    assert report.passed
    assert report.axiom("action-composition").instances_checked == 36 * 6
    assert [a.name for a in check_twist(ising).axioms] == ["twist-unit", "ribbon", "twist-dual", "twist-invariance"]


def test_bending_is_twist_times_r(ising):
    sigma = ising.index("sigma")
    assert ising.bending(sigma) == ising.twist(sigma) * ising.r(sigma, sigma, ising.unit)


def test_f_block_inverse(ising):
    s = ising.index("sigma")
    block = ising.fblock(s, s, s, s)
    for e, f in itertools.product(block.rows, repeat=2):
        total = sum((ising.f(s, s, s, s, e, k) * ising.f_inv(s, s, s, s, k, f) for k in block.cols), ising.zero())
        assert total == (1 if e == f else 0)


# ---------------------------------------------------------------------------
# invalid documents
# ---------------------------------------------------------------------------


def _doc_with(name, edit):
    doc = category_document(name)
    edit(doc)
    return doc


@pytest.mark.parametrize("edit, invariant", [
    (lambda d: d["labels"][1].update(name="sigma"), "label-names"),
    (lambda d: d["labels"][1].update(dual="chi"), "unknown-label"),
    (lambda d: d.update(unit="psi"), "unit-fusion"),
    (lambda d: d.update(conductor=1000), "conductor"),
    (lambda d: d.update(group={"preset": "cyclic", "n": 0}), "group"),
    (lambda d: d["fusion"].append(["psi", "psi", "1"]), "fusion-duplicate"),
    (lambda d: d["theta"].update({"1": -1}), "twist-unit"),
    (lambda d: d["R"].update({"sigma,psi;psi": 1}), "R-admissible"),
])
def test_invalid_documents(edit, invariant):
    with pytest.raises(CategoryError) as exc:
        parse_category(_doc_with("ising_z2", edit))
    assert exc.value.invariant == invariant


def test_schema_errors_are_category_errors():
    with pytest.raises(CategoryError) as exc:
        parse_category({"name": "empty", "group": {"preset": "cyclic", "n": 1}, "labels": []})
    assert exc.value.invariant == "schema"


def _multiplicity_two(with_symbols):
    doc = {
        "name": "x2",
        "group": {"preset": "cyclic", "n": 1},
        "labels": [{"name": "1", "degree": 0, "dual": "1"}, {"name": "x", "degree": 0, "dual": "x"}],
        "fusion": [["1", "1", "1"], ["1", "x", "x"], ["x", "1", "x"], ["x", "x", "1"], ["x", "x", "x", 2]],
    }
    if with_symbols:
        doc["R"] = {"x,x;1": 1}
    return doc


def test_multiplicity_needs_scalar_free_document():
    with pytest.raises(CategoryError) as exc:
        parse_category(_multiplicity_two(with_symbols=True))
    assert exc.value.invariant == "multiplicity-free"
    cat = parse_category(_multiplicity_two(with_symbols=False))
    assert not cat.multiplicity_free
    assert fusion_dim(cat, ["x", "x", "x"]) == 2
    with pytest.raises(CategoryError):
        check_category(cat)


# ---------------------------------------------------------------------------
# single-scalar mutations of the Ising data
# ---------------------------------------------------------------------------


def _failing(report):
    return {a.name for a in report.axioms if a.status == "fail"}


def test_f_mutation_breaks_pentagon():
    cat = mutated("ising_z2", lambda d: d["F"].update({"sigma,sigma,sigma;sigma;1,1": 1}))
    report = check_category(cat)
    assert "pentagon" in _failing(report)
    assert report.axiom("pentagon").failures[0].witness


def test_r_mutation_breaks_ribbon():
    cat = mutated("ising_z2", lambda d: d["R"].update({"sigma,sigma;1": {"1": 1}}))
    failing = _failing(check_category(cat))
    assert "ribbon" in failing


def test_theta_mutation_breaks_ribbon():
    cat = mutated("ising_z2", lambda d: d["theta"].update({"sigma": {"5": 1}}))
    report = check_category(cat)
    assert "ribbon" in _failing(report)
    assert report.axiom("ribbon").failures[0].witness == ["sigma", "sigma", "1"]


def test_u_mutation_breaks_associativity_equivariance():
    cat = mutated("ising_z2", lambda d: d.setdefault("U", {}).update({"1;sigma,sigma,psi": -1}))
    assert "associativity-equivariance" in _failing(check_category(cat))


def test_fusion_mutation_is_rejected():
    with pytest.raises(CategoryError) as exc:
        mutated("ising_z2", lambda d: d["fusion"].remove(["sigma", "sigma", "psi"]))
    assert exc.value.invariant == "F-admissible"


def test_grading_mutation_is_rejected():
    with pytest.raises(CategoryError) as exc:
        mutated("ising_z2", lambda d: d["labels"][1].update(degree="1"))
    assert exc.value.invariant == "fusion-grading"


def test_r_mutation_breaks_hexagon():
    cat = mutated("ising_z2", lambda d: d["R"].update({"sigma,sigma;1": 1}))
    report = check_hexagon(cat)
    assert not report.passed
    assert {"hexagon", "hexagon_mirror"} & _failing(report)


def test_action_moving_the_unit_is_flagged():
    def swap(doc):
        doc["labels"][0].update(action={"1": "psi"})
        doc["labels"][1].update(action={"1": "1"})

    report = check_g_coherence(mutated("ising_z2", swap))
    assert "unit-compatibility" in _failing(report)
    assert report.axiom("unit-compatibility").failures[0].witness == ["1"]


def test_signed_action_is_consistent(ising_signed):
    report = check_category(ising_signed)
    assert report.passed, sorted(_failing(report))
    assert ising_signed.u(1, *ising_signed.indices(["sigma", "sigma", "psi"])) == -1
