import itertools

import pytest

from gblocks.errors import CategoryError
from gblocks.msdata import (
    block_space,
    check_ms_axioms,
    generalized_commutativity,
    generalized_gluing,
    invariance_scalar,
    label_tuples,
    ms_braiding,
    ms_gluing,
    ms_phi,
    ms_rotation,
    rotation_power,
    symmetry_scalar,
    twist_from_blocks,
)
from tests.conftest import mutated


def test_block_space_basis(ising):
    sp = block_space(ising, ["sigma"] * 4)
    s, one, psi = ising.index("sigma"), ising.unit, ising.index("psi")
    assert sp.dim == 2
    assert sp.basis == ((s, one, s, one), (s, psi, s, one))
    assert block_space(ising, []).basis == ((),)
    assert block_space(ising, ["sigma"]).dim == 0


def test_block_space_needs_scalar_symbols():
    def doubled(doc):
        doc.update(F={}, R={}, theta={})
        doc["fusion"][4] = ["tau", "tau", "tau", 2]

    cat = mutated("fibonacci", doubled)
    with pytest.raises(CategoryError) as exc:
        block_space(cat, ["tau", "tau"])
    assert exc.value.invariant == "multiplicity-free"


def test_label_tuples(ising):
    names = [tuple(ising.names(t)) for t in label_tuples(ising, 2)]
    assert names == [("1", "1"), ("psi", "psi"), ("sigma", "sigma")]


@pytest.mark.parametrize("fixture, bound", [("ising", 4), ("fib", 5), ("vec_s3", 4)])
def test_full_rotation_is_identity(request, fixture, bound):
    cat = request.getfixturevalue(fixture)
    for n in range(1, bound + 1):
        for labels in label_tuples(cat, n):
            sp = block_space(cat, labels)
            loop = rotation_power(sp, n)
            assert loop.target.labels == sp.labels
            assert loop.is_identity(), cat.names(labels)


def test_rotation_shifts_labels(fib):
    sp = block_space(fib, ["1", "tau", "tau"])
    z = ms_rotation(sp)
    assert z.target.labels == (fib.index("tau"), fib.unit, fib.index("tau"))
    assert rotation_power(sp, 1).equals(z)


def test_phi_composition(vec_s3):
    grp = vec_s3.group
    for labels in label_tuples(vec_s3, 3):
        sp = block_space(vec_s3, labels)
        for g, h in itertools.product(grp.elements, repeat=2):
            first = ms_phi(sp, h)
            lhs = first.then(ms_phi(first.target, g))
            assert lhs.target.labels == vec_s3.act_on(grp.mul(g, h), labels)
            assert lhs.equals(ms_phi(sp, grp.mul(g, h)))


def test_braiding_target(vec_s3):
    sp = block_space(vec_s3, ["d(123)", "d(12)", "d(13)"])
    assert sp.dim == 1
    sigma = ms_braiding(sp)
    x, a, b = sp.labels
    assert sigma.target.labels == (x, vec_s3.act[vec_s3.deg[a]][b], a)
    assert sigma.matrix.shape == (1, 1)


def test_braiding_with_unit_spectator(ising):
    s = ising.index("sigma")
    sigma = ms_braiding(block_space(ising, ["1", "sigma", "sigma"]))
    assert sigma.matrix.shape == (1, 1)
    assert sigma.matrix[0, 0] == ising.r(s, s, ising.unit)


def test_signed_action_on_blocks(ising_signed):
    sp = block_space(ising_signed, ["sigma", "sigma", "psi"])
    assert ms_phi(sp, 1).matrix[0, 0] == -1
    assert ms_phi(block_space(ising_signed, ["sigma"] * 4), 1).is_identity()
    assert ms_phi(sp, 0).is_identity()


def test_rotation_powers_are_cached(fib):
    sp = block_space(fib, ["tau"] * 4)
    assert rotation_power(sp, 3) is rotation_power(sp, 3)
    assert rotation_power(sp, 4).is_identity()


def test_braiding_needs_three_labels(ising):
    with pytest.raises(CategoryError):
        ms_braiding(block_space(ising, ["sigma", "sigma"]))


def test_gluing_dimensions(ising):
    glue = ms_gluing(ising, ["sigma", "sigma"], ["sigma", "sigma"])
    assert glue.source.dim == 2
    assert glue.target.dim == 2
    assert glue.inverse().then(glue).is_identity()


def test_symmetric_object_scalars(ising, vec_s3):
    s = ising.index("sigma")
    assert symmetry_scalar(ising, s) == ising.twist(s) * ising.r(s, s, ising.unit)
    for g in vec_s3.group.elements:
        for i in vec_s3.simples:
            assert invariance_scalar(vec_s3, g, i) == 1


@pytest.mark.parametrize("fixture", ["ising", "fib", "vec_s3"])
def test_twist_read_from_blocks(request, fixture):
    cat = request.getfixturevalue(fixture)
    for a in cat.simples:
        assert twist_from_blocks(cat, a) == cat.twist(a)


def test_vec_s3_ms_axioms(vec_s3):
    report = check_ms_axioms(vec_s3, bound=5)
    assert report.passed, [a.name for a in report.axioms if a.status == "fail"]
    assert report.details["bound"] == 5


@pytest.mark.parametrize("fixture", ["ising", "fib", "ising_signed"])
def test_braided_ms_axioms(request, fixture):
    report = check_ms_axioms(request.getfixturevalue(fixture), bound=4)
    assert report.passed, [a.name for a in report.axioms if a.status == "fail"]
    names = {a.name for a in report.axioms}
    assert {"rotation", "ms-hexagon", "ms-hexagon-mirror", "dehn-twist", "gluing-symmetry"} <= names


def test_theta_mutation_breaks_rotation():
    cat = mutated("ising_z2", lambda d: d["theta"].update({"sigma": {"5": 1}}))
    report = check_ms_axioms(cat, bound=3)
    assert report.axiom("rotation").status == "fail"
    assert report.axiom("rotation").failures[0].matrices


def test_generalized_gluing(ising):
    plain = ms_gluing(ising, ["sigma", "sigma"], ["sigma", "sigma"])
    assert generalized_gluing(ising, ["sigma", "sigma"], ["sigma", "sigma"], 0).equals(plain)

    inserted = generalized_gluing(ising, ["sigma", "sigma"], ["sigma", "sigma"], 1)
    assert inserted.source.dim == inserted.target.dim == 2
    assert inserted.then(inserted.inverse()).is_identity()

    with pytest.raises(CategoryError, match="position"):
        generalized_gluing(ising, ["sigma"], ["sigma"], 2)


def test_generalized_commutativity(ising):
    sp = block_space(ising, ["sigma"] * 4)
    swap = generalized_commutativity(sp, 1)
    assert swap.target.labels == sp.labels
    assert swap.then(swap.inverse()).is_identity()

    with pytest.raises(CategoryError, match="position"):
        generalized_commutativity(sp, 3)


def test_generalized_commutativity_from_f_and_r(ising):
    # braiding the last pair of <s,s,s,s> is F R F^-1 on the channel of the first pair
    s, one = ising.index("sigma"), ising.unit
    sp = block_space(ising, ["sigma"] * 4)
    swap = generalized_commutativity(sp, 2)
    for col, u in enumerate(sp.basis):
        for row, v in enumerate(swap.target.basis):
            expected = ising.zero()
            if u == v:
                i = u[1]
                for f in ising.fuse(s, s):
                    expected = expected + ising.f(i, s, s, one, s, f) * ising.r(s, s, f) * ising.f_inv(i, s, s, one, f, s)
            assert swap.matrix[row, col] == expected
    assert swap.matrix[0, 0] == ising.r(s, s, one)
