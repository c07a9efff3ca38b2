import itertools

import pytest

from hopftwist import catalog
from hopftwist.cyclo import ONE, ZERO, cyc
from hopftwist.errors import (
    DimensionMismatch,
    InvalidAutomorphism,
    NotAGroup,
    NotAGroupAutomorphism,
    SingularAntipode,
)
from hopftwist.linalg import Matrix, map_order
from hopftwist.structures import (
    AXIOM_NAMES,
    HopfAlgebra,
    antipode_inv,
    comultiply,
    counit,
    dual,
    dual_automorphism,
    group_algebra,
    group_automorphism,
    identity_automorphism,
    is_cocommutative,
    is_commutative,
    is_grouplike,
    make_automorphism,
    multiply,
    same_structure,
    tensor_automorphism,
    tensor_product,
    verify_automorphism,
    verify_axioms,
)


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def rebuild(H, mult=None, unit=None, comult=None, counit=None, antipode=None):
    return HopfAlgebra(
        H.name,
        H.basis_labels,
        mult if mult is not None else H.mult,
        unit if unit is not None else H.unit,
        comult if comult is not None else H.comult,
        counit if counit is not None else H.counit_values,
        antipode if antipode is not None else H.antipode,
    )


def sparse_comult(H, k, l, r, delta):
    """Add ``delta`` to the coefficient of b_l (x) b_r in Delta(b_k)."""
    comult = [list(t) for t in H.comult]
    comult[k].append((cyc(delta), l, r))
    return comult


# -- basic operations --------------------------------------------------------------


def test_builtins_verify(h8, group_pkgs):
    for pkg in [h8, *group_pkgs.values()]:
        report = verify_axioms(pkg.algebra)
        assert report.ok, report.first_failure
        assert [c.name for c in report.checks] == list(AXIOM_NAMES)


def test_h8_relations(H8):
    z = H8.basis_element(H8.index("z"))
    half = cyc("1/2")
    expect = H8.element({"1": half, "x": half, "y": half, "xy": -half})
    assert multiply(H8, z, z) == expect
    x = H8.basis_element(H8.index("x"))
    assert comultiply(H8, x) == {(1, 1): ONE}
    assert counit(H8, z) == 1
    assert not is_commutative(H8)
    assert not is_cocommutative(H8)


def test_h8_delta_z(H8):
    i = H8.index
    d = comultiply(H8, H8.basis_element(i("z")))
    half = cyc("1/2")
    assert d == {
        (i("z"), i("z")): half,
        (i("z"), i("xz")): half,
        (i("yz"), i("z")): half,
        (i("yz"), i("xz")): -half,
    }


def test_grouplike(H8):
    assert is_grouplike(H8, H8.basis_element(H8.index("x")))
    assert not is_grouplike(H8, H8.basis_element(H8.index("z")))
    assert not is_grouplike(H8, (ZERO,) * 8)


def test_group_algebra_properties(group_pkgs):
    for pkg in group_pkgs.values():
        H = pkg.algebra
        assert (H.antipode @ H.antipode).is_identity()
        cayley, e = H.group
        for g in range(H.dim):
            assert is_grouplike(H, H.basis_element(g))
            ginv = antipode_inv(H).apply(H.basis_element(g))
            assert multiply(H, H.basis_element(g), ginv) == H.unit


def test_multiply_dimension_mismatch(H8):
    with pytest.raises(DimensionMismatch):
        multiply(H8, (ONE,), (ONE,))


def test_singular_antipode(H8):
    bad = rebuild(H8, antipode=Matrix.zeros(8, 8))
    with pytest.raises(SingularAntipode):
        antipode_inv(bad)


def test_antipode_commutes_with_automorphisms(h8, group_pkgs):
    for pkg in [h8, *group_pkgs.values()]:
        S = pkg.algebra.antipode
        for tau in pkg.automorphisms.values():
            assert S @ tau.map == tau.map @ S


def test_coassociativity_as_computed(H8):
    for b in range(8):
        left, right = {}, {}
        for (l, r), c in H8._dsp[b].items():
            for (a, a2), u in H8._dsp[l].items():
                left[(a, a2, r)] = left.get((a, a2, r), ZERO) + c * u
            for (a, a2), u in H8._dsp[r].items():
                right[(l, a, a2)] = right.get((l, a, a2), ZERO) + c * u
        clean = lambda d: {k: v for k, v in d.items() if v}  # noqa: E731
        assert clean(left) == clean(right)


# -- mutation tests -------------------------------------------------------------------


def test_mutation_single_case_has_witness(H8):
    mult = [[list(v) for v in row] for row in H8.mult]
    mult[1][2][0] = mult[1][2][0] + 1
    report = verify_axioms(rebuild(H8, mult=mult))
    assert not report.ok
    bad = report.first_failure
    assert bad.name == "associativity"
    assert bad.witness is not None and len(bad.witness) == 3


@pytest.mark.parametrize("delta", [1, -1])
def test_every_mult_mutation_fails(H8, delta):
    n = H8.dim
    for i, j, k in itertools.product(range(n), range(n), range(n)):
        mult = [[list(v) for v in row] for row in H8.mult]
        mult[i][j][k] = mult[i][j][k] + delta
        assert not verify_axioms(rebuild(H8, mult=mult), fail_fast=True).ok, (i, j, k)


@pytest.mark.parametrize("delta", [1, -1])
def test_every_comult_mutation_fails(H8, delta):
    n = H8.dim
    for k, l, r in itertools.product(range(n), range(n), range(n)):
        H = rebuild(H8, comult=sparse_comult(H8, k, l, r, delta))
        assert not verify_axioms(H, fail_fast=True).ok, (k, l, r)


def test_every_unit_counit_antipode_mutation_fails(H8):
    n = H8.dim
    for k in range(n):
        unit = list(H8.unit)
        unit[k] = unit[k] + 1
        assert not verify_axioms(rebuild(H8, unit=unit), fail_fast=True).ok
        eps = list(H8.counit_values)
        eps[k] = eps[k] + 1
        assert not verify_axioms(rebuild(H8, counit=eps), fail_fast=True).ok
    for i, j in itertools.product(range(n), range(n)):
        rows = [list(r) for r in H8.antipode.rows]
        rows[i][j] = rows[i][j] + 1
        assert not verify_axioms(rebuild(H8, antipode=Matrix(rows)), fail_fast=True).ok


def test_group_algebra_mutations(group_pkgs):
    H = group_pkgs["s3"].algebra
    for i, j in itertools.product(range(6), range(6)):
        mult = [[list(v) for v in row] for row in H.mult]
        mult[i][j][0] = mult[i][j][0] + 1
        assert not verify_axioms(rebuild(H, mult=mult), fail_fast=True).ok


# -- automorphisms --------------------------------------------------------------------


def test_h8_automorphism_orders(h8):
    assert [a.order for a in h8.automorphisms.values()] == [1, 2, 2, 2]


def test_h8_automorphism_images(h8):
    H = h8.algebra
    half = cyc("1/2")
    z = H.basis_element(H.index("z"))
    assert h8.automorphisms["tau2"].apply(z) == H.basis_element(H.index("xyz"))
    assert h8.automorphisms["tau3"].apply(z) == H.element({"z": half, "xz": half, "yz": half, "xyz": -half})
    assert h8.automorphisms["tau4"].apply(z) == H.element({"z": -half, "xz": half, "yz": half, "xyz": half})
    x = H.basis_element(H.index("x"))
    assert h8.automorphisms["tau3"].apply(x) == H.basis_element(H.index("y"))


def test_non_automorphisms_rejected(H8):
    # scaling z alone is linear and invertible but not multiplicative
    rows = [list(r) for r in Matrix.identity(8).rows]
    rows[4][4] = cyc(2)
    report = verify_automorphism(H8, Matrix(rows))
    assert not report.ok
    assert report.first_failure.name == "multiplicative"
    with pytest.raises(InvalidAutomorphism):
        make_automorphism(H8, Matrix(rows))
    # swapping x and z: not a coalgebra map
    perm = [0, 4, 2, 3, 1, 5, 6, 7]
    P = Matrix.from_columns([tuple(ONE if k == perm[j] else ZERO for k in range(8)) for j in range(8)])
    assert not verify_automorphism(H8, P).ok
    assert not verify_automorphism(H8, Matrix.zeros(8, 8)).ok


def test_infinite_order_map_rejected():
    # g -> 2g is not a Hopf map either, but the order check must fail on its own
    H = group_algebra(cyclic_table(2), name="C2")
    report = verify_automorphism(H, Matrix([[1, 0], [0, 2]]))
    order = next(c for c in report.checks if c.name == "finite_order")
    assert not order.passed


def test_group_automorphism_examples():
    C4 = group_algebra(cyclic_table(4), name="C4")
    inv = group_automorphism(C4, [0, 3, 2, 1], "inv")
    assert inv.order == 2
    with pytest.raises(NotAGroupAutomorphism):
        group_automorphism(C4, [0, 2, 1, 3])
    S3 = catalog.builtin("s3")
    orders = sorted(a.order for a in S3.automorphisms.values())
    assert orders == [1, 2, 2, 2, 3, 3]
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 1]])


def test_dual_examples(H8, h8):
    C2 = catalog.builtin("c2").algebra
    D = dual(C2)
    assert verify_axioms(D).ok
    assert is_commutative(D) and is_cocommutative(D) and D.dim == 2
    DH = dual(H8)
    assert verify_axioms(DH).ok
    assert same_structure(dual(DH), H8)
    for name, tau in h8.automorphisms.items():
        ts = dual_automorphism(tau, DH)
        assert ts.order == tau.order
        assert verify_automorphism(DH, ts.map).ok
    assert dual_automorphism(identity_automorphism(H8), DH).map.is_identity()


def test_dual_involution_on_groups(group_pkgs):
    for pkg in group_pkgs.values():
        assert same_structure(dual(dual(pkg.algebra)), pkg.algebra)


def test_tensor_examples(h8):
    C2 = catalog.builtin("c2")
    C3 = catalog.builtin("c3")
    T = tensor_product(C2.algebra, C3.algebra)
    assert verify_axioms(T).ok and T.dim == 6 and is_commutative(T)
    HT = tensor_product(h8.algebra, C2.algebra)
    assert HT.dim == 16 and verify_axioms(HT).ok
    g = tensor_automorphism(h8.automorphisms["tau2"], identity_automorphism(C2.algebra), HT)
    assert g.order == 2
    g = tensor_automorphism(catalog.builtin("c3").automorphisms["tau2"],
                            catalog.builtin("c4").automorphisms["tau2"])
    assert g.order == 2
    assert map_order(g.map, 10) == 2
