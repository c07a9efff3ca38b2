import itertools

import pytest

from hopftwist import catalog
from hopftwist.cyclo import ZERO, cyc
from hopftwist.elim import rref
from hopftwist.errors import DimensionMismatch, InvalidRepresentation
from hopftwist.linalg import Matrix
from hopftwist.reps import (
    Representation,
    character,
    ensure_representation,
    one_dimensional,
    regular_representation,
    trivial_representation,
    verify_representation,
)

TABLE1 = {
    "V1": ["1", "1", "1", "1", "1", "1", "1", "1"],
    "V2": ["1", "1", "1", "1", "-1", "-1", "-1", "-1"],
    "V3": ["1", "-1", "-1", "1", "i", "-i", "-i", "i"],
    "V4": ["1", "-1", "-1", "1", "-i", "i", "i", "-i"],
    "V5": ["2", "0", "0", "-2", "0", "0", "0", "0"],
}


def test_h8_modules_verify(h8):
    for name in TABLE1:
        assert verify_representation(h8.modules[name]).ok


@pytest.mark.parametrize("name", sorted(TABLE1))
def test_h8_characters(h8, name):
    chi = character(h8.modules[name])
    assert list(chi.values) == [cyc(v) for v in TABLE1[name]]


def test_h8_v5_generators(h8):
    V5 = h8.modules["V5"]
    H = h8.algebra
    assert V5.action[H.index("x")] == Matrix([[1, 0], [0, -1]])
    assert V5.action[H.index("y")] == Matrix([[-1, 0], [0, 1]])
    assert V5.action[H.index("z")] == Matrix([[0, 1], [1, 0]])


def test_h8_characters_independent_and_dims(h8):
    rows = [list(character(h8.modules[n]).values) for n in TABLE1]
    _, piv = rref(rows, 8)
    assert len(piv) == 5
    assert sum(h8.modules[n].dim ** 2 for n in TABLE1) == 8


def test_trace_form_consistency(h8):
    H = h8.algebra
    for name in TABLE1:
        rep = h8.modules[name]
        chi = character(rep)
        for i, j in itertools.product(range(8), range(8)):
            assert chi(H.mult[i][j]) == (rep.action[i] @ rep.action[j]).trace()


def test_one_dimensional_characters_multiplicative(h8):
    H = h8.algebra
    for name in ("V1", "V2", "V3", "V4"):
        chi = character(h8.modules[name])
        for i, j in itertools.product(range(8), range(8)):
            assert chi[i] * chi[j] == chi(H.mult[i][j])


def test_trivial_and_regular(h8, group_pkgs):
    for pkg in [h8, *group_pkgs.values()]:
        H = pkg.algebra
        assert verify_representation(trivial_representation(H)).ok
        reg = regular_representation(H)
        assert verify_representation(reg).ok
        assert character(reg)[0] == H.dim


def test_regular_group_character(group_pkgs):
    for pkg in group_pkgs.values():
        H = pkg.algebra
        chi = character(regular_representation(H))
        e = H.group[1]
        assert [c == (H.dim if g == e else 0) for g, c in enumerate(chi.values)] == [True] * H.dim


def test_regular_c2_permutation_matrices():
    H = catalog.builtin("c2").algebra
    reg = regular_representation(H)
    assert reg.action[1] == Matrix([[0, 1], [1, 0]])


def test_perturbed_action_fails(h8):
    V5 = h8.modules["V5"]
    mats = list(V5.action)
    z = h8.algebra.index("z")
    mats[z] = mats[z] + Matrix([[1, 0], [0, 0]])
    bad = Representation(h8.algebra, "bad", 2, mats)
    report = verify_representation(bad)
    assert not report.ok
    assert report.first_failure.witness is not None and len(report.first_failure.witness) == 2
    with pytest.raises(InvalidRepresentation):
        ensure_representation(Representation(h8.algebra, "bad", 2, mats))


def test_representation_shape_errors(h8):
    with pytest.raises(DimensionMismatch):
        Representation(h8.algebra, "short", 1, [Matrix([[1]])])
    with pytest.raises(DimensionMismatch):
        Representation(h8.algebra, "wrong", 2, [Matrix([[1]])] * 8)


def test_s3_modules(group_pkgs):
    pkg = group_pkgs["s3"]
    for rep in pkg.modules.values():
        assert verify_representation(rep).ok
    std = character(pkg.modules["standard"])
    assert sorted(int(v.to_fraction()) for v in std.values) == [-1, -1, 0, 0, 0, 2]


def test_one_dimensional_helper(h8):
    rep = one_dimensional(h8.algebra, [1, 1, 1, 1, 0, 0, 0, 0], "not a module")
    assert not verify_representation(rep).ok
    assert character(rep)(h8.algebra.unit) == 1
    assert character(rep)((ZERO,) * 8) == 0
