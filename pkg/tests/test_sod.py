import itertools
from fractions import Fraction

import numpy as np
import pytest

from fano_k0.chow import ParentMismatchError
from fano_k0.ktheory import KClass, euler, from_coordinates, line_bundle, mukai_ch, structure_sheaf, structure_sheaf_basis
from fano_k0.lattice import det, hnf_basis, solve_integer
from fano_k0.registry import from_genus, validate
from fano_k0.sod import (
    check_exceptional,
    index1_complement_generators,
    index2_complement_generators,
    pairing_matrix,
    right_orthogonal,
    standard_collection,
    verify_complement_isometry,
)

from conftest import DESCRIPTORS, INDEX2

EVEN_GENERA = [2, 4, 6, 8, 10, 12]


@pytest.mark.parametrize("f", INDEX2, ids=str)
def test_line_bundle_pair_on_index2(f):
    rep = check_exceptional([line_bundle(f, 0), line_bundle(f, 1)])
    assert rep.numerically_exceptional
    assert rep.self_chis == [1, 1]
    assert rep.verdict == "numerically exceptional"


@pytest.mark.parametrize("g", EVEN_GENERA)
def test_mukai_pair(g):
    f = from_genus(g)
    rep = check_exceptional([mukai_ch(f, 2, g // 2), structure_sheaf(f, "X")])
    assert rep.numerically_exceptional


def test_point_and_structure_sheaf_order():
    f = validate(2, 3)
    o, p = structure_sheaf(f, "X"), structure_sheaf(f, "P")
    bad = check_exceptional([o, p])
    # chi(O_P, O_P) = 0 is also recorded
    assert (1, 0, -1) in bad.offending_pairs
    assert (1, 1, 0) in bad.offending_pairs
    other = check_exceptional([p, o])
    assert (1, 0, 1) in other.offending_pairs
    assert all(v != -1 for _, _, v in other.offending_pairs)


def test_mixed_parents():
    with pytest.raises(ParentMismatchError):
        check_exceptional([line_bundle(validate(2, 3), 0), line_bundle(validate(2, 4), 0)])
    with pytest.raises(ParentMismatchError):
        right_orthogonal([line_bundle(validate(2, 3), 0), line_bundle(validate(2, 4), 0)])


@pytest.mark.parametrize("d", range(1, 6))
def test_index2_complement(d):
    f = validate(2, d)
    comp = right_orthogonal([line_bundle(f, 0), line_bundle(f, 1)])
    assert comp.rank == 2
    gens = index2_complement_generators(d)
    assert comp.spanned_by(gens)
    assert [[euler(a, b) for b in gens] for a in gens] == [[-1, -1], [1 - d, -d]]
    for g in comp.generators:
        for b in comp.basis:
            assert euler(g, b) == 0


@pytest.mark.parametrize("g", EVEN_GENERA)
def test_index1_complement(g):
    f = from_genus(g)
    comp = right_orthogonal([structure_sheaf(f, "X"), mukai_ch(f, 2, g // 2)])
    assert comp.rank == 2
    gens = index1_complement_generators(g)
    assert all(v.in_lattice for v in gens)
    assert comp.spanned_by(gens)
    assert [[euler(a, b) for b in gens] for a in gens] == [[1 - g // 2, -g // 2], [3 - g, 1 - g]]


@pytest.mark.parametrize("f", DESCRIPTORS, ids=str)
def test_full_basis_has_zero_complement(f):
    assert right_orthogonal(structure_sheaf_basis(f)).rank == 0


@pytest.mark.parametrize("f", DESCRIPTORS, ids=str)
def test_rank_drops_by_length(f):
    coll = standard_collection(f, "lines")
    assert check_exceptional(coll).numerically_exceptional
    assert right_orthogonal(coll).rank == 4 - len(coll)
    for m in range(1, len(coll) + 1):
        assert right_orthogonal(coll[:m]).rank == 4 - m


BOX = np.array(list(itertools.product(range(-20, 21), repeat=4)), dtype=np.int64)


@pytest.mark.parametrize(
    "f",
    [validate(2, d) for d in range(1, 6)] + [from_genus(g) for g in EVEN_GENERA],
    ids=str,
)
def test_complement_against_enumeration(f):
    coll = standard_collection(f)
    comp = right_orthogonal(coll)
    m = np.array(pairing_matrix(coll), dtype=np.int64)
    hits = BOX[~(BOX @ m.T).any(axis=1)]
    for v in hits:
        assert solve_integer(comp.coordinates, v.tolist()) is not None
    # HNF is canonical, so span equality is basis equality
    assert hnf_basis(hits.tolist()) == comp.coordinates


def test_pairing_matrix_clears_denominators():
    f = from_genus(5)
    e = mukai_ch(f, 2, Fraction(5, 2))
    rows = pairing_matrix([e])
    assert all(isinstance(x, int) for x in rows[0])
    comp = right_orthogonal([e])
    assert comp.rank == 3


@pytest.mark.parametrize("d", range(1, 6))
def test_verify_complement_isometry(d):
    rep = verify_complement_isometry(d)
    assert rep.passed
    assert [[0, 1], [-1, -2]] in rep.witnesses
    assert rep.g == 2 * d + 2
    assert abs(det(rep.gram_a)) == abs(det(rep.gram_b))


def test_verify_complement_isometry_d3_values():
    rep = verify_complement_isometry(3)
    assert rep.product == [[-3, -4], [-5, -7]] == rep.gram_a
    assert rep.gram_b == [[-1, -1], [-2, -3]]
    obj = rep.to_json()
    assert set(obj) >= {"d", "g", "gramA", "gramB", "witnesses", "basisA", "basisB"}
    assert [["0", "1"], ["-1", "-2"]] in obj["witnesses"]


def test_verify_complement_isometry_range():
    with pytest.raises(ValueError):
        verify_complement_isometry(6)


def test_standard_collection_kinds():
    with pytest.raises(ValueError):
        standard_collection(from_genus(5), "mukai")
    with pytest.raises(ValueError):
        standard_collection(validate(2, 1), "bogus")
    assert len(standard_collection(from_genus(5))) == 1
