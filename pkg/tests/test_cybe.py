import random

import pytest

from threelie import catalog
from threelie.algebra import ThreeLieAlgebra
from threelie.cybe import (cybe_conditions, cybe_residual_naive, cybe_residual_skew, d_coefficient,
                           induced_coproduct_components, induced_coproduct_wedge, minor,
                           phi_relations, skew_normalize, wedge_coefficients)
from threelie.scalar import ONE, ZERO, Scalar, substitute
from threelie.tensor import Coproduct, RMatrix, Tensor, basis_wedge, is_fully_antisymmetric

from helpers import induced_expected, random_skew
from reference_tables import induced_delta_corrections, induced_delta_table, printed_conditions

R_23_14 = RMatrix.from_upper(4, {(2, 3): 1, (1, 4): 1})


def hand_d(r, ijk, pqr):
    """Six terms written out, independent of the loop in d_coefficient."""
    (i, j, k), (p, q, s) = ijk, pqr
    a = r.a
    return (a(i, p) * a(j, q) * a(k, s) + a(j, p) * a(k, q) * a(i, s) + a(k, p) * a(i, q) * a(j, s)
            - a(j, p) * a(i, q) * a(k, s) - a(i, p) * a(k, q) * a(j, s) - a(k, p) * a(j, q) * a(i, s))


def test_d_coefficient_fixture():
    assert d_coefficient(R_23_14, (1, 2, 3), (2, 3, 4)) == ONE
    assert hand_d(R_23_14, (1, 2, 3), (2, 3, 4)) == ONE


def test_d_coefficient_matches_hand_expansion_symbolically():
    r = RMatrix.symbolic_skew(4)
    for ijk, pqr in [((1, 2, 3), (2, 3, 4)), ((1, 2, 4), (1, 3, 4)), ((2, 3, 4), (1, 2, 3))]:
        assert d_coefficient(r, ijk, pqr) == hand_d(r, ijk, pqr)
    with pytest.raises(IndexError):
        d_coefficient(r, (1, 2, 5), (1, 2, 3))


def test_minor_definition():
    r = RMatrix.symbolic_skew(4)
    assert minor(r, (1, 2), (3, 4)) == r.a(1, 3) * r.a(2, 4) - r.a(2, 3) * r.a(1, 4)
    assert minor(r, (1, 2), (1, 2)) == Scalar.symbol("a_1_2") * Scalar.symbol("a_1_2")


def test_residual_fixture_dim4_2():
    A = catalog.algebra("dim4-2")
    naive = cybe_residual_naive(A, R_23_14)
    assert naive == basis_wedge(4, (1, 2, 3, 4))
    assert cybe_residual_skew(A, R_23_14) == naive


def test_zero_r():
    for cid in catalog.IDS:
        A = catalog.algebra(cid)
        zero = RMatrix.from_upper(A.dim, {})
        assert cybe_residual_naive(A, zero).is_zero()
        assert cybe_residual_skew(A, zero).is_zero()
        assert all(induced_coproduct_wedge(A, zero)[i].is_zero() for i in range(1, A.dim + 1))


@pytest.mark.parametrize("cid", catalog.IDS)
def test_naive_equals_skew_random(cid):
    rng = random.Random(cid)
    A = catalog.algebra(cid)
    for _ in range(5):
        r = random_skew(rng, A.dim, density=0.7)
        naive = cybe_residual_naive(A, r)
        assert naive == cybe_residual_skew(A, r)
        assert is_fully_antisymmetric(naive)


def test_skew_path_rejects_non_skew():
    A = catalog.algebra("dim4-1")
    r = RMatrix.from_entries(4, {(1, 2): 1, (2, 1): 1})
    with pytest.raises(ValueError):
        cybe_residual_skew(A, r)
    with pytest.raises(ValueError):
        induced_coproduct_wedge(A, r)
    # the naive path accepts it
    cybe_residual_naive(A, r)
    with pytest.raises(ValueError):
        cybe_residual_naive(catalog.algebra("dim3"), RMatrix.symbolic_skew(4))


def test_non_skew_residual_need_not_be_antisymmetric():
    A = catalog.algebra("dim4-1")
    r = RMatrix.from_entries(4, {(1, 1): 1, (2, 3): 1, (4, 4): 2})
    assert not is_fully_antisymmetric(cybe_residual_naive(A, r))


def test_dim4_5_symbolic_residual_has_single_coefficient():
    A = catalog.algebra("dim4-5")
    res = cybe_residual_skew(A, RMatrix.symbolic_skew(4))
    coeffs = wedge_coefficients(res)
    assert list(coeffs) == [(1, 2, 3, 4)]
    printed = printed_conditions()["dim4-5"]
    assert coeffs[(1, 2, 3, 4)] == 2 * printed


@pytest.mark.parametrize("cid", ["dim3", "dim4-1", "dim4-3", "dim4-4", "dim4-7"])
def test_conditions_empty(cid):
    assert cybe_conditions(catalog.algebra(cid)) == []


@pytest.mark.parametrize("cid", ["dim4-2", "dim4-5", "dim4-6"])
def test_conditions_match_printed(cid):
    gens = cybe_conditions(catalog.algebra(cid))
    assert len(gens) == 1
    printed = printed_conditions()[cid]
    assert gens[0] == printed.monic()


def test_skew_normalize():
    a21, a12 = Scalar.symbol("a_2_1"), Scalar.symbol("a_1_2")
    assert skew_normalize(a21 * a21 + Scalar.symbol("a_3_3")) == a12 * a12
    assert skew_normalize(Scalar.symbol("k")) == Scalar.symbol("k")


@pytest.mark.parametrize("cid", catalog.IDS)
def test_induced_table(cid):
    A = catalog.algebra(cid)
    r, expected = induced_expected(cid)
    got = induced_coproduct_wedge(A, r).wedge_coefficients()
    assert got == expected


@pytest.mark.parametrize("cid", catalog.IDS)
def test_allowlisted_cells_really_differ(cid):
    A = catalog.algebra(cid)
    r, printed = induced_delta_table(cid)
    got = induced_coproduct_wedge(A, r).wedge_coefficients()
    for (i, pqr), (note, fixed) in induced_delta_corrections(cid).items():
        assert printed.get(i, {}).get(pqr, ZERO) != got.get(i, {}).get(pqr, ZERO), note
        assert fixed == got.get(i, {}).get(pqr, ZERO), note


@pytest.mark.parametrize("cid", catalog.IDS)
def test_components_sum_to_wedge_formula(cid):
    A = catalog.algebra(cid)
    r = RMatrix.symbolic_skew(A.dim)
    d1, d2, d3 = induced_coproduct_components(A, r)
    assert d1 + d2 + d3 == induced_coproduct_wedge(A, r)
    two, three = phi_relations(d1)
    assert two == d2 and three == d3


def test_leg_order_sign():
    # listing the legs of Δ1 as y_j ⊗ y_i negates the sum
    A = catalog.algebra("dim4-1")
    r = RMatrix.symbolic_skew(4)
    d1, _, _ = induced_coproduct_components(A, r)
    swapped = d1.map_slots(lambda t: Tensor(3, 4, {(m, q, p): c for (m, p, q), c in t.items()}))
    assert swapped == -d1


def test_dim3_examples():
    A = catalog.algebra("dim3")
    r = RMatrix.from_upper(3, {(2, 3): 1})
    d1, d2, d3 = induced_coproduct_components(A, r)
    # [e1, e_i, e_j] is nonzero only for {i,j} = {2,3}; y_2 = e3, y_3 = -e2
    assert d1[1] == Tensor(3, 3, {(1, 3, 2): -ONE, (1, 2, 3): ONE})
    assert d1[2].is_zero() and d1[3].is_zero()
    delta = induced_coproduct_wedge(A, RMatrix.symbolic_skew(3))
    rs = RMatrix.symbolic_skew(3)
    assert delta[1] == basis_wedge(3, (1, 2, 3), minor(rs, (2, 3), (2, 3)))
    assert delta[2] == basis_wedge(3, (1, 2, 3), -minor(rs, (1, 3), (2, 3)))
    assert delta[3] == basis_wedge(3, (1, 2, 3), minor(rs, (1, 2), (2, 3)))


def test_dim4_3_example():
    A = catalog.algebra("dim4-3")
    r = RMatrix.symbolic_skew(4)
    delta = induced_coproduct_wedge(A, r)
    assert delta[1].is_zero()
    expected = (basis_wedge(4, (1, 2, 3), minor(r, (3, 4), (2, 3)))
                + basis_wedge(4, (1, 2, 4), minor(r, (3, 4), (2, 4)))
                + basis_wedge(4, (1, 3, 4), minor(r, (3, 4), (3, 4))))
    assert delta[2] == expected


@pytest.mark.parametrize("cid", catalog.IDS)
def test_induced_delta_is_alternating(cid):
    A = catalog.algebra(cid)
    assert induced_coproduct_wedge(A, RMatrix.symbolic_skew(A.dim)).is_alternating()


def test_conditions_on_custom_algebra():
    # the single bracket [e1,e2,e3] = e1 inside dimension 4
    A = ThreeLieAlgebra(4, {(1, 2, 3): [ONE, ZERO, ZERO, ZERO]})
    gens = cybe_conditions(A)
    assert gens
    r = RMatrix.symbolic_skew(4)
    coeffs = wedge_coefficients(cybe_residual_naive(A, r))
    assert {c.monic() for c in coeffs.values()} == set(gens)
    assert substitute(gens[0], {n: 0 for n in gens[0].variables()}).is_zero()
