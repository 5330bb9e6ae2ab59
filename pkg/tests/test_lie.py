import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from lcg.catalog import CATALOG, AlgebraId, admissible_params, instantiate
from lcg.errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, JacobiViolation
from lcg.field import make_field
from lcg.lie import (
    abelian,
    adjoint,
    adjoint_kernel,
    algebra_from_dict,
    algebra_to_dict,
    bracket,
    center,
    derived_algebra,
    derived_series,
    direct_sum,
    is_abelian,
    is_one_step_solvable,
    is_solvable,
    lie_make,
    load_algebra,
)
from lcg.linalg import full_space, intersect, lin_comb, span, subspace_sum

from conftest import SMALL_Q, field_of


def n2(F):
    return lie_make(F, 2, [(1, 2, (1, 0))], name="N2")


def test_lie_make_n2():
    L = n2(make_field(2))
    assert L.dim == 2 and L.structure_constant(1, 2) == (1, 0)


def test_abelian_construction():
    L = lie_make(make_field(3), 3, [])
    assert L.brackets == ()
    assert center(L) == full_space(L.field, 3)


def test_jacobi_violation_reports_triple():
    F = make_field(2)
    # [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e3: the Jacobi sum on (1,2,3) is e1 + e3
    with pytest.raises(JacobiViolation) as exc:
        lie_make(F, 3, [(1, 2, (0, 0, 1)), (1, 3, (1, 0, 0)), (2, 3, (0, 0, 1))])
    assert exc.value.triple == (1, 2, 3)


def test_jacobi_holds_for_sl2_like_constants_over_gf3():
    # [e1,e2]=e3, [e3,e1]=2e1, [e3,e2]=-2e2 satisfies Jacobi
    F = make_field(3)
    lie_make(F, 3, [(1, 2, (0, 0, 1)), (3, 1, (2, 0, 0)), (3, 2, (0, 1, 0))])


def test_index_and_length_errors():
    F = make_field(2)
    with pytest.raises(IndexOutOfRange):
        lie_make(F, 2, [(1, 3, (1, 0))])
    with pytest.raises(IndexOutOfRange):
        lie_make(F, 2, [(1, 1, (1, 0))])
    with pytest.raises(DimensionMismatch):
        lie_make(F, 2, [(1, 2, (1, 0, 0))])


def test_reversed_pair_is_sign_flipped():
    F = make_field(3)
    L = lie_make(F, 2, [(2, 1, (1, 0))])
    assert L.structure_constant(1, 2) == (2, 0)
    assert bracket(L, (1, 0), (0, 1)) == (2, 0)


def test_bracket_examples():
    for q in (2, 3, 5):
        L = n2(field_of(q))
        assert bracket(L, (1, 0), (0, 1)) == (1, 0)
    F = make_field(2)
    N31 = instantiate(AlgebraId("N3_1"), F)
    assert bracket(N31, (0, 0, 1), (1, 1, 0)) == (1, 1, 0)


def test_bracket_rejects_wrong_length():
    with pytest.raises(DimensionMismatch):
        bracket(n2(make_field(2)), (1, 0, 0), (0, 1))


def test_center_examples():
    F = make_field(3)
    assert center(instantiate(AlgebraId("N4_4"), F)) == span(F, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    assert center(instantiate(AlgebraId("N3_2", (0,)), F)) == span(F, 3, [(1, 2, 0)])
    assert center(abelian(F, 3)).dim == 3


def test_derived_examples():
    F = make_field(3)
    L = n2(F)
    assert derived_algebra(L) == span(F, 2, [(1, 0)])
    assert is_solvable(L) and is_one_step_solvable(L)
    N41 = instantiate(AlgebraId("N4_1"), F)
    D = derived_algebra(N41)
    assert D == span(F, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    assert is_abelian(N41, D)
    assert derived_algebra(abelian(F, 3)).dim == 0


def test_derived_series_terminates():
    F = make_field(2)
    series = derived_series(instantiate(AlgebraId("N4_12", (1,)), F))
    assert series[-1].dim == 0
    assert [s.dim for s in series] == sorted((s.dim for s in series), reverse=True)


def test_adjoint_examples():
    F = make_field(3)
    L = n2(F)
    assert adjoint(L, (0, 0)) == [[0, 0], [0, 0]]
    assert adjoint_kernel(L, (0, 0)) == full_space(F, 2)
    assert adjoint(L, (0, 1)) == [[2, 0], [0, 0]]  # e1 -> -e1
    assert adjoint_kernel(L, (0, 1)) == span(F, 2, [(0, 1)])
    N47 = instantiate(AlgebraId("N4_7"), F)
    assert adjoint_kernel(N47, (1, 0, 0, 0)) == span(F, 4, [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])


def test_direct_sum_examples():
    F = make_field(2)
    S = direct_sum(n2(F), abelian(F, 2))
    assert S.dim == 4 and center(S) == span(F, 4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert direct_sum(abelian(F, 1), abelian(F, 2)).brackets == ()
    with pytest.raises(FieldMismatch):
        direct_sum(n2(F), n2(make_field(3)))


def test_n2_plus_n2_is_n47_after_relabelling():
    # f1 = -e2, f2 = e1, f3 = -e4, f4 = e3 carries N4_7's brackets onto N2 + N2
    for q in (2, 3, 5):
        F = field_of(q)
        S = direct_sum(n2(F), n2(F))
        N47 = instantiate(AlgebraId("N4_7"), F)
        m = F.neg(1)
        images = [(0, m, 0, 0), (1, 0, 0, 0), (0, 0, 0, m), (0, 0, 1, 0)]
        for i, j in itertools.combinations(range(4), 2):
            lhs = bracket(S, images[i], images[j])
            c = N47.structure_constant(i + 1, j + 1)
            assert lhs == lin_comb(F, c, images, 4)


def test_json_round_trip(tmp_path):
    F = make_field(2, 2)
    L = instantiate(AlgebraId("N4_10", (1, 0)), F)
    doc = algebra_to_dict(L)
    assert doc["field"] == "2^2" and doc["poly"] == [1, 1, 1]
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    assert load_algebra(path) == L
    assert algebra_from_dict({"field": "2", "dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [1, 0]}]}) == n2(
        make_field(2)
    )


def _catalog_instances(qs):
    for q in qs:
        F = field_of(q)
        for name in CATALOG:
            for aid in admissible_params(name, F):
                yield instantiate(aid, F)


@pytest.mark.parametrize("q", SMALL_Q)
def test_alternating_exhaustive(q):
    for L in _catalog_instances([q]):
        if L.field.q**L.n > 1000:
            continue
        vecs = list(itertools.product(range(L.field.q), repeat=L.n))
        for x in vecs:
            assert not any(bracket(L, x, x))
        for x, y in itertools.product(vecs[:12], vecs):
            assert bracket(L, x, y) == tuple(L.field.neg(c) for c in bracket(L, y, x))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_one_step_solvable_hypotheses(q):
    F = field_of(q)
    ids = [AlgebraId("N4_1")]
    ids += [a for a in admissible_params("N4_2", F) if a.params[0]]
    ids += [a for n in ("N4_5", "N4_6") for a in admissible_params(n, F) if a.params[0]]
    for aid in ids:
        L = instantiate(aid, F)
        D, Z = derived_algebra(L), center(L)
        assert is_one_step_solvable(L)
        assert intersect(D, Z).dim == 0
        assert subspace_sum(D, Z).dim == 3


_instances = list(_catalog_instances([2, 3, 4, 5]))


@given(st.sampled_from(_instances), st.data())
@settings(max_examples=200)
def test_bilinear_and_jacobi_random(L, data):
    F, n = L.field, L.n
    vec = st.tuples(*[st.integers(0, F.q - 1)] * n)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    a, b = data.draw(st.integers(0, F.q - 1)), data.draw(st.integers(0, F.q - 1))
    ax_by = lin_comb(F, (a, b), (x, y), n)
    assert bracket(L, ax_by, z) == lin_comb(F, (a, b), (bracket(L, x, z), bracket(L, y, z)), n)
    jac = lin_comb(
        F,
        (1, 1, 1),
        (bracket(L, x, bracket(L, y, z)), bracket(L, y, bracket(L, z, x)), bracket(L, z, bracket(L, x, y))),
        n,
    )
    assert not any(jac)
