import pytest

from lcg.catalog import (
    CATALOG,
    AlgebraId,
    admissible_params,
    check_admissible,
    decomposition,
    inadmissible_reason,
    instantiate,
    is_admissible,
    parse_id,
    predicted_cc_count,
    predicted_center,
    predicted_components,
    unsatisfiable_branches,
)
from lcg.errors import ConditionViolated, UnsatisfiableOverFiniteField
from lcg.field import make_field
from lcg.graph import build_graph
from lcg.lie import center, lie_make
from lcg.linalg import span
from lcg.shapes import CliqueUnion, Complete, Windmill

from conftest import SMALL_Q, field_of


def all_instances(qs=SMALL_Q):
    for q in qs:
        F = field_of(q)
        for name in CATALOG:
            for aid in admissible_params(name, F):
                yield aid, F


INSTANCES = list(all_instances())
IDS = [f"{a}-GF{F.q}" for a, F in INSTANCES]


def test_catalog_has_every_row():
    assert list(CATALOG) == [
        "N2", "N3_1", "N3_2", "N3_3",
        "N4_1", "N4_2", "N4_3", "N4_4", "N4_5", "N4_6", "N4_7",
        "N4_8", "N4_9", "N4_10", "N4_11", "N4_12", "N4_13",
    ]  # fmt: skip


def test_parse_id():
    assert parse_id("n4_8").name == "N4_8"
    assert parse_id("N_{4,10}").name == "N4_10"
    with pytest.raises(KeyError):
        parse_id("N5_1")


def test_instantiate_n4_8_gf2():
    L = instantiate(AlgebraId("N4_8", (1,)), make_field(2))
    assert L.structure_constant(4, 1) == (1, 1, 0, 0)
    assert L.structure_constant(1, 4) == (1, 1, 0, 0)  # -1 = 1 in GF(2)


def test_instantiate_n4_8_with_root_rejected():
    with pytest.raises(ConditionViolated):
        instantiate(AlgebraId("N4_8", (0,)), make_field(2))  # T(T - 1) has roots
    with pytest.raises(ConditionViolated):
        instantiate(AlgebraId("N4_8", (2,)), make_field(3))  # T^2 - T - 2 = (T - 2)(T + 1)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_n4_9_unsatisfiable_in_char_2(q):
    F = field_of(q)
    for a in range(q):
        with pytest.raises(UnsatisfiableOverFiniteField):
            instantiate(AlgebraId("N4_9", (a,)), F)
    assert inadmissible_reason("N4_9", F)[0] == "unsatisfiable_over_finite_field"


def test_n4_10_conditions():
    F2 = make_field(2)
    instantiate(AlgebraId("N4_10", (1, 0)), F2)
    with pytest.raises(ConditionViolated):
        instantiate(AlgebraId("N4_10", (0, 0)), F2)
    with pytest.raises(ConditionViolated):
        instantiate(AlgebraId("N4_10", (1, 1)), F2)
    with pytest.raises(ConditionViolated):
        instantiate(AlgebraId("N4_10", (1, 0)), make_field(3))
    assert unsatisfiable_branches(F2)[0][0].startswith("N4_10")


def test_n4_12_and_n4_13_need_nonzero_alpha():
    F = make_field(3)
    for name in ("N4_12", "N4_13"):
        assert not is_admissible(AlgebraId(name, (0,)), F)
        assert [a.params for a in admissible_params(name, F)] == [(1,), (2,)]


def test_parameter_arity_checked():
    with pytest.raises(ValueError):
        check_admissible(AlgebraId("N4_5", (1,)), make_field(2))
    with pytest.raises(ValueError):
        check_admissible(AlgebraId("N3_2", (7,)), make_field(3))


def test_predicted_cc_count_examples():
    assert predicted_cc_count(AlgebraId("N2"), 2) == 3
    assert predicted_cc_count(AlgebraId("N4_8", (1,)), 2) == 6
    assert predicted_cc_count(AlgebraId("N4_13", (1,)), 3) == 13
    assert predicted_cc_count(AlgebraId("N4_11"), 4) == 21
    assert predicted_cc_count(AlgebraId("N4_11"), 5) == 126


def test_predicted_components_n3_3_0():
    F = make_field(2)
    pred = predicted_components(AlgebraId("N3_3", (0,)), F)
    assert len(pred.components) == 3
    assert all(isinstance(c.shape, Complete) and c.shape.size == 2 for c in pred.components)
    assert pred.components[0].vertices == frozenset({1, 3})  # e1, e1 + e2


def test_predicted_components_n4_11_gf3():
    pred = predicted_components(AlgebraId("N4_11"), make_field(3))
    shapes = [c.shape for c in pred.components]
    assert shapes.count(Windmill(2, 6, 4)) == 1
    assert shapes.count(Complete(2)) == 27 and len(shapes) == 28


def test_predicted_components_n4_7_gf2():
    pred = predicted_components(AlgebraId("N4_7"), make_field(2))
    (c,) = pred.components
    assert isinstance(c.shape, CliqueUnion) and len(c.vertices) == 15


def test_predicted_center_examples():
    F3 = make_field(3)
    assert predicted_center(AlgebraId("N4_3"), F3) == span(F3, 4, [(1, 0, 0, 0), (0, 1, 2, 0)])
    assert predicted_center(AlgebraId("N4_11"), make_field(2)).basis == ((0, 1, 0, 0),)
    assert predicted_center(AlgebraId("N4_11"), F3).dim == 0
    assert predicted_center(AlgebraId("N3_2", (1,)), F3).dim == 0
    assert predicted_center(AlgebraId("N4_5", (0, 2)), F3) == span(F3, 4, [(2, 1, 2, 0)])


def test_n4_10_gamma_enumeration_count():
    for q in (2, 4, 8):
        F = field_of(q)
        for aid in admissible_params("N4_10", F)[:3]:
            assert 1 + q**2 + q**2 * (q - 1) == q**3 + 1 == predicted_cc_count(aid, F)
            if q < 8:
                assert len(predicted_components(aid, F).components) == q**3 + 1


def test_decomposition_metadata():
    assert decomposition(AlgebraId("N4_2", (0,))) == (AlgebraId("N3_1"), 1)
    assert decomposition(AlgebraId("N4_2", (1,))) is None
    assert decomposition(AlgebraId("N4_3")) == (AlgebraId("N2"), 2)
    assert decomposition(AlgebraId("N4_4")) == (AlgebraId("N3_3", (0,)), 1)
    assert decomposition(AlgebraId("N4_5", (0, 2))) == (AlgebraId("N3_2", (2,)), 1)
    assert decomposition(AlgebraId("N4_6", (0, 1))) == (AlgebraId("N3_3", (1,)), 1)
    assert decomposition(AlgebraId("N4_7")) is None


@pytest.mark.parametrize("aid,F", INSTANCES, ids=IDS)
def test_center_matches_prediction(aid, F):
    L = instantiate(aid, F)
    assert center(L) == predicted_center(aid, F)


@pytest.mark.parametrize("aid,F", INSTANCES, ids=IDS)
def test_predicted_components_partition_vertices(aid, F):
    pred = predicted_components(aid, F)
    assert pred.partition_problems() == []
    assert len(pred.components) == pred.cc_count
    assert sum(len(c.vertices) for c in pred.components) == F.q**pred.n - F.q**pred.center.dim


@pytest.mark.parametrize("aid,F", INSTANCES, ids=IDS)
def test_predicted_components_equal_computed(aid, F):
    part = build_graph(instantiate(aid, F)).partition
    pred = predicted_components(aid, F)
    assert {c.vertices for c in pred.components} == {frozenset(c) for c in part}


def test_structure_constants_match_listed_brackets():
    # spot-check sign conventions against hand-written constants
    F = make_field(5)
    a, b = 2, 3
    L = instantiate(AlgebraId("N4_6", (a, b)), F)
    ref = lie_make(F, 4, [(4, 1, (0, 1, 0, 0)), (4, 2, (0, 0, 1, 0)), (4, 3, (a, b, 0, 0))])
    assert L == ref
    L = instantiate(AlgebraId("N4_2", (a,)), F)
    ref = lie_make(F, 4, [(4, 1, (1, 0, 0, 0)), (4, 2, (0, 0, 1, 0)), (4, 3, (0, F.neg(a), F.add(a, 1), 0))])
    assert L == ref
