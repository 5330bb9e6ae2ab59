"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py -v`` to get one PASSED/FAILED line
per criterion.
"""
import time

from lcg.catalog import (
    CATALOG,
    AlgebraId,
    admissible_params,
    inadmissible_reason,
    instantiate,
    predicted_cc_count,
    predicted_center,
    predicted_components,
    unsatisfiable_branches,
)
from lcg.graph import build_graph, components, components_naive
from lcg.lie import check_jacobi
from lcg.shapes import Windmill, check_clique_union, check_complete, check_windmill, detect_windmill
from lcg.verify import (
    verify,
    verify_decomposition,
    verify_direct_sum,
    verify_isomorphic_graphs_example,
    verify_codim_one_components,
)

from conftest import field_of

QS = (2, 3, 4, 5)


def _instances(dims, qs=QS):
    for q in qs:
        F = field_of(q)
        for name, entry in CATALOG.items():
            if entry.dim in dims:
                for aid in admissible_params(name, F):
                    yield aid, F


def test_ac01_small_dimension_component_counts():
    t = time.perf_counter()
    bad = []
    for aid, F in _instances({2, 3}):
        got = len(components(build_graph(instantiate(aid, F))))
        if got != predicted_cc_count(aid, F):
            bad.append((str(aid), F.q, got))
    elapsed = time.perf_counter() - t
    print(f"dims 2-3 over q in {QS}: {elapsed:.2f}s")
    assert not bad
    assert elapsed < 1


def test_ac02_dimension_4_component_counts():
    t = time.perf_counter()
    bad, checked = [], 0
    for aid, F in _instances({4}):
        got = len(components(build_graph(instantiate(aid, F))))
        want = predicted_cc_count(aid, F)
        checked += 1
        if got != want:
            bad.append(f"{aid} over GF({F.q}): computed {got}, formula {want}")
    for q in QS:
        F = field_of(q)
        assert inadmissible_reason("N4_9", F)[0] == "unsatisfiable_over_finite_field"
        assert [name for name, _ in unsatisfiable_branches(F)] == ["N4_10 (alpha*beta not a square)"]
    elapsed = time.perf_counter() - t
    print(f"{checked} dim-4 instances in {elapsed:.2f}s")
    assert elapsed < 30
    assert not bad, "\n".join(bad)


def test_ac03_codim_one_size_multisets():
    applicable = 0
    for aid, F in _instances({2, 3, 4}):
        r = verify_codim_one_components(instantiate(aid, F))
        if r.applicable:
            applicable += 1
            assert r.passed, (str(aid), F.q, r.to_dict())
    assert applicable > 0


def test_ac04_shape_suite():
    for q in (3, 5):
        F = field_of(q)
        g = build_graph(instantiate(AlgebraId("N4_11"), F))
        part = g.partition
        non_complete = [c for c in part if not g.is_clique(c)]
        assert len(non_complete) == 1
        found = detect_windmill(g, non_complete[0])
        assert found.uniform
        assert (len(found.core), len(found.blades[0]), len(found.blades)) == (q - 1, (q - 1) * q, q + 1)
        rest = [c for c in part if c is not non_complete[0]]
        assert len(rest) == q**3
        assert all(check_complete(g, c, q - 1).matched for c in rest)
    for q in QS:
        F = field_of(q)
        for aid in admissible_params("N4_12", F):
            g = build_graph(instantiate(aid, F))
            wind = max(g.partition, key=len)
            assert check_windmill(g, wind, Windmill(q - 1, (q - 1) * q, q + 1)).matched
            assert all(check_complete(g, c, q - 1).matched for c in g.partition if c is not wind)
            assert len(g.partition) == q**3 + 1
    for q in (2, 4):
        F = field_of(q)
        for aid in admissible_params("N4_10", F):
            g = build_graph(instantiate(aid, F))
            big = predicted_components(aid, F).components[0]
            comp = g.partition.component_of(min(big.vertices))
            assert check_clique_union(g, comp, big.parts, big.shape).matched


def test_ac05_kernel_method_matches_naive_oracle():
    for aid, F in _instances({2, 3, 4}, qs=(2, 3)):
        g = build_graph(instantiate(aid, F))
        if g.vertex_count <= 4096:
            assert components(g) == components_naive(g), (str(aid), F.q)


def test_ac06_non_isomorphic_algebras_same_components():
    for q in (2, 3, 5):
        assert verify_isomorphic_graphs_example(field_of(q)).passed


def test_ac07_abelian_summand_preserves_components():
    for q in (2, 3):
        F = field_of(q)
        N2 = instantiate(AlgebraId("N2"), F)
        r = verify_direct_sum(N2, 2)
        assert r.passed and r.cc_sum == len(components(build_graph(N2)))
        N330 = instantiate(AlgebraId("N3_3", (0,)), F)
        r = verify_direct_sum(N330, 1)
        n44 = components(build_graph(instantiate(AlgebraId("N4_4"), F)))
        assert r.passed and r.cc_sum == len(n44)
        assert verify_decomposition(AlgebraId("N4_4"), F)["passed"]


def test_ac08_jacobi_and_center_for_every_instance():
    count = 0
    for aid, F in _instances({2, 3, 4}):
        L = instantiate(aid, F)
        check_jacobi(L)
        assert build_graph(L).center == predicted_center(aid, F), (str(aid), F.q)
        count += 1
    assert count > 0


def test_ac09_n4_7_is_connected():
    for q in QS:
        assert len(components(build_graph(instantiate(AlgebraId("N4_7"), field_of(q))))) == 1


def test_ac10_n4_1_over_gf9_under_10_seconds():
    t = time.perf_counter()
    r = verify(AlgebraId("N4_1"), field_of(9))
    elapsed = time.perf_counter() - t
    print(f"N4_1 over GF(9): {r.computed['vertices']} vertices in {elapsed:.2f}s")
    assert r.computed["vertices"] == 6560
    assert r.passed
    assert elapsed < 10
