"""Compare computed commuting graphs against the catalog predictions.

Every check returns a plain dataclass whose ``to_dict`` output is JSON-ready.
Reports are deterministic apart from the ``timings`` block.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import (
    CATALOG,
    AlgebraId,
    admissible_params,
    decomposition,
    inadmissible_reason,
    instantiate,
    predicted_components,
    unsatisfiable_branches,
)
from .errors import ConditionViolated, UnsatisfiableOverFiniteField
from .field import FieldSpec, make_field, prime_power
from .graph import CommutingGraph, ComponentPartition, components
from .lie import LieAlgebra, abelian, center, derived_algebra, direct_sum, is_one_step_solvable
from .linalg import intersect, subspace_sum
from .shapes import ShapeReport, check_shape, shape_to_dict

SCHEMA = 1
MAX_Q_BOUND = 9


def field_to_dict(F: FieldSpec) -> dict:
    return {"label": F.label(), "q": F.q, "p": F.p, "k": F.k, "modulus": list(F.modulus)}


def _sizes(multiset) -> list[list[int]]:
    return [[s, c] for s, c in multiset]


@dataclass
class VerificationReport:
    field: dict
    algebra: dict
    params: dict
    computed: dict | None
    predicted: dict | None
    verdict: dict
    timings: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return self.verdict["status"]

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "schema": SCHEMA,
            "field": self.field,
            "algebra": self.algebra,
            "params": self.params,
            "computed": self.computed,
            "predicted": self.predicted,
            "verdict": self.verdict,
        }
        if timings:
            d["timings"] = self.timings
        return d


def _skipped(aid: AlgebraId, F: FieldSpec, exc: ConditionViolated) -> VerificationReport:
    entry = CATALOG[aid.name]
    status = "unsatisfiable" if isinstance(exc, UnsatisfiableOverFiniteField) else "inadmissible"
    return VerificationReport(
        field=field_to_dict(F),
        algebra={"id": aid.name, "label": entry.label, "dim": entry.dim},
        params=dict(zip(entry.slots, aid.params)),
        computed=None,
        predicted=None,
        verdict={"status": status, "error": type(exc).__name__, "reason": exc.reason},
    )


def _shape_results(g: CommutingGraph, part: ComponentPartition, pred) -> list[dict]:
    """Check each predicted component against the computed one with the same vertex set."""
    computed = {frozenset(c): i for i, c in enumerate(part.components)}
    out = []
    for c in pred.components:
        cid = computed.get(c.vertices)
        if cid is None:
            report = ShapeReport(
                False,
                shape_to_dict(c.shape),
                {"kind": "missing"},
                "no computed component has the predicted vertex set",
            )
        else:
            report = check_shape(g, c.vertices, c.shape, c.parts)
        out.append({"family": c.family, "component": cid, "size": len(c.vertices), **report.to_dict()})
    return out


def verify(aid: AlgebraId, F: FieldSpec, check_shapes: bool = False) -> VerificationReport:
    """Build the algebra, compute its components and compare with the catalog."""
    entry = CATALOG[aid.name]
    t0 = time.perf_counter()
    try:
        L = instantiate(aid, F)
    except ConditionViolated as exc:
        return _skipped(aid, F, exc)
    t1 = time.perf_counter()
    g = CommutingGraph(L)
    part = components(g)
    t2 = time.perf_counter()
    pred = predicted_components(aid, F)
    t3 = time.perf_counter()

    computed = {
        "center": [list(b) for b in g.center.basis],
        "vertices": g.vertex_count,
        "cc_count": len(part),
        "sizes": _sizes(part.size_multiset()),
    }
    predicted = {
        "center": [list(b) for b in pred.center.basis],
        "vertices": pred.vertex_count,
        "cc_count": pred.cc_count,
        "cc_formula": pred.cc_formula,
        "sizes": _sizes(pred.size_multiset()),
        "families": [{"family": f, "shape": k, "count": n} for f, k, n in pred.families()],
        "partition_problems": pred.partition_problems(),
    }
    if check_shapes:
        computed["shapes"] = _shape_results(g, part, pred)
        predicted["shapes"] = [shape_to_dict(c.shape) for c in pred.components]
    t4 = time.perf_counter()

    divergence = None
    for key in ("center", "vertices", "cc_count", "sizes"):
        if computed[key] != predicted[key]:
            divergence = f"{key}: computed {computed[key]} != predicted {predicted[key]}"
            break
    if divergence is None and check_shapes:
        bad = next((s for s in computed["shapes"] if not s["matched"]), None)
        if bad is not None:
            divergence = f"shape of {bad['family']}: {bad['mismatch']}"
    verdict = {"status": "fail" if divergence else "pass", "first_divergence": divergence}
    return VerificationReport(
        field=field_to_dict(F),
        algebra={"id": aid.name, "label": entry.label, "dim": entry.dim},
        params=dict(zip(entry.slots, aid.params)),
        computed=computed,
        predicted=predicted,
        verdict=verdict,
        timings={
            "build": round(t1 - t0, 6),
            "components": round(t2 - t1, 6),
            "predict": round(t3 - t2, 6),
            "shapes": round(t4 - t3, 6),
            "total": round(t4 - t0, 6),
        },
    )


def compute_report(L: LieAlgebra) -> dict:
    """Components of an arbitrary algebra, with the component-count theorem when it applies."""
    g = CommutingGraph(L)
    part = components(g)
    return {
        "schema": SCHEMA,
        "field": field_to_dict(L.field),
        "algebra": {"id": L.name or "custom", "dim": L.n},
        "computed": {
            "center": [list(b) for b in g.center.basis],
            "vertices": g.vertex_count,
            "cc_count": len(part),
            "sizes": _sizes(part.size_multiset()),
        },
        "codim_one_theorem": verify_codim_one_components(L).to_dict(),
    }


# -- structural checks ------------------------------------------------------------

@dataclass
class TheoremReport:
    applicable: bool
    hypotheses: dict
    dim_derived: int
    dim_center: int
    expected_cc_count: int | None = None
    expected_sizes: list | None = None
    computed_cc_count: int | None = None
    computed_sizes: list | None = None
    all_complete: bool | None = None

    @property
    def passed(self) -> bool | None:
        """None when the hypotheses fail, otherwise whether every prediction held."""
        if not self.applicable:
            return None
        return (
            self.expected_cc_count == self.computed_cc_count
            and self.expected_sizes == self.computed_sizes
            and bool(self.all_complete)
        )

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "hypotheses": self.hypotheses,
            "dim_derived": self.dim_derived,
            "dim_center": self.dim_center,
            "expected_cc_count": self.expected_cc_count,
            "expected_sizes": self.expected_sizes,
            "computed_cc_count": self.computed_cc_count,
            "computed_sizes": self.computed_sizes,
            "all_complete": self.all_complete,
            "passed": self.passed,
        }


def codim_one_hypotheses(L: LieAlgebra) -> dict:
    D, Z = derived_algebra(L), center(L)
    return {
        "one_step_solvable": is_one_step_solvable(L),
        "derived_meets_center_trivially": intersect(D, Z).dim == 0,
        "derived_plus_center_has_codim_1": subspace_sum(D, Z).dim == L.n - 1,
    }


def verify_codim_one_components(L: LieAlgebra) -> TheoremReport:
    """Check the component structure forced when L1 + Z has codimension one.

    If L is 1-step solvable, L1 meets Z trivially and dim(L1 + Z) = n - 1, the
    graph has 1 + q^dim L1 components: one of size q^(n-1) - q^dim Z and the
    rest of size (q-1) q^dim Z, all complete.  Otherwise the report is marked
    inapplicable.
    """
    hyp = codim_one_hypotheses(L)
    d, z = derived_algebra(L).dim, center(L).dim
    report = TheoremReport(all(hyp.values()), hyp, d, z)
    if not report.applicable:
        return report
    q, n = L.field.q, L.n
    big, small = q ** (n - 1) - q**z, (q - 1) * q**z
    expected = {big: 1}
    expected[small] = expected.get(small, 0) + q**d
    g = CommutingGraph(L)
    part = components(g)
    report.expected_cc_count = 1 + q**d
    report.expected_sizes = _sizes(sorted(expected.items()))
    report.computed_cc_count = len(part)
    report.computed_sizes = _sizes(part.size_multiset())
    report.all_complete = all(g.is_clique(c) for c in part.components)
    return report


verify_theorem_3_1 = verify_codim_one_components


@dataclass
class DirectSumReport:
    k: int
    cc_h: int
    cc_sum: int
    sizes_h: list
    sizes_sum: list
    projection_ok: bool
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.cc_h == self.cc_sum and self.projection_ok

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "cc_h": self.cc_h,
            "cc_sum": self.cc_sum,
            "sizes_h": self.sizes_h,
            "sizes_sum": self.sizes_sum,
            "projection_ok": self.projection_ok,
            "detail": self.detail,
            "passed": self.passed,
        }


def verify_direct_sum(H: LieAlgebra, k: int) -> DirectSumReport:
    """Each component of H + F^k must be C + F^k for a component C of H."""
    gh = CommutingGraph(H)
    ph = components(gh)
    if k == 0:
        sizes = _sizes(ph.size_multiset())
        return DirectSumReport(0, len(ph), len(ph), sizes, sizes, True)
    F, n, q = H.field, H.n, H.field.q
    S = direct_sum(H, abelian(F, k))
    gs = CommutingGraph(S)
    ps = components(gs)
    h_comps = {frozenset(c) for c in ph.components}
    tail = q**n  # index of (x, y) is index_H(x) + q^n * index_{F^k}(y)
    detail = None
    for comp in ps.components:
        proj = frozenset(v % tail for v in comp)
        if proj not in h_comps:
            detail = f"component containing {comp[0]} projects onto a non-component of H"
            break
        if len(comp) != len(proj) * q**k:
            detail = f"component containing {comp[0]} is not its projection plus F^{k}"
            break
    return DirectSumReport(
        k,
        len(ph),
        len(ps),
        _sizes(ph.size_multiset()),
        _sizes(ps.size_multiset()),
        detail is None and len(ps) == len(ph),
        detail,
    )


def verify_decomposition(aid: AlgebraId, F: FieldSpec) -> dict:
    """Compare a decomposable row with its summand: same count and same size multiset."""
    dec = decomposition(aid)
    if dec is None:
        raise ValueError(f"{aid} is not recorded as decomposable")
    hid, k = dec
    H = instantiate(hid, F)
    ds = verify_direct_sum(H, k)
    part = components(CommutingGraph(instantiate(aid, F)))
    sizes = _sizes(part.size_multiset())
    return {
        "algebra": str(aid),
        "summand": str(hid),
        "k": k,
        "direct_sum": ds.to_dict(),
        "sizes": sizes,
        "passed": ds.passed and sizes == ds.sizes_sum,
    }


@dataclass
class IsomorphicGraphsReport:
    field: str
    sizes_a: list
    sizes_b: list
    expected: list

    @property
    def passed(self) -> bool:
        return self.sizes_a == self.sizes_b == self.expected

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "N3_1": self.sizes_a,
            "N3_2(alpha=1)": self.sizes_b,
            "expected": self.expected,
            "passed": self.passed,
        }


def verify_isomorphic_graphs_example(F: FieldSpec) -> IsomorphicGraphsReport:
    """N3_1 and N3_2 with alpha = 1 are not isomorphic but have the same components."""
    a = components(CommutingGraph(instantiate(AlgebraId("N3_1"), F)))
    b = components(CommutingGraph(instantiate(AlgebraId("N3_2", (1,)), F)))
    q = F.q
    expected = sorted({q**2 - 1: 1, q - 1: q**2}.items())
    return IsomorphicGraphsReport(F.label(), _sizes(a.size_multiset()), _sizes(b.size_multiset()), _sizes(expected))


# -- sweep --------------------------------------------------------------------------

def prime_powers(max_q: int) -> list[int]:
    return [q for q in range(2, max_q + 1) if prime_power(q) is not None]


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LCG_THREADS", "1")))
    except ValueError:
        return 1


def _run_job(job) -> dict:
    name, params, p, k, shapes = job
    F = make_field(p, k)
    return verify(AlgebraId(name, params), F, shapes).to_dict()


def sweep_jobs(max_q: int, dims) -> tuple[list, list]:
    """(jobs, skipped) in deterministic (q, catalog order, params) order."""
    jobs, skipped = [], []
    for q in prime_powers(max_q):
        p, k = prime_power(q)
        F = make_field(p, k)
        for name, entry in CATALOG.items():
            if entry.dim not in dims:
                continue
            ids = admissible_params(name, F)
            if not ids:
                status, reason = inadmissible_reason(name, F)
                skipped.append({"field": F.label(), "algebra": name, "status": status, "reason": reason})
                continue
            jobs.extend((name, aid.params, p, k) for aid in ids)
        if 4 in dims and F.char == 2:
            for row, reason in unsatisfiable_branches(F):
                skipped.append(
                    {"field": F.label(), "algebra": row, "status": "unsatisfiable_over_finite_field", "reason": reason}
                )
    return jobs, skipped


def sweep(max_q: int, dims=(2, 3, 4), path=None, shapes: bool = True, workers: int | None = None) -> dict:
    """Verify every admissible catalog instance over every GF(q) with q <= max_q.

    The document is written to ``path`` when given.  Results are merged in job
    order, so the output does not depend on the number of workers.
    """
    if max_q > MAX_Q_BOUND:
        raise ValueError(f"max_q {max_q} exceeds the bound {MAX_Q_BOUND}")
    if max_q < 2:
        raise ValueError("max_q must be at least 2")
    dims = tuple(sorted(set(dims)))
    jobs, skipped = sweep_jobs(max_q, dims)
    full = [(name, params, p, k, shapes) for name, params, p, k in jobs]
    workers = workers or _worker_count()
    t0 = time.perf_counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_job, full, chunksize=4))
    else:
        results = [_run_job(j) for j in full]
    elapsed = time.perf_counter() - t0
    summary = {
        "pass": sum(r["verdict"]["status"] == "pass" for r in results),
        "fail": sum(r["verdict"]["status"] == "fail" for r in results),
        "skipped": len(skipped),
    }
    failures = [
        {
            "field": r["field"]["label"],
            "algebra": r["algebra"]["id"],
            "params": r["params"],
            "first_divergence": r["verdict"]["first_divergence"],
        }
        for r in results
        if r["verdict"]["status"] != "pass"
    ]
    doc = {
        "schema": SCHEMA,
        "max_q": max_q,
        "dims": list(dims),
        "fields": [make_field(*prime_power(q)).label() for q in prime_powers(max_q)],
        "summary": summary,
        "verdict": "fail" if summary["fail"] else "pass",
        "failures": failures,
        "skipped": skipped,
        "results": results,
        "timings": {"total": round(elapsed, 6), "workers": workers},
    }
    if path is not None:
        write_json(doc, path)
    return doc


def strip_timings(doc):
    """Copy of a report with every ``timings`` block removed."""
    if isinstance(doc, dict):
        return {k: strip_timings(v) for k, v in doc.items() if k != "timings"}
    if isinstance(doc, list):
        return [strip_timings(x) for x in doc]
    return doc


def write_json(doc: dict, path):
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")
