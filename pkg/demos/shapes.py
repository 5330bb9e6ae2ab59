"""Recognise windmill and complete components in the graph of N4_11."""
from lcg.catalog import AlgebraId, instantiate, predicted_components
from lcg.field import make_field
from lcg.graph import build_graph
from lcg.shapes import check_shape, detect_windmill

q = 3
F = make_field(q)
aid = AlgebraId("N4_11")
g = build_graph(instantiate(aid, F))
big = max(g.partition, key=len)
w = detect_windmill(g, big)
print(f"largest component: {len(big)} vertices, windmill {w.parameters()}")

pred = predicted_components(aid, F)
ok = sum(
    check_shape(g, g.partition.component_of(min(c.vertices)), c.shape, c.parts).matched
    for c in pred.components
)
print(f"{ok} of {len(pred.components)} predicted components have the predicted shape")
