"""Components of the commuting graph of a small algebra, computed two ways."""
import time

from lcg.catalog import AlgebraId, instantiate
from lcg.field import make_field
from lcg.graph import build_graph, components, components_naive

F = make_field(3)
L = instantiate(AlgebraId("N4_3"), F)
g = build_graph(L)
print(f"{L.name} over GF(3): {g.vertex_count} non-central vertices")

t = time.perf_counter()
fast = components(g)
t_fast = time.perf_counter() - t
t = time.perf_counter()
slow = components_naive(g)
t_slow = time.perf_counter() - t
print(f"kernel method: {len(fast)} components in {t_fast:.4f}s")
print(f"pairwise BFS:  {len(slow)} components in {t_slow:.4f}s")
print("partitions agree:", fast == slow)
print("size multiset (size, count):", fast.size_multiset())
