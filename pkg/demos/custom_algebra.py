"""Define an algebra by its brackets, check Jacobi, and inspect its graph."""
from lcg.errors import LCGError
from lcg.field import make_field
from lcg.graph import build_graph, components
from lcg.lie import center, is_solvable, lie_make

F = make_field(5)
# [e1, e2] = e2, [e1, e3] = 2 e3: a diagonal action on an abelian ideal
L = lie_make(F, 3, [(1, 2, (0, 1, 0)), (1, 3, (0, 0, 2))], name="diag(1,2)")
print(f"{L.name}: solvable={is_solvable(L)}, center dimension {center(L).dim}")
part = components(build_graph(L))
print(f"{len(part)} components, sizes {part.size_multiset()}")

try:
    lie_make(make_field(2), 3, [(1, 2, (0, 0, 1)), (1, 3, (1, 0, 0)), (2, 3, (0, 0, 1))])
except LCGError as exc:
    print("rejected:", exc)
