"""Ground truth by exhaustive search over Eulerian trails.

Backtracking over remaining arc multiplicities, branching in ascending
vertex order so the output is lexicographic.  Used to cross-validate every
other classifier in the package; uniqueness queries early-exit after the
second trail.
"""

from .core import Multigraph, Trail, induced_graph


def enumerate_trails(
    graph: Multigraph, start: int, limit: int | None = None
) -> list[Trail]:
    """All complete trails of ``graph`` beginning at ``start``, lexicographic.

    A complete trail consumes every arc exactly once.  A zero-arc graph has
    the single trail ``[start]``; a graph that cannot be fully traversed
    from ``start`` yields no trails at all.
    """
    if not 0 <= start < graph.vertex_count:
        raise ValueError(f"start vertex {start} out of range")
    remaining = dict(graph.arc_multiplicity)
    left = sum(remaining.values())
    if left == 0:
        return [(start,)]
    successors: dict[int, list[int]] = {}
    for u, v in remaining:
        successors.setdefault(u, []).append(v)
    for targets in successors.values():
        targets.sort()

    trails: list[Trail] = []
    path = [start]
    # One frame per path position: an iterator over candidate next vertices.
    frames = [iter(successors.get(start, ()))]
    while frames:
        frame = frames[-1]
        for nxt in frame:
            arc = (path[-1], nxt)
            if not remaining.get(arc, 0):
                continue
            remaining[arc] -= 1
            left -= 1
            path.append(nxt)
            if left:
                frames.append(iter(successors.get(nxt, ())))
                break
            trails.append(tuple(path))
            path.pop()
            remaining[arc] += 1
            left += 1
            if limit is not None and len(trails) >= limit:
                return trails
        else:
            frames.pop()
            if frames:
                nxt = path.pop()
                remaining[(path[-1], nxt)] += 1
                left += 1
    return trails


def count_trails(graph: Multigraph, start: int) -> int:
    return len(enumerate_trails(graph, start))


def is_unique_trail(trail: Trail) -> bool:
    """Whether the trail is the only Eulerian trail of its induced graph.

    The start vertex is fixed at the trail's first symbol.  The empty trail
    counts as unique by convention.
    """
    if not trail:
        return True
    size = max(trail) + 1
    found = enumerate_trails(induced_graph(trail, size), trail[0], limit=2)
    if len(found) == 1 and found[0] != trail:
        raise RuntimeError("enumeration lost the defining trail; arc bookkeeping is broken")
    return len(found) == 1
