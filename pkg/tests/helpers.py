"""Independent oracles used to cross-check the library, written from the
definitions without reusing library internals."""

from itertools import combinations, permutations

from rainbowk.core import Coloring, PartitionSpec


def brute_force_rainbow_paths(coloring: Coloring, u: int, v: int, max_len: int):
    """All rainbow u->v paths with at most max_len edges, by filtering every
    injective vertex tuple."""
    spec = coloring.spec
    others = [w for w in range(spec.n) if w not in (u, v)]
    found = []
    for length in range(1, max_len + 1):
        for mids in permutations(others, length - 1):
            seq = (u,) + mids + (v,)
            colors = []
            ok = True
            for a, b in zip(seq, seq[1:]):
                if spec.part_of(a) == spec.part_of(b):
                    ok = False
                    break
                colors.append(coloring.color(a, b))
            if ok and len(set(colors)) == len(colors):
                found.append(seq)
    return sorted(found)


def naive_max_disjoint(paths) -> int:
    """Maximum number of paths with pairwise disjoint interiors, by checking
    every subset."""
    interiors = [set(p[1:-1]) for p in paths]
    best = 0
    for r in range(len(paths), 0, -1):
        if r <= best:
            break
        for subset in combinations(range(len(paths)), r):
            if all(
                not (interiors[i] & interiors[j])
                for i, j in combinations(subset, 2)
            ):
                best = max(best, r)
                break
    return best


def _connected_after_removal(spec: PartitionSpec, removed: set) -> bool:
    remaining = [w for w in range(spec.n) if w not in removed]
    if len(remaining) <= 1:
        return True
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        w = stack.pop()
        for x in remaining:
            if x not in seen and spec.part_of(x) != spec.part_of(w):
                seen.add(x)
                stack.append(x)
    return len(seen) == len(remaining)


def assert_vertex_connectivity(spec: PartitionSpec, claim: int) -> None:
    """No cutset smaller than `claim` exists, and one of size `claim` does
    (or the graph is complete and claim == n - 1)."""
    vertices = list(range(spec.n))
    for size in range(claim):
        for subset in combinations(vertices, size):
            assert _connected_after_removal(spec, set(subset)), (
                f"cutset {subset} smaller than claimed connectivity {claim}"
            )
    if claim >= spec.n - 1:
        return  # complete graph: connectivity is n - 1 by convention
    assert any(
        not _connected_after_removal(spec, set(subset))
        for subset in combinations(vertices, claim)
    ), f"no cutset of size {claim} found"


def all_colorings(spec: PartitionSpec, num_colors: int):
    """Every coloring of the spec with palette exactly 1..num_colors
    (image may be smaller)."""
    from itertools import product

    edges = list(spec.edges())
    for colors in product(range(1, num_colors + 1), repeat=len(edges)):
        yield Coloring(spec, num_colors, dict(zip(edges, colors)), tight=False)
