"""Independent ground truth: exact rc_k on tiny instances by exhausting all
edge colorings up to color relabeling.

Color-relabeling symmetry is removed with restricted-growth strings over a
fixed lexicographic edge order: each edge's color is at most one more than
the maximum color used on earlier edges, so exactly one representative per
relabeling orbit is generated. Graph-automorphism symmetry is deliberately
not removed; at <= 16 edges the guard keeps runtime bounded and the simpler
enumeration is easier to trust.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Coloring, PartitionSpec, all_pairs
from .verifier import (
    PairQuery,
    max_disjoint_rainbow,
    structural_connectivity,
    verify_rainbow_k_connected,
)


class BudgetExceeded(RuntimeError):
    """The instance is too large for exhaustive search."""


@dataclass(frozen=True)
class SearchBudget:
    max_colors: int
    max_edges: int = 16
    max_vertices: int | None = None

    def check(self, spec: PartitionSpec) -> None:
        if spec.edge_count() > self.max_edges:
            raise BudgetExceeded(
                f"{spec.edge_count()} edges exceed the budget of {self.max_edges}"
            )
        if self.max_vertices is not None and spec.n > self.max_vertices:
            raise BudgetExceeded(
                f"{spec.n} vertices exceed the budget of {self.max_vertices}"
            )


def enumerate_colorings_canonical(
    spec: PartitionSpec, max_colors: int, budget: SearchBudget | None = None
) -> Iterator[Coloring]:
    """One representative per orbit of the color-relabeling action: all
    restricted-growth assignments over the lex-ordered edge list that use at
    most max_colors colors."""
    budget = budget if budget is not None else SearchBudget(max_colors=max_colors)
    budget.check(spec)
    edges = list(spec.edges())

    def rec(i: int, used: int, assignment: dict) -> Iterator[Coloring]:
        if i == len(edges):
            yield Coloring(spec, max(used, 1), dict(assignment), tight=True)
            return
        for color in range(1, min(used + 1, max_colors) + 1):
            assignment[edges[i]] = color
            yield from rec(i + 1, max(used, color), assignment)
        del assignment[edges[i]]

    return rec(0, 0, {})


def canonical_form(coloring: Coloring) -> Coloring:
    """Relabel colors by first appearance along the lex edge order (the
    restricted-growth normal form of the coloring's orbit)."""
    relabel: dict[int, int] = {}
    assignment = {}
    for e in coloring.spec.edges():
        c = coloring.color(*e)
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        assignment[e] = relabel[c]
    return Coloring(coloring.spec, len(relabel), assignment, tight=True)


@dataclass(frozen=True)
class RckExactResult:
    """Smallest working palette size, or evidence the budget was exhausted."""

    spec: PartitionSpec
    k: int
    value: int | None
    witness: Coloring | None
    max_colors: int

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f"> {self.max_colors}"


def _passes(
    coloring: Coloring, k: int, hint: tuple[int, int] | None
) -> tuple[bool, tuple[int, int] | None]:
    """Full rainbow-k check with a fail-first hint: colorings that share a
    long prefix with the previous candidate tend to fail at the same pair."""
    pairs = list(all_pairs(coloring.spec))
    if hint is not None:
        pairs.remove(hint)
        pairs.insert(0, hint)
    for u, v in pairs:
        count, _ = max_disjoint_rainbow(coloring, PairQuery(u, v, k=k))
        if count < k:
            return False, (u, v)
    return True, hint


def rc_k_exact(
    spec: PartitionSpec, k: int, budget: SearchBudget
) -> RckExactResult:
    """Smallest palette size <= budget.max_colors for which some coloring is
    rainbow k-connected, with one witness coloring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if structural_connectivity(spec) < k:
        raise ValueError(
            f"rc_{k} undefined: {spec.sizes} has vertex connectivity "
            f"{structural_connectivity(spec)} < {k}"
        )
    budget.check(spec)
    for num_colors in range(1, budget.max_colors + 1):
        hint: tuple[int, int] | None = None
        checked_symmetry = False
        for coloring in enumerate_colorings_canonical(spec, num_colors, budget):
            if coloring.num_colors != num_colors:
                continue  # uses fewer colors; already covered at a lower level
            ok, hint = _passes(coloring, k, hint)
            if not checked_symmetry and num_colors > 1:
                # Spot check: verdicts must be invariant under color bijections.
                flipped = coloring.permuted(
                    {c: num_colors + 1 - c for c in range(1, num_colors + 1)}
                )
                ok_flipped, _ = _passes(flipped, k, None)
                if ok_flipped != ok:
                    raise AssertionError(
                        "verification is not color-relabeling invariant"
                    )
                checked_symmetry = True
            if ok:
                assert verify_rainbow_k_connected(coloring, k).ok
                return RckExactResult(spec, k, num_colors, coloring, budget.max_colors)
    return RckExactResult(spec, k, None, None, budget.max_colors)
