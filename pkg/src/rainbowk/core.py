"""Core types for edge-colored complete multipartite graphs.

Vertices of K_{n_1,...,n_t} get flat ids 0..n-1, assigned part by part in
input order, so part i owns a contiguous id block. A coloring is a total
symmetric map from cross-part vertex pairs to colors 1..num_colors; querying
a same-part pair is a contract violation (raises), never "no color".

All types here are immutable after construction and safe to share across
threads; all operations are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

# A path is an ordered vertex sequence; consecutive vertices must be adjacent.
VertexPath = tuple[int, ...]


class SchemaError(ValueError):
    """A coloring document violates the JSON schema."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes (n_1, ..., n_t) of a complete multipartite graph, t >= 2."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if len(self.sizes) < 2:
            raise ValueError("a complete multipartite graph needs t >= 2 parts")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"part sizes must be positive, got {self.sizes}")

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        acc, out = 0, []
        for s in self.sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    @cached_property
    def _part_table(self) -> tuple[int, ...]:
        table = []
        for i, s in enumerate(self.sizes):
            table.extend([i] * s)
        return tuple(table)

    def part_of(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return self._part_table[v]

    def part_members(self, i: int) -> range:
        if not 0 <= i < self.t:
            raise ValueError(f"part index {i} out of range 0..{self.t - 1}")
        return range(self.offsets[i], self.offsets[i] + self.sizes[i])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All cross-part pairs (u, v) with u < v, in lexicographic order."""
        table = self._part_table
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if table[u] != table[v]:
                    yield (u, v)

    def edge_count(self) -> int:
        sq = sum(s * s for s in self.sizes)
        return (self.n * self.n - sq) // 2


def adjacent(spec: PartitionSpec, u: int, v: int) -> bool:
    """True iff u and v lie in different parts (hence are joined by an edge)."""
    return spec.part_of(u) != spec.part_of(v)


@dataclass(frozen=True)
class Coloring:
    """Total symmetric edge coloring of a complete multipartite graph.

    `assignment` maps each cross-part pair (u, v), u < v, to a color in
    1..num_colors. `tight` records whether every color of the palette is
    actually used, as opposed to num_colors being a declared bound.
    """

    spec: PartitionSpec
    num_colors: int
    assignment: dict[tuple[int, int], int]
    tight: bool = True

    def __post_init__(self) -> None:
        if self.num_colors < 1:
            raise ValueError("num_colors must be >= 1")
        normalized: dict[tuple[int, int], int] = {}
        for (u, v), col in self.assignment.items():
            if u == v or not adjacent(self.spec, u, v):
                raise ValueError(f"pair ({u}, {v}) lies within one part")
            key = (u, v) if u < v else (v, u)
            if key in normalized:
                raise ValueError(f"duplicate assignment for pair {key}")
            if not 1 <= col <= self.num_colors:
                raise ValueError(
                    f"color {col} on edge {key} outside 1..{self.num_colors}"
                )
            normalized[key] = col
        if len(normalized) != self.spec.edge_count():
            raise ValueError(
                f"assignment covers {len(normalized)} of "
                f"{self.spec.edge_count()} edges; colorings must be total"
            )
        object.__setattr__(self, "assignment", normalized)

    @classmethod
    def from_function(
        cls,
        spec: PartitionSpec,
        num_colors: int,
        rule: Callable[[int, int], int],
        tight: bool = True,
    ) -> "Coloring":
        return cls(spec, num_colors, {e: rule(*e) for e in spec.edges()}, tight)

    def color(self, u: int, v: int) -> int:
        if not adjacent(self.spec, u, v):
            raise ValueError(f"pair ({u}, {v}) lies within one part; no edge")
        return self.assignment[(u, v) if u < v else (v, u)]

    def used_colors(self) -> set[int]:
        return set(self.assignment.values())

    def permuted(self, sigma: dict[int, int]) -> "Coloring":
        """Relabel colors through a bijection of 1..num_colors."""
        if sorted(sigma) != list(range(1, self.num_colors + 1)) or sorted(
            sigma.values()
        ) != list(range(1, self.num_colors + 1)):
            raise ValueError("sigma must be a bijection of 1..num_colors")
        return Coloring(
            self.spec,
            self.num_colors,
            {e: sigma[c] for e, c in self.assignment.items()},
            self.tight,
        )

    # -- JSON schema -------------------------------------------------------
    # {"parts":[n1,...,nt], "num_colors":L, "tight":bool,
    #  "edges":[[u,v,color],...]}  with u < v, edges sorted lexicographically.

    def to_json_dict(self) -> dict:
        return {
            "parts": list(self.spec.sizes),
            "num_colors": self.num_colors,
            "tight": self.tight,
            "edges": [[u, v, c] for (u, v), c in sorted(self.assignment.items())],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Coloring":
        for key in ("parts", "num_colors", "edges"):
            if key not in doc:
                raise SchemaError(f"missing key {key!r}")
        try:
            spec = PartitionSpec(tuple(doc["parts"]))
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad parts {doc['parts']!r}: {exc}") from exc
        num_colors = doc["num_colors"]
        if not isinstance(num_colors, int) or num_colors < 1:
            raise SchemaError(f"bad num_colors {num_colors!r}")
        tight = bool(doc.get("tight", True))
        assignment: dict[tuple[int, int], int] = {}
        for pos, entry in enumerate(doc["edges"]):
            try:
                u, v, col = (int(x) for x in entry)
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"edge {pos}: {entry!r} is not [u,v,color]") from exc
            if not (0 <= u < spec.n and 0 <= v < spec.n) or u == v:
                raise SchemaError(f"edge {pos}: invalid endpoints [{u},{v}]")
            if spec.part_of(u) == spec.part_of(v):
                raise SchemaError(
                    f"edge {pos}: [{u},{v}] endpoints share part {spec.part_of(u)}"
                )
            key = (u, v) if u < v else (v, u)
            if key in assignment:
                raise SchemaError(f"edge {pos}: duplicate pair {list(key)}")
            if not 1 <= col <= num_colors:
                raise SchemaError(
                    f"edge {pos}: color {col} outside 1..{num_colors}"
                )
            assignment[key] = col
        missing = spec.edge_count() - len(assignment)
        if missing:
            raise SchemaError(f"coloring not total: {missing} cross-part pairs uncolored")
        return cls(spec, num_colors, assignment, tight)

    @classmethod
    def from_json_text(cls, text: str) -> "Coloring":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise SchemaError("top-level JSON value must be an object")
        return cls.from_json_dict(doc)


def path_colors(coloring: Coloring, path: VertexPath) -> tuple[int, ...]:
    """Edge colors along a path (raises on non-adjacent consecutive pairs)."""
    return tuple(coloring.color(a, b) for a, b in zip(path, path[1:]))


def is_rainbow_path(coloring: Coloring, vertices) -> bool:
    """True iff the sequence is a path whose edge colors are pairwise distinct.

    Malformed sequences (too short, repeated or invalid vertices, same-part
    steps) return False rather than raising.
    """
    seq = tuple(vertices)
    n = coloring.spec.n
    if len(seq) < 2 or len(set(seq)) != len(seq):
        return False
    if any(not isinstance(w, int) or not 0 <= w < n for w in seq):
        return False
    colors = []
    for a, b in zip(seq, seq[1:]):
        if not adjacent(coloring.spec, a, b):
            return False
        colors.append(coloring.color(a, b))
    # More edges than colors can never be rainbow (pigeonhole), and that
    # falls out of the distinctness check below.
    return len(set(colors)) == len(colors)


@dataclass(frozen=True)
class WitnessFamily:
    """Internally disjoint rainbow u,v-paths plus the case that produced them."""

    u: int
    v: int
    paths: tuple[VertexPath, ...]
    provenance: str

    def internal_sets(self) -> list[frozenset[int]]:
        return [frozenset(p[1:-1]) for p in self.paths]

    def to_json_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "provenance": self.provenance,
            "paths": [list(p) for p in self.paths],
        }


def family_is_valid(coloring: Coloring, family: WitnessFamily, k: int) -> bool:
    """Check a witness family: >= k distinct rainbow u,v-paths with pairwise
    disjoint interiors, none of which touch the endpoints."""
    paths = family.paths
    if len(paths) < k or len(set(paths)) != len(paths):
        return False
    endpoints = {family.u, family.v}
    seen: set[int] = set()
    for p in paths:
        if not p or p[0] != family.u or p[-1] != family.v:
            return False
        if not is_rainbow_path(coloring, p):
            return False
        interior = set(p[1:-1])
        if interior & endpoints or interior & seen:
            return False
        seen |= interior
    return True


@dataclass(frozen=True)
class VerificationReport:
    """Per-pair disjoint rainbow path counts and the overall verdict.

    When `capped` is set the counts were computed in decision mode and are
    clamped at k; they are lower bounds, not maxima.
    """

    k: int
    ok: bool
    counts: dict[tuple[int, int], int]
    capped: bool
    failing_pair: tuple[int, int] | None = None
    failing_family: WitnessFamily | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {
            "k": self.k,
            "verdict": "pass" if self.ok else "fail",
            "counts_capped_at_k": self.capped,
            "pairs": [[u, v, c] for (u, v), c in sorted(self.counts.items())],
        }
        if not self.ok and self.failing_pair is not None:
            doc["failing_pair"] = list(self.failing_pair)
            if self.failing_family is not None:
                doc["failing_pair_best_family"] = self.failing_family.to_json_dict()
        return doc


def all_pairs(spec: PartitionSpec) -> Iterator[tuple[int, int]]:
    """All unordered vertex pairs (same-part pairs included)."""
    return combinations(range(spec.n), 2)
