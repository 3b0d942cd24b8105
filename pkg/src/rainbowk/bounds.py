"""Lower-bound machinery: the f(k,t) formula, pigeonhole color twins, and
machine-checkable certificates that a given coloring is not rainbow
k-connected.

The lower-bound statements quantify over all colorings; exhausting them is
infeasible (4^34 colorings already for K_{2,17}), so this module certifies
arbitrary supplied colorings instead. The pigeonhole and path-length
arguments hold per coloring, which makes each certificate a complete proof
for its input; test suites drive it with seeded random colorings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Coloring, PartitionSpec, ceil_div
from .verifier import PairQuery, max_disjoint_rainbow


def f_formula(k: int, t: int) -> int:
    """Minimum part size forcing rc_k <= 4 (t = 2) resp. <= 3 (t >= 3):
    ceil(2k / (t-1))."""
    if k < 2 or t < 2:
        raise ValueError("f(k, t) is defined for k, t >= 2")
    return ceil_div(2 * k, t - 1)


def _twins_in_part(coloring: Coloring, part: int) -> tuple[int, int] | None:
    spec = coloring.spec
    outside = [w for w in spec.vertices() if spec.part_of(w) != part]
    groups: dict[tuple[int, ...], list[int]] = {}
    for a in spec.part_members(part):
        profile = tuple(coloring.color(a, w) for w in outside)
        groups.setdefault(profile, []).append(a)
    candidates = [(ids[0], ids[1]) for ids in groups.values() if len(ids) >= 2]
    return min(candidates) if candidates else None


def find_color_twins(
    coloring: Coloring, big_part: int, scan_all_parts: bool = False
) -> tuple[int, int] | None:
    """First (lexicographic) pair of vertices in big_part with identical
    color profiles toward every vertex outside big_part, if any.

    With scan_all_parts the remaining parts are tried in index order after
    big_part, returning the first twin pair found anywhere."""
    spec = coloring.spec
    if not 0 <= big_part < spec.t:
        raise ValueError(f"part index {big_part} out of range")
    parts = [big_part]
    if scan_all_parts:
        parts += [i for i in range(spec.t) if i != big_part]
    for part in parts:
        twins = _twins_in_part(coloring, part)
        if twins is not None:
            return twins
    return None


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Proof that one coloring is not rainbow k-connected: a twin pair whose
    maximum disjoint rainbow path count falls below k by counting interiors."""

    scenario: str  # "bipartite5" | "multipartite4"
    params: dict
    twins: tuple[int, int]
    count: int
    bound: int  # the interior-counting cap on disjoint twin paths

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "params": dict(self.params),
            "twins": list(self.twins),
            "max_disjoint_rainbow_paths": self.count,
            "arithmetic_bound": self.bound,
        }


def _twin_certificate(
    coloring: Coloring, big_part: int, k: int, scenario: str, params: dict, bound: int
) -> LowerBoundCertificate:
    twins = find_color_twins(coloring, big_part)
    if twins is None:
        raise AssertionError(
            "pigeonhole guarantee violated: no color twins found"
        )
    count, _ = max_disjoint_rainbow(
        coloring, PairQuery(twins[0], twins[1], mode="maximize")
    )
    if count >= k:
        raise AssertionError(
            f"certificate construction failed: twins {twins} admit {count} >= k paths"
        )
    return LowerBoundCertificate(scenario, params, twins, count, bound)


def certify_bipartite_lower(
    k: int, s: int, m: int, coloring: Coloring
) -> LowerBoundCertificate:
    """Certify that a 4-colored K_{s,m} (k <= s <= 2k-1, m >= 4^s + 1) is not
    rainbow k-connected: the big part carries color twins, every rainbow twin
    path has length 4 and uses two small-part interiors, and the small part
    is too small to host k of them."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if not k <= s <= 2 * k - 1:
        raise ValueError(f"need k <= s <= 2k-1, got k={k}, s={s}")
    if m < 4**s + 1:
        raise ValueError(f"need m >= 4^s + 1 = {4 ** s + 1}, got m={m}")
    spec = coloring.spec
    if spec.t != 2 or sorted(spec.sizes) != sorted((s, m)):
        raise ValueError(f"coloring is not on K_{{{s},{m}}}")
    if coloring.num_colors > 4:
        raise ValueError("coloring must use at most 4 colors")
    big = 0 if spec.sizes[0] == m else 1
    return _twin_certificate(
        coloring, big, k, "bipartite5", {"k": k, "s": s, "m": m}, bound=s // 2
    )


def certify_multipartite_lower(
    k: int, t: int, sizes, coloring: Coloring
) -> LowerBoundCertificate:
    """Certify that a 3-colored complete t-partite graph (t >= 3) with one
    huge part and t-1 small parts of size in [ceil(k/(t-1)),
    ceil(2k/(t-1)) - 1] is not rainbow k-connected. Twin paths have length 3
    with both interiors among the small parts."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if t < 3:
        raise ValueError("t must be >= 3")
    sizes = tuple(sizes)
    if len(sizes) != t:
        raise ValueError(f"expected {t} part sizes, got {len(sizes)}")
    spec = coloring.spec
    if spec.sizes != sizes:
        raise ValueError("sizes do not match the coloring")
    if coloring.num_colors > 3:
        raise ValueError("coloring must use at most 3 colors")
    big = max(range(t), key=lambda i: sizes[i])
    small = [sizes[i] for i in range(t) if i != big]
    lo, hi = ceil_div(k, t - 1), ceil_div(2 * k, t - 1) - 1
    bad = [s_i for s_i in small if not lo <= s_i <= hi]
    if bad:
        raise ValueError(f"small part sizes {bad} outside [{lo}, {hi}]")
    m = sizes[big]
    if m < 3 ** sum(small) + 1:
        raise ValueError(
            f"big part must have >= 3^{sum(small)} + 1 = {3 ** sum(small) + 1} "
            f"vertices, got {m}"
        )
    return _twin_certificate(
        coloring,
        big,
        k,
        "multipartite4",
        {"k": k, "t": t, "sizes": list(sizes), "m": m},
        bound=sum(small) // 2,
    )


def random_coloring(
    spec: PartitionSpec, num_colors: int, seed: int
) -> Coloring:
    """Uniform independent color per cross edge from a seeded generator;
    the same seed always reproduces the same coloring."""
    if num_colors < 1:
        raise ValueError("num_colors must be >= 1")
    rng = random.Random(seed)
    assignment = {e: rng.randrange(1, num_colors + 1) for e in spec.edges()}
    return Coloring(spec, num_colors, assignment, tight=False)


def _certify_seed(scenario: str, k: int, sizes, seed: int) -> LowerBoundCertificate:
    spec = PartitionSpec(tuple(sizes))
    if scenario == "bipartite5":
        coloring = random_coloring(spec, 4, seed)
        s, m = min(spec.sizes), max(spec.sizes)
        return certify_bipartite_lower(k, s, m, coloring)
    if scenario == "multipartite4":
        coloring = random_coloring(spec, 3, seed)
        return certify_multipartite_lower(k, spec.t, spec.sizes, coloring)
    raise ValueError(f"unknown scenario {scenario!r}")


def sample_certificates(
    scenario: str,
    k: int,
    sizes,
    samples: int,
    seed: int,
    jobs: int = 1,
) -> list[LowerBoundCertificate]:
    """Certify `samples` seeded random colorings (seeds seed..seed+samples-1).

    Per-seed determinism makes the loop embarrassingly parallel; the result
    list is identical for any jobs count."""
    seeds = range(seed, seed + samples)
    if jobs > 1 and samples > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(
                pool.map(
                    _certify_seed,
                    [scenario] * samples,
                    [k] * samples,
                    [tuple(sizes)] * samples,
                    seeds,
                    chunksize=max(1, samples // jobs),
                )
            )
    return [_certify_seed(scenario, k, sizes, s) for s in seeds]
