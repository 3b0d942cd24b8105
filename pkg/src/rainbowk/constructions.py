"""The explicit rainbow-k-connected colorings and their witness path families.

Five constructions are provided:

* ``bipartite4`` -- K_{a,b} with a,b >= 2k: each side split into two blocks,
  the four cross blocks colored 1..4.
* ``ctk``        -- recursive 3-coloring of K_{a_1,...,a_t}: for even t the
  parts are paired into (A_i, B_i); same-side edges get 1, matched pairs 2,
  crossed pairs 3. Odd t colors X-A edges 1 and X-B edges 3 on top of the
  even coloring of the remaining parts.
* ``extension``  -- grows two parts of a rainbow 2-connected 2-coloring by
  one vertex each, copying the color rows of an anchor vertex per part.
* ``mnn``        -- 2-coloring of K_{m,n,n} driven by m bit strings of length
  2*floor(n/2); the B-C edges form an identity pattern (0 on matched
  indices, 1 otherwise).
* ``k2416``      -- the fixed 2-coloring of K_{2,4,16} built from the eight
  length-4 bit strings with an odd number of zeros.

``witness_paths`` returns, for any vertex pair, the explicit family of
pairwise internally disjoint rainbow paths used to certify the construction,
tagged with the case that produced it. Positions equivalent to a canonical
one are reduced either through a genuine color automorphism (recorded in the
meta) or through the mirror-symmetric case body; both preserve rainbowness.

Bit-valued palettes {0,1} are stored as {1,2} (0 -> 1, 1 -> 2), recorded in
the meta as ``bit_colors``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Coloring, PartitionSpec, VertexPath, WitnessFamily, ceil_div

BIT_COLORS = {0: 1, 1: 2}


@dataclass(frozen=True)
class ConstructionMeta:
    """Which construction produced a coloring, with the labeling needed to
    regenerate its witness families (block splits, designated vertices, bit
    strings, anchors)."""

    tag: str
    params: dict
    labeling: dict

    def to_json_dict(self) -> dict:
        labeling = dict(self.labeling)
        base = labeling.get("base_meta")
        if isinstance(base, ConstructionMeta):
            labeling["base_meta"] = base.to_json_dict()
        return {"tag": self.tag, "params": dict(self.params), "labeling": labeling}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "ConstructionMeta":
        labeling = dict(doc["labeling"])
        if labeling.get("base_meta") is not None:
            labeling["base_meta"] = cls.from_json_dict(labeling["base_meta"])
        return cls(doc["tag"], dict(doc["params"]), labeling)


# ---------------------------------------------------------------------------
# bipartite4: K_{a,b} with four block colors
# ---------------------------------------------------------------------------


def color_bipartite4(a: int, b: int, k: int) -> tuple[Coloring, ConstructionMeta]:
    """4-coloring of K_{a,b} (a, b >= 2k): split each side into balanced
    halves A1/A2 and B1/B2 and color A_i-B_j edges with four distinct colors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if a < 2 * k or b < 2 * k:
        raise ValueError(f"need a, b >= 2k = {2 * k}, got a={a}, b={b}")
    spec = PartitionSpec((a, b))
    a_ids = list(spec.part_members(0))
    b_ids = list(spec.part_members(1))
    blocks = {
        "A1": a_ids[: ceil_div(a, 2)],
        "A2": a_ids[ceil_div(a, 2) :],
        "B1": b_ids[: ceil_div(b, 2)],
        "B2": b_ids[ceil_div(b, 2) :],
    }
    block_of = {w: name for name, ids in blocks.items() for w in ids}
    color_table = {("A1", "B1"): 1, ("A1", "B2"): 2, ("A2", "B1"): 3, ("A2", "B2"): 4}

    def rule(u: int, v: int) -> int:
        bu, bv = block_of[u], block_of[v]
        if bu.startswith("B"):
            bu, bv = bv, bu
        return color_table[(bu, bv)]

    coloring = Coloring.from_function(spec, 4, rule)
    meta = ConstructionMeta(
        tag="bipartite4",
        params={"a": a, "b": b, "k": k},
        labeling={
            "sizes": list(spec.sizes),
            "blocks": blocks,
            "designated": {name: ids[:k] for name, ids in blocks.items()},
            # The symmetries used for WLOG dispatch, as color transpositions.
            "automorphisms": {"A1<->A2": [[1, 3], [2, 4]], "A<->B": [[2, 3]]},
        },
    )
    return coloring, meta


# ---------------------------------------------------------------------------
# ctk: recursive paired-part 3-coloring
# ---------------------------------------------------------------------------


def _ctk_labeling(t: int) -> tuple[list[tuple[int, int]], int | None]:
    """Deterministic part labeling: the last part plays X when t is odd;
    the rest are paired in input order, part 2i -> A_{i+1}, part 2i+1 -> B_{i+1}."""
    x_part = t - 1 if t % 2 == 1 else None
    paired = t - 1 if t % 2 == 1 else t
    pairs = [(2 * i, 2 * i + 1) for i in range(paired // 2)]
    return pairs, x_part


def color_ctk(spec: PartitionSpec, k: int) -> tuple[Coloring, ConstructionMeta]:
    """The recursive 3-coloring: same-side edges 1, matched pairs 2, crossed
    pairs 3; with odd t the extra part X sends color 1 into side A and color
    3 into side B. Defined for any part sizes; witness generation at level k
    additionally needs every part size >= ceil(2k/(t-1))."""
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    if k < 1:
        raise ValueError("k must be >= 1")
    t = spec.t
    pairs, x_part = _ctk_labeling(t)
    side = {}
    pair_index = {}
    for i, (pa, pb) in enumerate(pairs):
        side[pa], side[pb] = "A", "B"
        pair_index[pa] = pair_index[pb] = i

    def rule(u: int, v: int) -> int:
        pu, pv = spec.part_of(u), spec.part_of(v)
        if x_part in (pu, pv):
            other = pv if pu == x_part else pu
            return 1 if side[other] == "A" else 3
        if side[pu] == side[pv]:
            return 1
        return 2 if pair_index[pu] == pair_index[pv] else 3

    s = ceil_div(2 * k, t - 1)
    coloring = Coloring.from_function(spec, 3, rule, tight=(t >= 3))
    meta = ConstructionMeta(
        tag="ctk",
        params={"t": t, "k": k, "s": s, "s1": ceil_div(s, 2), "s2": s // 2},
        labeling={
            "sizes": list(spec.sizes),
            "pairs": [list(p) for p in pairs],
            "x_part": x_part,
        },
    )
    return coloring, meta


# ---------------------------------------------------------------------------
# mnn: bit-string 2-coloring of K_{m,n,n}
# ---------------------------------------------------------------------------


def _mnn_strings(m: int, s: int) -> list[str]:
    """The m designated bit strings: 1^s 0^s first, then the remaining
    length-2s strings in lexicographic order."""
    lead = "1" * s + "0" * s
    rest = (
        "".join(bits)
        for bits in product("01", repeat=2 * s)
        if "".join(bits) != lead
    )
    out = [lead]
    for candidate in rest:
        if len(out) == m:
            break
        out.append(candidate)
    return out


def _mnn_group(j: int, s: int) -> int:
    """Index pair group of b_j / c_j (1-based): {1,2} -> 1, {3,4} -> 2, ...;
    with odd n the last group absorbs the extra index."""
    return min((j + 1) // 2, s)


def _mnn_group_members(t: int, s: int, n: int) -> list[int]:
    members = [2 * t - 1, 2 * t]
    if t == s and n % 2 == 1:
        members.append(2 * s + 1)
    return members


def color_mnn(m: int, n: int) -> tuple[Coloring, ConstructionMeta]:
    """2-coloring of K_{m,n,n} with rc_2 = 2 whenever 1 <= m <= 4^floor(n/2).

    B-C edges: bit 0 on matched indices, bit 1 otherwise. A-B and A-C edges
    read one bit of the vertex's string per index-pair group."""
    if n < 2:
        raise ValueError("n must be >= 2")
    s = n // 2
    if not 1 <= m <= 4**s:
        raise ValueError(f"need 1 <= m <= 4^floor(n/2) = {4 ** s}, got m={m}")
    spec = PartitionSpec((m, n, n))
    strings = _mnn_strings(m, s)
    b0, c0 = m, m + n

    def rule(u: int, v: int) -> int:
        u, v = min(u, v), max(u, v)
        pu, pv = spec.part_of(u), spec.part_of(v)
        if (pu, pv) == (1, 2):
            return BIT_COLORS[0 if u - b0 == v - c0 else 1]
        j = v - b0 + 1 if pv == 1 else v - c0 + 1
        t = _mnn_group(j, s)
        bit_pos = t if pv == 1 else s + t
        return BIT_COLORS[int(strings[u][bit_pos - 1])]

    coloring = Coloring.from_function(spec, 2, rule)
    meta = ConstructionMeta(
        tag="mnn",
        params={"m": m, "n": n, "s": s, "k": 2},
        labeling={
            "sizes": list(spec.sizes),
            "strings": strings,
            "part_roles": {"A": 0, "B": 1, "C": 2},
            "bit_colors": {str(b): c for b, c in BIT_COLORS.items()},
        },
    )
    return coloring, meta


# ---------------------------------------------------------------------------
# k2416: the fixed 2-coloring of K_{2,4,16}
# ---------------------------------------------------------------------------


def _odd_zero_strings() -> list[str]:
    out = [f"{i:04b}" for i in range(16) if f"{i:04b}".count("0") % 2 == 1]
    return sorted(out)


def color_2_4_16() -> tuple[Coloring, ConstructionMeta]:
    """The 2-coloring of K_{2,4,16} with rc_2 = 2. C splits into halves C_L
    and C_R indexed by the eight odd-zero-count length-4 bit strings; B-C
    edges read string bits, A-B edges are all 0, and a_1/a_2 see C_L/C_R
    with opposite colors."""
    spec = PartitionSpec((2, 4, 16))
    strings = _odd_zero_strings()

    def rule(u: int, v: int) -> int:
        u, v = min(u, v), max(u, v)
        pu, pv = spec.part_of(u), spec.part_of(v)
        if (pu, pv) == (0, 1):
            return BIT_COLORS[0]
        if (pu, pv) == (0, 2):
            left = v < 14
            return BIT_COLORS[0 if (u == 0) == left else 1]
        # B-C edge: bit j of string i, where b_j = vertex 1+j, c_i / c_i'.
        j = u - 1
        i = v - 5 if v < 14 else v - 13
        return BIT_COLORS[int(strings[i - 1][j - 1])]

    coloring = Coloring.from_function(spec, 2, rule)
    meta = ConstructionMeta(
        tag="k2416",
        params={"k": 2},
        labeling={
            "sizes": [2, 4, 16],
            "strings": strings,
            "c_left": list(range(6, 14)),
            "c_right": list(range(14, 22)),
            "bit_colors": {str(b): c for b, c in BIT_COLORS.items()},
            # Genuine color automorphism used for WLOG dispatch.
            "automorphism": "swap a1<->a2 together with C_L<->C_R",
        },
    )
    return coloring, meta


# ---------------------------------------------------------------------------
# extension: grow two parts of a rainbow 2-connected 2-coloring
# ---------------------------------------------------------------------------


def color_extension(
    base: Coloring,
    p: int,
    q: int,
    base_meta: ConstructionMeta | None = None,
) -> tuple[Coloring, ConstructionMeta]:
    """Add one vertex to parts p and q of a 2-colored base, copying the color
    rows of the lowest-id anchor vertex of each grown part. The two new
    vertices a_1, a_2 get c(a_1 a_2) = 1 and c(a_1 a_2') = c(a_1' a_2) = 2;
    if the base colors the anchor edge a_1'a_2' with 2, the base palette is
    globally transposed first.

    The caller asserts the base is rainbow 2-connected; this is not checked
    here. Passing the base's own ConstructionMeta enables witness generation
    for every pair (otherwise only the anchor pairs have explicit families).
    """
    bspec = base.spec
    if bspec.t < 3:
        raise ValueError("extension needs a base with t >= 3 parts")
    if base.num_colors != 2:
        raise ValueError("extension needs a 2-colored base")
    if p == q or not (0 <= p < bspec.t and 0 <= q < bspec.t):
        raise ValueError(f"grown parts must be two distinct part indices, got {p}, {q}")

    anchor1_old = bspec.offsets[p]
    anchor2_old = bspec.offsets[q]
    transposed = base.color(anchor1_old, anchor2_old) == 2
    base_colors = base.permuted({1: 2, 2: 1}) if transposed else base

    sizes = list(bspec.sizes)
    sizes[p] += 1
    sizes[q] += 1
    spec = PartitionSpec(tuple(sizes))
    # Old vertices keep their within-part index; each new vertex lands at the
    # end of its part's id block.
    id_map = [
        spec.offsets[bspec.part_of(w)] + (w - bspec.offsets[bspec.part_of(w)])
        for w in bspec.vertices()
    ]
    new_a1 = spec.offsets[p] + bspec.sizes[p]
    new_a2 = spec.offsets[q] + bspec.sizes[q]
    inverse = {new: old for old, new in enumerate(id_map)}
    anchor1, anchor2 = id_map[anchor1_old], id_map[anchor2_old]

    def rule(u: int, v: int) -> int:
        pair = {u, v}
        if pair == {new_a1, new_a2}:
            return 1
        if pair == {new_a1, anchor2} or pair == {new_a2, anchor1}:
            return 2
        if new_a1 in pair:
            w = (pair - {new_a1}).pop()
            return base_colors.color(anchor1_old, inverse[w])
        if new_a2 in pair:
            w = (pair - {new_a2}).pop()
            return base_colors.color(anchor2_old, inverse[w])
        return base_colors.color(inverse[u], inverse[v])

    coloring = Coloring.from_function(spec, 2, rule)
    meta = ConstructionMeta(
        tag="extension",
        params={"k": 2, "p": p, "q": q},
        labeling={
            "sizes": list(spec.sizes),
            "base_sizes": list(bspec.sizes),
            "id_map": id_map,
            "new_vertices": [new_a1, new_a2],
            "anchors": [anchor1, anchor2],
            "anchors_old": [anchor1_old, anchor2_old],
            "transposed": transposed,
            "base_meta": base_meta,
        },
    )
    return coloring, meta


# ---------------------------------------------------------------------------
# Witness path families
# ---------------------------------------------------------------------------


def witness_paths(
    meta: ConstructionMeta, coloring: Coloring, u: int, v: int, k: int
) -> WitnessFamily:
    """The explicit family of k pairwise internally disjoint rainbow paths
    from the construction's own argument for the pair's position class."""
    if u == v:
        raise ValueError("pair endpoints must differ")
    sizes = tuple(meta.labeling["sizes"])
    if coloring.spec.sizes != sizes:
        raise ValueError("coloring does not match the construction meta")
    coloring.spec.part_of(u), coloring.spec.part_of(v)  # id validation
    return _dispatch(meta, u, v, k)


def _dispatch(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    if meta.tag == "bipartite4":
        return _bipartite_witness(meta, u, v, k)
    if meta.tag == "ctk":
        return _ctk_witness(meta, u, v, k)
    if meta.tag == "mnn":
        return _mnn_witness(meta, u, v, k)
    if meta.tag == "k2416":
        return _k2416_witness(meta, u, v, k)
    if meta.tag == "extension":
        return _extension_witness(meta, u, v, k)
    raise ValueError(f"unknown construction tag {meta.tag!r}")


def _require_k2(meta: ConstructionMeta, k: int) -> None:
    if k != 2:
        raise ValueError(f"{meta.tag} witnesses exist for k = 2 only, got k={k}")


def _reverse(family: WitnessFamily) -> WitnessFamily:
    return WitnessFamily(
        family.v,
        family.u,
        tuple(tuple(reversed(p)) for p in family.paths),
        family.provenance + " (reversed)",
    )


# -- bipartite4 -------------------------------------------------------------


def _bipartite_witness(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    blocks = {name: list(ids) for name, ids in meta.labeling["blocks"].items()}
    if k < 1:
        raise ValueError("k must be >= 1")
    short = [name for name, ids in blocks.items() if len(ids) < k]
    if short:
        raise ValueError(f"blocks {short} smaller than k={k}; outside the construction's bounds")
    desig = {name: ids[:k] for name, ids in blocks.items()}
    block_of = {w: name for name, ids in blocks.items() for w in ids}
    bu, bv = block_of[u], block_of[v]
    sibling = {"A1": "A2", "A2": "A1", "B1": "B2", "B2": "B1"}
    other_side = lambda name: ["B1", "B2"] if name.startswith("A") else ["A1", "A2"]

    if bu == bv:
        # Route through the sibling block between the two opposite blocks.
        q1, q2 = other_side(bu)
        p2 = sibling[bu]
        paths = tuple(
            (u, desig[q1][j], desig[p2][j], desig[q2][j], v) for j in range(k)
        )
        case = "bipartite4 Case 1"
    elif bu[0] == bv[0]:
        q1 = other_side(bu)[0]
        paths = tuple((u, desig[q1][j], v) for j in range(k))
        case = "bipartite4 Case 2"
    else:
        q2 = sibling[bv]
        p2 = sibling[bu]
        paths = tuple((u, desig[q2][j], desig[p2][j], v) for j in range(k))
        case = "bipartite4 Case 3"
    return WitnessFamily(u, v, paths, f"{case} [{bu},{bv}]")


# -- ctk ---------------------------------------------------------------------


def _ctk_witness(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    t = meta.params["t"]
    if t < 3:
        raise ValueError("ctk witnesses need t >= 3")
    if k < 1:
        raise ValueError("k must be >= 1")
    spec = PartitionSpec(tuple(meta.labeling["sizes"]))
    s = ceil_div(2 * k, t - 1)
    if min(spec.sizes) < s:
        raise ValueError(
            f"witnesses at level k={k} need every part size >= {s}, got {spec.sizes}"
        )
    pairs = [tuple(p) for p in meta.labeling["pairs"]]
    x_part = meta.labeling["x_part"]

    def desig(part: int) -> list[int]:
        return list(spec.part_members(part))[:s]

    def classify(w: int) -> tuple[str, int]:
        part = spec.part_of(w)
        if part == x_part:
            return ("X", -1)
        for i, (pa, pb) in enumerate(pairs):
            if part == pa:
                return ("A", i)
            if part == pb:
                return ("B", i)
        raise AssertionError("unlabeled part")

    rank = {"A": 0, "B": 1, "X": 2}
    cu, cv = classify(u), classify(v)
    if rank[cu[0]] > rank[cv[0]]:
        return _reverse(_ctk_witness(meta, v, u, k))

    # Designated vertex lists seen from u's side: same(i) is on u's side of
    # pair i, opp(i) on the other. The mirrored bodies below stay rainbow
    # because the color pattern is symmetric between the two sides (only the
    # X-edge colors flip, and no mirrored body repeats them).
    mirrored = cu[0] == "B"

    def same(i: int) -> list[int]:
        pa, pb = pairs[i]
        return desig(pb if mirrored else pa)

    def opp(i: int) -> list[int]:
        pa, pb = pairs[i]
        return desig(pa if mirrored else pb)

    x_desig = desig(x_part) if x_part is not None else []
    npairs = len(pairs)
    paths: list[VertexPath] = []

    if x_part is None:
        paths_case = _ctk_even_body(cu, cv, s, npairs, same, opp, paths, u, v)
    else:
        paths_case = _ctk_odd_body(cu, cv, s, npairs, same, opp, x_desig, paths, u, v)
    side_note = " (side-mirrored)" if mirrored and cu[0] == cv[0] == "B" else ""
    return WitnessFamily(u, v, tuple(paths), paths_case + side_note)


def _ctk_odd_body(cu, cv, s, npairs, same, opp, x_desig, paths, u, v) -> str:
    p = cu[1]
    if cu[0] == "A" or cu[0] == "B":
        if cv[0] == cu[0] and cv[1] == p:
            for i in range(npairs):
                if i != p:
                    paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
            paths.extend((u, x_desig[j], opp(p)[j], v) for j in range(s))
            return "odd-t Case 1.1"
        if cv[0] == cu[0]:
            q = cv[1]
            for i in range(npairs):
                if i not in (p, q):
                    paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
            paths.extend((u, x_desig[j], opp(q)[j], v) for j in range(s))
            paths.extend((u, opp(p)[j], v) for j in range(s))
            return "odd-t Case 1.2"
        if cv[0] == "B":
            # u in A, v in B (class order put A first).
            for i in range(npairs):
                if i != p:
                    paths.extend((u, same(i)[j], v) for j in range(s))
            paths.extend((u, x_desig[j], v) for j in range(s))
            return "odd-t Case 1.3"
        if cv[0] == "X" and cu[0] == "A":
            for i in range(npairs):
                if i != p:
                    paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
            paths.extend((u, opp(p)[j], v) for j in range(s))
            return "odd-t Case 1.4"
        # u in B, v in X: the mirror of Case 1.4 is not rainbow (its A-X leg
        # repeats color 1), so route through every A-side block directly.
        paths.extend((u, opp(i)[j], v) for i in range(npairs) for j in range(s))
        return "odd-t Case 1.4 (B-side reroute)"
    # Both endpoints in X.
    for i in range(npairs):
        paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
    return "odd-t Case 2"


def _ctk_even_body(cu, cv, s, npairs, same, opp, paths, u, v) -> str:
    s1, s2 = ceil_div(s, 2), s // 2
    p = cu[1]
    if cu[0] == cv[0] and cu[1] == cv[1]:
        q = min(i for i in range(npairs) if i != p)
        paths.extend((u, same(q)[j], opp(q)[j], v) for j in range(s1))
        paths.extend((u, same(q)[s1 + j], opp(p)[s1 + j], v) for j in range(s2))
        paths.extend((u, opp(p)[j], opp(q)[s1 + j], v) for j in range(s2))
        for i in range(npairs):
            if i not in (p, q):
                paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
        return "even-t Case 1"
    if cu[0] == cv[0]:
        q = cv[1]
        for i in range(npairs):
            if i not in (p, q):
                paths.extend((u, same(i)[j], opp(i)[j], v) for j in range(s))
        paths.extend((u, opp(p)[j], v) for j in range(s))
        paths.extend((u, opp(q)[j], v) for j in range(s))
        return "even-t Case 2"
    # u on side A of pair p, v on the opposite side in pair m.
    m = cv[1]
    istar = min(i for i in range(npairs) if i != m)
    for i in range(npairs):
        if i != p:
            paths.extend((u, same(i)[j], v) for j in range(s))
    paths.extend((u, opp(istar)[j], v) for j in range(s))
    return "even-t Case 3"


# -- mnn ---------------------------------------------------------------------


def _mnn_witness(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    _require_k2(meta, k)
    m, n, s = meta.params["m"], meta.params["n"], meta.params["s"]
    strings = meta.labeling["strings"]
    b0, c0 = m, m + n

    def classify(w: int) -> tuple[int, int]:
        if w < b0:
            return (0, w + 1)  # (class, 1-based index)
        if w < c0:
            return (1, w - b0 + 1)
        return (2, w - c0 + 1)

    cu, cv = classify(u), classify(v)
    if cu[0] > cv[0]:
        return _reverse(_mnn_witness(meta, v, u, k))
    b_vertex = lambda j: b0 + j - 1
    c_vertex = lambda j: c0 + j - 1

    if cu[0] == 0 and cv[0] == 0:
        si, sj = strings[cu[1] - 1], strings[cv[1] - 1]
        tpos = next(x + 1 for x in range(2 * s) if si[x] != sj[x])
        if tpos <= s:
            mids = (b_vertex(2 * tpos - 1), b_vertex(2 * tpos))
        else:
            r = tpos - s
            mids = (c_vertex(2 * r - 1), c_vertex(2 * r))
        return WitnessFamily(
            u, v, ((u, mids[0], v), (u, mids[1], v)), "mnn Case 4"
        )
    if cu[0] == 0:
        i, j = cu[1], cv[1]
        grp = _mnn_group(j, s)
        members = _mnn_group_members(grp, s, n)
        if cv[0] == 1:
            bit = strings[i - 1][s + grp - 1]
            w = c_vertex(j) if bit == "1" else c_vertex(min(x for x in members if x != j))
            case = "mnn Case 3"
        else:
            bit = strings[i - 1][grp - 1]
            w = b_vertex(j) if bit == "1" else b_vertex(min(x for x in members if x != j))
            case = "mnn Case 3 (C-side)"
        return WitnessFamily(u, v, ((u, v), (u, w, v)), case)
    if cu[0] == cv[0]:
        i, j = cu[1], cv[1]
        mid = c_vertex if cu[0] == 1 else b_vertex
        case = "mnn Case 1" if cu[0] == 1 else "mnn Case 1 (C-side)"
        return WitnessFamily(u, v, ((u, mid(i), v), (u, mid(j), v)), case)
    # u in B, v in C.
    return WitnessFamily(u, v, ((u, v), (u, 0, v)), "mnn Case 2")


# -- k2416 -------------------------------------------------------------------


def _k2416_tau(w: int) -> int:
    """The coloring automorphism: swap a_1 with a_2 and C_L with C_R."""
    if w < 2:
        return 1 - w
    if w < 6:
        return w
    return w + 8 if w < 14 else w - 8


def _k2416_witness(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    _require_k2(meta, k)
    strings = meta.labeling["strings"]

    def classify(w: int) -> tuple[int, int]:
        if w < 2:
            return (0, w + 1)
        if w < 6:
            return (1, w - 1)
        if w < 14:
            return (2, w - 5)  # C_L
        return (3, w - 13)  # C_R

    cu, cv = classify(u), classify(v)
    if cu[0] > cv[0] or (cu[0] == cv[0] and u > v):
        return _reverse(_k2416_witness(meta, v, u, k))
    b_vertex = lambda j: 1 + j
    cl = lambda i: 5 + i
    cr = lambda i: 13 + i

    if cu[0] == 0 and cv[0] == 0:
        return WitnessFamily(u, v, ((u, cl(1), v), (u, cl(2), v)), "k2416 Case 1")
    if cu[0] == 0:
        if u == 1:
            inner = _k2416_witness(meta, _k2416_tau(u), _k2416_tau(v), k)
            return WitnessFamily(
                u,
                v,
                tuple(tuple(_k2416_tau(w) for w in p) for p in inner.paths),
                inner.provenance + " (via a1<->a2, C_L<->C_R automorphism)",
            )
        if cv[0] == 1:
            j = cv[1]
            i = next(x + 1 for x in range(8) if strings[x][j - 1] == "1")
            return WitnessFamily(u, v, ((u, v), (u, cl(i), v)), "k2416 Case 2")
        i = cv[1]
        j = next(x + 1 for x in range(4) if strings[i - 1][x] == "1")
        return WitnessFamily(u, v, ((u, v), (u, b_vertex(j), v)), "k2416 Case 2")
    if cu[0] == 1 and cv[0] == 1:
        bp, bq = cu[1], cv[1]
        i = next(
            x + 1 for x in range(8) if strings[x][bp - 1] != strings[x][bq - 1]
        )
        return WitnessFamily(u, v, ((u, cl(i), v), (u, cr(i), v)), "k2416 Case 4")
    if cu[0] == 1:
        helper = 1 if cv[0] == 2 else 0  # a_2 covers C_L, a_1 covers C_R
        return WitnessFamily(u, v, ((u, v), (u, helper, v)), "k2416 Case 3")
    if cu[0] == 2 and cv[0] == 3:
        return WitnessFamily(u, v, ((u, 0, v), (u, 1, v)), "k2416 Case 5")
    # Same C half: the two strings differ in at least two bit positions.
    si, sj = strings[cu[1] - 1], strings[cv[1] - 1]
    diffs = [x + 1 for x in range(4) if si[x] != sj[x]]
    return WitnessFamily(
        u, v, ((u, b_vertex(diffs[0]), v), (u, b_vertex(diffs[1]), v)), "k2416 Case 6"
    )


# -- extension ----------------------------------------------------------------


def _extension_witness(meta: ConstructionMeta, u: int, v: int, k: int) -> WitnessFamily:
    _require_k2(meta, k)
    lab = meta.labeling
    new_a1, new_a2 = lab["new_vertices"]
    anchor1, anchor2 = lab["anchors"]
    anchor1_old, anchor2_old = lab["anchors_old"]
    id_map: list[int] = lab["id_map"]
    inverse = {new: old for old, new in enumerate(id_map)}
    news = {new_a1, new_a2}

    def base_family(u0: int, v0: int) -> WitnessFamily:
        base_meta = lab["base_meta"]
        if base_meta is None:
            raise ValueError(
                "witnesses for this pair need the base construction's meta "
                "(pass base_meta to color_extension)"
            )
        return _dispatch(base_meta, u0, v0, 2)

    def lift(fam: WitnessFamily, swap: dict[int, int], note: str) -> WitnessFamily:
        paths = tuple(
            tuple(swap.get(id_map[w], id_map[w]) for w in p) for p in fam.paths
        )
        out = WitnessFamily(paths[0][0], paths[0][-1], paths, f"{note} [{fam.provenance}]")
        if out.u != u:
            out = _reverse(out)
        return out

    if u not in news and v not in news:
        return lift(base_family(inverse[u], inverse[v]), {}, "extension via base coloring")
    pair = {u, v}
    if pair == {new_a1, anchor1}:
        paths = ((u, new_a2, v), (u, anchor2, v))
        return WitnessFamily(u, v, paths, "extension anchor pair")
    if pair == {new_a2, anchor2}:
        paths = ((u, new_a1, v), (u, anchor1, v))
        return WitnessFamily(u, v, paths, "extension anchor pair")
    if pair == {new_a1, anchor2}:
        fam = base_family(anchor1_old, anchor2_old)
        return lift(fam, {anchor1: new_a1}, "extension via recolored-edge embedding")
    if pair == {new_a2, anchor1}:
        fam = base_family(anchor1_old, anchor2_old)
        return lift(fam, {anchor2: new_a2}, "extension via recolored-edge embedding")
    # At least one endpoint is new and its partner is not an anchor: embed
    # through the isomorphic copy that swaps each new vertex with its anchor.
    psi = {new_a1: anchor1_old, new_a2: anchor2_old}
    u0 = psi.get(u, inverse.get(u))
    v0 = psi.get(v, inverse.get(v))
    fam = base_family(u0, v0)
    return lift(
        fam, {anchor1: new_a1, anchor2: new_a2}, "extension via anchor-swap embedding"
    )
