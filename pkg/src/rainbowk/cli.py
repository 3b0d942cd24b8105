"""Command-line surface: construct / verify / witness / lower-bound / fkt /
rck-exact / export-dot.

Exit codes: 0 = success or verified pass, 1 = verified fail, 2 = usage error
(including malformed input files). Every run is fully determined by its
parsed flags; randomized subcommands require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import f_formula, sample_certificates
from .constructions import (
    ConstructionMeta,
    color_2_4_16,
    color_bipartite4,
    color_ctk,
    color_extension,
    color_mnn,
    witness_paths,
)
from .core import Coloring, PartitionSpec, SchemaError, family_is_valid
from .oracle import BudgetExceeded, SearchBudget, rc_k_exact
from .verifier import PairQuery, max_disjoint_rainbow, verify_rainbow_k_connected

DEFAULT_PALETTE = {1: "blue", 2: "red", 3: "green", 4: "orange"}
MAX_EDGES_ENV = "RAINBOWK_MAX_EDGES"


@dataclass(frozen=True)
class RunConfig:
    command: str
    options: dict


def export_dot(coloring: Coloring, palette: dict[int, str]) -> str:
    """DOT rendering with one cluster per part and named edge colors."""
    if len(palette) > 12:
        raise ValueError("palette supports at most 12 named entries")
    missing = [c for c in range(1, coloring.num_colors + 1) if c not in palette]
    if missing:
        raise ValueError(f"palette has no names for colors {missing}")
    lines = ["graph coloring {"]
    for i in range(coloring.spec.t):
        members = " ".join(f"v{w};" for w in coloring.spec.part_members(i))
        lines.append(f'  subgraph cluster_part{i} {{ label="part {i}"; {members} }}')
    for (u, v), c in sorted(coloring.assignment.items()):
        lines.append(f'  v{u} -- v{v} [color="{palette[c]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SchemaError(f"bad sizes {text!r}: expected comma-separated integers") from exc


def _parse_palette(text: str | None) -> dict[int, str]:
    if text is None:
        return dict(DEFAULT_PALETTE)
    palette = {}
    for item in text.split(","):
        color, _, name = item.partition("=")
        palette[int(color)] = name
    return palette


def _load_document(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError(f"{path}: top-level JSON value must be an object")
    return doc


def _load_coloring(path: str) -> Coloring:
    return Coloring.from_json_dict(_load_document(path))


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def coloring_document(coloring: Coloring, meta: ConstructionMeta | None = None) -> str:
    doc = coloring.to_json_dict()
    if meta is not None:
        doc["meta"] = meta.to_json_dict()
    return json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowk",
        description="Rainbow k-connection colorings of complete multipartite graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit one of the known colorings")
    p.add_argument(
        "--family",
        required=True,
        choices=["bipartite4", "ctk", "extension", "mnn", "k2416"],
    )
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sizes", help="comma-separated part sizes (ctk)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--base", help="base coloring JSON (extension)")
    p.add_argument("--grow", help="comma-separated pair of part indices (extension)")
    p.add_argument("-o", "--out")

    p = sub.add_parser("verify", help="decide rainbow k-connectivity exactly")
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["decision", "maximize"], default="decision")
    p.add_argument("--pairs", default="all", help='"all" or "u,v"')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")

    p = sub.add_parser("witness", help="emit the construction's path family for a pair")
    p.add_argument("--coloring", required=True, help="JSON with a meta block")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--out")

    p = sub.add_parser("lower-bound", help="certify sampled colorings below the bound")
    p.add_argument("--scenario", required=True, choices=["bipartite5", "multipartite4"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sizes", required=True)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out")

    p = sub.add_parser("fkt", help="print the minimum part size formula")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("rck-exact", help="exact rc_k by exhaustive search")
    p.add_argument("--sizes", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-colors", type=int, required=True)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("-o", "--out", help="write the witness coloring here")

    p = sub.add_parser("export-dot", help="render a coloring as DOT")
    p.add_argument("--coloring", required=True)
    p.add_argument("--palette", help='e.g. "1=blue,2=red"')
    p.add_argument("-o", "--out")
    return parser


def _run_construct(opt: dict) -> int:
    family = opt["family"]
    if family == "bipartite4":
        if opt["a"] is None or opt["b"] is None or opt["k"] is None:
            raise SchemaError("bipartite4 needs --a, --b and --k")
        coloring, meta = color_bipartite4(opt["a"], opt["b"], opt["k"])
    elif family == "ctk":
        if opt["sizes"] is None or opt["k"] is None:
            raise SchemaError("ctk needs --sizes and --k")
        coloring, meta = color_ctk(PartitionSpec(_parse_sizes(opt["sizes"])), opt["k"])
    elif family == "mnn":
        if opt["m"] is None or opt["n"] is None:
            raise SchemaError("mnn needs --m and --n")
        coloring, meta = color_mnn(opt["m"], opt["n"])
    elif family == "k2416":
        coloring, meta = color_2_4_16()
    else:  # extension
        if opt["base"] is None or opt["grow"] is None:
            raise SchemaError("extension needs --base and --grow p,q")
        doc = _load_document(opt["base"])
        base = Coloring.from_json_dict(doc)
        base_meta = (
            ConstructionMeta.from_json_dict(doc["meta"]) if "meta" in doc else None
        )
        p, q = _parse_sizes(opt["grow"])
        coloring, meta = color_extension(base, p, q, base_meta=base_meta)
    _write_text(opt["out"], coloring_document(coloring, meta))
    return 0


def _run_verify(opt: dict) -> int:
    coloring = _load_coloring(opt["coloring"])
    if opt["pairs"] != "all":
        u, v = _parse_sizes(opt["pairs"])
        query = PairQuery(
            u, v, mode=opt["mode"], k=opt["k"] if opt["mode"] == "decision" else None
        )
        count, family = max_disjoint_rainbow(coloring, query)
        ok = count >= opt["k"]
        print(f"pair ({u}, {v}): {count} internally disjoint rainbow paths "
              f"({'pass' if ok else 'fail'} at k={opt['k']})")
        if opt["report"]:
            _write_text(opt["report"], json.dumps(family.to_json_dict(), indent=2) + "\n")
        return 0 if ok else 1
    report = verify_rainbow_k_connected(
        coloring, opt["k"], mode=opt["mode"], jobs=opt["jobs"]
    )
    if opt["report"]:
        _write_text(opt["report"], json.dumps(report.to_json_dict(), indent=2) + "\n")
    if report.ok:
        print(f"pass: rainbow {opt['k']}-connected "
              f"({coloring.num_colors} colors, {coloring.spec.n} vertices)")
        return 0
    u, v = report.failing_pair
    best = len(report.failing_family.paths)
    print(f"fail: pair ({u}, {v}) has only {best} < {opt['k']} "
          f"internally disjoint rainbow paths")
    return 1


def _run_witness(opt: dict) -> int:
    doc = _load_document(opt["coloring"])
    coloring = Coloring.from_json_dict(doc)
    if "meta" not in doc:
        raise SchemaError("witness generation needs a construction meta block")
    meta = ConstructionMeta.from_json_dict(doc["meta"])
    family = witness_paths(meta, coloring, opt["u"], opt["v"], opt["k"])
    ok = family_is_valid(coloring, family, opt["k"])
    out = family.to_json_dict()
    out["valid"] = ok
    _write_text(opt["out"], json.dumps(out, indent=2) + "\n")
    return 0 if ok else 1


def _run_lower_bound(opt: dict) -> int:
    certs = sample_certificates(
        opt["scenario"],
        opt["k"],
        _parse_sizes(opt["sizes"]),
        opt["samples"],
        opt["seed"],
        jobs=opt["jobs"],
    )
    doc = {
        "scenario": opt["scenario"],
        "k": opt["k"],
        "samples": opt["samples"],
        "seed": opt["seed"],
        "certificates": [c.to_json_dict() for c in certs],
    }
    _write_text(opt["out"], json.dumps(doc, indent=2) + "\n")
    if opt["out"]:
        print(f"{len(certs)} certificates written to {opt['out']}")
    return 0


def _run_rck_exact(opt: dict) -> int:
    max_edges = opt["max_edges"]
    if max_edges is None:
        max_edges = int(os.environ.get(MAX_EDGES_ENV, 16))
    budget = SearchBudget(max_colors=opt["max_colors"], max_edges=max_edges)
    result = rc_k_exact(PartitionSpec(_parse_sizes(opt["sizes"])), opt["k"], budget)
    print(f"rc_{opt['k']}({','.join(map(str, result.spec.sizes))}) = {result}")
    if result.witness is not None and opt["out"]:
        _write_text(opt["out"], result.witness.to_json_text())
    return 0


def _run_export_dot(opt: dict) -> int:
    coloring = _load_coloring(opt["coloring"])
    palette = _parse_palette(opt["palette"])
    _write_text(opt["out"], export_dot(coloring, palette))
    return 0


_DISPATCH = {
    "construct": _run_construct,
    "verify": _run_verify,
    "witness": _run_witness,
    "lower-bound": _run_lower_bound,
    "fkt": lambda opt: print(f_formula(opt["k"], opt["t"])) or 0,
    "rck-exact": _run_rck_exact,
    "export-dot": _run_export_dot,
}


def run(config: RunConfig) -> int:
    try:
        return _DISPATCH[config.command](config.options)
    except (SchemaError, ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    args = build_parser().parse_args(argv)
    options = vars(args)
    command = options.pop("command")
    sys.exit(run(RunConfig(command=command, options=options)))


if __name__ == "__main__":
    main()
