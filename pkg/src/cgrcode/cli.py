"""Command-line front end: generate, verify, roundtrip, metrics, dual,
contract, and search over the JSON interchange format.

Exit codes: 0 success (all requested verifications passed), 1 verification
or recovery failure, 2 usage error. The environment variable CGR_BUDGET
overrides the default exhaustive-search budget.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import codespec
from .bcode import ContractedArray, ContractShapeError, contract, verify_contracted_mds
from .code import (
    ErasurePattern,
    UnrecoverableError,
    decode,
    decode_complexity,
    dualize,
    encode,
    erase,
    update_complexity,
    verify_dual_mds,
    verify_mds,
)
from .fixtures import BUILTIN_VECTORS
from .graph import POS_INF, CgrParams, pif_factorize
from .layout import Cell, CodeArray, build_code_array, derive_offsets
from .rng import Lcg
from .search import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SearchSpec,
    params_for_offset_length,
    search,
)


def render_cell(cell: Cell) -> str:
    if cell.is_empty:
        return "-"
    if cell.is_info:
        return str(cell.vertices[0])
    return " ⊕ ".join(str(v) for v in cell.vertices)


def render_array_text(array: CodeArray) -> str:
    lines = ["offset vector: " + ",".join(str(a) for a in array.offsets)]
    for row in array.rows:
        lines.append("\t".join(render_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def render_contracted_text(contracted: ContractedArray) -> str:
    lines = ["source columns: " + ",".join(str(c) for c in contracted.source_column_index)]
    height = len(contracted.columns[0])
    for i in range(height):
        lines.append("\t".join(render_cell(col[i]) for col in contracted.columns))
    return "\n".join(lines) + "\n"


def _csv_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _parse_placement(text: str):
    items = []
    for part in text.split(","):
        part = part.strip()
        if part in ("inf", "+inf"):
            items.append(POS_INF)
        else:
            items.append(int(part))
    return tuple(items)


def _parse_data_spec(text: str) -> tuple[str, int]:
    text = text.strip()
    if text.startswith("hex:"):
        return "hex", int(text[4:] or "0", 16)
    match = re.fullmatch(r"random(?::|\()(-?\d+)\)?", text)
    if match:
        return "random", int(match.group(1))
    raise ValueError(f"bad --data {text!r}; use hex:<digits> or random:<seed>")


def _info_bits(array: CodeArray, data_spec: str) -> dict[int, int]:
    mode, value = _parse_data_spec(data_spec)
    ids = array.info_ids()
    if mode == "hex":
        return {v: (value >> i) & 1 for i, v in enumerate(ids)}
    rng = Lcg(value)
    return {v: rng.bit() for v in ids}


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, output: str | None) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", output)


def _load_primal(path: str) -> CodeArray:
    array = codespec.load(path)
    if array.is_dual():
        raise ValueError(f"{path} holds a dual array; this command needs a primal one")
    return array


def cmd_generate(args) -> int:
    if args.offsets is not None:
        if args.v1 is None:
            raise ValueError("--offsets needs --v1")
        params = CgrParams.from_v1(args.v1)
        vector = _csv_ints(args.offsets)
    elif args.builtin is not None:
        if args.builtin not in BUILTIN_VECTORS:
            raise ValueError(
                f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTIN_VECTORS)}"
            )
        vector = BUILTIN_VECTORS[args.builtin]
        params = params_for_offset_length(len(vector))
        if args.v1 is not None and args.v1 != params.v1:
            raise ValueError(f"builtin {args.builtin} has v1={params.v1}, not {args.v1}")
    else:
        if args.v1 is None:
            raise ValueError("--v1 is required")
        params = CgrParams.from_v1(args.v1)
        placement = _parse_placement(args.placement) if args.placement else None
        pi = tuple(_csv_ints(args.pi)) if args.pi else None
        vector = derive_offsets(pif_factorize(params.v1, placement), pi)
    array = build_code_array(params, vector)
    if args.format == "text":
        _emit(render_array_text(array), args.output)
    else:
        _emit(codespec.to_json(array), args.output)
    return 0


def _verify_one(name: str, array: CodeArray) -> dict:
    primal = verify_mds(array)
    dual = verify_dual_mds(array)
    return {
        "name": name,
        "v1": array.params.v1,
        "v2": array.params.v2,
        "mds": primal.is_mds,
        "witness": sorted(primal.witness.erased_columns) if primal.witness else None,
        "patterns_checked": primal.patterns_checked,
        "dual_mds": dual.is_mds,
        "dual_witness": sorted(dual.witness.erased_columns) if dual.witness else None,
        "dual_patterns_checked": dual.patterns_checked,
    }


def cmd_verify(args) -> int:
    targets: list[tuple[str, CodeArray]] = []
    if args.file is not None and args.builtin is not None:
        raise ValueError("give either a file or --builtin, not both")
    if args.file is not None:
        targets.append((args.file, _load_primal(args.file)))
    elif args.builtin is not None:
        names = list(BUILTIN_VECTORS) if args.builtin == "all" else [args.builtin]
        for name in names:
            if name not in BUILTIN_VECTORS:
                raise ValueError(
                    f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_VECTORS)} or all"
                )
            vector = BUILTIN_VECTORS[name]
            targets.append((name, build_code_array(params_for_offset_length(len(vector)), vector)))
    else:
        raise ValueError("give a code file or --builtin NAME")

    results = [_verify_one(name, array) for name, array in targets]
    if args.json:
        _emit_json({"results": results}, None)
    else:
        for res in results:
            parts = [f"mds={'true' if res['mds'] else 'false'}"]
            if res["witness"] is not None:
                parts.append("witness=" + ",".join(str(c) for c in res["witness"]))
            parts.append(f"dual_mds={'true' if res['dual_mds'] else 'false'}")
            if res["dual_witness"] is not None:
                parts.append("dual_witness=" + ",".join(str(c) for c in res["dual_witness"]))
            print(f"{res['name']}: " + " ".join(parts))
    return 0 if all(r["mds"] and r["dual_mds"] for r in results) else 1


def cmd_roundtrip(args) -> int:
    array = _load_primal(args.file)
    pattern = ErasurePattern.of(_csv_ints(args.erase))
    info_bits = _info_bits(array, args.data)
    codeword = encode(array, info_bits)
    grid = erase(codeword, pattern)
    report = decode(array, grid, pattern)
    match = report.recovered == info_bits
    complexity = decode_complexity(report, array.params, pattern)
    if args.json:
        _emit_json(
            {
                "match": match,
                "erased_columns": sorted(pattern.erased_columns),
                "peeling_sufficed": report.peeling_sufficed,
                "xor_count": report.xor_count,
                "elimination_xor_count": report.elimination_xor_count,
                "decode_complexity": str(complexity),
            },
            None,
        )
    else:
        print(f"match: {'true' if match else 'false'}")
        print(f"peeling_sufficed: {'true' if report.peeling_sufficed else 'false'}")
        print(f"xor_count: {report.xor_count}")
        print(f"elimination_xor_count: {report.elimination_xor_count}")
        print(f"decode_complexity: {complexity}")
    return 0 if match else 1


def _measured_decode_complexity(params: CgrParams):
    """Worst single-column decode on the canonical construction for v1."""
    array = build_code_array(params, derive_offsets(pif_factorize(params.v1)))
    bits = {v: 0 for v in array.info_ids()}
    codeword = encode(array, bits)
    worst = None
    for c in range(params.v2):
        pattern = ErasurePattern.of([c])
        report = decode(array, erase(codeword, pattern), pattern)
        ratio = decode_complexity(report, params, pattern)
        worst = ratio if worst is None or ratio > worst else worst
    return worst


def cmd_metrics(args) -> int:
    lo, _, hi = args.v1_range.partition(":")
    start, stop = int(lo), int(hi or lo)
    if start % 2 or start < 2:
        raise ValueError(f"--v1-range must start at an even v1 >= 2, got {start}")
    rows = []
    for v1 in range(start, stop + 1, 2):
        params = CgrParams.from_v1(v1)
        rows.append(
            {
                "v1": v1,
                "v2": params.v2,
                "code": [params.v2, 2],
                "update_complexity": str(update_complexity(params)),
                "decode_complexity": str(_measured_decode_complexity(params)),
            }
        )
    if args.json:
        _emit_json({"metrics": rows}, None)
    else:
        for row in rows:
            print(
                f"v1={row['v1']} v2={row['v2']} code=({row['code'][0]},{row['code'][1]}) "
                f"update_complexity={row['update_complexity']} "
                f"decode_complexity={row['decode_complexity']}"
            )
    return 0


def cmd_dual(args) -> int:
    array = codespec.load(args.file)
    dual = dualize(array)
    if args.format == "text":
        _emit(render_array_text(dual), args.output)
    else:
        _emit(codespec.to_json(dual), args.output)
    return 0


def cmd_contract(args) -> int:
    array = _load_primal(args.file)
    order = _csv_ints(args.order) if args.order else None
    contracted = contract(array, order)
    ok = verify_contracted_mds(contracted)
    if args.format == "text":
        text = render_contracted_text(contracted)
        text += f"mds: {'true' if ok else 'false'}\n"
        _emit(text, args.output)
    else:
        _emit_json(
            {
                "version": codespec.FORMAT_VERSION,
                "v1": contracted.params.v1,
                "v2": contracted.params.v2,
                "source_columns": list(contracted.source_column_index),
                "mds": ok,
                "columns": [
                    [{"kind": cell.kind, "vertices": list(cell.vertices)} for cell in col]
                    for col in contracted.columns
                ],
            },
            args.output,
        )
    return 0 if ok else 1


def cmd_search(args) -> int:
    params = CgrParams.from_v1(args.v1)
    spec = SearchSpec(
        params=params,
        fix_prefix=not args.free_prefix,
        strategy=args.strategy,
        seed=args.seed,
        max_trials=args.max_trials,
        stop_after=args.stop_after,
    )
    if args.budget is not None:
        budget = args.budget
    elif os.environ.get("CGR_BUDGET"):
        budget = int(os.environ["CGR_BUDGET"])
    else:
        budget = DEFAULT_BUDGET
    vectors, stats = search(spec, budget)
    if args.json:
        _emit_json(
            {
                "trials": stats.trials,
                "hits": stats.hits,
                "space": stats.space,
                "vectors": [list(vec) for vec in vectors],
            },
            None,
        )
    else:
        print(f"trials: {stats.trials}")
        print(f"hits: {stats.hits}")
        if stats.space is not None:
            print(f"space: {stats.space}")
        for vec in vectors:
            print("vector: " + ",".join(str(a) for a in vec))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgrcode",
        description="Construct, verify, and transform XOR-based MDS array erasure codes "
        "built on complete graphs of rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a code array as JSON or a text grid")
    p.add_argument("--v1", type=int, help="number of rings (even, >= 2)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pif", action="store_true", help="derive offsets from a perfect one-factorization (default)")
    group.add_argument("--offsets", help="explicit comma-separated offset vector")
    group.add_argument("--builtin", help="named built-in offset vector")
    p.add_argument("--placement", help="cycle placement for --pif, e.g. 0,1,2,3,inf")
    p.add_argument("--pi", help="offset assignment permutation for --pif, e.g. 1,3,0,2")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check the MDS property (and the dual's) exhaustively")
    p.add_argument("file", nargs="?", help="code JSON file")
    p.add_argument("--builtin", help="named built-in vector, or 'all'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roundtrip", help="encode, erase columns, decode, compare")
    p.add_argument("file", help="code JSON file")
    p.add_argument("--erase", default="", help="comma-separated column indices")
    p.add_argument("--data", default="random:0", help="hex:<digits> or random:<seed>")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("metrics", help="update/decode complexity per configuration")
    p.add_argument("--v1-range", default="2:10", help="inclusive range lo:hi, step 2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("dual", help="swap vertex/edge roles of an array")
    p.add_argument("file", help="code JSON file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("contract", help="reduce a code array to its contracted low-density form")
    p.add_argument("file", help="code JSON file")
    p.add_argument("--order", help="presentation order of source columns, comma-separated")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("search", help="search for valid offset vectors")
    p.add_argument("--v1", type=int, required=True)
    p.add_argument("--free-prefix", action="store_true", help="search all entries, not just inter-ring ones")
    p.add_argument("--strategy", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-trials", type=int, default=1000)
    p.add_argument("--stop-after", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="max exhaustive verifications (or set CGR_BUDGET)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnrecoverableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ContractShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
