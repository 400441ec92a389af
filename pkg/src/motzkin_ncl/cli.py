"""Command line interface.

Subcommands: ``count`` prints counting sequences, ``enumerate`` streams
whole families, ``map`` applies the correspondences to objects (from an
argument or stdin, one per line), ``render`` draws ASCII diagrams, and
``verify`` replays the property suites end to end.

Exit codes: 0 on success, 1 on domain errors or failed verification,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Callable, Iterator

from .bijection import path_to_partition, partition_to_path
from .counting import (
    large_motzkin_numbers,
    motzkin32_numbers,
    ncl_counts,
    schroder_numbers,
    verify_identities,
)
from .doubling import double, project
from .enumerate import gen_large, gen_motzkin32, gen_ncl, gen_schroder
from .structures import (
    Arc,
    LinkedPartition,
    parse_partition,
    render_ascii,
    render_partition,
    validate_large,
    validate_motzkin,
    validate_ncl,
    validate_ncl_blockwise,
)

GUARD_ENV = "SCHRODER_MAX_OBJECTS"
GUARD_DEFAULT = 10**8

FAMILIES = ("m32", "large", "ncl", "schroder-large", "schroder-little")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin-ncl",
        description="Large colored Motzkin paths, noncrossing linked "
        "partitions, and the maps between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print a counting sequence")
    count.add_argument("--seq", required=True, choices=("m", "L", "S", "s", "f"))
    count.add_argument("--upto", required=True, type=int, metavar="N")

    enum = sub.add_parser("enumerate", help="stream a whole family")
    enum.add_argument("--family", required=True, choices=FAMILIES)
    enum.add_argument("--n", required=True, type=int)
    enum.add_argument("--limit", type=int, metavar="X")
    enum.add_argument("--format", choices=("text", "jsonl"), default="text")

    mapping = sub.add_parser("map", help="apply a correspondence to objects")
    which = mapping.add_mutually_exclusive_group(required=True)
    which.add_argument("--phi", action="store_true", help="path to partition")
    which.add_argument(
        "--phi-inv", dest="phi_inv", action="store_true", help="partition to path"
    )
    which.add_argument(
        "--double", type=int, choices=(0, 1), metavar="BIT", default=None,
        help="plain path + bit to large path",
    )
    which.add_argument(
        "--project", action="store_true", help="large path to plain path + bit"
    )
    mapping.add_argument(
        "object", nargs="?", help="object text; stdin lines when omitted"
    )

    render = sub.add_parser("render", help="draw an ASCII diagram")
    what = render.add_mutually_exclusive_group(required=True)
    what.add_argument("--path", metavar="WORD")
    what.add_argument("--partition", metavar="BLOCKS")
    render.add_argument("--format", choices=("text", "jsonl"), default="text")

    verify = sub.add_parser("verify", help="run the property suites")
    verify.add_argument("--max-n", dest="max_n", type=int, default=6)
    verify.add_argument("--identities", type=int, default=1000, metavar="N")

    return parser


# ---------------------------------------------------------------------------
# count


def cmd_count(args: argparse.Namespace) -> int:
    if args.seq == "f":
        if args.upto < 1:
            print("f starts at 1; --upto must be at least 1", file=sys.stderr)
            return 1
        table = ncl_counts(args.upto)
    else:
        if args.upto < 0:
            print("--upto must not be negative", file=sys.stderr)
            return 1
        if args.seq == "m":
            table = motzkin32_numbers(args.upto)
        elif args.seq == "L":
            table = large_motzkin_numbers(args.upto)
        elif args.seq == "S":
            table = schroder_numbers(args.upto)[0]
        else:
            table = schroder_numbers(args.upto)[1]
    for _, value in table.items():
        print(value)
    return 0


# ---------------------------------------------------------------------------
# enumerate


def _family_stream(family: str, n: int) -> tuple[Iterator[str], int]:
    """Texts of the family members plus the predicted cardinality."""
    if family == "m32":
        return (p.text for p in gen_motzkin32(n)), motzkin32_numbers(n)[n]
    if family == "large":
        return (p.text for p in gen_large(n)), large_motzkin_numbers(n)[n]
    if family == "ncl":
        return (render_partition(q) for q in gen_ncl(n)), ncl_counts(n)[n]
    big, small = schroder_numbers(n)
    if family == "schroder-large":
        return (p.text for p in gen_schroder(n, "large")), big[n]
    return (p.text for p in gen_schroder(n, "little")), small[n]


def cmd_enumerate(args: argparse.Namespace) -> int:
    stream, predicted = _family_stream(args.family, args.n)
    guard = int(os.environ.get(GUARD_ENV, GUARD_DEFAULT))
    if args.limit is None and predicted > guard:
        print(
            f"refusing to stream {predicted} objects (guard {guard}); "
            f"pass --limit or raise {GUARD_ENV}",
            file=sys.stderr,
        )
        return 1
    if args.limit is not None:
        stream = islice(stream, max(args.limit, 0))
    for text in stream:
        if args.format == "jsonl":
            print(_jsonl(args.family, args.n, text))
        else:
            print(text)
    return 0


def _jsonl(kind: str, n: int, text: str) -> str:
    return json.dumps({"kind": kind, "n": n, "text": text}, separators=(",", ":"))


# ---------------------------------------------------------------------------
# map


def _map_transform(args: argparse.Namespace) -> Callable[[str], str]:
    if args.phi:
        return lambda line: render_partition(path_to_partition(validate_large(line)))
    if args.phi_inv:
        return lambda line: partition_to_path(parse_partition(line)).text
    if args.double is not None:
        bit = args.double
        return lambda line: double(validate_motzkin(line), bit).text
    q_and_bit = lambda line: project(validate_large(line))
    return lambda line: "%s\t%d" % q_and_bit(line)


def cmd_map(args: argparse.Namespace) -> int:
    transform = _map_transform(args)
    if args.object is not None:
        lines = [args.object]
    else:
        lines = sys.stdin.read().splitlines()
    for line in lines:
        print(transform(line))
    return 0


# ---------------------------------------------------------------------------
# render


def cmd_render(args: argparse.Namespace) -> int:
    if args.path is not None:
        obj = validate_motzkin(args.path)
        kind, n = "path", len(obj)
    else:
        obj = validate_ncl(parse_partition(args.partition))
        kind, n = "partition", obj.n
    diagram = render_ascii(obj)
    if args.format == "jsonl":
        print(_jsonl(kind, n, diagram))
    else:
        print(diagram)
    return 0


# ---------------------------------------------------------------------------
# verify


@dataclass
class SuiteResult:
    name: str
    scope: str
    checked: int
    passed: bool
    elapsed: float
    counterexample: str | None = None


def _result(name, scope, checked, passed, started, counterexample=None):
    return SuiteResult(
        name, scope, checked, passed, time.perf_counter() - started, counterexample
    )


def suite_bijectivity(max_n: int) -> SuiteResult:
    """Image of the path map = independently generated partitions."""
    started = time.perf_counter()
    checked = 0
    for n in range(max_n + 1):
        image: dict[str, str] = {}
        for path in gen_large(n):
            text = render_partition(path_to_partition(path))
            if text in image:
                return _result(
                    "bijectivity", f"n<={max_n}", checked, False, started,
                    f"{image[text]!r} and {path.text!r} both map to {text}",
                )
            image[text] = path.text
            checked += 1
        oracle = {render_partition(q) for q in gen_ncl(n + 1)}
        if set(image) != oracle:
            witness = sorted(set(image) ^ oracle)[0]
            side = "missing from image" if witness in oracle else "not a partition"
            return _result(
                "bijectivity", f"n<={max_n}", checked, False, started,
                f"{witness} ({side}, n={n})",
            )
    return _result("bijectivity", f"n<={max_n}", checked, True, started)


def suite_round_trip(max_n: int) -> SuiteResult:
    """Both compositions are the identity, exhaustively."""
    started = time.perf_counter()
    checked = 0
    for n in range(max_n + 1):
        for path in gen_large(n):
            if partition_to_path(path_to_partition(path)) != path:
                return _result(
                    "round-trip", f"n<={max_n}", checked, False, started, path.text
                )
            checked += 1
        for q in gen_ncl(n + 1):
            if path_to_partition(partition_to_path(q)) != q:
                return _result(
                    "round-trip", f"n<={max_n}", checked, False, started,
                    render_partition(q),
                )
            checked += 1
    return _result("round-trip", f"n<={max_n}", checked, True, started)


def suite_doubling(max_n: int) -> SuiteResult:
    """The doubling map is a bijection paths x bits -> large paths."""
    started = time.perf_counter()
    checked = 0
    m = motzkin32_numbers(max(max_n - 1, 0))
    large = large_motzkin_numbers(max_n)
    for n in range(1, max_n + 1):
        seen = 0
        for path in gen_large(n):
            q, bit = project(path)
            if double(q, bit) != path:
                return _result(
                    "doubling", f"n<={max_n}", checked, False, started, path.text
                )
            seen += 1
            checked += 1
        if seen != large[n] or seen != 2 * m[n - 1]:
            return _result(
                "doubling", f"n<={max_n}", checked, False, started,
                f"count mismatch at n={n}: {seen} large paths",
            )
        for q in gen_motzkin32(n - 1):
            for bit in (0, 1):
                if project(double(q, bit)) != (q, bit):
                    return _result(
                        "doubling", f"n<={max_n}", checked, False, started,
                        f"{q.text!r} with bit {bit}",
                    )
                checked += 1
    return _result("doubling", f"n<={max_n}", checked, True, started)


def suite_validator_equivalence(max_n: int) -> SuiteResult:
    """Arc-level and block-level validators agree on every arc set."""
    started = time.perf_counter()
    bound = min(max_n, 6)  # 2^C(n,2) subsets; 6 keeps this exhaustive yet quick
    checked = 0
    for n in range(1, bound + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(2 ** len(pairs)):
            arcs = frozenset(
                Arc(*pairs[i]) for i in range(len(pairs)) if mask >> i & 1
            )
            p = LinkedPartition(n, arcs)
            by_arcs = _accepts(validate_ncl, p)
            by_blocks = _accepts(validate_ncl_blockwise, p)
            checked += 1
            if by_arcs != by_blocks:
                arcs_text = ",".join(f"({a},{b})" for a, b in sorted(arcs))
                return _result(
                    "validator-equivalence", f"n<={bound}", checked, False, started,
                    f"n={n} arcs {arcs_text}: arc-level {by_arcs}, "
                    f"block-level {by_blocks}",
                )
    return _result("validator-equivalence", f"n<={bound}", checked, True, started)


def _accepts(validator, p: LinkedPartition) -> bool:
    try:
        validator(p)
    except ValueError:
        return False
    return True


def suite_identities(upto: int) -> SuiteResult:
    started = time.perf_counter()
    report = verify_identities(upto)
    for check in report.checks:
        if not check.holds:
            return _result(
                "identities", f"n<={upto}", len(report.checks), False, started,
                f"{check.name} fails first at n={check.first_failure}",
            )
    return _result("identities", f"n<={upto}", 4 * upto, True, started)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        print("--max-n must not be negative", file=sys.stderr)
        return 1
    if args.identities < 1:
        print("--identities must be at least 1", file=sys.stderr)
        return 1
    results = [
        suite_bijectivity(args.max_n),
        suite_round_trip(args.max_n),
        suite_doubling(args.max_n),
        suite_validator_equivalence(args.max_n),
        suite_identities(args.identities),
    ]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{r.name:<24} {r.scope:<10} {r.checked:>9} checked  "
            f"{status}  {r.elapsed:8.2f}s"
        )
    failures = [r for r in results if not r.passed]
    for r in failures:
        print(f"counterexample ({r.name}): {r.counterexample}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "count": cmd_count,
        "enumerate": cmd_enumerate,
        "map": cmd_map,
        "render": cmd_render,
        "verify": cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); not our error
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
