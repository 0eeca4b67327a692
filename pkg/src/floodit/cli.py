"""Command-line interface: floodit solve|reduce|verify|gen|bench.

Exit codes: 0 success, 1 usage error or failed verification, 2 parse error,
3 capacity or budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import dp2xn, gen, oracle, reduction
from .board import parse_board, serialize_board, to_graph
from .engine import replay
from .errors import BudgetExceededError, CapacityError, ParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3

AUTO_BFS_MAX_SQUARES = 12
BENCH_BUDGET_SECONDS = 60.0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="floodit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a board file exactly")
    p_solve.add_argument("board", help="board file path")
    p_solve.add_argument("--method", choices=("dp", "bfs", "auto"), default="auto")
    p_solve.add_argument("--target", help="final colour token")
    p_solve.add_argument("--emit-sequence", action="store_true")
    p_solve.add_argument("--json", action="store_true")

    p_reduce = sub.add_parser("reduce", help="compile a graph into a board")
    p_reduce.add_argument("graph", help="edge-list file path")
    p_reduce.add_argument("-o", "--output", required=True, help="board file to write")
    p_reduce.add_argument("--meta", help="metadata JSON file to write")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--exhaustive", nargs=2, type=int, metavar=("N", "C"))
    p_verify.add_argument("--random", nargs=3, type=int, metavar=("COUNT", "N", "C"))
    p_verify.add_argument("--lemmas", action="store_true")
    p_verify.add_argument("--reduction", action="store_true")
    p_verify.add_argument("--seed", type=int, default=0)

    p_gen = sub.add_parser("gen", help="emit a random board on stdout")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--colours", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="time the dynamic program")
    p_bench.add_argument("--n-range", required=True, help="A..B inclusive")
    p_bench.add_argument("--colours", type=int, required=True)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--json", action="store_true")
    return parser


def _sequence_payload(board, moves):
    out = []
    for mv in moves:
        row, col = divmod(mv.vertex, board.n)
        out.append({"row": row, "col": col, "colour": board.palette[mv.colour]})
    return out


def _cmd_solve(args) -> int:
    try:
        with open(args.board) as fh:
            board = parse_board(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.board}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"error: {args.board}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    target = None
    if args.target is not None:
        if args.target not in board.palette:
            raise _UsageError(f"unknown colour token {args.target!r}")
        target = board.palette.index(args.target)

    method = args.method
    if method == "auto":
        if 2 * board.n <= AUTO_BFS_MAX_SQUARES or len(board.palette) > dp2xn.DP_COLOUR_CAP:
            method = "bfs"
        else:
            method = "dp"

    start = time.perf_counter()
    moves = None
    try:
        if method == "dp":
            value, table = dp2xn.solve(board, target=target)
            stats = table.stats().__dict__
            if args.emit_sequence:
                moves = dp2xn.reconstruct(table)
        else:
            result = oracle.min_moves(to_graph(board), target=target)
            if not result.is_exact:
                print(f"error: search budget exhausted ({result.reason})", file=sys.stderr)
                return EXIT_CAPACITY
            value = result.value
            stats = {"states": result.states_explored}
            if args.emit_sequence:
                moves = result.witness
    except (CapacityError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    millis = (time.perf_counter() - start) * 1000.0

    if moves is not None:
        final, flooded = replay(to_graph(board), moves)
        if not flooded or (target is not None and final.colouring[0] != target):
            print("error: emitted sequence failed replay validation", file=sys.stderr)
            return EXIT_CAPACITY

    if args.json:
        payload = {
            "n": board.n,
            "colours": len(board.palette),
            "method": method,
            "value": value,
            "millis": millis,
            "stats": stats,
        }
        if moves is not None:
            payload["sequence"] = _sequence_payload(board, moves)
        print(json.dumps(payload, indent=2))
    else:
        print(f"value {value} (method {method}, {millis:.1f} ms)")
        if moves is not None:
            for entry in _sequence_payload(board, moves):
                print(f"{entry['row']} {entry['col']} {entry['colour']}")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    try:
        with open(args.graph) as fh:
            instance = reduction.parse_graph(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.graph}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"error: {args.graph}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    board, meta = reduction.build_board(instance)
    with open(args.output, "w") as fh:
        fh.write(serialize_board(board))
    if args.meta:
        with open(args.meta, "w") as fh:
            json.dump(meta.as_dict(), fh, indent=2)
            fh.write("\n")
    print(f"wrote {args.output}: n={meta.n}, N={meta.moves_base}, palette={len(board.palette)}")
    return EXIT_OK


def _report(name: str, ok: bool, detail: str = "") -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    return ok


def _cmd_verify(args) -> int:
    if not (args.exhaustive or args.random or args.lemmas or args.reduction):
        raise _UsageError("choose at least one of --exhaustive/--random/--lemmas/--reduction")
    all_ok = True
    rng = random.Random(args.seed)

    if args.exhaustive:
        n, colours = args.exhaustive
        if n > 3 or colours > 3:
            print("error: exhaustive suite is limited to n <= 3, colours <= 3", file=sys.stderr)
            return EXIT_CAPACITY
        import itertools

        tokens = gen.colour_tokens(colours)
        ok = True
        boards = 0
        for cells in itertools.product(range(colours), repeat=2 * n):
            from .board import Board2xN

            board = Board2xN(n, (tuple(cells[:n]), tuple(cells[n:])), tokens)
            graph = to_graph(board)
            vref, tref = dp2xn.solve(board, mode="reference")
            vwl, twl = dp2xn.solve(board, mode="worklist")
            exact = oracle.min_moves(graph)
            ok &= vref == vwl == exact.value
            ok &= tref.entries() == twl.entries()
            for d in range(colours):
                vt, _goal = tref.board_value(target=d)
                ok &= vt == oracle.min_moves(graph, target=d).value
            boards += 1
            if not ok:
                break
        all_ok &= _report(f"exhaustive {n} {colours}", ok, f"{boards} boards")

    if args.random:
        count, n, colours = args.random
        ok = True
        for _ in range(count):
            board = gen.random_board(rng, n, colours)
            value, table = dp2xn.solve(board)
            exact = oracle.min_moves(to_graph(board))
            if not exact.is_exact or exact.value != value:
                ok = False
                break
            moves = dp2xn.reconstruct(table)
            final, flooded = replay(to_graph(board), moves)
            if not flooded or len(moves) != value:
                ok = False
                break
        all_ok &= _report(f"random {count} boards {n}x{colours}", ok)

    if args.lemmas:
        ok_trees = True
        for _ in range(30):
            g = gen.random_connected_graph(rng, rng.randint(2, 7), 3)
            for d in range(len(g.palette)):
                res = oracle.check_spanning_tree_theorem(g, d)
                ok_trees &= res is True
        all_ok &= _report("spanning-tree optimum equality (30 graphs)", ok_trees)

        ok_leaves = True
        for _ in range(30):
            t = oracle.TreeView(gen.random_tree(rng, rng.randint(3, 9), 3))
            ok_leaves &= oracle.check_no_leaf_moves(t) is True
        all_ok &= _report("no-leaf-moves optimum equality (30 trees)", ok_leaves)

        ok_sub = True
        for _ in range(30):
            g = gen.random_connected_graph(rng, rng.randint(2, 7), 3)
            part_a, part_b = gen.random_covering_pair(rng, g)
            for d in range(len(g.palette)):
                ok_sub &= oracle.check_subadditivity(g, part_a, part_b, d) is True
        all_ok &= _report("cover subadditivity (30 graphs)", ok_sub)

    if args.reduction:
        for name, text, want in (
            ("K2", "0 1\n", "EQUAL"),
            ("P3", "0 1\n1 2\n", "EQUAL"),
            ("K3", "0 1\n0 2\n1 2\n", "UNRESOLVED"),
        ):
            rep = reduction.verify_reduction(reduction.parse_graph(text))
            detail = f"bracket {rep.bracket}, N+tau={rep.moves_base + rep.tau}"
            all_ok &= _report(f"reduction {name} -> {rep.verdict}", rep.verdict == want, detail)

    return EXIT_OK if all_ok else EXIT_USAGE


def _cmd_gen(args) -> int:
    if args.n < 1 or args.colours < 1:
        raise _UsageError("--n and --colours must be >= 1")
    board = gen.random_board(random.Random(args.seed), args.n, args.colours)
    sys.stdout.write(serialize_board(board))
    return EXIT_OK


def _cmd_bench(args) -> int:
    try:
        lo, hi = args.n_range.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise _UsageError(f"bad --n-range {args.n_range!r}, expected A..B")
    if lo < 1 or hi < lo:
        raise _UsageError("bad --n-range bounds")
    if args.colours > dp2xn.DP_COLOUR_CAP:
        print(f"error: colours above the cap of {dp2xn.DP_COLOUR_CAP}", file=sys.stderr)
        return EXIT_CAPACITY
    rng = random.Random(args.seed)
    rows = []
    exceeded = False
    for n in range(lo, hi + 1):
        board = gen.random_board(rng, n, args.colours)
        start = time.perf_counter()
        try:
            value, table = dp2xn.solve(board, time_budget=BENCH_BUDGET_SECONDS)
        except BudgetExceededError:
            exceeded = True
            break
        millis = (time.perf_counter() - start) * 1000.0
        stats = table.stats()
        rows.append(
            {
                "n": n,
                "value": value,
                "millis": millis,
                "keys": stats.keys,
                "sweeps": stats.sweeps,
                "relaxations": stats.relaxations,
            }
        )
    if args.json:
        print(json.dumps({"colours": args.colours, "rows": rows}, indent=2))
    else:
        print(f"{'n':>4} {'value':>6} {'millis':>10} {'keys':>10} {'sweeps':>7}")
        for row in rows:
            print(
                f"{row['n']:>4} {row['value']:>6} {row['millis']:>10.1f}"
                f" {row['keys']:>10} {row['sweeps']:>7}"
            )
    if exceeded:
        print("error: time budget exceeded; emitted partial table", file=sys.stderr)
        return EXIT_CAPACITY
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
