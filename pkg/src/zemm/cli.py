"""Command-line front end: ``zemm analyze | verify-paper | genus8 | catalog | classify``.

Exit codes: 0 success, 1 negative result (Unsat, failed check), 2 bad
input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from collections import Counter
from multiprocessing import Pool
from pathlib import Path

from . import __version__
from . import catalog
from .homology import cycle_matrix, spanning_forest
from .lattice import NotPositiveDefinite, classify
from .multigraph import GraphError, Multigraph
from .search import Status, solve_zemm
from .surgery import GENUS7, enumerate_extensions

log = logging.getLogger("zemm")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_tree(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise GraphError(f"--tree expects edge ids, got {text!r}") from None


def _format_text(result) -> str:
    lines = [f"graph {result.graph}: {result.status.value}"]
    if result.gram is not None and result.gram.dim:
        lines += ["  " + " ".join(f"{x:2d}" for x in row) for row in result.gram.entries]
    if result.lattice is not None:
        lines.append(f"lattice {result.lattice.name} (det {result.lattice.determinant}, "
                     f"{result.lattice.root_count} roots)")
    if result.reason:
        lines.append(f"reason: {result.reason}")
    lines.append(f"fixed by propagation {result.fixed_by_propagation}, "
                 f"nodes explored {result.nodes_explored}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        if args.catalog:
            entry = catalog.get(args.catalog)
            graph, tree = entry.graph, list(entry.prescribed_tree)
        elif args.path:
            graph = Multigraph.from_text(Path(args.path).read_text())
            tree = None
        else:
            print("analyze: give a file or --catalog NAME", file=sys.stderr)
            return EXIT_INPUT
        if args.tree is not None:
            tree = _parse_tree(args.tree)
        forest = spanning_forest(graph, tree)
    except (GraphError, catalog.UnknownGraph) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result = solve_zemm(graph, forest)
    if args.format == "text":
        print(_format_text(result))
    else:
        print(_dump(result.to_json()))
    return EXIT_NEGATIVE if result.status is Status.UNSAT else EXIT_OK


def cmd_verify_paper(args) -> int:
    try:
        report = catalog.verify_catalog(args.only or None)
    except catalog.UnknownGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return _print_report(report)


def _print_report(report) -> int:
    for check in report.checks:
        if check.skipped:
            print(f"SKIP {check.name} (no fixtures)")
        elif check.ok:
            print(f"PASS {check.name} {check.lattice}")
        else:
            print(f"FAIL {check.name}")
            for f in check.failures:
                print(f"  {f}")
    print(f"{report.passed}/{report.total} fixture checks passed")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _solve_record(item: tuple[str, str]) -> tuple[str, float]:
    text, checksum = item
    g = Multigraph.from_text(text)
    start = time.perf_counter()
    result = solve_zemm(g)
    record = {"graph": g.name, "checksum": checksum, "version": __version__,
              "result": result.to_json()}
    return _dump(record), time.perf_counter() - start


def _load_done(path: Path) -> dict[str, str]:
    """Completed records by checksum; a torn trailing line is ignored."""
    done = {}
    if not path.exists():
        return done
    for line in path.read_text().splitlines():
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            continue
        if rec.get("version") == __version__ and "checksum" in rec:
            done[rec["checksum"]] = _dump(rec)
    return done


def select_corpus(base: str | None = None, limit: int | None = None) -> list[Multigraph]:
    bases = (base,) if base else GENUS7
    graphs = [h for b in bases for _, h in enumerate_extensions(catalog.get(b).graph)]
    return graphs[:limit] if limit is not None else graphs


def cmd_genus8(args) -> int:
    if args.base and args.base not in GENUS7:
        print(f"error: --base must be one of {', '.join(GENUS7)}", file=sys.stderr)
        return EXIT_INPUT
    if args.limit is not None and args.limit < 0:
        print("error: --limit must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    graphs = select_corpus(args.base, args.limit)
    out = Path(args.out)
    results_path = out / "results.jsonl"
    try:
        (out / "graphs").mkdir(parents=True, exist_ok=True)
        texts = [g.to_text() for g in graphs]
        sums = [g.checksum() for g in graphs]
        with open(out / "manifest.txt", "w") as mf:
            for g, text, s in zip(graphs, texts, sums):
                (out / "graphs" / f"{g.name}.g").write_text(text)
                mf.write(f"{g.name} {s}\n")
        done = _load_done(results_path) if args.resume else {}
        todo = [(t, s) for t, s in zip(texts, sums) if s not in done]
        log.info("%d graphs selected, %d already done", len(graphs), len(graphs) - len(todo))
        fresh: dict[str, str] = {}
        timings = []
        # records are appended in corpus order as they arrive so an
        # interrupted run leaves a usable prefix for --resume
        with open(results_path, "a" if args.resume else "w") as rf:
            if args.jobs > 1 and len(todo) > 1:
                pool = Pool(args.jobs)
                stream = pool.imap(_solve_record, todo, chunksize=4)
            else:
                pool = None
                stream = map(_solve_record, todo)
            try:
                for (_, s), (line, secs) in zip(todo, stream):
                    fresh[s] = line
                    timings.append((json.loads(line)["graph"], secs))
                    rf.write(line + "\n")
                    rf.flush()
            finally:
                if pool is not None:
                    pool.close()
                    pool.join()
        lines = [done.get(s) or fresh[s] for s in sums]
        tmp = results_path.with_suffix(".tmp")
        tmp.write_text("".join(line + "\n" for line in lines))
        os.replace(tmp, results_path)
        with open(out / "timings.tsv", "a") as tf:
            for name, secs in timings:
                tf.write(f"{name}\t{secs:.4f}\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    counts = Counter(json.loads(line)["result"]["status"] for line in lines)
    lattices = Counter((json.loads(line)["result"]["lattice"] or {}).get("name") for line in lines)
    found, unsat = counts.get("Found", 0), counts.get("Unsat", 0)
    print(_dump({"Found": found, "Unsat": unsat, "total": len(lines),
                 "lattices": {str(k): v for k, v in sorted(lattices.items(), key=str)}}))
    return EXIT_OK if unsat == 0 and found == len(graphs) else EXIT_NEGATIVE


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            e = catalog.get(name)
            tags = [f"genus {e.expected_genus}", f"{e.graph.num_vertices} vertices",
                    f"{len(e.graph.edges)} edges"]
            if e.paper_gram is not None:
                tags.append("fixtures")
            tags += list(e.notes)
            print(f"{name}\t" + ", ".join(tags))
        return EXIT_OK
    if not args.name:
        print("error: catalog export needs a graph name", file=sys.stderr)
        return EXIT_INPUT
    try:
        entry = catalog.get(args.name)
    except catalog.UnknownGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not args.fixtures:
        sys.stdout.write(entry.graph.to_text())
        return EXIT_OK
    cm = entry.paper_cycle_matrix or cycle_matrix(entry.graph, entry.forest)
    print(_dump({
        "name": entry.name,
        "genus": entry.expected_genus,
        "tree": list(entry.prescribed_tree),
        "cycle_matrix": cm.to_json(),
        "gram": entry.paper_gram.to_list() if entry.paper_gram is not None else None,
        "form": entry.form,
        "notes": list(entry.notes),
    }))
    return EXIT_OK


def _read_gram(data) -> list[list[int]]:
    if isinstance(data, dict):
        if "result" in data:
            data = data["result"]
        data = data.get("gram")
    if not isinstance(data, list):
        raise ValueError("expected a matrix or an object with a 'gram' key")
    if data and not isinstance(data[0], list):
        n = int(round(len(data) ** 0.5))
        if n * n != len(data):
            raise ValueError(f"flat Gram of length {len(data)} is not square")
        data = [data[i * n:(i + 1) * n] for i in range(n)]
    rows = [[int(x) for x in r] for r in data]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("Gram matrix is not square")
    if any(rows[i][j] != rows[j][i] for i in range(len(rows)) for j in range(i)):
        raise ValueError("Gram matrix is not symmetric")
    return rows


def cmd_classify(args) -> int:
    try:
        raw = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
        rows = _read_gram(json.loads(raw))
        cls = classify(rows)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, TypeError, NotPositiveDefinite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_dump(cls.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zemm", description="Find and classify integral edge-minimizing metrics on graphs.",
        epilog="exit codes: 0 ok, 1 Unsat or failed check, 2 bad input, 3 I/O error; "
               "ZEMM_LOG sets the log level")
    p.add_argument("--version", action="version", version=f"zemm {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="search for a Z-emm on one graph")
    a.add_argument("path", nargs="?", help="edge-list file")
    a.add_argument("--catalog", metavar="NAME", help="use a built-in graph")
    a.add_argument("--tree", metavar="IDS", help="spanning tree edge ids, comma separated")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-paper", help="check the stored fixtures")
    v.add_argument("--only", action="append", metavar="NAME", help="check one graph (repeatable)")
    v.set_defaults(func=cmd_verify_paper)

    g = sub.add_parser("genus8", help="solve the genus-8 extension corpus")
    g.add_argument("--out", default="genus8-out", help="output directory")
    g.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    g.add_argument("--resume", action="store_true",
                   help="keep finished records whose checksum matches")
    g.add_argument("--limit", type=int, help="only the first LIMIT graphs")
    g.add_argument("--base", metavar="NAME", help="restrict to one genus-7 base graph")
    g.set_defaults(func=cmd_genus8)

    c = sub.add_parser("catalog", help="list or export built-in graphs")
    c.add_argument("action", choices=("list", "export"))
    c.add_argument("name", nargs="?")
    c.add_argument("--fixtures", action="store_true", help="export fixtures as JSON")
    c.set_defaults(func=cmd_catalog)

    k = sub.add_parser("classify", help="identify the root lattice of a Gram matrix")
    k.add_argument("path", help="JSON file ('-' for stdin)")
    k.set_defaults(func=cmd_classify)
    return p


def main(argv: list[str] | None = None) -> int:
    level = getattr(logging, os.environ.get("ZEMM_LOG", "WARNING").upper(), None)
    logging.basicConfig(level=level if isinstance(level, int) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)
