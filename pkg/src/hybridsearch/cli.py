"""Command-line entry points: build/persist indices, run one query, serve the
HTTP API, and benchmark end-to-end search latency."""

from __future__ import annotations

import argparse
import json
import logging
import statistics
import sys
import time
from pathlib import Path

from .config import EngineConfig, load_config
from .engine import SearchEngine
from .errors import EngineError, MissingIndexError

logger = logging.getLogger(__name__)

BENCH_QUERIES = [
    "How has the trend of movie budgets changed over time for different genres?",
    "elections",
    "treemap stocks",
    "sales by region",
    "housing prices usa",
    "average tuition by region",
    "covid cases in Canada",
    "correlate budget and gross",
    "world population",
    "crime in usa",
    "top 5 movies by gross",
    "olympics winners",
]


def _engine_config(args) -> EngineConfig:
    overrides = {}
    if getattr(args, "limit", None):
        overrides["result_limit"] = args.limit
    return load_config(args.config, **overrides)


def cmd_index(args) -> int:
    config = _engine_config(args)
    engine = SearchEngine.build(config)
    index_dir = engine.save_indices()
    manifest = json.loads((index_dir / "manifest.json").read_text())
    print(json.dumps(manifest, indent=2))
    return 0


def cmd_query(args) -> int:
    config = _engine_config(args)
    try:
        engine = SearchEngine.load(config)
    except MissingIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: run 'hybridsearch index' to build the indices", file=sys.stderr)
        return 2
    result = engine.search(args.text, limit=args.limit,
                           use_summary_client=not args.no_llm)
    print(json.dumps(result.to_dict(), indent=2))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    config = _engine_config(args)
    try:
        engine = SearchEngine.load(config)
    except MissingIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: run 'hybridsearch index' to build the indices", file=sys.stderr)
        return 2
    if args.no_llm:
        engine.summary_client = None
    static_dir = Path(args.static) if args.static else None
    app = create_app(engine, static_dir=static_dir)
    host = args.host or config.host
    port = args.port or config.port
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def cmd_bench(args) -> int:
    """Measure end-to-end /api/search latency through the ASGI stack."""
    from fastapi.testclient import TestClient

    from .service.app import create_app

    config = _engine_config(args)
    engine = SearchEngine.build(config)
    client = TestClient(create_app(engine))

    queries = BENCH_QUERIES * args.rounds
    for q in BENCH_QUERIES:  # warmup: fill fuzzy caches
        client.get("/api/search", params={"q": q})
    samples = []
    for q in queries:
        start = time.perf_counter()
        response = client.get("/api/search", params={"q": q})
        elapsed = (time.perf_counter() - start) * 1000
        if response.status_code != 200:
            print(f"error: query {q!r} -> {response.status_code}", file=sys.stderr)
            return 1
        samples.append(elapsed)
    samples.sort()
    p50 = statistics.median(samples)
    p95 = samples[int(len(samples) * 0.95) - 1]
    report = {"requests": len(samples),
              "p50_ms": round(p50, 2), "p95_ms": round(p95, 2),
              "max_ms": round(samples[-1], 2)}
    print(json.dumps(report, indent=2))
    return 0 if p95 < args.budget_ms else 1


def build_arg_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="hybridsearch",
        description="Hybrid search over data repositories: generated charts plus "
                    "ranked pre-authored visualizations.")
    root.add_argument("--config", type=Path, default=None,
                      help="JSON config file (defaults to the bundled corpus)")
    sub = root.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build and persist both search indices")
    p_index.set_defaults(func=cmd_index)

    p_query = sub.add_parser("query", help="run one query and print the hybrid result")
    p_query.add_argument("text", help="the search query")
    p_query.add_argument("--limit", type=int, default=None)
    p_query.add_argument("--no-llm", action="store_true",
                         help="skip the summary endpoint even if configured")
    p_query.set_defaults(func=cmd_query)

    p_serve = sub.add_parser("serve", help="serve the HTTP API")
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--limit", type=int, default=None)
    p_serve.add_argument("--no-llm", action="store_true")
    p_serve.add_argument("--static", default=None,
                         help="directory of built UI assets to serve at /")
    p_serve.set_defaults(func=cmd_serve)

    p_bench = sub.add_parser("bench", help="benchmark end-to-end search latency")
    p_bench.add_argument("--rounds", type=int, default=25,
                         help="repetitions of the query suite")
    p_bench.add_argument("--budget-ms", type=float, default=100.0,
                         help="p95 budget; exit nonzero when exceeded")
    p_bench.set_defaults(func=cmd_bench)
    return root


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
