"""Console entry point: run the HTTP service with uvicorn."""

from __future__ import annotations

import argparse

import uvicorn

from .app import create_app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="adaptalearn-serve",
        description="Run the adaptive e-learning HTTP service.")
    parser.add_argument("--data-dir", default="./data",
                        help="directory for ontologies, accounts, and logs")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--monitor-period", type=float, default=30.0,
                        help="seconds between Monitor scans of the ontology")
    args = parser.parse_args(argv)

    app = create_app(args.data_dir, monitor_period=args.monitor_period)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
