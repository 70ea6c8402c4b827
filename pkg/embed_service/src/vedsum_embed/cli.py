"""``vedsum-embed``: export embedding caches or serve a live model."""

from __future__ import annotations

import argparse
import logging
import sys

from .encoder import DEFAULT_BATCH_SIZE, ModelLoadError
from .export import export_cache
from .models import ROSTER, resolve_model
from .server import serve


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vedsum-embed",
        description="Transformer sentence embeddings for the vedsum toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    aliases = ", ".join(sorted(ROSTER))
    p = sub.add_parser("export", help="embed a sentences JSONL into a cache file")
    p.add_argument("--model", required=True, help=f"roster alias ({aliases}), hub id, or local path")
    p.add_argument("--in", dest="input", required=True, help="JSONL of {key, text}")
    p.add_argument("--out", required=True, help="cache file to write")
    p.add_argument("--batch-size", type=int, default=DEFAULT_BATCH_SIZE)
    p.add_argument("--max-tokens", type=int, default=None)
    p.add_argument("--revision", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("serve", help="serve the /embed wire protocol")
    p.add_argument("--model", required=True, help=f"roster alias ({aliases}), hub id, or local path")
    p.add_argument("--port", type=int, default=8901)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--max-tokens", type=int, default=None)
    p.add_argument("--revision", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def cmd_export(args) -> int:
    entry = resolve_model(args.model, max_tokens=args.max_tokens, revision=args.revision)
    count = export_cache(entry, args.input, args.out, batch_size=args.batch_size)
    print(f"wrote {count} vectors from {entry.alias} ({entry.hub_id}) to {args.out}")
    return 0


def cmd_serve(args) -> int:
    entry = resolve_model(args.model, max_tokens=args.max_tokens, revision=args.revision)
    print(f"serving {entry.alias} ({entry.hub_id}) on {args.host}:{args.port}")
    serve(entry, port=args.port, host=args.host)
    return 0


def run(argv: list[str]) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (ModelLoadError, ValueError, OSError) as err:
        print(f"vedsum-embed: error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
