"""Shared fixtures: corpus tree builder and a stub embedding HTTP server."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

from vedsum.data import mini_corpus_path

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def mini_corpus_root() -> Path:
    return mini_corpus_path()


def build_corpus_tree(root: Path, clusters: dict) -> Path:
    """Materialize a corpus directory.

    ``clusters`` maps cluster_id -> {"docs": {doc_id: text},
    "refs": {ref_id: text}, "sents": {doc_id: [sentences]}} ("sents" optional).
    """
    for cluster_id, parts in clusters.items():
        docs_dir = root / cluster_id / "docs"
        refs_dir = root / cluster_id / "refs"
        docs_dir.mkdir(parents=True)
        refs_dir.mkdir(parents=True)
        for doc_id, text in parts.get("docs", {}).items():
            (docs_dir / f"{doc_id}.txt").write_text(text, encoding="utf-8")
        for ref_id, text in parts.get("refs", {}).items():
            (refs_dir / f"{ref_id}.txt").write_text(text, encoding="utf-8")
        for doc_id, sentences in parts.get("sents", {}).items():
            sents_dir = root / cluster_id / "sents"
            sents_dir.mkdir(exist_ok=True)
            (sents_dir / f"{doc_id}.sents").write_text(
                "".join(s + "\n" for s in sentences), encoding="utf-8"
            )
    return root


def stub_vector(text: str) -> list[float]:
    """Deterministic 2-D vector the stub serves; tests recompute it locally
    to verify response ordering."""
    return [float(len(text)), float(sum(ord(ch) for ch in text) % 97)]


class StubEmbedServer:
    """Minimal /embed service for provider tests.

    ``mode`` selects canned misbehaviour:
      ok          well-formed responses built from stub_vector
      wrong_count one vector fewer than requested
      bad_json    a non-JSON body
      error_400   status 400 with an {"error": ...} body
      dim_change  dim 2 on the first request, dim 3 afterwards
    """

    def __init__(self, mode: str = "ok"):
        self.mode = mode
        self.batch_sizes: list[int] = []
        self.requests = 0
        outer = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):
                pass

            def do_POST(self):
                if self.path != "/embed":
                    self._reply(404, {"error": "not found"})
                    return
                length = int(self.headers.get("Content-Length", "0"))
                body = self.rfile.read(length)
                try:
                    payload = json.loads(body)
                    sentences = payload["sentences"]
                except (ValueError, KeyError, TypeError):
                    self._reply(400, {"error": "malformed request"})
                    return
                outer.requests += 1
                outer.batch_sizes.append(len(sentences))
                mode = outer.mode
                if mode == "error_400":
                    self._reply(400, {"error": "boom"})
                elif mode == "bad_json":
                    self.send_response(200)
                    self.send_header("Content-Type", "application/json")
                    self.end_headers()
                    self.wfile.write(b"this is not json")
                elif mode == "wrong_count":
                    vectors = [stub_vector(s) for s in sentences[:-1]]
                    self._reply(200, {"dim": 2, "vectors": vectors})
                elif mode == "dim_change":
                    dim = 2 if outer.requests == 1 else 3
                    vectors = [[0.0] * dim for _ in sentences]
                    self._reply(200, {"dim": dim, "vectors": vectors})
                else:
                    vectors = [stub_vector(s) for s in sentences]
                    self._reply(200, {"dim": 2, "vectors": vectors})

            def _reply(self, status: int, payload: dict):
                data = json.dumps(payload).encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

        self._server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)

    @property
    def endpoint(self) -> str:
        host, port = self._server.server_address[:2]
        return f"http://{host}:{port}"

    def __enter__(self):
        self._thread.start()
        return self

    def __exit__(self, *exc):
        self._server.shutdown()
        self._server.server_close()


@pytest.fixture
def stub_server():
    def factory(mode: str = "ok") -> StubEmbedServer:
        return StubEmbedServer(mode)

    return factory
