"""HTTP embedding service speaking the vedsum /embed wire protocol.

POST /embed with ``{"sentences": [...]}`` returns
``{"dim": d, "vectors": [[...], ...]}``; every malformed request gets
status 400 with an ``{"error": ...}`` body.  Requests are encoded in
internal batches regardless of request size.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .encoder import DEFAULT_BATCH_SIZE, SentenceEncoder
from .models import ModelEntry


def create_app(encoder: SentenceEncoder, batch_size: int = DEFAULT_BATCH_SIZE) -> FastAPI:
    app = FastAPI(title="vedsum-embed", docs_url=None, redoc_url=None)

    @app.post("/embed")
    async def embed(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return JSONResponse({"error": "body is not valid JSON"}, status_code=400)
        if not isinstance(payload, dict) or "sentences" not in payload:
            return JSONResponse(
                {"error": "body must be an object with a 'sentences' array"},
                status_code=400,
            )
        sentences = payload["sentences"]
        if not isinstance(sentences, list) or not all(
            isinstance(s, str) for s in sentences
        ):
            return JSONResponse(
                {"error": "'sentences' must be an array of strings"}, status_code=400
            )
        vectors = encoder.encode(sentences, batch_size=batch_size)
        return {"dim": encoder.dim, "vectors": vectors.tolist()}

    @app.get("/healthz")
    async def healthz():
        return {
            "model": encoder.entry.alias,
            "hub_id": encoder.entry.hub_id,
            "revision": encoder.entry.revision,
            "dim": encoder.dim,
        }

    return app


def serve(entry: ModelEntry, port: int, host: str = "127.0.0.1") -> None:
    """Load the model and serve until interrupted."""
    import uvicorn

    app = create_app(SentenceEncoder(entry))
    uvicorn.run(app, host=host, port=port, log_level="warning")
