"""Wire-protocol behaviour of the /embed service."""

from __future__ import annotations

import numpy as np
import pytest
from fastapi.testclient import TestClient

from vedsum_embed.server import create_app


@pytest.fixture(scope="module")
def client(request):
    encoder = request.getfixturevalue("tiny_encoder")
    app = create_app(encoder)
    with TestClient(app) as test_client:
        yield test_client


class TestProtocol:
    def test_well_formed_request(self, client):
        response = client.post("/embed", json={"sentences": ["gia gao tang", "mua lon"]})
        assert response.status_code == 200
        payload = response.json()
        assert payload["dim"] == 32
        assert len(payload["vectors"]) == 2
        assert all(len(vec) == 32 for vec in payload["vectors"])

    def test_single_sentence(self, client):
        response = client.post("/embed", json={"sentences": ["doi tuyen viet nam"]})
        assert response.status_code == 200
        assert len(response.json()["vectors"]) == 1

    def test_empty_sentences_list(self, client):
        response = client.post("/embed", json={"sentences": []})
        assert response.status_code == 200
        assert response.json()["vectors"] == []

    def test_malformed_json_is_400(self, client):
        response = client.post(
            "/embed", content=b"{not json", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400
        assert "error" in response.json()

    def test_missing_sentences_key_is_400(self, client):
        response = client.post("/embed", json={"texts": ["x"]})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_non_list_sentences_is_400(self, client):
        response = client.post("/embed", json={"sentences": "just one"})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_non_string_items_are_400(self, client):
        response = client.post("/embed", json={"sentences": ["ok", 7]})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_vectors_match_direct_encoding(self, client, tiny_encoder):
        texts = ["gia gao xuat khau", "mua lon mien trung", "doi tuyen thang"]
        response = client.post("/embed", json={"sentences": texts})
        served = np.array(response.json()["vectors"])
        direct = tiny_encoder.encode(texts)
        np.testing.assert_allclose(served, direct, atol=1e-9)

    def test_internal_batching_handles_large_requests(self, client, tiny_encoder):
        texts = [f"gia gao tang cao {i}" for i in range(70)]
        response = client.post("/embed", json={"sentences": texts})
        assert response.status_code == 200
        served = np.array(response.json()["vectors"])
        assert served.shape == (70, 32)
        np.testing.assert_allclose(served, tiny_encoder.encode(texts), atol=1e-9)

    def test_health_endpoint_reports_model(self, client, tiny_entry):
        response = client.get("/healthz")
        assert response.status_code == 200
        payload = response.json()
        assert payload["model"] == "tiny-test"
        assert payload["hub_id"] == tiny_entry.hub_id
        assert payload["revision"] == "main"
