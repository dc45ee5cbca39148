"""HTTP JSON API: session lifecycle, mutation, undo, neighborhoods, and
canonical rendering shared with the command-line output."""

import json

import pytest
from fastapi.testclient import TestClient

from clusterlab.exmatrix import ExtendedExchangeMatrix
from clusterlab.seed import Seed, apply_path
from clusterlab.service import create_app

A2 = {"n": 2, "r": 2, "matrix": [[0, 1], [-1, 0]]}
A3 = {"n": 3, "r": 3, "matrix": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]}


@pytest.fixture
def client():
    return TestClient(create_app())


def new_session(client, body=None):
    response = client.post("/api/session", json=body or A2)
    assert response.status_code == 200, response.text
    return response.json()


class TestHealth:
    def test_ok(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestCreateSession:
    def test_initial_payload(self, client):
        data = new_session(client)
        assert data["revision"] == 0
        assert data["path"] == []
        assert [v["text"] for v in data["variables"]] == ["x1", "x2"]
        assert data["reduced_indices"] == [[1, 0], [0, 1]]
        assert data["matrix"] == A2
        assert data["quiver"] == {"n": 2, "r": 2, "frozen": [], "arrows": [[1, 2, 1]]}

    def test_create_with_path(self, client):
        data = new_session(client, {**A2, "path": [1]})
        assert data["path"] == [1]
        assert data["variables"][0]["text"] == "x1^-1 + x1^-1*x2"

    def test_nested_matrix_key_accepted(self, client):
        data = new_session(client, {"matrix": A2})
        assert data["matrix"] == A2

    def test_non_skew_matrix_diagnostic(self, client):
        response = client.post(
            "/api/session", json={"n": 2, "r": 2, "matrix": [[0, 1], [1, 0]]}
        )
        assert response.status_code == 400
        assert "(1,2)" in response.json()["detail"]

    def test_missing_matrix(self, client):
        response = client.post("/api/session", json={})
        assert response.status_code == 400

    def test_default_seed_app(self):
        app = create_app(Seed.initial(ExtendedExchangeMatrix.from_json(A2)))
        with TestClient(app) as client:
            data = new_session(client, {})
            assert data["matrix"] == A2

    def test_canonical_json_bytes(self, client):
        response = client.post("/api/session", json=A2)
        parsed = json.loads(response.content)
        assert response.content.decode() == json.dumps(parsed, sort_keys=True)


class TestMutate:
    def test_mutation_matches_direct_computation(self, client):
        sid = new_session(client, A3)["session_id"]
        data = client.post(f"/api/session/{sid}/mutate", json={"vertex": 2}).json()
        direct = apply_path(
            Seed.initial(ExtendedExchangeMatrix.from_json(A3)), (2,)
        )
        assert data["variables"][1]["text"] == direct.variables[1].render()
        assert data["path"] == [2]
        assert data["revision"] == 1

    def test_revision_monotone(self, client):
        sid = new_session(client)["session_id"]
        revisions = []
        for vertex in (1, 2, 1):
            data = client.post(
                f"/api/session/{sid}/mutate", json={"vertex": vertex}
            ).json()
            revisions.append(data["revision"])
        assert revisions == [1, 2, 3]

    def test_frozen_vertex_rejected(self, client):
        body = {"n": 3, "r": 2, "matrix": [[0, 1], [-1, 0], [1, 0]]}
        sid = new_session(client, body)["session_id"]
        response = client.post(f"/api/session/{sid}/mutate", json={"vertex": 3})
        assert response.status_code == 400
        assert response.json()["detail"] == "vertex 3 is frozen or out of range"

    def test_missing_vertex_field(self, client):
        sid = new_session(client)["session_id"]
        response = client.post(f"/api/session/{sid}/mutate", json={})
        assert response.status_code == 400

    def test_unknown_session(self, client):
        response = client.post("/api/session/nope/mutate", json={"vertex": 1})
        assert response.status_code == 404


class TestUndo:
    def test_undo_restores_initial(self, client):
        sid = new_session(client)["session_id"]
        client.post(f"/api/session/{sid}/mutate", json={"vertex": 1})
        data = client.post(f"/api/session/{sid}/undo").json()
        assert data["path"] == []
        assert [v["text"] for v in data["variables"]] == ["x1", "x2"]
        assert data["revision"] == 2  # undo still advances the revision

    def test_undo_empty_path(self, client):
        sid = new_session(client)["session_id"]
        response = client.post(f"/api/session/{sid}/undo")
        assert response.status_code == 400

    def test_mutate_undo_mutate_consistent(self, client):
        sid = new_session(client)["session_id"]
        first = client.post(f"/api/session/{sid}/mutate", json={"vertex": 1}).json()
        client.post(f"/api/session/{sid}/undo")
        second = client.post(f"/api/session/{sid}/mutate", json={"vertex": 1}).json()
        assert first["variables"] == second["variables"]
        assert first["matrix"] == second["matrix"]


class TestNeighborhood:
    def test_depth_one_a2(self, client):
        sid = new_session(client)["session_id"]
        data = client.get(f"/api/session/{sid}/neighborhood?depth=1").json()
        assert len(data["vertices"]) == 3
        assert data["truncated"] is True  # depth-limited view of the pentagon
        assert data["current"] in {v["key_id"] for v in data["vertices"]}

    def test_depth_covers_whole_pentagon(self, client):
        sid = new_session(client)["session_id"]
        data = client.get(f"/api/session/{sid}/neighborhood?depth=3").json()
        assert len(data["vertices"]) == 5
        assert data["truncated"] is False

    def test_depth_limit(self, client):
        sid = new_session(client)["session_id"]
        response = client.get(f"/api/session/{sid}/neighborhood?depth=4")
        assert response.status_code == 400

    def test_recentered_after_mutation(self, client):
        sid = new_session(client)["session_id"]
        client.post(f"/api/session/{sid}/mutate", json={"vertex": 1})
        data = client.get(f"/api/session/{sid}/neighborhood?depth=1").json()
        assert data["revision"] == 1
        assert len(data["vertices"]) == 3


class TestGVectors:
    def test_initial_basis(self, client):
        sid = new_session(client)["session_id"]
        data = client.get(f"/api/session/{sid}/gvectors").json()
        assert data["reduced"] == [[1, 0], [0, 1]]

    def test_after_one_step(self, client):
        sid = new_session(client)["session_id"]
        client.post(f"/api/session/{sid}/mutate", json={"vertex": 1})
        data = client.get(f"/api/session/{sid}/gvectors").json()
        assert data["reduced"] == [[-1, 1], [0, 1]]
        assert data["revision"] == 1


class TestSessionExpiry:
    def test_expired_session_is_gone(self):
        app = create_app(session_ttl=0.0)
        with TestClient(app) as client:
            sid = new_session(client)["session_id"]
            import time

            time.sleep(0.01)
            response = client.get(f"/api/session/{sid}")
            assert response.status_code == 404
