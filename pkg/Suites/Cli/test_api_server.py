import pytest
from fastapi.testclient import TestClient

from api_server import app
from listhom.instance_io import InstanceDocument

TRIANGLE = {
    "graph": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
    "lists": [[0, 1], [1, 2], [0, 2]],
    "target": {"k": 3},
}
C5 = {"graph": {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]}, "target": {"k": 3}}


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_solve(client):
    response = client.post("/solve/", json={"instance": TRIANGLE})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "success"
    assert body["data"]["result"] is True
    assert sorted(body["data"]["witness"]) == [0, 1, 2]
    assert body["data"]["solver"] == "multichain"


def test_solve_out_of_class(client):
    response = client.post("/solve/", json={"instance": C5})
    assert response.status_code == 422
    body = response.json()
    assert body["status"] == "error"
    assert body["vertices"] == [0, 1, 2, 3, 4]
    assert "timestamp" in body


def test_solve_fallback(client):
    response = client.post("/solve/", json={"instance": C5, "fallback_brute": True})
    assert response.status_code == 200
    assert response.json()["data"]["solver"] == "oracle"


def test_solve_bad_lists(client):
    instance = {**TRIANGLE, "lists": [[0], [7], [1]]}
    response = client.post("/solve/", json={"instance": instance})
    assert response.status_code == 400
    assert response.json()["error"] == "InvalidInput"


def test_solve_bad_hint(client):
    response = client.post("/solve/", json={"instance": TRIANGLE, "start_hint": "middle"})
    assert response.status_code == 400


def test_schema_errors_are_rejected(client):
    response = client.post("/solve/", json={"instance": {"graph": {"n": 3}}})
    assert response.status_code == 422


def test_oracle_count(client):
    instance = {"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}, "target": {"k": 2}}
    response = client.post("/oracle/", json={"instance": instance, "count": True})
    data = response.json()["data"]
    assert data["result"] is True
    assert data["witness"] == [0, 1, 0, 1]
    assert data["count"] == 2


def test_check_ordering(client):
    response = client.post("/check_ordering/", json={"graph": C5["graph"]})
    assert response.status_code == 200
    assert response.json()["data"]["components"][0]["found"] is False

    response = client.post("/check_ordering/", json={"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "start": 0})
    component = response.json()["data"]["components"][0]
    assert component["found"] is True
    assert component["layers"] == [[0], [1], [2]]
    assert component["violations"] == []


def test_generate(client):
    response = client.post("/generate/", json={"family": "interval", "n": 6, "seed": 3})
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["start_hint"] == "first"
    instance = InstanceDocument.model_validate(data["instance"]).to_instance()
    assert instance.graph.n == 6


def test_generate_unknown_family(client):
    response = client.post("/generate/", json={"family": "chordal"})
    assert response.status_code == 400
    assert response.json()["status"] == "error"
