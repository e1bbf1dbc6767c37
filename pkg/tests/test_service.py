import pytest
from fastapi.testclient import TestClient

from crec.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as tc:
        yield tc


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_fixture_catalogue(client):
    body = client.get("/fixtures").json()
    assert len(body) == 15
    fib = body[0]
    assert fib["name"] == "fibonacci"
    assert fib["base"] == "3"
    assert fib["recurrence"] == {"coeffs": ["-1", "-1"], "initial": ["0", "1"]}
    shifted = next(fx for fx in body if fx["name"] == "a002249")
    assert shifted["shift_h"] == "2"


def test_derive_fixture_note_asserted(client):
    response = client.post("/derive", json={"fixture": "fibonacci"})
    assert response.status_code == 200
    body = response.json()
    assert body["representation"]["kind"] == "modmod"
    assert body["representation"]["base"] == "3"
    assert "asserted" in body["note"]


def test_derive_certified_note(client):
    payload = {"recurrence": {"coeffs": ["-1", "-1"], "initial": ["0", "1"]}, "kind": "modmod"}
    body = client.post("/derive", json=payload).json()
    assert body["representation"]["mode"] == "certified"
    assert body["representation"]["base"] == "9"
    assert "certified" in body["note"]


def test_derive_auto_shifts_integer_sequences(client):
    payload = {"recurrence": {"coeffs": ["-1", "2"], "initial": ["2", "1"]}, "base": "21"}
    body = client.post("/derive", json=payload).json()
    assert body["representation"]["kind"] == "shifted"
    assert body["representation"]["shift_h"] == "2"


def test_fixture_kind_override(client):
    body = client.post("/derive", json={"fixture": "fibonacci", "kind": "divmod"}).json()
    assert body["representation"]["kind"] == "divmod"
    assert body["representation"]["base"] == "3"
    response = client.post("/derive", json={"fixture": "a002249", "kind": "modmod"})
    assert response.status_code == 400  # compiles via shift only


def test_derive_requires_exactly_one_source(client):
    assert client.post("/derive", json={}).status_code == 400
    both = {
        "fixture": "fibonacci",
        "recurrence": {"coeffs": ["-1"], "initial": ["1"]},
    }
    assert client.post("/derive", json=both).status_code == 400


def test_eval_single_and_range(client):
    body = client.post("/eval", json={"fixture": "mersenne", "n": 5}).json()
    assert body == {"values": [{"n": 5, "value": "31"}]}
    body = client.post(
        "/eval", json={"fixture": "fibonacci", "n_lo": 1, "n_hi": 6, "strategy": "naive"}
    ).json()
    assert [item["value"] for item in body["values"]] == ["1", "1", "2", "3", "5", "8"]


def test_eval_accepts_raw_representation(client):
    rep = client.post("/derive", json={"fixture": "lucas"}).json()["representation"]
    body = client.post("/eval", json={"representation": rep, "n": 4}).json()
    assert body["values"][0]["value"] == "7"


def test_eval_validity_errors_are_422(client):
    response = client.post("/eval", json={"fixture": "pell", "base": "2", "n": 1})
    assert response.status_code == 422
    body = response.json()
    assert body["error"]["kind"] == "EvaluationError"


def test_unknown_fixture_is_400(client):
    response = client.post("/eval", json={"fixture": "nope", "n": 1})
    assert response.status_code == 400
    assert response.json()["error"]["kind"] == "CrecError"


def test_verify_ok_and_mismatch(client):
    body = client.post("/verify", json={"fixture": "padovan", "n_lo": 1, "n_hi": 20}).json()
    assert body["status"] == "ok"
    assert body["checked"] == 20
    body = client.post(
        "/verify", json={"fixture": "pell", "base": "4", "n_lo": 1, "n_hi": 20}
    ).json()
    assert body["status"] == "mismatch"
    assert body["first_mismatch"] == {"n": 1, "expected": "1", "got": "2"}


def test_verify_needs_an_oracle(client):
    rep = client.post("/derive", json={"fixture": "lucas"}).json()["representation"]
    response = client.post("/verify", json={"representation": rep, "n_lo": 1, "n_hi": 5})
    # a bare representation has no recurrence to compare against
    assert response.status_code == 400


def test_render_formats(client):
    body = client.post("/render", json={"fixture": "fibonacci", "format": "text"}).json()
    assert body["formula"] == "((3^(n^2+n)) mod (3^(2n) - 3^n - 1)) mod 3^n"
    body = client.post("/render", json={"fixture": "fibonacci", "format": "latex"}).json()
    assert "\\bmod" in body["formula"]
    body = client.post("/render", json={"fixture": "fibonacci", "format": "json"}).json()
    assert '"kind":"modmod"' in body["formula"]


def test_bench_endpoint(client):
    payload = {"fixture": "fibonacci", "ns": [4, 8], "reps": 2}
    body = client.post("/bench", json=payload).json()
    assert len(body["rows"]) == 4
    assert {row["strategy"] for row in body["rows"]} == {"divmod", "modmod_fast"}


def test_pipeline_check(client):
    body = client.post("/pipeline-check", json={"count": 5, "seed": 42}).json()
    assert body == {"count": 5, "status": "ok", "failures": []}


def test_request_validation_is_422(client):
    response = client.post("/eval", json={"fixture": "fibonacci", "n": "many"})
    assert response.status_code == 422


def test_malformed_representation_payload_is_400(client):
    stub = {"kind": "modmod", "base": "3"}  # missing polynomials and certificate data
    response = client.post("/eval", json={"representation": stub, "n": 1})
    assert response.status_code == 400
    assert response.json()["error"]["kind"] == "DerivationError"
