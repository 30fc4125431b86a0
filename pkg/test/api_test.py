import pytest

from test.conftest import DELTA_MIN_WITNESS

SIGMA5 = [1, -0.02, -0.03, -0.05, -0.4]


@pytest.mark.asyncio
async def test_classify(client):
    response = await client.post("/spectra/classify",
                                 json={"values": SIGMA5})

    assert response.status_code == 200
    data = response.json()
    assert data["n"] == 5
    assert data["classification"]["is_suleimanova"] is True
    assert data["classification"]["delta"] == pytest.approx(0.5)
    assert data["trace_moments"]["passed"] is True


@pytest.mark.asyncio
async def test_classify_rejects_bad_leading_value(client):
    response = await client.post("/spectra/classify",
                                 json={"values": [0.5, -0.1]})

    assert response.status_code == 422
    assert "exactly 1" in response.json()["detail"]


@pytest.mark.asyncio
async def test_classify_validation_error(client):
    response = await client.post("/spectra/classify", json={"values": []})

    assert response.status_code == 400
    assert response.json()["detail"] == "Validation error"


@pytest.mark.asyncio
async def test_construct(client):
    response = await client.post("/construct", json={"values": SIGMA5})

    assert response.status_code == 200
    data = response.json()
    assert data["matrix"]["n"] == 5
    assert len(data["matrix"]["entries"]) == 25
    assert data["feasibility"]["feasible"] is True
    assert data["corollary"] == "SuleimanovaPass"


@pytest.mark.asyncio
async def test_construct_infeasible(client):
    response = await client.post("/construct",
                                 json={"values": list(DELTA_MIN_WITNESS)})

    assert response.status_code == 200
    feasibility = response.json()["feasibility"]
    assert feasibility["feasible"] is False
    assert (feasibility["witness_k"], feasibility["witness_l"]) == (2, 2)


@pytest.mark.asyncio
async def test_construct_strict_infeasible(client):
    response = await client.post(
        "/construct",
        json={"values": list(DELTA_MIN_WITNESS), "strict": True},
    )

    assert response.status_code == 422
    assert "(2, 2)" in response.json()["detail"]


@pytest.mark.asyncio
async def test_check(client):
    response = await client.post("/check", json={"values": SIGMA5})

    assert response.status_code == 200
    data = response.json()
    applicable = [c for c in data["conditions"] if c["applicable"]]
    assert applicable
    assert all(c["satisfied"] is False for c in applicable)
    assert data["feasibility"]["feasible"] is True


@pytest.mark.asyncio
async def test_verify_constructed_matrix(client):
    constructed = await client.post("/construct", json={"values": SIGMA5})

    response = await client.post("/verify",
                                 json=constructed.json()["matrix"])

    assert response.status_code == 200
    data = response.json()
    assert data["report"]["passed"] is True
    assert data["eigenvalues"] == pytest.approx(
        sorted(SIGMA5, reverse=True), abs=1e-8
    )


@pytest.mark.asyncio
async def test_verify_asymmetric_matrix(client):
    response = await client.post(
        "/verify", json={"n": 2, "entries": [0.5, 0.5, 0.2, 0.8]}
    )

    assert response.status_code == 200
    data = response.json()
    assert data["report"]["symmetric_ok"] is False
    assert data["eigenvalues"] is None


@pytest.mark.asyncio
async def test_verify_wrong_size(client):
    response = await client.post("/verify",
                                 json={"n": 2, "entries": [1, 0, 0]})

    assert response.status_code == 400


@pytest.mark.asyncio
async def test_random(client):
    response = await client.post(
        "/random", json={"n": 6, "alpha": -0.5, "seed": 4}
    )

    assert response.status_code == 200
    data = response.json()
    assert len(data["values"]) == 6
    assert sum(data["values"][1:]) == pytest.approx(-0.5)
    assert min(data["matrix"]["entries"]) >= 0


@pytest.mark.asyncio
async def test_random_alpha_out_of_range(client):
    response = await client.post("/random", json={"n": 6, "alpha": 0.9})

    assert response.status_code == 400
