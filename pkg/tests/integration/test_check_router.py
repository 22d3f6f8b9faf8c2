"""
Integration tests for /check, /faces and the root endpoint.
"""
import pytest
from fastapi.testclient import TestClient


@pytest.mark.integration
class TestCheckEndpoint:
    """Test POST /check."""

    def test_diagnostics_per_definition(self, client: TestClient, sample_source: str):
        """Test one diagnostic per definition, in source order."""
        response = client.post("/check", json={"source": sample_source})
        assert response.status_code == 200
        data = response.json()
        assert [d["definition"] for d in data] == ["two", "back", "w", "bad"]
        assert [d["ok"] for d in data] == [True, True, True, False]
        assert data[3]["error_class"] == "Mismatch"
        assert "error_class" not in data[0]

    def test_restriction_face(self, client: TestClient):
        """Test that a restriction failure reports its face."""
        response = client.post("/check", json={"source": "names i\n\nc : N = comp^k N [(i=0) -> 2] 3\n"})
        [diagnostic] = response.json()
        assert diagnostic["error_class"] == "RestrictionUnsatisfied"
        assert diagnostic["face"] == "(i=0)"

    def test_mutants(self, client: TestClient, corpus_dir):
        """Test that every mutant is rejected."""
        source = (corpus_dir / "mutants.ctt").read_text(encoding="utf-8")
        data = client.post("/check", json={"source": source}).json()
        assert data
        assert not any(d["ok"] for d in data)

    def test_parse_error(self, client: TestClient):
        """Test that only a parse error fails the whole request."""
        response = client.post("/check", json={"source": "a : N = (\n"})
        assert response.status_code == 400
        assert response.json()["detail"]["error_class"] == "ParseError"

    def test_missing_source(self, client: TestClient):
        """Test request validation."""
        assert client.post("/check", json={}).status_code == 422


@pytest.mark.integration
class TestFacesEndpoint:
    """Test POST /faces."""

    @pytest.mark.parametrize(
        "expression,field,expected",
        [
            ("(i=0) /\\ (i=1)", "normal_form", "0F"),
            ("(i=0) \\/ ((i=0) /\\ (j=1))", "normal_form", "(i=0)"),
            ("forall i. (j=0) \\/ (i=0)", "normal_form", "(j=0)"),
            ("(i=0) /\\ (j=1) <= (i=0)", "answer", "true"),
            ("(i=0) == (i=1)", "answer", "false"),
            ("split (i=0) (i=1)", "answer", "Neither"),
            ("split 1F (i=1)", "answer", "Left"),
            ("irr (i=0) \\/ (j=1)", "answer", "(i=0), (j=1)"),
            ("irr 0F", "answer", "none"),
        ],
    )
    def test_queries(self, client: TestClient, expression, field, expected):
        """Test normal forms and query answers."""
        response = client.post("/faces", json={"expression": expression})
        assert response.status_code == 200
        assert response.json()[field] == expected

    def test_syntax_error(self, client: TestClient):
        """Test that a malformed face is a 400."""
        response = client.post("/faces", json={"expression": "(i=0"})
        assert response.status_code == 400


class TestRoot:
    """Test the root endpoint."""

    def test_root(self, client: TestClient):
        """Test that the root lists the endpoints."""
        response = client.get("/")
        assert response.status_code == 200
        assert "/eval" in response.json()["message"]
