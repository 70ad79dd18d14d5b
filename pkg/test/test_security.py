"""
Pruebas para el archivo security.py
"""
import utils.security as security
from utils.security import authenticate_token, bearer_token
from main import app
import pytest
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


@pytest.mark.parametrize("header, accepted", [
    ("Bearer sample", True),
    ("Bearer invalid_token", False),
    ("sample", False),
    ("Bearer ", False),
    ("Bearer SAMPLE", False),
    ("Bearer  sample", False),
    ("bearer sample", False),
])
def test_authenticate_token_headers(client, header, accepted):
    """Verifica qué cabeceras Authorization se aceptan en modo testing"""
    with app.test_request_context(headers={"Authorization": header}):
        assert authenticate_token() == accepted


def test_authenticate_token_missing(client):
    """Verifica que una petición sin token es rechazada"""
    with app.test_request_context():
        assert authenticate_token() == False


def test_authenticate_token_outside_testing(monkeypatch):
    """Verifica que fuera de testing se compara con VALID_TOKEN"""
    monkeypatch.setattr(security, "VALID_TOKEN", "s3cret")
    app.config['TESTING'] = False
    try:
        with app.test_request_context(headers={"Authorization": "Bearer s3cret"}):
            assert authenticate_token() == True
        with app.test_request_context(headers={"Authorization": "Bearer sample"}):
            assert authenticate_token() == False
    finally:
        app.config['TESTING'] = True


def test_protected_endpoint(client):
    """Verifica que /commutes exige el token"""
    body = {"u": "2,1,2", "w": "1"}
    assert client.post('/commutes', json=body).status_code == 401
    response = client.post('/commutes', headers={"Authorization": "Bearer sample"}, json=body)
    assert response.status_code == 200
    assert response.get_json()['message']['commutes'] is False


def test_bearer_token_parsing():
    """Verifica la extracción del token de la cabecera"""
    assert bearer_token("Bearer abc") == "abc"
    assert bearer_token("bearer abc") is None
    assert bearer_token(None) is None
