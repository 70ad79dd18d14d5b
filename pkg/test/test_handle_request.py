"""
Pruebas para el archivo handle_request.py
"""
from main import app
import json
import pytest
import sys
import os
sys.path.insert(0, os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

HEADERS = {"Authorization": "Bearer sample"}


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


def test_handle_request_unauthorized_no_token(client):
    """Verifica que devuelve 401 sin token"""
    response = client.post('/ptab', json={"word": "212"})
    assert response.status_code == 401
    data = json.loads(response.data)
    assert data['status'] == 'ERROR'
    assert data['message'] == 'Unauthorized'
    assert 'time' in data


def test_handle_request_unauthorized_invalid_token(client):
    """Verifica que devuelve 401 con token inválido"""
    headers = {"Authorization": "Bearer invalid_token"}
    response = client.post('/ptab', headers=headers, json={"word": "212"})
    assert response.status_code == 401


def test_handle_request_no_json_body(client):
    """Verifica que devuelve 400 sin body JSON"""
    response = client.post('/ptab', headers=HEADERS)
    assert response.status_code == 400
    data = json.loads(response.data)
    assert data['status'] == 'ERROR'
    assert 'JSON' in data['message']


def test_handle_request_missing_required_field(client):
    """Verifica que devuelve 400 cuando falta un campo requerido"""
    response = client.post('/commutes', headers=HEADERS, json={"u": "2,1,2"})
    assert response.status_code == 400
    data = json.loads(response.data)
    assert data['status'] == 'ERROR'
    assert "'w'" in data['message']


def test_handle_request_malformed_word(client):
    """Verifica que una palabra mal formada devuelve 400 con el motivo"""
    response = client.post('/ptab', headers=HEADERS, json={"word": "2,x"})
    assert response.status_code == 400
    assert 'Malformed word' in json.loads(response.data)['message']


def test_handle_request_budget_error(client, monkeypatch):
    """Verifica que un presupuesto excedido devuelve 400"""
    monkeypatch.setenv("PLACTIC_BUDGET", "10")
    response = client.post('/count', headers=HEADERS, json={"u": "1", "len": 4, "max": 2})
    assert response.status_code == 400
    assert 'budget' in json.loads(response.data)['message']


def test_handle_request_ok_envelope(client):
    """Verifica el sobre OK con mensaje y tiempo"""
    response = client.post('/commutes', headers=HEADERS, json={"u": "2", "w": "2,1,2"})
    assert response.status_code == 200
    data = json.loads(response.data)
    assert data['status'] == 'OK'
    assert data['message']['commutes'] is True
    assert data['time'] >= 0
