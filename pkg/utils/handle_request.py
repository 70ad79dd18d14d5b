import logging
import time
from flask import jsonify, request
from utils.error import messageError
from utils.logging_config import configure_logger
from utils.security import authenticate_token


def handle_request_endpoint(controller_function):
    configure_logger()
    start_time = time.time()
    logging.info("|| Controller:" + controller_function.__name__)
    if not authenticate_token():
        return jsonify({"status": "ERROR", "message": "Unauthorized", "time": time.time() - start_time}), 401
    if not request.is_json:
        return jsonify({"status": "ERROR", "message": "A JSON was expected in the request body", "time": time.time() - start_time}), 400
    try:
        data = request.json
        if not isinstance(data, dict):
            raise messageError("The JSON body must be an object")
        logging.info(data)
        message = controller_function(data)
        logging.info(f"OK - controller: {controller_function.__name__}")
        return jsonify({"status": "OK", "message": message, "time": time.time() - start_time}), 200
    except messageError as e:
        logging.error(f"ERROR: {e}")
        return jsonify({"status": "ERROR", "message": str(e), "time": time.time() - start_time}), 400
    except Exception as e:
        logging.error(f"ERROR: {e}")
        return jsonify({"status": "ERROR", "message": "An internal error has occurred. " + str(e), "time": time.time() - start_time}), 400
