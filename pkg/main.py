from flask import Flask, jsonify
from controller.controller_centralizer import controller_centralizer
from controller.controller_commutes import controller_commutes
from controller.controller_conjecture import controller_conjecture
from controller.controller_count import controller_count
from controller.controller_expand import controller_expand
from controller.controller_ptab import controller_ptab
from utils.handle_request import handle_request_endpoint
from utils.config import PORT, STAGE

# route -> controller; the JSON body mirrors the CLI arguments
ROUTES = {
    '/ptab': controller_ptab,
    '/commutes': controller_commutes,
    '/centralizer': controller_centralizer,
    '/count': controller_count,
    '/expand': controller_expand,
    '/conjecture': controller_conjecture,
}


def create_app():

    app = Flask(__name__)

    @app.route('/')
    def index():
        """Root endpoint for health check."""
        return 'plactic-centralizer'

    def register(path, controller):
        def endpoint():
            try:
                return handle_request_endpoint(controller)
            except Exception as e:
                app.logger.error("An error occurred: %s", str(e))
                return jsonify(error="An internal error has occurred."), 500

        app.add_url_rule(path, endpoint=controller.__name__, view_func=endpoint, methods=['POST'])

    for path, controller in ROUTES.items():
        register(path, controller)

    return app


# Instancia global para Gunicorn (debe estar fuera del if)
app = create_app()

if __name__ == "__main__":
    debug_mode = STAGE != "production"
    port = int(PORT)
    app.run(debug=debug_mode, host='0.0.0.0', port=port)
