"""Local JSON-over-HTTP service consumed by the browser grid editor.

Stateless: every request carries the full cell encoding.  Requests run
concurrently (thread per connection) on isolated computation contexts with
their own deadlines.
"""

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .cli import COMMANDS, canonical_json_bytes, run_command
from .errors import ParseError

API_PREFIX = "/api/v1/"

_STATUS_FOR_ERROR = {
    "parse_error": 400,
    "precondition_failed": 422,
    "ring_mismatch": 422,
    "timeout": 408,
    "internal": 500,
}


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "polyoideals/0.1"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default; tests capture stderr
        if self.server.verbose:
            super().log_message(fmt, *args)

    def _cors(self):
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _reply(self, status, body_bytes, extra_headers=()):
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body_bytes)))
        for k, v in extra_headers:
            self.send_header(k, v)
        self.end_headers()
        self.wfile.write(body_bytes)

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == API_PREFIX + "health":
            self._reply(200, canonical_json_bytes({"status": "ok"}))
        else:
            self._reply(404, canonical_json_bytes(
                {"status": "error",
                 "error": {"code": "not_found", "message": f"no route {self.path}"}}
            ))

    def do_POST(self):
        if not self.path.startswith(API_PREFIX):
            self._reply(404, canonical_json_bytes(
                {"status": "error",
                 "error": {"code": "not_found", "message": f"no route {self.path}"}}
            ))
            return
        command = self.path[len(API_PREFIX):].strip("/")
        if command not in COMMANDS:
            self._reply(404, canonical_json_bytes(
                {"status": "error",
                 "error": {"code": "not_found", "message": f"unknown command {command!r}"}}
            ))
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length) if length else b"{}"
            request = json.loads(raw.decode("utf-8"))
            if not isinstance(request, dict):
                raise ParseError("request body must be a JSON object")
        except (ValueError, UnicodeDecodeError):
            self._reply(400, canonical_json_bytes(
                {"status": "error", "command": command,
                 "error": {"code": "parse_error", "message": "request body is not valid JSON"},
                 "warnings": []}
            ))
            return
        request["command"] = command
        response, elapsed = run_command(request)
        if response["status"] == "ok":
            status = 200
        else:
            status = _STATUS_FOR_ERROR.get(response["error"]["code"], 500)
        self._reply(status, canonical_json_bytes(response),
                    extra_headers=[("X-Compute-Seconds", f"{elapsed:.6f}")])


class ApiServer(ThreadingHTTPServer):
    daemon_threads = True
    verbose = False


def make_server(host="127.0.0.1", port=8642, verbose=False):
    server = ApiServer((host, port), ApiHandler)
    server.verbose = verbose
    return server


def serve_api(host="127.0.0.1", port=8642):
    """Blocking entry point for ``polyoideals serve``."""
    server = make_server(host, port, verbose=True)
    print(f"serving on http://{host}:{server.server_address[1]}{API_PREFIX}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


def start_background(host="127.0.0.1", port=0):
    """Start a server on an ephemeral port; returns (server, thread). For tests."""
    server = make_server(host, port)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
