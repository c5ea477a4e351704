import json
import threading
import urllib.error
import urllib.request

import pytest

from polyoideals.cli import canonical_json_bytes, run_command
from polyoideals.service import start_background
from tests.conftest import CLOSED16, FIG2, FIG3A


@pytest.fixture(scope="module")
def server_url():
    server, thread = start_background()
    host, port = server.server_address
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()


def post(url, path, payload, timeout=300):
    body = json.dumps(payload).encode()
    req = urllib.request.Request(
        url + path, data=body, headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.status, resp.read(), dict(resp.headers)
    except urllib.error.HTTPError as err:
        return err.code, err.read(), dict(err.headers)


def get(url, path):
    try:
        with urllib.request.urlopen(url + path, timeout=30) as resp:
            return resp.status, resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.read()


def test_health(server_url):
    status, body = get(server_url, "/api/v1/health")
    assert status == 200
    assert json.loads(body) == {"status": "ok"}


def test_ideal_endpoint(server_url):
    status, body, headers = post(server_url, "/api/v1/ideal", {"cells": FIG2})
    assert status == 200
    payload = json.loads(body)
    assert payload["status"] == "ok"
    assert payload["result"]["generator_count"] == 15
    assert "X-Compute-Seconds" in headers


def test_parse_error_is_400(server_url):
    status, body, _ = post(server_url, "/api/v1/ideal", {"cells": "[[[1,1],[2,3]]]"})
    assert status == 400
    assert json.loads(body)["error"]["code"] == "parse_error"


def test_invalid_json_body_is_400(server_url):
    req = urllib.request.Request(
        server_url + "/api/v1/ideal", data=b"{not json", method="POST"
    )
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            status = resp.status
    except urllib.error.HTTPError as err:
        status = err.code
    assert status == 400


def test_precondition_is_422(server_url):
    status, body, _ = post(
        server_url, "/api/v1/ideal",
        {"cells": CLOSED16, "options": {"ring_choice": 2}},
    )
    assert status == 422
    assert json.loads(body)["error"]["code"] == "precondition_failed"


def test_timeout_is_408(server_url):
    status, body, _ = post(
        server_url, "/api/v1/compare",
        {"cells": CLOSED16, "options": {"timeout_seconds": 0.02}},
    )
    assert status == 408


def test_unknown_route_is_404(server_url):
    status, _, _ = post(server_url, "/api/v1/banana", {"cells": FIG2})
    assert status == 404
    status, _ = get(server_url, "/api/v1/banana")
    assert status == 404


def test_cors_preflight(server_url):
    req = urllib.request.Request(server_url + "/api/v1/ideal", method="OPTIONS")
    with urllib.request.urlopen(req, timeout=30) as resp:
        assert resp.status == 204
        assert resp.headers["Access-Control-Allow-Origin"] == "*"


def test_service_bytes_match_cli_bytes(server_url):
    request = {
        "cells": FIG2,
        "options": {"field": "qq", "ring_choice": 1, "term_order": "lex",
                    "holes": "auto", "dedupe": False, "timeout_seconds": 300.0},
    }
    _, body, _ = post(server_url, "/api/v1/ideal", dict(request))
    response, _ = run_command({"command": "ideal", **request})
    assert body == canonical_json_bytes(response)


def test_concurrent_requests_are_isolated(server_url):
    results = {}

    def work(name, payload):
        results[name] = post(server_url, "/api/v1/classify", payload)

    threads = [
        threading.Thread(target=work, args=("fig2", {"cells": FIG2})),
        threading.Thread(target=work, args=("fig3a", {"cells": FIG3A})),
        threading.Thread(target=work, args=("bad", {"cells": "{{1}}"})),
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results["fig2"][0] == 200
    assert json.loads(results["fig2"][1])["result"]["convex"] is True
    assert results["fig3a"][0] == 200
    assert json.loads(results["fig3a"][1])["result"]["is_polyomino"] is False
    assert results["bad"][0] == 400
