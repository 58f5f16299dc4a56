"""Read-only HTTP backend serving the viewer bundle and the data API.

Endpoints:

* ``GET /api/hif``            canonical HIF of the loaded hypergraph
* ``GET /api/layout?seed=S``  deterministic layout document (memoized per seed)
* ``GET /`` and assets        the viewer bundle, or a fallback page when absent

The server never mutates anything: pins and selections live client-side, so
concurrent readers only share the immutable hypergraph and the layout memo.
"""

from __future__ import annotations

import errno
import mimetypes
import threading
from dataclasses import replace
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .core import Hypergraph
from .errors import PortInUseError
from .hif import emit_hif
from .layout import LayoutParams, force_layout

FALLBACK_PAGE = b"""<!DOCTYPE html>
<html><head><meta charset="utf-8"><title>hyperbetti</title></head>
<body>
<h1>hyperbetti server</h1>
<p>No viewer bundle is installed. The data API is still available:</p>
<ul>
<li><a href="/api/hif">/api/hif</a></li>
<li><a href="/api/layout">/api/layout</a></li>
</ul>
</body></html>
"""


def default_assets_dir() -> Path | None:
    bundled = Path(__file__).parent / "viewer_static"
    return bundled if (bundled / "index.html").is_file() else None


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "hyperbetti"

    def log_message(self, fmt, *args):  # keep stdio clean for CLI piping
        pass

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/hif":
            self._send(200, "application/json; charset=utf-8", self.server.hif_bytes)
        elif url.path == "/api/layout":
            self._layout(url)
        else:
            self._static(url.path)

    def _layout(self, url):
        query = parse_qs(url.query)
        seed = self.server.default_seed
        if "seed" in query:
            raw = query["seed"][-1]
            try:
                seed = int(raw)
            except ValueError:
                seed = -1
            if not 0 <= seed < 1 << 64:
                self._send(400, "text/plain; charset=utf-8", b"seed must be an unsigned 64-bit integer\n")
                return
        self._send(200, "application/json; charset=utf-8", self.server.layout_bytes(seed))

    def _static(self, path: str):
        assets = self.server.assets_dir
        if path in ("", "/"):
            path = "/index.html"
        if assets is None:
            if path == "/index.html":
                self._send(200, "text/html; charset=utf-8", FALLBACK_PAGE)
            else:
                self._send(404, "text/plain; charset=utf-8", b"not found\n")
            return
        target = (assets / path.lstrip("/")).resolve()
        if not str(target).startswith(str(assets.resolve())) or not target.is_file():
            self._send(404, "text/plain; charset=utf-8", b"not found\n")
            return
        ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        if ctype.startswith("text/") or ctype in ("application/json", "application/javascript"):
            ctype += "; charset=utf-8"
        self._send(200, ctype, target.read_bytes())

    def _send(self, status: int, content_type: str, body: bytes):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)


class HypergraphServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, h: Hypergraph, default_seed: int, layout_params: LayoutParams, assets_dir: Path | None):
        self.hif_bytes = emit_hif(h)
        self.hypergraph = h
        self.default_seed = default_seed
        self.base_params = layout_params
        self.assets_dir = assets_dir
        self._layout_cache: dict[int, bytes] = {}
        self._lock = threading.Lock()
        super().__init__(address, _Handler)

    def layout_bytes(self, seed: int) -> bytes:
        with self._lock:
            if seed not in self._layout_cache:
                params = replace(self.base_params, seed=seed)
                self._layout_cache[seed] = force_layout(self.hypergraph, params).to_json_bytes()
            return self._layout_cache[seed]


def make_server(
    h: Hypergraph,
    port: int,
    host: str = "127.0.0.1",
    default_seed: int = 0,
    layout_params: LayoutParams | None = None,
    assets_dir: str | Path | None = None,
) -> HypergraphServer:
    """Bind the server (port 0 picks a free port); raises PortInUseError when taken."""
    assets = Path(assets_dir) if assets_dir is not None else default_assets_dir()
    params = layout_params or LayoutParams()
    try:
        return HypergraphServer((host, port), h, default_seed, params, assets)
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            raise PortInUseError(f"port {port} is already in use") from None
        raise
