"""End-to-end tests for the CLI and the serve endpoints."""

import io
import json
import subprocess
import sys
import threading
import urllib.error
import urllib.request
from types import SimpleNamespace

import pytest

from hyperbetti import Hypergraph, emit_hif, force_layout
from hyperbetti.cli import main
from hyperbetti.errors import PortInUseError
from hyperbetti.layout import LayoutParams
from hyperbetti.server import make_server

from conftest import H0_HIF, H0_INCIDENCES, HOLLOW_TRIANGLE


def invoke(monkeypatch, capsysbinary, argv, stdin=b""):
    monkeypatch.setattr(sys, "stdin", SimpleNamespace(buffer=io.BytesIO(stdin)))
    code = main(argv)
    captured = capsysbinary.readouterr()
    return code, captured.out, captured.err


H0_CSV = b"edge,node\n" + b"".join(
    f"{e},{n}\n".encode() for e, n in sorted((e, str(n)) for e, n in H0_INCIDENCES)
)

HOLLOW_HIF = emit_hif(Hypergraph(HOLLOW_TRIANGLE))


class TestAnalytics:
    def test_components_documented_output(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["components", "--s", "2", "--side", "edges"], stdin=H0_HIF)
        assert code == 0
        assert out == b'[["A","B"],["C"]]\n'

    def test_homology_documented_output(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["homology", "--kmax", "2"], stdin=HOLLOW_HIF)
        assert code == 0
        assert out == b'{"betti":[1,1,0],"face_counts":[3,3,0],"euler":0,"coefficients":"GF(2)","reduced":false}\n'

    def test_convert_roundtrip_csv(self, monkeypatch, capsysbinary):
        code, hif_bytes, _ = invoke(
            monkeypatch, capsysbinary, ["convert", "--format", "csv", "--to", "hif"], stdin=H0_CSV
        )
        assert code == 0
        code, csv_bytes, _ = invoke(monkeypatch, capsysbinary, ["convert", "--to", "csv"], stdin=hif_bytes)
        assert code == 0
        assert csv_bytes == H0_CSV

    def test_stats(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["stats"], stdin=H0_HIF)
        assert code == 0
        summary = json.loads(out)
        assert summary["nodes"] == 6 and summary["edges"] == 4
        assert summary["edge_sizes"] == {"1": 1, "2": 1, "3": 2}

    def test_stats_text_output(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["stats", "--output", "text"], stdin=H0_HIF)
        assert code == 0
        assert b"nodes: 6" in out

    def test_toplexes(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["toplexes"], stdin=H0_HIF)
        assert code == 0
        assert json.loads(out) == ["A", "B", "C", "D"]

    def test_distance(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(
            monkeypatch, capsysbinary,
            ["distance", "--s", "1", "--side", "edges", "--from", "A", "--to", "C"], stdin=H0_HIF,
        )
        assert code == 0
        assert json.loads(out)["distance"] == 2

    def test_distance_unreachable_is_null(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(
            monkeypatch, capsysbinary,
            ["distance", "--s", "2", "--side", "edges", "--from", "A", "--to", "C"], stdin=H0_HIF,
        )
        assert code == 0
        assert json.loads(out)["distance"] is None

    def test_centrality_betweenness(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(
            monkeypatch, capsysbinary, ["centrality", "--kind", "betweenness", "--s", "1"], stdin=H0_HIF
        )
        assert code == 0
        assert json.loads(out) == {"A": 0.0, "B": 1.0, "C": 0.0, "D": 0.0}

    def test_centrality_eccentricity(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(
            monkeypatch, capsysbinary, ["centrality", "--kind", "eccentricity"], stdin=H0_HIF
        )
        assert code == 0
        assert json.loads(out) == {"A": 2, "B": 1, "C": 2, "D": 0}

    def test_centrality_normalized(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(
            monkeypatch, capsysbinary,
            ["centrality", "--kind", "betweenness", "--normalized"], stdin=H0_HIF,
        )
        assert code == 0
        assert json.loads(out)["B"] == pytest.approx(1 / 3, abs=1e-9)

    def test_file_input_and_extension_detection(self, tmp_path, monkeypatch, capsysbinary):
        path = tmp_path / "h0.csv"
        path.write_bytes(H0_CSV)
        code, out, _ = invoke(monkeypatch, capsysbinary, ["stats", str(path)])
        assert code == 0
        assert json.loads(out)["incidences"] == 9


class TestLayoutCommand:
    def test_layout_json(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["layout", "--seed", "42"], stdin=H0_HIF)
        assert code == 0
        obj = json.loads(out)
        assert set(obj["hulls"]) == {"A", "B", "C", "D"}

    def test_layout_deterministic(self, monkeypatch, capsysbinary):
        _, first, _ = invoke(monkeypatch, capsysbinary, ["layout", "--seed", "42"], stdin=H0_HIF)
        _, second, _ = invoke(monkeypatch, capsysbinary, ["layout", "--seed", "42"], stdin=H0_HIF)
        assert first == second

    def test_layout_svg(self, monkeypatch, capsysbinary):
        code, out, _ = invoke(monkeypatch, capsysbinary, ["layout", "--svg", "--seed", "42"], stdin=H0_HIF)
        assert code == 0
        assert out.startswith(b"<?xml")
        assert out.count(b"<circle") == 6
        assert out.count(b"<path") == 4


class TestExitCodes:
    def test_usage_error_unknown_option(self, monkeypatch, capsysbinary):
        code, _, err = invoke(monkeypatch, capsysbinary, ["stats", "--nope"], stdin=H0_HIF)
        assert code == 1
        assert b"usage error" in err

    def test_usage_error_bad_choice(self, monkeypatch, capsysbinary):
        code, _, _ = invoke(monkeypatch, capsysbinary, ["centrality", "--kind", "pagerank"], stdin=H0_HIF)
        assert code == 1

    def test_data_error_malformed_json(self, monkeypatch, capsysbinary):
        code, _, err = invoke(monkeypatch, capsysbinary, ["stats"], stdin=b"{broken")
        assert code == 2
        assert b"error" in err

    def test_data_error_unknown_vertex(self, monkeypatch, capsysbinary):
        code, _, _ = invoke(
            monkeypatch, capsysbinary,
            ["distance", "--from", "A", "--to", "zzz"], stdin=H0_HIF,
        )
        assert code == 2

    def test_data_error_missing_file(self, monkeypatch, capsysbinary):
        code, _, _ = invoke(monkeypatch, capsysbinary, ["stats", "/nonexistent/input.hif"])
        assert code == 2

    def test_success_exit_zero(self, monkeypatch, capsysbinary):
        code, _, _ = invoke(monkeypatch, capsysbinary, ["stats"], stdin=H0_HIF)
        assert code == 0


class TestReportCommand:
    def test_writes_bundle(self, tmp_path, monkeypatch, capsysbinary):
        out_dir = tmp_path / "report"
        code, out, _ = invoke(
            monkeypatch, capsysbinary, ["report", "--out-dir", str(out_dir)], stdin=H0_HIF
        )
        assert code == 0
        manifest = json.loads(out)["written"]
        assert len(manifest) == 6
        summary = (out_dir / "summary.csv").read_text()
        assert "nodes,6" in summary.replace(" ", "")
        for png in ("edge_sizes.png", "node_degrees.png", "euler_diagram.png"):
            assert (out_dir / png).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


class TestModuleEntrypoint:
    def test_python_dash_m(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hyperbetti", "components", "--s", "2"],
            input=H0_HIF, capture_output=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == b'[["A","B"],["C"]]\n'


@pytest.fixture
def h0_server():
    h = Hypergraph(H0_INCIDENCES, name="H0")
    srv = make_server(h, 0, default_seed=7, assets_dir=None)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    try:
        yield h, srv, f"http://127.0.0.1:{srv.server_port}"
    finally:
        srv.shutdown()
        srv.server_close()


def fetch(url):
    with urllib.request.urlopen(url) as resp:
        return resp.status, dict(resp.headers), resp.read()


class TestServe:
    def test_api_hif_matches_convert(self, h0_server):
        h, _, base = h0_server
        status, headers, body = fetch(f"{base}/api/hif")
        assert status == 200
        assert body == emit_hif(h)
        assert headers["Access-Control-Allow-Origin"] == "*"
        assert headers["Content-Type"].startswith("application/json")

    def test_api_layout_deterministic(self, h0_server):
        h, _, base = h0_server
        _, _, first = fetch(f"{base}/api/layout?seed=42")
        _, _, second = fetch(f"{base}/api/layout?seed=42")
        assert first == second
        assert first == force_layout(h, LayoutParams(seed=42)).to_json_bytes()

    def test_api_layout_default_seed(self, h0_server):
        h, _, base = h0_server
        _, _, body = fetch(f"{base}/api/layout")
        assert body == force_layout(h, LayoutParams(seed=7)).to_json_bytes()

    def test_api_layout_bad_seed(self, h0_server):
        _, _, base = h0_server
        with pytest.raises(urllib.error.HTTPError) as err:
            fetch(f"{base}/api/layout?seed=abc")
        assert err.value.code == 400

    def test_unknown_path_404(self, h0_server):
        _, _, base = h0_server
        with pytest.raises(urllib.error.HTTPError) as err:
            fetch(f"{base}/api/nope")
        assert err.value.code == 404

    def test_fallback_index(self, h0_server, monkeypatch):
        _, srv, base = h0_server
        status, headers, body = fetch(f"{base}/")
        if srv.assets_dir is None:
            assert b"hyperbetti" in body
        assert status == 200
        assert headers["Content-Type"].startswith("text/html")

    def test_static_assets(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>viewer</html>")
        (tmp_path / "app.js").write_text("console.log(1)")
        h = Hypergraph(H0_INCIDENCES)
        srv = make_server(h, 0, assets_dir=tmp_path)
        thread = threading.Thread(target=srv.serve_forever, daemon=True)
        thread.start()
        try:
            base = f"http://127.0.0.1:{srv.server_port}"
            assert fetch(f"{base}/")[2] == b"<html>viewer</html>"
            status, headers, _ = fetch(f"{base}/app.js")
            assert status == 200
            with pytest.raises(urllib.error.HTTPError):
                fetch(f"{base}/../secret.txt")
        finally:
            srv.shutdown()
            srv.server_close()

    def test_port_in_use(self, h0_server):
        h, srv, _ = h0_server
        with pytest.raises(PortInUseError):
            make_server(h, srv.server_port)
