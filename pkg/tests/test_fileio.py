import json

import numpy as np
import pytest

from fockbridge.errors import ConfigurationError
from fockbridge import fileio
from fockbridge.representation import FockCoeffs, HermiteCoeffs, SampledSignal
from fockbridge.singular import gaussian_symbol, hilbert_symbol


class TestSignalCsv:
    def test_round_trip_exact(self, tmp_path):
        sig = SampledSignal(-1.25, 0.25, np.array([1.5, -2.0 + 0.5j, 0.0, 3.0j]))
        path = tmp_path / "sig.csv"
        fileio.write_signal_csv(sig, path)
        back = fileio.read_signal_csv(path)
        assert back.x0 == sig.x0 and back.dx == sig.dx
        np.testing.assert_array_equal(back.values, sig.values)

    def test_format_details(self, tmp_path):
        sig = SampledSignal(0.0, 1.0, np.array([1.0, 2.0]))
        path = tmp_path / "sig.csv"
        fileio.write_signal_csv(sig, path)
        raw = path.read_bytes()
        assert raw.startswith(b"x,re,im\n")
        assert b"\r" not in raw

    def test_rejects_nonuniform_grid(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,re,im\n0.0,1,0\n0.1,1,0\n0.35,1,0\n")
        with pytest.raises(ConfigurationError):
            fileio.read_signal_csv(path)

    def test_rejects_decreasing_grid(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,re,im\n0.2,1,0\n0.1,1,0\n0.0,1,0\n")
        with pytest.raises(ConfigurationError):
            fileio.read_signal_csv(path)

    def test_rejects_missing_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0.0,1,0\n0.1,1,0\n")
        with pytest.raises(ConfigurationError):
            fileio.read_signal_csv(path)

    def test_rejects_malformed_row(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("x,re,im\n0.0,1,0\n0.1,one,0\n")
        with pytest.raises(ConfigurationError):
            fileio.read_signal_csv(path)


class TestCoeffsJson:
    def test_hermite_round_trip(self, tmp_path):
        h = HermiteCoeffs(np.array([1.0, -0.5j, 0.25 + 0.25j]))
        path = tmp_path / "h.json"
        fileio.write_coeffs_json(h, path)
        back = fileio.read_coeffs_json(path)
        assert isinstance(back, HermiteCoeffs)
        np.testing.assert_array_equal(back.coeffs, h.coeffs)

    def test_fock_round_trip(self, tmp_path):
        F = FockCoeffs(np.array([0.0, 1.0 + 2.0j]))
        path = tmp_path / "F.json"
        fileio.write_coeffs_json(F, path)
        back = fileio.read_coeffs_json(path)
        assert isinstance(back, FockCoeffs)
        np.testing.assert_array_equal(back.coeffs, F.coeffs)

    def test_schema_fields(self, tmp_path):
        path = tmp_path / "h.json"
        fileio.write_coeffs_json(HermiteCoeffs(np.array([1.0 + 0j])), path)
        doc = json.loads(path.read_text())
        assert doc["basis"] == "hermite"
        assert doc["n"] == 1
        assert doc["coeffs"] == [[1.0, 0.0]]

    def test_rejects_bad_basis(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"basis": "fourier", "n": 1, "coeffs": [[1, 0]]}')
        with pytest.raises(ConfigurationError):
            fileio.read_coeffs_json(path)

    def test_rejects_inconsistent_count(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"basis": "fock", "n": 3, "coeffs": [[1, 0]]}')
        with pytest.raises(ConfigurationError):
            fileio.read_coeffs_json(path)

    def test_rejects_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ConfigurationError):
            fileio.read_coeffs_json(path)


class TestSymbolJson:
    def test_gaussian_round_trip(self, tmp_path):
        sym = gaussian_symbol(0.25, 0.7)
        path = tmp_path / "sym.json"
        fileio.write_symbol_json(sym, path)
        back = fileio.read_symbol_json(path)
        assert back.kind == "gauss"
        for z in (0.4 + 0.2j, -1.0):
            assert complex(back.evaluate(z)) == pytest.approx(
                complex(sym.evaluate(z)), rel=1e-12
            )

    def test_pv_round_trip(self, tmp_path):
        path = tmp_path / "sym.json"
        fileio.write_symbol_json(hilbert_symbol(), path)
        back = fileio.read_symbol_json(path)
        assert back.kind == "hilbert" and back.growth_bound == 0.5

    def test_generic_rebuilds_from_taylor(self, tmp_path):
        sym = gaussian_symbol(0.2, 0.0)
        path = tmp_path / "sym.json"
        doc = {
            "kind": "custom",
            "params": {},
            "growth_bound": 0.2,
            "taylor": [[c.real, c.imag] for c in sym.taylor.coeffs],
        }
        path.write_text(json.dumps(doc))
        back = fileio.read_symbol_json(path)
        assert complex(back.evaluate(1.0 + 0.5j)) == pytest.approx(
            complex(sym.evaluate(1.0 + 0.5j)), rel=1e-10
        )
