"""JSON serialization round trips and contract validation."""

import json

import numpy as np
import pytest

from biharm import (
    BiharmonicMap,
    BoundaryData,
    ContractError,
    HarmonicMap,
    boundary_quadrature,
    boundary_trace,
    dump_boundary_data,
    dump_map,
    example1_map,
    example2_map,
    load_boundary_data,
    load_map,
)


def test_family_map_round_trip():
    u = example1_map(0.5)
    text = dump_map(u)
    doc = json.loads(text)
    assert doc["type"] == "familyF"
    assert "h" not in doc
    v = load_map(text)
    assert v.from_clamped_extension
    assert np.array_equal(v.H.w1.coef, u.H.w1.coef)
    assert np.array_equal(v.H.w2.coef, u.H.w2.coef)
    assert np.array_equal(v.h.w1.coef, u.h.w1.coef)


def test_general_map_round_trip():
    u = BiharmonicMap(
        HarmonicMap.from_coefficients([0, 1, 0.5j], [0, 0.2]),
        HarmonicMap.from_coefficients([0.1, -0.3]),
    )
    text = dump_map(u)
    assert json.loads(text)["type"] == "HB"
    v = load_map(text)
    assert not v.from_clamped_extension
    assert np.array_equal(v.H.w1.coef, u.H.w1.coef)
    assert np.array_equal(v.h.w1.coef, u.h.w1.coef)
    z = 0.6 * np.exp(1j * np.linspace(0, 6, 9))
    assert np.array_equal(u(z), v(z))


def test_boundary_data_round_trip():
    bd = boundary_trace(example2_map(3), boundary_quadrature(32))
    v = load_boundary_data(dump_boundary_data(bd))
    assert v.quad.n == 32
    assert np.array_equal(v.phi, bd.phi)
    assert np.array_equal(v.psi, bd.psi)


def test_empty_w2_means_zero_series():
    doc = {"type": "familyF", "H": {"w1": [[0.0, 0.0], [1.0, 0.0]], "w2": []}}
    u = load_map(json.dumps(doc))
    assert np.array_equal(u.H.w2.coef, np.zeros(1, dtype=np.complex128))
    assert complex(u(0.5)) == pytest.approx(complex(example1_map(0.5)(0.5)))


def test_malformed_documents_raise_contract_errors():
    with pytest.raises(ContractError):
        load_map("not json at all {")
    with pytest.raises(ContractError):
        load_map(json.dumps({"type": "mystery", "H": {"w1": [[0, 0]], "w2": []}}))
    with pytest.raises(ContractError):
        load_map(json.dumps({"type": "familyF"}))
    with pytest.raises(ContractError):
        load_map(json.dumps({"type": "familyF", "H": {"w1": [[0.0]], "w2": []}}))
    with pytest.raises(ContractError):
        load_map(json.dumps({"type": "familyF", "H": {"w1": "zz", "w2": []}}))


def test_boundary_document_validation():
    bd = boundary_trace(example1_map(0.5), boundary_quadrature(16))
    doc = json.loads(dump_boundary_data(bd))
    doc["N"] = 8
    with pytest.raises(ContractError):
        load_boundary_data(json.dumps(doc))
    doc.pop("N")
    with pytest.raises(ContractError):
        load_boundary_data(json.dumps(doc))
    with pytest.raises(ContractError):
        load_boundary_data("[1, 2, 3]")
