"""JSON wire formats for maps and boundary data.

Two map layouts are accepted. "familyF" carries only the harmonic part
and the companion is produced by the clamped extension; "HB" carries an
explicit companion. Complex numbers travel as [re, im] pairs so the
files stay language-neutral.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .biharmonic import BiharmonicMap, clamped_extension
from .errors import ContractError
from .grids import BoundaryQuadrature
from .harmonic import BoundaryData, HarmonicMap
from .series import AnalyticSeries

__all__ = [
    "load_map",
    "dump_map",
    "load_boundary_data",
    "dump_boundary_data",
]


def _decode_complex_list(raw: Any, where: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise ContractError(f"{where}: expected a list")
    if not raw:
        # empty list means the zero series
        return np.zeros(1, dtype=np.complex128)
    out = np.empty(len(raw), dtype=np.complex128)
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, (int, float)) for v in item)
        ):
            raise ContractError(f"{where}[{k}]: expected [re, im]")
        out[k] = complex(item[0], item[1])
    return out


def _encode_complex_array(arr: np.ndarray) -> list:
    return [[float(c.real), float(c.imag)] for c in np.asarray(arr).ravel()]


def _decode_harmonic(raw: Any, where: str) -> HarmonicMap:
    if not isinstance(raw, dict) or "w1" not in raw:
        raise ContractError(f"{where}: expected an object with 'w1'")
    w1 = _decode_complex_list(raw["w1"], f"{where}.w1")
    if "w2" in raw:
        w2 = _decode_complex_list(raw["w2"], f"{where}.w2")
    else:
        w2 = np.zeros(1, dtype=np.complex128)
    return HarmonicMap(AnalyticSeries(w1), AnalyticSeries(w2))


def load_map(text: str) -> BiharmonicMap:
    """Parse a JSON map description into a `BiharmonicMap`."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContractError(f"map spec is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ContractError("map spec must be a JSON object")
    kind = raw.get("type")
    if kind == "familyF":
        H = _decode_harmonic(raw.get("H"), "H")
        return clamped_extension(H)
    if kind == "HB":
        H = _decode_harmonic(raw.get("H"), "H")
        if "h" not in raw:
            raise ContractError("'HB' maps need an explicit companion 'h'")
        h = _decode_harmonic(raw.get("h"), "h")
        return BiharmonicMap(H, h)
    raise ContractError("map spec 'type' must be 'familyF' or 'HB'")


def dump_map(u: BiharmonicMap) -> str:
    """Serialize a map; clamped extensions round-trip as 'familyF'."""
    H_enc = {
        "w1": _encode_complex_array(u.H.w1.coef),
        "w2": _encode_complex_array(u.H.w2.coef),
    }
    if u.from_clamped_extension:
        doc: dict[str, Any] = {"type": "familyF", "H": H_enc}
    else:
        doc = {
            "type": "HB",
            "H": H_enc,
            "h": {
                "w1": _encode_complex_array(u.h.w1.coef),
                "w2": _encode_complex_array(u.h.w2.coef),
            },
        }
    return json.dumps(doc, indent=2) + "\n"


def load_boundary_data(text: str) -> BoundaryData:
    """Parse {"N": ..., "phi": ..., "psi": ...} into `BoundaryData`."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ContractError(
            f"boundary data is not valid JSON: {exc}"
        ) from None
    if not isinstance(raw, dict):
        raise ContractError("boundary data must be a JSON object")
    n = raw.get("N")
    if not isinstance(n, int):
        raise ContractError("boundary data needs an integer node count 'N'")
    if "phi" not in raw:
        raise ContractError("boundary data needs clamped values 'phi'")
    phi = _decode_complex_list(raw["phi"], "phi")
    if phi.size != n:
        raise ContractError("'phi' length must equal N")
    psi = None
    if raw.get("psi") is not None:
        psi = _decode_complex_list(raw["psi"], "psi")
        if psi.size != n:
            raise ContractError("'psi' length must equal N")
    return BoundaryData(BoundaryQuadrature(n), phi, psi)


def dump_boundary_data(data: BoundaryData) -> str:
    doc = {
        "N": int(data.quad.n),
        "phi": _encode_complex_array(data.phi),
        "psi": _encode_complex_array(data.psi),
    }
    return json.dumps(doc, indent=2) + "\n"
