"""JSON documents for matrices and circuits, plus angle parsing and formatting.

A matrix document is ``{"shape": 4, "entries": [[re, im], ...]}`` with the
entries in row-major order.  A circuit document is::

    {"phase": 0.0,
     "base": {"kind": "controlled", "param": 1.5707963267948966},
     "overrides": [null, {"kind": "custom", "matrix": {...}}],   # optional
     "layers": [{"a": <2x2 matrix>, "b": <2x2 matrix>}, ...]}

Floats are written with Python's shortest round-trip representation, so
emit followed by parse reproduces every stored double exactly.  Unknown
top-level keys (such as ``"meta"``) are ignored on input.
"""

import json
import re

import numpy as np

from .errors import NonUnitaryInputError
from .matcore import UNITARY_TOL, LocalLayer, unitarity_error
from .synth.circuit import CONTROLLED, CUSTOM, KINDS, MIRROR_CONTROLLED, SUPERCONTROLLED, BaseGate, Circuit


class DocumentError(ValueError):
    """A document or argument could not be parsed."""


# --- angles -----------------------------------------------------------------------

_PI_RE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<num>\d*\.?\d*(?:[eE][+-]?\d+)?)\s*\*?\s*(?:pi|π)\s*(?:/\s*(?P<den>\d*\.?\d+))?\s*$")


def parse_angle(text):
    """Parse ``"0.785"``, ``"pi/4"``, ``"-3pi/8"``, ``"3*pi/8"`` or ``"π/2"`` to radians."""
    s = str(text).strip()
    m = _PI_RE.match(s)
    if m:
        try:
            num = float(m.group("num")) if m.group("num") else 1.0
            den = float(m.group("den")) if m.group("den") else 1.0
        except ValueError:
            raise DocumentError(f"cannot parse angle {text!r}") from None
        if den == 0:
            raise DocumentError(f"zero denominator in angle {text!r}")
        value = num * np.pi / den
        return -value if m.group("sign") == "-" else value
    try:
        value = float(s)
    except ValueError:
        raise DocumentError(f"cannot parse angle {text!r}") from None
    if not np.isfinite(value):
        raise DocumentError(f"angle must be finite, got {text!r}")
    return value


def parse_triple(text):
    """Three comma-separated angles."""
    parts = str(text).split(",")
    if len(parts) != 3:
        raise DocumentError(f"expected three comma-separated values, got {text!r}")
    return tuple(parse_angle(p) for p in parts)


def format_angle(x, tol=1e-9):
    """``x`` as a small fraction of pi when it is one (``"3π/8"``), else a decimal."""
    if abs(x) <= tol:
        return "0"
    for den in (1, 2, 3, 4, 6, 8, 12, 16):
        k = x * den / np.pi
        if abs(k - round(k)) <= tol * den:
            k = int(round(k))
            num = {1: "", -1: "-"}.get(k, str(k))
            return f"{num}π" if den == 1 else f"{num}π/{den}"
    return f"{x:.12g}"


# --- base gates ---------------------------------------------------------------------

def _clamp_rounded(text, value, upper):
    """Clamp a decimal to ``upper`` when it only exceeds it through rounding.

    ``"1.5708"`` means pi/2 written to four places; read literally it lies
    just outside the domain of a controlled gate.  A value is clamped when
    ``upper`` is within half a unit of its last written digit.
    """
    m = re.fullmatch(r"\s*[+-]?\d*\.(\d+)\s*", str(text))
    if m is None or value <= upper:
        return value
    half_unit = 0.5 * 10.0 ** -len(m.group(1))
    return upper if value - upper <= half_unit else value


def parse_base(text):
    """``controlled:γ``, ``supercontrolled:α2`` or ``mirror_controlled:γ``."""
    kind, sep, value = str(text).partition(":")
    kind = kind.strip().lower().replace("-", "_")
    if not sep or kind not in (CONTROLLED, SUPERCONTROLLED, MIRROR_CONTROLLED):
        raise DocumentError(
            f"base must look like controlled:γ, supercontrolled:α2 or mirror_controlled:γ, got {text!r}")
    param = _clamp_rounded(value, parse_angle(value), np.pi / 2 if kind != SUPERCONTROLLED else np.pi / 4)
    return {CONTROLLED: BaseGate.controlled, SUPERCONTROLLED: BaseGate.supercontrolled,
            MIRROR_CONTROLLED: BaseGate.mirror_controlled}[kind](param)


# --- matrices -----------------------------------------------------------------------

def matrix_to_doc(m):
    m = np.asarray(m, dtype=complex)
    return {"shape": int(m.shape[0]),
            "entries": [[float(z.real), float(z.imag)] for z in m.reshape(-1)]}


def _nearest_unitary(m):
    u, _, vh = np.linalg.svd(m)
    return u @ vh


def matrix_from_doc(doc, shape=None, tol=1e-8, allow_nonunitary=False):
    """Parse a matrix document.

    Args:
        doc: The decoded JSON object.
        shape: Required dimension, if any.
        tol: Unitarity tolerance.  An accepted matrix that is off by more
            than the library's internal tolerance is replaced by its nearest
            unitary (the polar factor); closer matrices are kept bit for bit.
        allow_nonunitary: Skip the tolerance check (the polar factor is
            still taken when needed).

    Raises:
        DocumentError: on malformed input.
        NonUnitaryInputError: if the matrix is not unitary within ``tol``.
    """
    try:
        n = int(doc["shape"])
        entries = doc["entries"]
        if n not in (2, 4) or len(entries) != n * n:
            raise DocumentError(f"shape {n} needs {n * n} entries, got {len(entries)}")
        flat = [complex(float(re_), float(im)) for re_, im in entries]
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed matrix document: {exc}") from None
    if shape is not None and n != shape:
        raise DocumentError(f"expected a {shape}x{shape} matrix, got {n}x{n}")
    m = np.array(flat, dtype=complex).reshape(n, n)
    if not np.all(np.isfinite(m)):
        raise DocumentError("matrix entries must be finite")
    err = unitarity_error(m)
    if err > tol and not allow_nonunitary:
        raise NonUnitaryInputError(f"matrix is not unitary: ||U^dag U - I|| = {err:.3e} > {tol:.1e}")
    return _nearest_unitary(m) if err > UNITARY_TOL / 10 else m


# --- circuits ------------------------------------------------------------------------

def base_to_doc(base):
    if base.kind == CUSTOM:
        doc = {"kind": CUSTOM, "matrix": matrix_to_doc(base.custom_matrix)}
        if base.label:
            doc["label"] = base.label
        return doc
    return {"kind": base.kind, "param": base.param}


def base_from_doc(doc, tol=1e-8):
    try:
        kind = doc["kind"]
    except (KeyError, TypeError):
        raise DocumentError("base needs a 'kind'") from None
    if kind not in KINDS:
        raise DocumentError(f"unknown base kind {kind!r}")
    if kind == CUSTOM:
        if "matrix" not in doc:
            raise DocumentError("custom base needs an inline 'matrix'")
        return BaseGate.custom(matrix_from_doc(doc["matrix"], 4, tol), label=doc.get("label"))
    try:
        param = float(doc["param"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError(f"{kind} base needs a numeric 'param'") from None
    return {CONTROLLED: BaseGate.controlled, SUPERCONTROLLED: BaseGate.supercontrolled,
            MIRROR_CONTROLLED: BaseGate.mirror_controlled}[kind](param)


def circuit_to_doc(circuit, meta=None):
    doc = {
        "phase": circuit.phase,
        "applications": circuit.n,
        "base": base_to_doc(circuit.base),
        "layers": [{"a": matrix_to_doc(layer.a), "b": matrix_to_doc(layer.b)} for layer in circuit.layers],
    }
    if circuit.overrides is not None:
        doc["overrides"] = [None if g is None else base_to_doc(g) for g in circuit.overrides]
    if meta:
        doc["meta"] = meta
    return doc


def circuit_from_doc(doc, tol=1e-8):
    """Parse a circuit document; ``applications``, when present, must match the layers."""
    if not isinstance(doc, dict):
        raise DocumentError("circuit document must be an object")
    try:
        phase = float(doc.get("phase", 0.0))
        raw_layers = doc["layers"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed circuit document: {exc}") from None
    if not isinstance(raw_layers, list) or not raw_layers:
        raise DocumentError("'layers' must be a non-empty list")
    layers = []
    for i, layer in enumerate(raw_layers):
        if not isinstance(layer, dict) or "a" not in layer or "b" not in layer:
            raise DocumentError(f"layer {i} needs 'a' and 'b'")
        layers.append(LocalLayer(matrix_from_doc(layer["a"], 2, tol), matrix_from_doc(layer["b"], 2, tol)))
    if "applications" in doc and doc["applications"] != len(layers) - 1:
        raise DocumentError(f"'applications' is {doc['applications']!r} but there are {len(layers)} layers")
    base = base_from_doc(doc.get("base"), tol)
    overrides = doc.get("overrides")
    if overrides is not None:
        if not isinstance(overrides, list) or len(overrides) != len(layers) - 1:
            raise DocumentError("'overrides' needs one entry per application")
        overrides = [None if o is None else base_from_doc(o, tol) for o in overrides]
    return Circuit(base, layers, phase, overrides)


# --- files ---------------------------------------------------------------------------

def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from None


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False)


__all__ = [
    "DocumentError",
    "parse_angle",
    "parse_triple",
    "format_angle",
    "parse_base",
    "matrix_to_doc",
    "matrix_from_doc",
    "base_to_doc",
    "base_from_doc",
    "circuit_to_doc",
    "circuit_from_doc",
    "load_json",
    "dumps",
]
