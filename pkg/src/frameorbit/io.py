"""JSON frame files.

A frame file is a UTF-8 JSON object::

    {
      "kind": "finite" | "sampled",
      "dim": m,
      "vectors": [[[re, im], ...], ...],   # one m-vector f(x_i) per entry
      "nodes": [...],                      # sampled only
      "weights": [...]                     # sampled only
    }

Nodes are reals, or lists of reals for product index spaces. Complex numbers
are always ``[re, im]`` pairs. Floats are written with Python's shortest
round-trip ``repr`` so parse/emit/parse is exact.
"""

import json
import math

import numpy as np

from .exceptions import FrameError, ParseError
from .frames import FrameMatrix, SampledFrame

__all__ = [
    "parse_frame_file",
    "emit_frame_file",
    "frame_to_dict",
    "frame_from_dict",
    "complex_to_pairs",
]


def complex_to_pairs(a):
    """Nested lists of ``[re, im]`` pairs for a complex array."""
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [complex_to_pairs(x) for x in a]


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ParseError(f"{where}: number is not finite")
    return value


def _pair(value, where):
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"{where}: expected an [re, im] pair")
    return complex(_number(value[0], where + "[0]"), _number(value[1], where + "[1]"))


def frame_from_dict(doc):
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    kind = doc.get("kind")
    if kind not in ("finite", "sampled"):
        raise ParseError(f"kind: expected 'finite' or 'sampled', got {kind!r}")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim: expected a positive integer, got {dim!r}")
    raw = doc.get("vectors")
    if not isinstance(raw, list) or not raw:
        raise ParseError("vectors: expected a non-empty list")
    vectors = np.empty((len(raw), dim), dtype=complex)
    for i, vec in enumerate(raw):
        if not isinstance(vec, list) or len(vec) != dim:
            raise ParseError(f"vectors[{i}]: expected {dim} entries")
        for k, entry in enumerate(vec):
            vectors[i, k] = _pair(entry, f"vectors[{i}][{k}]")

    try:
        if kind == "finite":
            extra = {"nodes", "weights"} & doc.keys()
            if extra:
                raise ParseError(f"{sorted(extra)[0]}: not allowed for finite frames")
            return FrameMatrix.from_vectors(vectors)

        nodes = doc.get("nodes")
        weights = doc.get("weights")
        if not isinstance(nodes, list) or len(nodes) != len(raw):
            raise ParseError(f"nodes: expected a list of {len(raw)} entries")
        if not isinstance(weights, list) or len(weights) != len(raw):
            raise ParseError(f"weights: expected a list of {len(raw)} entries")
        w = np.array([_number(v, f"weights[{i}]") for i, v in enumerate(weights)])
        for i, v in enumerate(w):
            if v <= 0.0:
                raise ParseError(f"weights[{i}]: must be positive, got {v!r}")
        if all(isinstance(x, list) for x in nodes):
            x = np.array(
                [[_number(c, f"nodes[{i}][{k}]") for k, c in enumerate(p)] for i, p in enumerate(nodes)]
            )
        else:
            x = np.array([_number(v, f"nodes[{i}]") for i, v in enumerate(nodes)])
        return SampledFrame(x, w, vectors)
    except ParseError:
        raise
    except FrameError as exc:
        if exc.exit_code == 2:
            raise ParseError(str(exc)) from None
        raise


def parse_frame_file(data):
    """Parse frame-file bytes (or text) into a frame.

    Raises
    ------
    ParseError
        For malformed JSON (with line and column) or schema violations
        (naming the offending field).
    NotAFrame
        If the vectors are well formed but do not span.
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return frame_from_dict(doc)


def frame_to_dict(f):
    doc = {
        "kind": "sampled" if isinstance(f, SampledFrame) else "finite",
        "dim": f.dim,
        "vectors": complex_to_pairs(f.vectors),
    }
    if isinstance(f, SampledFrame):
        doc["nodes"] = f.nodes.tolist()
        doc["weights"] = f.weights.tolist()
    return doc


def emit_frame_file(f):
    """Serialize a frame to UTF-8 JSON bytes."""
    return (json.dumps(frame_to_dict(f)) + "\n").encode("utf-8")
