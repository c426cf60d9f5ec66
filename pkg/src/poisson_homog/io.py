"""
JSON file formats. Rationals are written as strings ("3", "-1/2") so files
never carry floating-point values; indices are 0-based.

Algebra file:
    {"dim": 3, "basis": ["H", "E", "F"],
     "brackets": {"0,1": ["0", "2", "0"], ...},
     "cobracket": [[...], ...],          optional, rows over wedge^2 g
     "h": [0] or [["1", "0", "0"]],       optional, indices or vectors
     "lambda": {"1,2": "1"}}              optional
Module file:
    {"dimV": 1, "rho": [matrix, ...],
     "component_generators": [{"on_l": matrix, "on_V": matrix}]}
Frame file (either form):
    {"g_generators": [...], "d_generators": [...], "h_generators": [...]}
    {"Ad_g": matrix, "piG": {"i,j": c}, "Ad_d": matrix}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import linalg as la
from .double import BialgebraData
from .exterior import Multivector, basis_keys, wedge_dim
from .lie import LieAlgebraData
from .cohomology import FiniteModule


class FormatError(ValueError):
    pass


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise FormatError("rationals must be strings or integers, got %r" % (s,))
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise FormatError("rationals must be strings or integers, got %r" % (s,))
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError("not a rational: %r" % s) from None


def format_rational(x) -> str:
    return str(Fraction(x))


def _vector(v) -> tuple:
    if not isinstance(v, list):
        raise FormatError("expected a list, got %r" % (v,))
    return tuple(parse_rational(x) for x in v)


def _matrix(m, rows=None, cols=None) -> tuple:
    if not isinstance(m, list):
        raise FormatError("expected a matrix, got %r" % (m,))
    M = tuple(_vector(r) for r in m)
    if rows is not None and len(M) != rows:
        raise FormatError("matrix must have %d rows" % rows)
    if cols is not None and any(len(r) != cols for r in M):
        raise FormatError("matrix rows must have length %d" % cols)
    return M


def _pair_key(s: str, n: int) -> tuple:
    try:
        i, j = (int(t) for t in s.split(","))
    except ValueError:
        raise FormatError("bad index pair %r" % s) from None
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise FormatError("index pair %r out of range" % s)
    return i, j


def _bivector(d, n: int) -> Multivector:
    if isinstance(d, list):
        v = _vector(d)
        if len(v) != wedge_dim(n, 2):
            raise FormatError("bivector needs %d coordinates" % wedge_dim(n, 2))
        return Multivector.from_dense(n, 2, v)
    if not isinstance(d, dict):
        raise FormatError("bivector must be a dict or list")
    out = Multivector.zero(n, 2)
    for key, c in d.items():
        i, j = _pair_key(key, n)
        out = out + Multivector.basis(n, i, j) * parse_rational(c)
    return out


def _bivector_json(m: Multivector) -> dict:
    return {"%d,%d" % k: format_rational(c) for k, c in m.coords.items()}


def _matrix_json(M) -> list:
    return [[format_rational(x) for x in r] for r in M]


def parse_h(spec, n: int) -> tuple:
    """Basis-index list or explicit vectors."""
    if spec is None:
        return ()
    if not isinstance(spec, list):
        raise FormatError("h must be a list")
    if all(isinstance(t, int) and not isinstance(t, bool) for t in spec):
        if any(not 0 <= t < n for t in spec):
            raise FormatError("h index out of range")
        return tuple(la.unit(n, t) for t in spec)
    vecs = tuple(_vector(v) for v in spec)
    if any(len(v) != n for v in vecs):
        raise FormatError("h vectors must have length %d" % n)
    return vecs


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """Parsed algebra file."""
    g: LieAlgebraData
    cobracket: tuple | None
    h: tuple
    lam: Multivector | None
    name: str = ""
    description: str = ""

    @property
    def bialg(self) -> BialgebraData:
        if self.cobracket is None:
            return BialgebraData.trivial(self.g)
        return BialgebraData(self.g, self.cobracket)

    @property
    def lam_or_zero(self) -> Multivector:
        return self.lam if self.lam is not None else Multivector.zero(self.g.dim, 2)


def algebra_from_json(doc: dict) -> AlgebraSpec:
    if not isinstance(doc, dict):
        raise FormatError("algebra file must be a JSON object")
    try:
        n = doc["dim"]
    except KeyError:
        raise FormatError("missing field 'dim'") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("dim must be a non-negative integer")
    names = doc.get("basis") or []
    if names and len(names) != n:
        raise FormatError("basis must list %d names" % n)
    brackets = {}
    for key, v in (doc.get("brackets") or {}).items():
        i, j = _pair_key(key, n)
        vec = _vector(v)
        if len(vec) != n:
            raise FormatError("bracket %r must have length %d" % (key, n))
        if (j, i) in brackets and brackets[(j, i)] != tuple(-x for x in vec):
            raise FormatError("brackets %r and %d,%d are not antisymmetric" % (key, j, i))
        brackets[(i, j)] = vec
    g = LieAlgebraData.from_brackets(n, brackets, tuple(names))
    cob = doc.get("cobracket")
    cob = _matrix(cob, n, wedge_dim(n, 2)) if cob is not None else None
    lam = _bivector(doc["lambda"], n) if doc.get("lambda") is not None else None
    return AlgebraSpec(g, cob, parse_h(doc.get("h"), n), lam,
                       str(doc.get("name", "")), str(doc.get("description", "")))


def algebra_to_json(spec: AlgebraSpec) -> dict:
    g = spec.g
    n = g.dim
    doc: dict = {"dim": n, "basis": list(g.basis_names)}
    if spec.name:
        doc["name"] = spec.name
    if spec.description:
        doc["description"] = spec.description
    br = {}
    for i, j in basis_keys(n, 2):
        v = g.bracket_basis(i, j)
        if not la.is_zero(v):
            br["%d,%d" % (i, j)] = [format_rational(x) for x in v]
    doc["brackets"] = br
    if spec.cobracket is not None:
        doc["cobracket"] = _matrix_json(spec.cobracket)
    if spec.h:
        doc["h"] = _matrix_json(spec.h)
    if spec.lam is not None:
        doc["lambda"] = _bivector_json(spec.lam)
    return doc


def module_from_json(doc: dict, l_dim: int | None = None) -> FiniteModule:
    if not isinstance(doc, dict) or "dimV" not in doc or "rho" not in doc:
        raise FormatError("module file needs 'dimV' and 'rho'")
    m = doc["dimV"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise FormatError("dimV must be a non-negative integer")
    rho = tuple(_matrix(r, m, m) for r in doc["rho"])
    if l_dim is not None and len(rho) != l_dim:
        raise FormatError("rho must list %d matrices" % l_dim)
    gens = []
    for gen in doc.get("component_generators") or []:
        if not isinstance(gen, dict) or "on_l" not in gen or "on_V" not in gen:
            raise FormatError("component generators need 'on_l' and 'on_V'")
        gens.append((_matrix(gen["on_l"], len(rho), len(rho)), _matrix(gen["on_V"], m, m)))
    return FiniteModule(m, rho, tuple(gens))


def module_to_json(V: FiniteModule) -> dict:
    doc = {"dimV": V.dim, "rho": [_matrix_json(r) for r in V.rho]}
    if V.component_generators:
        doc["component_generators"] = [{"on_l": _matrix_json(a), "on_V": _matrix_json(b)}
                                       for a, b in V.component_generators]
    return doc


def frame_from_json(doc: dict, n: int) -> dict:
    """Raw frame data: generator lists or explicit matrices, parsed to exact values."""
    if not isinstance(doc, dict):
        raise FormatError("frame file must be a JSON object")
    out: dict = {}
    for key, length in (("g_generators", n), ("d_generators", 2 * n), ("h_generators", n)):
        if key in doc:
            vecs = tuple(_vector(v) for v in doc[key])
            if any(len(v) != length for v in vecs):
                raise FormatError("%s entries must have length %d" % (key, length))
            out[key] = vecs
    if "Ad_g" in doc:
        out["Ad_g"] = _matrix(doc["Ad_g"], n, n)
        out["piG"] = _bivector(doc.get("piG") or {}, n)
    if "Ad_d" in doc:
        out["Ad_d"] = _matrix(doc["Ad_d"], 2 * n, 2 * n)
    return out


def load_json(path) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise FormatError("cannot read %s: %s" % (path, e.strerror)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError("%s: invalid JSON (%s)" % (path, e.msg)) from None


def load_algebra(path) -> AlgebraSpec:
    return algebra_from_json(load_json(path))


def dumps(doc) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
