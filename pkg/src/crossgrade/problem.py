"""JSON problem files: group, coefficients, pairs, an optional K-element, a query.

Parse errors carry a position: line/column for malformed JSON, a JSON path
(``$.pairs[0].alpha[1][2]``) for schema violations.  ``emit`` writes the
canonical form; ``parse(emit(p))`` rebuilds the same domain objects.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import coeffs as cf
from .crossed import GammaPair, make_pair
from .groups import FiniteGroup, direct_product, make_cyclic, make_symmetric
from .kaction import KElement

FORMAT = "crossgrade-problem/1"


class ProblemParseError(ValueError):
    def __init__(self, message: str, path: str = "$", line: int | None = None, col: int | None = None):
        self.path, self.line, self.col = path, line, col
        where = f"line {line}, column {col}" if line is not None else path
        super().__init__(f"{where}: {message}")


@dataclass
class Problem:
    group: FiniteGroup
    coeff: cf.CoefficientSystem
    group_desc: dict
    coeff_desc: dict
    pairs: list = field(default_factory=list)
    k: KElement | None = None
    query: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# descriptions -> objects

def _need(d: dict, key: str, path: str, kind=None):
    if not isinstance(d, dict):
        raise ProblemParseError("object expected", path)
    if key not in d:
        raise ProblemParseError(f"missing field {key!r}", path)
    v = d[key]
    if kind is not None and not isinstance(v, kind) or isinstance(v, bool) and kind is int:
        raise ProblemParseError(f"field {key!r} has the wrong type", f"{path}.{key}")
    return v


def _int_matrix(v, path: str, shape=None) -> np.ndarray:
    if not isinstance(v, list):
        raise ProblemParseError("array expected", path)
    for i, row in enumerate(v):
        items = row if isinstance(row, list) else [row]
        for j, x in enumerate(items):
            if not isinstance(x, int) or isinstance(x, bool):
                sub = f"{path}[{i}][{j}]" if isinstance(row, list) else f"{path}[{i}]"
                raise ProblemParseError("integer expected", sub)
    try:
        a = np.array(v, dtype=np.int64)
    except ValueError:
        raise ProblemParseError("ragged array", path) from None
    if shape is not None and a.shape != shape:
        raise ProblemParseError(f"shape {a.shape} expected {shape}", path)
    return a


def build_group(desc: dict, path: str = "$.group") -> FiniteGroup:
    kind = _need(desc, "kind", path, str)
    try:
        if kind == "cyclic":
            return make_cyclic(_need(desc, "n", path, int))
        if kind == "symmetric":
            return make_symmetric(_need(desc, "n", path, int))
        if kind == "product":
            fs = _need(desc, "factors", path, list)
            if not fs:
                raise ProblemParseError("empty product", f"{path}.factors")
            g = build_group(fs[0], f"{path}.factors[0]")
            for i, f in enumerate(fs[1:], start=1):
                g = direct_product(g, build_group(f, f"{path}.factors[{i}]"))
            return g
        if kind == "table":
            t = _int_matrix(_need(desc, "table", path, list), f"{path}.table")
            return FiniteGroup(t, desc.get("labels"))
    except ProblemParseError:
        raise
    except (ValueError, AssertionError) as e:
        raise ProblemParseError(str(e), path) from None
    raise ProblemParseError(f"unknown group kind {kind!r}", f"{path}.kind")


def build_coeff(desc: dict, path: str = "$.coeff") -> cf.CoefficientSystem:
    kind = _need(desc, "kind", path, str)
    try:
        if kind == "sign":
            return cf.sign_units()
        if kind == "roots_of_unity":
            return cf.roots_of_unity(_need(desc, "n", path, int), bool(desc.get("conjugation", False)))
        if kind == "quaternion":
            return cf.quaternion_units()
        if kind == "galois":
            perms = _int_matrix(_need(desc, "perms", path, list), f"{path}.perms")
            return cf.galois_system(perms.tolist(), desc.get("labels"))
        if kind == "custom":
            ut = _int_matrix(_need(desc, "unit_table", path, list), f"{path}.unit_table")
            autos = _int_matrix(_need(desc, "autos", path, list), f"{path}.autos")
            return cf.custom_system(ut, autos.tolist(), desc.get("inner"), desc.get("commutative"),
                                    desc.get("unit_labels"))
    except ProblemParseError:
        raise
    except (ValueError, AssertionError) as e:
        raise ProblemParseError(str(e), path) from None
    raise ProblemParseError(f"unknown coefficient kind {kind!r}", f"{path}.kind")


def _build_pair(d: dict, G: FiniteGroup, C: cf.CoefficientSystem, path: str) -> GammaPair:
    n = G.order
    alpha = _int_matrix(_need(d, "alpha", path, list), f"{path}.alpha", (n, n))
    eta = _int_matrix(_need(d, "eta", path, list), f"{path}.eta", (n,))
    for (i, j), x in np.ndenumerate(alpha):
        if not 0 <= x < C.n_units:
            raise ProblemParseError(f"unit index {x} out of range", f"{path}.alpha[{i}][{j}]")
    for i, x in enumerate(eta):
        if not 0 <= x < C.n_autos:
            raise ProblemParseError(f"automorphism index {x} out of range", f"{path}.eta[{i}]")
    return make_pair(G, C, alpha, eta, d.get("name", ""))


def _build_k(d: dict, G: FiniteGroup, C: cf.CoefficientSystem, path: str) -> KElement:
    n = G.order
    lam = _int_matrix(_need(d, "lambda", path, list), f"{path}.lambda", (n,))
    phi = _need(d, "phi", path, int)
    pg = _int_matrix(_need(d, "phi_g", path, list), f"{path}.phi_g", (n,))
    if ((lam < 0) | (lam >= C.n_units)).any():
        raise ProblemParseError("unit index out of range", f"{path}.lambda")
    if not 0 <= phi < C.n_autos:
        raise ProblemParseError("automorphism index out of range", f"{path}.phi")
    if sorted(pg.tolist()) != list(range(n)) or not G.is_homomorphism(pg.tolist(), G):
        raise ProblemParseError("phi_g is not an automorphism of the group", f"{path}.phi_g")
    return KElement(lam, phi, tuple(pg.tolist()))


def from_dict(doc: Any) -> Problem:
    if not isinstance(doc, dict):
        raise ProblemParseError("top level must be an object")
    fmt = _need(doc, "format", "$", str)
    if fmt != FORMAT:
        raise ProblemParseError(f"unsupported format {fmt!r}, expected {FORMAT!r}", "$.format")
    gd = _need(doc, "group", "$", dict)
    cd = _need(doc, "coeff", "$", dict)
    G, C = build_group(gd), build_coeff(cd)
    pairs = [_build_pair(p, G, C, f"$.pairs[{i}]") for i, p in enumerate(doc.get("pairs", []))]
    k = _build_k(doc["k"], G, C, "$.k") if doc.get("k") is not None else None
    q = doc.get("query", {})
    if not isinstance(q, dict):
        raise ProblemParseError("object expected", "$.query")
    return Problem(G, C, gd, cd, pairs, k, q)


def parse(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemParseError(e.msg, line=e.lineno, col=e.colno) from None
    return from_dict(doc)


def load(path) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# objects -> canonical text

def pair_dict(p: GammaPair) -> dict:
    d = {"name": p.name} if p.name else {}
    d["alpha"] = p.alpha.tolist()
    d["eta"] = p.eta.tolist()
    return d


def k_dict(k: KElement) -> dict:
    return {"lambda": k.lam.tolist(), "phi": k.phi, "phi_g": list(k.phi_g)}


def to_dict(p: Problem) -> dict:
    doc = {"format": FORMAT, "group": p.group_desc, "coeff": p.coeff_desc,
           "pairs": [pair_dict(x) for x in p.pairs]}
    if p.k is not None:
        doc["k"] = k_dict(p.k)
    if p.query:
        doc["query"] = p.query
    return doc


_FLAT = re.compile(r"\[[^\[\]{}]*\]")


def dumps(obj) -> str:
    """Indented JSON with innermost arrays kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT.sub(lambda m: re.sub(r"\s+", " ", m.group(0)).replace("[ ", "[").replace(" ]", "]"), text) + "\n"


def emit(p: Problem) -> str:
    return dumps(to_dict(p))


def same_problem(a: Problem, b: Problem) -> bool:
    """Semantic equality of two parsed problems."""
    from .crossed import _same_coeff
    return (a.group == b.group and _same_coeff(a.coeff, b.coeff) and a.pairs == b.pairs
            and [x.name for x in a.pairs] == [x.name for x in b.pairs]
            and a.k == b.k and a.query == b.query)


# ---------------------------------------------------------------------------
# short command-line spellings

def group_desc_from_spec(spec: str) -> dict:
    """``cyclic:4``, ``c4``, ``s3``, ``symmetric:3``, ``product:c4,c4``, ``c4xc4``."""
    s = spec.strip().lower()
    if s.startswith("product:"):
        return {"kind": "product", "factors": [group_desc_from_spec(x) for x in s[8:].split(",")]}
    if s.startswith("cyclic:"):
        return {"kind": "cyclic", "n": int(s[7:])}
    if s.startswith("symmetric:"):
        return {"kind": "symmetric", "n": int(s[10:])}
    if "x" in s:
        return {"kind": "product", "factors": [group_desc_from_spec(x) for x in s.split("x")]}
    m = re.fullmatch(r"([cs])(\d+)", s)
    if m:
        return {"kind": "cyclic" if m.group(1) == "c" else "symmetric", "n": int(m.group(2))}
    raise ProblemParseError(f"cannot read group spec {spec!r}", "--group")
