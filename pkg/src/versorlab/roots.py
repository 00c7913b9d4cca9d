"""Root systems generated by reflection closure.

A root system here is a finite set of unit grade-1 multivectors in Cl(n,0)
closed under reflection in each of its members, with no scalar multiples
beyond the antipode.  Systems are built by closing a simple-root seed set
under all reflections; the catalog provides standard seeds whose closures
have the classical root counts (A3 -> 12, B3 -> 18, H3 -> 30, E8 -> 240, ...).

Simple roots in the catalog are unit length and pairwise at the obtuse
angles pi - pi/m read off the Coxeter diagram.  Where no explicit coordinate
choice matters, seeds are constructed from the diagram Gram matrix by
Cholesky factorization.
"""

from __future__ import annotations

import math
import re
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .algebra import DEFAULT_EPS, Multivector, Signature, quantize, vector
from .errors import ClosureCapExceeded, UnknownCatalogName

__all__ = [
    "AxiomReport",
    "CartanMatrix",
    "DiagramEdge",
    "RootSystem",
    "cartan_matrix",
    "catalog",
    "catalog_names",
    "check_axioms",
    "close_roots",
    "diagram",
    "rootsystem_from_dict",
    "rootsystem_to_dict",
]

MAX_ROOTS = 10_000
MAX_SWEEPS = 100

GOLDEN = (1 + math.sqrt(5)) / 2


def _lex_order(coords: np.ndarray) -> np.ndarray:
    q = quantize(coords)
    return np.lexsort(tuple(q[:, i] for i in reversed(range(q.shape[1]))))


def _row_keys(coords: np.ndarray) -> list[bytes]:
    q = quantize(coords)
    return [q[i].tobytes() for i in range(q.shape[0])]


class RootSystem:
    """Finite reflection-closed set of unit vectors, with its simple-root seed."""

    def __init__(self, sig: Signature, simple_coords: np.ndarray, coords: np.ndarray,
                 name: Optional[str] = None):
        self.sig = sig
        self.name = name
        self.simple_coords = np.asarray(simple_coords, dtype=np.float64)
        self.coords = np.asarray(coords, dtype=np.float64)
        self.simple_coords.setflags(write=False)
        self.coords.setflags(write=False)
        self._keys = None

    @property
    def rank(self) -> int:
        return self.simple_coords.shape[0]

    @property
    def root_count(self) -> int:
        return self.coords.shape[0]

    @property
    def simple_roots(self) -> tuple[Multivector, ...]:
        return tuple(vector(self.sig, r) for r in self.simple_coords)

    @property
    def roots(self) -> tuple[Multivector, ...]:
        return tuple(vector(self.sig, r) for r in self.coords)

    def root_keys(self) -> frozenset:
        if self._keys is None:
            self._keys = frozenset(_row_keys(self.coords))
        return self._keys

    def __repr__(self):
        label = self.name or "?"
        return f"<RootSystem {label}: rank {self.rank}, {self.root_count} roots in Cl{tuple(self.sig)}>"


def _coerce_simple_coords(simple_roots, sig: Optional[Signature]):
    if isinstance(simple_roots, RootSystem):
        return simple_roots.sig, simple_roots.simple_coords.copy()
    rows = []
    for r in simple_roots:
        if isinstance(r, Multivector):
            if sig is None:
                sig = r.sig
            elif sig != r.sig:
                raise ValueError("simple roots live in different algebras")
            if not r.is_grade(1):
                raise ValueError("simple roots must be grade-1")
            rows.append(r.vector_coords())
        else:
            rows.append(np.asarray(r, dtype=np.float64))
    coords = np.vstack(rows)
    if sig is None:
        sig = Signature(coords.shape[1], 0)
    if sig.q != 0:
        raise ValueError("root systems require a positive-definite signature")
    if coords.shape[1] != sig.dim:
        raise ValueError("coordinate length does not match signature dimension")
    return sig, coords


def close_roots(simple_roots, sig: Optional[Signature] = None, *, name: Optional[str] = None,
                eps: float = DEFAULT_EPS, max_roots: int = MAX_ROOTS,
                max_sweeps: int = MAX_SWEEPS) -> RootSystem:
    """Reflection closure of +-(normalized simple roots).

    Repeatedly reflects every known root in every known root until no new
    unit vector appears.  Raises ClosureCapExceeded past ``max_roots``
    elements or ``max_sweeps`` passes, which signals a non-finite (or
    degenerate) seed configuration.
    """
    sig, simple = _coerce_simple_coords(simple_roots, sig)
    norms = np.linalg.norm(simple, axis=1)
    if np.any(norms < eps):
        raise ValueError("simple roots must be nonzero")
    if np.linalg.matrix_rank(simple, tol=1e-8) < simple.shape[0]:
        raise ValueError("simple roots must be linearly independent")
    simple = simple / norms[:, None]

    coords = np.vstack([simple, -simple])
    q = quantize(coords)
    _, first = np.unique(q, axis=0, return_index=True)
    coords = coords[np.sort(first)]
    seen = set(_row_keys(coords))

    for _ in range(max_sweeps):
        # reflect every root (axis 1) in every root (axis 0)
        dots = coords @ coords.T
        refl = coords[None, :, :] - 2.0 * dots.T[:, :, None] * coords[:, None, :]
        cand = refl.reshape(-1, coords.shape[1])
        qc = quantize(cand)
        _, first = np.unique(qc, axis=0, return_index=True)
        fresh_rows = []
        for idx in np.sort(first):
            key = qc[idx].tobytes()
            if key not in seen:
                seen.add(key)
                fresh_rows.append(cand[idx])
        if not fresh_rows:
            order = _lex_order(coords)
            return RootSystem(sig, simple, coords[order], name=name)
        coords = np.vstack([coords, np.array(fresh_rows)])
        if coords.shape[0] > max_roots:
            raise ClosureCapExceeded(
                f"reflection closure exceeded {max_roots} roots; seed is likely not a finite system")
    raise ClosureCapExceeded(f"reflection closure did not stabilize in {max_sweeps} sweeps")


class AxiomViolation(NamedTuple):
    reason: str
    witness: tuple


class AxiomReport(NamedTuple):
    """Outcome of the two root-system axioms, with first counterexamples."""

    scalar_multiples_ok: bool
    reflection_closed: bool
    scalar_violation: Optional[AxiomViolation]
    reflection_violation: Optional[AxiomViolation]

    @property
    def ok(self) -> bool:
        return self.scalar_multiples_ok and self.reflection_closed


def _coerce_root_coords(roots) -> np.ndarray:
    if isinstance(roots, RootSystem):
        return roots.coords
    rows = []
    for r in roots:
        rows.append(r.vector_coords() if isinstance(r, Multivector) else np.asarray(r, float))
    return np.vstack(rows)


def check_axioms(roots, eps: float = DEFAULT_EPS) -> AxiomReport:
    """Check the two defining axioms on an explicit root set.

    Axiom 1: the only scalar multiples of a root in the set are itself and
    its antipode (which must be present).  Axiom 2: the set is closed under
    reflection in each of its members.
    """
    coords = _coerce_root_coords(roots)
    n = coords.shape[0]
    keys = _row_keys(coords)
    keyset = set(keys)

    scalar_ok, scalar_bad = True, None
    norms = np.linalg.norm(coords, axis=1)
    for i in range(n):
        if not scalar_ok:
            break
        neg_key = quantize(-coords[i]).tobytes()
        if neg_key not in keyset:
            scalar_ok = False
            scalar_bad = AxiomViolation("missing antipode", (tuple(coords[i]),))
            break
        for j in range(n):
            if i == j:
                continue
            cos = coords[i] @ coords[j]
            if abs(abs(cos) - norms[i] * norms[j]) <= eps:
                # parallel: must be the exact antipode
                if quantize(coords[j]).tobytes() != neg_key:
                    scalar_ok = False
                    scalar_bad = AxiomViolation(
                        "scalar multiple besides the antipode",
                        (tuple(coords[i]), tuple(coords[j])))
                    break

    refl_ok, refl_bad = True, None
    unit = coords / norms[:, None]
    for i in range(n):
        # reflect all roots in root i
        imgs = coords - 2.0 * (coords @ unit[i])[:, None] * unit[i]
        qi = quantize(imgs)
        for j in range(n):
            if qi[j].tobytes() not in keyset:
                refl_ok = False
                refl_bad = AxiomViolation(
                    "reflection image not in set",
                    (tuple(coords[i]), tuple(coords[j]), tuple(imgs[j])))
                break
        if not refl_ok:
            break

    return AxiomReport(scalar_ok, refl_ok, scalar_bad, refl_bad)


class CartanMatrix:
    """Matrix of 2(a_i|a_j)/(a_j|a_j) over the simple roots."""

    def __init__(self, entries: np.ndarray):
        self.entries = np.asarray(entries, dtype=np.float64)
        self.entries.setflags(write=False)

    @property
    def rank(self) -> int:
        return self.entries.shape[0]

    def is_integral(self, eps: float = DEFAULT_EPS) -> bool:
        return bool(np.max(np.abs(self.entries - np.round(self.entries))) <= eps)

    def __repr__(self):
        return f"CartanMatrix({np.round(self.entries, 6).tolist()})"


def cartan_matrix(rs: RootSystem) -> CartanMatrix:
    s = rs.simple_coords
    gram = s @ s.T
    return CartanMatrix(2.0 * gram / np.diag(gram)[None, :])


class DiagramEdge(NamedTuple):
    i: int  # 1-based simple root indices
    j: int
    m: int


def diagram(rs: RootSystem, eps: float = DEFAULT_EPS, angle_tol: float = 1e-6) -> list[DiagramEdge]:
    """Coxeter diagram edges (i, j, m) for simple roots at angle pi - pi/m.

    Orthogonal pairs produce no edge.  Any other pair must sit at an obtuse
    angle of the form pi - pi/m for an integer 3 <= m <= 1000.
    """
    s = rs.simple_coords
    norms = np.linalg.norm(s, axis=1)
    edges = []
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            c = float(s[i] @ s[j] / (norms[i] * norms[j]))
            if abs(c) <= eps:
                continue
            if c > 0 or c <= -1:
                raise ValueError(
                    f"simple roots {i + 1},{j + 1} are not at an angle pi - pi/m (cos = {c})")
            m_real = math.pi / math.acos(-c)
            m = round(m_real)
            if m < 3 or m > 1000 or abs(m_real - m) > angle_tol * m:
                raise ValueError(
                    f"simple roots {i + 1},{j + 1} sit at angle with pi/(pi - angle) = {m_real}, "
                    "not an integer branch label")
            edges.append(DiagramEdge(i + 1, j + 1, m))
    return edges


# -- catalog -------------------------------------------------------------------

_SQ2 = math.sqrt(2)

_EXPLICIT_SEEDS = {
    "A1": [[1.0]],
    "A1^3": [[1.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]],
    "A1^4": [[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0], [0, 0, 0, 1.0]],
    # the tetrahedral choice: a1 = (e2-e1)/sqrt2, a2 = (e3-e2)/sqrt2, a3 = (e1+e2)/sqrt2
    "A3": [[-1 / _SQ2, 1 / _SQ2, 0], [0, -1 / _SQ2, 1 / _SQ2], [1 / _SQ2, 1 / _SQ2, 0]],
    "B3": [[1 / _SQ2, -1 / _SQ2, 0], [0, 1 / _SQ2, -1 / _SQ2], [0, 0, 1.0]],
    "D4": [[1 / _SQ2, -1 / _SQ2, 0, 0], [0, 1 / _SQ2, -1 / _SQ2, 0],
           [0, 0, 1 / _SQ2, -1 / _SQ2], [0, 0, 1 / _SQ2, 1 / _SQ2]],
    "F4": [[0, 1 / _SQ2, -1 / _SQ2, 0], [0, 0, 1 / _SQ2, -1 / _SQ2],
           [0, 0, 0, 1.0], [0.5, -0.5, -0.5, -0.5]],
}

# (rank, [(i, j, m), ...]); plain edges carry m = 3
_DIAGRAM_SEEDS = {
    "H3": (3, [(1, 2, 5), (2, 3, 3)]),
    "H4": (4, [(1, 2, 5), (2, 3, 3), (3, 4, 3)]),
    "E6": (6, [(1, 2, 3), (1, 3, 3), (3, 4, 3), (1, 5, 3), (5, 6, 3)]),
    "E7": (7, [(1, 2, 3), (1, 3, 3), (3, 4, 3), (1, 5, 3), (5, 6, 3), (6, 7, 3)]),
    "E8": (8, [(1, 2, 3), (1, 3, 3), (3, 4, 3), (1, 5, 3), (5, 6, 3), (6, 7, 3), (7, 8, 3)]),
}

_I2_RE = re.compile(r"^I2\((\d+)\)$")


def _seeds_from_diagram(rank: int, edges) -> np.ndarray:
    gram = np.eye(rank)
    for i, j, m in edges:
        gram[i - 1, j - 1] = gram[j - 1, i - 1] = -math.cos(math.pi / m)
    return np.linalg.cholesky(gram)


def catalog_names() -> list[str]:
    return sorted(_EXPLICIT_SEEDS) + sorted(_DIAGRAM_SEEDS) + ["I2(n)"]


def catalog(name: str, eps: float = DEFAULT_EPS, max_roots: int = MAX_ROOTS) -> RootSystem:
    """Build a named root system by closing its standard simple-root seed."""
    if name in _EXPLICIT_SEEDS:
        seeds = np.asarray(_EXPLICIT_SEEDS[name], dtype=np.float64)
    elif name in _DIAGRAM_SEEDS:
        seeds = _seeds_from_diagram(*_DIAGRAM_SEEDS[name])
    else:
        m = _I2_RE.match(name)
        if m:
            n = int(m.group(1))
            if n < 3:
                raise UnknownCatalogName(f"I2(n) needs n >= 3, got {name}")
            seeds = _seeds_from_diagram(2, [(1, 2, n)])
        else:
            raise UnknownCatalogName(
                f"unknown root system {name!r}; known: {', '.join(catalog_names())}")
    return close_roots(seeds, name=name, eps=eps, max_roots=max_roots)


# -- serialization -------------------------------------------------------------


def rootsystem_to_dict(rs: RootSystem, include_roots: bool = True) -> dict:
    out = {}
    if rs.name is not None:
        out["name"] = rs.name
    out["sig"] = [rs.sig.p, rs.sig.q]
    out["simple_roots"] = np.round(rs.simple_coords, 12).tolist()
    if include_roots:
        out["roots"] = np.round(rs.coords, 12).tolist()
        out["cartan"] = np.round(cartan_matrix(rs).entries, 12).tolist()
    return out


def rootsystem_from_dict(d: dict, eps: float = DEFAULT_EPS,
                         max_roots: int = MAX_ROOTS) -> RootSystem:
    sig = Signature(*d["sig"]) if "sig" in d else None
    simple = np.asarray(d["simple_roots"], dtype=np.float64)
    return close_roots(simple, sig, name=d.get("name"), eps=eps, max_roots=max_roots)
