"""Dense multivector arithmetic for real Clifford algebras Cl(p, q) with p + q <= 8.

Basis blades are indexed by bitmask: bit i set means the generator e_{i+1}
is a factor of the blade, with factors stored in ascending index order.
Generator e_{i+1} squares to +1 for i < p and to -1 otherwise.  A
multivector is a dense float64 coefficient vector over all 2**(p+q) blades.

Two tolerances matter throughout the package:

* ``DEFAULT_EPS`` (1e-9): absolute tolerance for every floating comparison.
* ``HASH_GRID`` (1e-6): coefficients are snapped to this grid to build the
  canonical integer key used for hashing and set membership.  Quantities in
  this package (coordinates built from halves, 1/sqrt(2), the golden ratio,
  ...) sit far from grid cell boundaries, which keeps the keys stable.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import NotAVersor, SignatureMismatch

DEFAULT_EPS = 1e-9
HASH_GRID = 1e-6
MAX_DIM = 8

__all__ = [
    "DEFAULT_EPS",
    "HASH_GRID",
    "MAX_DIM",
    "Signature",
    "Multivector",
    "Versor",
    "basis",
    "blade",
    "blade_name",
    "exp_bivector",
    "geometric_product",
    "grade_project",
    "mv_from_json",
    "reflect",
    "reverse",
    "sandwich",
    "scalar_mv",
    "vector",
]


class Signature:
    """Metric signature (p, q): p generators square to +1, q to -1."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int = 0):
        if p < 0 or q < 0 or p + q < 1 or p + q > MAX_DIM:
            raise ValueError(f"signature ({p},{q}) out of range, need 1 <= p+q <= {MAX_DIM}")
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "q", int(q))

    def __setattr__(self, *a):
        raise AttributeError("Signature is immutable")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def blade_count(self) -> int:
        return 1 << self.dim

    def __eq__(self, other):
        return isinstance(other, Signature) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"Signature({self.p},{self.q})"

    def __iter__(self):
        return iter((self.p, self.q))


def _reorder_sign(a: int, b: int) -> int:
    # Transpositions needed to merge two ascending blades into ascending order.
    a >>= 1
    total = 0
    while a:
        total += bin(a & b).count("1")
        a >>= 1
    return -1 if total & 1 else 1


class _Kernel:
    """Per-signature product tables, shared by all multivectors of that signature."""

    def __init__(self, p: int, q: int):
        self.p, self.q = p, q
        n = p + q
        self.n = n
        D = 1 << n
        self.D = D
        self.metric = np.array([1] * p + [-1] * q, dtype=np.int64)
        self.grades = np.array([bin(m).count("1") for m in range(D)], dtype=np.int64)
        # reverse flips blade factor order: sign (-1)^(k(k-1)/2) per grade k
        self.rev_sign = np.where((self.grades * (self.grades - 1) // 2) % 2, -1.0, 1.0)
        sign = np.empty((D, D), dtype=np.float64)
        xor = np.empty((D, D), dtype=np.int64)
        for a in range(D):
            for b in range(D):
                s = _reorder_sign(a, b)
                common = a & b
                i = 0
                while common:
                    if common & 1:
                        s *= int(self.metric[i])
                    common >>= 1
                    i += 1
                sign[a, b] = s
                xor[a, b] = a ^ b
        self.sign = sign
        self.xor = xor
        self.xor_flat = xor.ravel()
        # dense structure tensor for batched einsum products in small algebras
        if D <= 16:
            cayley = np.zeros((D, D, D))
            for a in range(D):
                for b in range(D):
                    cayley[a, b, a ^ b] = sign[a, b]
            self.cayley = cayley
        else:
            self.cayley = None

    def gp(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = np.multiply.outer(a, b) * self.sign
        return np.bincount(self.xor_flat, weights=prod.ravel(), minlength=self.D)

    def gp_elemwise(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Broadcasting batched product over leading axes of (..., D) arrays."""
        if self.cayley is not None:
            return np.einsum("...i,...j,ijk->...k", A, B, self.cayley)
        A, B = np.broadcast_arrays(A, B)
        flat_a = A.reshape(-1, self.D)
        flat_b = B.reshape(-1, self.D)
        out = np.empty_like(flat_a)
        for i in range(flat_a.shape[0]):
            out[i] = self.gp(flat_a[i], flat_b[i])
        return out.reshape(A.shape)

    def gp_pairs(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """All pairwise products: (M, D) x (N, D) -> (M, N, D)."""
        if self.cayley is not None:
            return np.einsum("mi,nj,ijk->mnk", A, B, self.cayley)
        M, N = A.shape[0], B.shape[0]
        out = np.empty((M, N, self.D))
        for i in range(M):
            for j in range(N):
                out[i, j] = self.gp(A[i], B[j])
        return out

    def rev(self, A: np.ndarray) -> np.ndarray:
        return A * self.rev_sign

    def grade_mask(self, k: int) -> np.ndarray:
        return self.grades == k


@lru_cache(maxsize=None)
def _kernel(p: int, q: int) -> _Kernel:
    return _Kernel(p, q)


def kernel_for(sig: Signature) -> _Kernel:
    return _kernel(sig.p, sig.q)


def quantize(arr: np.ndarray) -> np.ndarray:
    """Snap float coefficients to the canonical integer grid."""
    return np.round(np.round(arr, 12) / HASH_GRID).astype(np.int64)


def qkey(arr: np.ndarray) -> bytes:
    return quantize(arr).tobytes()


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(MAX_DIM) if mask >> i & 1)


def _blade_mask(name: str, n: int) -> int:
    if name == "1":
        return 0
    if not name.startswith("e") or len(name) < 2:
        raise ValueError(f"bad blade name {name!r}")
    mask = 0
    prev = 0
    for ch in name[1:]:
        i = int(ch)
        if i < 1 or i > n or i <= prev:
            raise ValueError(f"bad blade name {name!r} for dimension {n}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


class Multivector:
    """Immutable multivector over a fixed signature.

    Supports +, -, scalar and geometric multiplication (*), ~ for reversal.
    Equality compares coefficients within DEFAULT_EPS; hashing uses the
    HASH_GRID quantized key, so use quantized keys (not ==) for dedup sets.
    """

    __slots__ = ("sig", "coeffs", "_key")

    def __init__(self, sig: Signature, coeffs):
        k = kernel_for(sig)
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.shape != (k.D,):
            raise ValueError(f"expected {k.D} coefficients for Cl{(sig.p, sig.q)}, got {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, *a):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def _wrap(cls, sig: Signature, arr: np.ndarray) -> "Multivector":
        self = object.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.float64)
        arr.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "_key", None)
        return self

    # -- arithmetic ---------------------------------------------------------

    def _check_sig(self, other: "Multivector"):
        if self.sig != other.sig:
            raise SignatureMismatch(f"cannot combine Cl{tuple(self.sig)} with Cl{tuple(other.sig)}")

    def __add__(self, other):
        if isinstance(other, (int, float)):
            arr = self.coeffs.copy()
            arr[0] += other
            return Multivector._wrap(self.sig, arr)
        self._check_sig(other)
        return Multivector._wrap(self.sig, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            return self + (-other)
        self._check_sig(other)
        return Multivector._wrap(self.sig, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector._wrap(self.sig, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector._wrap(self.sig, self.coeffs * other)
        if isinstance(other, Versor):
            other = other.mv
        self._check_sig(other)
        k = kernel_for(self.sig)
        return Multivector._wrap(self.sig, k.gp(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector._wrap(self.sig, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Multivector._wrap(self.sig, self.coeffs / other)
        return NotImplemented

    def __invert__(self):
        return self.reverse()

    def reverse(self) -> "Multivector":
        k = kernel_for(self.sig)
        return Multivector._wrap(self.sig, k.rev(self.coeffs))

    def grade(self, k_: int) -> "Multivector":
        k = kernel_for(self.sig)
        return Multivector._wrap(self.sig, np.where(k.grade_mask(k_), self.coeffs, 0.0))

    def grades_present(self, eps: float = DEFAULT_EPS):
        k = kernel_for(self.sig)
        out = set()
        for g in range(k.n + 1):
            if np.max(np.abs(self.coeffs[k.grade_mask(g)]), initial=0.0) > eps:
                out.add(g)
        return out

    def is_grade(self, k_: int, eps: float = DEFAULT_EPS) -> bool:
        k = kernel_for(self.sig)
        rest = self.coeffs[~k.grade_mask(k_)]
        return np.max(np.abs(rest), initial=0.0) <= eps

    # -- views --------------------------------------------------------------

    @property
    def scalar(self) -> float:
        return float(self.coeffs[0])

    def vector_coords(self) -> np.ndarray:
        """Grade-1 coordinates (length p+q)."""
        k = kernel_for(self.sig)
        return self.coeffs[[1 << i for i in range(k.n)]].copy()

    def coeff(self, name: str) -> float:
        mask = _blade_mask(name, self.sig.dim)
        return float(self.coeffs[mask])

    def key(self) -> bytes:
        if self._key is None:
            object.__setattr__(self, "_key", qkey(self.coeffs))
        return self._key

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.sig != other.sig:
            return False
        return float(np.max(np.abs(self.coeffs - other.coeffs))) <= DEFAULT_EPS

    def __hash__(self):
        return hash((self.sig, self.key()))

    def close_to(self, other: "Multivector", eps: float = DEFAULT_EPS) -> bool:
        return self.sig == other.sig and float(np.max(np.abs(self.coeffs - other.coeffs))) <= eps

    # -- formatting / serialization ------------------------------------------

    def __str__(self):
        terms = []
        for mask in range(self.coeffs.shape[0]):
            c = self.coeffs[mask]
            if abs(c) <= DEFAULT_EPS:
                continue
            name = blade_name(mask)
            mag = f"{abs(c):.6g}"
            body = mag if mask == 0 else (name if mag == "1" else f"{mag}{name}")
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<Cl{tuple(self.sig)}: {self}>"

    def to_json_dict(self, eps: float = DEFAULT_EPS) -> dict:
        coeffs = {}
        for mask in range(self.coeffs.shape[0]):
            c = float(self.coeffs[mask])
            if abs(c) >= eps:
                coeffs[blade_name(mask)] = c
        return {"sig": [self.sig.p, self.sig.q], "coeffs": coeffs}


def mv_from_json(d: dict) -> Multivector:
    sig = Signature(*d["sig"])
    arr = np.zeros(sig.blade_count)
    for name, c in d["coeffs"].items():
        arr[_blade_mask(name, sig.dim)] = float(c)
    return Multivector(sig, arr)


# -- constructors -------------------------------------------------------------


def scalar_mv(sig: Signature, value: float) -> Multivector:
    arr = np.zeros(sig.blade_count)
    arr[0] = value
    return Multivector._wrap(sig, arr)


def vector(sig: Signature, coords) -> Multivector:
    coords = np.asarray(coords, dtype=np.float64)
    if coords.shape != (sig.dim,):
        raise ValueError(f"expected {sig.dim} coordinates, got {coords.shape}")
    arr = np.zeros(sig.blade_count)
    for i, c in enumerate(coords):
        arr[1 << i] = c
    return Multivector._wrap(sig, arr)


def basis(sig: Signature) -> list[Multivector]:
    """Grade-1 basis vectors [e1, ..., en]."""
    out = []
    for i in range(sig.dim):
        arr = np.zeros(sig.blade_count)
        arr[1 << i] = 1.0
        out.append(Multivector._wrap(sig, arr))
    return out


def blade(sig: Signature, spec) -> Multivector:
    """Unit basis blade from a name like "e13" or a bitmask."""
    mask = spec if isinstance(spec, int) else _blade_mask(spec, sig.dim)
    if not 0 <= mask < sig.blade_count:
        raise ValueError(f"blade mask {mask} out of range")
    arr = np.zeros(sig.blade_count)
    arr[mask] = 1.0
    return Multivector._wrap(sig, arr)


# -- free-function forms of the core operations ----------------------------------


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def reverse(a: Multivector) -> Multivector:
    return a.reverse()


def grade_project(a: Multivector, k: int) -> Multivector:
    if k < 0 or k > a.sig.dim:
        raise ValueError(f"grade {k} out of range for Cl{tuple(a.sig)}")
    return a.grade(k)


class Versor(object):
    """A multivector that is (numerically) a product of unit vectors.

    Validated on construction: support purely even or purely odd, and
    mv * ~mv equal to +1 or -1 within tolerance.  The sign is kept in
    ``norm_sign`` (it can be -1 in mixed signatures such as Cl(3,1)).
    """

    __slots__ = ("mv", "parity", "norm_sign")

    def __init__(self, mv: Multivector, eps: float = DEFAULT_EPS):
        k = kernel_for(mv.sig)
        even = np.max(np.abs(mv.coeffs[k.grades % 2 == 1]), initial=0.0)
        odd = np.max(np.abs(mv.coeffs[k.grades % 2 == 0]), initial=0.0)
        if even > eps and odd > eps:
            raise NotAVersor("mixed even/odd support")
        parity = 0 if even <= eps else 1
        norm = k.gp(mv.coeffs, k.rev(mv.coeffs))
        s = norm[0]
        if abs(abs(s) - 1.0) > max(eps, 1e-9) or np.max(np.abs(norm[1:])) > max(eps, 1e-9):
            raise NotAVersor(f"mv * ~mv = {Multivector._wrap(mv.sig, norm)} is not a unit scalar")
        object.__setattr__(self, "mv", mv)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "norm_sign", 1 if s > 0 else -1)

    def __setattr__(self, *a):
        raise AttributeError("Versor is immutable")

    @classmethod
    def from_vectors(cls, vectors: list[Multivector], eps: float = DEFAULT_EPS) -> "Versor":
        if not vectors:
            raise ValueError("need at least one vector")
        acc = vectors[0]
        for v in vectors[1:]:
            acc = acc * v
        return cls(acc, eps)

    @property
    def sig(self) -> Signature:
        return self.mv.sig

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def __mul__(self, other):
        if isinstance(other, Versor):
            return Versor(self.mv * other.mv)
        return self.mv * other

    def reverse(self) -> "Versor":
        return Versor(self.mv.reverse())

    def inverse(self) -> "Versor":
        return Versor(self.mv.reverse() * self.norm_sign)

    def __eq__(self, other):
        if isinstance(other, Versor):
            return self.mv == other.mv
        return NotImplemented

    def __hash__(self):
        return hash(self.mv)

    def __repr__(self):
        return f"<Versor {self.mv}>"

    def apply(self, v: Multivector, eps: float = DEFAULT_EPS) -> Multivector:
        return sandwich(v, self, eps)


def _as_versor(A, eps: float = DEFAULT_EPS) -> Versor:
    return A if isinstance(A, Versor) else Versor(A, eps)


def sandwich(v: Multivector, A, eps: float = DEFAULT_EPS) -> Multivector:
    """Orthogonal action of a unit versor on a vector.

    Returns ~A v A for even A and -~A v A for odd A; the extra sign for odd
    versors makes a single unit vector act as the reflection that fixes its
    orthogonal hyperplane.
    """
    A = _as_versor(A, eps)
    if v.sig != A.sig:
        raise SignatureMismatch("vector and versor signatures differ")
    if not v.is_grade(1, eps):
        raise ValueError("sandwich expects a grade-1 argument")
    k = kernel_for(v.sig)
    out = k.gp(k.gp(k.rev(A.mv.coeffs), v.coeffs), A.mv.coeffs)
    if A.parity == 1:
        out = -out
    out = np.where(k.grade_mask(1), out, 0.0)
    return Multivector._wrap(v.sig, out)


def reflect(v: Multivector, alpha: Multivector, eps: float = DEFAULT_EPS) -> Multivector:
    """Reflection of v in the hyperplane orthogonal to the unit vector alpha."""
    if v.sig != alpha.sig:
        raise SignatureMismatch("vector and mirror signatures differ")
    if not v.is_grade(1, eps) or not alpha.is_grade(1, eps):
        raise ValueError("reflect expects grade-1 arguments")
    k = kernel_for(v.sig)
    n2 = k.gp(alpha.coeffs, alpha.coeffs)[0]
    if abs(abs(n2) - 1.0) > eps:
        raise ValueError(f"mirror vector must be unit, got alpha^2 = {n2}")
    out = -k.gp(k.gp(alpha.coeffs, v.coeffs), alpha.coeffs)
    out = np.where(k.grade_mask(1), out, 0.0)
    return Multivector._wrap(v.sig, out)


def exp_bivector(B: Multivector, theta: float, eps: float = DEFAULT_EPS) -> Versor:
    """exp(B * theta) = cos(theta) + B sin(theta) for a unit bivector B (B^2 = -1)."""
    if not B.is_grade(2, eps):
        raise ValueError("exp_bivector expects a grade-2 argument")
    k = kernel_for(B.sig)
    sq = k.gp(B.coeffs, B.coeffs)
    if abs(sq[0] + 1.0) > eps or np.max(np.abs(sq[1:])) > eps:
        raise ValueError(f"bivector must square to -1, got B^2 = {Multivector._wrap(B.sig, sq)}")
    arr = B.coeffs * math.sin(theta)
    arr = arr.copy()
    arr[0] += math.cos(theta)
    return Versor(Multivector._wrap(B.sig, arr), eps)
