"""Finite-dimensional C*-algebras on the matrix backend.

pants_algebra(n) is the endomorphism algebra of an n-dimensional space,
carried on C^(n*n) with basis e_{ij} at index i*n+j; basis_algebra(n) is the
commutative copy-multiplication algebra of the standard basis; direct_sum
glues pants blocks along a block-dimension list, which covers every
finite-dimensional C*-algebra up to iso.

Matrix elements rho travel to points p_rho by row-major flattening
(point_from_matrix / matrix_from_point); the correspondence sends matrix
product to point multiplication and adjoint to point conjugation, so the
abstract projection test agrees with "idempotent and self-adjoint" on
matrices. subspace_meet / subspace_join are the L(H) lattice operations on
projection matrices, by rank-revealing SVD with a scaled cutoff.
"""
from __future__ import annotations

import math

import numpy as np

from .backend import (
    DEFAULT_TOL,
    FHILB,
    Tolerance,
    fhilb_morphism,
    fhilb_object,
    tensor_objects,
    unit_object,
)
from .errors import BackendMismatch
from .frobenius import FrobeniusAlgebra, Point


def pants_algebra(n: int) -> FrobeniusAlgebra:
    """The matrix algebra M_n as a symmetric dagger Frobenius algebra."""
    if n < 1:
        raise ValueError("pants algebra needs dimension >= 1")
    d = n * n
    carrier = fhilb_object(d)
    mult = np.zeros((d, d * d), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mult[i * n + l, (i * n + j) * d + (j * n + l)] = 1.0
    unit = np.zeros((d, 1), dtype=np.complex128)
    for i in range(n):
        unit[i * n + i, 0] = 1.0
    pair = tensor_objects(carrier, carrier)
    return FrobeniusAlgebra(
        carrier,
        fhilb_morphism(pair, carrier, mult),
        fhilb_morphism(unit_object(FHILB), carrier, unit),
    )


def basis_algebra(n: int) -> FrobeniusAlgebra:
    """Copy multiplication of the standard basis of C^n; commutative."""
    if n < 1:
        raise ValueError("basis algebra needs dimension >= 1")
    carrier = fhilb_object(n)
    mult = np.zeros((n, n * n), dtype=np.complex128)
    for i in range(n):
        mult[i, i * n + i] = 1.0
    unit = np.ones((n, 1), dtype=np.complex128)
    pair = tensor_objects(carrier, carrier)
    return FrobeniusAlgebra(
        carrier,
        fhilb_morphism(pair, carrier, mult),
        fhilb_morphism(unit_object(FHILB), carrier, unit),
    )


def direct_sum(blocks: list[int]) -> FrobeniusAlgebra:
    """Block-diagonal sum of pants algebras, carrier ordered by block."""
    if not blocks:
        raise ValueError("direct sum needs at least one block")
    if any(b < 1 for b in blocks):
        raise ValueError("block dimensions must be >= 1")
    total = sum(b * b for b in blocks)
    carrier = fhilb_object(total)
    mult = np.zeros((total, total * total), dtype=np.complex128)
    unit = np.zeros((total, 1), dtype=np.complex128)
    off = 0
    for b in blocks:
        for i in range(b):
            unit[off + i * b + i, 0] = 1.0
            for j in range(b):
                for l in range(b):
                    row = off + i * b + l
                    col = (off + i * b + j) * total + (off + j * b + l)
                    mult[row, col] = 1.0
        off += b * b
    pair = tensor_objects(carrier, carrier)
    return FrobeniusAlgebra(
        carrier,
        fhilb_morphism(pair, carrier, mult),
        fhilb_morphism(unit_object(FHILB), carrier, unit),
    )


# -- the rho <-> p_rho correspondence ---------------------------------------


def _square_side(size: int) -> int:
    n = math.isqrt(size)
    if n * n != size:
        raise ValueError(f"carrier size {size} is not a square")
    return n


def vector_point(alg: FrobeniusAlgebra, vec, name: str | None = None) -> Point:
    """Any complex vector of carrier length as a point."""
    if alg.backend != FHILB:
        raise BackendMismatch("vector points live on the matrix backend")
    arr = np.asarray(vec, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != alg.carrier.size:
        raise ValueError(
            f"vector length {arr.shape[0]} != carrier size {alg.carrier.size}"
        )
    return Point(
        alg,
        fhilb_morphism(unit_object(FHILB), alg.carrier, arr.reshape(-1, 1)),
        name,
    )


def point_from_matrix(alg: FrobeniusAlgebra, rho, name: str | None = None) -> Point:
    """Row-major flattening of an n x n matrix into a pants-carrier point."""
    mat = np.asarray(rho, dtype=np.complex128)
    n = _square_side(alg.carrier.size)
    if mat.shape != (n, n):
        raise ValueError(f"matrix shape {mat.shape} does not match side {n}")
    return vector_point(alg, mat.reshape(-1), name)


def matrix_from_point(p: Point) -> np.ndarray:
    """Inverse of point_from_matrix."""
    n = _square_side(p.algebra.carrier.size)
    return p.morphism.payload.reshape(n, n).copy()


def zero_one_points(alg: FrobeniusAlgebra) -> list[Point]:
    """All 2^n points of a basis algebra with 0/1 coordinates, bitmask order."""
    n = alg.carrier.size
    out = []
    for mask in range(1 << n):
        vec = np.array([(mask >> i) & 1 for i in range(n)], dtype=np.complex128)
        out.append(vector_point(alg, vec, f"b{mask:0{n}b}"))
    return out


# -- projection matrices and the L(H) lattice -------------------------------


def _close(a: np.ndarray, b: np.ndarray, tol: Tolerance) -> bool:
    scale = max(1.0, float(np.abs(a).max()), float(np.abs(b).max()))
    return float(np.abs(a - b).max()) <= tol.epsilon * scale


def is_matrix_projection(mat, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Idempotent and self-adjoint, directly on the matrix."""
    m = np.asarray(mat, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return _close(m @ m, m, tol) and _close(m.conj().T, m, tol)


def _require_projections(p: np.ndarray, q: np.ndarray, tol: Tolerance):
    if p.shape != q.shape:
        raise ValueError(f"shape mismatch {p.shape} vs {q.shape}")
    for name, m in (("left", p), ("right", q)):
        if not is_matrix_projection(m, tol):
            raise ValueError(f"{name} argument fails the projection test")


def _rank_cutoff(s: np.ndarray, n: int, tol: Tolerance) -> float:
    top = float(s[0]) if s.size else 0.0
    return tol.epsilon * math.sqrt(n) * top


def subspace_meet(p, q, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Projection onto im(p) & im(q), via the joint kernel of I-p and I-q."""
    pm = np.asarray(p, dtype=np.complex128)
    qm = np.asarray(q, dtype=np.complex128)
    _require_projections(pm, qm, tol)
    n = pm.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    stacked = np.vstack([eye - pm, eye - qm])
    _, s, vh = np.linalg.svd(stacked, full_matrices=False)
    rank = int(np.sum(s > _rank_cutoff(s, n, tol)))
    basis = vh[rank:].conj().T
    return basis @ basis.conj().T


def subspace_join(p, q, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Projection onto im(p) + im(q), via the column span of [p q]."""
    pm = np.asarray(p, dtype=np.complex128)
    qm = np.asarray(q, dtype=np.complex128)
    _require_projections(pm, qm, tol)
    n = pm.shape[0]
    u, s, _ = np.linalg.svd(np.hstack([pm, qm]), full_matrices=False)
    rank = int(np.sum(s > _rank_cutoff(s, n, tol)))
    basis = u[:, :rank]
    return basis @ basis.conj().T


def random_projection(n: int, rank: int, seed: int) -> np.ndarray:
    """Seed-deterministic rank-r orthogonal projection on C^n."""
    if not 0 <= rank <= n:
        raise ValueError(f"rank {rank} out of range for dimension {n}")
    if rank == 0:
        return np.zeros((n, n), dtype=np.complex128)
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    qmat, _ = np.linalg.qr(a)
    proj = qmat @ qmat.conj().T
    return (proj + proj.conj().T) / 2.0
