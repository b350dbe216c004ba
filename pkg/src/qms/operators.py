"""Finite truncations of the surface operators and their equation
residuals.

A solved surface enters as a weighted shift (one nonzero diagonal)
plus diagonals; this module builds those matrices, forms the
double-commutator residual sum_i [X_i,[X_i,X_j]], its complexified
(W, Z) version, the holomorphic constraint [Z1d,Z1]+[Z2d,Z2] - eps I,
the self-dual system [X4,Xa] - [Xa+1,Xa+2], and the quartic action
-(2 pi)^2 N Tr sum [Xi,Xj]^2.

Truncation corrupts a known number of edge rows and columns (one per
off-diagonal factor in a product), so every residual is reported as an
interior entry-max with an explicit excluded margin. Spectral norms
(for commutator-size probes) use plain power iteration; entry-max is
the contract norm, the spectral value is diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .exactmath import ContractViolation, InputError
from . import parabola as _parabola
from . import surfaces as _surfaces


class DimensionTooSmall(InputError):
    """Matrix cannot hold the requested diagonal."""


class DimensionMismatch(InputError):
    """Operands have different dimensions."""


class InsufficientRange(InputError):
    """Solution record does not cover the requested window."""


class NotHermitian(ContractViolation):
    """Claimed hermitian but ||A - A^dagger||_max > 1e-12."""


class NotUnitary(ContractViolation):
    """Claimed unitary but ||A^dagger A - I||_max > 1e-12."""


_HERM_TOL = 1e-12


# ---------------------------------------------------------------------
# matrix containers
# ---------------------------------------------------------------------

class ShiftOperator:
    """Single-diagonal matrix: entry (n + shift, n) = w_n.

    weights run along the diagonal, so weights[k] sits at row k + shift,
    column k for shift >= 0 and at row k, column k - shift for
    shift < 0. The adjoint negates the shift and conjugates weights in
    place (same diagonal position).
    """

    __slots__ = ("dim", "shift", "weights")

    def __init__(self, weights: Sequence, dim: int, shift: int):
        if dim < abs(shift) + 1:
            raise DimensionTooSmall(f"dim {dim} < |shift| {abs(shift)} + 1")
        w = np.asarray(weights, dtype=complex)
        if w.ndim != 1 or len(w) != dim - abs(shift):
            raise DimensionTooSmall(
                f"need {dim - abs(shift)} weights for dim {dim}, "
                f"shift {shift}; got {w.shape}"
            )
        if not np.all(np.isfinite(w)):
            raise InputError("nonfinite weight")
        self.dim = dim
        self.shift = shift
        self.weights = w

    def dense(self) -> np.ndarray:
        a = np.zeros((self.dim, self.dim), dtype=complex)
        k = np.arange(self.dim - abs(self.shift))
        if self.shift >= 0:
            a[k + self.shift, k] = self.weights
        else:
            a[k, k - self.shift] = self.weights
        return a

    def adjoint(self) -> "ShiftOperator":
        return ShiftOperator(np.conj(self.weights), self.dim, -self.shift)


class DenseMatrix:
    """Immutable square complex matrix; hermitian/unitary claims are
    checked at construction (entry-max tolerance 1e-12)."""

    __slots__ = ("array",)

    def __init__(self, entries, hermitian: bool = False,
                 unitary: bool = False):
        a = np.array(entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InputError(f"need a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InputError("nonfinite entry")
        if hermitian and np.max(np.abs(a - a.conj().T)) > _HERM_TOL:
            raise NotHermitian(
                f"deviation {np.max(np.abs(a - a.conj().T)):.3g}"
            )
        if unitary:
            d = np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0])))
            if d > _HERM_TOL:
                raise NotUnitary(f"deviation {d:.3g}")
        a.setflags(write=False)
        self.array = a

    @property
    def dim(self) -> int:
        return self.array.shape[0]


MatrixLike = Union[ShiftOperator, DenseMatrix, np.ndarray, Sequence]


def as_array(x: MatrixLike) -> np.ndarray:
    if isinstance(x, ShiftOperator):
        return x.dense()
    if isinstance(x, DenseMatrix):
        return x.array
    a = np.asarray(x, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"need a square matrix, got shape {a.shape}")
    return a


def _hermitian_part_check(a: np.ndarray, label: str) -> np.ndarray:
    dev = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if dev > _HERM_TOL:
        raise NotHermitian(f"{label}: deviation {dev:.3g}")
    return a


def _same_dim(arrays: Sequence[np.ndarray]) -> int:
    dims = {a.shape[0] for a in arrays}
    if len(dims) != 1:
        raise DimensionMismatch(f"dimensions {sorted(dims)}")
    return dims.pop()


# ---------------------------------------------------------------------
# norms and reports
# ---------------------------------------------------------------------

def spectral_norm(x: MatrixLike, iterations: int = 50,
                  tol: float = 1e-12) -> float:
    """Largest singular value by power iteration on A^dagger A.

    Deterministic ramp start; stops on relative stagnation below tol.
    A probe, not a certified bound: slow spectral decay can leave a
    small underestimate after the iteration cap.
    """
    a = as_array(x)
    n = a.shape[0]
    v = 1.0 + np.arange(n) / (2 * n)
    v = v / np.linalg.norm(v)
    lam = 0.0
    for _ in range(iterations):
        w = a.conj().T @ (a @ v)
        nw = np.linalg.norm(w)
        if nw == 0:
            return 0.0
        if abs(nw - lam) <= tol * nw:
            lam = nw
            break
        lam = nw
        v = w / nw
    return float(np.sqrt(lam))


def interior_max(x: MatrixLike, margin: int) -> float:
    """Entry-max over the block with `margin` edge rows and columns
    removed on each side."""
    a = as_array(x)
    n = a.shape[0]
    if margin < 0:
        raise InputError("need margin >= 0")
    if 2 * margin >= n:
        raise InputError(f"margin {margin} leaves no interior at dim {n}")
    b = a[margin:n - margin, margin:n - margin]
    return float(np.max(np.abs(b)))


@dataclass(frozen=True)
class ResidualReport:
    """Residual matrices of one matrix equation, with the entry-max of
    each over the interior (boundary_margin edge rows/cols excluded).
    defect carries an auxiliary commutator norm when the equation has
    one."""

    residuals: Tuple[np.ndarray, ...]
    interior_norms: Tuple[float, ...]
    boundary_margin: int
    defect: Optional[float] = None

    @property
    def interior_norm(self) -> float:
        return max(self.interior_norms)


def _report(residuals: List[np.ndarray], margin: int,
            defect: Optional[float] = None) -> ResidualReport:
    return ResidualReport(
        residuals=tuple(residuals),
        interior_norms=tuple(interior_max(r, margin) for r in residuals),
        boundary_margin=margin,
        defect=defect,
    )


# ---------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------

def shift_matrix(weights: Sequence, dim: int, shift: int) -> ShiftOperator:
    """Place `weights` on the shift-th diagonal of a dim x dim matrix;
    needs exactly dim - |shift| of them."""
    return ShiftOperator(weights, dim, shift)


def commutator(a: MatrixLike, b: MatrixLike) -> np.ndarray:
    aa, bb = as_array(a), as_array(b)
    _same_dim([aa, bb])
    return aa @ bb - bb @ aa


# ---------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------

def ym_residual(xs: Sequence[MatrixLike], margin: int = 2) -> ResidualReport:
    """Residual matrices sum_i [X_i, [X_i, X_j]], one per j.

    All inputs must be hermitian. The double commutator corrupts edge
    rows up to the total off-diagonal reach of the X's; pass that reach
    as margin.
    """
    arrays = [
        _hermitian_part_check(as_array(x), f"X_{j + 1}")
        for j, x in enumerate(xs)
    ]
    if not arrays:
        raise InputError("need at least one matrix")
    _same_dim(arrays)
    res = []
    for xj in arrays:
        acc = np.zeros_like(xj)
        for xi in arrays:
            inner = xi @ xj - xj @ xi
            acc += xi @ inner - inner @ xi
        res.append(acc)
    return _report(res, margin)


def wz_residual(w: MatrixLike, z: MatrixLike,
                margin: int = 2) -> ResidualReport:
    """Residuals of the complexified pair:
    D(W) = 1/2 [W,[Wd,W]] + [Z,[Z,W]] and
    D(Z) = 1/2 [W,[Wd,Z]] + 1/2 [Wd,[W,Z]], in that order.
    Z must be hermitian; W is arbitrary."""
    wa = as_array(w)
    za = _hermitian_part_check(as_array(z), "Z")
    _same_dim([wa, za])
    wd = wa.conj().T

    def c(a, b):
        return a @ b - b @ a

    dw = 0.5 * c(wa, c(wd, wa)) + c(za, c(za, wa))
    dz = 0.5 * c(wa, c(wd, za)) + 0.5 * c(wd, c(wa, za))
    return _report([dw, dz], margin)


def hym_residual(z1: MatrixLike, z2: MatrixLike, eps: float,
                 margin: int = 2) -> ResidualReport:
    """Residual [Z1d,Z1] + [Z2d,Z2] - eps I, plus the commutativity
    defect ||[Z1, Z2]|| (spectral, full matrix — truncation puts an
    O(1) corner in it even for exact solutions)."""
    a1, a2 = as_array(z1), as_array(z2)
    n = _same_dim([a1, a2])
    r = (a1.conj().T @ a1 - a1 @ a1.conj().T
         + a2.conj().T @ a2 - a2 @ a2.conj().T
         - float(eps) * np.eye(n))
    defect = spectral_norm(a1 @ a2 - a2 @ a1)
    return _report([r], margin, defect=defect)


def selfdual_residual(x1: MatrixLike, x2: MatrixLike, x3: MatrixLike,
                      x4: MatrixLike, margin: int = 0) -> ResidualReport:
    """The three residuals [X4, Xa] - [Xa+1, Xa+2] (indices cyclic in
    1..3), all hermitian inputs."""
    arrays = [
        _hermitian_part_check(as_array(x), f"X_{j + 1}")
        for j, x in enumerate((x1, x2, x3, x4))
    ]
    _same_dim(arrays)
    a1, a2, a3, a4 = arrays

    def c(a, b):
        return a @ b - b @ a

    res = [c(a4, a1) - c(a2, a3),
           c(a4, a2) - c(a3, a1),
           c(a4, a3) - c(a1, a2)]
    return _report(res, margin)


def schild_matrix(xs: Sequence[MatrixLike]) -> float:
    """-(2 pi)^2 N Tr sum_{i<j} [X_i, X_j]^2 for hermitian X's.

    Commutators of hermitians are anti-hermitian, so each trace is
    real and nonpositive and the action is >= 0, vanishing exactly on
    commuting families.
    """
    arrays = [
        _hermitian_part_check(as_array(x), f"X_{j + 1}")
        for j, x in enumerate(xs)
    ]
    if not arrays:
        raise InputError("need at least one matrix")
    n = _same_dim(arrays)
    total = 0.0 + 0.0j
    for i in range(len(arrays)):
        for j in range(i + 1, len(arrays)):
            cij = arrays[i] @ arrays[j] - arrays[j] @ arrays[i]
            total += np.trace(cij @ cij)
    return float(-(2 * np.pi) ** 2 * n * total.real)


# ---------------------------------------------------------------------
# surface embeddings
# ---------------------------------------------------------------------

def embed(model: str, solution, dim: int):
    """Truncate a solved surface to a dim x dim matrix tuple.

    model / record / result:
      'catenoid'  CatenoidSolution -> (W lower-shift sqrt(r), Z diag z),
                  window n_min .. n_min + dim - 1
      'enneper'   SigmaSequence    -> (W = Ld - L^3/3, X3 = (L^2+Ld^2)/2)
                  with L the lowering sqrt(sigma) shift
      'hyperbola' HyperbolaParams  -> (Z1 lower sqrt(r_n),
                  Z2 upper |c|/sqrt(r_{n+1})), window n = 0..dim-1
      'parabola'  ParabolaOrbit    -> (Z1 upper sqrt(v_n), Z2 = Z1^2)

    All weights real nonnegative (gauge fixed by the surface solvers).
    """
    if dim < 2:
        raise DimensionTooSmall("need dim >= 2")
    if model == "catenoid":
        if not isinstance(solution, _surfaces.CatenoidSolution):
            raise InputError("catenoid embed needs a CatenoidSolution")
        lo = solution.n_min
        hi = lo + dim - 1
        if solution.n_max < hi:
            raise InsufficientRange(
                f"solution stops at n={solution.n_max}, window needs {hi}"
            )
        w = [float(solution.r[lo + k]) ** 0.5 for k in range(1, dim)]
        z = [float(solution.z[lo + k]) for k in range(dim)]
        return (ShiftOperator(w, dim, -1),
                DenseMatrix(np.diag(np.array(z, dtype=complex)),
                            hermitian=True))
    if model == "enneper":
        if not isinstance(solution, _surfaces.SigmaSequence):
            raise InputError("enneper embed needs a SigmaSequence")
        if len(solution.sigma) < dim:
            raise InsufficientRange(
                f"{len(solution.sigma)} sigma values, window needs {dim}"
            )
        lam = ShiftOperator(
            [solution.sigma[k] ** 0.5 for k in range(1, dim)], dim, -1
        ).dense()
        ld = lam.conj().T
        w = ld - (lam @ lam @ lam) / 3.0
        x3 = (lam @ lam + ld @ ld) / 2.0
        return DenseMatrix(w), DenseMatrix(x3, hermitian=True)
    if model == "hyperbola":
        if not isinstance(solution, _surfaces.HyperbolaParams):
            raise InputError("hyperbola embed needs HyperbolaParams")
        r = [_surfaces.hyperbola_r(solution, n) for n in range(1, dim)]
        z1 = ShiftOperator([t ** 0.5 for t in r], dim, -1)
        z2 = ShiftOperator([solution.c_abs / t ** 0.5 for t in r], dim, +1)
        return z1, z2
    if model == "parabola":
        if not isinstance(solution, _parabola.ParabolaOrbit):
            raise InputError("parabola embed needs a ParabolaOrbit")
        need = dim - 1
        v = solution.v
        if len(v) < need or any(not t > 0 for t in v[:need]):
            raise InsufficientRange(
                f"orbit positive through n={solution.first_failure}, "
                f"window needs v_0..v_{need - 1} > 0"
            )
        w = [float(v[k]) ** 0.5 for k in range(need)]
        z1 = ShiftOperator(w, dim, +1)
        z2 = ShiftOperator([w[k] * w[k + 1] for k in range(dim - 2)],
                           dim, +2)
        return z1, z2
    raise InputError(f"unknown model {model!r}")


def moment(w: ShiftOperator, n: int) -> float:
    """Nested vacuum moment <0| Wd W Wd^2 W^2 ... Wd^n W^n |0>.

    W must be a raising shift (+1). Each factor Wd^m W^m maps |0> to a
    multiple of itself, so dimension n + 1 suffices. Equals the product
    prod_{m<=n} prod_{k<m} |w_k|^2 — the tau_n of the orbit whose
    weights are sqrt(v_k).
    """
    if not isinstance(w, ShiftOperator) or w.shift != +1:
        raise InputError("moment needs a raising (+1) ShiftOperator")
    if n < 0:
        raise InputError("need n >= 0")
    if n == 0:
        return 1.0
    if w.dim < n + 1:
        raise InsufficientRange(f"dim {w.dim} < n + 1 = {n + 1}")
    d = w.dense()
    dd = d.conj().T
    vec = np.zeros(w.dim, dtype=complex)
    vec[0] = 1.0
    for m in range(n, 0, -1):
        for _ in range(m):
            vec = d @ vec
        for _ in range(m):
            vec = dd @ vec
    return float(vec[0].real)
