"""Unitary (torus) and fuzzy-sphere probes of the quantum degree.

The degree of a noncommutative torus shows up in the trace of the
group commutator Psi = P1 P2 P1^-1 P2^-1: for clock/shift matrices
Psi = omega I exactly, so Tr(Psi - I) = N(e^{2 pi i/N} - 1) ->
2 pi i k with k = 1. On the sphere side the same role is played by
Tr(X1 [X2, X3]) -> (2i/3) k on spin-j generators normalized to
X1^2 + X2^2 + X3^2 = I.

Index convention: the shift matrix here has entry ((n-1) mod N, n) = 1
(it lowers the clock index), which fixes the group commutator to
omega^{+1} I and hence degree +1; the transposed choice flips both
signs. The convention string on UnitaryTuple records this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .exactmath import ContractViolation, InputError
from .operators import (
    MatrixLike,
    NotUnitary,
    as_array,
    spectral_norm,
)


class ConstraintViolated(ContractViolation):
    """X1^2 + X2^2 + X3^2 deviates from the identity."""


_UNITARY_TOL = 1e-12

CONVENTION = "shift lowers the clock index: commutator = exp(2 pi i/N) I"


@dataclass(frozen=True)
class UnitaryTuple:
    """A tuple of same-size unitaries; unitarity enforced at 1e-12."""

    matrices: Tuple[np.ndarray, ...]
    convention: str = ""

    def __post_init__(self):
        if not self.matrices:
            raise InputError("need at least one matrix")
        arrays = tuple(as_array(m) for m in self.matrices)
        dims = {a.shape[0] for a in arrays}
        if len(dims) != 1:
            raise InputError(f"mixed dimensions {sorted(dims)}")
        for i, a in enumerate(arrays):
            dev = np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0])))
            if dev > _UNITARY_TOL:
                raise NotUnitary(f"matrix {i}: deviation {dev:.3g}")
        object.__setattr__(self, "matrices", arrays)

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]


@dataclass(frozen=True)
class DegreeReport:
    """Degree readout: the trace, the integer it rounds to, and the
    commutator size entering the smallness hypothesis (spectral, with
    Frobenius alongside for diagnostics)."""

    trace_value: complex
    k_estimate: int
    defect: float
    dim: int
    defect_frobenius: float = 0.0

    @property
    def degree_bound_satisfied(self) -> bool:
        # |k| < c / 2 pi with c = defect * N; asymptotic, so small-N
        # clock/shift sits right at the edge and can flag False
        return abs(self.k_estimate) < self.defect * self.dim / (2 * np.pi)


# ---------------------------------------------------------------------
# torus side
# ---------------------------------------------------------------------

def clock_shift(n: int) -> UnitaryTuple:
    """The N-dimensional shift and clock pair, exactly unitary.

    shift: entry ((m-1) mod N, m) = 1; clock: diag(1, w, ..., w^{N-1})
    with w = exp(2 pi i/N). Their group commutator is w I.
    """
    if n < 2:
        raise InputError("need N >= 2")
    shift = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    shift[(cols - 1) % n, cols] = 1.0
    clock = np.diag(np.exp(2j * np.pi * cols / n))
    return UnitaryTuple(matrices=(shift, clock), convention=CONVENTION)


def _unitaries(phis) -> Tuple[np.ndarray, ...]:
    if isinstance(phis, UnitaryTuple):
        return phis.matrices
    return UnitaryTuple(matrices=tuple(phis)).matrices


def unitary_schild(phis) -> float:
    """N sum_{i<j} Tr(2 I - Pi Pj Pi^-1 Pj^-1 - Pj Pi Pj^-1 Pi^-1).

    The two group commutators are mutual inverses, so the trace is real
    up to rounding; the imaginary remainder is asserted below 1e-12
    and dropped.
    """
    ms = _unitaries(phis)
    n = ms[0].shape[0]
    total = 0.0 + 0.0j
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            a, b = ms[i], ms[j]
            ad, bd = a.conj().T, b.conj().T
            total += np.trace(2 * np.eye(n) - a @ b @ ad @ bd
                              - b @ a @ bd @ ad)
    value = n * total
    if abs(value.imag) > 1e-12 * (1 + abs(value.real)):
        raise ContractViolation(f"non-real action {value}")
    return float(value.real)


def torus_eom_residual(phis) -> Tuple[List[np.ndarray], List[float]]:
    """Stationarity of the unitary action at each P_i: the sum over j
    of P_i P_j P_i^-1 P_j^-1 - P_j^-1 P_i P_j P_i^-1
    + P_i P_j^-1 P_i^-1 P_j - P_j P_i P_j^-1 P_i^-1.

    Returns (residual matrices, their entry-max norms). Zero for any
    pair whose group commutator is a scalar (the four terms cancel as
    w - w + wbar - wbar), so clock/shift is an exact critical point.
    """
    ms = _unitaries(phis)
    res = []
    for i, a in enumerate(ms):
        ad = a.conj().T
        acc = np.zeros_like(a)
        for j, b in enumerate(ms):
            if i == j:
                continue
            bd = b.conj().T
            acc += (a @ b @ ad @ bd - bd @ a @ b @ ad
                    + a @ bd @ ad @ b - b @ a @ bd @ ad)
        res.append(acc)
    norms = [float(np.max(np.abs(r))) for r in res]
    return res, norms


def torus_degree(p1: MatrixLike, p2: MatrixLike) -> DegreeReport:
    """Tr(P1 P2 P1^-1 P2^-1 - I) and the integer Im/2 pi rounds to.

    Only the imaginary part carries the degree: the real part is a
    genuine -2 pi^2 k^2/N finite-size term, so naive rounding of the
    full complex value misestimates at small N.
    """
    a, b = _unitaries((p1, p2))
    n = a.shape[0]
    psi = a @ b @ a.conj().T @ b.conj().T
    trace = complex(np.trace(psi - np.eye(n)))
    k = int(round(trace.imag / (2 * np.pi)))
    c = a @ b - b @ a
    return DegreeReport(
        trace_value=trace,
        k_estimate=k,
        defect=spectral_norm(c),
        dim=n,
        defect_frobenius=float(np.linalg.norm(c)),
    )


# ---------------------------------------------------------------------
# sphere side
# ---------------------------------------------------------------------

def fuzzy_sphere(n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spin-j generators at N = 2j + 1, normalized so that
    X1^2 + X2^2 + X3^2 = I exactly (Casimir j(j+1))."""
    if n < 2:
        raise InputError("need N >= 2")
    j = (n - 1) / 2
    m = j - np.arange(n)  # basis ordered m = j, j-1, ..., -j
    jp = np.zeros((n, n), dtype=complex)
    rows = np.arange(1, n)
    jp[rows - 1, rows] = np.sqrt(j * (j + 1) - m[rows] * (m[rows] + 1))
    jm = jp.conj().T
    scale = 1.0 / np.sqrt(j * (j + 1))
    x1 = scale * (jp + jm) / 2
    x2 = scale * (jp - jm) / 2.0j
    x3 = scale * np.diag(m.astype(complex))
    return x1, x2, x3


def sphere_degree(x1: MatrixLike, x2: MatrixLike,
                  x3: MatrixLike) -> DegreeReport:
    """Tr(X1 [X2, X3]) and the integer (3/2) Im rounds to, on triples
    constrained to X1^2 + X2^2 + X3^2 = I (checked at 1e-10)."""
    a1, a2, a3 = (as_array(x) for x in (x1, x2, x3))
    n = a1.shape[0]
    if a2.shape[0] != n or a3.shape[0] != n:
        raise InputError("mixed dimensions")
    dev = np.max(np.abs(a1 @ a1 + a2 @ a2 + a3 @ a3 - np.eye(n)))
    if dev > 1e-10:
        raise ConstraintViolated(f"sum X_i^2 - I deviation {dev:.3g}")
    trace = complex(np.trace(a1 @ (a2 @ a3 - a3 @ a2)))
    k = int(round(trace.imag * 1.5))
    pairs = [(a1, a2), (a1, a3), (a2, a3)]
    defects = [a @ b - b @ a for a, b in pairs]
    return DegreeReport(
        trace_value=trace,
        k_estimate=k,
        defect=max(spectral_norm(c) for c in defects),
        dim=n,
        defect_frobenius=max(float(np.linalg.norm(c)) for c in defects),
    )


def commutator_defect(ms: Sequence[MatrixLike]) -> float:
    """Max over pairs of the spectral norm of [M_i, M_j]."""
    arrays = [as_array(m) for m in ms]
    if len(arrays) < 2:
        raise InputError("need at least two matrices")
    dims = {a.shape[0] for a in arrays}
    if len(dims) != 1:
        raise InputError(f"mixed dimensions {sorted(dims)}")
    best = 0.0
    for i in range(len(arrays)):
        for j in range(i + 1, len(arrays)):
            c = arrays[i] @ arrays[j] - arrays[j] @ arrays[i]
            best = max(best, spectral_norm(c))
    return best
