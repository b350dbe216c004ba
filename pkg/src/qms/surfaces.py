"""Rotationally symmetric quantized surfaces: catenoid, Enneper,
helicoid, complex hyperbola.

Each surface is carried by a weighted shift ansatz, so its defining
operator equation collapses to a scalar recursion or functional
equation in the weights:

  catenoid   r_{n+1} - 2 r_n + r_{n-1} = 2 c^2 / r_n^2,  z_n = z_{n-1} + c/r_n
  Enneper    (sigma_{n+1} - sigma_n) (2 + sigma_n + sigma_{n+1})^2 = 8 hbar
  helicoid   w(x) (2 w(x)^2 - w(x-h)^2 - w(x+h)^2) = 2 h^2 w''(x)
  hyperbola  r_n - r_{n+1} + |c|^2/r_{n+1} - |c|^2/r_n = eps  (closed form)

The catenoid recursion supports exact rational iteration; the closed
forms go through cosh/sqrt and are floating only.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .exactmath import (
    ContractViolation,
    InputError,
    find_root_bisect,
    rational,
)


class HypothesisViolated(InputError):
    """Initial data outside 0 < r0 <= r1 <= r0 + 2c^2/r0^2."""


class DegenerateConstant(InputError):
    """c = 0 collapses the catenoid recursion to an affine sequence."""


class ConstantSolution(InputError):
    """All r_n equal; classification is undefined."""


class DomainError(InputError):
    """Closed-form argument outside its real domain."""


class NonPositive(ContractViolation):
    """A weight that must be a squared modulus came out <= 0."""


# ---------------------------------------------------------------------
# catenoid
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CatenoidSolution:
    """Double-ended solution (r_n, z_n), n in [n_min, n_max]."""

    c: object
    z0: object
    r: Dict[int, object]
    z: Dict[int, object]
    n_min: int
    n_max: int

    def residual(self, n: int):
        """(shape, flux) residuals of the two defining equations at n.

        shape: 2 (z_n - z_{n-1})^2 - (r_{n+1} + r_{n-1} - 2 r_n),
               needs n-1..n+1 stored;
        flux:  r_n (z_n - z_{n-1}) - c, needs n-1..n stored.
        Both vanish identically on recursion-built solutions.
        """
        if not (self.n_min < n < self.n_max):
            raise InputError(f"n={n} has no full stencil in "
                             f"[{self.n_min}, {self.n_max}]")
        dz = self.z[n] - self.z[n - 1]
        shape = 2 * dz * dz - (self.r[n + 1] + self.r[n - 1] - 2 * self.r[n])
        flux = self.r[n] * dz - self.c
        return shape, flux


@dataclass(frozen=True)
class Classification:
    n0: int
    delta: object
    c: object
    monotone_up_from: int
    monotone_down_to: int


def catenoid_build(c, r0, r1, z0, n_min: int, n_max: int,
                   exact: bool = False) -> CatenoidSolution:
    """Extend (r0, r1, z0) to a positive solution on [n_min, n_max].

    Requires 0 < r0 <= r1 <= r0 + 2c^2/r0^2 and c != 0; under that
    hypothesis the forward/backward iterations stay positive and
    monotone away from the minimum. With exact=True all inputs must be
    rational and the iteration runs in Fraction arithmetic (beware:
    denominators triple in bit size per step, so deep exact ranges are
    infeasible in principle, not just slow).
    """
    if exact:
        c, r0, r1, z0 = (rational(v) for v in (c, r0, r1, z0))
    else:
        c, r0, r1, z0 = float(c), float(r0), float(r1), float(z0)
    if c == 0:
        raise DegenerateConstant("catenoid requires c != 0")
    if not (n_min <= 0 and n_max >= 1):
        raise InputError(f"need n_min <= 0 <= 1 <= n_max, "
                         f"got [{n_min}, {n_max}]")
    if not (0 < r0 <= r1 and r1 <= r0 + 2 * c * c / (r0 * r0)):
        raise HypothesisViolated(
            f"need 0 < r0 <= r1 <= r0 + 2c^2/r0^2, got r0={r0}, r1={r1}"
        )
    r = {0: r0, 1: r1}
    for n in range(2, n_max + 1):
        rp = r[n - 1]
        r[n] = 2 * rp - r[n - 2] + 2 * c * c / (rp * rp)
    for n in range(-1, n_min - 1, -1):
        rp = r[n + 1]
        r[n] = 2 * rp - r[n + 2] + 2 * c * c / (rp * rp)
    z = {0: z0}
    for n in range(1, n_max + 1):
        z[n] = z[n - 1] + c / r[n]
    for n in range(-1, n_min - 1, -1):
        z[n] = z[n + 1] - c / r[n + 1]
    return CatenoidSolution(c=c, z0=z0, r=r, z=z, n_min=n_min, n_max=n_max)


def catenoid_classify(sol: CatenoidSolution) -> Classification:
    """Locate the minimum index n0 and the offset delta in (-1, 1].

    delta is fixed by r_{n0+1} = r_{n0} + (1 - delta) c^2 / r_{n0}^2.
    Adjacent equal minima give delta = 1 (first index wins the argmin).
    Also verifies the two-sided monotonicity away from n0 and strict
    monotonicity of z with the sign of c.
    """
    ns = range(sol.n_min, sol.n_max + 1)
    rmin = min(sol.r[n] for n in ns)
    rmax = max(sol.r[n] for n in ns)
    if rmin == rmax:
        raise ConstantSolution("all r_n equal over the stored range")
    n0 = next(n for n in ns if sol.r[n] == rmin)
    if n0 in (sol.n_min, sol.n_max):
        warnings.warn(
            f"argmin n0={n0} sits on the stored boundary "
            f"[{sol.n_min}, {sol.n_max}]; classification may be truncated",
            stacklevel=2,
        )
    c2 = sol.c * sol.c
    if n0 < sol.n_max:
        delta = 1 - (sol.r[n0 + 1] - sol.r[n0]) * sol.r[n0] ** 2 / c2
    else:
        # top-boundary fallback via the mirrored relation
        delta = (sol.r[n0 - 1] - sol.r[n0]) * sol.r[n0] ** 2 / c2 - 1
    for n in range(n0, sol.n_max):
        if sol.r[n + 1] < sol.r[n]:
            raise ContractViolation(f"r not nondecreasing above n0 at n={n}")
    for n in range(n0, sol.n_min, -1):
        if sol.r[n - 1] < sol.r[n]:
            raise ContractViolation(f"r not nonincreasing below n0 at n={n}")
    for n in range(sol.n_min + 1, sol.n_max + 1):
        dz = sol.z[n] - sol.z[n - 1]
        if not (dz * sol.c > 0):
            raise ContractViolation(f"z not strictly monotone with c at n={n}")
    return Classification(n0=n0, delta=delta, c=sol.c,
                          monotone_up_from=n0, monotone_down_to=n0)


def catenoid_closed(a: float, hbar: float, n: int,
                    branch: int = +1, z_offset: float = 0.0
                    ) -> Tuple[float, float]:
    """Continuum catenoid sampled at p = -hbar*n.

    q solves p = (a^2/2)(q + sinh(2q)/2) (odd, strictly monotone), and
    (r, z) = (a^2 cosh^2 q, branch * a * q + z_offset).
    """
    if not (a > 0 and hbar > 0):
        raise InputError("need a > 0 and hbar > 0")
    if branch not in (+1, -1):
        raise InputError("branch must be +1 or -1")
    p = -hbar * n

    def g(q):
        return (a * a / 2) * (q + math.sinh(2 * q) / 2) - p

    hi = 1.0
    while g(hi) < 0:
        hi *= 2
    lo = -1.0
    while g(lo) > 0:
        lo *= 2
    q = find_root_bisect(g, lo, hi, tol=5e-324)
    ch = math.cosh(q)
    return a * a * ch * ch, branch * a * q + z_offset


def catenoid_asymptotic(a: float, hbar: float, n: int) -> float:
    """Far-field profile 2 hbar |n| - (a^2/2) ln|n|."""
    if n == 0:
        raise InputError("asymptotic form needs n != 0")
    return 2 * hbar * abs(n) - (a * a / 2) * math.log(abs(n))


# ---------------------------------------------------------------------
# Enneper
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SigmaSequence:
    """Strictly increasing lowering-weight moduli, sigma_0 = 0."""

    hbar: float
    sigma: List[float] = field(default_factory=list)

    def __post_init__(self):
        if self.sigma and self.sigma[0] != 0:
            raise InputError("sigma_0 must be 0")


def enneper_sigma(hbar: float, n_max: int) -> SigmaSequence:
    """Iterate (s - sigma_n)(2 + sigma_n + s)^2 = 8 hbar upward.

    The left side is strictly increasing in s above sigma_n and
    vanishes there, so the root is unique; the bracket upper end
    sigma_n + 8 hbar / (2 + 2 sigma_n)^2 overshoots by construction.
    """
    if not hbar > 0:
        raise InputError("need hbar > 0")
    if n_max < 0:
        raise InputError("need n_max >= 0")
    sig = [0.0]
    for _ in range(n_max):
        s0 = sig[-1]

        def f(s, s0=s0):
            t = 2 + s0 + s
            return (s - s0) * t * t - 8 * hbar

        hi = s0 + 8 * hbar / (2 + 2 * s0) ** 2
        sig.append(find_root_bisect(f, s0, hi, tol=5e-324))
    return SigmaSequence(hbar=hbar, sigma=sig)


def enneper_sigma_closed(hbar: float, c: float, n: int) -> float:
    """Closed-form weight [(6 hbar n + 3 hbar + 1 - 3c)^(1/3) - 1] 2n/(2n+1)."""
    if n < 0:
        raise InputError("need n >= 0")
    arg = 6 * hbar * n + 3 * hbar + 1 - 3 * c
    if arg <= 0:
        raise DomainError(f"cube-root argument {arg} <= 0")
    bracket = arg ** (1.0 / 3.0) - 1.0
    if n > 0 and bracket < 0:
        raise DomainError(
            f"cube-root argument {arg} <= 1 gives a negative weight (bad c)"
        )
    return bracket * 2 * n / (2 * n + 1)


# ---------------------------------------------------------------------
# helicoid
# ---------------------------------------------------------------------

def _helicoid_v(x: float) -> float:
    """Invert x = v/2 + sinh(2v)/4 (odd, strictly increasing)."""

    def g(v):
        return v / 2 + math.sinh(2 * v) / 4 - x

    if x == 0:
        return 0.0
    lo, hi = (0.0, 1.0) if x > 0 else (-1.0, 0.0)
    while g(hi) < 0:
        hi *= 2
    while g(lo) > 0:
        lo *= 2
    return find_root_bisect(g, lo, hi, tol=5e-324)


def helicoid_profile(x: float) -> float:
    """Real profile w = sinh(v(x)); odd in x."""
    return math.sinh(_helicoid_v(x))


def helicoid_residual(x: float, hbar: float) -> float:
    """w(x)(2w(x)^2 - w(x-h)^2 - w(x+h)^2) - 2 h^2 w''(x).

    w'' is evaluated analytically (w'' = -w sech^4 v), so the residual
    isolates the O(h^4) central-difference error of the functional
    equation; the classical identity w (w^2)'' + 2 w'' = 0 makes the
    h^2 terms cancel exactly.
    """
    if not hbar > 0:
        raise InputError("need hbar > 0")
    v = _helicoid_v(x)
    w0 = math.sinh(v)
    wm = helicoid_profile(x - hbar)
    wp = helicoid_profile(x + hbar)
    wpp = -w0 / math.cosh(v) ** 4
    return w0 * (2 * w0 * w0 - wm * wm - wp * wp) - 2 * hbar * hbar * wpp


# ---------------------------------------------------------------------
# complex hyperbola
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class HyperbolaParams:
    eps: float
    delta: float
    c_abs: float
    sign: int = +1

    def __post_init__(self):
        if not self.eps > 0:
            raise InputError("need eps > 0")
        if not self.c_abs > 0:
            raise InputError("need |c| > 0")
        if self.sign not in (+1, -1):
            raise InputError("sign must be +1 or -1")


def hyperbola_r(params: HyperbolaParams, n: int) -> float:
    """Closed form r_n = s_n +/- sqrt(s_n^2 + |c|^2), s_n = (-eps n + delta)/2.

    Evaluated in the rationalized form on the cancelling side (the
    naive sum loses ~|s|/|c| digits for s of the wrong sign, which is
    fatal at |n| ~ 500), so the exact recursion identity survives in
    doubles. The minus branch is negative for every n and raises.
    """
    s = (-params.eps * n + params.delta) / 2
    c2 = params.c_abs * params.c_abs
    root = math.sqrt(s * s + c2)
    if params.sign > 0:
        r = s + root if s >= 0 else c2 / (root - s)
    else:
        r = s - root if s <= 0 else -c2 / (root + s)
    if not r > 0:
        raise NonPositive(f"branch {params.sign:+d} gives r_{n} = {r} <= 0")
    return r


def hyperbola_residual(params: HyperbolaParams, n: int) -> float:
    """r_n - r_{n+1} + |c|^2/r_{n+1} - |c|^2/r_n - eps (identically 0)."""
    rn = hyperbola_r(params, n)
    rn1 = hyperbola_r(params, n + 1)
    c2 = params.c_abs * params.c_abs
    return rn - rn1 + c2 / rn1 - c2 / rn - params.eps
