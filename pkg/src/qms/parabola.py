"""The complex-parabola recursion v_n(v_{n+1} + v_{n-1} + 1) = eps(n+1),
its unique positive orbit, and the exact tau-function structure.

The map has vacuum boundary v_{-1} = v_{-2} = 0 and one free initial
value x = v_0. Generic x kills the orbit after a few steps (a value
goes nonpositive); the survivors' initial values nest down to a single
point vhat found here by parity shooting: initial values just below
vhat die at an even index, just above at an odd index, and that parity
flips exactly once across vhat.

In exact arithmetic v_n(x) is a rational function whose numerator and
denominator stay tiny: v_n = (u_n u_{n-4}) / (u_{n-3} u_{n-1}) with
polynomial u_n of linearly growing degree, and tau_n defined by
v_n = tau_{n+1} tau_{n-1} / tau_n^2 factors as u_{n-1} u_{n-2} u_{n-3}.
Both facts are enforced here by exact division (a failed division is a
contract violation, not a recoverable state).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exactmath import (
    ContractViolation,
    InputError,
    Poly,
    RatFn,
    rational,
    ratfn_reduce,
)
from .surfaces import DomainError


class ZeroInitial(InputError):
    """v_0 = 0 makes v_1 undefined."""


class BracketLost(ContractViolation):
    """Both shooting endpoints fail with the same parity."""


class PrecisionExhausted(ContractViolation):
    """Bracket width hit float resolution before the requested index."""


class ZeroProductPivot(ContractViolation):
    """The coefficient multiplying the next unknown vanished."""


# ---------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ParabolaOrbit:
    eps: object
    x: object
    v: List
    first_failure: Optional[int]


def v_iterate(eps, x, n_max: int) -> ParabolaOrbit:
    """Run the orbit from v_0 = x up to v_{n_max} or first nonpositive.

    Arithmetic is generic: floats, Fractions, or mpfr all work, so the
    same loop serves double, exact, and extended-precision modes. The
    first nonpositive value is stored and its index recorded in
    first_failure.
    """
    if n_max < 1:
        raise InputError("need n_max >= 1")
    if not eps > 0:
        raise InputError("need eps > 0")
    if x == 0:
        raise ZeroInitial("v_0 = 0")
    v = [x, (eps - x) / x]
    ff = None
    if v[1] <= 0:
        ff = 1
    else:
        for n in range(1, n_max):
            nxt = eps * (n + 1) / v[n] - v[n - 1] - 1
            v.append(nxt)
            if nxt <= 0:
                ff = n + 1
                break
    return ParabolaOrbit(eps=eps, x=x, v=v, first_failure=ff)


def _v_raw(eps, x, target: int) -> float:
    # v_target(x) as the literal rational map, signs allowed; exact
    # zeros are nudged to the smallest positive double so poles are
    # approached from one side only
    vm1, v0 = 0.0, x
    for n in range(target):
        if v0 == 0:
            v0 = 5e-324
        vm1, v0 = v0, eps * (n + 1) / v0 - vm1 - 1
    return v0


# ---------------------------------------------------------------------
# shooting
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ShootingResult:
    eps: object
    vhat: object
    bracket: Tuple
    survived_steps: int
    tolerance: object


def vhat_bisect(eps, tol, n_max: int = 400,
                precision: Optional[int] = None) -> ShootingResult:
    """Bisect on the initial value using failure parity as the oracle.

    Orbits from below vhat fail at an even index, from above at an odd
    index (the even/odd interval endpoints approach vhat from opposite
    sides), so the parity of first_failure is a two-sided oracle that
    survives even when lifetimes fluctuate. If a midpoint orbit never
    fails within n_max the point is already indistinguishable from
    vhat at this horizon and is returned as such.

    precision: optional mpfr bit count for extended-precision runs
    (double precision loses the parity signal near bracket widths of
    ~1e-16 * eps, which caps survivable depth around 40-80 steps).
    """
    if not tol > 0:
        raise InputError("need tol > 0")
    if not eps > 0:
        raise InputError("need eps > 0")
    if precision is not None:
        import gmpy2
        with gmpy2.context(precision=precision):
            return _vhat_core(gmpy2.mpfr(eps), gmpy2.mpfr(tol), n_max)
    return _vhat_core(float(eps), float(tol), n_max)


def _vhat_core(eps, tol, n_max: int) -> ShootingResult:
    def parity(x):
        ff = v_iterate(eps, x, n_max).first_failure
        return None if ff is None else ff % 2

    lo = eps * 1e-9
    hi = eps * (1 - 1e-12)
    plo, phi = parity(lo), parity(hi)
    if plo != 0 or phi != 1:
        raise BracketLost(
            f"endpoint parities ({plo}, {phi}) != (even, odd); "
            "reduce n_max or raise precision"
        )
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            break  # resolution limit; parities at the edges still differ
        p = parity(mid)
        if p is None:
            return ShootingResult(eps=eps, vhat=mid, bracket=(lo, hi),
                                  survived_steps=n_max, tolerance=tol)
        if p == 0:
            lo = mid
        else:
            hi = mid
    vhat = (lo + hi) / 2
    ff = v_iterate(eps, vhat, n_max).first_failure
    survived = n_max if ff is None else ff
    return ShootingResult(eps=eps, vhat=vhat, bracket=(lo, hi),
                          survived_steps=survived, tolerance=tol)


def vhat_series(eps) -> float:
    """Cubic model eps - 2 eps^2 + 8 eps^3 of the surviving initial value.

    Matches vhat to O(eps^2) only: high-precision shooting pins the
    cubic coefficient of vhat at 12, while the 8 here is the small-eps
    expansion of closed_form_v(0, hbar, eps/2). Kept as the documented
    reference model; the acceptance suite measures the eps^3 gap.
    """
    return eps - 2 * eps ** 2 + 8 * eps ** 3


def closed_form_v(n: int, hbar, c) -> float:
    """Continuum profile -1/4 + sqrt(1/16 + n hbar + c); solves the
    recursion only up to O(hbar^2) terms. With c = hbar it vanishes at
    n = -1."""
    radicand = 1 / 16 + n * float(hbar) + float(c)
    if radicand < 0:
        raise DomainError(f"negative radicand {radicand}")
    return -0.25 + radicand ** 0.5


# ---------------------------------------------------------------------
# interval endpoints
# ---------------------------------------------------------------------

def interval_endpoints(eps: float, n_max: int) -> List[float]:
    """Locate c_0..c_{n_max}: c_n is the zero of x -> v_n(x) bounding
    the n-th survival interval.

    c_0 = 0 and c_1 = eps are exact. Each later c_n is bisected inside
    a bracket chained from the *sign-verified edges* of earlier
    endpoints (midpoints are useless here: adjacent endpoints differ
    by less than the bisection noise after a handful of levels). Even
    endpoints increase, odd ones decrease, all nested around vhat.

    Raises PrecisionExhausted when a chained bracket no longer shows a
    sign change, which at double precision happens near n ~ 22 for
    eps = 0.1.
    """
    if not eps > 0:
        raise InputError("need eps > 0")
    if n_max < 0:
        raise InputError("need n_max >= 0")
    cs = [0.0, float(eps)]
    if n_max <= 1:
        return cs[: n_max + 1]
    eps = float(eps)
    br = {}  # n -> (x_neg, x_pos) with v_n(x_neg) < 0 < v_n(x_pos)
    for n in range(2, n_max + 1):
        if n == 2:
            lo, hi = eps * 1e-9, eps
        elif n == 3:
            lo, hi = br[2][1], eps * (1 - 1e-12)
        elif n % 2 == 1:
            lo, hi = br[n - 1][1], br[n - 2][0]
        else:
            lo, hi = br[n - 2][1], br[n - 1][1]
        fa = _v_raw(eps, lo, n)
        fb = _v_raw(eps, hi, n)
        if fa == 0 or fb == 0 or (fa > 0) == (fb > 0):
            raise PrecisionExhausted(
                f"no sign change for c_{n}: v({lo!r})={fa:.3g}, "
                f"v({hi!r})={fb:.3g}"
            )
        a, b = lo, hi
        for _ in range(200):
            m = 0.5 * (a + b)
            if m == a or m == b:
                break
            fm = _v_raw(eps, m, n)
            if (fa > 0) != (fm > 0):
                b, fb = m, fm
            else:
                a, fa = m, fm
        cs.append(0.5 * (a + b))
        xneg = a if fa < 0 else b
        xpos = b if fb > 0 else a
        br[n] = (xneg, xpos)
    return cs


# ---------------------------------------------------------------------
# exact u / tau structure
# ---------------------------------------------------------------------

def _v_ratfn_seq(eps: Fraction, n_max: int) -> List[RatFn]:
    x = Poly.x()
    v = [RatFn.of(x), ratfn_reduce(Poly([eps, -1]), x)]
    for n in range(1, n_max):
        v.append(RatFn.of(eps * (n + 1)) / v[n] - v[n - 1] - 1)
    return v


def u_exact(eps, n_max: int) -> List[Poly]:
    """Exact polynomials u_0..u_{n_max} with v_n = (u_n u_{n-4}) /
    (u_{n-3} u_{n-1}), u_k = 1 for k < 0.

    Each u_n is extracted from the exact rational-function orbit by
    u_n = v_n u_{n-1} u_{n-3} / u_{n-4}; the division's exactness *is*
    the integrability statement, so NotDivisible propagates untouched.
    """
    eps = rational(eps)
    if not eps > 0:
        raise InputError("need eps > 0")
    if n_max < 0:
        raise InputError("need n_max >= 0")
    v = _v_ratfn_seq(eps, n_max)
    one = Poly.const(1)
    u: List[Poly] = []

    def get(k: int) -> Poly:
        return u[k] if k >= 0 else one

    for n in range(n_max + 1):
        r = v[n] * RatFn.of(get(n - 1) * get(n - 3)) / RatFn.of(get(n - 4))
        u.append(r.as_poly())
    return u


@dataclass(frozen=True)
class TauTable:
    """tau_n for n in [-1, top]; tau(-1) = tau(0) = 1, tau(1) = x."""

    eps: Fraction
    u: List[Poly]
    tau: List[Poly]  # tau[i] is tau_{i-1}

    @property
    def top(self) -> int:
        return len(self.tau) - 2

    def get_tau(self, n: int) -> Poly:
        if n < -1 or n > self.top:
            raise InputError(f"tau_{n} outside stored range [-1, {self.top}]")
        return self.tau[n + 1]


def tau_table(eps, n_max: int) -> TauTable:
    """Build tau_{-1}..tau_{n_max+1} by tau_{n+1} = v_n tau_n^2 / tau_{n-1}
    and certify both polynomiality and tau_n = u_{n-1} u_{n-2} u_{n-3}
    by exact arithmetic."""
    eps = rational(eps)
    if not eps > 0:
        raise InputError("need eps > 0")
    if n_max < 0:
        raise InputError("need n_max >= 0")
    u = u_exact(eps, n_max)
    v = _v_ratfn_seq(eps, n_max)
    one = Poly.const(1)
    taus = [one, one]  # tau_{-1}, tau_0
    for n in range(0, n_max + 1):
        t_n, t_nm1 = taus[n + 1], taus[n]
        nxt = (v[n] * RatFn.of(t_n * t_n) / RatFn.of(t_nm1)).as_poly()
        taus.append(nxt)

    def get_u(k: int) -> Poly:
        return u[k] if k >= 0 else one

    for n in range(0, n_max + 2):
        prod = get_u(n - 1) * get_u(n - 2) * get_u(n - 3)
        if taus[n + 1] != prod:
            raise ContractViolation(
                f"tau_{n} != u_{n-1} u_{n-2} u_{n-3}"
            )
    return TauTable(eps=eps, u=u, tau=taus)


def conserved_residual(table: TauTable, n: int) -> Tuple[RatFn, RatFn]:
    """Residuals (LHS - RHS) of the two tau-form conserved identities.

    res_a: tau_{n+2} tau_n tau_{n-1}^3 tau_{n-2}
           + tau_{n+1}^2 tau_{n-1}^3 tau_{n-2}
           - tau_{n+1} tau_n^3 (tau_{n-2}^2 + tau_{n-1} tau_{n-3})
           - eps tau_{n+1} tau_n^2 tau_{n-1}^2 tau_{n-2}
    res_b: tau_{n+2} tau_n tau_{n-1}^2
           + tau_{n+1}^2 (tau_{n-1}^2 + tau_n tau_{n-2})
           - eps (n+1) tau_{n+1} tau_n^2 tau_{n-1}

    Note the cube on tau_{n-1} in res_a's second term: it is forced by
    clearing denominators of the 5-term conserved form under
    r_m = tau_{m+1}/tau_m (a square there fails for every n). res_a
    needs n >= 2 (the 5-term form sees the vacuum boundary at n = 1);
    res_b holds from n = 1. Both are identically zero polynomials on a
    valid table.
    """
    if n < 2:
        raise InputError("identities need n >= 2 (res_b alone holds at 1)")
    if n + 2 > table.top:
        raise InputError(f"table stops at tau_{table.top}, need tau_{n+2}")
    t = table.get_tau
    eps = table.eps
    tm3, tm2, tm1 = t(n - 3), t(n - 2), t(n - 1)
    t0, tp1, tp2 = t(n), t(n + 1), t(n + 2)
    res_a = (
        tp2 * t0 * tm1 ** 3 * tm2
        + tp1 ** 2 * tm1 ** 3 * tm2
        - tp1 * t0 ** 3 * (tm2 ** 2 + tm1 * tm3)
        - eps * tp1 * t0 ** 2 * tm1 ** 2 * tm2
    )
    res_b = (
        tp2 * t0 * tm1 ** 2
        + tp1 ** 2 * (tm1 ** 2 + t0 * tm2)
        - eps * (n + 1) * tp1 * t0 ** 2 * tm1
    )
    return RatFn.of(res_a), RatFn.of(res_b)


# ---------------------------------------------------------------------
# two-monomial generalization
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrbit:
    p: int
    q: int
    eps: float
    seeds: Tuple
    v: List
    first_failure: Optional[int]


def monomial_pair_iterate(p: int, q: int, eps, seeds: Sequence,
                          n_max: int) -> MonomialOrbit:
    """Diagonal constraint for the pair (W^p, W^q) with vacuum boundary.

    At each n the equation
        prod(v_n..v_{n+p-1}) - prod(v_{n-p}..v_{n-1})
      + prod(v_n..v_{n+q-1}) - prod(v_{n-q}..v_{n-1}) = eps
    (products touching k < 0 vanish) is solved for v_{n+q-1}. For
    (p, q) = (1, 2) this reproduces v_iterate term by term. Stops on
    the first nonpositive value.
    """
    if not (p >= 1 and q > p):
        raise InputError("need 1 <= p < q")
    if len(seeds) != q - 1:
        raise InputError(f"need {q-1} seeds for q={q}, got {len(seeds)}")
    if any(not s > 0 for s in seeds):
        raise InputError("seeds must be positive")
    if not eps > 0:
        raise InputError("need eps > 0")
    if n_max < q - 1:
        raise InputError("n_max smaller than the seed range")
    v = list(seeds)

    def prod(a: int, b: int):
        # product of v_a..v_b inclusive; empty range gives 1
        if a < 0:
            return 0 * eps
        out = 1 + 0 * eps
        for k in range(a, b + 1):
            out = out * v[k]
        return out

    ff = None
    while len(v) <= n_max:
        n = len(v) - (q - 1)
        pivot = prod(n, n + q - 2)
        if pivot == 0:
            raise ZeroProductPivot(f"zero pivot at n={n}")
        nxt = (eps - prod(n, n + p - 1) + prod(n - p, n - 1)
               + prod(n - q, n - 1)) / pivot
        v.append(nxt)
        if nxt <= 0:
            ff = len(v) - 1
            break
    return MonomialOrbit(p=p, q=q, eps=eps, seeds=tuple(seeds), v=v,
                         first_failure=ff)


def _far_field(p: int, q: int, eps: float, k: int) -> float:
    # continuum balance p t^p + q t^q = eps k, unique positive root
    target = eps * k
    if target <= 0:
        return 0.0
    lo, hi = 0.0, 1.0

    def g(t):
        return p * t ** p + q * t ** q - target

    while g(hi) < 0:
        hi *= 2
    for _ in range(80):
        m = 0.5 * (lo + hi)
        if g(m) < 0:
            lo = m
        else:
            hi = m
    return 0.5 * (lo + hi)


def monomial_pair_seeds(p: int, q: int, eps: float,
                        window: int = 60) -> Tuple[float, ...]:
    """Positive-orbit seeds by damped-Newton boundary-value relaxation.

    Grid search cannot reach long lifetimes for q >= 3 (the positive
    set has codimension q - 1 and one-sided iteration is unstable both
    ways), so the whole window v_0..v_window is solved at once: vacuum
    boundary below, the continuum far field p t^p + q t^q = eps k
    pinned above. The interior of the solution is insensitive to the
    tail placement (mismatch decays into the bulk), and the returned
    seeds drive monomial_pair_iterate positive for dozens of steps —
    limited only by double-precision error growth.
    """
    if not (p >= 1 and q > p):
        raise InputError("need 1 <= p < q")
    if not eps > 0:
        raise InputError("need eps > 0")
    if window < 3 * q:
        raise InputError("window too small for a stable far field")
    K = window

    def value(vec, k):
        if k < 0:
            return 0.0
        if k <= K:
            return vec[k]
        return _far_field(p, q, eps, k)

    def prod_and_grad(vec, a, b):
        # product of values a..b and its gradient w.r.t. the unknowns
        if a < 0:
            return 0.0, []
        vals = [value(vec, k) for k in range(a, b + 1)]
        total = 1.0
        for t in vals:
            total *= t
        touched = []
        for i, k in enumerate(range(a, b + 1)):
            if 0 <= k <= K:
                g = 1.0
                for j, t in enumerate(vals):
                    if j != i:
                        g *= t
                touched.append((k, g))
        return total, touched

    v = np.array([max(_far_field(p, q, eps, k), eps * 1e-3)
                  for k in range(K + 1)])
    for _ in range(200):
        F = np.zeros(K + 1)
        J = np.zeros((K + 1, K + 1))
        for n in range(K + 1):
            for sgn, a, b in ((+1, n, n + p - 1), (-1, n - p, n - 1),
                              (+1, n, n + q - 1), (-1, n - q, n - 1)):
                val, touched = prod_and_grad(v, a, b)
                F[n] += sgn * val
                for k, g in touched:
                    J[n, k] += sgn * g
            F[n] -= eps
        if np.max(np.abs(F)) < 1e-13:
            break
        step = np.linalg.solve(J, F)
        lam = 1.0
        while lam > 1e-8 and np.any(v - lam * step <= 0):
            lam *= 0.5
        v = v - lam * step
    else:
        raise ContractViolation("seed relaxation did not converge")
    return tuple(float(t) for t in v[: q - 1])
