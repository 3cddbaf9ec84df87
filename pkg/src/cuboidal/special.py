"""Real-argument special functions: gamma, K-Bessel, zeta, Dirichlet L-functions.

Everything here works in binary64.  Functions that are part of the public
surface return a :class:`SpecialValue` carrying an error estimate; the
lattice-sum code uses the underscored float/array helpers directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DomainError,
    PoleAtNonpositiveInteger,
    PoleAtOne,
    PoleGuard,
    UnsupportedModulus,
)

EULER_GAMMA = 0.57721566490153286061
EPS = np.finfo(float).eps
POLE_GUARD = 1e-12
# below this the Euler-Maclaurin head cancels badly; use functional equations
REFLECT_BELOW = -0.5


@dataclass(frozen=True)
class SpecialValue:
    value: float
    abs_error_estimate: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"non-finite special value {self.value!r}")
        if not self.abs_error_estimate >= 0:
            raise DomainError("error estimate must be non-negative")

    def __float__(self):
        return self.value


def _real(x, name="argument") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def sinpi(x: float) -> float:
    """sin(pi*x) with exact zeros at the integers."""
    r = math.fmod(x, 2.0)  # exact
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r == int(r):
        return 0.0
    # fold into [-1/2, 1/2] so math.sin sees a small argument
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _is_nonpositive_integer(s: float, width: float = 0.0) -> bool:
    return s <= width and abs(s - round(s)) <= width


# ---------------------------------------------------------------- gamma

def _gamma(s: float) -> float:
    if _is_nonpositive_integer(s, 1e-14):
        raise PoleAtNonpositiveInteger(f"gamma has a pole at s={s!r}")
    if s > 0:
        return math.gamma(s)
    return math.pi / (sinpi(s) * math.gamma(1.0 - s))


def _rgamma(s: float) -> float:
    if s <= 0 and s == round(s):
        return 0.0
    if s > 0:
        if s > 171.0:
            return math.exp(-math.lgamma(s))
        if s < 1.0:  # Gamma(s) overflows for subnormal s
            return s / math.gamma(1.0 + s)
        return 1.0 / math.gamma(s)
    return sinpi(s) * math.gamma(1.0 - s) / math.pi


def gamma(s) -> SpecialValue:
    """Gamma function; negative arguments go through the reflection formula."""
    s = _real(s, "s")
    v = _gamma(s)
    return SpecialValue(v, 8 * EPS * abs(v) * (1.0 if s > 0 else 1.0 + abs(s)))


def reciprocal_gamma(s) -> SpecialValue:
    s = _real(s, "s")
    v = _rgamma(s)
    return SpecialValue(v, 8 * EPS * abs(v) * (1.0 + abs(min(s, 0.0))))


# ---------------------------------------------------------------- K-Bessel

# Trapezoid rule on K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.  The
# integrand is analytic in the strip |Im t| < pi/2; using the half-width
# d = 1 the discretisation error is about exp(-2 pi / h) times
# exp(x (1 - cos 1)) (1/cos 1)^nu relative to the result.
_QUAD_DIGITS = 45.0


def _logcosh(y):
    y = np.abs(y)
    return y + np.log1p(np.exp(-2.0 * y)) - math.log(2.0)


def _k_cutoff(nu: float, x: float) -> float:
    """Truncation point T beyond which the integrand is below exp(-45) of its peak."""
    tpk = math.asinh(nu / x) if nu > 0 else 0.0

    def phi(t):
        return nu * t - x * (math.cosh(t) - 1.0)

    target = phi(tpk) - _QUAD_DIGITS
    hi = tpk + 1.0
    while phi(hi) > target:
        hi = tpk + 2.0 * (hi - tpk)
    lo = tpk
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if phi(mid) > target:
            lo = mid
        else:
            hi = mid
    return hi


def kv(nu: float, x) -> np.ndarray:
    """Vectorised K_nu(x) for x > 0 (array in, array out)."""
    nu = abs(float(nu))
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return np.zeros_like(x)
    if np.any(x <= 0) or not np.all(np.isfinite(x)):
        raise DomainError("bessel_k needs finite x > 0")
    xmin = float(x.min())
    xmax = float(x.max())
    h = min(0.25, 2 * math.pi / (_QUAD_DIGITS + 0.46 * xmax + 0.62 * nu))
    T = _k_cutoff(nu, xmin)
    n = int(math.ceil(T / h)) + 1
    t = h * np.arange(n + 1)
    w = np.full(n + 1, h)
    w[0] = 0.5 * h
    # cosh t - 1 = 2 sinh^2(t/2) keeps the exponent exact near the peak;
    # the exp(-x) factor is applied last so large x loses no digits
    flat = x.reshape(-1)
    expo = -np.multiply.outer(flat, 2 * np.sinh(0.5 * t) ** 2) + _logcosh(nu * t)[None, :]
    vals = (np.exp(expo) @ w) * np.exp(-flat)
    return vals.reshape(x.shape)


def k_bound(nu: float, z):
    """Upper bound for K_nu(z) built on the large-argument asymptotic form.

    For |nu| <= 1/2 the asymptotic expression itself is an upper bound; for
    larger order it is inflated by (1 - (|nu| - 1/2)/(2z))^-(|nu| + 1/2), which
    follows from the Laplace-type integral for K.  Where that factor is not
    defined (z small against nu) the exact value is returned.
    """
    nu = abs(float(nu))
    z = np.asarray(z, dtype=float)
    base = np.sqrt(np.pi / (2 * z)) * np.exp(-z)
    if nu <= 0.5:
        return base
    r = (nu - 0.5) / (2 * z)
    out = np.empty_like(z)
    ok = r < 0.75
    out[ok] = base[ok] * (1 - r[ok]) ** (-(nu + 0.5))
    if np.any(~ok):
        out[~ok] = kv(nu, z[~ok])
    return out


def bessel_k(nu, x) -> SpecialValue:
    """Modified Bessel function of the second kind, real order and argument."""
    nu = _real(nu, "nu")
    x = _real(x, "x")
    if x <= 0:
        raise DomainError(f"bessel_k needs x > 0, got {x!r}")
    v = float(kv(nu, np.array([x]))[0])
    return SpecialValue(v, 16 * EPS * abs(v))


# ---------------------------------------------------------------- zeta family

def _bernoulli(nmax: int) -> tuple:
    B = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * B[k]
        B.append(-acc / (n + 1))
    return tuple(B)


_EM_TERMS = 12  # Bernoulli corrections through B_24
_EM_N = 20
# B_{2k}/(2k)! for k = 1..13 (the last one is only used for the error bound)
_BERN = _bernoulli(2 * _EM_TERMS + 2)
_EM_COEF = tuple(float(_BERN[2 * k] / math.factorial(2 * k)) for k in range(1, _EM_TERMS + 2))


def _em_sum(s: float, shifts, weights, N: int = _EM_N):
    """Euler-Maclaurin for sum_r w_r zeta(s, a_r).

    When the weights sum to zero the 1/(s-1) pieces are combined so that the
    result is finite (and accurate) at s = 1.
    Returns (value, error_estimate).
    """
    shifts = [float(a) for a in shifts]
    weights = [float(w) for w in weights]
    balanced = abs(sum(weights)) < 1e-15
    if not balanced and abs(s - 1.0) < POLE_GUARD:
        raise PoleAtOne(f"zeta(s, a) has a pole at s=1 (s={s!r})")

    total = 0.0
    mag = 0.0
    err = 0.0
    x = 1.0 - s
    X0 = N + shifts[0]
    for a, w in zip(shifts, weights):
        if w == 0:
            continue
        n = np.arange(N) + a
        head = n ** (-s)
        hs = math.fsum(head)
        X = N + a
        part = hs + 0.5 * X ** (-s)
        mag += abs(w) * (float(np.abs(head).sum()) + 0.5 * X ** (-s))
        if not balanced:
            pole = X ** x / (s - 1.0)
            part += pole
            mag += abs(w * pole)
        # Bernoulli tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * X^(-s-2k+1)
        poch = s
        Xp = X ** (-s - 1.0)
        corr = 0.0
        for k in range(_EM_TERMS):
            term = _EM_COEF[k] * poch * Xp
            corr += term
            poch *= (s + 2 * k + 1) * (s + 2 * k + 2)
            Xp /= X * X
        part += corr
        err += abs(w * _EM_COEF[_EM_TERMS] * poch * Xp)
        total += w * part
    if balanced:
        Ls = [math.log((N + a) / X0) for a in shifts]
        phi = 0.0
        for L, w in zip(Ls, weights):
            phi += w * (L if x == 0 else math.expm1(x * L) / x)
        pole = -(X0 ** x) * phi
        total += pole
        mag += abs(pole)
    return total, err + 4 * EPS * mag


def hurwitz_zeta(s, a) -> SpecialValue:
    """Hurwitz zeta(s, a) for 0 < a <= 1 by Euler-Maclaurin.

    For s < 0 the leading partial sum grows like 20^(1-s), and that
    cancellation shows up in the reported error estimate.
    """
    s = _real(s, "s")
    a = _real(a, "a")
    if not 0 < a <= 1:
        raise DomainError(f"hurwitz_zeta needs 0 < a <= 1, got {a!r}")
    if abs(s - 1.0) < POLE_GUARD:
        raise PoleAtOne(f"zeta(s, a) has a pole at s=1 (s={s!r})")
    v, e = _em_sum(s, [a], [1.0])
    return SpecialValue(v, e)


def _zeta(s: float) -> float:
    return _zeta_err(s)[0]


def _zeta_err(s: float):
    if abs(s - 1.0) < POLE_GUARD:
        raise PoleAtOne(f"zeta has a pole at s=1 (s={s!r})")
    if s >= REFLECT_BELOW:
        return _em_sum(s, [1.0], [1.0])
    if s == round(s) and int(s) % 2 == 0:
        return 0.0, 0.0
    z1, e1 = _em_sum(1.0 - s, [1.0], [1.0])
    f = 2.0 ** s * math.pi ** (s - 1.0) * sinpi(s / 2.0) * math.gamma(1.0 - s)
    v = f * z1
    return v, abs(f) * e1 + 8 * EPS * (1 + abs(s)) * abs(v)


def riemann_zeta(s) -> SpecialValue:
    """Riemann zeta; negative s goes through the functional equation."""
    s = _real(s, "s")
    return SpecialValue(*_zeta_err(s))


_CHI_TABLE = {4: (0, 1, 0, -1), 3: (0, 1, -1)}


def character(modulus: int, n: int) -> int:
    """The real odd characters chi_{-4} and chi_{-3}."""
    if modulus not in _CHI_TABLE:
        raise UnsupportedModulus(f"only moduli 3 and 4 are supported, got {modulus!r}")
    return _CHI_TABLE[modulus][int(n) % modulus]


def _dirichlet_err(s: float, q: int):
    chi = _CHI_TABLE[q]
    if s >= REFLECT_BELOW:
        v, e = _em_sum(s, [r / q for r in range(1, q)], [chi[r] for r in range(1, q)])
        f = q ** (-s)
        return f * v, f * e
    # odd real primitive character: (q/pi)^((s+1)/2) Gamma((s+1)/2) L(s) is symmetric
    rg = _rgamma((s + 1.0) / 2.0)
    if rg == 0.0:
        return 0.0, 0.0
    l1, e1 = _dirichlet_err(1.0 - s, q)
    f = (q / math.pi) ** (0.5 - s) * math.gamma(1.0 - s / 2.0) * rg
    v = f * l1
    return v, abs(f) * e1 + 8 * EPS * (1 + abs(s)) * abs(v)


def _l4(s: float) -> float:
    return _dirichlet_err(s, 4)[0]


def _l3(s: float) -> float:
    return _dirichlet_err(s, 3)[0]


def dirichlet_l4(s) -> SpecialValue:
    """L_{-4}(s) = 1 - 3^-s + 5^-s - ... (Dirichlet beta), entire."""
    s = _real(s, "s")
    return SpecialValue(*_dirichlet_err(s, 4))


def dirichlet_l3(s) -> SpecialValue:
    """L_{-3}(s) = 1 - 2^-s + 4^-s - 5^-s + ..., entire."""
    s = _real(s, "s")
    return SpecialValue(*_dirichlet_err(s, 3))


def _eta(s: float) -> float:
    """Alternating zeta (1 - 2^(1-s)) zeta(s); entire, finite at s = 1."""
    if s >= REFLECT_BELOW:
        v, _ = _em_sum(s, [0.5, 1.0], [1.0, -1.0])
        return 2.0 ** (-s) * v
    return -math.expm1((1.0 - s) * math.log(2.0)) * _zeta(s)


def dirichlet_eta(s) -> SpecialValue:
    s = _real(s, "s")
    v = _eta(s)
    return SpecialValue(v, 16 * EPS * (1 + abs(s)) * max(abs(v), 1e-300))


# ------------------------------------------------------- Gamma * zeta * L products

def _gamma_zeta_l(w: float, q: int) -> float:
    if abs(w) < POLE_GUARD or abs(w - 1.0) < POLE_GUARD:
        raise PoleGuard(f"Gamma(w) zeta(w) L(w) has a pole at w={w!r}")
    if w >= 0.5:
        return math.gamma(w) * _zeta(w) * _dirichlet_err(w, q)[0]
    # Dedekind zeta of Q(sqrt(-q)): (sqrt(q)/(2 pi))^w Gamma(w) zeta(w) L(w) is symmetric
    c = math.sqrt(q) / (2 * math.pi)
    return c ** (1.0 - 2.0 * w) * _gamma_zeta_l(1.0 - w, q)


def gamma_zeta_l4(w) -> float:
    """Gamma(w) zeta(w) L_{-4}(w), continued through its removable points.

    Only w = 0 and w = 1 are poles; the gamma poles at negative integers
    are cancelled by zeros of zeta(w) L_{-4}(w).
    """
    return _gamma_zeta_l(_real(w, "w"), 4)


def gamma_zeta_l3(w) -> float:
    """Gamma(w) zeta(w) L_{-3}(w); poles only at w = 0 and w = 1."""
    return _gamma_zeta_l(_real(w, "w"), 3)
