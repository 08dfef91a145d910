"""The polynomial layer: the SK cubic, the sign polynomials f and g, the
scaling identities that tie them to the cubic, and real-root extraction.

All polynomial coefficients are stored as exact integers (per power of m,
as integer polynomials in alpha) and evaluated by Horner in floating
point, so transcription rounding cannot creep in.  ``eval_f`` and
``eval_g`` are the published quintic/cubic sign polynomials; the identity
checks evaluate both routes independently and report the relative error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

IDENTITY_RTOL = 1e-9
ROOT_WIDTH = 1e-13

# f(alpha, m): coefficients of m^5 .. m^0, each an integer polynomial in
# alpha with coefficients listed by ascending power of alpha.
_F_COEFFS = (
    (0, 4, -12, 10),            # m^5: 2(5a^3 - 6a^2 + 2a)
    (8, -120, 312, -246),       # m^4: -2(123a^3 - 156a^2 + 60a - 4)
    (-80, 1016, -2600, 2068),   # m^3: 4(517a^3 - 650a^2 + 254a - 20)
    (64, -2656, 8032, -7132),   # m^2: -4(1783a^3 - 2008a^2 + 664a - 16)
    (272, 2404, -10028, 10754), # m^1: 2(5377a^3 - 5014a^2 + 1202a + 136)
    (-392, -456, 4104, -5902),  # m^0: -2(2951a^3 - 2052a^2 + 228a + 196)
)

# g(alpha, m): coefficients of m^3 .. m^0.
_G_COEFFS = (
    (1, 0, -9, 6, 2),           # m^3: 2a^4 + 6a^3 - 9a^2 + 1
    (0, 1, -34, 9, 8),          # m^2: 8a^4 + 9a^3 - 34a^2 + a
    (-28, -40, 270, -308, -70), # m^1: -2(35a^4 + 154a^3 - 135a^2 + 20a + 14)
    (64, 84, -548, 316, -300),  # m^0: -4(75a^4 - 79a^3 + 137a^2 - 21a - 16)
)


def _poly(coeffs: Sequence[int], x: float) -> float:
    value = 0.0
    for c in reversed(coeffs):
        value = value * x + c
    return value


def eval_f(alpha: float, m: float) -> float:
    """Quintic-in-m sign polynomial; positive for m >= 9, alpha in [1/2, 1)."""
    value = 0.0
    for coeffs in _F_COEFFS:
        value = value * m + _poly(coeffs, alpha)
    return value


def eval_g(alpha: float, m: float) -> float:
    """Cubic-in-m sign polynomial; negative for m >= 9, alpha in [1/2, 1)."""
    value = 0.0
    for coeffs in _G_COEFFS:
        value = value * m + _poly(coeffs, alpha)
    return value


def f_at_m9_factored(alpha: float) -> float:
    """Endpoint form f(alpha, 9) = -64(43a^3 - 117a^2 + 69a - 22)."""
    return -64.0 * _poly((-22, 69, -117, 43), alpha)


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + c2 x^2 + c1 x + c0, tagged with its (m, alpha)."""

    c2: float
    c1: float
    c0: float
    m: int
    alpha: float

    def evaluate(self, x: float) -> float:
        return ((x + self.c2) * x + self.c1) * x + self.c0


def sk_cubic(m: int, alpha: float) -> Cubic:
    """Characteristic cubic of the subdivided-K_{2,(m-1)/2} quotient.

    rho_alpha of that graph is the largest root.  The half-integer
    coefficients are assembled from doubled integers so the only rounding
    is the final division by two.
    """
    if m % 2 == 0:
        raise ValueError(f"the SK cubic is defined for odd sizes, got m = {m}")
    if m < 5:
        raise ValueError(f"the SK cubic needs m >= 5, got m = {m}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    c2 = -((m + 5) * alpha / 2.0 + 1.0)
    c1 = (m + 5) * alpha * alpha / 2.0 + 5.0 * (m - 1) * alpha / 2.0 + 2.0 - m
    c0 = -2.0 * m * alpha * alpha - (m - 5) * alpha + (m - 3.0)
    return Cubic(c2, c1, c0, m, alpha)


def largest_real_root(cubic: Cubic) -> float:
    """Maximal real root by bracketed bisection over monotone pieces.

    The critical points of the derivative split the line into monotone
    intervals, so the rightmost sign change can be isolated exactly; each
    bracket is bisected to width 1e-13.  Bisection is authoritative; no
    Newton polish is applied.
    """
    bound = 1.0 + max(abs(cubic.c2), abs(cubic.c1), abs(cubic.c0))
    disc = cubic.c2 * cubic.c2 - 3.0 * cubic.c1
    pieces: list[tuple[float, float]]
    if disc <= 0.0:
        pieces = [(-bound, bound)]
    else:
        r = disc**0.5
        crit_lo = (-cubic.c2 - r) / 3.0
        crit_hi = (-cubic.c2 + r) / 3.0
        pieces = [(crit_hi, bound), (crit_lo, crit_hi), (-bound, crit_lo)]
    for lo, hi in pieces:
        flo, fhi = cubic.evaluate(lo), cubic.evaluate(hi)
        if flo == 0.0 and fhi == 0.0:
            return hi  # the whole piece collapses (repeated root at a critical point)
        if fhi == 0.0:
            return hi
        if flo == 0.0:
            if lo == -bound:
                continue
            return lo
        if flo * fhi > 0.0:
            continue
        while hi - lo > ROOT_WIDTH * max(1.0, abs(hi)):
            mid = 0.5 * (lo + hi)
            fmid = cubic.evaluate(mid)
            if fmid == 0.0:
                return mid
            if (fmid > 0.0) == (fhi > 0.0):
                hi, fhi = mid, fmid
            else:
                lo, flo = mid, fmid
        return 0.5 * (lo + hi)
    raise ArithmeticError("cubic with no bracketable real root")  # unreachable


def f_identity_lhs(alpha: float, m: int) -> float:
    """-8(m-3)^3 * p(x0) at x0 = (m-3)/2*alpha + 2(1-alpha)(m-1)/(m-3)."""
    if m == 3:
        raise ValueError("the f identity evaluation point divides by m - 3")
    x0 = (m - 3) * alpha / 2.0 + 2.0 * (1.0 - alpha) * (m - 1) / (m - 3)
    return -8.0 * (m - 3) ** 3 * sk_cubic(m, alpha).evaluate(x0)


def g_identity_lhs(alpha: float, m: int) -> float:
    """4 * p(x1) at x1 = 2*alpha + (1-alpha)(m-2)/2."""
    x1 = 2.0 * alpha + (1.0 - alpha) * (m - 2) / 2.0
    return 4.0 * sk_cubic(m, alpha).evaluate(x1)


def identity_check_f(alpha: float, m: int) -> float:
    """Relative error |lhs - f(alpha, m)| / max(1, |f(alpha, m)|)."""
    rhs = eval_f(alpha, m)
    return abs(f_identity_lhs(alpha, m) - rhs) / max(1.0, abs(rhs))


def identity_check_g(alpha: float, m: int) -> float:
    """Relative error |lhs - g(alpha, m)| / max(1, |g(alpha, m)|)."""
    rhs = eval_g(alpha, m)
    return abs(g_identity_lhs(alpha, m) - rhs) / max(1.0, abs(rhs))


@dataclass(frozen=True)
class SignCertificate:
    polynomial: str  # "f" | "g"
    m_values: tuple[int, ...]
    alphas: tuple[str, ...]
    min_abs_value: float
    violations: tuple[tuple[int, str, float], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "polynomial": self.polynomial,
            "m_values": list(self.m_values),
            "alphas": list(self.alphas),
            "min_abs_value": self.min_abs_value,
            "violations": [list(v) for v in self.violations],
            "passed": self.passed,
        }


def sign_grid(
    polynomial: str,
    m_values: Sequence[int],
    alphas: Sequence[str | float],
) -> SignCertificate:
    """Evaluate f (must be > 0) or g (must be < 0) on a grid.

    The grid must sit inside the claimed region m >= 9, alpha in [1/2, 1).
    Alphas are echoed as the decimal strings they were given as.
    """
    if polynomial not in ("f", "g"):
        raise ValueError(f"unknown sign polynomial {polynomial!r}")
    evaluate = eval_f if polynomial == "f" else eval_g
    want_positive = polynomial == "f"
    alpha_strs = tuple(str(a) for a in alphas)
    m_tuple = tuple(int(m) for m in m_values)
    for m in m_tuple:
        if m < 9:
            raise ValueError(f"sign grid needs m >= 9, got {m}")
    for s in alpha_strs:
        a = float(s)
        if not 0.5 <= a < 1.0:
            raise ValueError(f"sign grid needs alpha in [1/2, 1), got {s}")
    violations = []
    min_abs = float("inf")
    for m in m_tuple:
        for s in alpha_strs:
            value = evaluate(float(s), m)
            if abs(value) < min_abs:
                min_abs = abs(value)
            if (value > 0.0) != want_positive or value == 0.0:
                violations.append((m, s, value))
    return SignCertificate(polynomial, m_tuple, alpha_strs, min_abs, tuple(violations))


def odd_range(start: int, stop: int) -> list[int]:
    """Odd integers in [start, stop], for grid construction."""
    first = start if start % 2 == 1 else start + 1
    return list(range(first, stop + 1, 2))


def alpha_grid(start: str = "0.50", stop: str = "0.99", step: str = "0.01") -> list[str]:
    """Decimal-string alpha grid; strings keep report output reproducible."""
    from decimal import Decimal

    lo, hi, delta = Decimal(start), Decimal(stop), Decimal(step)
    out = []
    value = lo
    while value <= hi:
        out.append(str(value))
        value += delta
    return out
