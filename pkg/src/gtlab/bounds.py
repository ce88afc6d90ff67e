"""Upper bounds on the number of minimum total dominating sets.

With ``n`` the order, ``g`` the total domination number and ``c`` the count:

* ``b1``: ``c <= ((n - g/2) / (g/2)) ** (g/2)`` (conjectured for trees),
* ``b2``: ``c <= (8 * sqrt(e)) ** g * b1``,
* ``b3``: ``c <= (1 + sqrt(2)) ** (n - g)``, tight only for unions of K2,
* ``b4``: ``c <= beta ** n`` with ``beta ** 5 = beta ** 3 + 2 * beta + 1``.

Every verdict is exact. ``b1`` and ``b3`` are compared after squaring, in
integers and in Z[sqrt 2]. ``b2`` and ``b4`` have irrational bases, so they
are compared against rational brackets that provably enclose the bound and
are tightened until the comparison is decided.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

MARGIN = 1e-9
_DIGITS = 30
_MAX_REFINE = 12


class Verdict(str, Enum):
    HOLDS = "holds"
    EQUALITY = "equality"
    VIOLATED = "violated"

    @property
    def ok(self) -> bool:
        return self is not Verdict.VIOLATED


def _cmp(lhs, rhs) -> Verdict:
    if lhs < rhs:
        return Verdict.HOLDS
    if lhs == rhs:
        return Verdict.EQUALITY
    return Verdict.VIOLATED


def _check_args(n: int, gamma_t: int) -> None:
    if gamma_t < 2:
        raise ValueError(f"γ_t must be at least 2, got {gamma_t}")
    if gamma_t > n:
        raise ValueError(f"γ_t = {gamma_t} exceeds the order n = {n}")


def _context() -> decimal.Context:
    return decimal.Context(prec=_DIGITS + 10)


def _render(x: Decimal) -> str:
    with decimal.localcontext(_context()):
        return format(+x, f".{_DIGITS}g") if x else "0"


def frac_decimal(q: Fraction) -> Decimal:
    with decimal.localcontext(_context()):
        return Decimal(q.numerator) / Decimal(q.denominator)


# ---- b1 --------------------------------------------------------------------


def b1_squared(n: int, gamma_t: int) -> Fraction:
    _check_args(n, gamma_t)
    return Fraction(2 * n - gamma_t, gamma_t) ** gamma_t


def b1_conjecture(n: int, gamma_t: int, count: int) -> Verdict:
    _check_args(n, gamma_t)
    return _cmp(count * count * gamma_t**gamma_t, (2 * n - gamma_t) ** gamma_t)


def b1_exact_repr(n: int, gamma_t: int) -> str:
    _check_args(n, gamma_t)
    if gamma_t % 2 == 0:
        return str(Fraction(2 * n - gamma_t, gamma_t) ** (gamma_t // 2))
    return f"sqrt({b1_squared(n, gamma_t)})"


def b1_decimal(n: int, gamma_t: int) -> Decimal:
    with decimal.localcontext(_context()):
        return frac_decimal(b1_squared(n, gamma_t)).sqrt()


# ---- b2 --------------------------------------------------------------------


@lru_cache(maxsize=None)
def e_bracket(terms: int) -> tuple[Fraction, Fraction]:
    """Rationals ``lo < e < hi`` from the first ``terms + 1`` factorial series terms."""
    lo = sum(Fraction(1, factorial(k)) for k in range(terms + 1))
    return lo, lo + Fraction(1, factorial(terms) * terms)


@dataclass(frozen=True)
class Bracket:
    """``lo <= value**2 <= hi`` for an irrational bound; ``radius`` is relative."""

    lo: Fraction
    hi: Fraction

    @property
    def radius(self) -> float:
        # relative half-width of the bound itself, not of its square
        return float(self.hi / self.lo - 1) / 2

    def decide(self, count: int) -> Verdict | None:
        c2 = count * count
        if c2 < self.lo:
            return Verdict.HOLDS
        if c2 > self.hi:
            return Verdict.VIOLATED
        return None


def b2_bracket(n: int, gamma_t: int, refine: int = 0) -> Bracket:
    _check_args(n, gamma_t)
    return _b2_bracket(n, gamma_t, refine)


@lru_cache(maxsize=4096)
def _b2_bracket(n: int, gamma_t: int, refine: int) -> Bracket:
    # square of the bound: (64 e (2n - g) / g) ** g
    ratio = Fraction(64 * (2 * n - gamma_t), gamma_t)
    terms = 24 << refine
    while True:
        e_lo, e_hi = e_bracket(terms)
        br = Bracket((ratio * e_lo) ** gamma_t, (ratio * e_hi) ** gamma_t)
        if br.radius < MARGIN:
            return br
        terms *= 2


def b2_thm(n: int, gamma_t: int, count: int) -> Verdict:
    for refine in range(_MAX_REFINE):
        verdict = b2_bracket(n, gamma_t, refine).decide(count)
        if verdict is not None:
            return verdict
    raise ArithmeticError(f"b2 undecided for n={n}, γ_t={gamma_t}, count={count}")


def b2_decimal(n: int, gamma_t: int) -> Decimal:
    with decimal.localcontext(_context()):
        return Decimal(8) ** gamma_t * (Decimal(gamma_t) / 2).exp() * b1_decimal(n, gamma_t)


# ---- b3 --------------------------------------------------------------------


def zsqrt2_pow(a: int, b: int, m: int) -> tuple[int, int]:
    """``(a + b sqrt 2) ** m`` as a pair ``(x, y)`` meaning ``x + y sqrt 2``."""
    rx, ry = 1, 0
    while m:
        if m & 1:
            rx, ry = rx * a + 2 * ry * b, rx * b + ry * a
        a, b = a * a + 2 * b * b, 2 * a * b
        m >>= 1
    return rx, ry


def compare_zsqrt2(c: int, x: int, y: int) -> Verdict:
    """Compare the integer ``c`` against ``x + y sqrt 2`` with ``y >= 0``."""
    d = c - x
    if y == 0:
        return _cmp(d, 0)
    if d <= 0:
        return Verdict.HOLDS
    # y > 0 and d > 0: d == y sqrt 2 is impossible
    return Verdict.HOLDS if d * d < 2 * y * y else Verdict.VIOLATED


def b3_thm(n: int, gamma_t: int, count: int) -> Verdict:
    _check_args(n, gamma_t)
    # (1 + sqrt 2) ** (2 (n - g)) == (3 + 2 sqrt 2) ** (n - g)
    x, y = _b3_square(n - gamma_t)
    return compare_zsqrt2(count * count, x, y)


@lru_cache(maxsize=4096)
def _b3_square(m: int) -> tuple[int, int]:
    return zsqrt2_pow(3, 2, m)


def b3_decimal(n: int, gamma_t: int) -> Decimal:
    with decimal.localcontext(_context()):
        return (1 + Decimal(2).sqrt()) ** (n - gamma_t)


# ---- b4 --------------------------------------------------------------------


def beta_poly(x):
    return x**5 - x**3 - 2 * x - 1


@dataclass(frozen=True)
class Beta:
    """Positive root of ``x**5 - x**3 - 2x - 1``, enclosed in ``[lo, hi]``.

    Descartes' rule of signs gives exactly one positive root, and the
    polynomial is -3 at 1 and 19 at 2.
    """

    lo: Fraction
    hi: Fraction
    value: Decimal = field(compare=False)
    residual: float = field(compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@lru_cache(maxsize=None)
def solve_beta(bits: int = 64) -> Beta:
    lo, hi = Fraction(1), Fraction(2)
    for _ in range(bits):
        mid = (lo + hi) / 2
        if beta_poly(mid) <= 0:
            lo = mid
        else:
            hi = mid
    mid = (lo + hi) / 2
    return Beta(lo, hi, frac_decimal(mid), abs(float(beta_poly(mid))))


def b4_bracket(n: int, refine: int = 0) -> Bracket:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return _b4_bracket(n, refine)


@lru_cache(maxsize=4096)
def _b4_bracket(n: int, refine: int) -> Bracket:
    bits = 64 << refine
    while True:
        beta = solve_beta(bits)
        # squared to share Bracket with b2
        br = Bracket(beta.lo ** (2 * n), beta.hi ** (2 * n))
        if br.radius < MARGIN:
            return br
        bits *= 2


def b4_thm(n: int, count: int) -> Verdict:
    for refine in range(_MAX_REFINE):
        verdict = b4_bracket(n, refine).decide(count)
        if verdict is not None:
            return verdict
    raise ArithmeticError(f"b4 undecided for n={n}, count={count}")


def b4_decimal(n: int) -> Decimal:
    with decimal.localcontext(_context()):
        return solve_beta(128).value ** n


# ---- sanity check of the bound arithmetic ----------------------------------


def b1_vs_exp(n: int, gamma_t: int) -> bool:
    """Whether b1 <= e ** (n - g), which 1 + x <= e ** x guarantees."""
    _check_args(n, gamma_t)
    if n == gamma_t:
        return b1_squared(n, gamma_t) == 1
    lhs = b1_squared(n, gamma_t)
    terms = 24
    for _ in range(_MAX_REFINE):
        e_lo, e_hi = e_bracket(terms)
        if lhs <= e_lo ** (2 * (n - gamma_t)):
            return True
        if lhs > e_hi ** (2 * (n - gamma_t)):
            return False
        terms *= 2
    return False


# ---- reports ---------------------------------------------------------------

BOUND_IDS = ("b1", "b2", "b3", "b4")


@dataclass(frozen=True)
class BoundCheck:
    value_repr: str
    verdict: Verdict
    radius: float | None = None


@dataclass(frozen=True)
class BoundReport:
    n: int
    gamma_t: int
    count: int
    bounds: dict[str, BoundCheck]

    @property
    def theorems_hold(self) -> bool:
        return all(self.bounds[b].verdict.ok for b in ("b2", "b3", "b4"))

    @property
    def conjecture_holds(self) -> bool:
        return self.bounds["b1"].verdict.ok

    def to_json(self) -> dict:
        bounds = {}
        for key in BOUND_IDS:
            check = self.bounds[key]
            entry = {"value_repr": check.value_repr, "verdict": check.verdict.value}
            if check.radius is not None:
                entry["radius"] = check.radius
            bounds[key] = entry
        return {"n": self.n, "gamma_t": self.gamma_t, "count": str(self.count), "bounds": bounds}

    @classmethod
    def from_json(cls, data: dict) -> BoundReport:
        bounds = {
            key: BoundCheck(v["value_repr"], Verdict(v["verdict"]), v.get("radius"))
            for key, v in data["bounds"].items()
        }
        return cls(int(data["n"]), int(data["gamma_t"]), int(data["count"]), bounds)


def evaluate_bounds(n: int, gamma_t: int, count: int) -> BoundReport:
    _check_args(n, gamma_t)
    return BoundReport(
        n,
        gamma_t,
        count,
        {
            "b1": BoundCheck(_render(b1_decimal(n, gamma_t)), b1_conjecture(n, gamma_t, count)),
            "b2": BoundCheck(
                _render(b2_decimal(n, gamma_t)),
                b2_thm(n, gamma_t, count),
                b2_bracket(n, gamma_t).radius,
            ),
            "b3": BoundCheck(_render(b3_decimal(n, gamma_t)), b3_thm(n, gamma_t, count)),
            "b4": BoundCheck(_render(b4_decimal(n)), b4_thm(n, count), b4_bracket(n).radius),
        },
    )
