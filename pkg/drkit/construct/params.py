import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParameterLimitError

DEFAULT_MAX_FAMILY_SIZE = 2 ** 20
DEFAULT_MAX_DIMENSION = 10 ** 6

OVERRIDABLE = ("t", "a", "p", "q", "n")


@dataclass(frozen=True)
class CisParams:
    """
    Integers (t, a, p, q, n) of the recursive construction together with the
    rationals (alpha, C, lambda) they were derived for.
    """

    t: int
    a: int
    p: int
    q: int
    n: int
    alpha: Fraction
    C: Fraction
    lam: Fraction

    @property
    def family_size(self):
        return self.q ** self.t

    def block_diameter(self, i):
        """
        Exact diameter 2p / a^(t-i) of a level-i block (an integer because
        a^t divides p)
        """
        return 2 * self.p // self.a ** (self.t - i)

    def core_size(self, i):
        """Size of the shared core S of a level-i frame, p - p / a^(t-i)"""
        return self.p - self.p // self.a ** (self.t - i)

    def violations(self):
        failed = []
        if not Fraction(1, self.t) < self.alpha:
            failed.append(f"condition 1 fails: 1/t = 1/{self.t} is not below alpha = {_fmt(self.alpha)}")
        if not self.a > self.C:
            failed.append(f"condition 1 fails: a = {self.a} is not above C = {_fmt(self.C)}")
        if self.p % self.a ** self.t != 0:
            failed.append(f"condition 2 fails: p = {self.p} is not a multiple of a^t = {self.a ** self.t}")
        if not power_at_least(self.q, self.t, self.lam, self.p):
            failed.append(
                f"condition 3 fails: q^t = {self.q}^{self.t} is below lambda^p = ({_fmt(self.lam)})^{self.p}"
            )
        bound = required_dimension(self.t, self.a, self.p, self.q)
        if self.n < bound:
            failed.append(f"condition 4 fails: n = {self.n} is below {math.ceil(bound)}")
        return failed

    def validate(self):
        for name in OVERRIDABLE:
            if getattr(self, name) < 1:
                raise ValueError(f"Parameter {name} must be a positive integer, got {getattr(self, name)}")
        failed = self.violations()
        if len(failed) > 0:
            raise ValueError("Invalid parameters: " + "; ".join(failed))
        return self

    def __str__(self):
        return (
            f"t={self.t} a={self.a} p={self.p} q={self.q} n={self.n} "
            f"alpha={_fmt(self.alpha)} C={_fmt(self.C)} lambda={_fmt(self.lam)}"
        )


def _fmt(x):
    return f"{x.numerator}/{x.denominator}"


def power_at_least(q, t, lam, p):
    """
    Exact test of q^t >= lam^p for a rational lam = u/d, by cross-multiplying
    q^t * d^p >= u^p.
    """
    lam = Fraction(lam)
    return q ** t * lam.denominator ** p >= lam.numerator ** p


def required_dimension(t, a, p, q):
    """
    Exact lower bound p + p(q-1) * sum_{j=1..t} (q/a)^(t-j) on the dimension
    """
    ratio = Fraction(q, a)
    return p + p * (q - 1) * sum(ratio ** (t - j) for j in range(1, t + 1))


def capacity(i, params: CisParams) -> Fraction:
    """
    Minimum |T| that admits a level-i block between (S, T) when
    |S| = p - p/a^(t-i):
    f_i = p + p(q-1) * sum_{j=1..i} q^(i-j) / a^(t-j)
    """
    if not 0 <= i <= params.t:
        raise ValueError(f"Level {i} out of range [0, {params.t}]")
    p, q, a, t = params.p, params.q, params.a, params.t
    return p + p * (q - 1) * sum(Fraction(q ** (i - j), a ** (t - j)) for j in range(1, i + 1))


def _check_inputs(alpha, C, lam):
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {_fmt(alpha)}")
    if C < 1:
        raise ValueError(f"C must be at least 1, got {_fmt(C)}")
    if lam <= 1:
        raise ValueError(f"lambda must exceed 1, got {_fmt(lam)}")


def _smallest_q(t, lam, p, max_family_size):
    # float logarithms only bound the search, the answer is decided exactly
    log2_target = p * math.log2(lam)
    if log2_target > math.log2(max_family_size) + 1:
        raise ParameterLimitError(
            f"Parameters exceed configured limits: q^t >= lambda^p ~ 2^{log2_target:.1f} "
            f"exceeds max_family_size={max_family_size}",
            family_size_log2=log2_target,
        )
    q = max(2, int(2 ** (log2_target / t)) - 1)
    while not power_at_least(q, t, lam, p):
        q += 1
    while q > 2 and power_at_least(q - 1, t, lam, p):
        q -= 1
    return q


def solve_params(
    alpha,
    C,
    lam,
    max_family_size=DEFAULT_MAX_FAMILY_SIZE,
    max_dimension=DEFAULT_MAX_DIMENSION,
    overrides=None,
) -> CisParams:
    """
    Pick the minimal tuple (t, a, p, q, n) for (alpha, C, lambda) under the rule
    t = floor(1/alpha) + 1, a = floor(C) + 1, p = a^t, q = least integer with
    q^t >= lambda^p, n = ceil(p + p(q-1) sum_j (q/a)^(t-j)).
    Any of t, a, p, q, n may be fixed through `overrides`; the quantities
    derived after it follow from the overridden value.
    :return: validated CisParams
    """
    alpha, C, lam = Fraction(alpha), Fraction(C), Fraction(lam)
    _check_inputs(alpha, C, lam)
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    unknown = set(overrides) - set(OVERRIDABLE)
    assert len(unknown) == 0, f"Only {OVERRIDABLE} can be overridden, got {sorted(unknown)}"
    for name, value in overrides.items():
        if value < 1:
            raise ValueError(f"Parameter {name} must be a positive integer, got {value}")

    t = overrides.get("t", math.floor(1 / alpha) + 1)
    a = overrides.get("a", math.floor(C) + 1)
    if "p" in overrides:
        p = overrides["p"]
    else:
        if t * math.log2(a) > math.log2(max_dimension) + 1:
            raise ParameterLimitError(
                f"Parameters exceed configured limits: n >= p = {a}^{t} exceeds max_dimension={max_dimension}",
                p=f"{a}^{t}",
            )
        p = a ** t
    if p > max_dimension:
        raise ParameterLimitError(
            f"Parameters exceed configured limits: n >= p = {p} exceeds max_dimension={max_dimension}",
            p=p,
        )

    if "q" in overrides:
        q = overrides["q"]
        if t * math.log2(max(q, 1)) > math.log2(max_family_size) + 1:
            raise ParameterLimitError(
                f"Parameters exceed configured limits: q^t = {q}^{t} exceeds max_family_size={max_family_size}",
                q=q,
                t=t,
            )
    else:
        q = _smallest_q(t, lam, p, max_family_size)
    if q ** t > max_family_size:
        raise ParameterLimitError(
            f"Parameters exceed configured limits: q^t = {q ** t} exceeds max_family_size={max_family_size}",
            family_size=q ** t,
        )

    n = overrides.get("n", math.ceil(required_dimension(t, a, p, q)))
    if n > max_dimension:
        raise ParameterLimitError(
            f"Parameters exceed configured limits: n = {n} exceeds max_dimension={max_dimension}",
            n=n,
        )

    params = CisParams(t=t, a=a, p=p, q=q, n=n, alpha=alpha, C=C, lam=lam).validate()
    logging.info(f"Resolved construction parameters {params}")
    return params


def make_params(alpha, C, lam, t, a, p, q, n) -> CisParams:
    """
    Explicit tuple, checked against conditions 1-4
    """
    alpha, C, lam = Fraction(alpha), Fraction(C), Fraction(lam)
    _check_inputs(alpha, C, lam)
    return CisParams(t=t, a=a, p=p, q=q, n=n, alpha=alpha, C=C, lam=lam).validate()
