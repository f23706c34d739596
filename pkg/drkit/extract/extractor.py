import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..core import SupportIndex, VectorFamily, distance

BALL = "ball"
NET = "net"
MAX_PRINTED_BITS = 1024


def threshold(C, i) -> Fraction:
    """C^i / 2^(i-1), exact"""
    return Fraction(C) ** i / Fraction(2) ** (i - 1)


def _thresholds(C, t):
    """threshold(C, i) for i = 1 .. t-1, each from the previous one"""
    out, theta = [], Fraction(C)
    for _ in range(1, t):
        out.append(theta)
        theta = theta * C / 2
    return tuple(out)


def _magnitude(x) -> str:
    """Printable form of a rational whose digits may exceed the int -> str cap"""
    x = Fraction(x)
    if max(x.numerator.bit_length(), x.denominator.bit_length()) <= MAX_PRINTED_BITS:
        return str(x)
    return f"~2^{x.numerator.bit_length() - x.denominator.bit_length()}"


def compute_depth(p, C):
    """
    Smallest positive t with (C/2)^t >= p/2, decided by exact rational powers.
    :return: (t, alpha = 1/t)
    """
    C = Fraction(C)
    if C <= 2:
        raise ValueError(f"Subset extraction requires C > 2, got {C.numerator}/{C.denominator}")
    if p < 1:
        raise ValueError(f"Weight must be positive, got {p}")
    half, target = C / 2, Fraction(p, 2)
    t, power = 1, half
    while power < target:
        t += 1
        power *= half
    return t, Fraction(1, t)


@dataclass(frozen=True)
class ExtractParams:
    C: Fraction
    t: int
    alpha: Fraction
    thresholds: Tuple[Fraction, ...]

    @classmethod
    def for_weight(cls, p, C):
        t, alpha = compute_depth(p, C)
        C = Fraction(C)
        return cls(C=C, t=t, alpha=alpha, thresholds=_thresholds(C, t))

    def threshold(self, i):
        return self.thresholds[i - 1]


@dataclass(frozen=True)
class ExtractionCertificate:
    """
    Which branch produced the subset: a ball around a net point of K_i
    (`kind` = "ball", with its level, center and radius) or the last net K_t
    (`kind` = "net", with the separation threshold of K_t, None when t = 1).
    Indices refer to positions in the input family.
    """

    kind: str
    level: int
    C: Fraction
    t: int
    chain_sizes: Tuple[int, ...]
    subset: Tuple[int, ...]
    center: Optional[int] = None
    threshold: Optional[Fraction] = None


def _separated_positions(K, positions, theta):
    need = math.ceil(theta)
    index = SupportIndex(K.weight)
    chosen = []
    for j in positions:
        v = K[j]
        if len(index) == 0 or index.distances(v).min() >= need:
            index.add(v)
            chosen.append(j)
    return chosen


def _ball_positions(K, positions, center, radius):
    limit = math.floor(radius)
    z = K[center]
    return [j for j in positions if distance(K[j], z) <= limit]


def greedy_separated(K: VectorFamily, theta) -> VectorFamily:
    """
    Scan K in stored order and admit a vector iff its distance to every
    admitted vector is at least `theta`. The result is a maximal separated
    subset.
    """
    theta = Fraction(theta)
    if theta <= 0:
        raise ValueError("Separation threshold must be positive")
    return K.subset(_separated_positions(K, range(len(K)), theta))


def ball(K: VectorFamily, center: int, radius) -> VectorFamily:
    """All x in K with distance(x, K[center]) <= radius, in stored order"""
    if not 0 <= center < len(K):
        raise ValueError(f"Center index {center} out of range for a family of {len(K)} vectors")
    return K.subset(_ball_positions(K, range(len(K)), center, Fraction(radius)))


def build_chain(K: VectorFamily, C):
    """
    The full chain K_1 = K, K_(i+1) = greedy_separated(K_i, C^i/2^(i-1)),
    as lists of input positions, without stopping at a qualifying ball.
    """
    params = ExtractParams.for_weight(K.weight, C)
    chain = [list(range(len(K)))]
    for i in range(1, params.t):
        chain.append(_separated_positions(K, chain[-1], params.threshold(i)))
    return chain


def chain_coverage(K: VectorFamily, outer, inner, theta):
    """
    True iff every member of `outer` lies within `theta` of some member of
    `inner`
    """
    limit = math.floor(Fraction(theta))
    index = SupportIndex(K.weight)
    for j in inner:
        index.add(K[j])
    if len(index) == 0:
        return len(outer) == 0
    return all(index.distances(K[j]).min() <= limit for j in outer)


def extract_subset(K: VectorFamily, C):
    """
    Find K' of K with dr(K') <= C and |K'|^t >= |K|, where t is the depth for
    (p, C). Builds separated subsets K_2, K_3, ... of K with growing
    thresholds; the first ball around a point of K_(i+1) holding enough
    vectors of K_i is returned, otherwise the last net K_t.
    :param K: VectorFamily of weight p
    :param C: rational above 2
    :return: (VectorFamily, ExtractionCertificate)
    """
    if len(K) == 0:
        raise ValueError("Cannot extract from an empty family")
    params = ExtractParams.for_weight(K.weight, C)
    t, m = params.t, len(K)
    chain = [list(range(m))]

    for i in range(1, t):
        theta = params.threshold(i)
        net = _separated_positions(K, chain[-1], theta)
        logging.debug(
            "Level %d: |K_%d| = %d, |K_%d| = %d, threshold %s", i, i, len(chain[-1]), i + 1, len(net), _magnitude(theta)
        )
        previous = chain[-1]
        chain.append(net)
        for x in net:
            members = _ball_positions(K, previous, x, theta)
            if len(members) ** t >= m:
                cert = ExtractionCertificate(
                    kind=BALL,
                    level=i,
                    C=params.C,
                    t=t,
                    chain_sizes=tuple(len(c) for c in chain),
                    subset=tuple(members),
                    center=x,
                    threshold=theta,
                )
                logging.info(f"Ball of {len(members)} vectors around {x} at level {i}")
                return K.subset(members), cert

    cert = ExtractionCertificate(
        kind=NET,
        level=t,
        C=params.C,
        t=t,
        chain_sizes=tuple(len(c) for c in chain),
        subset=tuple(chain[-1]),
        threshold=params.threshold(t - 1) if t > 1 else None,
    )
    logging.info(f"Net K_{t} of {len(chain[-1])} vectors")
    return K.subset(chain[-1]), cert
