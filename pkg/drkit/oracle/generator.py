from scipy.special import comb

from ..core import SupportVector, VectorFamily

_MASK = (1 << 64) - 1


class SplitMix64:
    """
    64-bit splitmix generator. The stream is fully determined by the seed,
    so families generated from it are identical across platforms.
    """

    def __init__(self, seed):
        self.state = seed & _MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound):
        """Integer in [0, bound) by reduction modulo `bound`"""
        return self.next() % bound


def random_support(rng: SplitMix64, n, p):
    """
    p distinct coordinates of [1, n] by a partial Fisher-Yates shuffle,
    returned sorted
    """
    pool = list(range(1, n + 1))
    for i in range(p):
        j = i + rng.below(n - i)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:p]))


def random_family(n, p, m, seed) -> VectorFamily:
    """
    m distinct uniformly drawn weight-p supports in dimension n; a drawn
    support equal to an earlier one is rejected and drawn again.
    """
    if not 0 <= p <= n:
        raise ValueError(f"Weight p = {p} must lie in [0, n = {n}]")
    total = comb(n, p, exact=True)
    if not 0 <= m <= total:
        raise ValueError(f"Cannot draw m = {m} distinct vectors from C({n}, {p}) = {total}")
    rng = SplitMix64(seed)
    seen, vectors = set(), []
    while len(vectors) < m:
        support = random_support(rng, n, p)
        if support in seen:
            continue
        seen.add(support)
        vectors.append(SupportVector(n, support))
    return VectorFamily(n, p, vectors)
